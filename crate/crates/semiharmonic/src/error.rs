//! Error type shared by all modules of the crate.

use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gamma or digamma evaluated within 1e-12 of a non-positive integer.
    #[error("gamma function pole at z = {z}")]
    GammaPole { z: Complex64 },

    /// A power series exceeded its iteration budget.
    #[error("series did not converge within {terms} terms")]
    SeriesNoConvergence { terms: usize },

    /// The wave function vanishes at the requested point, so its logarithmic
    /// derivative is undefined there.
    #[error("wave function node at x = {x}")]
    WaveFunctionNode { x: f64 },

    /// The Jost function vanishes (a spectral point), so the reflection
    /// amplitude or phase shift is undefined.
    #[error("Jost function zero at k = {k}; reflection amplitude has a pole")]
    JostZero { k: Complex64 },

    /// Newton iteration failed to converge.
    #[error("root iteration did not converge after {iterations} steps (last k = {k})")]
    NoConvergence { k: Complex64, iterations: usize },

    /// A converged root matches neither the bound-state nor the resonance
    /// pattern in the complex k-plane.
    #[error("root at k = {k} is neither a bound state nor a resonance")]
    Misclassified { k: Complex64 },

    /// Fewer roots were found than requested; the ones located are attached.
    #[error("found {found} roots where {wanted} were requested")]
    InsufficientRoots { wanted: usize, found: usize },

    /// The sample grid does not straddle a matching point.
    #[error("grid too coarse: no samples straddle a matching point")]
    GridTooCoarse,

    /// The seed wave function has nodes on the requested grid, so the
    /// superpotential is singular there.
    #[error("wave function nodes on grid at x = {xs:?}")]
    NodeOnGrid { xs: Vec<f64> },

    /// The operation is not defined for point (delta) potentials.
    #[error("operation is not supported for delta kinds")]
    DeltaKindUnsupported,

    /// Invalid constructor argument or selector.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Phase unwrapping hit a step at the folding boundary; the energy grid
    /// is too coarse near a narrow resonance.
    #[error("phase unwrap ambiguous near E = {e}")]
    UnwrapAmbiguity { e: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
