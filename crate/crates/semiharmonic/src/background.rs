//! The left-region regular solution phi(x) of the harmonic background.
//!
//! For x <= -a the potential is x^2 and the solution that vanishes as
//! x -> -infinity is
//!
//!   phi(x) = e^{-x^2/2} [ 1F1(al, 1/2; x^2)
//!            + 2x (G(al+1/2)/G(al)) 1F1(al+1/2, 3/2; x^2) ],   al = (1-k^2)/4,
//!
//! normalized so phi(0) = 1. The coefficient ratio is exactly the choice that
//! cancels the e^{+x^2/2} component of the large-|x| expansion; what survives
//! is the recessive branch
//!
//!   phi(x) ~ (G(al+1/2)/sqrt(pi)) e^{-x^2/2} |x|^{-2 al}
//!            [ 1 + sum_n (-1)^n (al)_n (al+1/2)_n / (n! x^{2n}) ].
//!
//! Evaluating the two Kummer series directly loses ~0.43 z digits to
//! cancellation (z = x^2), so past z = 20 phi switches to the recessive
//! form, where every growing term has cancelled analytically. The two paths
//! overlap near z = 20 with ~1e-7 agreement.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::{gamma, gamma_ratio_half_up, kummer_series, KummerParams};

/// z = x^2 above which phi uses the recessive expansion.
const RECESSIVE_SWITCH: f64 = 20.0;

/// Series tolerance for the Kummer evaluations inside phi.
const PHI_SERIES_TOL: f64 = 1e-15;

/// Cap on recessive-series terms (it is truncated at its smallest term).
const RECESSIVE_MAX_TERMS: usize = 48;

/// Wavenumber context for the left-region solution: alpha = (1 - k^2)/4 is
/// recomputed from k on construction and never stored independently.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiContext {
    k: Complex64,
    alpha: Complex64,
}

impl PhiContext {
    pub fn new(k: Complex64) -> Self {
        let alpha = (1.0 - k * k) / 4.0;
        PhiContext { k, alpha }
    }

    pub fn k(&self) -> Complex64 {
        self.k
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }
}

/// Diagnostic record of the far-field decay test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayCheck {
    pub x_far: f64,
    pub phi_abs: f64,
    /// |G(al+1/2)/sqrt(pi)| e^{-x^2/2} |x|^{-2 Re al}
    pub envelope: f64,
    pub passed: bool,
}

/// phi and its x-derivative in one pass (they share all series work).
fn phi_and_derivative(ctx: &PhiContext, x: f64) -> Result<(Complex64, Complex64)> {
    debug_assert!(x <= 0.0, "phi is only evaluated in the left region");
    let al = ctx.alpha;
    let z = Complex64::new(x * x, 0.0);
    if z.re <= RECESSIVE_SWITCH {
        let g = gamma_ratio_half_up(al)?;
        let m1 = kummer_series(KummerParams::new(al, 0.5, z)?, PHI_SERIES_TOL)?.value;
        let m2 = kummer_series(KummerParams::new(al + 0.5, 1.5, z)?, PHI_SERIES_TOL)?.value;
        let e = (-z / 2.0).exp();
        let phi = e * (m1 + 2.0 * x * g * m2);
        // dM/dz = (a/c) M(a+1, c+1; z), chain rule with z = x^2
        let d1 = 2.0 * al * kummer_series(KummerParams::new(al + 1.0, 1.5, z)?, PHI_SERIES_TOL)?.value;
        let d2 = (2.0 / 3.0)
            * (al + 0.5)
            * kummer_series(KummerParams::new(al + 1.5, 2.5, z)?, PHI_SERIES_TOL)?.value;
        let dphi = -x * phi + e * (2.0 * x * d1 + 2.0 * g * m2 + 4.0 * x * x * g * d2);
        Ok((phi, dphi))
    } else {
        // recessive branch: S(z) = 1 + sum (-1)^n (al)_n (al+1/2)_n/(n! z^n),
        // truncated at its smallest term
        let mut s = Complex64::new(1.0, 0.0);
        let mut ds = Complex64::new(0.0, 0.0); // S'(z)
        let mut term = Complex64::new(1.0, 0.0);
        let mut last = f64::INFINITY;
        for n in 1..=RECESSIVE_MAX_TERMS {
            let nf = n as f64;
            term *= -(al + (nf - 1.0)) * (al + (nf - 0.5)) / (nf * z);
            let mag = term.norm();
            if mag > last {
                break;
            }
            s += term;
            ds += term * (-nf) / z;
            last = mag;
        }
        let pref = gamma(al + 0.5)? / PI.sqrt();
        // |x|^{-2 al} with x < 0
        let pow = (-2.0 * al * (-x).ln()).exp();
        let phi = pref * (-z / 2.0).exp() * pow * s;
        // beta = -phi'/phi = x + 2 al/x - 2x S'/S
        let beta = Complex64::new(x, 0.0) + 2.0 * al / x - 2.0 * x * ds / s;
        Ok((phi, -beta * phi))
    }
}

/// The regular solution phi(x), for x <= 0; phi(0) = 1 exactly.
pub fn phi_eval(ctx: &PhiContext, x: f64) -> Result<Complex64> {
    if x == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    Ok(phi_and_derivative(ctx, x)?.0)
}

/// phi'(x), assembled from the analytic term-by-term derivative.
pub fn phi_derivative(ctx: &PhiContext, x: f64) -> Result<Complex64> {
    Ok(phi_and_derivative(ctx, x)?.1)
}

/// beta_phi(x) = -phi'(x)/phi(x).
///
/// Errors with a node error when phi vanishes at x relative to phi' (the
/// logarithmic derivative has a pole there); callers shift the evaluation
/// point.
pub fn phi_log_derivative(ctx: &PhiContext, x: f64) -> Result<Complex64> {
    let (phi, dphi) = phi_and_derivative(ctx, x)?;
    if phi.norm() < 1e-13 * dphi.norm() {
        return Err(Error::WaveFunctionNode { x });
    }
    Ok(-dphi / phi)
}

/// Verifies that the growing e^{x^2/2} component is absent at x_far: the
/// magnitude must stay inside a loose multiple of the recessive envelope.
pub fn phi_decay_check(ctx: &PhiContext, x_far: f64) -> Result<DecayCheck> {
    debug_assert!(x_far <= -5.0);
    let phi = phi_eval(ctx, x_far)?;
    let pref = gamma(ctx.alpha + 0.5)?.norm() / PI.sqrt();
    let envelope =
        pref * (-x_far * x_far / 2.0).exp() * (-x_far).powf(-2.0 * ctx.alpha.re);
    let passed = phi.norm() <= 1e3 * envelope;
    Ok(DecayCheck { x_far, phi_abs: phi.norm(), envelope, passed })
}
