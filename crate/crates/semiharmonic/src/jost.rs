//! Matching across the three regions and the Jost function F(k, a).
//!
//! Region I (x <= -a) carries the regular harmonic-background solution phi,
//! region II (|x| < a) the rectangular part with q = sqrt(V0 + k^2) (well)
//! or sqrt(k^2 - V0) (barrier), region III (x >= a) free waves e^{+-ikx}.
//! Matching at -a and a gives
//!
//!   F(k,a) = -(e^{ika}/k) [ (ik + b) cos 2qa + (q^2 - ik b) sin(2qa)/q ],
//!
//! with b = beta_phi(-a). F is even in q, so the branch of the square root
//! drops out. Zeros of F on the positive imaginary k-axis are bound states;
//! zeros in the fourth quadrant are resonances.
//!
//! In the a -> 0 unit-area limit the condition F = 0 collapses to a ratio of
//! gamma functions; `jost_delta_eval` evaluates that limiting form directly,
//! normalized so that Im F / Re F on the real axis reproduces the closed-form
//! phase-shift ratio used by the dwell-time module.

use num_complex::Complex64;

use crate::background::{phi_log_derivative, PhiContext};
use crate::error::{Error, Result};
use crate::specfun::{gamma, gamma_ratio_half_up};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Geometry and sign of the rectangular part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PotentialKind {
    Well,
    Barrier,
    DeltaWell,
    DeltaBarrier,
}

impl PotentialKind {
    pub fn is_delta(self) -> bool {
        matches!(self, PotentialKind::DeltaWell | PotentialKind::DeltaBarrier)
    }

    pub fn is_barrier(self) -> bool {
        matches!(self, PotentialKind::Barrier | PotentialKind::DeltaBarrier)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PotentialKind::Well => "well",
            PotentialKind::Barrier => "barrier",
            PotentialKind::DeltaWell => "delta_well",
            PotentialKind::DeltaBarrier => "delta_barrier",
        }
    }
}

/// A rectangular well or barrier of half-width `a` and magnitude `v0` on the
/// semi-harmonic background, or its point (delta) limit of unit strength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec {
    kind: PotentialKind,
    a: f64,
    v0: f64,
}

impl PotentialSpec {
    pub fn well(a: f64, v0: f64) -> Result<Self> {
        Self::finite(PotentialKind::Well, a, v0)
    }

    pub fn barrier(a: f64, v0: f64) -> Result<Self> {
        Self::finite(PotentialKind::Barrier, a, v0)
    }

    fn finite(kind: PotentialKind, a: f64, v0: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "half-width a = {a} must be positive and finite for {} kinds",
                kind.as_str()
            )));
        }
        if !(v0 > 0.0) || !v0.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "magnitude v0 = {v0} must be positive and finite"
            )));
        }
        Ok(PotentialSpec { kind, a, v0 })
    }

    /// Unit-strength point limit of the well.
    pub fn delta_well() -> Self {
        PotentialSpec { kind: PotentialKind::DeltaWell, a: 0.0, v0: 1.0 }
    }

    /// Unit-strength point limit of the barrier.
    pub fn delta_barrier() -> Self {
        PotentialSpec { kind: PotentialKind::DeltaBarrier, a: 0.0, v0: 1.0 }
    }

    /// Unit-area member of the family: 2 a V0 = 1, collapsing to the delta
    /// kind at a = 0.
    pub fn unit_area(kind: PotentialKind, a: f64) -> Result<Self> {
        match kind {
            PotentialKind::Well | PotentialKind::DeltaWell => {
                if a == 0.0 {
                    Ok(Self::delta_well())
                } else {
                    Self::well(a, 1.0 / (2.0 * a))
                }
            }
            PotentialKind::Barrier | PotentialKind::DeltaBarrier => {
                if a == 0.0 {
                    Ok(Self::delta_barrier())
                } else {
                    Self::barrier(a, 1.0 / (2.0 * a))
                }
            }
        }
    }

    pub fn kind(&self) -> PotentialKind {
        self.kind
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn v0(&self) -> f64 {
        self.v0
    }

    pub fn is_delta(&self) -> bool {
        self.kind.is_delta()
    }

    /// V(x): x^2 on the left of the rectangular part, the rectangular value
    /// inside, zero on the right. For delta kinds the point spike at x = 0 is
    /// distributional and not represented here.
    pub fn potential_at(&self, x: f64) -> f64 {
        if self.is_delta() {
            return if x < 0.0 { x * x } else { 0.0 };
        }
        if x <= -self.a {
            x * x
        } else if x < self.a {
            if self.kind.is_barrier() {
                self.v0
            } else {
                -self.v0
            }
        } else {
            0.0
        }
    }
}

/// F(k, a) together with the matching intermediates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JostValue {
    pub f: Complex64,
    pub c2: Complex64,
    pub d2: Complex64,
    pub beta_phi_at_minus_a: Complex64,
    pub q: Complex64,
}

/// Region-II wavenumber: q = sqrt(V0 + k^2) for wells, q = sqrt(k^2 - V0)
/// for barriers (principal branch, so real k^2 < V0 gives i sqrt|k^2 - V0|).
pub fn wavenumber_q(spec: &PotentialSpec, k: Complex64) -> Complex64 {
    if spec.kind.is_barrier() {
        (k * k - spec.v0).sqrt()
    } else {
        (k * k + spec.v0).sqrt()
    }
}

/// sin(2 q a)/q, stable through q = 0.
fn sin2qa_over_q(q: Complex64, a: f64) -> Complex64 {
    let u = 2.0 * q * a;
    if u.norm() < 1e-4 {
        let u2 = u * u;
        2.0 * a * (1.0 - u2 / 6.0 + u2 * u2 / 120.0)
    } else {
        u.sin() / q
    }
}

/// The Jost function for finite kinds, with the matching coefficients.
pub fn jost_eval(spec: &PotentialSpec, k: Complex64) -> Result<JostValue> {
    debug_assert!(!spec.is_delta(), "delta kinds use jost_delta_eval");
    let a = spec.a;
    let ctx = PhiContext::new(k);
    let b = phi_log_derivative(&ctx, -a)?;
    let q = wavenumber_q(spec, k);
    let (sin_qa, cos_qa) = {
        let qa = q * a;
        (qa.sin(), qa.cos())
    };
    let c2 = (-q * sin_qa - b * cos_qa) / q;
    let d2 = (q * cos_qa - b * sin_qa) / q;
    let ik = I * k;
    let cos2 = (2.0 * q * a).cos();
    let sc = sin2qa_over_q(q, a);
    let f = -((ik * a).exp() / k) * ((ik + b) * cos2 + (q * q - ik * b) * sc);
    Ok(JostValue { f, c2, d2, beta_phi_at_minus_a: b, q })
}

/// The a -> 0 limit of the Jost function for the unit-strength point kinds:
///
///   well:    F = 2 G((3-k^2)/4) - (1 + ik) G((1-k^2)/4)
///   barrier: F = 2 G((3-k^2)/4) + (1 - ik) G((1-k^2)/4)
///
/// For real k both give Im F = -k G((1-k^2)/4), so Im F / Re F is exactly the
/// closed-form ratio that drives the delta-limit dwell time.
pub fn jost_delta_eval(kind: PotentialKind, k: Complex64) -> Result<JostValue> {
    debug_assert!(kind.is_delta());
    let k2 = k * k;
    let g1 = gamma((1.0 - k2) / 4.0)?;
    let g3 = gamma((3.0 - k2) / 4.0)?;
    let f = if kind.is_barrier() {
        2.0 * g3 + (1.0 - I * k) * g1
    } else {
        2.0 * g3 - (1.0 + I * k) * g1
    };
    let beta0 = -2.0 * gamma_ratio_half_up((1.0 - k2) / 4.0)?;
    Ok(JostValue {
        f,
        c2: Complex64::new(0.0, 0.0),
        d2: Complex64::new(1.0, 0.0),
        beta_phi_at_minus_a: beta0,
        q: Complex64::new(0.0, 0.0),
    })
}

/// Dispatch to the finite or delta evaluation according to the spec.
pub fn jost_function(spec: &PotentialSpec, k: Complex64) -> Result<JostValue> {
    if spec.is_delta() {
        jost_delta_eval(spec.kind, k)
    } else {
        jost_eval(spec, k)
    }
}

/// The conjugate-coefficient Jost value F*(k) = conj(F(conj k)), which is the
/// literal conjugate on the real axis and the meromorphic continuation off it.
pub fn jost_conjugate(spec: &PotentialSpec, k: Complex64) -> Result<Complex64> {
    Ok(jost_function(spec, k.conj())?.f.conj())
}

/// Residual of the root condition. Finite kinds:
///
///   b + ik - [(ik b - q^2)/q] tan 2qa = 0,    b = beta_phi(-a),
///
/// evaluated in the cos-multiplied form when |cos 2qa| < 1e-13 (the tan pole
/// is not a root). Delta kinds: the gamma-ratio form, identical to the value
/// of `jost_delta_eval`.
pub fn transcendental_residual(spec: &PotentialSpec, k: Complex64) -> Result<Complex64> {
    if spec.is_delta() {
        return Ok(jost_delta_eval(spec.kind, k)?.f);
    }
    let a = spec.a;
    let ctx = PhiContext::new(k);
    let b = phi_log_derivative(&ctx, -a)?;
    let q = wavenumber_q(spec, k);
    let ik = I * k;
    let cos2 = (2.0 * q * a).cos();
    if cos2.norm() < 1e-13 {
        // cleared form: residual * cos 2qa
        return Ok((b + ik) * cos2 - (ik * b - q * q) * sin2qa_over_q(q, a));
    }
    let tan2 = (2.0 * q * a).sin() / cos2;
    Ok(b + ik - ((ik * b - q * q) / q) * tan2)
}

/// Reflection amplitude s = F*/F; unimodular for real k, meromorphic with
/// poles at the Jost zeros for complex k.
pub fn reflection_amplitude(spec: &PotentialSpec, k: Complex64) -> Result<Complex64> {
    let f = jost_function(spec, k)?.f;
    if f.norm() < 1e-13 {
        return Err(Error::JostZero { k });
    }
    Ok(jost_conjugate(spec, k)? / f)
}

/// Phase shift delta(E) = -arctan(Im F / Re F) at k = sqrt(E), reduced to the
/// principal branch (-pi/2, pi/2]. Continuous unwrapping is the caller's job.
pub fn phase_shift(spec: &PotentialSpec, e: f64) -> Result<f64> {
    debug_assert!(e > 0.0);
    let k = Complex64::new(e.sqrt(), 0.0);
    let f = jost_function(spec, k)?.f;
    if f.norm() < 1e-13 {
        return Err(Error::JostZero { k });
    }
    let mut d = -(f.im / f.re).atan();
    if d <= -std::f64::consts::FRAC_PI_2 {
        d += std::f64::consts::PI;
    }
    Ok(d)
}

/// Reference residual for the free-particle background: a square well of
/// depth V0 between -a and a with decaying exponentials on both sides. The
/// zeros at k = i kappa are the bound states of both parities,
///
///   (q^2 - kappa^2) sin 2qa - 2 kappa q cos 2qa = 0,  q = sqrt(V0 - kappa^2).
///
/// At a = 0 the unit-strength delta well is used instead: kappa - 1/2.
pub fn free_particle_bound_residual(a: f64, v0: f64, k: Complex64) -> Complex64 {
    debug_assert!(k.im > 0.0);
    let kappa = -I * k;
    if a == 0.0 {
        return kappa - 0.5;
    }
    let q = (Complex64::new(v0, 0.0) - kappa * kappa).sqrt();
    let u = 2.0 * q * a;
    (q * q - kappa * kappa) * u.sin() - 2.0 * kappa * q * u.cos()
}

/// Scaled variant of the free-particle residual with the removable q = 0
/// factor divided out; used by the bound-state solver so that the edge of the
/// well is not reported as a root.
pub(crate) fn free_particle_bound_residual_scaled(a: f64, v0: f64, kappa: f64) -> f64 {
    if a == 0.0 {
        return kappa - 0.5;
    }
    let q2 = v0 - kappa * kappa;
    let q = Complex64::new(q2, 0.0).sqrt();
    let sc = sin2qa_over_q(q, a);
    ((q * q - kappa * kappa) * sc - 2.0 * kappa * (2.0 * q * a).cos()).re
}
