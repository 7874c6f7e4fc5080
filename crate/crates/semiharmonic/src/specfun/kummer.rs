//! Confluent hypergeometric (Kummer) function 1F1(a, c; z) for complex a, z.
//!
//! Two evaluation paths: the defining power series for moderate |z| and the
//! large-|z| expansion
//!
//!   1F1(a,c;z) ~ G(c)/G(c-a) e^{+-a pi i} z^{-a} [1 + P-(a)]
//!              + G(c)/G(a)   e^z  z^{a-c} [1 + P+(c-a)]
//!
//! with the sign of e^{+-a pi i} fixed by the declared sheet. Any extra
//! sheet factor needed when the argument arises as a square (arg z folded
//! past the cut) is applied by the caller, not here.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::gamma::{gamma, rgamma};

/// Parameters of 1F1(a, c; z). The second parameter stays real here (the
/// physics uses half-integers); it must not be zero or a negative integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerParams {
    pub alpha_param: Complex64,
    pub c_param: f64,
    pub z: Complex64,
}

impl KummerParams {
    pub fn new(alpha_param: Complex64, c_param: f64, z: Complex64) -> Result<Self> {
        if c_param <= 0.0 && (c_param - c_param.round()).abs() < 1e-12 {
            return Err(Error::InvalidArgument(format!(
                "Kummer c parameter {c_param} is zero or a negative integer"
            )));
        }
        Ok(KummerParams { alpha_param, c_param, z })
    }
}

/// Which evaluation path produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMethod {
    Series,
    Asymptotic,
}

/// A function value with a truncation-error heuristic (not a rigorous bound).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub method_used: EvalMethod,
    pub est_error: f64,
}

/// Sign choice in the e^{+-a pi i} factor of the large-|z| expansion:
/// `Upper` for -pi/2 < arg z < 3pi/2, `Lower` for -3pi/2 < arg z < pi/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sheet {
    Upper,
    Lower,
}

/// |z| above which `kummer_eval` switches from the series to the expansion.
pub const SWITCH_RADIUS: f64 = 20.0;

/// Default truncation order of each P+- series.
pub const ASYMPTOTIC_TERMS: usize = 8;

const MAX_SERIES_TERMS: usize = 10_000;

/// Direct power series sum_n (a)_n z^n / ((c)_n n!).
///
/// Stops once the last term is below `tol` relative to the partial sum;
/// `est_error` is that last relative term. Errors if 10 000 terms are not
/// enough, which signals the caller to use the asymptotic path.
pub fn kummer_series(p: KummerParams, tol: f64) -> Result<EvalResult> {
    debug_assert!(tol > 0.0);
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    if p.z.norm() == 0.0 {
        return Ok(EvalResult { value: sum, method_used: EvalMethod::Series, est_error: 0.0 });
    }
    for n in 0..MAX_SERIES_TERMS {
        let nf = n as f64;
        term *= (p.alpha_param + nf) * p.z / ((p.c_param + nf) * (nf + 1.0));
        sum += term;
        let rel = term.norm() / sum.norm().max(f64::MIN_POSITIVE);
        if rel < tol {
            return Ok(EvalResult { value: sum, method_used: EvalMethod::Series, est_error: rel });
        }
        if term.norm() == 0.0 {
            // polynomial case: a is a non-positive integer
            return Ok(EvalResult { value: sum, method_used: EvalMethod::Series, est_error: 0.0 });
        }
    }
    Err(Error::SeriesNoConvergence { terms: MAX_SERIES_TERMS })
}

/// One truncated P series: sum_{n>=1} s^n (g)_n (1-c+g)_n / (n! z^n).
/// Stops early if terms start to grow (divergent tail) and reports the first
/// omitted term magnitude.
fn p_series(g: Complex64, c: f64, z: Complex64, sign: f64, n_terms: usize) -> (Complex64, f64) {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut last_mag = f64::INFINITY;
    for n in 1..=n_terms {
        let nf = n as f64;
        // (g)_n (1-c+g)_n / (n! z^n) built one factor per step
        term *= sign * (g + (nf - 1.0)) * (g + (nf - c)) / (nf * z);
        let mag = term.norm();
        if mag > last_mag {
            // divergent tail reached; best truncation is what we have
            return (sum, mag);
        }
        sum += term;
        last_mag = mag;
    }
    // estimate of the first omitted term
    let nf = (n_terms + 1) as f64;
    let next = term * sign * (g + (nf - 1.0)) * (g + (nf - c)) / (nf * z);
    (sum, next.norm())
}

/// Large-|z| expansion truncated at `n_terms` in each P series, on the
/// declared sheet. `est_error` is the magnitude of the first omitted term of
/// either series, relative to the returned value.
pub fn kummer_asymptotic(p: KummerParams, sheet: Sheet, n_terms: usize) -> Result<EvalResult> {
    debug_assert!(n_terms >= 1);
    let a = p.alpha_param;
    let c = Complex64::new(p.c_param, 0.0);
    let gc = gamma(c)?;
    let sign = match sheet {
        Sheet::Upper => 1.0,
        Sheet::Lower => -1.0,
    };
    // recessive part: G(c)/G(c-a) e^{+-a pi i} z^{-a} [1 + P-(a)]
    let pref_rec = gc * rgamma(c - a) * (Complex64::new(0.0, sign * PI) * a).exp() * (-a * p.z.ln()).exp();
    let (pm, pm_next) = p_series(a, p.c_param, p.z, -1.0, n_terms);
    // dominant part: G(c)/G(a) e^z z^{a-c} [1 + P+(c-a)]
    let pref_dom = gc * rgamma(a) * p.z.exp() * ((a - c) * p.z.ln()).exp();
    let (pp, pp_next) = p_series(c - a, p.c_param, p.z, 1.0, n_terms);

    let value = pref_rec * (1.0 + pm) + pref_dom * (1.0 + pp);
    let est_error =
        (pref_rec.norm() * pm_next + pref_dom.norm() * pp_next) / value.norm().max(f64::MIN_POSITIVE);
    Ok(EvalResult { value, method_used: EvalMethod::Asymptotic, est_error })
}

/// Dispatch: series for |z| <= SWITCH_RADIUS, expansion beyond, with the
/// sheet chosen from the sign of Im z (principal argument).
pub fn kummer_eval(p: KummerParams) -> Result<EvalResult> {
    if p.z.norm() <= SWITCH_RADIUS {
        kummer_series(p, 1e-14)
    } else {
        let sheet = if p.z.im >= 0.0 { Sheet::Upper } else { Sheet::Lower };
        kummer_asymptotic(p, sheet, ASYMPTOTIC_TERMS)
    }
}
