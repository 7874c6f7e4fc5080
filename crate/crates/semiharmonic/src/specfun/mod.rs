//! Complex-argument special functions: gamma, digamma, reciprocal gamma and
//! the confluent hypergeometric (Kummer) function with series and large-|z|
//! evaluation paths.
//!
//! All functions here are pure and thread-safe.

mod gamma;
mod kummer;

pub use gamma::{digamma, gamma, gamma_ratio_half_up, lgamma, rgamma};
pub(crate) use gamma::{cos_pi, digamma_real, lgamma_real, sin_pi};
pub use kummer::{
    kummer_asymptotic, kummer_eval, kummer_series, EvalMethod, EvalResult, KummerParams, Sheet,
    ASYMPTOTIC_TERMS, SWITCH_RADIUS,
};
