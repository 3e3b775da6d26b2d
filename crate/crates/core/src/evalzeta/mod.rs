//! Arbitrary-precision evaluation of the identities, the inner `ζ(σ) − 1`
//! values, special values, and an independent Euler–Maclaurin reference.

mod bigcomplex;
mod identity_eval;
mod series;
mod special;

pub use bigcomplex::{bits_for_digits, float_from_rational, format_float, log10_abs, pi, BigComplex};
pub use identity_eval::{eval_identity, pochhammer, EvalReport};
pub use series::{zeta_em_reference, zeta_m1, zeta_m1_detailed, InnerCutoff, ZetaM1Detail, ZETA_M1_MIN_RE};
pub use special::{
    closed_part_at, integer_point_series, partial_sum_zeta_m1, sum_identity_cutoff, sum_zeta_m1,
    trivial_zero_report, zeta_prime_at_zero, IntegerPointSeries, TrivialZero,
};

use crate::derive::IdentitySpec;
use crate::error::{Result, ZetaError};
use crate::exactmath::to_f64;

pub const MIN_DIGITS: u32 = 15;
pub const DEFAULT_DIGITS: u32 = 40;

pub(crate) fn check_digits(digits: u32) -> Result<()> {
    if digits < MIN_DIGITS {
        return Err(ZetaError::Domain(format!("digits must be ≥ {MIN_DIGITS}, got {digits}")));
    }
    Ok(())
}

/// Rejects `s` within `10^{−digits/2}` of the pole.
pub(crate) fn check_pole(s: &BigComplex, digits: u32) -> Result<()> {
    let distance = s.add_i64(-1).abs();
    let guard = 10f64.powf(-f64::from(digits) / 2.0);
    if distance.to_f64() <= guard {
        return Err(ZetaError::Pole {
            distance: distance.to_f64(),
            guard,
        });
    }
    Ok(())
}

/// Whether `spec` can be evaluated at a point with real part `re`.
pub fn admits(spec: &IdentitySpec, re: f64) -> bool {
    re > to_f64(spec.evaluation_bound()) && re >= ZETA_M1_MIN_RE - f64::from(spec.k0)
}
