use num_traits::Zero;
use serde::Serialize;

use super::bigcomplex::BigComplex;
use super::identity_eval::{eval_identity, plan_outer, InnerPlan};
use super::series::working_digits;
use super::check_digits;
use crate::derive::IdentitySpec;
use crate::error::{Result, ZetaError};
use crate::exactmath::{factorial, int, to_f64, Rational};

/// `ζ'(0) = −c + Q_p'(0) + Σ_{k≥k0} r_k/(k(k+1)) · (ζ(k) − 1)`.
///
/// Differentiating `Poch(s,k)` at `s = 0` leaves `(k−1)!`, and the
/// `ζ(s+k)` derivative term drops out because `Poch(0,k) = 0`.
pub fn zeta_prime_at_zero(spec: &IdentitySpec, digits: u32) -> Result<BigComplex> {
    check_digits(digits)?;
    if *spec.evaluation_bound() >= Rational::zero() {
        return Err(ZetaError::Domain(format!(
            "s = 0 lies outside the p={} identity's half-plane Re s > {}",
            spec.p,
            spec.evaluation_bound()
        )));
    }
    let k_weight = |k: u32| -(f64::from(k) * f64::from(k + 1)).log10();
    let plan = plan_outer(spec, 0.0, digits, k_weight, |k| f64::from(k) / f64::from(k + 2))?;
    let inner = InnerPlan::new(0.0, 0.0, plan.k0, &plan.weight_logs, digits);
    let work = working_digits(digits, plan.peak_log10.max(inner.peak_log10));

    let constant = spec.q_poly.coeff(1) - &spec.pole_coefficient;
    let weights: Vec<BigComplex> = (plan.k0..=plan.k_end)
        .map(|k| {
            let r = spec.coefficient(k).expect("planned coefficients exist");
            let kk = i64::from(k);
            BigComplex::from_rational(&(r / int(kk * (kk + 1))), work)
        })
        .collect();
    let (series, _, _) = inner.run(&BigComplex::zero(work), plan.k0, &weights, &plan.weight_logs);
    Ok(&BigComplex::from_rational(&constant, work) + &series)
}

/// Smallest `K` with `2 · 2^{−K} < 10^{−digits}`.
pub fn sum_identity_cutoff(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).floor() as u32 + 2
}

/// `Σ_{k=2}^{K} (ζ(k) − 1)` with the cutoff from [`sum_identity_cutoff`];
/// the infinite sum equals 1.
pub fn sum_zeta_m1(digits: u32) -> Result<BigComplex> {
    partial_sum_zeta_m1(sum_identity_cutoff(digits), digits)
}

/// `Σ_{k=2}^{k_last} (ζ(k) − 1)`; zero when `k_last < 2`.
pub fn partial_sum_zeta_m1(k_last: u32, digits: u32) -> Result<BigComplex> {
    check_digits(digits)?;
    if k_last < 2 {
        return Ok(BigComplex::zero(digits + 10));
    }
    let weight_logs = vec![0.0; (k_last - 1) as usize];
    let inner = InnerPlan::new(0.0, 0.0, 2, &weight_logs, digits);
    let work = working_digits(digits, inner.peak_log10);
    let weights = vec![BigComplex::one(work); weight_logs.len()];
    let (sum, _, _) = inner.run(&BigComplex::zero(work), 2, &weights, &weight_logs);
    Ok(sum)
}

/// An identity evaluated at a positive integer `n`, where
/// `Poch(n,k)/(k+1)!` is rational and the closed part is an exact constant.
#[derive(Clone, Debug)]
pub struct IntegerPointSeries {
    pub n: u32,
    /// `c/(n−1) + Q_p(n)`.
    pub constant: Rational,
    pub value: BigComplex,
    pub terms_used: u32,
}

/// `ζ(n) = c/(n−1) + Q_p(n) + Σ_k r_k · Poch(n,k)/(k+1)! · (ζ(n+k) − 1)` with
/// every series weight exact; at `n = 2` the weight is exactly `r_k`.
pub fn integer_point_series(spec: &IdentitySpec, n: u32, digits: u32) -> Result<IntegerPointSeries> {
    check_digits(digits)?;
    if n < 2 {
        return Err(ZetaError::Domain(format!("integer point must be ≥ 2, got {n}")));
    }
    let nn = i64::from(n);
    let constant = &spec.pole_coefficient / int(nn - 1) + spec.q_poly.eval(&int(nn));
    // Poch(n, k)/(k+1)! = (n+k−1)! / ((n−1)! (k+1)!)
    let weight = |k: u32| {
        Rational::new(
            factorial(u64::from(n + k) - 1),
            factorial(u64::from(n) - 1) * factorial(u64::from(k) + 1),
        )
    };
    let x = f64::from(n);
    let plan = plan_outer(
        spec,
        x,
        digits,
        |k| to_f64(&weight(k)).log10(),
        |k| (x + f64::from(k)) / f64::from(k + 2),
    )?;
    let inner = InnerPlan::new(x, 0.0, plan.k0, &plan.weight_logs, digits);
    let work = working_digits(digits, plan.peak_log10.max(inner.peak_log10).max(to_f64(&constant).abs().log10()));
    let weights: Vec<BigComplex> = (plan.k0..=plan.k_end)
        .map(|k| {
            let r = spec.coefficient(k).expect("planned coefficients exist");
            BigComplex::from_rational(&(r * weight(k)), work)
        })
        .collect();
    let (series, _, _) = inner.run(&BigComplex::from_i64(nn, work), plan.k0, &weights, &plan.weight_logs);
    Ok(IntegerPointSeries {
        n,
        value: &BigComplex::from_rational(&constant, work) + &series,
        constant,
        terms_used: plan.k_end,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TrivialZero {
    pub s: i64,
    pub magnitude: f64,
    pub error_estimate: f64,
}

/// Evaluates the identity at every even negative integer it can reach.
pub fn trivial_zero_report(spec: &IdentitySpec, digits: u32) -> Result<Vec<TrivialZero>> {
    check_digits(digits)?;
    let bound = to_f64(spec.evaluation_bound());
    let floor = super::series::ZETA_M1_MIN_RE - f64::from(spec.k0);
    let mut out = Vec::new();
    let mut s = -2i64;
    while (s as f64) > bound && (s as f64) >= floor {
        let report = eval_identity(spec, &BigComplex::from_i64(s, digits), digits)?;
        out.push(TrivialZero {
            s,
            magnitude: report.value.abs_f64(),
            error_estimate: report.error_estimate,
        });
        s -= 2;
    }
    Ok(out)
}

/// `c/(s−1) + Q_p(s)` at an integer point, exactly.
pub fn closed_part_at(spec: &IdentitySpec, s: i64) -> Option<Rational> {
    if s == 1 {
        return None;
    }
    Some(&spec.pole_coefficient / int(s - 1) + spec.q_poly.eval(&int(s)))
}
