use num_traits::Zero;
use serde::Serialize;

use super::bigcomplex::{float_from_rational, BigComplex};
use super::series::{
    default_m, default_n, plan_em, plan_em_fixed_n, third_term_share, working_digits, zeta_m1_bound_log10,
    EmPlan, InnerCutoff, ShiftedZetaM1, ZETA_M1_MIN_RE,
};
use super::{check_digits, check_pole};
use crate::derive::IdentitySpec;
use crate::error::{Result, ZetaError};
use crate::exactmath::{factorial, to_f64, Polynomial, Rational};

/// Earliest truncation point after `k0`.
const MIN_EXTRA_TERMS: u32 = 8;
/// Largest admissible ratio of consecutive series terms at the truncation point.
const MAX_TAIL_RATIO: f64 = 0.6;
const HARD_K_LIMIT: u32 = 20_000;

/// Result of evaluating an identity at one point.
#[derive(Clone, Debug)]
pub struct EvalReport {
    pub value: BigComplex,
    pub p_used: u32,
    /// Last series index included.
    pub terms_used: u32,
    /// Estimated bound on `|value − ζ(s)|`.
    pub error_estimate: f64,
    pub inner_sum_cutoffs: Vec<InnerCutoff>,
    pub requested_digits: u32,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    p: u32,
    s_re: String,
    s_im: String,
    value_re: String,
    value_im: String,
    terms_used: u32,
    error_estimate: f64,
    digits: u32,
    inner_sum_cutoffs: &'a [InnerCutoff],
}

impl EvalReport {
    pub fn to_json(&self, s: &BigComplex) -> serde_json::Value {
        let sig = self.requested_digits as usize;
        serde_json::to_value(ReportJson {
            p: self.p_used,
            s_re: super::bigcomplex::format_float(s.re(), sig),
            s_im: super::bigcomplex::format_float(s.im(), sig),
            value_re: super::bigcomplex::format_float(self.value.re(), sig),
            value_im: super::bigcomplex::format_float(self.value.im(), sig),
            terms_used: self.terms_used,
            error_estimate: self.error_estimate,
            digits: self.requested_digits,
            inner_sum_cutoffs: &self.inner_sum_cutoffs,
        })
        .expect("report serialization is infallible")
    }
}

/// `s(s+1)…(s+k−1)`, with `k = 0` giving 1.
pub fn pochhammer(s: &BigComplex, k: u32) -> BigComplex {
    (0..k).fold(BigComplex::one(s.digits()).with_digits(s.digits()), |acc, i| {
        &acc * &s.add_i64(i64::from(i))
    })
}

fn log10_abs_rational(r: &Rational) -> f64 {
    to_f64(r).abs().log10()
}

fn log10_abs_c(re: f64, im: f64) -> f64 {
    re.hypot(im).log10()
}

/// `log10 |Poch(s, k)/(k+1)!|`.
fn log10_coefficient_weight(re: f64, im: f64, k: u32) -> f64 {
    let mut acc = -log10_factorial(k + 1);
    for i in 0..k {
        acc += log10_abs_c(re + f64::from(i), im);
    }
    acc
}

fn log10_factorial(n: u32) -> f64 {
    (2..=n).map(|i| f64::from(i).log10()).sum()
}

/// Truncation and magnitude plan for the outer series.
#[derive(Clone, Debug)]
pub(crate) struct OuterPlan {
    pub k0: u32,
    pub k_end: u32,
    /// `log10 |r_k · Poch(s,k)/(k+1)!|` for `k0..=k_end`.
    pub weight_logs: Vec<f64>,
    pub tail_log10: f64,
    pub peak_log10: f64,
}

/// Chooses the truncation point: the smallest `K ≥ k0 + 8` with
/// `|r̂_K| · |Poch(s,K)|/(K+1)! · 2^{1−Re s−K} · 4 < 10^{−(digits+5)}` and the
/// ratio of consecutive terms at `K` below 0.6.
///
/// `weight_log(k)` gives `log10 |Poch(s,k)/(k+1)!|` style weights; the identity
/// evaluator and the `ζ'(0)` series only differ there.
pub(crate) fn plan_outer(
    spec: &IdentitySpec,
    re: f64,
    digits: u32,
    weight_log: impl Fn(u32) -> f64,
    weight_ratio: impl Fn(u32) -> f64,
) -> Result<OuterPlan> {
    let target = -f64::from(digits) - 5.0;
    let k0 = spec.k0;
    let mut weight_logs = Vec::new();
    let mut peak = f64::NEG_INFINITY;
    let mut k = k0;
    loop {
        let r_k = coefficient_or_capacity(spec, k, re, digits)?;
        let r_next = coefficient_or_capacity(spec, k + 1, re, digits)?;
        let lr = log10_abs_rational(&r_k);
        let lc = weight_log(k);
        let w = lr + lc;
        weight_logs.push(w);
        peak = peak.max(w + zeta_m1_bound_log10(re + f64::from(k)));

        if lc == f64::NEG_INFINITY {
            // Every later weight carries the same vanishing factor.
            return Ok(OuterPlan { k0, k_end: k, weight_logs, tail_log10: f64::NEG_INFINITY, peak_log10: peak });
        }
        if k >= k0 + MIN_EXTRA_TERMS {
            let lr_next = log10_abs_rational(&r_next);
            let r_hat = lr.max(lr_next);
            let bound = r_hat + lc + (1.0 - re - f64::from(k)) * std::f64::consts::LOG10_2 + 4f64.log10();
            let x = re + f64::from(k);
            let share = third_term_share(x);
            let ratio = if share < 1.0 && !r_k.is_zero() {
                10f64.powf((lr_next - lr).clamp(0.0, 300.0))
                    * weight_ratio(k).max(1.0)
                    * 0.5
                    * (1.0 + share)
                    / (1.0 - share)
            } else {
                f64::INFINITY
            };
            if bound <= target && ratio <= MAX_TAIL_RATIO {
                return Ok(OuterPlan { k0, k_end: k, weight_logs, tail_log10: bound, peak_log10: peak });
            }
        }
        k += 1;
        if k > HARD_K_LIMIT {
            return Err(ZetaError::Internal(format!(
                "series truncation did not settle below k = {HARD_K_LIMIT}"
            )));
        }
    }
}

fn coefficient_or_capacity(spec: &IdentitySpec, k: u32, re: f64, digits: u32) -> Result<Rational> {
    spec.coefficient(k).ok_or_else(|| ZetaError::Capacity {
        required_k: estimate_required_k(spec, re, digits),
        stored_k: spec.k_max(),
    })
}

/// Rough truncation point for an identity whose table ran out, assuming
/// `r_k` keeps growing like `k^p`.
fn estimate_required_k(spec: &IdentitySpec, re: f64, digits: u32) -> u32 {
    let last = spec.k_max().max(1);
    let lr_last = spec
        .stored_coefficient(last)
        .map_or(0.0, |r| log10_abs_rational(&r).max(-300.0));
    let target = -f64::from(digits) - 5.0;
    let mut k = last + 1;
    while k < HARD_K_LIMIT {
        let growth = f64::from(spec.p) * (f64::from(k) / f64::from(last)).log10();
        let bound = lr_last + growth + (1.0 - re - f64::from(k)) * std::f64::consts::LOG10_2 + 1.0;
        if bound <= target {
            return k;
        }
        k += 1;
    }
    k
}

/// Inner `ζ(s + k) − 1` schedule: one shared direct-sum length and a
/// correction order per `k`.
pub(crate) struct InnerPlan {
    n: u32,
    per_k: Vec<Option<EmPlan>>,
    pub peak_log10: f64,
}

impl InnerPlan {
    pub fn new(re: f64, im: f64, k0: u32, weight_logs: &[f64], digits: u32) -> Self {
        let target = -f64::from(digits) - 5.0;
        let needed = |w: f64| target - w.max(-1e9);
        let mut n = default_n(digits);
        for (i, &w) in weight_logs.iter().enumerate() {
            if w.is_finite() {
                let x = re + f64::from(k0 + i as u32);
                n = n.max(plan_em(x, im, 2, needed(w), default_n(digits), default_m(digits)).n);
            }
        }
        loop {
            let per_k: Option<Vec<Option<EmPlan>>> = weight_logs
                .iter()
                .enumerate()
                .map(|(i, &w)| {
                    if !w.is_finite() {
                        return Some(None);
                    }
                    let x = re + f64::from(k0 + i as u32);
                    plan_em_fixed_n(x, im, 2, needed(w), n, default_m(digits)).map(Some)
                })
                .collect();
            if let Some(per_k) = per_k {
                let peak = per_k
                    .iter()
                    .zip(weight_logs)
                    .filter_map(|(p, w)| p.map(|p| p.peak_log10 + w))
                    .fold(f64::NEG_INFINITY, f64::max);
                return InnerPlan { n, per_k, peak_log10: peak };
            }
            n = n + n / 2 + 1;
        }
    }

    fn m_max(&self) -> u32 {
        self.per_k.iter().flatten().map(|p| p.m).max().unwrap_or(1)
    }

    /// `Σ_k weights[k] · (ζ(s + k) − 1)` together with the cutoffs used and
    /// the summed remainder bounds.
    pub fn run(&self, s: &BigComplex, k0: u32, weights: &[BigComplex], weight_logs: &[f64]) -> (BigComplex, Vec<InnerCutoff>, f64) {
        let mut table = ShiftedZetaM1::new(s, k0, self.n, self.m_max());
        let mut acc = BigComplex::zero(s.digits());
        let mut cutoffs = Vec::with_capacity(weights.len());
        let mut remainder = 0.0;
        for (i, (weight, plan)) in weights.iter().zip(&self.per_k).enumerate() {
            if let Some(plan) = plan {
                let z = table.value(plan.m);
                acc = &acc + &(weight * &z);
                cutoffs.push(InnerCutoff { k: k0 + i as u32, n: self.n, m: plan.m });
                remainder += 10f64.powf(plan.remainder_log10 + weight_logs[i]);
            }
            table.advance();
        }
        (acc, cutoffs, remainder)
    }
}

fn check_validity(spec: &IdentitySpec, s: &BigComplex) -> Result<()> {
    let bound = spec.evaluation_bound();
    let bound_f = float_from_rational(bound, s.prec());
    if *s.re() <= bound_f {
        return Err(ZetaError::Domain(format!(
            "Re s = {} is outside the p={} identity's half-plane Re s > {}",
            s.re().to_f64(),
            spec.p,
            bound
        )));
    }
    let floor = ZETA_M1_MIN_RE - f64::from(spec.k0);
    if *s.re() < floor {
        return Err(ZetaError::Domain(format!(
            "Re s = {} is below {floor} = 1.5 − k0 for the p={} identity (first series argument Re(s+k0) < 1.5); use a deeper identity",
            s.re().to_f64(),
            spec.p
        )));
    }
    Ok(())
}

/// Horner evaluation of a rational polynomial at a complex point.
pub(crate) fn eval_poly(poly: &Polynomial, s: &BigComplex) -> BigComplex {
    let prec = s.prec();
    poly.coeffs().iter().rev().fold(BigComplex::zero(s.digits()), |acc, c| {
        (&acc * s).add_real(&float_from_rational(c, prec))
    })
}

fn poly_peak_log10(poly: &Polynomial, re: f64, im: f64) -> f64 {
    let r = re.hypot(im).max(1e-300).log10();
    poly.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| log10_abs_rational(c) + i as f64 * r)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Evaluates `c/(s−1) + Q_p(s) + Σ_{k=k0}^{K} r_k · Poch(s,k)/(k+1)! · (ζ(s+k) − 1)`.
///
/// `s` must satisfy `Re s > bound` (the extended bound when present),
/// `Re(s + k0) ≥ 1.5`, and `|s − 1| > 10^{−digits/2}`.
pub fn eval_identity(spec: &IdentitySpec, s: &BigComplex, digits: u32) -> Result<EvalReport> {
    check_digits(digits)?;
    check_validity(spec, s)?;
    check_pole(s, digits)?;
    let (re, im) = s.to_f64_pair();

    let outer = plan_outer(
        spec,
        re,
        digits,
        |k| log10_coefficient_weight(re, im, k),
        |k| (re + f64::from(k)).hypot(im) / f64::from(k + 2),
    )?;
    let inner = InnerPlan::new(re, im, outer.k0, &outer.weight_logs, digits);
    let pole_log = -(re - 1.0).hypot(im).log10() + log10_abs_rational(&spec.pole_coefficient);
    let peak = outer
        .peak_log10
        .max(inner.peak_log10)
        .max(poly_peak_log10(&spec.q_poly, re, im))
        .max(pole_log);
    let work = working_digits(digits, peak);
    let s_w = s.with_digits(work);

    let one = BigComplex::one(work);
    let pole_term = (&one / &s_w.add_i64(-1)).scale_rational(&spec.pole_coefficient);
    let closed = &pole_term + &eval_poly(&spec.q_poly, &s_w);

    // r_k · Poch(s,k)/(k+1)!, built incrementally.
    let inv_factorial = Rational::new(1.into(), factorial(u64::from(outer.k0) + 1));
    let mut c = pochhammer(&s_w, outer.k0).scale_rational(&inv_factorial);
    let mut weights = Vec::with_capacity(outer.weight_logs.len());
    for k in outer.k0..=outer.k_end {
        let r = spec.coefficient(k).expect("planned coefficients exist");
        weights.push(c.scale_rational(&r));
        c = (&c * &s_w.add_i64(i64::from(k))).div_u32(k + 2);
    }
    let (series, cutoffs, inner_err) = inner.run(&s_w, outer.k0, &weights, &outer.weight_logs);
    let value = &closed + &series;

    let ops = f64::from(outer.k_end - outer.k0 + 1) * f64::from(inner.n + inner.m_max() + 4) + 16.0;
    let rounding = 10f64.powf(peak.max(0.0) - f64::from(work) + 1.0) * ops;
    Ok(EvalReport {
        value,
        p_used: spec.p,
        terms_used: outer.k_end,
        error_estimate: 10f64.powf(outer.tail_log10) + inner_err + rounding,
        inner_sum_cutoffs: cutoffs,
        requested_digits: digits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        let p = pochhammer(&BigComplex::from_f64(3.0, 0.0, 20), 2);
        assert_eq!(p.to_f64_pair(), (12.0, 0.0));
        let p = pochhammer(&BigComplex::zero(20), 3);
        assert!(p.is_zero());
        let p = pochhammer(&BigComplex::from_f64(0.5, 0.0, 20), 3);
        assert_eq!(p.to_f64_pair(), (1.875, 0.0));
        let p = pochhammer(&BigComplex::from_f64(0.5, 1.0, 20), 0);
        assert_eq!(p.to_f64_pair(), (1.0, 0.0));
    }

    #[test]
    fn weight_logs_match_direct_products() {
        let direct = (0..5).map(|i| (2.5 + f64::from(i)).hypot(1.0)).product::<f64>() / 720.0;
        assert!((log10_coefficient_weight(2.5, 1.0, 5) - direct.log10()).abs() < 1e-12);
    }
}
