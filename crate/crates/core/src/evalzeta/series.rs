//! Dirichlet sums with Euler–Maclaurin tails: `ζ(σ) − 1` for the identity
//! series, and the stand-alone `ζ(s)` reference.

use rug::Float;
use serde::Serialize;

use super::bigcomplex::{float_from_rational, BigComplex};
use super::check_digits;
use crate::error::{Result, ZetaError};
use crate::exactmath::{bernoulli, factorial, Rational};

#[cfg(test)]
const LN10: f64 = std::f64::consts::LN_10;
const LOG10_2: f64 = std::f64::consts::LOG10_2;

/// Smallest real part accepted by [`zeta_m1`].
pub const ZETA_M1_MIN_RE: f64 = 1.5;

/// Direct-sum length `N` and correction order `M` used for one inner value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InnerCutoff {
    pub k: u32,
    pub n: u32,
    pub m: u32,
}

/// Euler–Maclaurin parameters plus magnitude bookkeeping, all in `log10`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct EmPlan {
    pub n: u32,
    pub m: u32,
    /// Bound on the neglected Euler–Maclaurin remainder.
    pub remainder_log10: f64,
    /// Largest single term the evaluation will add.
    pub peak_log10: f64,
}

pub(crate) fn default_n(digits: u32) -> u32 {
    10 + digits
}

pub(crate) fn default_m(digits: u32) -> u32 {
    digits.div_ceil(4) + 5
}

fn abs_c(re: f64, im: f64) -> f64 {
    re.hypot(im)
}

/// `log10(|B_2j|/(2j)!)` via `|B_2j|/(2j)! = 2ζ(2j)/(2π)^{2j}`, bounded above
/// with `ζ(2j) ≤ π²/6`.
fn bernoulli_weight_log10(j: u32) -> f64 {
    (2.0 * std::f64::consts::PI.powi(2) / 6.0).log10()
        - 2.0 * f64::from(j) * (2.0 * std::f64::consts::PI).log10()
}

/// `log10 |T_j|` for `T_j = B_2j/(2j)! · Poch(σ, 2j−1) · N^{−σ−2j+1}`, given
/// `log10 |Poch(σ, 2j−1)|`.
fn em_term_log10(re: f64, n: u32, j: u32, poch_log10: f64) -> f64 {
    bernoulli_weight_log10(j) + poch_log10 - (re + 2.0 * f64::from(j) - 1.0) * f64::from(n).log10()
}

/// Plans an evaluation of `Σ_{n≥first} n^{−σ}` accurate to `10^target_log10`
/// (absolute) with a direct sum up to `N − 1` and an Euler–Maclaurin tail at
/// `N`. Starts from the given floors and grows `M`, then `N`, as the
/// remainder bound requires.
pub(crate) fn plan_em(
    re: f64,
    im: f64,
    first: u32,
    target_log10: f64,
    n_floor: u32,
    m_floor: u32,
) -> EmPlan {
    let mut n = n_floor.max(first + 2);
    loop {
        if let Some(plan) = plan_em_fixed_n(re, im, first, target_log10, n, m_floor) {
            return plan;
        }
        n = n + n / 2 + 1;
    }
}

/// As [`plan_em`] with `N` fixed; `None` when the asymptotic series stops
/// shrinking before reaching the target.
pub(crate) fn plan_em_fixed_n(
    re: f64,
    im: f64,
    first: u32,
    target_log10: f64,
    n: u32,
    m_floor: u32,
) -> Option<EmPlan> {
    let n_log = f64::from(n).log10();
    // Direct terms: n^{−Re σ} is largest at one end of [first, N].
    let direct_peak = (-re * f64::from(first).log10()).max(-re * n_log);
    let sigma_minus_one = abs_c(re - 1.0, im).max(f64::MIN_POSITIVE);
    let integral_log = (1.0 - re) * n_log - sigma_minus_one.log10();
    let mut peak = direct_peak.max(integral_log);

    // The remainder bound below needs Re σ + 2M + 1 > 0.
    let m_min = ((-re).max(0.0) / 2.0).ceil() as u32 + 1;
    let m_start = m_floor.max(m_min).max(1);
    let m_cap = m_start + 4 * n + 200;

    let mut poch_log = abs_c(re, im).log10(); // |Poch(σ, 1)|
    let mut previous = f64::INFINITY;
    for j in 1..=m_cap {
        if j > 1 {
            let a = f64::from(2 * j - 3);
            let b = f64::from(2 * j - 2);
            poch_log += abs_c(re + a, im).log10() + abs_c(re + b, im).log10();
        }
        let term = em_term_log10(re, n, j, poch_log);
        if j >= m_start {
            // Remainder after j terms, from the next term.
            let a = f64::from(2 * j - 1);
            let b = f64::from(2 * j);
            let next_poch = poch_log + abs_c(re + a, im).log10() + abs_c(re + b, im).log10();
            let next = em_term_log10(re, n, j + 1, next_poch);
            let widen = (abs_c(re + f64::from(2 * j + 1), im) / (re + f64::from(2 * j + 1))).log10();
            let remainder = next + widen + LOG10_2;
            if remainder <= target_log10 {
                return Some(EmPlan {
                    n,
                    m: j,
                    remainder_log10: remainder,
                    peak_log10: peak.max(term),
                });
            }
            if term > previous && j > m_start + 2 {
                return None;
            }
        }
        peak = peak.max(term);
        previous = term;
    }
    None
}

/// Bernoulli weights `B_2j/(2j)!` for `j = 1..=m` at `prec` bits.
pub(crate) fn bernoulli_weights(m: u32, prec: u32) -> Vec<Float> {
    (1..=m)
        .map(|j| {
            let w = bernoulli(2 * j as usize) / Rational::from_integer(factorial(u64::from(2 * j)));
            float_from_rational(&w, prec)
        })
        .collect()
}

/// Euler–Maclaurin tail `Σ_{n≥N} n^{−σ}` given `N^{−σ}`:
/// `N^{1−σ}/(σ−1) + N^{−σ}/2 + Σ_{j=1}^{M} B_2j/(2j)! · Poch(σ, 2j−1) · N^{−σ−2j+1}`.
pub(crate) fn em_tail(sigma: &BigComplex, n: u32, n_pow: &BigComplex, weights: &[Float]) -> BigComplex {
    let prec = sigma.prec();
    let n_f = Float::with_val(prec, n);
    let n_sq = Float::with_val(prec, &n_f * &n_f);
    let sigma_minus_one = sigma.add_i64(-1);
    let integral = &n_pow.scale(&n_f) / &sigma_minus_one;
    let half = n_pow.div_u32(2);
    let mut acc = &integral + &half;
    // Poch(σ, 1) · N^{−σ−1}
    let mut running = (sigma * n_pow).scale(&Float::with_val(prec, n_f.recip_ref()));
    for (idx, w) in weights.iter().enumerate() {
        let j = idx as i64 + 1;
        if j > 1 {
            let a = sigma.add_i64(2 * j - 3);
            let b = sigma.add_i64(2 * j - 2);
            running = (&(&running * &a) * &b).scale(&Float::with_val(prec, n_sq.recip_ref()));
        }
        acc = &acc + &running.scale(w);
    }
    acc
}

/// Accurate `ζ(σ) − 1` values for `σ = s + k` over a run of consecutive `k`.
///
/// All values share one direct-sum length `N`, so the powers `n^{−s−k}` are
/// built once from `n^{−s}` and stepped down by `1/n` as `k` grows; each `k`
/// gets its own correction order `M`.
pub(crate) struct ShiftedZetaM1 {
    s: BigComplex,
    k: u32,
    n: u32,
    /// `n^{−s−k}` for `n = 2..=N`.
    powers: Vec<BigComplex>,
    weights: Vec<Float>,
}

impl ShiftedZetaM1 {
    /// `n_total` is the shared `N`; `m_max` bounds every later `M`.
    pub fn new(s: &BigComplex, k_start: u32, n_total: u32, m_max: u32) -> Self {
        let sigma = s.add_i64(i64::from(k_start));
        let powers = (2..=n_total).map(|n| sigma.neg_power_of(n)).collect();
        ShiftedZetaM1 {
            s: s.clone(),
            k: k_start,
            n: n_total,
            powers,
            weights: bernoulli_weights(m_max, s.prec()),
        }
    }

    /// `ζ(s + k) − 1` for the current `k` using `m` correction terms.
    pub fn value(&self, m: u32) -> BigComplex {
        let sigma = self.s.add_i64(i64::from(self.k));
        let mut acc = BigComplex::zero(self.s.digits());
        // powers[i] holds (i + 2)^{−σ}; the direct part stops at N − 1.
        for p in &self.powers[..self.powers.len() - 1] {
            acc = &acc + p;
        }
        let tail = em_tail(&sigma, self.n, &self.powers[self.powers.len() - 1], &self.weights[..m as usize]);
        &acc + &tail
    }

    pub fn advance(&mut self) {
        for (i, p) in self.powers.iter_mut().enumerate() {
            *p = p.div_u32(i as u32 + 2);
        }
        self.k += 1;
    }
}

/// Working digits for a result of requested accuracy `digits` whose largest
/// intermediate term has size `10^peak_log10`.
pub(crate) fn working_digits(digits: u32, peak_log10: f64) -> u32 {
    let guard = if peak_log10.is_finite() && peak_log10 > 0.0 {
        peak_log10.ceil() as u32
    } else {
        0
    };
    digits + 10 + guard
}

/// Value plus the cutoffs and remainder bound that produced it.
#[derive(Clone, Debug)]
pub struct ZetaM1Detail {
    pub value: BigComplex,
    pub cutoff: InnerCutoff,
    pub error_bound: f64,
}

/// `ζ(σ) − 1 = Σ_{n≥2} n^{−σ}` to `digits` decimal digits (absolute).
///
/// Requires `Re σ ≥ 1.5`; identity evaluations that would need a smaller
/// argument should use a deeper identity.
pub fn zeta_m1(sigma: &BigComplex, digits: u32) -> Result<BigComplex> {
    zeta_m1_detailed(sigma, digits).map(|d| d.value)
}

pub fn zeta_m1_detailed(sigma: &BigComplex, digits: u32) -> Result<ZetaM1Detail> {
    check_digits(digits)?;
    let (re, im) = sigma.to_f64_pair();
    if re.is_nan() || re < ZETA_M1_MIN_RE {
        return Err(ZetaError::Domain(format!(
            "zeta_m1 needs Re σ ≥ {ZETA_M1_MIN_RE}, got Re σ = {re}"
        )));
    }
    let target = -f64::from(digits) - 5.0;
    let plan = plan_em(re, im, 2, target, default_n(digits), default_m(digits));
    let work = working_digits(digits, plan.peak_log10);
    let s = sigma.with_digits(work);
    let series = ShiftedZetaM1::new(&s, 0, plan.n, plan.m);
    let value = series.value(plan.m);
    let rounding = 10f64.powf(plan.peak_log10.max(0.0) - f64::from(work) + 1.0) * f64::from(plan.n + plan.m);
    Ok(ZetaM1Detail {
        value,
        cutoff: InnerCutoff { k: 0, n: plan.n, m: plan.m },
        error_bound: 10f64.powf(plan.remainder_log10) + rounding,
    })
}

/// Independent reference: `ζ(s)` by Euler–Maclaurin summation from `n = 1`,
///
/// `Σ_{n=1}^{N−1} n^{−s} + N^{1−s}/(s−1) + N^{−s}/2 + Σ_{j=1}^{M} B_2j/(2j)! · Poch(s, 2j−1) · N^{−s−2j+1}`,
///
/// valid for every `s ≠ 1`. `N` and `M` start at `10 + digits` and
/// `⌈digits/4⌉ + 5` and grow until the remainder bound meets the target.
pub fn zeta_em_reference(s: &BigComplex, digits: u32) -> Result<BigComplex> {
    check_digits(digits)?;
    super::check_pole(s, digits)?;
    let (re, im) = s.to_f64_pair();
    let target = -f64::from(digits) - 5.0;
    let plan = plan_em(re, im, 1, target, default_n(digits), default_m(digits));
    let work = working_digits(digits, plan.peak_log10);
    let s = s.with_digits(work);
    let prec = s.prec();

    let neg_s = -&s;
    let mut direct = BigComplex::zero(work);
    for n in 1..plan.n {
        let ln = Float::with_val(prec, n).ln();
        direct = &direct + &neg_s.scale(&ln).exp();
    }
    let n_pow = neg_s.scale(&Float::with_val(prec, plan.n).ln()).exp();
    let weights = bernoulli_weights(plan.m, prec);
    Ok(&direct + &em_tail(&s, plan.n, &n_pow, &weights))
}

/// `log10` of the upper bound `|ζ(σ) − 1| ≤ 2^{−x} + 2^{1−x}/(x − 1)`,
/// `x = Re σ > 1`.
pub(crate) fn zeta_m1_bound_log10(re: f64) -> f64 {
    let x = re;
    let a = -x * LOG10_2;
    let b = (1.0 - x) * LOG10_2 - (x - 1.0).log10();
    let hi = a.max(b);
    hi + (1.0 + 10f64.powf(a.min(b) - hi)).log10()
}

/// Upper bound on `Σ_{n≥3} (2/n)^x`, used for ratios of consecutive
/// `ζ(σ) − 1` values.
pub(crate) fn third_term_share(x: f64) -> f64 {
    let three = (-x * 3f64.ln()).exp() * (1.0 + 3.0 / (x - 1.0));
    (x * 2f64.ln()).exp() * three
}
