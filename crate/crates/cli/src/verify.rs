use std::path::Path;

use clap::ValueEnum;
use rayon::prelude::*;
use rug::float::Constant;
use rug::Float;
use zetacont_core::derive::{derive_identity, first_difference, identities_equal, reference_identity_to, IdentitySpec};
use zetacont_core::evalzeta::{
    admits, bits_for_digits, eval_identity, integer_point_series, sum_zeta_m1, trivial_zero_report,
    zeta_em_reference, zeta_prime_at_zero, BigComplex,
};
use zetacont_core::exactmath::{int, Rational};

use crate::error::CliError;
use crate::input::read_identities_unchecked;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Coefficients,
    Pairing,
    Zeta0,
    Zetaprime0,
    Zeta2,
    #[value(name = "sum_identity", alias = "sum-identity")]
    SumIdentity,
    #[value(name = "trivial_zeros", alias = "trivial-zeros")]
    TrivialZeros,
    Oracle,
}

const ALL: [Check; 8] = [
    Check::Coefficients,
    Check::Pairing,
    Check::Zeta0,
    Check::Zetaprime0,
    Check::Zeta2,
    Check::SumIdentity,
    Check::TrivialZeros,
    Check::Oracle,
];

const ORACLE_GRID: [&str; 25] = [
    "-10.5", "-9.25", "-7.5", "-5", "-3.5", "-2", "-1.25", "-0.5", "0.25", "0.75", "1.5", "2.5", "4", "7",
    "10", "0.5+14.134725i", "0.5+20i", "-2+10i", "3-7i", "-5.5+2i", "-9+1i", "2+20i", "0.5-3i", "-1-20i",
    "6+0.5i",
];

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Coefficients => "coefficients",
            Check::Pairing => "pairing",
            Check::Zeta0 => "zeta0",
            Check::Zetaprime0 => "zetaprime0",
            Check::Zeta2 => "zeta2",
            Check::SumIdentity => "sum_identity",
            Check::TrivialZeros => "trivial_zeros",
            Check::Oracle => "oracle",
        }
    }
}

/// Result of one check: pass flag plus a one-line detail.
pub struct Outcome {
    pub pass: bool,
    pub detail: String,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Outcome { pass: true, detail: detail.into() }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Outcome { pass: false, detail: detail.into() }
    }
}

pub fn tolerance(digits: u32) -> f64 {
    10f64.powi(5 - digits as i32)
}

fn gap_to(value: &BigComplex, target: &Float) -> f64 {
    let re = Float::with_val(value.prec(), value.re() - target);
    re.to_f64().hypot(value.im().to_f64())
}

fn find(specs: &[IdentitySpec], p: u32) -> Result<&IdentitySpec, CliError> {
    specs
        .iter()
        .find(|s| s.p == p)
        .ok_or_else(|| CliError::Usage(format!("check needs the p={p} identity")))
}

/// First `(p, k)` where `spec` departs from the built-in table.
fn coefficient_mismatch(spec: &IdentitySpec) -> Result<Option<String>, CliError> {
    let k_max = spec.k_max();
    let expected = reference_identity_to(spec.p, k_max.max(spec.p + 2))?;
    if identities_equal(spec, &expected, k_max) && spec.k0 == expected.k0 {
        return Ok(None);
    }
    let p = spec.p;
    let bad_k = (0..=k_max).find(|&k| spec.stored_coefficient(k) != expected.stored_coefficient(k));
    Ok(Some(match bad_k {
        Some(k) if spec.pole_coefficient == expected.pole_coefficient && spec.q_poly == expected.q_poly => {
            let show = |r: Option<Rational>| r.map_or("missing".to_string(), |r| r.to_string());
            format!(
                "(p={p}, k={k}): r_k = {}, expected {}",
                show(spec.stored_coefficient(k)),
                show(expected.stored_coefficient(k))
            )
        }
        _ => format!(
            "(p={p}): {}",
            first_difference(spec, &expected, k_max).unwrap_or_else(|| format!("k0 {} vs {}", spec.k0, expected.k0))
        ),
    }))
}

pub fn coefficients(specs: &[IdentitySpec]) -> Result<Outcome, CliError> {
    for spec in specs {
        if let Some(msg) = coefficient_mismatch(spec)? {
            return Ok(Outcome::fail(format!("first mismatch at {msg}")));
        }
        if let Err(e) = spec.validate() {
            return Ok(Outcome::fail(format!("p={}: {e}", spec.p)));
        }
    }
    let ps: Vec<u32> = specs.iter().map(|s| s.p).collect();
    Ok(Outcome::pass(format!("{} identities match the built-in tables (p = {ps:?})", specs.len())))
}

pub fn pairing(specs: &[IdentitySpec]) -> Result<Outcome, CliError> {
    let mut checked = Vec::new();
    for odd in [3u32, 5, 7, 9, 11] {
        let (Ok(a), Ok(b)) = (find(specs, odd), find(specs, odd + 1)) else {
            continue;
        };
        let k = a.k_max().min(b.k_max());
        if !identities_equal(a, b, k) {
            return Ok(Outcome::fail(format!(
                "p={odd} and p={} differ: {}",
                odd + 1,
                first_difference(a, b, k).unwrap_or_default()
            )));
        }
        if a.extended_validity_re_gt != Some(int(-i64::from(odd))) {
            return Ok(Outcome::fail(format!("p={odd} lacks the extended bound Re s > -{odd}")));
        }
        checked.push(format!("({odd},{})", odd + 1));
    }
    if checked.is_empty() {
        return Ok(Outcome::fail("no odd/even pairs available"));
    }
    Ok(Outcome::pass(format!("identical pairs {}", checked.join(" "))))
}

pub fn zeta0(specs: &[IdentitySpec], digits: u32) -> Result<Outcome, CliError> {
    let half = Float::with_val(64, -0.5);
    let mut worst = 0f64;
    let mut n = 0;
    for spec in specs.iter().filter(|s| admits(s, 0.0)) {
        let v = eval_identity(spec, &BigComplex::zero(digits), digits)?;
        let gap = gap_to(&v.value, &half);
        if gap >= tolerance(digits) {
            return Ok(Outcome::fail(format!("p={}: ζ(0) = {}", spec.p, v.value.to_decimal(digits as usize))));
        }
        worst = worst.max(gap);
        n += 1;
    }
    Ok(Outcome::pass(format!("ζ(0) = -1/2 from {n} identities, max deviation {worst:.1e}")))
}

pub fn zetaprime0(specs: &[IdentitySpec], digits: u32) -> Result<Outcome, CliError> {
    let prec = bits_for_digits(digits);
    let two_pi = Float::with_val(prec, Constant::Pi) * 2u32;
    let target = -two_pi.ln() / 2u32;
    let mut values = Vec::new();
    for spec in specs {
        values.push((spec.p, zeta_prime_at_zero(spec, digits)?));
    }
    let Some((_, first)) = values.first() else {
        return Ok(Outcome::fail("no identity reaches s = 0"));
    };
    for (p, v) in &values {
        let gap = gap_to(v, &target);
        if gap >= tolerance(digits) {
            return Ok(Outcome::fail(format!("p={p}: ζ'(0) off -ln(2π)/2 by {gap:.1e}")));
        }
    }
    Ok(Outcome::pass(format!(
        "ζ'(0) = {} = -ln(2π)/2 from {} identities",
        first.to_decimal(digits as usize),
        values.len()
    )))
}

pub fn zeta2(spec: &IdentitySpec, digits: u32) -> Result<Outcome, CliError> {
    let prec = bits_for_digits(digits);
    let pi = Float::with_val(prec, Constant::Pi);
    let target = Float::with_val(prec, &pi * &pi) / 6u32;
    let series = integer_point_series(spec, 2, digits)?;
    let gap = gap_to(&series.value, &target);
    let detail = format!(
        "p={}: {} + series = {} (π²/6 deviation {gap:.1e}, {} terms)",
        spec.p,
        series.constant,
        series.value.to_decimal(digits as usize),
        series.terms_used
    );
    Ok(if gap < tolerance(digits) { Outcome::pass(detail) } else { Outcome::fail(detail) })
}

pub fn sum_identity(digits: u32) -> Result<Outcome, CliError> {
    let v = sum_zeta_m1(digits)?;
    let gap = gap_to(&v, &Float::with_val(64, 1));
    let detail = format!("Σ_(k≥2) (ζ(k) - 1) = {} (deviation {gap:.1e})", v.to_decimal(digits as usize));
    Ok(if gap < 10f64.powi(-(digits as i32)) { Outcome::pass(detail) } else { Outcome::fail(detail) })
}

pub fn trivial_zeros(specs: &[IdentitySpec], digits: u32) -> Result<Outcome, CliError> {
    let mut n = 0;
    let mut worst = 0f64;
    for spec in specs {
        for z in trivial_zero_report(spec, digits)? {
            if z.magnitude >= tolerance(digits) {
                return Ok(Outcome::fail(format!("p={} s={}: |ζ| = {:.1e}", spec.p, z.s, z.magnitude)));
            }
            worst = worst.max(z.magnitude);
            n += 1;
        }
    }
    Ok(Outcome::pass(format!("{n} trivial zeros, max |ζ| {worst:.1e}")))
}

pub fn oracle(specs: &[IdentitySpec], digits: u32) -> Result<Outcome, CliError> {
    let results: Vec<Result<(usize, Option<String>), CliError>> = ORACLE_GRID
        .par_iter()
        .map(|text| {
            let s = BigComplex::parse(text, digits)?;
            let reference = zeta_em_reference(&s, digits)?;
            let (re, _) = s.to_f64_pair();
            let mut n = 0;
            for spec in specs.iter().filter(|sp| admits(sp, re)) {
                let v = eval_identity(spec, &s, digits)?;
                let gap = (&v.value - &reference).abs_f64();
                if gap >= tolerance(digits) {
                    return Ok((n, Some(format!("p={} s={text}: off by {gap:.1e}", spec.p))));
                }
                n += 1;
            }
            Ok((n, None))
        })
        .collect();
    let mut total = 0;
    for r in results {
        let (n, failure) = r?;
        if let Some(msg) = failure {
            return Ok(Outcome::fail(msg));
        }
        total += n;
    }
    Ok(Outcome::pass(format!("{total} evaluations on {} points agree with Euler-Maclaurin", ORACLE_GRID.len())))
}

fn run_check(check: Check, specs: &[IdentitySpec], digits: u32) -> Result<Outcome, CliError> {
    match check {
        Check::Coefficients => coefficients(specs),
        Check::Pairing => pairing(specs),
        Check::Zeta0 => zeta0(specs, digits),
        Check::Zetaprime0 => {
            let pair: Vec<IdentitySpec> = specs.iter().filter(|s| s.p == 2 || s.p == 3).cloned().collect();
            zetaprime0(&pair, digits)
        }
        Check::Zeta2 => zeta2(find(specs, 5)?, digits),
        Check::SumIdentity => sum_identity(digits),
        Check::TrivialZeros => trivial_zeros(specs, digits),
        Check::Oracle => oracle(specs, digits),
    }
}

pub fn run(identities: Option<&Path>, only: &[Check], digits: u32) -> Result<(), CliError> {
    let specs = match identities {
        Some(path) => read_identities_unchecked(path)?,
        None => (1..=12).map(|p| derive_identity(p, 64)).collect::<Result<_, _>>()?,
    };
    let checks: Vec<Check> = if only.is_empty() { ALL.to_vec() } else { only.to_vec() };
    let mut failures = Vec::new();
    for check in checks {
        let outcome = run_check(check, &specs, digits)?;
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{:<14} {status}  {}", check.name(), outcome.detail);
        if !outcome.pass {
            failures.push(format!("{}: {}", check.name(), outcome.detail));
        }
    }
    match failures.first() {
        None => Ok(()),
        Some(first) => Err(CliError::Verify(format!("{} check(s) failed; {first}", failures.len()))),
    }
}
