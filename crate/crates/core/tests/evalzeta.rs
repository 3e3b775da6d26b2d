mod common;

use common::{distance, distance_to_real, minus_half_ln_two_pi, pi_squared_over_six, point, GRID};
use rayon::prelude::*;
use rug::ops::Pow;
use rug::Float;
use zetacont_core::derive::{derive_identity, reference_identity};
use zetacont_core::evalzeta::{
    admits, bits_for_digits, closed_part_at, eval_identity, integer_point_series, partial_sum_zeta_m1,
    pochhammer, sum_zeta_m1, trivial_zero_report, zeta_em_reference, zeta_m1, zeta_prime_at_zero, BigComplex,
};
use zetacont_core::exactmath::{int, rat};
use zetacont_core::ZetaError;

const DIGITS: u32 = 40;

#[test]
fn agrees_with_euler_maclaurin_on_the_grid() {
    let specs: Vec<_> = (2..=12).map(|p| reference_identity(p).unwrap()).collect();
    let failures: Vec<String> = GRID
        .par_iter()
        .flat_map(|text| {
            let s = point(text, DIGITS);
            let oracle = zeta_em_reference(&s, DIGITS).unwrap();
            let (re, _) = s.to_f64_pair();
            specs
                .iter()
                .filter(|spec| admits(spec, re))
                .filter_map(|spec| {
                    let report = eval_identity(spec, &s, DIGITS).unwrap();
                    let d = distance(&report.value, &oracle);
                    (d >= 1e-35).then(|| format!("p={} s={text}: {d:e}", spec.p))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn depths_agree_where_they_overlap() {
    let s = point("-0.5+3i", DIGITS);
    let values: Vec<_> = (2..=12)
        .map(|p| eval_identity(&reference_identity(p).unwrap(), &s, DIGITS).unwrap().value)
        .collect();
    for v in &values[1..] {
        assert!(distance(v, &values[0]) < 1e-35);
    }
    // the odd depth's extended strip agrees with the next odd depth
    let s = point("-3.5", DIGITS);
    let a = eval_identity(&reference_identity(3).unwrap(), &s, DIGITS);
    assert!(a.is_err(), "Re(s + k0) = 0.5 is below the inner floor");
    let s = point("-2.25", DIGITS);
    let a = eval_identity(&reference_identity(3).unwrap(), &s, DIGITS).unwrap();
    let b = eval_identity(&reference_identity(5).unwrap(), &s, DIGITS).unwrap();
    assert!(distance(&a.value, &b.value) < 1e-35);
}

#[test]
fn depth_one_matches_on_its_half_plane() {
    let spec = reference_identity(1).unwrap();
    for text in ["0.5", "2", "3+4i"] {
        let s = point(text, DIGITS);
        let v = eval_identity(&spec, &s, DIGITS).unwrap().value;
        assert!(distance(&v, &zeta_em_reference(&s, DIGITS).unwrap()) < 1e-35, "{text}");
    }
    assert!(matches!(eval_identity(&spec, &point("0", DIGITS), DIGITS), Err(ZetaError::Domain(_))));
}

#[test]
fn pole_behaviour() {
    let spec = reference_identity(4).unwrap();
    let eps = Float::with_val(bits_for_digits(DIGITS), 1e-6);
    let s = BigComplex::one(DIGITS).add_real(&eps);
    let v = eval_identity(&spec, &s, DIGITS).unwrap().value;
    let scaled = v.scale(&eps);
    let gap = distance_to_real(&scaled, &Float::with_val(64, 1));
    assert!(gap < 1e-5, "{gap}");
    // the constant term is Euler's γ
    assert!((gap / 1e-6 - 0.5772156649).abs() < 1e-5);
    let err = eval_identity(&spec, &point("1", DIGITS), DIGITS).unwrap_err();
    assert!(matches!(err, ZetaError::Pole { .. }));
    let near = BigComplex::one(DIGITS).add_real(&Float::with_val(128, 1e-25));
    assert!(matches!(eval_identity(&spec, &near, DIGITS), Err(ZetaError::Pole { .. })));
}

#[test]
fn derivative_at_zero() {
    let a = zeta_prime_at_zero(&reference_identity(2).unwrap(), DIGITS).unwrap();
    let b = zeta_prime_at_zero(&reference_identity(3).unwrap(), DIGITS).unwrap();
    assert!(distance(&a, &b) < 1e-35);
    let prec = bits_for_digits(DIGITS);
    assert!(distance_to_real(&a, &minus_half_ln_two_pi(prec)) < 1e-35);

    // central difference of the independent evaluator, h = 10^{−digits/3}
    let h = Float::with_val(prec, Float::with_val(prec, 10u32).pow(-((DIGITS / 3) as i32)));
    let plus = zeta_em_reference(&BigComplex::zero(DIGITS).add_real(&h), DIGITS).unwrap();
    let minus = zeta_em_reference(&BigComplex::zero(DIGITS).add_real(&-h.clone()), DIGITS).unwrap();
    let fd = (&plus - &minus).scale(&(Float::with_val(prec, 0.5) / &h));
    assert!(distance(&fd, &a) < 1e-20, "{}", distance(&fd, &a));

    assert!(matches!(zeta_prime_at_zero(&reference_identity(1).unwrap(), DIGITS), Err(ZetaError::Domain(_))));
}

#[test]
fn error_estimates_are_upper_bounds() {
    let bad: Vec<String> = GRID
        .par_iter()
        .flat_map(|text| {
            let (re, _) = point(text, DIGITS).to_f64_pair();
            [4u32, 7, 11, 12]
                .into_iter()
                .filter_map(|p| {
                    let spec = reference_identity(p).unwrap();
                    if !admits(&spec, re) {
                        return None;
                    }
                    // same binary point at both precisions
                    let s = point(text, DIGITS);
                    let lo = eval_identity(&spec, &s, DIGITS).unwrap();
                    let hi = eval_identity(&spec, &s.with_digits(DIGITS + 20), DIGITS + 20).unwrap();
                    let d = distance(&lo.value, &hi.value);
                    (d > lo.error_estimate || lo.error_estimate > 1e-35)
                        .then(|| format!("p={p} s={text}: actual {d:e} estimate {:e}", lo.error_estimate))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn deterministic_output() {
    let spec = reference_identity(8).unwrap();
    let s = point("-4.75+6.5i", DIGITS);
    let a = eval_identity(&spec, &s, DIGITS).unwrap();
    let b = eval_identity(&spec, &s, DIGITS).unwrap();
    assert_eq!(a.value.re(), b.value.re());
    assert_eq!(a.value.im(), b.value.im());
    assert_eq!(a.terms_used, b.terms_used);
    assert_eq!(a.inner_sum_cutoffs, b.inner_sum_cutoffs);
    assert_eq!(a.to_json(&s), b.to_json(&s));
}

#[test]
fn capacity_error_without_closed_form() {
    let mut spec = derive_identity(6, 12).unwrap();
    spec.closed_form = None;
    match eval_identity(&spec, &point("-3.5+2i", DIGITS), DIGITS) {
        Err(ZetaError::Capacity { stored_k, required_k }) => {
            assert_eq!(stored_k, 12);
            assert!(required_k > 12);
        }
        other => panic!("expected capacity error, got {other:?}"),
    }
    // with the fitted closed form the same short table is enough
    let spec = derive_identity(6, 20).unwrap();
    assert!(spec.closed_form.is_some());
    let s = point("-3.5+2i", DIGITS);
    let v = eval_identity(&spec, &s, DIGITS).unwrap().value;
    assert!(distance(&v, &zeta_em_reference(&s, DIGITS).unwrap()) < 1e-35);
}

#[test]
fn precondition_errors() {
    let spec = reference_identity(2).unwrap();
    assert!(matches!(eval_identity(&spec, &point("-1", DIGITS), DIGITS), Err(ZetaError::Domain(_))));
    assert!(matches!(eval_identity(&spec, &point("0.5", 20), 14), Err(ZetaError::Domain(_))));
    assert!(matches!(zeta_m1(&point("1.25", DIGITS), DIGITS), Err(ZetaError::Domain(_))));
}

#[test]
fn trivial_zeros_vanish() {
    for p in 2..=12 {
        let spec = reference_identity(p).unwrap();
        let bound = spec.evaluation_bound().clone();
        let expected: Vec<i64> = (1..)
            .map(|m| -2 * m)
            .take_while(|s| int(*s) > bound)
            .collect();
        let report = trivial_zero_report(&spec, DIGITS).unwrap();
        assert_eq!(report.iter().map(|z| z.s).collect::<Vec<_>>(), expected, "p={p}");
        for z in &report {
            assert!(z.magnitude < 1e-35, "p={p} s={}: {}", z.s, z.magnitude);
        }
    }
    assert!(trivial_zero_report(&reference_identity(2).unwrap(), DIGITS).unwrap().is_empty());
    let eleven: Vec<_> = trivial_zero_report(&reference_identity(11).unwrap(), DIGITS)
        .unwrap()
        .into_iter()
        .map(|z| z.s)
        .collect();
    assert_eq!(eleven, [-2, -4, -6, -8, -10]);
}

#[test]
fn exact_closed_parts() {
    // at s = 0 the series drops out: Poch(0, k) = 0
    for p in 2..=12 {
        assert_eq!(closed_part_at(&reference_identity(p).unwrap(), 0), Some(rat(-1, 2)), "p={p}");
    }
    assert_eq!(closed_part_at(&reference_identity(5).unwrap(), 2), Some(rat(49, 30)));
    assert_eq!(closed_part_at(&reference_identity(5).unwrap(), 1), None);
}

#[test]
fn zeta_two_from_the_depth_five_series() {
    let prec = bits_for_digits(DIGITS);
    let target = pi_squared_over_six(prec);
    let series = integer_point_series(&reference_identity(5).unwrap(), 2, DIGITS).unwrap();
    assert_eq!(series.constant, rat(49, 30));
    assert!(distance_to_real(&series.value, &target) < 1e-35);
    let general = eval_identity(&reference_identity(6).unwrap(), &point("2", DIGITS), DIGITS).unwrap();
    assert!(distance_to_real(&general.value, &target) < 1e-35);
}

#[test]
fn sum_of_zeta_minus_one() {
    let one = Float::with_val(64, 1);
    assert!(distance_to_real(&sum_zeta_m1(30).unwrap(), &one) < 1e-30);
    assert!(distance_to_real(&sum_zeta_m1(50).unwrap(), &one) < 1e-50);
    let two = partial_sum_zeta_m1(2, DIGITS).unwrap();
    let zeta2_minus_one = pi_squared_over_six(bits_for_digits(DIGITS)) - 1u32;
    assert!(distance_to_real(&two, &zeta2_minus_one) < 1e-38);
    assert!(partial_sum_zeta_m1(1, DIGITS).unwrap().is_zero());
}

#[test]
fn zeta_minus_one_values() {
    let prec = bits_for_digits(DIGITS);
    let v = zeta_m1(&point("2", DIGITS), DIGITS).unwrap();
    assert!(distance_to_real(&v, &(pi_squared_over_six(prec) - 1u32)) < 1e-39);
    // ζ(80) − 1 = 2^{−80} + … + 10^{−80} + O(11^{−80})
    let v = zeta_m1(&point("80", DIGITS), DIGITS).unwrap();
    let head = (2..=10u32).fold(Float::new(prec), |acc, n| acc + Float::with_val(prec, n).pow(-80i32));
    assert!(distance_to_real(&v, &head) < 1e-45);
}

#[test]
fn pochhammer_rising_factorial() {
    let s = point("2.5-1i", DIGITS);
    let direct = (0..4).fold(BigComplex::one(DIGITS), |acc, i| &acc * &s.add_i64(i));
    assert!(distance(&pochhammer(&s, 4), &direct) < 1e-35);
    assert!(pochhammer(&point("-3", DIGITS), 5).is_zero());
}
