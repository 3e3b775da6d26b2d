use num_traits::{One, Zero};

use super::identity::{ClosedForm, IdentitySpec, SeriesTerm};
use crate::error::{Result, ZetaError};
use crate::exactmath::{factorial, faulhaber, int, Polynomial, Rational};

/// Default number of stored series coefficients.
pub const DEFAULT_K_MAX: u32 = 64;

fn check_depth(p: u32) -> Result<()> {
    if p < 1 {
        return Err(ZetaError::Domain(format!("depth p must be ≥ 1, got {p}")));
    }
    Ok(())
}

/// The polynomial `f_p` subtracted from the step sum `Σ (x−n)^{p−1} Θ(x−n)`
/// to leave a periodic function.
///
/// `f_p(x) = P_{p−1}(x − 1)` for `p ≥ 2`; the depth-one case uses `f_1(x) = x`
/// (leaving minus the fractional part) rather than the pattern value `x − 1`.
pub fn subtraction_poly(p: u32) -> Result<Polynomial> {
    check_depth(p)?;
    if p == 1 {
        return Ok(Polynomial::x());
    }
    Ok(faulhaber(p as usize - 1).shift(&-Rational::one()))
}

/// One period `t ∈ [0, 1)` of the periodic combination, sign included:
/// `g_p(t) = t^{p−1} − P_{p−1}(t)` for `p ≥ 2` and `g_1(t) = −t`.
pub fn periodic_remainder(p: u32) -> Result<Polynomial> {
    check_depth(p)?;
    if p == 1 {
        return Ok(-&Polynomial::x());
    }
    let m = p as usize - 1;
    Ok(&Polynomial::monomial(Rational::one(), m) - &faulhaber(m))
}

/// Rising factorial `s(s+1)…(s+n−1)` as a polynomial in `s`.
pub fn pochhammer_poly(n: u32) -> Polynomial {
    let shifts: Vec<Rational> = (0..n).map(|i| int(i64::from(i))).collect();
    Polynomial::product_of_linear(&shifts)
}

/// Splits the explicitly integrable part
/// `Poch(s,p)/(p−1)! · Σ_j a_j/(s+p−1−j)`, with `f_p(x) = Σ_j a_j x^j`,
/// into `c/(s−1) + Q_p(s)`.
///
/// Every other denominator `s + p − 1 − j` is a factor of `Poch(s, p)`; the
/// division is checked to be exact.
pub fn closed_form_part(p: u32) -> Result<(Rational, Polynomial)> {
    let f = subtraction_poly(p)?;
    let poch = pochhammer_poly(p);
    let norm = Rational::from_integer(factorial(u64::from(p) - 1));
    let mut pole = Rational::zero();
    let mut q = Polynomial::zero();
    for (j, a) in f.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let offset = i64::from(p) - 1 - j as i64;
        let root = int(-offset);
        let (quotient, remainder) = poch.div_rem_linear(&root);
        if offset == -1 {
            pole += a * remainder / &norm;
        } else if !remainder.is_zero() {
            return Err(ZetaError::Internal(format!(
                "p={p}: spurious pole at s={root} did not cancel (remainder {remainder})"
            )));
        }
        q = &q + &quotient.scale(&(a / &norm));
    }
    Ok((pole, q))
}

/// Runs the integration-by-parts recursion and returns `(k, r_k)` for
/// `p ≤ k ≤ k_max`, zeros included.
///
/// Starting from `h = g_p`, each step integrates `h` once (zero at the
/// origin); the boundary value `H(1)` emits the coefficient of
/// `Poch(s,k)/(p−1)! · (ζ(s+k) − 1)`, rescaled here to the `1/(k+1)!`
/// normalization. After `m` integrations `g_j t^j` has become
/// `g_j j!/(j+m)! · t^{j+m}`, so `H(1)` is summed directly.
pub fn series_coefficients(p: u32, k_max: u32) -> Result<Vec<(u32, Rational)>> {
    let g = periodic_remainder(p)?;
    let norm = factorial(u64::from(p) - 1);
    let mut out = Vec::with_capacity(k_max.saturating_sub(p) as usize + 1);
    for k in p..=k_max {
        let m = u64::from(k - p + 1);
        let k1 = factorial(u64::from(k) + 1);
        let r: Rational = g
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let j = j as u64;
                // j! (k+1)! / ((p−1)! (j+m)!)
                c * Rational::new(factorial(j) * &k1, &norm * factorial(j + m))
            })
            .sum();
        out.push((k, r));
    }
    Ok(out)
}

/// Interpolates `r_k` through the first `max_degree + 1` stored terms and
/// keeps the fit only if it reproduces every remaining term exactly.
pub fn fit_closed_form(terms: &[SeriesTerm], max_degree: usize) -> Option<Polynomial> {
    if terms.len() < max_degree + 2 {
        return None;
    }
    let points: Vec<(Rational, Rational)> = terms[..=max_degree]
        .iter()
        .map(|t| (int(i64::from(t.k)), t.r.clone()))
        .collect();
    let fit = Polynomial::interpolate(&points);
    terms[max_degree + 1..]
        .iter()
        .all(|t| fit.eval(&int(i64::from(t.k))) == t.r)
        .then_some(fit)
}

struct Derivation {
    pole: Rational,
    q: Polynomial,
    k0: u32,
    terms: Vec<SeriesTerm>,
}

impl Derivation {
    fn run(p: u32, k_max: u32) -> Result<Self> {
        let (pole, q) = closed_form_part(p)?;
        let raw = series_coefficients(p, k_max)?;
        let first = raw
            .iter()
            .position(|(_, r)| !r.is_zero())
            .ok_or_else(|| ZetaError::Internal(format!("p={p}: every r_k up to {k_max} vanished")))?;
        let terms: Vec<SeriesTerm> = raw[first..]
            .iter()
            .map(|(k, r)| SeriesTerm { k: *k, r: r.clone() })
            .collect();
        Ok(Derivation {
            pole,
            q,
            k0: terms[0].k,
            terms,
        })
    }

    fn same_identity(&self, other: &Derivation) -> bool {
        self.pole == other.pole && self.q == other.q && self.k0 == other.k0 && {
            let n = self.terms.len().min(other.terms.len());
            self.terms[..n] == other.terms[..n]
        }
    }
}

/// Derives the depth-`p` identity with coefficients stored up to `k_max`.
///
/// The extended bound `Re s > −p` is recorded when depth `p + 1` yields the
/// identical identity.
pub fn derive_identity(p: u32, k_max: u32) -> Result<IdentitySpec> {
    check_depth(p)?;
    if k_max < p + 2 {
        return Err(ZetaError::Domain(format!(
            "k_max must be ≥ p + 2 = {}, got {k_max}",
            p + 2
        )));
    }
    let own = Derivation::run(p, k_max)?;
    let next = Derivation::run(p + 1, k_max)?;
    let extended = own
        .same_identity(&next)
        .then(|| int(-i64::from(p)));
    let closed_form =
        fit_closed_form(&own.terms, p as usize + 2).map(|k_poly| ClosedForm { k_poly });
    Ok(IdentitySpec {
        p,
        k0: own.k0,
        pole_coefficient: own.pole,
        q_poly: own.q,
        terms: own.terms,
        closed_form,
        validity_re_gt: int(1 - i64::from(p)),
        extended_validity_re_gt: extended,
    })
}

/// Exact equality of pole coefficient, `Q_p` and every `r_k` with `k ≤ k_max`.
///
/// Coefficients are compared from the stored tables only; a side that does
/// not store up to `k_max` compares unequal.
pub fn identities_equal(a: &IdentitySpec, b: &IdentitySpec, k_max: u32) -> bool {
    a.pole_coefficient == b.pole_coefficient
        && a.q_poly == b.q_poly
        && (0..=k_max).all(|k| match (a.stored_coefficient(k), b.stored_coefficient(k)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        })
}

/// First coefficient at which two identities differ, for diagnostics.
pub fn first_difference(a: &IdentitySpec, b: &IdentitySpec, k_max: u32) -> Option<String> {
    if a.pole_coefficient != b.pole_coefficient {
        return Some(format!(
            "pole coefficient {} vs {}",
            a.pole_coefficient, b.pole_coefficient
        ));
    }
    if a.q_poly != b.q_poly {
        let n = a.q_poly.coeffs().len().max(b.q_poly.coeffs().len());
        let i = (0..n).find(|&i| a.q_poly.coeff(i) != b.q_poly.coeff(i)).unwrap_or(0);
        return Some(format!(
            "Q_p coefficient of s^{i}: {} vs {}",
            a.q_poly.coeff(i),
            b.q_poly.coeff(i)
        ));
    }
    (0..=k_max).find_map(|k| match (a.stored_coefficient(k), b.stored_coefficient(k)) {
        (Some(x), Some(y)) if x == y => None,
        (Some(x), Some(y)) => Some(format!("r_{k}: {x} vs {y}")),
        (x, y) => Some(format!(
            "r_{k}: {} vs {}",
            x.map_or("missing".into(), |v| v.to_string()),
            y.map_or("missing".into(), |v| v.to_string())
        )),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn direct_sum_matches_repeated_integration() {
        for p in 1..=9 {
            let mut h = periodic_remainder(p).unwrap();
            let norm = Rational::from_integer(factorial(u64::from(p) - 1));
            for (k, r) in series_coefficients(p, 30).unwrap() {
                h = h.antiderivative_zero_at_origin();
                let expected = h.eval(&Rational::one()) * Rational::from_integer(factorial(u64::from(k) + 1)) / &norm;
                assert_eq!(r, expected, "p={p} k={k}");
            }
        }
    }

    #[test]
    fn subtraction_polynomials() {
        assert_eq!(subtraction_poly(1).unwrap(), Polynomial::x());
        assert_eq!(
            subtraction_poly(2).unwrap(),
            Polynomial::new(vec![int(0), rat(-1, 2), rat(1, 2)])
        );
        assert_eq!(
            subtraction_poly(5).unwrap(),
            Polynomial::from_integers(&[0, -1, 0, 10, -15, 6]).scale(&rat(1, 30))
        );
        assert_eq!(
            subtraction_poly(11).unwrap(),
            Polynomial::from_integers(&[0, 5, 0, -33, 0, 66, 0, -66, 0, 55, -33, 6]).scale(&rat(1, 66))
        );
        assert!(matches!(subtraction_poly(0), Err(ZetaError::Domain(_))));
    }

    #[test]
    fn periodic_remainders() {
        assert_eq!(periodic_remainder(1).unwrap(), Polynomial::from_integers(&[0, -1]));
        assert_eq!(
            periodic_remainder(2).unwrap(),
            Polynomial::new(vec![int(0), rat(1, 2), rat(-1, 2)])
        );
        assert_eq!(
            periodic_remainder(3).unwrap(),
            Polynomial::new(vec![int(0), rat(-1, 6), rat(1, 2), rat(-1, 3)])
        );
        assert!(periodic_remainder(0).is_err());
    }

    #[test]
    fn closed_parts_small_depths() {
        assert_eq!(closed_form_part(1).unwrap(), (int(1), Polynomial::one()));
        assert_eq!(closed_form_part(2).unwrap(), (int(1), Polynomial::constant(rat(1, 2))));
        assert_eq!(
            closed_form_part(3).unwrap(),
            (int(1), Polynomial::new(vec![rat(1, 2), rat(1, 12)]))
        );
    }

    #[test]
    fn depth_one_and_two_series() {
        let one = derive_identity(1, 10).unwrap();
        assert_eq!(one.k0, 1);
        assert!(one.terms.iter().all(|t| t.r == int(-1)));
        assert_eq!(one.terms.len(), 10);
        assert_eq!(one.closed_form.unwrap().k_poly, Polynomial::constant(int(-1)));

        let two = derive_identity(2, 10).unwrap();
        assert_eq!(two.k0, 2);
        for t in &two.terms {
            assert_eq!(t.r, rat(i64::from(t.k) - 1, 2));
        }
    }

    #[test]
    fn first_emission_vanishes_for_odd_depth() {
        let three = series_coefficients(3, 6).unwrap();
        assert_eq!(three[0], (3, int(0)));
        assert_eq!(three[1], (4, rat(-1, 6)));
        let five = series_coefficients(5, 8).unwrap();
        assert_eq!(five[0], (5, int(0)));
        assert_eq!(five[1], (6, rat(1, 6)));
    }

    #[test]
    fn k_max_precondition() {
        assert!(matches!(derive_identity(5, 6), Err(ZetaError::Domain(_))));
        assert!(derive_identity(5, 7).is_ok());
        assert!(matches!(derive_identity(0, 64), Err(ZetaError::Domain(_))));
    }

    #[test]
    fn fit_needs_enough_points() {
        let terms: Vec<SeriesTerm> = (1..4).map(|k| SeriesTerm { k, r: int(-1) }).collect();
        assert_eq!(fit_closed_form(&terms, 2), None);
        assert_eq!(fit_closed_form(&terms, 1), Some(Polynomial::constant(int(-1))));
    }

    #[test]
    fn fit_rejects_non_polynomial_sequences() {
        let terms: Vec<SeriesTerm> = (0..12)
            .map(|k| SeriesTerm { k, r: Rational::from_integer(num_bigint::BigInt::from(2).pow(k)) })
            .collect();
        assert_eq!(fit_closed_form(&terms, 4), None);
    }

    #[test]
    fn equality_and_first_difference() {
        let one = derive_identity(1, 10).unwrap();
        let two = derive_identity(2, 10).unwrap();
        assert!(!identities_equal(&one, &two, 10));
        assert!(identities_equal(&one, &one, 10));
        assert!(!identities_equal(&one, &one, 11));
        assert!(first_difference(&one, &two, 10).unwrap().starts_with("Q_p"));
    }
}
