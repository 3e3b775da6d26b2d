use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, int, parse_rational, Rational};

/// Dense univariate polynomial over ℚ; `coeffs[i]` multiplies `x^i`.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients and structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^degree`
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `x + c`
    pub fn linear(c: Rational) -> Self {
        Self::new(vec![c, Rational::one()])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&int(x))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Returns `Q` with `Q(x) = P(x + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        let step = Self::linear(c.clone());
        self.coeffs.iter().rev().fold(Self::zero(), |acc, a| {
            &(&acc * &step) + &Self::constant(a.clone())
        })
    }

    /// The antiderivative `H` with `H(0) = 0`.
    pub fn antiderivative_zero_at_origin(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs.push(a / int(i as i64 + 1));
        }
        Self::new(coeffs)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * int(i as i64))
                .collect(),
        )
    }

    /// Synthetic division by `(x - root)`: returns `(quotient, remainder)`
    /// with `P(x) = quotient(x)·(x - root) + remainder`.
    pub fn div_rem_linear(&self, root: &Rational) -> (Self, Rational) {
        if self.coeffs.is_empty() {
            return (Self::zero(), Rational::zero());
        }
        let n = self.coeffs.len();
        let mut quotient = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (0..n).rev() {
            let value = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return (Self::new(quotient), value);
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Product of `(x + c)` over the given shifts.
    pub fn product_of_linear<'a>(shifts: impl IntoIterator<Item = &'a Rational>) -> Self {
        shifts
            .into_iter()
            .fold(Self::one(), |acc, c| &acc * &Self::linear(c.clone()))
    }

    /// Newton-form interpolation through `points` (distinct abscissae),
    /// returned in expanded form.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let n = points.len();
        let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
        let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
            }
        }
        let mut acc = Self::zero();
        for i in (0..n).rev() {
            acc = &(&acc * &Self::linear(-xs[i].clone())) + &Self::constant(table[i].clone());
        }
        acc
    }

    /// Renders the polynomial in the named variable, highest degree first,
    /// e.g. `x^2/2 - x/2`.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, var }
    }
}

struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let mag = c.abs();
            let power = match i {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{}", self.var, i),
            };
            let (num, den) = (mag.numer(), mag.denom());
            if power.is_empty() {
                write!(f, "{num}")?;
            } else if num.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{num}{power}")?;
            }
            if !den.is_one() {
                write!(f, "/{den}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("x"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(format_rational))
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat;

    #[test]
    fn trims_trailing_zeros() {
        let p = Polynomial::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Polynomial::new(vec![int(0)]), Polynomial::zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn identity_shift() {
        let sq = Polynomial::monomial(int(1), 2);
        assert_eq!(sq.shift(&int(0)), sq);
    }

    #[test]
    fn shift_expands_binomially() {
        // (x + 2)^2 = x^2 + 4x + 4
        let sq = Polynomial::monomial(int(1), 2);
        assert_eq!(sq.shift(&int(2)), Polynomial::from_integers(&[4, 4, 1]));
    }

    #[test]
    fn antiderivative_examples() {
        assert_eq!(
            Polynomial::x().antiderivative_zero_at_origin(),
            Polynomial::monomial(rat(1, 2), 2)
        );
        assert_eq!(
            Polynomial::zero().antiderivative_zero_at_origin(),
            Polynomial::zero()
        );
        // t/2 - t^2/2 -> t^2/4 - t^3/6, H(1) = 1/12
        let g = Polynomial::new(vec![int(0), rat(1, 2), rat(-1, 2)]);
        let h = g.antiderivative_zero_at_origin();
        assert_eq!(h, Polynomial::new(vec![int(0), int(0), rat(1, 4), rat(-1, 6)]));
        assert_eq!(h.eval_int(1), rat(1, 12));
    }

    #[test]
    fn synthetic_division() {
        // x^2 - 1 = (x - 1)(x + 1)
        let p = Polynomial::from_integers(&[-1, 0, 1]);
        let (q, r) = p.div_rem_linear(&int(1));
        assert_eq!(q, Polynomial::from_integers(&[1, 1]));
        assert_eq!(r, int(0));
        // x^2 + 1 at root 2: remainder 5
        let (q, r) = Polynomial::from_integers(&[1, 0, 1]).div_rem_linear(&int(2));
        assert_eq!(q, Polynomial::from_integers(&[2, 1]));
        assert_eq!(r, int(5));
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let p = Polynomial::new(vec![rat(3, 7), int(-2), int(0), rat(5, 3)]);
        let pts: Vec<_> = (0..4).map(|k| (int(k * 3 + 1), p.eval_int(k * 3 + 1))).collect();
        assert_eq!(Polynomial::interpolate(&pts), p);
    }

    #[test]
    fn display_reads_naturally() {
        let p = Polynomial::new(vec![int(0), rat(-1, 2), rat(1, 2)]);
        assert_eq!(p.to_string(), "x^2/2 - x/2");
        let q = Polynomial::new(vec![rat(1, 2), rat(29, 360), rat(-1, 240), rat(-1, 720)]);
        assert_eq!(q.display_in("s").to_string(), "-s^3/720 - s^2/240 + 29s/360 + 1/2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn serde_uses_rational_strings() {
        let p = Polynomial::new(vec![int(1), rat(-1, 6)]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"["1/1","-1/6"]"#);
        let back: Polynomial = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }
}
