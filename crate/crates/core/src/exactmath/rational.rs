//! Exact rationals and their `"num/den"` text form.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator after every operation, which is exactly the invariant the
//! symbolic layer relies on, so it is used directly as [`Rational`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Result, ZetaError};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical text form `"num/den"`, always with an explicit denominator (`"1/1"`, `"-1/6"`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` or a bare integer. The result is reduced to lowest terms.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| ZetaError::Parse(format!("invalid rational {text:?}: {e}")))
    };
    match text.split_once('/') {
        Some((n, d)) => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(ZetaError::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(num, den))
        }
        None => Ok(Rational::from_integer(parse_int(text)?)),
    }
}

/// Parses a decimal literal such as `-10.5`, `2.5e-3` or `7` exactly, or
/// falls back to [`parse_rational`] for `"num/den"`.
pub fn parse_decimal(text: &str) -> Result<Rational> {
    let text = text.trim();
    if text.contains('/') {
        return parse_rational(text);
    }
    let bad = || ZetaError::Parse(format!("invalid decimal {text:?}"));
    let (mantissa, exp) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (text, 0),
    };
    let (int_part, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let negative = int_part.starts_with('-');
    let int_digits = int_part.trim_start_matches(['+', '-']);
    if int_digits.is_empty() && frac.is_empty()
        || !int_digits.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits: BigInt = format!("{int_digits}{frac}0").parse::<BigInt>().map_err(|_| bad())? / 10;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        Rational::from_integer(digits * ten.pow(scale as u32))
    } else {
        Rational::new(digits, ten.pow(scale.unsigned_abs()))
    };
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Lossy conversion used only for magnitude estimates.
pub fn to_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            let (n_bits, d_bits) = (r.numer().bits() as i64, r.denom().bits() as i64);
            let shift = n_bits.max(d_bits) - 900;
            let n = (r.numer() >> shift.max(0) as usize).to_f64().unwrap_or(f64::MAX);
            let d = (r.denom() >> shift.max(0) as usize).to_f64().unwrap_or(f64::MAX);
            n / d
        }
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_literals() {
        assert_eq!(parse_decimal("-10.5").unwrap(), rat(-21, 2));
        assert_eq!(parse_decimal("2.5e-3").unwrap(), rat(1, 400));
        assert_eq!(parse_decimal("7").unwrap(), int(7));
        assert_eq!(parse_decimal(".25").unwrap(), rat(1, 4));
        assert_eq!(parse_decimal("1e2").unwrap(), int(100));
        assert_eq!(parse_decimal("-1/3").unwrap(), rat(-1, 3));
        assert!(parse_decimal("1.2.3").is_err());
        assert!(parse_decimal("-").is_err());
        assert!(parse_decimal("abc").is_err());
    }

    #[test]
    fn text_form_is_lowest_terms() {
        assert_eq!(format_rational(&rat(2, -12)), "-1/6");
        assert_eq!(format_rational(&int(0)), "0/1");
        assert_eq!(format_rational(&int(3)), "3/1");
        assert_eq!(parse_rational("4/-8").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x/2").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(13, 6), BigInt::from(1716));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
        assert_eq!(factorial(0), BigInt::one());
    }

    #[test]
    fn huge_rationals_convert_without_overflow() {
        let big = Rational::new(factorial(400) * 3, factorial(400) * 2);
        assert!((to_f64(&big) - 1.5).abs() < 1e-15);
        let tiny = Rational::new(BigInt::one(), factorial(300));
        assert!(to_f64(&tiny) >= 0.0);
    }
}
