use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::Constant;
use rug::Float;

use crate::error::{Result, ZetaError};
use crate::exactmath::Rational;

/// Bits needed to carry `digits` decimal digits, with a few spare.
pub fn bits_for_digits(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + 8
}

/// `log10 |x|`, `-inf` for zero; never overflows for extreme exponents.
pub fn log10_abs(x: &Float) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let (mantissa, exp) = x.to_f64_exp();
    mantissa.abs().log10() + f64::from(exp) * std::f64::consts::LOG10_2
}

pub fn float_from_rational(r: &Rational, prec: u32) -> Float {
    // Integer parts go through decimal text: rug's `integer` feature pulls
    // in the GMP integer layer, which we otherwise do not need.
    let num = Float::with_val(prec, Float::parse(r.numer().to_string()).expect("integer literal"));
    let den = Float::with_val(prec, Float::parse(r.denom().to_string()).expect("integer literal"));
    num / den
}

/// Complex number with MPFR real and imaginary parts at a fixed working
/// precision, stated in decimal digits.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    re: Float,
    im: Float,
    digits: u32,
}

impl BigComplex {
    pub fn new(re: Float, im: Float, digits: u32) -> Self {
        let prec = bits_for_digits(digits);
        BigComplex {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
            digits,
        }
    }

    pub fn zero(digits: u32) -> Self {
        let prec = bits_for_digits(digits);
        BigComplex {
            re: Float::new(prec),
            im: Float::new(prec),
            digits,
        }
    }

    pub fn one(digits: u32) -> Self {
        Self::from_f64(1.0, 0.0, digits)
    }

    pub fn from_f64(re: f64, im: f64, digits: u32) -> Self {
        let prec = bits_for_digits(digits);
        BigComplex {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
            digits,
        }
    }

    pub fn from_rational(r: &Rational, digits: u32) -> Self {
        let prec = bits_for_digits(digits);
        BigComplex {
            re: float_from_rational(r, prec),
            im: Float::new(prec),
            digits,
        }
    }

    pub fn from_i64(n: i64, digits: u32) -> Self {
        let prec = bits_for_digits(digits);
        BigComplex {
            re: Float::with_val(prec, n),
            im: Float::new(prec),
            digits,
        }
    }

    /// Parses `"a"`, `"a+bi"`, `"a-bi"`, `"bi"` with decimal `a`, `b`
    /// (exponents such as `1e-3` allowed).
    pub fn parse(text: &str, digits: u32) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || ZetaError::Parse(format!("invalid complex literal {text:?}; expected a, a+bi or a-bi"));
        if compact.is_empty() {
            return Err(bad());
        }
        let prec = bits_for_digits(digits);
        let real = |t: &str| -> Result<Float> {
            let parsed = Float::parse(t).map_err(|_| bad())?;
            Ok(Float::with_val(prec, parsed))
        };
        let Some(body) = compact.strip_suffix('i') else {
            return Ok(BigComplex { re: real(&compact)?, im: Float::new(prec), digits });
        };
        // Split at the last sign that is neither leading nor part of an exponent.
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
        let (re_text, im_text) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let im_text = match im_text {
            "" | "+" => "1",
            "-" => "-1",
            t => t,
        };
        Ok(BigComplex {
            re: real(re_text)?,
            im: real(im_text.strip_prefix('+').unwrap_or(im_text))?,
            digits,
        })
    }

    pub fn re(&self) -> &Float {
        &self.re
    }

    pub fn im(&self) -> &Float {
        &self.im
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    /// Same value rounded (or widened) to a different working precision.
    pub fn with_digits(&self, digits: u32) -> Self {
        Self::new(self.re.clone(), self.im.clone(), digits)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn abs_f64(&self) -> f64 {
        self.abs().to_f64()
    }

    pub fn log10_abs(&self) -> f64 {
        log10_abs(&self.abs())
    }

    pub fn scale(&self, factor: &Float) -> Self {
        let prec = self.prec();
        BigComplex {
            re: Float::with_val(prec, &self.re * factor),
            im: Float::with_val(prec, &self.im * factor),
            digits: self.digits,
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&float_from_rational(r, self.prec()))
    }

    pub fn div_u32(&self, n: u32) -> Self {
        BigComplex {
            re: Float::with_val(self.prec(), &self.re / n),
            im: Float::with_val(self.prec(), &self.im / n),
            digits: self.digits,
        }
    }

    pub fn add_real(&self, x: &Float) -> Self {
        BigComplex {
            re: Float::with_val(self.prec(), &self.re + x),
            im: self.im.clone(),
            digits: self.digits,
        }
    }

    pub fn add_i64(&self, n: i64) -> Self {
        BigComplex {
            re: Float::with_val(self.prec(), &self.re + n),
            im: self.im.clone(),
            digits: self.digits,
        }
    }

    pub fn recip(&self) -> Self {
        BigComplex::one(self.digits).with_prec_of(self) / self
    }

    fn with_prec_of(mut self, other: &Self) -> Self {
        self.re.set_prec(other.prec());
        self.im.set_prec(other.prec());
        self.digits = other.digits;
        self
    }

    pub fn exp(&self) -> Self {
        let prec = self.prec();
        let magnitude = Float::with_val(prec, self.re.exp_ref());
        let (sin, cos) = self.im.clone().sin_cos(Float::new(prec));
        BigComplex {
            re: Float::with_val(prec, &magnitude * &cos),
            im: Float::with_val(prec, &magnitude * &sin),
            digits: self.digits,
        }
    }

    /// `base^(−self)` for a positive integer base.
    pub fn neg_power_of(&self, base: u32) -> Self {
        let prec = self.prec();
        let ln = Float::with_val(prec, base).ln();
        (-self).scale(&ln).exp()
    }

    /// Decimal rendering with `sig` significant digits per component.
    pub fn to_decimal(&self, sig: usize) -> String {
        let re = format_float(&self.re, sig);
        if self.im.is_zero() {
            return re;
        }
        let im = format_float(&self.im, sig);
        match im.strip_prefix('-') {
            Some(mag) => format!("{re}-{mag}i"),
            None => format!("{re}+{im}i"),
        }
    }
}

/// Decimal scientific rendering `d.ddd…e±x`, `0` for zero.
pub fn format_float(x: &Float, sig: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    // digits d1 d2 … with value 0.d1d2… × 10^exp
    let (negative, digits, exp) = x.to_sign_string_exp(10, Some(sig.max(1)));
    let exp = exp.map_or(0, |e| e - 1);
    let sign = if negative { "-" } else { "" };
    let (lead, rest) = digits.split_at(1);
    if rest.is_empty() {
        format!("{sign}{lead}e{exp}")
    } else {
        format!("{sign}{lead}.{rest}e{exp}")
    }
}

pub fn pi(digits: u32) -> Float {
    Float::with_val(bits_for_digits(digits), Constant::Pi)
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(self.digits as usize))
    }
}

impl Add for &BigComplex {
    type Output = BigComplex;

    fn add(self, rhs: &BigComplex) -> BigComplex {
        let prec = self.prec().max(rhs.prec());
        BigComplex {
            re: Float::with_val(prec, &self.re + &rhs.re),
            im: Float::with_val(prec, &self.im + &rhs.im),
            digits: self.digits.max(rhs.digits),
        }
    }
}

impl Sub for &BigComplex {
    type Output = BigComplex;

    fn sub(self, rhs: &BigComplex) -> BigComplex {
        let prec = self.prec().max(rhs.prec());
        BigComplex {
            re: Float::with_val(prec, &self.re - &rhs.re),
            im: Float::with_val(prec, &self.im - &rhs.im),
            digits: self.digits.max(rhs.digits),
        }
    }
}

impl Mul for &BigComplex {
    type Output = BigComplex;

    fn mul(self, rhs: &BigComplex) -> BigComplex {
        let prec = self.prec().max(rhs.prec());
        let rr = Float::with_val(prec, &self.re * &rhs.re);
        let ii = Float::with_val(prec, &self.im * &rhs.im);
        let ri = Float::with_val(prec, &self.re * &rhs.im);
        let ir = Float::with_val(prec, &self.im * &rhs.re);
        BigComplex {
            re: rr - ii,
            im: ri + ir,
            digits: self.digits.max(rhs.digits),
        }
    }
}

impl Div for &BigComplex {
    type Output = BigComplex;

    fn div(self, rhs: &BigComplex) -> BigComplex {
        let prec = self.prec().max(rhs.prec());
        let denom = Float::with_val(prec, rhs.re.square_ref()) + Float::with_val(prec, rhs.im.square_ref());
        let conj = BigComplex {
            re: rhs.re.clone(),
            im: Float::with_val(prec, -&rhs.im),
            digits: rhs.digits,
        };
        let num = self * &conj;
        BigComplex {
            re: Float::with_val(prec, &num.re / &denom),
            im: Float::with_val(prec, &num.im / &denom),
            digits: num.digits,
        }
    }
}

impl Div for BigComplex {
    type Output = BigComplex;

    fn div(self, rhs: BigComplex) -> BigComplex {
        &self / &rhs
    }
}

impl Div<&BigComplex> for BigComplex {
    type Output = BigComplex;

    fn div(self, rhs: &BigComplex) -> BigComplex {
        &self / rhs
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;

    fn neg(self) -> BigComplex {
        BigComplex {
            re: Float::with_val(self.prec(), -&self.re),
            im: Float::with_val(self.prec(), -&self.im),
            digits: self.digits,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_literals() {
        let z = BigComplex::parse("0.5+14.25i", 20).unwrap();
        assert_eq!(z.to_f64_pair(), (0.5, 14.25));
        let z = BigComplex::parse("-6", 20).unwrap();
        assert_eq!(z.to_f64_pair(), (-6.0, 0.0));
        let z = BigComplex::parse("1e-3-2.5i", 20).unwrap();
        assert_eq!(z.to_f64_pair(), (0.001, -2.5));
        let z = BigComplex::parse("-3i", 20).unwrap();
        assert_eq!(z.to_f64_pair(), (0.0, -3.0));
        let z = BigComplex::parse("2-i", 20).unwrap();
        assert_eq!(z.to_f64_pair(), (2.0, -1.0));
        assert!(BigComplex::parse("abc", 20).is_err());
        assert!(BigComplex::parse("", 20).is_err());
    }

    #[test]
    fn field_operations() {
        let a = BigComplex::from_f64(1.0, 2.0, 30);
        let b = BigComplex::from_f64(3.0, -1.0, 30);
        assert_eq!((&a * &b).to_f64_pair(), (5.0, 5.0));
        let q = &(&a * &b) / &b;
        let (re, im) = q.to_f64_pair();
        assert!((re - 1.0).abs() < 1e-30 && (im - 2.0).abs() < 1e-30);
        assert_eq!((&a - &b).to_f64_pair(), (-2.0, 3.0));
        assert_eq!(a.recip().to_f64_pair(), (0.2, -0.4));
    }

    #[test]
    fn euler_identity() {
        let z = BigComplex::new(Float::new(200), pi(50), 50);
        let e = z.exp();
        assert!((e.re().to_f64() + 1.0).abs() < 1e-40);
        assert!(e.im().to_f64().abs() < 1e-45);
    }

    #[test]
    fn integer_powers() {
        let s = BigComplex::from_f64(2.0, 0.0, 30);
        let (re, im) = s.neg_power_of(4).to_f64_pair();
        assert!((re - 0.0625).abs() < 1e-30 && im == 0.0);
    }

    #[test]
    fn decimal_rendering() {
        let z = BigComplex::from_f64(-0.5, 0.0, 20);
        assert_eq!(z.to_decimal(5), "-5.0000e-1");
        let w = BigComplex::from_f64(1.5, -2.0, 20);
        assert_eq!(w.to_decimal(3), "1.50e0-2.00e0i");
        assert_eq!(BigComplex::zero(20).to_decimal(5), "0");
        let big = BigComplex::from_f64(12.25, 0.0, 20);
        assert_eq!(big.to_decimal(4), "1.225e1");
    }

    #[test]
    fn log10_magnitude() {
        let x = Float::with_val(64, 1000);
        assert!((log10_abs(&x) - 3.0).abs() < 1e-12);
        assert_eq!(log10_abs(&Float::new(64)), f64::NEG_INFINITY);
    }
}
