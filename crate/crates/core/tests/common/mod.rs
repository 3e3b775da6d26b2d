#![allow(dead_code)]

use rug::float::Constant;
use rug::Float;
use zetacont_core::evalzeta::BigComplex;

/// Real points in [−10.5, 10] away from the pole, then complex points with
/// |Im s| ≤ 20.
pub const GRID: [&str; 25] = [
    "-10.5", "-9.25", "-7.5", "-5", "-3.5", "-2", "-1.25", "-0.5", "0.25", "0.75", "1.5", "2.5", "4", "7",
    "10", "0.5+14.134725i", "0.5+20i", "-2+10i", "3-7i", "-5.5+2i", "-9+1i", "2+20i", "0.5-3i", "-1-20i",
    "6+0.5i",
];

pub fn point(text: &str, digits: u32) -> BigComplex {
    BigComplex::parse(text, digits).expect("grid literal")
}

pub fn distance(a: &BigComplex, b: &BigComplex) -> f64 {
    (a - b).abs_f64()
}

pub fn distance_to_real(a: &BigComplex, x: &Float) -> f64 {
    let re = Float::with_val(a.prec(), a.re() - x);
    re.to_f64().hypot(a.im().to_f64())
}

/// π²/6 from MPFR's π.
pub fn pi_squared_over_six(prec: u32) -> Float {
    let pi = Float::with_val(prec, Constant::Pi);
    Float::with_val(prec, &pi * &pi) / 6u32
}

/// −½·ln(2π) from MPFR's π and logarithm.
pub fn minus_half_ln_two_pi(prec: u32) -> Float {
    let two_pi = Float::with_val(prec, Constant::Pi) * 2u32;
    -two_pi.ln() / 2u32
}
