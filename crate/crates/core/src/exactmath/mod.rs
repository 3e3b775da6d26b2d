//! Exact rational arithmetic, dense polynomials over ℚ, Bernoulli numbers
//! and Faulhaber power-sum polynomials.

mod bernoulli;
mod polynomial;
mod rational;

pub use bernoulli::{bernoulli, faulhaber, BernoulliCache};
pub use polynomial::Polynomial;
pub use rational::{binomial, factorial, format_rational, int, parse_decimal, parse_rational, rat, to_f64, Rational};

/// Returns `Q` with `Q(x) = P(x + c)`.
pub fn shift(p: &Polynomial, c: &Rational) -> Polynomial {
    p.shift(c)
}

/// Returns `H` with `H' = P` and `H(0) = 0`.
pub fn antiderivative_zero_at_origin(p: &Polynomial) -> Polynomial {
    p.antiderivative_zero_at_origin()
}
