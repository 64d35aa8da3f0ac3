//! Exact arithmetic: big integers and rationals, valuations, polynomials over
//! Q and finite fields.

pub mod ff;
pub mod int;
pub mod poly;

use num_bigint::BigInt;

pub use ff::{ff_is_square, FiniteField, FiniteFieldElement, Fq, FqPoly};
pub use int::{valuation, ExtInt};
pub use poly::{QPoly, RealRoot};

/// Exact rational numbers, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}
