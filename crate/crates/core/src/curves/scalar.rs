use core::fmt::Debug;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, Rational};
use crate::padic::LocalElement;

/// Coefficient domains for Weierstrass models: exact rationals, number
/// field elements, or p-adic elements with tracked precision.
pub trait Scalar: Clone + Debug {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// The integer `n` in the parent of `self`.
    fn constant(&self, n: i64) -> Self;
    fn inv(&self) -> Result<Self>;
    /// `Ok(false)` for a certified zero, `Ok(true)` for a certified nonzero.
    fn nonzero(&self) -> Result<bool>;

    fn square(&self) -> Self {
        self.mul(self)
    }

    fn scale(&self, n: i64) -> Self {
        self.mul(&self.constant(n))
    }

    fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }
}

impl Scalar for Rational {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn constant(&self, n: i64) -> Self {
        rat(n)
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::InvalidInput("division by zero".into()))
        } else {
            Ok(Rational::one() / self)
        }
    }
    fn nonzero(&self) -> Result<bool> {
        Ok(!self.is_zero())
    }
}

impl Scalar for LocalElement {
    fn add(&self, o: &Self) -> Self {
        LocalElement::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        LocalElement::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        LocalElement::mul(self, o)
    }
    fn neg(&self) -> Self {
        LocalElement::neg(self)
    }
    fn constant(&self, n: i64) -> Self {
        self.field().from_i64(n)
    }
    fn inv(&self) -> Result<Self> {
        LocalElement::inv(self)
    }
    fn nonzero(&self) -> Result<bool> {
        if self.is_certified_nonzero() {
            Ok(true)
        } else if self.is_exact_zero() {
            Ok(false)
        } else {
            Err(Error::PrecisionExhausted("cannot certify a nonzero value"))
        }
    }
}
