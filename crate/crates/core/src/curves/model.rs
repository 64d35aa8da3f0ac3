use core::fmt;

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassModel<T> {
    pub a1: T,
    pub a2: T,
    pub a3: T,
    pub a4: T,
    pub a6: T,
}

/// The standard quantities derived from a model.
#[derive(Clone, Debug, PartialEq)]
pub struct Invariants<T> {
    pub b2: T,
    pub b4: T,
    pub b6: T,
    pub b8: T,
    pub c4: T,
    pub c6: T,
    pub disc: T,
    pub j: T,
}

impl<T: Scalar> WeierstrassModel<T> {
    /// A nonsingular model; errors with [`Error::Singular`] when `Δ = 0`.
    pub fn new(a1: T, a2: T, a3: T, a4: T, a6: T) -> Result<Self> {
        let m = WeierstrassModel { a1, a2, a3, a4, a6 };
        if !m.discriminant().nonzero()? {
            return Err(Error::Singular);
        }
        Ok(m)
    }

    /// No nonsingularity check; for intermediate models in algorithms.
    pub fn raw(a1: T, a2: T, a3: T, a4: T, a6: T) -> Self {
        WeierstrassModel { a1, a2, a3, a4, a6 }
    }

    /// `y² = x³ + a·x² + b·x + c`.
    pub fn short(a: T, b: T, c: T) -> Result<Self> {
        let z = a.constant(0);
        Self::new(z.clone(), a, z, b, c)
    }

    pub fn coeffs(&self) -> [&T; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> WeierstrassModel<U> {
        WeierstrassModel { a1: f(&self.a1), a2: f(&self.a2), a3: f(&self.a3), a4: f(&self.a4), a6: f(&self.a6) }
    }

    pub fn try_map<U>(&self, f: impl Fn(&T) -> Result<U>) -> Result<WeierstrassModel<U>> {
        Ok(WeierstrassModel { a1: f(&self.a1)?, a2: f(&self.a2)?, a3: f(&self.a3)?, a4: f(&self.a4)?, a6: f(&self.a6)? })
    }

    pub fn b_invariants(&self) -> (T, T, T, T) {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let b2 = a1.square().add(&a2.scale(4));
        let b4 = a4.scale(2).add(&a1.mul(a3));
        let b6 = a3.square().add(&a6.scale(4));
        let b8 = a1.square().mul(a6).add(&a2.mul(a6).scale(4)).sub(&a1.mul(a3).mul(a4)).add(&a2.mul(&a3.square())).sub(&a4.square());
        (b2, b4, b6, b8)
    }

    pub fn c_invariants(&self) -> (T, T) {
        let (b2, b4, b6, _) = self.b_invariants();
        let c4 = b2.square().sub(&b4.scale(24));
        let c6 = b2.square().mul(&b2).neg().add(&b2.mul(&b4).scale(36)).sub(&b6.scale(216));
        (c4, c6)
    }

    pub fn discriminant(&self) -> T {
        let (b2, b4, b6, b8) = self.b_invariants();
        b2.square().mul(&b8).neg().sub(&b4.square().mul(&b4).scale(8)).sub(&b6.square().scale(27)).add(&b2.mul(&b4).mul(&b6).scale(9))
    }

    pub fn invariants(&self) -> Result<Invariants<T>> {
        let (b2, b4, b6, b8) = self.b_invariants();
        let (c4, c6) = self.c_invariants();
        let disc = self.discriminant();
        if !disc.nonzero()? {
            return Err(Error::Singular);
        }
        let j = c4.square().mul(&c4).div(&disc)?;
        Ok(Invariants { b2, b4, b6, b8, c4, c6, disc, j })
    }

    /// Substitute `x = u²x' + r`, `y = u³y' + u²s·x' + t`.
    pub fn transform(&self, u: &T, r: &T, s: &T, t: &T) -> Result<Self> {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let ui = u.inv()?;
        let u2 = ui.square();
        let u3 = u2.mul(&ui);
        let u4 = u2.square();
        let u6 = u3.square();
        let n1 = a1.add(&s.scale(2));
        let n2 = a2.sub(&s.mul(a1)).add(&r.scale(3)).sub(&s.square());
        let n3 = a3.add(&r.mul(a1)).add(&t.scale(2));
        let n4 =
            a4.sub(&s.mul(a3)).add(&r.mul(a2).scale(2)).sub(&t.add(&r.mul(s)).mul(a1)).add(&r.square().scale(3)).sub(&s.mul(t).scale(2));
        let n6 =
            a6.add(&r.mul(a4)).add(&r.square().mul(a2)).add(&r.square().mul(r)).sub(&t.mul(a3)).sub(&t.square()).sub(&r.mul(t).mul(a1));
        Ok(WeierstrassModel { a1: n1.mul(&ui), a2: n2.mul(&u2), a3: n3.mul(&u3), a4: n4.mul(&u4), a6: n6.mul(&u6) })
    }

    /// `y² = x³ + (b2/4)x² + (b4/2)x + b6/4`, reached by `y ↦ y − (a1x + a3)/2`.
    pub fn simplified(&self) -> Result<Self> {
        let one = self.a1.constant(1);
        let zero = self.a1.constant(0);
        let half = one.scale(2).inv()?;
        let s = self.a1.mul(&half).neg();
        let t = self.a3.mul(&half).neg();
        self.transform(&one, &zero, &s, &t)
    }

    /// Coefficients `(A, B, C)` of the monic 2-division cubic
    /// `x³ + A x² + B x + C` whose roots are the x-coordinates of `E[2]`.
    pub fn two_division_cubic(&self) -> Result<[T; 3]> {
        let (b2, b4, b6, _) = self.b_invariants();
        let q = self.a1.constant(4).inv()?;
        let h = self.a1.constant(2).inv()?;
        Ok([b2.mul(&q), b4.mul(&h), b6.mul(&q)])
    }
}

/// Twist of a model by `r`: on `y² = x³ + ax² + bx + c` this is
/// `y² = x³ + r·a x² + r²·b x + r³·c`. Other models are simplified first.
pub fn quadratic_twist<T: Scalar>(model: &WeierstrassModel<T>, r: &T) -> Result<WeierstrassModel<T>> {
    if !r.nonzero()? {
        return Err(Error::InvalidInput("twist by zero".into()));
    }
    let m = model.simplified()?;
    let r2 = r.square();
    WeierstrassModel::new(m.a1.clone(), m.a2.mul(r), m.a3.clone(), m.a4.mul(&r2), m.a6.mul(&r2.mul(r)))
}

/// For a root `r` of `f = x³ + A x² + B x + C`, the pair `(a_r, b_r)` with
/// `f(x + r) = x³ + a_r x² + b_r x`.
pub fn kernel_translate<T: Scalar>(f: &[T; 3], r: &T) -> Result<(T, T)> {
    let [a, b, c] = f;
    let val = r.square().mul(r).add(&a.mul(&r.square())).add(&b.mul(r)).add(c);
    if val.nonzero().unwrap_or(false) {
        return Err(Error::NotARoot);
    }
    let ar = r.scale(3).add(a);
    let br = r.square().scale(3).add(&a.mul(r).scale(2)).add(b);
    Ok((ar, br))
}

impl<T: fmt::Display> fmt::Display for WeierstrassModel<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}, {}]", self.a1, self.a2, self.a3, self.a4, self.a6)
    }
}
