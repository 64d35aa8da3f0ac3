use super::model::WeierstrassModel;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// The 2-isogeny `y² = x³ + ax² + bx → y² = x³ − 2ax² + (a² − 4b)x`
/// with kernel `{O, (0,0)}`.
///
/// Pulling back `dx/y` on the codomain gives `dx/y` on the domain, so
/// C-ratios built from `dx/y` on both models are ratios for a compatible
/// pair of differentials.
#[derive(Clone, Debug)]
pub struct TwoIsogeny<T> {
    pub a: T,
    pub b: T,
    pub domain: WeierstrassModel<T>,
    pub codomain: WeierstrassModel<T>,
}

impl<T: Scalar> TwoIsogeny<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        let disc = a.square().sub(&b.scale(4));
        if !b.nonzero()? || !disc.nonzero()? {
            return Err(Error::Singular);
        }
        let z = a.constant(0);
        let domain = WeierstrassModel::short(a.clone(), b.clone(), z.clone())?;
        let codomain = WeierstrassModel::short(a.scale(-2), disc, z)?;
        Ok(TwoIsogeny { a, b, domain, codomain })
    }

    /// `(x, y) ↦ (x + a + b/x, y − b·y/x²)`; `None` for the kernel.
    pub fn map_point(&self, x: &T, y: &T) -> Result<Option<(T, T)>> {
        if !x.nonzero()? {
            return Ok(None);
        }
        let xi = x.inv()?;
        let nx = x.add(&self.a).add(&self.b.mul(&xi));
        let ny = y.sub(&self.b.mul(y).mul(&xi.square()));
        Ok(Some((nx, ny)))
    }

    /// The dual direction, `E' → E''` with `E''` isomorphic to the domain
    /// via `(x, y) ↦ (x/4, y/8)`.
    pub fn dual(&self) -> Result<TwoIsogeny<T>> {
        TwoIsogeny::new(self.a.scale(-2), self.a.square().sub(&self.b.scale(4)))
    }

    /// `a² − 4b`, the class of the kernel of the dual.
    pub fn codomain_b(&self) -> T {
        self.a.square().sub(&self.b.scale(4))
    }
}

/// Domain `y² = x³ + a(x − b)²` and codomain
/// `y² = x³ + ax² + 18abx + ab(16a − 27b)` of the 3-isogeny whose kernel is
/// generated by `(0, ±b√a)`.
pub fn three_isogeny<T: Scalar>(a: &T, b: &T) -> Result<(WeierstrassModel<T>, WeierstrassModel<T>)> {
    let ab = a.mul(b);
    if !ab.mul(&a.scale(4).add(&b.scale(27))).nonzero()? {
        return Err(Error::Singular);
    }
    let domain = WeierstrassModel::short(a.clone(), ab.scale(-2), ab.mul(b))?;
    let codomain = WeierstrassModel::short(a.clone(), ab.scale(18), ab.mul(&a.scale(16).sub(&b.scale(27))))?;
    Ok((domain, codomain))
}
