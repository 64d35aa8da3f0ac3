use num_traits::{Signed, Zero};

use super::local::{archimedean_root_number, dx_over_y, local_root_number};
use super::parity;
use crate::curves::real::sign;
use crate::curves::{quadratic_twist, WeierstrassModel};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::padic::{factor_over, hilbert_real, hilbert_symbol, is_square, LocalElement};

/// `κ(E, K(√r)/K)`, the parity of `dim E(K)/N E(K(√r))`.
///
/// Trivial extensions give `1`. Proper extensions need odd residue
/// characteristic, where the norm index is read off C-values of `E`, its
/// twist `E_r` and `E/K(√r)`, all with `dx/y` on simplified models.
pub fn kappa(model: &WeierstrassModel<LocalElement>, r: &LocalElement) -> Result<i32> {
    if is_square(r)? {
        return Ok(1);
    }
    let k = r.field().clone();
    if k.p() == 2 {
        return Err(Error::Unsupported("norm index for a proper quadratic extension in residue characteristic 2"));
    }
    let simple = model.simplified()?;
    let twist = quadratic_twist(&simple, r)?;
    let comps = factor_over(&k, &[r.neg(), k.zero(), k.one()])?;
    let ext = &comps[0];
    let over_f = simple.map(|c| ext.embedding.apply(c));
    Ok(parity(dx_over_y(&simple)?.ord2 + dx_over_y(&twist)?.ord2 - dx_over_y(&over_f)?.ord2))
}

/// `κ(E, K(√r)/K)` at a real place: `−1` iff `r < 0` and `E(R)` has two
/// components, the norm image being the identity component.
pub fn kappa_real(model: &WeierstrassModel<Rational>, r: &Rational) -> Result<i32> {
    if r.is_zero() {
        return Err(Error::InvalidInput("twist by zero".into()));
    }
    let disc = model.discriminant();
    Ok(if r.is_negative() && disc.is_positive() { -1 } else { 1 })
}

/// Both sides of `w(E/K) w(E_r/K) (−Δ, r)_K = κ(E, K(√r)/K)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KtCheck {
    pub w: i32,
    pub w_twist: i32,
    pub symbol: i32,
    pub kappa: i32,
}

impl KtCheck {
    pub fn lhs(&self) -> i32 {
        self.w * self.w_twist * self.symbol
    }

    pub fn holds(&self) -> bool {
        self.lhs() == self.kappa
    }
}

/// The twisted root number is taken as `w(E_r/K)`.
pub fn kt_identity_check(model: &WeierstrassModel<LocalElement>, r: &LocalElement) -> Result<KtCheck> {
    let kappa = kappa(model, r)?;
    let twist = quadratic_twist(model, r)?;
    Ok(KtCheck {
        w: local_root_number(model)?,
        w_twist: local_root_number(&twist)?,
        symbol: hilbert_symbol(&model.discriminant().neg(), r)? as i32,
        kappa,
    })
}

pub fn kt_identity_real(model: &WeierstrassModel<Rational>, r: &Rational) -> Result<KtCheck> {
    let kappa = kappa_real(model, r)?;
    let w = archimedean_root_number();
    let symbol = hilbert_real(-sign(&model.discriminant()), sign(r)) as i32;
    Ok(KtCheck { w, w_twist: w, symbol, kappa })
}
