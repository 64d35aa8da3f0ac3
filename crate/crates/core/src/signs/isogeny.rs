use super::local::{dx_over_y, local_root_number};
use super::parity;
use super::symbols::h_symbol;
use crate::curves::{three_isogeny, TwoIsogeny};
use crate::error::{Error, Result};
use crate::padic::{hilbert_symbol, LocalElement};

/// `σ_φ = (−1)^{ord_2 C(E'/K)/C(E/K)}` with `dx/y` on both sides, which
/// `φ` pulls back to each other.
pub fn sigma_two_isogeny(phi: &TwoIsogeny<LocalElement>) -> Result<i32> {
    Ok(parity(dx_over_y(&phi.codomain)?.ord2 - dx_over_y(&phi.domain)?.ord2))
}

/// `σ_φ` for the 3-isogeny out of `y² = x³ + a(x − b)²`.
pub fn sigma_three_isogeny(a: &LocalElement, b: &LocalElement) -> Result<i32> {
    let (dom, cod) = three_isogeny(a, b)?;
    Ok(parity(dx_over_y(&cod)?.ord3 - dx_over_y(&dom)?.ord3))
}

/// Both sides of `w(E/K) = σ_φ · (symbol)` for an explicit isogeny.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsogenyCheck {
    pub w: i32,
    pub sigma: i32,
    pub symbol: i32,
}

impl IsogenyCheck {
    pub fn rhs(&self) -> i32 {
        self.sigma * self.symbol
    }

    pub fn holds(&self) -> bool {
        self.w == self.rhs()
    }
}

/// `p = 2`: `E: y² = x³ + ax² + bx` with the isogeny symbol `h(a, b)`.
/// `p = 3`: `E: y² = x³ + a(x − b)²` with `(−1, K(√a)/K) = (−1, a)_K`,
/// the kernel points being `(0, ±b√a)`.
pub fn isogeny_formula_check(a: &LocalElement, b: &LocalElement, p: u64) -> Result<IsogenyCheck> {
    match p {
        2 => {
            let phi = TwoIsogeny::new(a.clone(), b.clone())?;
            Ok(IsogenyCheck { w: local_root_number(&phi.domain)?, sigma: sigma_two_isogeny(&phi)?, symbol: h_symbol(a, b)? as i32 })
        }
        3 => {
            let (dom, _) = three_isogeny(a, b)?;
            let minus_one = a.field().from_i64(-1);
            Ok(IsogenyCheck {
                w: local_root_number(&dom)?,
                sigma: sigma_three_isogeny(a, b)?,
                symbol: hilbert_symbol(&minus_one, a)? as i32,
            })
        }
        _ => Err(Error::Unsupported("isogeny degree other than 2 or 3")),
    }
}
