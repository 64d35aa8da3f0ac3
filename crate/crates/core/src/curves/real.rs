//! Real places. Everything is decided from exact signs, so callers holding
//! real algebraic numbers only need a sign oracle.

use num_traits::{Signed, Zero};

use super::model::WeierstrassModel;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Number of connected components of `E(R)` given the sign of `Δ`.
pub fn component_count(sign_disc: i8) -> u32 {
    if sign_disc > 0 {
        2
    } else {
        1
    }
}

/// Whether `y² = x³ + ax² + bx → y² = x³ − 2ax² + (a² − 4b)x` is onto on
/// real points, from the signs of `a`, `b` and `a² − 4b`.
///
/// The connecting map sends `E'(R)` to `R*/R*²` by `(x, y) ↦ x` and
/// `(0, 0) ↦ a² − 4b`; the cokernel is trivial exactly when no negative
/// class is hit.
pub fn two_isogeny_surjective(sign_a: i8, sign_b: i8, sign_disc: i8) -> bool {
    sign_disc > 0 && (sign_b < 0 || sign_a > 0)
}

/// `σ` of a real 2-isogeny: `#coker/#ker` is `1/2` when onto, else `1`.
pub fn sigma_real(sign_a: i8, sign_b: i8, sign_disc: i8) -> i32 {
    if two_isogeny_surjective(sign_a, sign_b, sign_disc) {
        -1
    } else {
        1
    }
}

/// Components of `E(R)` and, when `(a, b)` is given, surjectivity of the
/// 2-isogeny it defines.
pub fn real_analysis(model: &WeierstrassModel<Rational>, isogeny: Option<(&Rational, &Rational)>) -> Result<(u32, Option<bool>)> {
    let disc = model.discriminant();
    if disc.is_zero() {
        return Err(Error::Singular);
    }
    let comps = component_count(sign(&disc));
    let surj = isogeny.map(|(a, b)| {
        let d = a * a - b * Rational::from_integer(4.into());
        two_isogeny_surjective(sign(a), sign(b), sign(&d))
    });
    Ok((comps, surj))
}

pub fn sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
