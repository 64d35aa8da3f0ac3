//! Weierstrass models over any coefficient domain, twists, 2-torsion data
//! and the explicit 2- and 3-isogenies.

mod isogeny;
mod model;
pub mod real;
mod scalar;
mod torsion;

pub use isogeny::{three_isogeny, TwoIsogeny};
pub use model::{kernel_translate, quadratic_twist, Invariants, WeierstrassModel};
pub use scalar::Scalar;
pub use torsion::{two_torsion_data, GaloisType, Orbit, TwoTorsionData};

use crate::error::Result;
use crate::exact::{rat, Rational};

/// A rational model from integer coefficients.
pub fn from_ints(a: [i64; 5]) -> Result<WeierstrassModel<Rational>> {
    WeierstrassModel::new(rat(a[0]), rat(a[1]), rat(a[2]), rat(a[3]), rat(a[4]))
}
