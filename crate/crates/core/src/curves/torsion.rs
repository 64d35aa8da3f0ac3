use alloc::vec;
use alloc::vec::Vec;

use super::model::WeierstrassModel;
use crate::error::Result;
use crate::exact::int::is_rational_square;
use crate::exact::{rat, QPoly, Rational};

/// Image of Galois in `S₃` acting on `E[2] \ {O}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaloisType {
    Trivial,
    C2,
    C3,
    S3,
}

/// A Galois orbit of non-trivial 2-torsion points, described by the minimal
/// polynomial of their x-coordinate.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub min_poly: QPoly,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.min_poly.deg()
    }
}

#[derive(Clone, Debug)]
pub struct TwoTorsionData {
    /// Monic 2-division cubic `x³ + Ax² + Bx + C`.
    pub cubic: QPoly,
    pub rational_roots: Vec<Rational>,
    /// Degrees of the irreducible factors, ascending.
    pub pattern: Vec<usize>,
    pub d: usize,
    pub galois: GaloisType,
    pub disc: Rational,
    pub orbits: Vec<Orbit>,
}

/// Classify `Q(E[2])/Q` from the factorisation of the 2-division cubic.
pub fn two_torsion_data(model: &WeierstrassModel<Rational>) -> Result<TwoTorsionData> {
    let [a, b, c] = model.two_division_cubic()?;
    let cubic = QPoly::new(vec![c, b, a, rat(1)]);
    let disc = cubic.discriminant();
    let mut roots = cubic.rational_roots();
    roots.sort();
    roots.dedup();
    let lin = |r: &Rational| QPoly::new(vec![-r.clone(), rat(1)]);
    let (pattern, d, galois, orbits) = match roots.len() {
        3 => (vec![1, 1, 1], 1, GaloisType::Trivial, roots.iter().map(|r| Orbit { min_poly: lin(r) }).collect()),
        1 => {
            let q = cubic.divrem(&lin(&roots[0])).0;
            (vec![1, 2], 2, GaloisType::C2, vec![Orbit { min_poly: lin(&roots[0]) }, Orbit { min_poly: q }])
        }
        _ => {
            let (d, g) = if is_rational_square(&disc) { (3, GaloisType::C3) } else { (6, GaloisType::S3) };
            (vec![3], d, g, vec![Orbit { min_poly: cubic.clone() }])
        }
    };
    Ok(TwoTorsionData { cubic, rational_roots: roots, pattern, d, galois, disc, orbits })
}
