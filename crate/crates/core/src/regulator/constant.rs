use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::group::{Perm, PermGroup};
use super::linalg;
use super::rep::PairedRepresentation;
use crate::error::{Error, Result};
use crate::exact::int::{squarefree_class, val};
use crate::exact::{rat, Rational};

/// `Σ n_i H_i` with each `H_i` given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GRelation {
    pub group: PermGroup,
    pub terms: Vec<(Vec<Perm>, i64)>,
}

impl GRelation {
    /// `{1} − 2C₂ − C₃ + 2S₃`.
    pub fn s3() -> Self {
        let g = PermGroup::symmetric3();
        let [s, r] = [g.generators[0].clone(), g.generators[1].clone()];
        GRelation {
            terms: alloc::vec![(alloc::vec![], 1), (alloc::vec![s.clone()], -2), (alloc::vec![r.clone()], -1), (alloc::vec![s, r], 2)],
            group: g,
        }
    }

    /// `{1} − 2C₂ − C_p + 2D_2p`.
    pub fn dihedral(p: usize) -> Result<Self> {
        let g = PermGroup::dihedral(p)?;
        let [s, r] = [g.generators[0].clone(), g.generators[1].clone()];
        Ok(GRelation {
            terms: alloc::vec![(alloc::vec![], 1), (alloc::vec![s.clone()], -2), (alloc::vec![r.clone()], -1), (alloc::vec![s, r], 2)],
            group: g,
        })
    }
}

/// Whether `Σ n_i C[G/H_i]` vanishes, compared on permutation characters.
pub fn verify_relation(rel: &GRelation) -> Result<bool> {
    let mut total = alloc::vec![0i64; rel.group.order()];
    for (gens, n) in &rel.terms {
        let h = rel.group.subgroup(gens)?;
        for (t, c) in total.iter_mut().zip(rel.group.permutation_character(&h)) {
            *t += n * c;
        }
    }
    Ok(total.iter().all(|&t| t == 0))
}

/// `C_Θ(ρ)` exactly, its class modulo rational squares and the parity of
/// its `p`-adic valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegulatorConstant {
    pub value: Rational,
    /// Squarefree integer representative of the square class.
    pub square_class: BigInt,
    pub p: u64,
    pub ord_p_odd: bool,
}

/// `∏ det(⟨,⟩/|H_i| on ρ^{H_i})^{n_i}`.
pub fn regulator_constant(rel: &GRelation, rep: &PairedRepresentation, p: u64) -> Result<RegulatorConstant> {
    if rep.group != rel.group {
        return Err(Error::InvalidInput("representation and relation live on different groups".into()));
    }
    if !verify_relation(rel)? {
        return Err(Error::InvalidInput("not a G-relation".into()));
    }
    let mut value = Rational::one();
    for (gens, n) in &rel.terms {
        let h = rel.group.subgroup(gens)?;
        // ρ^H is cut out by ρ(s) − 1 for the generators s of H.
        let mut eqs = Vec::new();
        for s in gens {
            let m = &rep.matrices[rel.group.index_of(s).expect("checked by subgroup")];
            eqs.extend(linalg::sub(m, &linalg::identity(rep.dim)));
        }
        let basis = if eqs.is_empty() { linalg::identity(rep.dim) } else { linalg::kernel(&eqs, rep.dim) };
        let k = linalg::cols(&basis);
        let det = if k == 0 {
            Rational::one()
        } else {
            let gram = linalg::mul(&linalg::mul(&linalg::transpose(&basis), &rep.pairing), &basis);
            linalg::determinant(&linalg::scale(&gram, &(Rational::one() / rat(h.len() as i64))))
        };
        if det.is_zero() {
            return Err(Error::DegenerateRestriction);
        }
        let f = if *n >= 0 { det.clone() } else { Rational::one() / det };
        for _ in 0..n.unsigned_abs() {
            value *= &f;
        }
    }
    Ok(RegulatorConstant { square_class: squarefree_class(&value)?, ord_p_odd: val(&value, p) % 2 != 0, p, value })
}
