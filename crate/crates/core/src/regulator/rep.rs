use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand_core::RngCore;

use super::group::{compose, PermGroup};
use super::linalg::{self, Matrix};
use crate::error::{Error, Result};
use crate::exact::{rat, Rational};

/// A rational representation with a non-degenerate invariant symmetric
/// pairing. `matrices[i]` is the image of the `i`-th group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedRepresentation {
    pub group: PermGroup,
    pub dim: usize,
    pub matrices: Vec<Matrix>,
    pub pairing: Matrix,
}

fn square(m: &Matrix, n: usize) -> bool {
    m.len() == n && m.iter().all(|r| r.len() == n)
}

impl PairedRepresentation {
    /// Extend generator images to the whole group, checking that they
    /// define a homomorphism and that `pairing` is invariant, symmetric
    /// and non-degenerate.
    pub fn new(group: &PermGroup, images: Vec<Matrix>, pairing: Matrix) -> Result<Self> {
        let dim = pairing.len();
        if images.len() != group.generators.len() || !square(&pairing, dim) || images.iter().any(|m| !square(m, dim)) {
            return Err(Error::InvalidInput(format!("need {} square matrices of size {dim}", group.generators.len())));
        }
        let mut matrices: Vec<Option<Matrix>> = alloc::vec![None; group.order()];
        matrices[0] = Some(linalg::identity(dim));
        // Elements are listed in BFS order over right multiplication by
        // generators, so every edge g → gs is visited once g is known.
        for i in 0..group.order() {
            let g = group.elements()[i].clone();
            let mg = matrices[i].clone().expect("BFS order reaches g before its successors");
            for (s, ms) in group.generators.iter().zip(&images) {
                let j = group.index_of(&compose(&g, s)).expect("closed under generators");
                let m = linalg::mul(&mg, ms);
                match &matrices[j] {
                    Some(existing) if *existing != m => {
                        return Err(Error::InvalidInput("generator images violate the group relations".into()))
                    }
                    Some(_) => {}
                    None => matrices[j] = Some(m),
                }
            }
        }
        let rep = PairedRepresentation { group: group.clone(), dim, matrices: matrices.into_iter().map(Option::unwrap).collect(), pairing };
        rep.check_pairing(&rep.pairing)?;
        Ok(rep)
    }

    fn check_pairing(&self, p: &Matrix) -> Result<()> {
        if *p != linalg::transpose(p) {
            return Err(Error::InvalidInput("pairing is not symmetric".into()));
        }
        if self.dim > 0 && linalg::determinant(p).is_zero() {
            return Err(Error::InvalidInput("pairing is degenerate".into()));
        }
        for s in &self.group.generators {
            let m = &self.matrices[self.group.index_of(s).expect("generator")];
            if linalg::mul(&linalg::mul(&linalg::transpose(m), p), m) != *p {
                return Err(Error::InvalidInput("pairing is not invariant".into()));
            }
        }
        Ok(())
    }

    /// The same representation with another invariant pairing.
    pub fn with_pairing(&self, pairing: Matrix) -> Result<Self> {
        if !square(&pairing, self.dim) {
            return Err(Error::InvalidInput("pairing has the wrong size".into()));
        }
        self.check_pairing(&pairing)?;
        Ok(PairedRepresentation { pairing, ..self.clone() })
    }

    /// `Σ_g ρ(g)ᵀ Q ρ(g)` for a random positive definite integral `Q`,
    /// which is invariant and positive definite.
    pub fn random_invariant_pairing(&self, rng: &mut impl RngCore) -> Matrix {
        let n = self.dim;
        let a: Matrix = (0..n).map(|_| (0..n).map(|_| rat((rng.next_u32() % 11) as i64 - 5)).collect()).collect();
        let q = linalg::add(&linalg::mul(&linalg::transpose(&a), &a), &linalg::identity(n));
        self.matrices.iter().fold(linalg::zeros(n, n), |acc, m| linalg::add(&acc, &linalg::mul(&linalg::mul(&linalg::transpose(m), &q), m)))
    }

    /// The trivial one-dimensional representation.
    pub fn trivial(group: &PermGroup) -> Self {
        Self::one_dimensional(group, &alloc::vec![1; group.generators.len()]).expect("trivial character")
    }

    /// A one-dimensional representation with generator images `±1`.
    pub fn one_dimensional(group: &PermGroup, signs: &[i64]) -> Result<Self> {
        if signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::InvalidInput("one-dimensional rational images must be ±1".into()));
        }
        let images = signs.iter().map(|&s| alloc::vec![alloc::vec![rat(s)]]).collect();
        Self::new(group, images, alloc::vec![alloc::vec![Rational::one()]])
    }

    /// The permutation representation on the acted-on points modulo the
    /// trivial summand, in the basis `e_i − e_{n−1}`, with the restricted
    /// dot product.
    pub fn standard(group: &PermGroup) -> Result<Self> {
        let n = group.degree;
        if n < 2 {
            return Err(Error::InvalidInput("standard representation needs at least two points".into()));
        }
        let last = n - 1;
        let images = group
            .generators
            .iter()
            .map(|g| {
                let mut m = linalg::zeros(last, last);
                for i in 0..last {
                    if g[i] != last {
                        m[g[i]][i] += Rational::one();
                    }
                    if g[last] != last {
                        m[g[last]][i] -= Rational::one();
                    }
                }
                m
            })
            .collect();
        let pairing = (0..last).map(|i| (0..last).map(|j| rat(1 + (i == j) as i64)).collect()).collect();
        Self::new(group, images, pairing)
    }

    /// `ρ ⊕ ρ'` with the orthogonal sum of the pairings.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::InvalidInput("representations of different groups".into()));
        }
        Ok(PairedRepresentation {
            group: self.group.clone(),
            dim: self.dim + other.dim,
            matrices: self.matrices.iter().zip(&other.matrices).map(|(a, b)| linalg::block(a, b)).collect(),
            pairing: linalg::block(&self.pairing, &other.pairing),
        })
    }

    /// Traces, indexed like the group elements.
    pub fn character(&self) -> Vec<Rational> {
        self.matrices.iter().map(|m| (0..self.dim).fold(Rational::zero(), |acc, i| acc + &m[i][i])).collect()
    }
}
