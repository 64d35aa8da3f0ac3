use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::int::is_prime_u64;

/// A permutation of `{0, …, n − 1}`, `p[i]` being the image of `i`.
pub type Perm = Vec<usize>;

/// `a ∘ b`: apply `b`, then `a`.
pub fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse(a: &Perm) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

fn identity(n: usize) -> Perm {
    (0..n).collect()
}

fn is_permutation(p: &Perm, n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n && p.iter().all(|&i| i < n && !core::mem::replace(&mut seen[i], true))
}

/// Closure of `gens` under composition, identity first, in BFS order.
fn closure(n: usize, gens: &[Perm]) -> Vec<Perm> {
    let mut elems = vec![identity(n)];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let h = compose(&elems[i], g);
            if !elems.contains(&h) {
                elems.push(h);
            }
        }
        i += 1;
    }
    elems
}

const MAX_ORDER: usize = 720;

/// A finite group given by permutation generators, with its elements
/// listed once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    pub name: alloc::string::String,
    pub degree: usize,
    pub generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: BTreeMap<Perm, usize>,
}

impl PermGroup {
    pub fn new(name: &str, degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if generators.iter().any(|g| !is_permutation(g, degree)) {
            return Err(Error::InvalidInput(format!("{name}: generators are not permutations of {degree} points")));
        }
        let elements = closure(degree, &generators);
        if elements.len() > MAX_ORDER {
            return Err(Error::Unsupported("groups of order above 720"));
        }
        let index = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        Ok(PermGroup { name: name.into(), degree, generators, elements, index })
    }

    /// `S3` on three points, generated by `(0 1)` and `(0 1 2)`.
    pub fn symmetric3() -> Self {
        Self::new("S3", 3, vec![vec![1, 0, 2], vec![1, 2, 0]]).expect("valid generators")
    }

    /// `D_2p` acting on `Z/p`, generated by `i ↦ −i` and `i ↦ i + 1`.
    pub fn dihedral(p: usize) -> Result<Self> {
        if p < 3 || p > 13 || !is_prime_u64(p as u64) {
            return Err(Error::Unsupported("dihedral groups D_2p need an odd prime p ≤ 13"));
        }
        let s = (0..p).map(|i| (p - i) % p).collect();
        let r = (0..p).map(|i| (i + 1) % p).collect();
        Self::new(&format!("D{}", 2 * p), p, vec![s, r])
    }

    /// `C_n` acting on `Z/n` by translation.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("cyclic group of order 0".into()));
        }
        Self::new(&format!("C{n}"), n, vec![(0..n).map(|i| (i + 1) % n).collect()])
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// The subgroup generated by `gens`, as sorted element indices.
    pub fn subgroup(&self, gens: &[Perm]) -> Result<Vec<usize>> {
        if gens.iter().any(|g| self.index_of(g).is_none()) {
            return Err(Error::MalformedSubgroup);
        }
        let mut idx: Vec<usize> = closure(self.degree, gens).iter().map(|g| self.index[g]).collect();
        idx.sort_unstable();
        Ok(idx)
    }

    /// Character of `C[G/H]`: `g ↦ #{xH : gxH = xH}`.
    pub fn permutation_character(&self, h: &[usize]) -> Vec<i64> {
        let in_h: Vec<bool> = (0..self.order()).map(|i| h.binary_search(&i).is_ok()).collect();
        self.elements
            .iter()
            .map(|g| {
                let fixed = self.elements.iter().filter(|x| in_h[self.index[&compose(&inverse(x), &compose(g, x))]]).count();
                (fixed / h.len()) as i64
            })
            .collect()
    }
}
