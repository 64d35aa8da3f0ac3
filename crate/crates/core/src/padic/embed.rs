use alloc::vec::Vec;

use num_traits::Zero;

use super::field::{LocalElement, LocalField, Repr};

/// A field embedding `K → L`, fixed by the images of `ζ_K` and `π_K`.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub src: LocalField,
    pub dst: LocalField,
    zeta_pows: Vec<LocalElement>,
    pi_pows: Vec<LocalElement>,
}

impl Embedding {
    pub fn new(src: &LocalField, dst: &LocalField, zeta: LocalElement, pi: LocalElement) -> Embedding {
        let mut zeta_pows = alloc::vec![dst.one()];
        for _ in 1..src.f() {
            let next = zeta_pows.last().unwrap().mul(&zeta);
            zeta_pows.push(next);
        }
        let mut pi_pows = alloc::vec![dst.one()];
        for _ in 1..src.e() {
            let next = pi_pows.last().unwrap().mul(&pi);
            pi_pows.push(next);
        }
        Embedding { src: src.clone(), dst: dst.clone(), zeta_pows, pi_pows }
    }

    pub fn identity(k: &LocalField) -> Embedding {
        Embedding::new(k, k, k.zeta(), k.uniformizer())
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst
    }

    /// Relative degree `[L:K]`.
    pub fn degree(&self) -> usize {
        self.dst.degree() / self.src.degree()
    }

    pub fn apply(&self, x: &LocalElement) -> LocalElement {
        if self.is_identity() {
            return x.clone();
        }
        let ratio = (self.dst.e() / self.src.e()) as i64;
        match &x.repr {
            Repr::Zero(None) => self.dst.zero(),
            Repr::Zero(Some(k)) => self.dst.zero_to(k * ratio),
            Repr::Val { shift, c, digits } => {
                let f = self.src.f();
                let mut acc = self.dst.zero();
                for (j, pj) in self.pi_pows.iter().enumerate() {
                    let mut inner = self.dst.zero();
                    for (a, za) in self.zeta_pows.iter().enumerate() {
                        let coef = &c[a + f * j];
                        if coef.is_zero() {
                            continue;
                        }
                        inner = inner.add(&self.dst.from_int(coef).mul(za));
                    }
                    if !inner.is_exact_zero() {
                        acc = acc.add(&inner.mul(pj));
                    }
                }
                let acc = acc.truncate_abs(self.dst.e() as i64 * *digits as i64);
                let pp = crate::exact::rat(self.src.p() as i64);
                let scale =
                    if *shift >= 0 { num_traits::pow(pp, *shift as usize) } else { num_traits::pow(pp, (-*shift) as usize).recip() };
                acc.mul(&self.dst.from_rational(&scale))
            }
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Embedding) -> Embedding {
        let zeta = if self.src.f() > 1 { next.apply(&self.zeta_pows[1]) } else { next.dst.zero() };
        let pi = if self.src.e() > 1 { next.apply(&self.pi_pows[1]) } else { next.dst.from_i64(self.src.p() as i64) };
        Embedding::new(&self.src, &next.dst, zeta, pi)
    }
}
