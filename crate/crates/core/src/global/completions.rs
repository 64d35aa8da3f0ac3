//! Completions of the 2-torsion lattice at one rational prime, built as
//! towers so the x-coordinate of `P` is available in every completion.

use alloc::vec;
use alloc::vec::Vec;

use super::field::SplittingData;
use crate::curves::{kernel_translate, TwoIsogeny, WeierstrassModel};
use crate::error::Result;
use crate::exact::Rational;
use crate::padic::{factor_over, factor_over_qp, LocalElement, LocalField};
use crate::tate::base_change;

/// A completion together with the image of `x(P)` in it (when `P` is
/// defined over the field being completed).
#[derive(Clone, Debug)]
pub struct Completion {
    pub field: LocalField,
    pub point: Option<LocalElement>,
}

impl Completion {
    /// The model `E` over this completion.
    pub fn curve(&self, sd: &SplittingData) -> WeierstrassModel<LocalElement> {
        base_change(&sd.simplified, &self.field)
    }

    /// `E/⟨P⟩` over this completion.
    pub fn isogeny(&self, sd: &SplittingData) -> Result<TwoIsogeny<LocalElement>> {
        let r = self.point.as_ref().expect("P is defined over this completion");
        let cubic = sd.cubic.clone().map(|c| self.field.from_rational(&c));
        let (a, b) = kernel_translate(&cubic, r)?;
        TwoIsogeny::new(a, b)
    }
}

/// Every completion of `K`, `M`, `L` and `F` above `p`.
#[derive(Clone, Debug)]
pub struct PrimeCompletions {
    pub p: u64,
    pub k: Completion,
    pub m: Vec<Completion>,
    pub l: Vec<Completion>,
    pub f: Vec<Completion>,
}

pub fn prime_completions(sd: &SplittingData, p: u64, digits: u32) -> Result<PrimeCompletions> {
    let qp = LocalField::qp(p, digits);
    let at = |field: &LocalField, r: &Rational| Completion { field: field.clone(), point: Some(field.from_rational(r)) };
    let k = Completion { field: qp.clone(), point: sd.point.as_ref().map(|r| qp.from_rational(r)) };
    let m = match &sd.m {
        Some(m) => factor_over_qp(&m.poly, p, digits)?.into_iter().map(|c| Completion { field: c.field, point: None }).collect(),
        None => Vec::new(),
    };
    let (l, f) = match (sd.d, &sd.point) {
        (1, Some(r)) => (vec![at(&qp, r)], vec![at(&qp, r)]),
        (2, Some(r)) => {
            let q = sd.quadratic_factor.as_ref().expect("d = 2 has a quadratic factor");
            let f = factor_over_qp(q, p, digits)?.into_iter().map(|c| at(&c.field, r)).collect();
            (vec![at(&qp, r)], f)
        }
        _ => {
            let comps = factor_over_qp(&sd.point_poly, p, digits)?;
            let l: Vec<Completion> = comps.iter().map(|c| Completion { field: c.field.clone(), point: Some(c.root.clone()) }).collect();
            if sd.d == 3 {
                (l.clone(), l)
            } else {
                let [a, b, _] = sd.cubic.clone();
                let mut f = Vec::new();
                for c in &comps {
                    // x³ + Ax² + Bx + C = (x − r)(x² + sx + t) over L_w.
                    let lw = &c.field;
                    let s = lw.from_rational(&a).add(&c.root);
                    let t = lw.from_rational(&b).add(&c.root.mul(&s));
                    for q in factor_over(lw, &[t, s, lw.one()])? {
                        f.push(Completion { field: q.field.clone(), point: Some(q.embedding.apply(&c.root)) });
                    }
                }
                (l, f)
            }
        }
    };
    Ok(PrimeCompletions { p, k, m, l, f })
}
