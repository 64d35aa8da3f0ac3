use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::embed::Embedding;
use super::field::{LocalElement, Repr};
use super::linalg::inverse_mod;
use crate::error::{Error, Result};
use crate::exact::int::pow_u64;

const LOST: &str = "norm computation ran out of precision";

/// `N_{E/K}(x)` for `x ∈ E`, where `emb: K → E`.
pub fn norm_to_base(x: &LocalElement, emb: &Embedding) -> Result<LocalElement> {
    let (k, big) = (&emb.src, &emb.dst);
    if emb.is_identity() {
        return Ok(x.clone());
    }
    if x.is_exact_zero() {
        return Ok(k.zero());
    }
    let fr = big.f() / k.f();
    let er = big.e() / k.e();
    let r = fr * er;
    let zeta = big.zeta();
    let pi = big.uniformizer();
    let mut rel = Vec::with_capacity(r);
    for j in 0..er {
        for a in 0..fr {
            rel.push(zeta.pow(a as u32).mul(&pi.pow(j as u32)));
        }
    }
    // Z_p-basis of O_E: (ζ_K^a π_K^j) · β_b, ordered with b outer.
    let (zk, pk) = (k.zeta(), k.uniformizer());
    let mut kbasis = Vec::with_capacity(k.degree());
    for j in 0..k.e() {
        for a in 0..k.f() {
            kbasis.push(zk.pow(a as u32).mul(&pk.pow(j as u32)));
        }
    }
    let kimg: Vec<LocalElement> = kbasis.iter().map(|b| emb.apply(b)).collect();
    let digits = big.digits();
    let m = pow_u64(big.p(), digits);
    let n = big.degree();
    let mut rows = Vec::with_capacity(n);
    for b in &rel {
        for ki in &kimg {
            rows.push(integral_vector(&ki.mul(b), n, &m)?);
        }
    }
    let ginv = inverse_mod(&rows, big.p(), &m).ok_or(Error::PrecisionExhausted(LOST))?;
    let nk = k.degree();
    let express = |y: &LocalElement| -> Result<Vec<LocalElement>> {
        let Repr::Val { shift, c, digits: d } = &y.repr else {
            return Ok((0..r).map(|_| k.zero_to(y.abs_prec().unwrap_or(i64::MAX) / er as i64)).collect());
        };
        let mut out = Vec::with_capacity(r);
        for b in 0..r {
            let mut acc = k.zero();
            for (t, kb) in kbasis.iter().enumerate() {
                let mut s = BigInt::zero();
                for (i, ci) in c.iter().enumerate() {
                    s += ci * &ginv[i][b * nk + t];
                }
                let s = s.mod_floor(&m);
                if !s.is_zero() {
                    acc = acc.add(&k.from_int(&s).mul(kb));
                }
            }
            let acc = acc.truncate_abs(k.e() as i64 * *d as i64);
            let pp = crate::exact::rat(big.p() as i64);
            let sc = if *shift >= 0 { num_traits::pow(pp, *shift as usize) } else { num_traits::pow(pp, (-*shift) as usize).recip() };
            out.push(acc.mul(&k.from_rational(&sc)));
        }
        Ok(out)
    };
    let mut mat: Vec<Vec<LocalElement>> = Vec::with_capacity(r);
    for b in &rel {
        mat.push(express(&x.mul(b))?);
    }
    determinant(mat)
}

fn integral_vector(y: &LocalElement, n: usize, m: &BigInt) -> Result<Vec<BigInt>> {
    match &y.repr {
        Repr::Zero(_) => Ok(alloc::vec![BigInt::zero(); n]),
        Repr::Val { shift, c, .. } => {
            if *shift < 0 {
                return Err(Error::PrecisionExhausted(LOST));
            }
            let sc = pow_u64(y.field().p(), *shift as u32);
            Ok(c.iter().map(|v| (v * &sc).mod_floor(m)).collect())
        }
    }
}

/// Determinant over a local field by elimination with minimal-valuation pivots.
pub(crate) fn determinant(mut a: Vec<Vec<LocalElement>>) -> Result<LocalElement> {
    let n = a.len();
    let k = a[0][0].field().clone();
    let mut det = k.one();
    for c in 0..n {
        let piv = (c..n)
            .filter(|&i| a[i][c].is_certified_nonzero())
            .min_by_key(|&i| a[i][c].val().unwrap_or(i64::MAX))
            .ok_or(Error::PrecisionExhausted(LOST))?;
        if piv != c {
            a.swap(piv, c);
            det = det.neg();
        }
        let inv = a[c][c].inv()?;
        det = det.mul(&a[c][c]);
        for i in c + 1..n {
            if a[i][c].is_exact_zero() {
                continue;
            }
            let f = a[i][c].mul(&inv);
            for j in c..n {
                let t = f.mul(&a[c][j]);
                a[i][j] = a[i][j].sub(&t);
            }
        }
    }
    Ok(det)
}
