//! Square classes and quadratic Hilbert symbols.

use alloc::vec::Vec;

use super::field::{LocalElement, LocalField};
use crate::error::{Error, Result};

/// A place of a number field as seen by the symbol routines.
#[derive(Clone, Debug)]
pub enum Completion {
    Real,
    Complex,
    Local(LocalField),
}

/// `(-1,-1)` of the completion, from its degree and residue characteristic.
pub fn minus_one_minus_one(k: &Completion) -> i8 {
    match k {
        Completion::Real => -1,
        Completion::Complex => 1,
        Completion::Local(f) => {
            if f.p() == 2 && f.degree() % 2 == 1 {
                -1
            } else {
                1
            }
        }
    }
}

/// Whether a certified nonzero element is a square.
pub fn is_square(x: &LocalElement) -> Result<bool> {
    let v = x.val()?;
    if v % 2 != 0 {
        return Ok(false);
    }
    let u = x.mul_pi_pow(-v);
    is_unit_square(&u)
}

fn is_unit_square(u: &LocalElement) -> Result<bool> {
    let k = u.field().clone();
    let res = k.residue_field();
    let ubar = u.residue()?;
    if k.p() != 2 {
        return Ok(res.is_square(&ubar));
    }
    let e = k.e() as i64;
    let w0 = k.lift_residue(&res.sqrt(&ubar).expect("char 2 residue square root"));
    let mut u1 = u.div(&w0.square())?;
    loop {
        let delta = u1.sub(&k.one());
        let kv = match delta.val() {
            Ok(kv) => kv,
            Err(_) => {
                return if delta.abs_prec().is_none_or(|a| a > 2 * e) {
                    Ok(true)
                } else {
                    Err(Error::PrecisionExhausted("square test needs more 2-adic digits"))
                };
            }
        };
        if kv > 2 * e {
            return Ok(true);
        }
        if kv == 2 * e {
            let c = delta.div(&k.from_i64(4))?;
            return Ok(res.trace(&c.residue()?) == 0);
        }
        if kv % 2 == 1 {
            return Ok(false);
        }
        let d = delta.mul_pi_pow(-kv).residue()?;
        let s = k.lift_residue(&res.sqrt(&d).expect("char 2 residue square root"));
        let corr = k.one().add(&s.mul_pi_pow(kv / 2));
        u1 = u1.div(&corr.square())?;
    }
}

/// Quadratic Hilbert symbol `(a, b)` in the common parent field.
pub fn hilbert_symbol(a: &LocalElement, b: &LocalElement) -> Result<i8> {
    if !a.is_certified_nonzero() || !b.is_certified_nonzero() {
        return Err(Error::PrecisionExhausted("Hilbert symbol of an uncertified element"));
    }
    let k = a.field().clone();
    if k.p() != 2 {
        let (al, be) = (a.val()?, b.val()?);
        let u = a.mul_pi_pow(-al).residue()?;
        let w = b.mul_pi_pow(-be).residue()?;
        let res = k.residue_field();
        let mut t = res.mul(&res.pow_u64(&u, be.rem_euclid(2) as u64), &res.pow_u64(&res.inv(&w), al.rem_euclid(2) as u64));
        if (al * be) % 2 != 0 {
            t = res.neg(&t);
        }
        return Ok(res.legendre(&t));
    }
    if is_square(a)? || is_square(b)? || is_square(&a.mul(b).neg())? {
        return Ok(1);
    }
    // (a, b) = 1 iff a x² + b or a + b u² (u ∈ 𝔭) is a nonzero square.
    let zero = k.zero();
    if represents_square(a, b, &zero, 0, 0)? || represents_square(b, a, &zero, 1, 0)? {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// Does `g(x) = s·x² + t` take a square value on the disk `x0 + π^r O`?
fn represents_square(s: &LocalElement, t: &LocalElement, x0: &LocalElement, r: i64, depth: usize) -> Result<bool> {
    let k = s.field().clone();
    let e = k.e() as i64;
    if depth > 12 * e as usize + 40 {
        return Err(Error::PrecisionExhausted("dyadic Hilbert search did not settle"));
    }
    let c0 = s.mul(&x0.square()).add(t);
    let c1 = s.mul(x0).scale_i64(2).mul_pi_pow(r);
    let c2 = s.mul_pi_pow(2 * r);
    let v0 = c0.val().map_err(|_| Error::PrecisionExhausted("dyadic Hilbert search hit a zero"))?;
    let v1 = c1.val_lower_bound().unwrap_or(i64::MAX);
    let v2 = c2.val()?;
    if v1.min(v2) > v0 + 2 * e {
        return is_square(&c0);
    }
    if v0 % 2 != 0 && v1 > v0 && v2 > v0 {
        return Ok(false);
    }
    let reps: Vec<_> = k.residue_field().elements_iter().collect();
    for rep in reps {
        let x = x0.add(&k.lift_residue(&rep).mul_pi_pow(r));
        if represents_square(s, t, &x, r + 1, depth + 1)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Hilbert symbol of real numbers given by their signs.
pub fn hilbert_real(sign_a: i8, sign_b: i8) -> i8 {
    if sign_a < 0 && sign_b < 0 {
        -1
    } else {
        1
    }
}
