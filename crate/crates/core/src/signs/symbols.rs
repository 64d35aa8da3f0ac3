use alloc::vec::Vec;

use num_traits::Zero;

use crate::curves::real::{sigma_real, sign};
use crate::curves::{kernel_translate, Scalar};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::padic::{factor_over, hilbert_real, hilbert_symbol, minus_one_minus_one, Completion, LocalElement};

/// `(a, −b)(−2a, a² − 4b)` for `a ≠ 0`, `(−2, −b)` for `a = 0`.
///
/// An `a` known only to be small is sent to the second branch when
/// `1 − a²/4b` is forced to be a square, which is where the two branches
/// agree.
pub fn h_symbol(a: &LocalElement, b: &LocalElement) -> Result<i8> {
    let k = a.field().clone();
    let disc = a.square().sub(&b.scale_i64(4));
    if !Scalar::nonzero(b)? || !Scalar::nonzero(&disc)? {
        return Err(Error::Singular);
    }
    let zero_branch = if a.is_exact_zero() {
        true
    } else if let Some(bound) = a.is_zero().then(|| a.val_lower_bound()).flatten() {
        let v2 = k.v2();
        if 2 * bound > b.val()? + 4 * v2 {
            true
        } else {
            return Err(Error::PrecisionExhausted("isogeny symbol cannot tell whether a vanishes"));
        }
    } else {
        false
    };
    if zero_branch {
        hilbert_symbol(&k.from_i64(-2), &b.neg())
    } else {
        Ok(hilbert_symbol(a, &b.neg())? * hilbert_symbol(&a.scale_i64(-2), &disc)?)
    }
}

/// The same symbol over `R`.
pub fn h_symbol_real(a: &Rational, b: &Rational) -> Result<i8> {
    let four = Rational::from_integer(4.into());
    let disc = a * a - b * &four;
    if b.is_zero() || disc.is_zero() {
        return Err(Error::Singular);
    }
    Ok(if a.is_zero() { hilbert_real(-1, -sign(b)) } else { hilbert_real(sign(a), -sign(b)) * hilbert_real(-sign(a), sign(&disc)) })
}

/// `σ` of a 2-isogeny over `C`: onto with a kernel of order 2.
pub fn sigma_complex() -> i32 {
    -1
}

/// `σ` of `y² = x³ + ax² + bx → y² = x³ − 2ax² + (a² − 4b)x` over `R`.
pub fn sigma_real_isogeny(a: &Rational, b: &Rational) -> Result<i32> {
    let disc = a * a - b * Rational::from_integer(4.into());
    if b.is_zero() || disc.is_zero() {
        return Err(Error::Singular);
    }
    Ok(sigma_real(sign(a), sign(b), sign(&disc)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolProductCheck {
    /// One symbol per Galois orbit of roots.
    pub factors: Vec<i8>,
    pub product: i8,
    pub expected: i8,
}

impl SymbolProductCheck {
    pub fn holds(&self) -> bool {
        self.product == self.expected
    }
}

/// For a squarefree monic `x³ + Ax² + Bx + C` (given as `[A, B, C]`), the
/// product over orbit representatives `r` of the isogeny symbol of
/// `f(x + r) = x³ + a_r x² + b_r x` over `K(r)`, against `(−1,−1)_K`.
pub fn symbol_product_check(f: &[LocalElement; 3]) -> Result<SymbolProductCheck> {
    let k = f[0].field().clone();
    let [a, b, c] = f.clone();
    let comps = factor_over(&k, &[c, b, a, k.one()])?;
    let mut factors = Vec::with_capacity(comps.len());
    for comp in &comps {
        let fr = f.clone().map(|x| comp.embedding.apply(&x));
        let (ar, br) = kernel_translate(&fr, &comp.root)?;
        factors.push(h_symbol(&ar, &br)?);
    }
    let product = factors.iter().product();
    Ok(SymbolProductCheck { factors, product, expected: minus_one_minus_one(&Completion::Local(k)) })
}
