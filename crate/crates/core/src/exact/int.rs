//! Integer helpers: p-adic valuations, primality, trial-division factoring.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// An integer or `+∞`; the valuation of zero is `Infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtInt {
    Finite(i64),
    Infinity,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            ExtInt::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtInt::Infinity)
    }
}

impl PartialOrd for ExtInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtInt::Finite(a), ExtInt::Finite(b)) => a.cmp(b),
            (ExtInt::Finite(_), ExtInt::Infinity) => Ordering::Less,
            (ExtInt::Infinity, ExtInt::Finite(_)) => Ordering::Greater,
            (ExtInt::Infinity, ExtInt::Infinity) => Ordering::Equal,
        }
    }
}

impl core::ops::Add for ExtInt {
    type Output = ExtInt;
    fn add(self, rhs: ExtInt) -> ExtInt {
        match (self, rhs) {
            (ExtInt::Finite(a), ExtInt::Finite(b)) => ExtInt::Finite(a + b),
            _ => ExtInt::Infinity,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::Infinity => f.write_str("+inf"),
        }
    }
}

/// Exponent of `p` in a nonzero integer; `None` for zero.
pub fn vp_int(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let pb = BigInt::from(p);
    let mut m = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return Some(k);
        }
        m = q;
        k += 1;
    }
}

/// Splits `n = p^k · m` with `p ∤ m`. `n` must be nonzero.
pub fn split_p(n: &BigInt, p: u64) -> (u32, BigInt) {
    let pb = BigInt::from(p);
    let mut m = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return (k, m);
        }
        m = q;
        k += 1;
    }
}

/// p-adic valuation of a rational number.
pub fn valuation(x: &Rational, p: u64) -> ExtInt {
    if x.is_zero() {
        return ExtInt::Infinity;
    }
    let a = vp_int(x.numer(), p).unwrap_or(0) as i64;
    let b = vp_int(x.denom(), p).unwrap_or(0) as i64;
    ExtInt::Finite(a - b)
}

/// Finite valuation of a nonzero rational; panics on zero.
pub fn val(x: &Rational, p: u64) -> i64 {
    valuation(x, p).finite().expect("valuation of zero")
}

pub fn pow_u64(p: u64, k: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), k as usize)
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

// Brent's variant of Pollard rho; `n` odd composite.
fn rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_u64(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

/// Prime factorisation of `|n|` as sorted `(prime, exponent)` pairs.
pub fn factor(n: &BigInt) -> Result<Vec<(u64, u32)>> {
    if n.is_zero() {
        return Err(Error::InvalidInput("cannot factor zero".into()));
    }
    let mut m = n.abs();
    let mut primes: Vec<u64> = Vec::new();
    let mut q = 2u64;
    while q < 1 << 12 {
        let qb = BigInt::from(q);
        while (&m % &qb).is_zero() {
            m /= &qb;
            primes.push(q);
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        match m.to_u64() {
            Some(r) => factor_u64(r, &mut primes),
            None => return Err(Error::Unsupported("integer cofactor beyond 64 bits")),
        }
    }
    primes.sort_unstable();
    let mut res: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match res.last_mut() {
            Some((q, k)) if *q == p => *k += 1,
            _ => res.push((p, 1)),
        }
    }
    Ok(res)
}

/// The prime divisors of a nonzero rational (numerator and denominator).
pub fn prime_support(x: &Rational) -> Result<Vec<u64>> {
    let mut ps: Vec<u64> = factor(x.numer())?.into_iter().map(|(p, _)| p).collect();
    ps.extend(factor(x.denom())?.into_iter().map(|(p, _)| p));
    ps.sort_unstable();
    ps.dedup();
    Ok(ps)
}

/// Signed squarefree integer in the rational square class of `x ≠ 0`.
pub fn squarefree_class(x: &Rational) -> Result<BigInt> {
    let n = x.numer() * x.denom();
    let mut r = BigInt::one();
    for (p, k) in factor(&n)? {
        if k % 2 == 1 {
            r *= BigInt::from(p);
        }
    }
    if n.sign() == Sign::Minus {
        r = -r;
    }
    Ok(r)
}

/// Is `x` the square of a rational number?
pub fn is_rational_square(x: &Rational) -> bool {
    if x.is_negative() {
        return false;
    }
    let is_sq = |n: &BigInt| {
        let s = n.sqrt();
        &s * &s == *n
    };
    is_sq(x.numer()) && is_sq(x.denom())
}

/// Inverse of `a` modulo `m`; `a` must be a unit.
pub fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let g = a.mod_floor(m).extended_gcd(m);
    debug_assert!(g.gcd.is_one(), "inv_mod of a non-unit");
    g.x.mod_floor(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&q(12), 2), ExtInt::Finite(2));
        assert_eq!(valuation(&q(1), 7), ExtInt::Finite(0));
        assert_eq!(valuation(&q(0), 5), ExtInt::Infinity);
        let x = Rational::new(BigInt::from(5), BigInt::from(72));
        assert_eq!(valuation(&x, 2), ExtInt::Finite(-3));
        assert_eq!(valuation(&x, 3), ExtInt::Finite(-2));
    }

    #[test]
    fn factor_and_squarefree() {
        assert_eq!(factor(&BigInt::from(-360)).unwrap(), [(2, 3), (3, 2), (5, 1)]);
        let big = BigInt::from(1_000_003u64) * BigInt::from(998_244_353u64);
        assert_eq!(factor(&big).unwrap(), [(1_000_003, 1), (998_244_353, 1)]);
        assert_eq!(squarefree_class(&q(-72)).unwrap(), BigInt::from(-2));
        assert!(is_rational_square(&Rational::new(BigInt::from(9), BigInt::from(4))));
        assert!(!is_rational_square(&q(-4)));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime_u64(998_244_353));
        assert!(!is_prime_u64(3_215_031_751));
    }
}
