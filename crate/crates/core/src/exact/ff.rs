//! Finite fields `F_p[t]/(m)` and polynomials over them.
//!
//! Elements are coefficient vectors of length `f` (constant term first) with
//! entries in `[0, p)`, so equal elements have identical representations.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use rand_core::RngCore;

/// A raw element of a [`FiniteField`].
pub type Fq = Vec<u64>;
/// A polynomial over a [`FiniteField`], constant term first, no trailing zeros.
pub type FqPoly = Vec<Fq>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: u64,
    f: usize,
    /// Monic modulus of degree `f`, constant term first (length `f + 1`).
    modulus: Vec<u64>,
}

fn fp_inv(a: u64, p: u64) -> u64 {
    fp_pow(a, p - 2, p)
}

fn fp_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

impl FiniteField {
    /// `F_{p^f}` with the canonical modulus: the monic irreducible polynomial
    /// whose coefficient vector `(c_{f-1}, …, c_0)` is lexicographically least.
    pub fn new(p: u64, f: usize) -> Self {
        assert!(p >= 2 && p < 1 << 31, "characteristic out of range");
        assert!(f >= 1);
        FiniteField { p, f, modulus: canonical_irreducible(p, f) }
    }

    /// Field with an explicit monic irreducible modulus (constant term first).
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Self {
        let f = modulus.len() - 1;
        FiniteField { p, f, modulus }
    }

    pub fn prime_field(p: u64) -> Self {
        FiniteField { p, f: 1, modulus: vec![0, 1] }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.f
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn order(&self) -> BigUint {
        num_traits::pow(BigUint::from(self.p), self.f)
    }

    pub fn zero(&self) -> Fq {
        vec![0; self.f]
    }

    pub fn one(&self) -> Fq {
        self.from_u64(1)
    }

    pub fn from_u64(&self, a: u64) -> Fq {
        let mut v = self.zero();
        v[0] = a % self.p;
        v
    }

    pub fn from_int(&self, a: &BigInt) -> Fq {
        let r = num_integer::Integer::mod_floor(a, &BigInt::from(self.p));
        self.from_u64(r.to_u64().unwrap())
    }

    /// The generator `t` (the class of the variable).
    pub fn gen(&self) -> Fq {
        if self.f == 1 {
            // t ≡ -m_0 in F_p[t]/(t + m_0).
            return self.from_u64((self.p - self.modulus[0]) % self.p);
        }
        let mut v = self.zero();
        v[1] = 1;
        v
    }

    pub fn is_zero(&self, a: &Fq) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self, a: &Fq) -> bool {
        a[0] == 1 && a[1..].iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &Fq, b: &Fq) -> Fq {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn sub(&self, a: &Fq, b: &Fq) -> Fq {
        a.iter().zip(b).map(|(x, y)| (x + self.p - y) % self.p).collect()
    }

    pub fn neg(&self, a: &Fq) -> Fq {
        a.iter().map(|x| (self.p - x) % self.p).collect()
    }

    pub fn scale(&self, a: &Fq, c: u64) -> Fq {
        a.iter().map(|x| x * (c % self.p) % self.p).collect()
    }

    pub fn mul(&self, a: &Fq, b: &Fq) -> Fq {
        let (p, f) = (self.p, self.f);
        if f == 1 {
            return vec![a[0] * b[0] % p];
        }
        let mut prod = vec![0u64; 2 * f - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for k in (f..2 * f - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for j in 0..f {
                prod[k - f + j] = (prod[k - f + j] + (p - c) * self.modulus[j]) % p;
            }
        }
        prod.truncate(f);
        prod
    }

    pub fn pow(&self, a: &Fq, e: &BigUint) -> Fq {
        let mut r = self.one();
        for i in (0..e.bits()).rev() {
            r = self.mul(&r, &r);
            if e.bit(i) {
                r = self.mul(&r, a);
            }
        }
        r
    }

    pub fn pow_u64(&self, a: &Fq, e: u64) -> Fq {
        self.pow(a, &BigUint::from(e))
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &Fq) -> Fq {
        assert!(!self.is_zero(a), "inverse of zero");
        if self.f == 1 {
            return vec![fp_inv(a[0], self.p)];
        }
        let e = self.order() - 2u32;
        self.pow(a, &e)
    }

    pub fn div(&self, a: &Fq, b: &Fq) -> Fq {
        self.mul(a, &self.inv(b))
    }

    /// Whether `a` is a square (zero counts as a square).
    pub fn is_square(&self, a: &Fq) -> bool {
        if self.p == 2 || self.is_zero(a) {
            return true;
        }
        let e = (self.order() - 1u32) / 2u32;
        self.is_one(&self.pow(a, &e))
    }

    /// Quadratic character: 0, 1 or -1.
    pub fn legendre(&self, a: &Fq) -> i8 {
        if self.is_zero(a) {
            0
        } else if self.is_square(a) {
            1
        } else {
            -1
        }
    }

    /// The unique `y` with `y^p = a` (Frobenius is bijective).
    pub fn pth_root(&self, a: &Fq) -> Fq {
        let e = num_traits::pow(BigUint::from(self.p), self.f - 1);
        self.pow(a, &e)
    }

    /// A square root of `a`, if one exists.
    pub fn sqrt(&self, a: &Fq) -> Option<Fq> {
        if self.is_zero(a) {
            return Some(self.zero());
        }
        if self.p == 2 {
            return Some(self.pth_root(a));
        }
        if !self.is_square(a) {
            return None;
        }
        // Tonelli–Shanks with a deterministic non-residue.
        let q1 = self.order() - 1u32;
        let mut s = 0u32;
        let mut odd = q1.clone();
        while !odd.bit(0) {
            odd >>= 1;
            s += 1;
        }
        let z = self.elements_iter().find(|x| !self.is_zero(x) && !self.is_square(x)).unwrap();
        let mut m = s;
        let mut c = self.pow(&z, &odd);
        let mut t = self.pow(a, &odd);
        let mut r = self.pow(a, &((&odd + 1u32) / 2u32));
        while !self.is_one(&t) {
            let mut i = 0;
            let mut tt = t.clone();
            while !self.is_one(&tt) {
                tt = self.mul(&tt, &tt);
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = self.mul(&b, &b);
            }
            m = i;
            c = self.mul(&b, &b);
            t = self.mul(&t, &c);
            r = self.mul(&r, &b);
        }
        Some(r)
    }

    /// Absolute trace to `F_p`.
    pub fn trace(&self, a: &Fq) -> u64 {
        let mut acc = a.clone();
        let mut x = a.clone();
        for _ in 1..self.f {
            x = self.pow_u64(&x, self.p);
            acc = self.add(&acc, &x);
        }
        acc[0]
    }

    /// Enumerates all `p^f` elements in a fixed order (use only for small fields).
    pub fn elements_iter(&self) -> impl Iterator<Item = Fq> + '_ {
        let total = self.order().to_u64().unwrap_or(u64::MAX);
        (0..total).map(move |mut n| {
            let mut v = self.zero();
            for c in v.iter_mut() {
                *c = n % self.p;
                n /= self.p;
            }
            v
        })
    }

    pub fn random(&self, rng: &mut impl RngCore) -> Fq {
        (0..self.f).map(|_| rng.next_u64() % self.p).collect()
    }

    // --- polynomials over the field -------------------------------------

    pub fn ptrim(&self, mut a: FqPoly) -> FqPoly {
        while a.last().is_some_and(|c| self.is_zero(c)) {
            a.pop();
        }
        a
    }

    pub fn padd(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let n = a.len().max(b.len());
        let z = self.zero();
        self.ptrim((0..n).map(|i| self.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect())
    }

    pub fn psub(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let n = a.len().max(b.len());
        let z = self.zero();
        self.ptrim((0..n).map(|i| self.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect())
    }

    pub fn pmul(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                r[i + j] = self.add(&r[i + j], &self.mul(x, y));
            }
        }
        self.ptrim(r)
    }

    pub fn pdivrem(&self, a: &FqPoly, d: &FqPoly) -> (FqPoly, FqPoly) {
        assert!(!d.is_empty(), "polynomial division by zero");
        let dd = d.len() - 1;
        if a.len() <= dd {
            return (Vec::new(), a.clone());
        }
        let li = self.inv(&d[dd]);
        let mut r = a.clone();
        let mut q = vec![self.zero(); a.len() - dd];
        for k in (0..q.len()).rev() {
            let c = self.mul(&r[k + dd], &li);
            if !self.is_zero(&c) {
                for (j, dj) in d.iter().enumerate() {
                    r[k + j] = self.sub(&r[k + j], &self.mul(&c, dj));
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (self.ptrim(q), self.ptrim(r))
    }

    pub fn pmonic(&self, a: &FqPoly) -> FqPoly {
        match a.last() {
            None => Vec::new(),
            Some(l) => {
                let li = self.inv(l);
                a.iter().map(|c| self.mul(c, &li)).collect()
            }
        }
    }

    pub fn pgcd(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let (mut a, mut b) = (self.ptrim(a.clone()), self.ptrim(b.clone()));
        while !b.is_empty() {
            let r = self.pdivrem(&a, &b).1;
            a = b;
            b = r;
        }
        self.pmonic(&a)
    }

    pub fn pderiv(&self, a: &FqPoly) -> FqPoly {
        self.ptrim(a.iter().enumerate().skip(1).map(|(i, c)| self.scale(c, i as u64)).collect())
    }

    pub fn peval(&self, a: &FqPoly, x: &Fq) -> Fq {
        let mut acc = self.zero();
        for c in a.iter().rev() {
            acc = self.add(&self.mul(&acc, x), c);
        }
        acc
    }

    /// `base^e mod m`.
    pub fn ppowmod(&self, base: &FqPoly, e: &BigUint, m: &FqPoly) -> FqPoly {
        let mut r: FqPoly = vec![self.one()];
        let b = self.pdivrem(base, m).1;
        for i in (0..e.bits()).rev() {
            r = self.pdivrem(&self.pmul(&r, &r), m).1;
            if e.bit(i) {
                r = self.pdivrem(&self.pmul(&r, &b), m).1;
            }
        }
        r
    }

    fn px(&self) -> FqPoly {
        vec![self.zero(), self.one()]
    }

    // Equal-degree splitting of a squarefree product of degree-d factors.
    fn edf(&self, g: &FqPoly, d: usize, rng: &mut impl RngCore, out: &mut Vec<FqPoly>) {
        let n = g.len() - 1;
        if n == d {
            out.push(self.pmonic(g));
            return;
        }
        loop {
            let a: FqPoly = self.ptrim((0..n).map(|_| self.random(rng)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = if self.p == 2 {
                let mut t = a.clone();
                let mut acc = a.clone();
                for _ in 1..(self.f * d) {
                    t = self.pdivrem(&self.pmul(&t, &t), g).1;
                    acc = self.padd(&acc, &t);
                }
                acc
            } else {
                let qd = num_traits::pow(self.order(), d);
                let e = (qd - 1u32) / 2u32;
                let t = self.ppowmod(&a, &e, g);
                self.psub(&t, &vec![self.one()])
            };
            let h = self.pgcd(&b, g);
            let dh = h.len().saturating_sub(1);
            if dh > 0 && dh < n {
                let rest = self.pdivrem(g, &h).0;
                self.edf(&h, d, rng, out);
                self.edf(&rest, d, rng, out);
                return;
            }
        }
    }

    /// Irreducible monic factors of a squarefree polynomial.
    pub fn factor_squarefree(&self, g: &FqPoly, rng: &mut impl RngCore) -> Vec<FqPoly> {
        let mut g = self.pmonic(g);
        let mut out = Vec::new();
        let mut h = self.px();
        let q = self.order();
        let mut d = 1;
        while g.len() > 1 {
            if 2 * d > g.len() - 1 {
                out.push(g.clone());
                break;
            }
            h = self.ppowmod(&h, &q, &g);
            let part = self.pgcd(&self.psub(&h, &self.px()), &g);
            if part.len() > 1 {
                self.edf(&part, d, rng, &mut out);
                g = self.pdivrem(&g, &part).0;
                h = self.pdivrem(&h, &g).1;
            }
            d += 1;
        }
        out.sort();
        out
    }

    /// Distinct roots of a nonzero polynomial, sorted.
    pub fn roots(&self, g: &FqPoly, rng: &mut impl RngCore) -> Vec<Fq> {
        let g = self.pmonic(&self.ptrim(g.clone()));
        if g.len() <= 1 {
            return Vec::new();
        }
        let xq = self.ppowmod(&self.px(), &self.order(), &g);
        let lin = self.pgcd(&self.psub(&xq, &self.px()), &g);
        if lin.len() <= 1 {
            return Vec::new();
        }
        let mut facs = Vec::new();
        self.edf(&lin, 1, rng, &mut facs);
        let mut r: Vec<Fq> = facs.iter().map(|l| self.neg(&l[0])).collect();
        r.sort();
        r
    }

    /// Number of distinct roots in the field.
    pub fn count_roots(&self, g: &FqPoly) -> usize {
        let g = self.pmonic(&self.ptrim(g.clone()));
        if g.len() <= 1 {
            return 0;
        }
        let xq = self.ppowmod(&self.px(), &self.order(), &g);
        self.pgcd(&self.psub(&xq, &self.px()), &g).len() - 1
    }
}

/// Rabin's irreducibility test over `F_p` (coefficients constant-first, monic).
pub fn is_irreducible_fp(p: u64, g: &[u64]) -> bool {
    let f = g.len() - 1;
    if f == 1 {
        return true;
    }
    let k = FiniteField::prime_field(p);
    let gp: FqPoly = g.iter().map(|&c| vec![c]).collect();
    let x: FqPoly = vec![vec![0], vec![1]];
    let xpow = |n: usize| {
        let e = num_traits::pow(BigUint::from(p), n);
        k.ppowmod(&x, &e, &gp)
    };
    if k.psub(&xpow(f), &x) != Vec::<Fq>::new() {
        return false;
    }
    let mut m = f;
    let mut r = 2;
    let mut prime_divs = Vec::new();
    while m > 1 {
        if m % r == 0 {
            prime_divs.push(r);
            while m % r == 0 {
                m /= r;
            }
        }
        r += 1;
    }
    prime_divs.iter().all(|r| k.pgcd(&k.psub(&xpow(f / r), &x), &gp).len() == 1)
}

/// The lexicographically least monic irreducible of degree `f` over `F_p`.
pub fn canonical_irreducible(p: u64, f: usize) -> Vec<u64> {
    let mut digits = vec![0u64; f];
    loop {
        let mut g = digits.clone();
        g.push(1);
        if is_irreducible_fp(p, &g) {
            return g;
        }
        // Increment with c_0 least significant: the vector (c_{f-1}, …, c_0)
        // is thereby visited in lexicographic order.
        let mut i = 0;
        loop {
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// An element bundled with its field, for the public API.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteFieldElement {
    pub field: FiniteField,
    pub value: Fq,
}

impl FiniteFieldElement {
    pub fn new(field: &FiniteField, value: Fq) -> Self {
        FiniteFieldElement { field: field.clone(), value }
    }

    pub fn from_u64(field: &FiniteField, a: u64) -> Self {
        FiniteFieldElement { field: field.clone(), value: field.from_u64(a) }
    }

    pub fn characteristic(&self) -> u64 {
        self.field.p
    }

    pub fn degree(&self) -> usize {
        self.field.f
    }
}

/// Whether `x` is a square in its field (zero counts).
pub fn ff_is_square(x: &FiniteFieldElement) -> bool {
    x.field.is_square(&x.value)
}

impl fmt::Display for FiniteFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.f == 1 {
            return write!(f, "{}", self.value[0]);
        }
        let terms: Vec<_> = self
            .value
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| match i {
                0 => alloc::format!("{c}"),
                1 => alloc::format!("{c}*t"),
                _ => alloc::format!("{c}*t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn canonical_moduli() {
        assert_eq!(canonical_irreducible(2, 2), [1, 1, 1]);
        assert_eq!(canonical_irreducible(2, 3), [1, 1, 0, 1]);
        assert_eq!(canonical_irreducible(3, 2), [1, 0, 1]);
        assert_eq!(canonical_irreducible(5, 1), [0, 1]);
        assert_eq!(canonical_irreducible(7, 2), [1, 0, 1]);
    }

    #[test]
    fn spec_square_examples() {
        let f11 = FiniteField::new(11, 1);
        assert!(ff_is_square(&FiniteFieldElement::from_u64(&f11, 4)));
        let f5 = FiniteField::new(5, 1);
        assert!(!ff_is_square(&FiniteFieldElement::from_u64(&f5, 2)));
        let f9 = FiniteField::new(3, 2);
        assert!(ff_is_square(&FiniteFieldElement::from_u64(&f9, 0)));
    }

    #[test]
    fn squares_match_enumeration_up_to_121() {
        for (p, f) in [
            (2, 1),
            (3, 1),
            (2, 2),
            (5, 1),
            (7, 1),
            (2, 3),
            (3, 2),
            (11, 1),
            (13, 1),
            (2, 4),
            (17, 1),
            (5, 2),
            (3, 3),
            (2, 5),
            (7, 2),
            (2, 6),
            (11, 2),
        ] {
            let k = FiniteField::new(p, f);
            let els: Vec<Fq> = k.elements_iter().collect();
            let squares: Vec<Fq> = els.iter().map(|x| k.mul(x, x)).collect();
            for x in &els {
                assert_eq!(k.is_square(x), squares.contains(x), "p={p} f={f} x={x:?}");
                if let Some(r) = k.sqrt(x) {
                    assert_eq!(&k.mul(&r, &r), x);
                }
            }
        }
    }

    #[test]
    fn field_axioms_and_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let k = FiniteField::new(3, 3);
        for x in k.elements_iter().skip(1) {
            assert!(k.is_one(&k.mul(&x, &k.inv(&x))));
            let y = k.pth_root(&x);
            assert_eq!(k.pow_u64(&y, 3), x);
        }
        // t^3 - t - 1 over F_27 splits (it is the Artin–Schreier polynomial).
        let poly: FqPoly = vec![k.from_u64(2), k.from_u64(2), k.zero(), k.one()];
        assert_eq!(k.roots(&poly, &mut rng).len(), k.count_roots(&poly));
        let f2 = FiniteField::new(2, 1);
        let irr: [FqPoly; 4] = [
            vec![vec![0], vec![1]],
            vec![vec![1], vec![1], vec![1]],
            vec![vec![1], vec![1], vec![0], vec![1]],
            vec![vec![1], vec![0], vec![1], vec![1]],
        ];
        let g = irr.iter().fold(vec![vec![1u64]], |acc, h| f2.pmul(&acc, h));
        let facs = f2.factor_squarefree(&g, &mut rng);
        let mut want = irr.to_vec();
        want.sort();
        assert_eq!(facs, want);
    }
}
