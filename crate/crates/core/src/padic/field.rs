//! Finite extensions of Q_p in unramified-then-Eisenstein form.
//!
//! A field `K` is `U(π)` where `U = Q_p(ζ)`, `ζ` a root of the integer lift
//! `h` of the canonical degree-`f` irreducible over `F_p`, and `π` a root of
//! an Eisenstein polynomial `E` of degree `e` over `O_U`. Integral elements
//! are coefficient vectors over the basis `ζ^a π^j` (index `a + f·j`).

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::int::{inv_mod, pow_u64, split_p};
use crate::exact::{ExtInt, FiniteField, Fq, Rational};

pub(crate) struct FieldData {
    pub(crate) p: u64,
    pub(crate) f: usize,
    pub(crate) e: usize,
    /// Lift of the residue modulus, monic, constant term first.
    pub(crate) unram: Vec<BigInt>,
    /// Non-leading coefficients of the Eisenstein polynomial, each in `O_U`.
    pub(crate) eis: Vec<Vec<BigInt>>,
    /// Working p-adic precision: integral data are known modulo `p^digits`.
    pub(crate) digits: u32,
    pub(crate) modulus: BigInt,
    pub(crate) residue: FiniteField,
    /// `π^{-1} = p^{-1} · pi_inv_unit`.
    pub(crate) pi_inv_coeffs: Vec<BigInt>,
}

/// A p-adic field descriptor; cheap to clone, compared by identity.
#[derive(Clone)]
pub struct LocalField(pub(crate) Arc<FieldData>);

impl PartialEq for LocalField {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.0, &o.0)
    }
}

impl Eq for LocalField {}

impl fmt::Debug for LocalField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LocalField(p={}, e={}, f={}, digits={})", self.p(), self.e(), self.f(), self.digits())
    }
}

fn modp(x: &BigInt, m: &BigInt) -> BigInt {
    x.mod_floor(m)
}

impl LocalField {
    /// `Q_p` with `digits` p-adic digits of precision.
    pub fn qp(p: u64, digits: u32) -> LocalField {
        let m = pow_u64(p, digits);
        LocalField::build(p, vec![BigInt::zero(), BigInt::one()], vec![vec![modp(&-BigInt::from(p), &m)]], digits)
            .expect("Q_p construction")
    }

    /// Unramified extension of degree `f` of `Q_p`.
    pub fn unramified(p: u64, f: usize, digits: u32) -> LocalField {
        let m = pow_u64(p, digits);
        let h: Vec<BigInt> = crate::exact::ff::canonical_irreducible(p, f).into_iter().map(BigInt::from).collect();
        let mut c0 = vec![BigInt::zero(); f];
        c0[0] = modp(&-BigInt::from(p), &m);
        LocalField::build(p, h, vec![c0], digits).expect("unramified construction")
    }

    /// A field from tower data. `unram` is the lifted canonical modulus of
    /// degree `f`; `eis[j]` are the lower coefficients of an Eisenstein
    /// polynomial over `O_U`.
    pub(crate) fn build(p: u64, unram: Vec<BigInt>, eis: Vec<Vec<BigInt>>, digits: u32) -> Result<LocalField> {
        let f = unram.len() - 1;
        let e = eis.len();
        let modulus = pow_u64(p, digits);
        let pb = BigInt::from(p);
        let p2 = &pb * &pb;
        for (j, c) in eis.iter().enumerate() {
            if c.iter().any(|x| !(x.mod_floor(&pb)).is_zero()) {
                return Err(Error::InvalidInput("polynomial is not Eisenstein".into()));
            }
            if j == 0 && c.iter().all(|x| x.mod_floor(&p2).is_zero()) {
                return Err(Error::InvalidInput("Eisenstein constant term not exactly divisible by p".into()));
            }
        }
        let residue = FiniteField::with_modulus(p, unram.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect());
        let mut data = FieldData {
            p,
            f,
            e,
            unram,
            eis: eis.iter().map(|c| c.iter().map(|x| modp(x, &modulus)).collect()).collect(),
            digits,
            modulus,
            residue,
            pi_inv_coeffs: Vec::new(),
        };
        // π·(π^{e-1} + Σ_{j≥1} c_j π^{j-1}) = -c_0 = -p·u0.
        let mut w = vec![BigInt::zero(); e * f];
        w[f * (e - 1)] = BigInt::one();
        for j in 1..e {
            for a in 0..f {
                w[a + f * (j - 1)] += &data.eis[j][a];
            }
        }
        let u0: Vec<BigInt> = data.eis[0].iter().map(|x| x / &pb).collect();
        let u0inv = data.ou_inv(&u0, &data.modulus);
        let neg: Vec<BigInt> = u0inv.iter().map(|x| modp(&-x, &data.modulus)).collect();
        let mut scaled = vec![BigInt::zero(); e * f];
        for j in 0..e {
            let t = data.ou_mul(&w[f * j..f * (j + 1)], &neg);
            for a in 0..f {
                scaled[a + f * j] = modp(&t[a], &data.modulus);
            }
        }
        data.pi_inv_coeffs = scaled;
        Ok(LocalField(Arc::new(data)))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    /// Absolute ramification index.
    pub fn e(&self) -> usize {
        self.0.e
    }

    /// Absolute residue degree.
    pub fn f(&self) -> usize {
        self.0.f
    }

    pub fn degree(&self) -> usize {
        self.0.e * self.0.f
    }

    /// p-adic digits of working precision.
    pub fn digits(&self) -> u32 {
        self.0.digits
    }

    /// Working precision in uniformizer digits.
    pub fn precision(&self) -> i64 {
        self.0.e as i64 * self.0.digits as i64
    }

    pub fn residue_field(&self) -> &FiniteField {
        &self.0.residue
    }

    /// Residue field order `q`.
    pub fn q(&self) -> BigInt {
        BigInt::from(self.0.residue.order())
    }

    /// The unramified modulus `h` (constant term first).
    pub fn unramified_poly(&self) -> &[BigInt] {
        &self.0.unram
    }

    /// Lower coefficients of the Eisenstein polynomial (each over `O_U`).
    pub fn eisenstein_poly(&self) -> &[Vec<BigInt>] {
        &self.0.eis
    }

    /// `v_π(p)`.
    pub fn vp(&self) -> i64 {
        self.0.e as i64
    }

    /// `v_π(2)`.
    pub fn v2(&self) -> i64 {
        if self.0.p == 2 {
            self.0.e as i64
        } else {
            0
        }
    }

    pub fn zero(&self) -> LocalElement {
        LocalElement { field: self.clone(), repr: Repr::Zero(None) }
    }

    /// Zero known only modulo `π^prec`.
    pub fn zero_to(&self, prec: i64) -> LocalElement {
        LocalElement { field: self.clone(), repr: Repr::Zero(Some(prec)) }
    }

    pub fn one(&self) -> LocalElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, a: i64) -> LocalElement {
        self.from_int(&BigInt::from(a))
    }

    pub fn from_int(&self, a: &BigInt) -> LocalElement {
        if a.is_zero() {
            return self.zero();
        }
        let (k, u) = split_p(a, self.0.p);
        let mut c = vec![BigInt::zero(); self.degree()];
        c[0] = modp(&u, &self.0.modulus);
        self.make(k as i64, c, self.0.digits)
    }

    pub fn from_rational(&self, x: &Rational) -> LocalElement {
        if x.is_zero() {
            return self.zero();
        }
        let (kn, un) = split_p(x.numer(), self.0.p);
        let (kd, ud) = split_p(x.denom(), self.0.p);
        let mut c = vec![BigInt::zero(); self.degree()];
        c[0] = modp(&(un * inv_mod(&ud, &self.0.modulus)), &self.0.modulus);
        self.make(kn as i64 - kd as i64, c, self.0.digits)
    }

    /// The uniformizer `π`.
    pub fn uniformizer(&self) -> LocalElement {
        if self.0.e == 1 {
            return self.from_i64(self.0.p as i64);
        }
        let mut c = vec![BigInt::zero(); self.degree()];
        c[self.0.f] = BigInt::one();
        self.make(0, c, self.0.digits)
    }

    pub fn uniformizer_inverse(&self) -> LocalElement {
        self.make(-1, self.0.pi_inv_coeffs.clone(), self.0.digits)
    }

    /// The root `ζ` of the unramified modulus (zero when `f = 1`).
    pub fn zeta(&self) -> LocalElement {
        if self.0.f == 1 {
            return self.zero();
        }
        let mut c = vec![BigInt::zero(); self.degree()];
        c[1] = BigInt::one();
        self.make(0, c, self.0.digits)
    }

    /// The Teichmüller-free lift `Σ c_a ζ^a` of a residue class.
    pub fn lift_residue(&self, r: &Fq) -> LocalElement {
        let mut c = vec![BigInt::zero(); self.degree()];
        for (a, x) in r.iter().enumerate() {
            c[a] = BigInt::from(*x);
        }
        self.make(0, c, self.0.digits)
    }

    /// Element `p^shift · Σ c_i b_i` from integral coordinates known modulo
    /// `p^digits`; normalises and caps precision at the field's.
    pub fn from_coords(&self, shift: i64, c: Vec<BigInt>, digits: u32) -> LocalElement {
        self.make(shift, c, digits.min(self.0.digits))
    }

    pub(crate) fn make(&self, mut shift: i64, c: Vec<BigInt>, mut digits: u32) -> LocalElement {
        let pb = BigInt::from(self.0.p);
        let mut m = pow_u64(self.0.p, digits);
        let mut c: Vec<BigInt> = c.iter().map(|x| x.mod_floor(&m)).collect();
        loop {
            if digits == 0 || c.iter().all(|x| x.is_zero()) {
                let e = self.0.e as i64;
                return self.zero_to(e * (shift + digits as i64));
            }
            if c.iter().any(|x| !x.mod_floor(&pb).is_zero()) {
                break;
            }
            for x in c.iter_mut() {
                *x = &*x / &pb;
            }
            shift += 1;
            digits -= 1;
            m = &m / &pb;
        }
        LocalElement { field: self.clone(), repr: Repr::Val { shift, c, digits } }
    }

    // ----- integral arithmetic on coordinate vectors ---------------------

    /// Product of integral coordinate vectors modulo `m`.
    pub(crate) fn ok_mul(&self, x: &[BigInt], y: &[BigInt], m: &BigInt) -> Vec<BigInt> {
        self.0.ok_mul(x, y, m)
    }
}

impl FieldData {
    fn ou_mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let f = self.f;
        if f == 1 {
            return vec![&a[0] * &b[0]];
        }
        let mut r = vec![BigInt::zero(); 2 * f - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    r[i + j] += x * y;
                }
            }
        }
        for k in (f..2 * f - 1).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = core::mem::take(&mut r[k]);
            for i in 0..f {
                if !self.unram[i].is_zero() {
                    r[k - f + i] -= &c * &self.unram[i];
                }
            }
        }
        r.truncate(f);
        r
    }

    fn ou_inv(&self, u: &[BigInt], m: &BigInt) -> Vec<BigInt> {
        let pb = BigInt::from(self.p);
        let res: Fq = u.iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect();
        let ri = self.residue.inv(&res);
        let mut w: Vec<BigInt> = ri.iter().map(|&x| BigInt::from(x)).collect();
        let mut known = pb.clone();
        let mut two = vec![BigInt::zero(); self.f];
        two[0] = BigInt::from(2);
        while &known < m {
            known = &known * &known;
            let uw = self.ou_mul(u, &w);
            let t: Vec<BigInt> = two.iter().zip(&uw).map(|(a, b)| a - b).collect();
            w = self.ou_mul(&w, &t).iter().map(|x| x.mod_floor(m)).collect();
        }
        w
    }

    fn ok_mul(&self, x: &[BigInt], y: &[BigInt], m: &BigInt) -> Vec<BigInt> {
        let (f, e) = (self.f, self.e);
        if f * e == 1 {
            return vec![(&x[0] * &y[0]).mod_floor(m)];
        }
        let mut prod: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); f]; 2 * e - 1];
        for j1 in 0..e {
            let xs = &x[f * j1..f * (j1 + 1)];
            if xs.iter().all(|v| v.is_zero()) {
                continue;
            }
            for j2 in 0..e {
                let ys = &y[f * j2..f * (j2 + 1)];
                if ys.iter().all(|v| v.is_zero()) {
                    continue;
                }
                let t = self.ou_mul(xs, ys);
                for a in 0..f {
                    prod[j1 + j2][a] += &t[a];
                }
            }
        }
        for k in (e..2 * e - 1).rev() {
            let c: Vec<BigInt> = prod[k].iter().map(|v| v.mod_floor(m)).collect();
            if c.iter().all(|v| v.is_zero()) {
                continue;
            }
            for j in 0..e {
                let t = self.ou_mul(&c, &self.eis[j]);
                for a in 0..f {
                    prod[k - e + j][a] -= &t[a];
                }
            }
        }
        let mut out = Vec::with_capacity(e * f);
        for row in prod.into_iter().take(e) {
            for v in row {
                out.push(v.mod_floor(m));
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub(crate) enum Repr {
    /// Zero, exact (`None`) or known modulo `π^k`.
    Zero(Option<i64>),
    /// `p^shift · Σ c_i b_i` with some `c_i` a p-adic unit, known mod `p^digits`.
    Val { shift: i64, c: Vec<BigInt>, digits: u32 },
}

/// An element of a [`LocalField`] with tracked absolute precision.
#[derive(Clone)]
pub struct LocalElement {
    pub(crate) field: LocalField,
    pub(crate) repr: Repr,
}

impl LocalElement {
    pub fn field(&self) -> &LocalField {
        &self.field
    }

    /// Exactly zero.
    pub fn is_exact_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero(None))
    }

    /// Zero to the known precision (exactly or approximately).
    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero(_))
    }

    pub fn is_certified_nonzero(&self) -> bool {
        matches!(self.repr, Repr::Val { .. })
    }

    /// Valuation in uniformizer units; errors on an uncertified zero.
    pub fn valuation(&self) -> Result<ExtInt> {
        match &self.repr {
            Repr::Zero(None) => Ok(ExtInt::Infinity),
            Repr::Zero(Some(_)) => Err(Error::PrecisionExhausted("valuation of an approximate zero")),
            Repr::Val { .. } => Ok(ExtInt::Finite(self.val_unchecked())),
        }
    }

    /// Finite valuation of a certified nonzero element.
    pub fn val(&self) -> Result<i64> {
        match &self.repr {
            Repr::Val { .. } => Ok(self.val_unchecked()),
            _ => Err(Error::PrecisionExhausted("valuation of zero requested")),
        }
    }

    fn val_unchecked(&self) -> i64 {
        let d = &self.field.0;
        match &self.repr {
            Repr::Val { shift, c, .. } => {
                let pb = BigInt::from(d.p);
                let j0 =
                    (0..d.e).find(|&j| c[d.f * j..d.f * (j + 1)].iter().any(|x| !x.mod_floor(&pb).is_zero())).expect("normalised element");
                d.e as i64 * shift + j0 as i64
            }
            _ => unreachable!(),
        }
    }

    /// Known lower bound for the valuation (`None` = exact zero).
    pub fn val_lower_bound(&self) -> Option<i64> {
        match &self.repr {
            Repr::Zero(None) => None,
            Repr::Zero(Some(k)) => Some(*k),
            Repr::Val { .. } => Some(self.val_unchecked()),
        }
    }

    /// Whether `v(x) ≥ k`, erroring if the precision cannot decide.
    pub fn val_ge(&self, k: i64) -> Result<bool> {
        match &self.repr {
            Repr::Zero(None) => Ok(true),
            Repr::Zero(Some(a)) => {
                if *a >= k {
                    Ok(true)
                } else {
                    Err(Error::PrecisionExhausted("cannot decide valuation bound"))
                }
            }
            Repr::Val { .. } => Ok(self.val_unchecked() >= k),
        }
    }

    /// Absolute precision in uniformizer units (`None` = exact).
    pub fn abs_prec(&self) -> Option<i64> {
        match &self.repr {
            Repr::Zero(k) => *k,
            Repr::Val { shift, digits, .. } => Some(self.field.0.e as i64 * (shift + *digits as i64)),
        }
    }

    /// Relative precision in uniformizer units.
    pub fn rel_prec(&self) -> Option<i64> {
        match &self.repr {
            Repr::Zero(_) => Some(0),
            Repr::Val { .. } => Some(self.abs_prec().unwrap() - self.val_unchecked()),
        }
    }

    /// Residue class of an integral element.
    pub fn residue(&self) -> Result<Fq> {
        let d = &self.field.0;
        match &self.repr {
            Repr::Zero(None) => Ok(d.residue.zero()),
            Repr::Zero(Some(k)) => {
                if *k >= 1 {
                    Ok(d.residue.zero())
                } else {
                    Err(Error::PrecisionExhausted("residue of an imprecise element"))
                }
            }
            Repr::Val { shift, c, .. } => {
                let v = self.val_unchecked();
                if v < 0 {
                    return Err(Error::InvalidInput("residue of a non-integral element".into()));
                }
                if v > 0 {
                    return Ok(d.residue.zero());
                }
                debug_assert_eq!(*shift, 0);
                let pb = BigInt::from(d.p);
                Ok(c[..d.f].iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect())
            }
        }
    }

    /// Unit-part coordinates: `(shift, coords, digits)` for nonzero elements.
    pub fn coords(&self) -> Option<(i64, &[BigInt], u32)> {
        match &self.repr {
            Repr::Val { shift, c, digits } => Some((*shift, c, *digits)),
            _ => None,
        }
    }

    fn rebuild(&self, shift: i64, c: Vec<BigInt>, digits: u32) -> LocalElement {
        self.field.make(shift, c, digits)
    }

    pub fn add(&self, o: &LocalElement) -> LocalElement {
        debug_assert!(self.field == o.field, "mixing fields");
        let e = self.field.0.e as i64;
        match (&self.repr, &o.repr) {
            (Repr::Zero(None), _) => o.clone(),
            (_, Repr::Zero(None)) => self.clone(),
            (Repr::Zero(Some(a)), Repr::Zero(Some(b))) => self.field.zero_to(*a.min(b)),
            (Repr::Zero(Some(a)), Repr::Val { .. }) => o.truncate_abs(*a),
            (Repr::Val { .. }, Repr::Zero(Some(b))) => self.truncate_abs(*b),
            (Repr::Val { shift: s1, c: c1, digits: d1 }, Repr::Val { shift: s2, c: c2, digits: d2 }) => {
                let s = *s1.min(s2);
                let a1 = (s1 + *d1 as i64) - s;
                let a2 = (s2 + *d2 as i64) - s;
                let digits = a1.min(a2).min(self.field.0.digits as i64 + 0) as u32;
                let _ = e;
                let p1 = pow_u64(self.field.0.p, (s1 - s) as u32);
                let p2 = pow_u64(self.field.0.p, (s2 - s) as u32);
                let c: Vec<BigInt> = c1.iter().zip(c2).map(|(x, y)| x * &p1 + y * &p2).collect();
                self.rebuild(s, c, digits)
            }
        }
    }

    pub fn neg(&self) -> LocalElement {
        match &self.repr {
            Repr::Zero(_) => self.clone(),
            Repr::Val { shift, c, digits } => {
                let m = pow_u64(self.field.0.p, *digits);
                let c = c.iter().map(|x| (-x).mod_floor(&m)).collect();
                LocalElement { field: self.field.clone(), repr: Repr::Val { shift: *shift, c, digits: *digits } }
            }
        }
    }

    pub fn sub(&self, o: &LocalElement) -> LocalElement {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &LocalElement) -> LocalElement {
        debug_assert!(self.field == o.field, "mixing fields");
        match (&self.repr, &o.repr) {
            (Repr::Zero(None), _) | (_, Repr::Zero(None)) => self.field.zero(),
            (Repr::Zero(Some(a)), Repr::Zero(Some(b))) => self.field.zero_to(a + b),
            (Repr::Zero(Some(a)), Repr::Val { .. }) => self.field.zero_to(a + o.val_unchecked()),
            (Repr::Val { .. }, Repr::Zero(Some(b))) => self.field.zero_to(b + self.val_unchecked()),
            (Repr::Val { shift: s1, c: c1, digits: d1 }, Repr::Val { shift: s2, c: c2, digits: d2 }) => {
                let digits = *d1.min(d2);
                let m = pow_u64(self.field.0.p, digits);
                let c = self.field.ok_mul(c1, c2, &m);
                self.rebuild(s1 + s2, c, digits)
            }
        }
    }

    /// Reduce the absolute precision to at most `π^k`.
    pub fn truncate_abs(&self, k: i64) -> LocalElement {
        match &self.repr {
            Repr::Zero(None) => self.field.zero_to(k),
            Repr::Zero(Some(a)) => self.field.zero_to(*a.min(&k)),
            Repr::Val { shift, c, digits } => {
                let e = self.field.0.e as i64;
                let cap = k.div_euclid(e) - shift;
                if cap <= 0 {
                    return self.field.zero_to(k.min(e * (shift + *digits as i64)));
                }
                let d = (*digits as i64).min(cap) as u32;
                self.rebuild(*shift, c.clone(), d)
            }
        }
    }

    pub fn square(&self) -> LocalElement {
        self.mul(self)
    }

    pub fn pow(&self, k: u32) -> LocalElement {
        let mut r = self.field.one();
        let mut b = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                r = r.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        r
    }

    pub fn scale_i64(&self, a: i64) -> LocalElement {
        self.mul(&self.field.from_i64(a))
    }

    /// Multiply by `π^k` (any sign).
    pub fn mul_pi_pow(&self, k: i64) -> LocalElement {
        let f = &self.field;
        let base = if k >= 0 { f.uniformizer() } else { f.uniformizer_inverse() };
        self.mul(&base.pow(k.unsigned_abs() as u32))
    }

    /// Multiplicative inverse of a certified nonzero element.
    pub fn inv(&self) -> Result<LocalElement> {
        let v = self.val()?;
        let f = &self.field;
        let u = self.mul_pi_pow(-v);
        let r = u.residue()?;
        let mut w = f.lift_residue(&f.0.residue.inv(&r));
        let two = f.from_i64(2);
        let target = u.rel_prec().unwrap_or(0).max(1);
        let mut known = 1i64;
        for _ in 0..64 {
            if known >= target {
                break;
            }
            w = w.mul(&two.sub(&u.mul(&w)));
            known *= 2;
        }
        let w = w.truncate_abs(target);
        Ok(w.mul_pi_pow(-v))
    }

    pub fn div(&self, o: &LocalElement) -> Result<LocalElement> {
        Ok(self.mul(&o.inv()?))
    }

    /// `π`-adic digit expansion used as a deterministic ordering key.
    pub fn canonical_key(&self, len: usize) -> Vec<i64> {
        let mut key = Vec::new();
        let v = match self.val() {
            Ok(v) => v,
            Err(_) => return vec![i64::MAX],
        };
        key.push(v);
        let f = &self.field;
        let mut y = self.mul_pi_pow(-v);
        for _ in 0..len {
            let r = match y.residue() {
                Ok(r) => r,
                Err(_) => break,
            };
            key.extend(r.iter().map(|&x| x as i64));
            y = y.sub(&f.lift_residue(&r)).mul_pi_pow(-1);
        }
        key
    }

    /// Rational approximation `p^shift · c_0` for elements of `Q_p`.
    pub fn to_rational_approx(&self) -> Option<Rational> {
        if self.field.degree() != 1 {
            return None;
        }
        match &self.repr {
            Repr::Zero(_) => Some(Rational::zero()),
            Repr::Val { shift, c, digits } => {
                let m = pow_u64(self.field.0.p, *digits);
                let mut x = c[0].clone();
                if &x * 2 > m {
                    x -= &m;
                }
                let pp = Rational::from_integer(BigInt::from(self.field.0.p));
                let sc = if *shift >= 0 {
                    num_traits::pow(pp, *shift as usize)
                } else {
                    Rational::one() / num_traits::pow(pp, (-shift) as usize)
                };
                Some(Rational::from_integer(x) * sc)
            }
        }
    }
}

impl fmt::Debug for LocalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Zero(None) => f.write_str("0"),
            Repr::Zero(Some(k)) => write!(f, "O(pi^{k})"),
            Repr::Val { shift, c, digits } => {
                write!(f, "p^{shift}*[")?;
                for (i, x) in c.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    let m = pow_u64(self.field.0.p, *digits);
                    let y = if x * 2 > m { x - &m } else { x.clone() };
                    write!(f, "{y}")?;
                }
                write!(f, "] + O(p^{})", shift + *digits as i64)
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl core::ops::$tr<&LocalElement> for &LocalElement {
            type Output = LocalElement;
            fn $m(self, o: &LocalElement) -> LocalElement {
                LocalElement::$m(self, o)
            }
        }
        impl core::ops::$tr<LocalElement> for LocalElement {
            type Output = LocalElement;
            fn $m(self, o: LocalElement) -> LocalElement {
                LocalElement::$m(&self, &o)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl core::ops::Neg for &LocalElement {
    type Output = LocalElement;
    fn neg(self) -> LocalElement {
        LocalElement::neg(self)
    }
}

impl core::ops::Neg for LocalElement {
    type Output = LocalElement;
    fn neg(self) -> LocalElement {
        LocalElement::neg(&self)
    }
}

#[allow(dead_code)]
pub(crate) fn is_negative_rep(x: &BigInt) -> bool {
    x.is_negative()
}
