//! Dense univariate polynomials over Q, with exact real-root isolation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rat, Rational};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct QPoly(Vec<Rational>);

impl QPoly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        QPoly(c)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        QPoly::new(c.iter().map(|&x| rat(x)).collect())
    }

    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn one() -> Self {
        QPoly(vec![Rational::one()])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        QPoly(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        QPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports `usize::MAX`-free `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.0.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn lead(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> QPoly {
        QPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, s: &Rational) -> QPoly {
        QPoly::new(self.0.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut r = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                r[i + j] += a * b;
            }
        }
        QPoly::new(r)
    }

    pub fn pow(&self, k: u32) -> QPoly {
        let mut r = QPoly::one();
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.lead();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dj) in d.0.iter().enumerate() {
                    r[k + j] -= &c * dj;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (QPoly::new(q), QPoly::new(r))
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.divrem(d).1
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead();
        self.scale(&(Rational::one() / l))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * rat(i as i64)).collect())
    }

    /// `p(x + r)`.
    pub fn shift(&self, r: &Rational) -> QPoly {
        let lin = QPoly::new(vec![r.clone(), Rational::one()]);
        let mut acc = QPoly::zero();
        for c in self.0.iter().rev() {
            acc = acc.mul(&lin).add(&QPoly::constant(c.clone()));
        }
        acc
    }

    /// `p(s·x)`.
    pub fn scale_var(&self, s: &Rational) -> QPoly {
        let mut f = Rational::one();
        let mut c = Vec::with_capacity(self.0.len());
        for a in &self.0 {
            c.push(a * &f);
            f *= s;
        }
        QPoly::new(c)
    }

    /// Composition `self(g(x))`.
    pub fn compose(&self, g: &QPoly) -> QPoly {
        let mut acc = QPoly::zero();
        for c in self.0.iter().rev() {
            acc = acc.mul(g).add(&QPoly::constant(c.clone()));
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg() == 0
    }

    /// Resultant via the Euclidean algorithm over Q.
    pub fn resultant(&self, o: &QPoly) -> Rational {
        if self.is_zero() || o.is_zero() {
            return Rational::zero();
        }
        let (mut a, mut b) = (self.clone(), o.clone());
        let mut res = Rational::one();
        loop {
            let (da, db) = (a.deg(), b.deg());
            if db == 0 {
                return res * num_traits::pow(b.lead(), da);
            }
            let r = a.rem(&b);
            if r.is_zero() {
                return Rational::zero();
            }
            let dr = r.deg();
            if (da * db) % 2 == 1 {
                res = -res;
            }
            res *= num_traits::pow(b.lead(), da - dr);
            a = b;
            b = r;
        }
    }

    /// Discriminant of a polynomial of degree ≥ 1.
    pub fn discriminant(&self) -> Rational {
        let n = self.deg();
        let r = self.resultant(&self.derivative());
        let sign = if (n * (n - 1) / 2) % 2 == 1 { -Rational::one() } else { Rational::one() };
        sign * r / self.lead()
    }

    /// Multiply through by the least common denominator: returns a primitive
    /// integer polynomial with positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let mut l = BigInt::one();
        for c in &self.0 {
            l = l.lcm(c.denom());
        }
        let mut v: Vec<BigInt> = self.0.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &v {
            g = g.gcd(c);
        }
        if g.is_zero() {
            return v;
        }
        if v.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
        v
    }

    // Sturm sequence of a squarefree polynomial.
    fn sturm(&self) -> Vec<QPoly> {
        let mut s = vec![self.clone(), self.derivative()];
        while !s[s.len() - 1].is_zero() {
            let k = s.len();
            let r = s[k - 2].rem(&s[k - 1]).neg();
            if r.is_zero() {
                break;
            }
            s.push(r);
        }
        s
    }

    fn sign_changes(seq: &[QPoly], x: &Rational) -> usize {
        let mut last = 0i8;
        let mut n = 0;
        for p in seq {
            let v = p.eval(x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    n += 1;
                }
                last = s;
            }
        }
        n
    }

    /// Upper bound on the absolute value of every complex root.
    pub fn root_bound(&self) -> Rational {
        let l = self.lead().abs();
        let mut m = Rational::zero();
        for c in &self.0[..self.0.len() - 1] {
            let t = c.abs() / &l;
            if t > m {
                m = t;
            }
        }
        m + Rational::one()
    }

    /// Disjoint isolating intervals `(lo, hi]` for the real roots of a
    /// squarefree polynomial, in increasing order.
    pub fn isolate_real_roots(&self) -> Vec<RealRoot> {
        if self.deg() == 0 {
            return Vec::new();
        }
        let seq = self.sturm();
        let b = self.root_bound();
        let mut out = Vec::new();
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            let n = QPoly::sign_changes(&seq, &lo) - QPoly::sign_changes(&seq, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push(RealRoot { poly: self.clone(), lo, hi });
                continue;
            }
            let mid = (&lo + &hi) / rat(2);
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        out.sort_by(|a, b| a.lo.cmp(&b.lo));
        out
    }

    /// All rational roots, sorted.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let sf = self.divrem(&self.gcd(&self.derivative())).0;
        let ints = sf.primitive_integer();
        let lead = ints.last().cloned().unwrap_or_else(BigInt::one).abs();
        let mut dens = Vec::new();
        let mut d = BigInt::one();
        while d <= lead {
            if (&lead % &d).is_zero() {
                dens.push(d.clone());
            }
            d += 1;
        }
        let mut roots = Vec::new();
        for mut r in sf.isolate_real_roots() {
            let width = Rational::new(BigInt::one(), &lead * &lead * BigInt::from(4));
            r.refine_to(&width);
            for q in &dens {
                let qq = Rational::from_integer(q.clone());
                let num = (&r.hi * &qq).floor().to_integer();
                for p in [num.clone(), num + 1] {
                    let cand = Rational::new(p, q.clone());
                    if cand > r.lo && cand <= r.hi && sf.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

/// A real root of a squarefree rational polynomial, held as the unique root
/// in the half-open interval `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoot {
    pub poly: QPoly,
    pub lo: Rational,
    pub hi: Rational,
}

impl RealRoot {
    /// Halve the interval once, keeping the root inside.
    pub fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / rat(2);
        let fm = self.poly.eval(&mid);
        if fm.is_zero() {
            self.hi = mid;
            return;
        }
        let fh = self.poly.eval(&self.hi);
        if fh.is_zero() || (fm.is_positive() != fh.is_positive()) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to(&mut self, width: &Rational) {
        while &(&self.hi - &self.lo) > width {
            self.bisect();
        }
    }

    /// Sign of `g(θ)` for this root θ; exact, returns 0 iff `g(θ) = 0`.
    pub fn sign_of(&self, g: &QPoly) -> i8 {
        let g = g.rem(&self.poly);
        if g.is_zero() {
            return 0;
        }
        let common = self.poly.gcd(&g);
        if common.deg() > 0 {
            // Roots of `common` are roots of `poly`, so a root of `common`
            // inside the isolating interval must be θ itself.
            let seq = common.sturm();
            if QPoly::sign_changes(&seq, &self.lo) > QPoly::sign_changes(&seq, &self.hi) {
                return 0;
            }
        }
        let mut r = self.clone();
        loop {
            let iv = Interval::eval(&g, &r.lo, &r.hi);
            if iv.lo.is_positive() {
                return 1;
            }
            if iv.hi.is_negative() {
                return -1;
            }
            r.bisect();
        }
    }
}

/// Closed rational interval used for naive interval evaluation.
#[derive(Clone, Debug)]
struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    fn mul(&self, o: &Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        Interval { lo, hi }
    }

    fn eval(g: &QPoly, lo: &Rational, hi: &Rational) -> Interval {
        let x = Interval { lo: lo.clone(), hi: hi.clone() };
        let mut acc = Interval::point(Rational::zero());
        for c in g.coeffs().iter().rev() {
            acc = acc.mul(&x);
            acc.lo += c;
            acc.hi += c;
        }
        acc
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_discriminant() {
        let f = QPoly::from_ints(&[0, -1, 0, 1]);
        assert_eq!(f.discriminant(), rat(4));
        let g = QPoly::from_ints(&[1, -3, 0, 1]);
        assert_eq!(g.discriminant(), rat(81));
        let (q, r) = f.divrem(&QPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, QPoly::from_ints(&[0, 1, 1]));
        assert_eq!(f.shift(&rat(1)), QPoly::from_ints(&[0, 2, 3, 1]));
    }

    #[test]
    fn real_roots_and_signs() {
        let f = QPoly::from_ints(&[1, -3, 0, 1]);
        let roots = f.isolate_real_roots();
        assert_eq!(roots.len(), 3);
        // The middle root lies in (0, 1): f(0) = 1 > 0, f(1) = -1 < 0.
        assert_eq!(roots[1].sign_of(&QPoly::from_ints(&[0, 1])), 1);
        assert_eq!(roots[0].sign_of(&QPoly::from_ints(&[0, 1])), -1);
        assert_eq!(roots[1].sign_of(&f), 0);
        let h = QPoly::from_ints(&[-2, 0, 0, 1]);
        assert_eq!(h.isolate_real_roots().len(), 1);
    }

    #[test]
    fn rational_roots_found() {
        let f = QPoly::from_ints(&[-6, 11, -6, 1]);
        assert_eq!(f.rational_roots(), [rat(1), rat(2), rat(3)]);
        let g = QPoly::from_ints(&[-1, 0, 4]);
        assert_eq!(g.rational_roots(), [Rational::new((-1).into(), 2.into()), Rational::new(1.into(), 2.into())]);
        assert!(QPoly::from_ints(&[1, 0, 1]).rational_roots().is_empty());
    }
}
