//! Factorisation of polynomials over a local field.
//!
//! For a squarefree monic `q` over `K` the algebra `A = K[y]/(q)` is a
//! product of fields. We compute its maximal order over `Z_p` with the
//! Round-2 algorithm, split it with idempotents lifted from the semisimple
//! quotient `O/rad(O/pO)`, and rewrite each factor in tower form.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::embed::Embedding;
use super::field::{LocalElement, LocalField, Repr};
use super::linalg::{in_span, inverse_mod, left_kernel, mulp, rank, reduce_vec, rref};
use crate::error::{Error, Result};
use crate::exact::ff::canonical_irreducible;
use crate::exact::int::pow_u64;
use crate::exact::{FiniteField, FqPoly, QPoly};

/// Largest absolute degree over `Q_p` the engine will build.
pub const MAX_ABSOLUTE_DEGREE: usize = 12;

/// One irreducible factor of a polynomial over `K`, realised as a field.
#[derive(Clone, Debug)]
pub struct Component {
    /// `K[y]/(factor)` in tower form.
    pub field: LocalField,
    /// The structure embedding `K → field`.
    pub embedding: Embedding,
    /// The image of `y`, a root of the polynomial.
    pub root: LocalElement,
}

impl Component {
    /// Degree of the factor over `K`.
    pub fn degree(&self) -> usize {
        self.embedding.degree()
    }
}

const LOST: &str = "local factorisation ran out of p-adic digits";

struct Algebra {
    p: u64,
    n: usize,
    prec: u32,
    modulus: BigInt,
    gamma: Vec<Vec<BigInt>>,
}

impl Algebra {
    fn mul(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let n = self.n;
        let mut r = vec![BigInt::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (rk, g) in r.iter_mut().zip(&self.gamma[i * n + j]) {
                    if !g.is_zero() {
                        *rk += &c * g;
                    }
                }
            }
        }
        r.iter().map(|v| v.mod_floor(&self.modulus)).collect()
    }

    fn gamma_p(&self) -> Vec<Vec<u64>> {
        self.gamma.iter().map(|g| reduce_vec(g, self.p)).collect()
    }
}

struct ModP<'a> {
    p: u64,
    n: usize,
    g: &'a [Vec<u64>],
}

impl ModP<'_> {
    fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let (p, n) = (self.p, self.n);
        let mut r = vec![0u64; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = mulp(xi, yj, p);
                for (rk, &g) in r.iter_mut().zip(&self.g[i * n + j]) {
                    if g != 0 {
                        *rk = (*rk + mulp(c, g, p)) % p;
                    }
                }
            }
        }
        r
    }

    fn pow(&self, x: &[u64], mut e: u64, one: &[u64]) -> Vec<u64> {
        let mut r = one.to_vec();
        let mut b = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        r
    }

    /// Radical of `O/pO` as an RREF basis with pivots.
    fn radical(&self, one: &[u64]) -> (Vec<Vec<u64>>, Vec<usize>) {
        let mut reps = 1usize;
        let mut pj = self.p as u128;
        while pj < self.n as u128 {
            pj *= self.p as u128;
            reps += 1;
        }
        let rows: Vec<Vec<u64>> = (0..self.n)
            .map(|i| {
                let mut x = vec![0u64; self.n];
                x[i] = 1;
                for _ in 0..reps {
                    x = self.pow(&x, self.p, one);
                }
                x
            })
            .collect();
        let mut k = left_kernel(&rows, self.p);
        if k.is_empty() {
            return (k, Vec::new());
        }
        let piv = rref(&mut k, self.p);
        (k, piv)
    }
}

/// Factor `poly` (monic, constant term first) over `K`.
pub fn factor_over(base: &LocalField, poly: &[LocalElement]) -> Result<Vec<Component>> {
    let m = poly.len() - 1;
    if m == 0 {
        return Err(Error::InvalidInput("constant polynomial".into()));
    }
    if base.degree() * m > MAX_ABSOLUTE_DEGREE && m > 1 {
        return Err(Error::Unsupported("local degree beyond the supported range"));
    }
    let lead = &poly[m];
    let poly: Vec<LocalElement> = if lead.is_exact_zero() {
        return Err(Error::InvalidInput("leading coefficient zero".into()));
    } else {
        let li = lead.inv()?;
        poly.iter().map(|c| c.mul(&li)).collect()
    };
    if m == 1 {
        let root = poly[0].neg();
        return Ok(vec![Component { field: base.clone(), embedding: Embedding::identity(base), root }]);
    }
    let (f, e) = (base.f(), base.e());
    let p = base.p();

    // y = Y/π^s makes every coefficient integral.
    let mut s: i64 = 0;
    for (i, c) in poly.iter().enumerate().take(m) {
        if let Some(v) = c.val_lower_bound() {
            if c.is_certified_nonzero() && v < 0 {
                let k = (m - i) as i64;
                s = s.max((-v + k - 1) / k);
            }
        }
    }
    let mut digits = base.digits();
    let mut coeffs: Vec<Vec<BigInt>> = Vec::with_capacity(m);
    for (i, c) in poly.iter().enumerate().take(m) {
        let scaled = c.mul_pi_pow(s * (m - i) as i64);
        let (vec_i, d) = integral_coords(&scaled, base)?;
        digits = digits.min(d);
        coeffs.push(vec_i);
    }
    if digits < 4 {
        return Err(Error::PrecisionExhausted(LOST));
    }
    let modulus = pow_u64(p, digits);
    for c in coeffs.iter_mut() {
        for x in c.iter_mut() {
            *x = x.mod_floor(&modulus);
        }
    }

    // Basis ζ^a π^j Y^k of O_K[Y]/(q̃), index a + f j + f e k.
    let nk = f * e;
    let n = nk * m;
    let mut ypow: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(2 * m - 1);
    for k in 0..m {
        let mut v = vec![vec![BigInt::zero(); nk]; m];
        v[k][0] = BigInt::one();
        ypow.push(v);
    }
    for _ in m..2 * m - 1 {
        let prev = ypow.last().unwrap();
        let mut v = vec![vec![BigInt::zero(); nk]; m];
        for i in 1..m {
            v[i] = prev[i - 1].clone();
        }
        let top = &prev[m - 1];
        for i in 0..m {
            let t = base.ok_mul(top, &coeffs[i], &modulus);
            for (a, x) in v[i].iter_mut().enumerate() {
                *x = (&*x - &t[a]).mod_floor(&modulus);
            }
        }
        ypow.push(v);
    }
    let mut gamma = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in i..n {
            let (ai, ki) = (i % nk, i / nk);
            let (aj, kj) = (j % nk, j / nk);
            let mut ei = vec![BigInt::zero(); nk];
            ei[ai] = BigInt::one();
            let mut ej = vec![BigInt::zero(); nk];
            ej[aj] = BigInt::one();
            let w = base.ok_mul(&ei, &ej, &modulus);
            let mut out = vec![BigInt::zero(); n];
            for (blk, yv) in ypow[ki + kj].iter().enumerate() {
                if yv.iter().all(|x| x.is_zero()) {
                    continue;
                }
                let t = base.ok_mul(&w, yv, &modulus);
                for a in 0..nk {
                    out[blk * nk + a] = t[a].clone();
                }
            }
            gamma[j * n + i] = out.clone();
            gamma[i * n + j] = out;
        }
    }
    let mut alg = Algebra { p, n, prec: digits, modulus, gamma };

    let unit = |i: usize| {
        let mut v = vec![BigInt::zero(); n];
        v[i] = BigInt::one();
        v
    };
    // Tracked elements: 1, Y, ζ_K, π_K.
    let mut tracked: Vec<Vec<BigInt>> = vec![unit(0), unit(nk), unit(1.min(nk - 1)), unit(f.min(nk - 1))];

    let (rad, rad_piv) = loop {
        if alg.prec < 4 {
            return Err(Error::PrecisionExhausted(LOST));
        }
        let gp = alg.gamma_p();
        let mp = ModP { p, n, g: &gp };
        let one_p = reduce_vec(&tracked[0], p);
        let (rad, rad_piv) = mp.radical(&one_p);
        if rad.is_empty() {
            break (rad, rad_piv);
        }
        // I = rad + pO with basis: rad rows (pivots), p·e_j (others).
        let pb = BigInt::from(p);
        let p2 = &pb * &pb;
        let ibasis: Vec<Vec<BigInt>> = (0..n)
            .map(|c| {
                if let Some(k) = rad_piv.iter().position(|&q| q == c) {
                    rad[k].iter().map(|&x| BigInt::from(x)).collect()
                } else {
                    let mut v = vec![BigInt::zero(); n];
                    v[c] = pb.clone();
                    v
                }
            })
            .collect();
        let icoords = |x: &[BigInt]| -> Vec<u64> {
            let mut r: Vec<BigInt> = x.iter().map(|v| v.mod_floor(&p2)).collect();
            let mut out = vec![0u64; n];
            for (k, &c) in rad_piv.iter().enumerate() {
                let coef = r[c].clone();
                out[c] = coef.mod_floor(&pb).to_u64().unwrap();
                for (rj, &vj) in r.iter_mut().zip(&rad[k]) {
                    *rj -= &coef * BigInt::from(vj);
                }
            }
            for j in 0..n {
                if !rad_piv.contains(&j) {
                    let q = r[j].mod_floor(&p2);
                    out[j] = (q / &pb).mod_floor(&pb).to_u64().unwrap();
                }
            }
            out
        };
        let mrows: Vec<Vec<u64>> = (0..n)
            .map(|a| {
                let mut row = Vec::with_capacity(n * n);
                for b in &ibasis {
                    let mut prod = vec![BigInt::zero(); n];
                    for (l, bl) in b.iter().enumerate() {
                        if bl.is_zero() {
                            continue;
                        }
                        for (pk, g) in prod.iter_mut().zip(&alg.gamma[a * n + l]) {
                            *pk += bl * g;
                        }
                    }
                    row.extend(icoords(&prod));
                }
                row
            })
            .collect();
        let mut vk = left_kernel(&mrows, p);
        if vk.is_empty() {
            break (rad, rad_piv);
        }
        let vpiv = rref(&mut vk, p);
        enlarge(&mut alg, &mut tracked, &vk, &vpiv)?;
    };

    decompose(base, &alg, &tracked, &rad, &rad_piv, s, &poly)
}

/// Integral coordinates of `x` (required integral) and their p-adic precision.
fn integral_coords(x: &LocalElement, k: &LocalField) -> Result<(Vec<BigInt>, u32)> {
    let nk = k.degree();
    match &x.repr {
        Repr::Zero(None) => Ok((vec![BigInt::zero(); nk], u32::MAX)),
        Repr::Zero(Some(a)) => Ok((vec![BigInt::zero(); nk], (a.div_euclid(k.e() as i64)).max(0) as u32)),
        Repr::Val { shift, c, digits } => {
            if *shift < 0 {
                return Err(Error::PrecisionExhausted(LOST));
            }
            let sc = pow_u64(k.p(), *shift as u32);
            Ok((c.iter().map(|v| v * &sc).collect(), (*shift as u32) + *digits))
        }
    }
}

/// Replace `O` by `(1/p)·(V + pO)`.
fn enlarge(alg: &mut Algebra, tracked: &mut [Vec<BigInt>], v: &[Vec<u64>], vpiv: &[usize]) -> Result<()> {
    let n = alg.n;
    let p = alg.p;
    let pb = BigInt::from(p);
    let newprec = alg.prec - 2;
    let newmod = pow_u64(p, newprec);
    let vrow = |c: usize| vpiv.iter().position(|&q| q == c);
    let h: Vec<Vec<BigInt>> = (0..n)
        .map(|c| match vrow(c) {
            Some(k) => v[k].iter().map(|&x| BigInt::from(x)).collect(),
            None => {
                let mut r = vec![BigInt::zero(); n];
                r[c] = pb.clone();
                r
            }
        })
        .collect();
    // Solve c·H = z for z with the pivot structure of H.
    let solve = |z: &[BigInt], divide: bool| -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); n];
        for &q in vpiv {
            c[q] = z[q].clone();
        }
        for j in 0..n {
            if vrow(j).is_some() {
                continue;
            }
            let mut t = z[j].clone();
            for (k, &q) in vpiv.iter().enumerate() {
                if v[k][j] != 0 {
                    t -= &c[q] * BigInt::from(v[k][j]);
                }
            }
            c[j] = if divide { t.div_floor(&pb) } else { t };
        }
        c
    };
    let mut gamma = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in i..n {
            let x = alg.mul(&h[i], &h[j]);
            let z: Vec<BigInt> = x.iter().map(|t| t.div_floor(&pb)).collect();
            let c: Vec<BigInt> = solve(&z, true).iter().map(|t| t.mod_floor(&newmod)).collect();
            gamma[j * n + i] = c.clone();
            gamma[i * n + j] = c;
        }
    }
    for t in tracked.iter_mut() {
        // c·H = p·t: pivots get p·t_q, others t_j − Σ t_q V_q[j].
        let mut c = vec![BigInt::zero(); n];
        for &q in vpiv {
            c[q] = &pb * &t[q];
        }
        for j in 0..n {
            if vrow(j).is_some() {
                continue;
            }
            let mut s = t[j].clone();
            for (k, &q) in vpiv.iter().enumerate() {
                if v[k][j] != 0 {
                    s -= &t[q] * BigInt::from(v[k][j]);
                }
            }
            c[j] = s;
        }
        *t = c.iter().map(|x| x.mod_floor(&newmod)).collect();
    }
    alg.prec = newprec;
    alg.modulus = newmod;
    alg.gamma = gamma;
    Ok(())
}

struct Semisimple<'a> {
    p: u64,
    mp: ModP<'a>,
    /// Coordinates of `O/pO` kept in the quotient by the radical.
    keep: Vec<usize>,
    rad: &'a [Vec<u64>],
    rad_piv: &'a [usize],
}

impl Semisimple<'_> {
    fn dim(&self) -> usize {
        self.keep.len()
    }

    fn reduce(&self, x: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut w = x.to_vec();
        for (row, &c) in self.rad.iter().zip(self.rad_piv) {
            let m = w[c];
            if m != 0 {
                for (a, b) in w.iter_mut().zip(row) {
                    *a = (*a + p - mulp(m, *b, p)) % p;
                }
            }
        }
        self.keep.iter().map(|&i| w[i]).collect()
    }

    fn expand(&self, b: &[u64]) -> Vec<u64> {
        let mut x = vec![0u64; self.mp.n];
        for (&i, &v) in self.keep.iter().zip(b) {
            x[i] = v;
        }
        x
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.reduce(&self.mp.mul(&self.expand(a), &self.expand(b)))
    }

    fn add_scaled(&self, a: &[u64], b: &[u64], c: u64) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + mulp(*y, c, self.p)) % self.p).collect()
    }

    /// Evaluate a polynomial over `F_p` at `z` inside `e·B`.
    fn eval(&self, poly: &[u64], z: &[u64], e: &[u64]) -> Vec<u64> {
        let mut acc = vec![0u64; self.dim()];
        for &c in poly.iter().rev() {
            acc = self.mul(&acc, z);
            acc = self.add_scaled(&acc, e, c);
        }
        acc
    }

    fn span_dim(&self, e: &[u64]) -> usize {
        let rows: Vec<Vec<u64>> = (0..self.dim())
            .map(|i| {
                let mut u = vec![0u64; self.dim()];
                u[i] = 1;
                self.mul(e, &u)
            })
            .collect();
        rank(&rows, self.p)
    }

    /// Minimal polynomial over `F_p` of `z ∈ e·B` (unit `e`), monic, constant first.
    fn min_poly(&self, z: &[u64], e: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut pows = vec![e.to_vec()];
        loop {
            let next = self.mul(pows.last().unwrap(), z);
            pows.push(next);
            let ker = left_kernel(&pows, p);
            if let Some(v) = ker.into_iter().find(|v| *v.last().unwrap() != 0) {
                let lc = *v.last().unwrap();
                let li = FiniteField::prime_field(p).inv(&vec![lc])[0];
                return v.iter().map(|&c| mulp(c, li, p)).collect();
            }
        }
    }
}

struct Piece {
    idem: Vec<u64>,
    f: usize,
    gen: Vec<u64>,
    gen_poly: Vec<u64>,
}

fn split_semisimple(b: &Semisimple, one: &[u64], rng: &mut ChaCha8Rng) -> Result<Vec<Piece>> {
    let p = b.p;
    let fp = FiniteField::prime_field(p);
    let mut todo = vec![one.to_vec()];
    let mut done = Vec::new();
    let mut attempts = 0usize;
    while let Some(e) = todo.pop() {
        let dim = b.span_dim(&e);
        loop {
            attempts += 1;
            if attempts > 4000 {
                return Err(Error::PrecisionExhausted(LOST));
            }
            let r: Vec<u64> = (0..b.dim()).map(|_| rng.next_u64() % p).collect();
            let z = b.mul(&e, &r);
            let mu = b.min_poly(&z, &e);
            let mu_fq: FqPoly = mu.iter().map(|&c| vec![c]).collect();
            let factors = fp.factor_squarefree(&mu_fq, rng);
            if factors.len() >= 2 {
                for phi in &factors {
                    let cof = fp.pdivrem(&mu_fq, phi).0;
                    // t·cof ≡ 1 mod φ, idempotent = t(z)·cof(z).
                    let t = poly_inverse_mod(&fp, &cof, phi);
                    let prod = fp.pmul(&t, &cof);
                    let prod = fp.pdivrem(&prod, &mu_fq).1;
                    let coeffs: Vec<u64> = prod.iter().map(|c| c[0]).collect();
                    todo.push(b.eval(&coeffs, &z, &e));
                }
                break;
            }
            if mu.len() - 1 == dim {
                done.push(Piece { idem: e.clone(), f: dim, gen: z, gen_poly: mu });
                break;
            }
        }
    }
    Ok(done)
}

fn poly_inverse_mod(fp: &FiniteField, a: &FqPoly, m: &FqPoly) -> FqPoly {
    // Extended Euclid over F_p.
    let (mut r0, mut r1) = (m.clone(), fp.pdivrem(a, m).1);
    let (mut s0, mut s1): (FqPoly, FqPoly) = (Vec::new(), vec![fp.one()]);
    while !r1.is_empty() {
        let (q, r) = fp.pdivrem(&r0, &r1);
        let s2 = fp.psub(&s0, &fp.pmul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    let c = fp.inv(&r0[0]);
    s0.iter().map(|x| fp.mul(x, &c)).collect()
}

#[allow(clippy::too_many_arguments)]
fn decompose(
    base: &LocalField,
    alg: &Algebra,
    tracked: &[Vec<BigInt>],
    rad: &[Vec<u64>],
    rad_piv: &[usize],
    s: i64,
    poly: &[LocalElement],
) -> Result<Vec<Component>> {
    let (p, n) = (alg.p, alg.n);
    let gp = alg.gamma_p();
    let mp = ModP { p, n, g: &gp };
    let keep: Vec<usize> = (0..n).filter(|i| !rad_piv.contains(i)).collect();
    let ss = Semisimple { p, mp, keep, rad, rad_piv };
    let one_p = reduce_vec(&tracked[0], p);
    let one_b = ss.reduce(&one_p);
    let mut rng = ChaCha8Rng::seed_from_u64(0x00ec_0da7);
    let pieces = split_semisimple(&ss, &one_b, &mut rng)?;
    let m = &alg.modulus;

    let mut comps = Vec::new();
    let mut total = 0usize;
    for piece in pieces {
        let e_i = lift_idempotent(alg, &ss.expand(&piece.idem))?;
        let emul = |x: &[BigInt]| alg.mul(&e_i, x);
        let unit = |i: usize| {
            let mut v = vec![BigInt::zero(); n];
            v[i] = BigInt::one();
            v
        };
        let img_rows: Vec<Vec<u64>> = (0..n).map(|a| reduce_vec(&emul(&unit(a)), p)).collect();
        let ni = rank(&img_rows, p);
        total += ni;
        let fi = piece.f;
        if ni % fi != 0 {
            return Err(Error::PrecisionExhausted(LOST));
        }
        let ei = ni / fi;

        // A degree-one factor is K itself: keep K's own ζ and π.
        let same = ni == base.degree();
        let pi = if same && base.e() > 1 {
            emul(&tracked[3])
        } else if ei == 1 {
            e_i.iter().map(|x| (x * BigInt::from(p)).mod_floor(m)).collect::<Vec<_>>()
        } else {
            let prad: Vec<Vec<u64>> =
                rad.iter().map(|r| ss.mp.mul(&reduce_vec(&e_i, p), r)).filter(|v| v.iter().any(|&x| x != 0)).collect();
            let mut sq: Vec<Vec<u64>> = Vec::new();
            for a in &prad {
                for b in &prad {
                    sq.push(ss.mp.mul(a, b));
                }
            }
            let sq_piv = if sq.is_empty() { Vec::new() } else { rref(&mut sq, p) };
            let cand = prad.iter().find(|v| !in_span(&sq, &sq_piv, v, p)).ok_or(Error::PrecisionExhausted(LOST))?;
            emul(&cand.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
        };

        let zeta = if fi == 1 {
            vec![BigInt::zero(); n]
        } else if same {
            emul(&tracked[2])
        } else {
            residue_root_lift(alg, &ss, &piece, &e_i, fi, &mut rng)?
        };

        // Tower basis ζ^a π^j.
        let mut zpows = vec![e_i.clone()];
        for _ in 1..fi {
            zpows.push(alg.mul(zpows.last().unwrap(), &zeta));
        }
        let mut tower = Vec::with_capacity(ni);
        let mut pj = e_i.clone();
        for _ in 0..ei {
            for za in &zpows {
                tower.push(alg.mul(za, &pj));
            }
            pj = alg.mul(&pj, &pi);
        }
        let pi_e = pj;
        let mut tr: Vec<Vec<u64>> = tower.iter().map(|v| reduce_vec(v, p)).collect();
        let cols = rref(&mut tr, p);
        if cols.len() != ni {
            return Err(Error::PrecisionExhausted(LOST));
        }
        let minor: Vec<Vec<BigInt>> = tower.iter().map(|v| cols.iter().map(|&c| v[c].clone()).collect()).collect();
        let minv = inverse_mod(&minor, p, m).ok_or(Error::PrecisionExhausted(LOST))?;
        let coords = |x: &[BigInt]| -> Vec<BigInt> {
            (0..ni)
                .map(|k| {
                    let mut acc = BigInt::zero();
                    for (r, &c) in cols.iter().enumerate() {
                        acc += &x[c] * &minv[r][k];
                    }
                    acc.mod_floor(m)
                })
                .collect()
        };

        let pc = coords(&pi_e);
        let eis: Vec<Vec<BigInt>> = (0..ei).map(|j| (0..fi).map(|a| (-&pc[a + fi * j]).mod_floor(m)).collect()).collect();
        let unram: Vec<BigInt> = canonical_irreducible(p, fi).into_iter().map(BigInt::from).collect();
        let field =
            if same { base.clone() } else { LocalField::build(p, unram, eis, alg.prec).map_err(|_| Error::PrecisionExhausted(LOST))? };
        let img = |x: &[BigInt]| field.from_coords(0, coords(&emul(x)), alg.prec);

        let mut root = img(&tracked[1]);
        let pi_k = if base.e() > 1 { img(&tracked[3]) } else { field.from_i64(p as i64) };
        if s > 0 {
            root = root.mul(&pi_k.inv()?.pow(s as u32));
        }
        let zeta_k = if base.f() > 1 { img(&tracked[2]) } else { field.zero() };
        let embedding = if same { Embedding::identity(base) } else { Embedding::new(base, &field, zeta_k, pi_k) };

        let mut acc = field.zero();
        for c in poly.iter().rev() {
            acc = acc.mul(&root).add(&embedding.apply(c));
        }
        if !acc.is_zero() {
            return Err(Error::PrecisionExhausted(LOST));
        }
        comps.push(Component { field, embedding, root });
    }
    if total != n {
        return Err(Error::PrecisionExhausted(LOST));
    }
    comps.sort_by_cached_key(|c| (c.degree(), c.field.e(), c.root.canonical_key(6)));
    Ok(comps)
}

fn lift_idempotent(alg: &Algebra, x0: &[u64]) -> Result<Vec<BigInt>> {
    let m = &alg.modulus;
    let mut x: Vec<BigInt> = x0.iter().map(|&v| BigInt::from(v)).collect();
    for _ in 0..(2 * alg.n + 2 * alg.prec as usize + 8) {
        let x2 = alg.mul(&x, &x);
        if x2 == x {
            return Ok(x);
        }
        let x3 = alg.mul(&x2, &x);
        x = x2.iter().zip(&x3).map(|(a, b)| (a * BigInt::from(3) - b * BigInt::from(2)).mod_floor(m)).collect();
    }
    Err(Error::PrecisionExhausted(LOST))
}

/// Lift a root of the canonical residue polynomial into the component `e·O`.
fn residue_root_lift(alg: &Algebra, ss: &Semisimple, piece: &Piece, e: &[BigInt], fi: usize, rng: &mut ChaCha8Rng) -> Result<Vec<BigInt>> {
    let p = alg.p;
    let m = &alg.modulus;
    let h = canonical_irreducible(p, fi);
    let res = FiniteField::with_modulus(p, piece.gen_poly.clone());
    let hq: FqPoly = h.iter().map(|&c| res.from_u64(c)).collect();
    let roots = res.roots(&hq, rng);
    let rho = roots.first().ok_or(Error::PrecisionExhausted(LOST))?;
    // ζ̄ = Σ ρ_k γ^k in e·B.
    let zb = ss.eval(rho, &piece.gen, &piece.idem);
    let mut z = alg.mul(e, &ss.expand(&zb).iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>());

    let hb: Vec<BigInt> = h.iter().map(|&c| BigInt::from(c)).collect();
    let dh: Vec<BigInt> = (1..hb.len()).map(|k| &hb[k] * BigInt::from(k)).collect();
    let eval = |poly: &[BigInt], x: &[BigInt]| {
        let mut acc = vec![BigInt::zero(); alg.n];
        for c in poly.iter().rev() {
            acc = alg.mul(&acc, x);
            for (a, ei) in acc.iter_mut().zip(e) {
                *a = (&*a + c * ei).mod_floor(m);
            }
        }
        acc
    };
    let qorder = num_traits::pow(num_bigint::BigUint::from(p), fi);
    let steps = 2 * (64 - (alg.prec as u64).leading_zeros()) as usize + 4;
    for _ in 0..steps {
        let hz = eval(&hb, &z);
        if hz.iter().all(|x| x.is_zero()) {
            return Ok(z);
        }
        let d = eval(&dh, &z);
        let dinv = unit_inverse(alg, ss, piece, e, &d, &qorder)?;
        let corr = alg.mul(&hz, &dinv);
        z = z.iter().zip(&corr).map(|(a, b)| (a - b).mod_floor(m)).collect();
    }
    let hz = eval(&hb, &z);
    if hz.iter().all(|x| x.is_zero()) {
        Ok(z)
    } else {
        Err(Error::PrecisionExhausted(LOST))
    }
}

fn unit_inverse(
    alg: &Algebra,
    ss: &Semisimple,
    piece: &Piece,
    e: &[BigInt],
    u: &[BigInt],
    qorder: &num_bigint::BigUint,
) -> Result<Vec<BigInt>> {
    let m = &alg.modulus;
    let ub = ss.reduce(&reduce_vec(u, alg.p));
    // ū^{q-2} in the residue field e·B.
    let mut exp = qorder - 2u32;
    let mut r = piece.idem.clone();
    let mut b = ub;
    while exp > num_bigint::BigUint::zero() {
        if exp.bit(0) {
            r = ss.mul(&r, &b);
        }
        b = ss.mul(&b, &b);
        exp >>= 1;
    }
    let mut w = alg.mul(e, &ss.expand(&r).iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>());
    let two_e: Vec<BigInt> = e.iter().map(|x| x * 2).collect();
    for _ in 0..(2 * (64 - (alg.prec as u64).leading_zeros()) as usize + 4) {
        let uw = alg.mul(u, &w);
        if uw.as_slice() == e {
            return Ok(w);
        }
        let t: Vec<BigInt> = two_e.iter().zip(&uw).map(|(a, b)| (a - b).mod_floor(m)).collect();
        w = alg.mul(&w, &t);
    }
    Err(Error::PrecisionExhausted(LOST))
}

/// Factor a rational polynomial over `Q_p` with `digits` p-adic digits.
pub fn factor_over_qp(poly: &QPoly, p: u64, digits: u32) -> Result<Vec<Component>> {
    let k = LocalField::qp(p, digits);
    let c: Vec<LocalElement> = poly.coeffs().iter().map(|x| k.from_rational(x)).collect();
    factor_over(&k, &c)
}

/// As [`factor_over`], retrying with doubled precision on exhaustion.
pub fn factor_with_retry(base_for: impl Fn(u32) -> Result<(LocalField, Vec<LocalElement>)>, digits: u32) -> Result<Vec<Component>> {
    let mut d = digits;
    let mut last = Error::PrecisionExhausted(LOST);
    for _ in 0..5 {
        let (k, poly) = base_for(d)?;
        match factor_over(&k, &poly) {
            Ok(c) => return Ok(c),
            Err(Error::PrecisionExhausted(w)) => last = Error::PrecisionExhausted(w),
            Err(e) => return Err(e),
        }
        d *= 2;
    }
    Err(last)
}
