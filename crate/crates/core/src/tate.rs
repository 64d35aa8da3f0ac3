//! Tate's algorithm over any [`LocalField`], with the fudge factors
//! `C(E/K, ω)` built on top of it.

use alloc::vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::curves::WeierstrassModel;
use crate::error::{Error, Result};
use crate::exact::int::val;
use crate::exact::{FiniteField, Fq, Rational};
use crate::padic::{with_precision, LocalElement, LocalField};

/// Kodaira symbol of the special fibre.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kodaira {
    /// `I_n`; `I(0)` is good reduction.
    I(u32),
    II,
    III,
    IV,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I(n) => write!(f, "I{n}"),
            Kodaira::II => write!(f, "II"),
            Kodaira::III => write!(f, "III"),
            Kodaira::IV => write!(f, "IV"),
            Kodaira::IStar(n) => write!(f, "I{n}*"),
            Kodaira::IVStar => write!(f, "IV*"),
            Kodaira::IIIStar => write!(f, "III*"),
            Kodaira::IIStar => write!(f, "II*"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reduction {
    Good,
    Split,
    NonSplit,
    Additive,
}

impl Reduction {
    pub fn is_multiplicative(self) -> bool {
        matches!(self, Reduction::Split | Reduction::NonSplit)
    }
}

impl fmt::Display for Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reduction::Good => "good",
            Reduction::Split => "split multiplicative",
            Reduction::NonSplit => "nonsplit multiplicative",
            Reduction::Additive => "additive",
        })
    }
}

/// `x = u²x' + r`, `y = u³y' + u²s·x' + t`.
#[derive(Clone, Debug)]
pub struct Urst {
    pub u: LocalElement,
    pub r: LocalElement,
    pub s: LocalElement,
    pub t: LocalElement,
}

impl Urst {
    pub fn identity(k: &LocalField) -> Self {
        Urst { u: k.one(), r: k.zero(), s: k.zero(), t: k.zero() }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Urst) -> Urst {
        let u2 = self.u.square();
        Urst {
            u: self.u.mul(&next.u),
            r: self.r.add(&u2.mul(&next.r)),
            s: self.s.add(&self.u.mul(&next.s)),
            t: self.t.add(&u2.mul(&self.s).mul(&next.r)).add(&u2.mul(&self.u).mul(&next.t)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LocalCurveData {
    pub kodaira: Kodaira,
    pub tamagawa: u32,
    /// Valuation of the minimal discriminant.
    pub disc_val: i64,
    pub conductor: i64,
    pub reduction: Reduction,
    pub minimal: WeierstrassModel<LocalElement>,
    /// From the input model to `minimal`.
    pub urst: Urst,
    /// `v(u)` of `urst`, in uniformizer units.
    pub u_val: i64,
}

struct Ctx {
    k: LocalField,
    ff: FiniteField,
    p: u64,
}

impl Ctx {
    fn res(&self, x: &LocalElement) -> Result<Fq> {
        x.residue()
    }

    fn pdiv(&self, x: &LocalElement) -> Result<bool> {
        x.val_ge(1)
    }

    fn vge(&self, x: &LocalElement, n: i64) -> Result<bool> {
        x.val_ge(n)
    }

    fn preduce(&self, x: &LocalElement) -> Result<LocalElement> {
        Ok(self.k.lift_residue(&self.res(x)?))
    }

    fn pinv(&self, x: &LocalElement) -> Result<LocalElement> {
        let r = self.res(x)?;
        if self.ff.is_zero(&r) {
            return Err(Error::PrecisionExhausted("inverting a non-unit residue"));
        }
        Ok(self.k.lift_residue(&self.ff.inv(&r)))
    }

    /// Lift of a square root (`e = 2`) or a `p`-th root in characteristic `p`.
    fn proot(&self, x: &LocalElement, e: u64) -> Result<LocalElement> {
        let r = self.res(x)?;
        let y = if e == self.p {
            self.ff.pth_root(&r)
        } else {
            self.ff.sqrt(&r).ok_or(Error::PrecisionExhausted("expected a residue square"))?
        };
        Ok(self.k.lift_residue(&y))
    }

    fn pi_pow(&self, n: i64) -> LocalElement {
        self.k.one().mul_pi_pow(n)
    }

    fn div_pi(&self, x: &LocalElement, n: i64) -> LocalElement {
        x.mul_pi_pow(-n)
    }

    /// Whether `ax² + bx + c` has a root over the residue field.
    fn quadroots(&self, a: &LocalElement, b: &LocalElement, c: &LocalElement) -> Result<bool> {
        let (a, b, c) = (self.res(a)?, self.res(b)?, self.res(c)?);
        let ff = &self.ff;
        if ff.is_zero(&a) {
            return Ok(!ff.is_zero(&b) || ff.is_zero(&c));
        }
        if self.p == 2 {
            return Ok(ff.count_roots(&vec![c, b, a]) > 0);
        }
        let d = ff.sub(&ff.mul(&b, &b), &ff.scale(&ff.mul(&a, &c), 4));
        Ok(ff.is_square(&d))
    }

    fn cubicroots(&self, b: &LocalElement, c: &LocalElement, d: &LocalElement) -> Result<usize> {
        let poly = vec![self.res(d)?, self.res(c)?, self.res(b)?, self.ff.one()];
        Ok(self.ff.count_roots(&poly))
    }
}

struct State {
    model: WeierstrassModel<LocalElement>,
    urst: Urst,
}

impl State {
    fn apply(&mut self, step: Urst) -> Result<()> {
        self.model = self.model.transform(&step.u, &step.r, &step.s, &step.t)?;
        self.urst = self.urst.then(&step);
        Ok(())
    }

    fn rst(&mut self, r: LocalElement, s: LocalElement, t: LocalElement) -> Result<()> {
        let u = r.field().one();
        self.apply(Urst { u, r, s, t })
    }
}

/// Full Tate's algorithm, valid in every residue characteristic.
pub fn tate_algorithm(model: &WeierstrassModel<LocalElement>) -> Result<LocalCurveData> {
    let k = model.a1.field().clone();
    for a in model.coeffs() {
        if a.field() != &k {
            return Err(Error::InvalidInput("model coefficients lie in different fields".into()));
        }
    }
    if !model.discriminant().is_certified_nonzero() {
        return if model.discriminant().is_exact_zero() {
            Err(Error::Singular)
        } else {
            Err(Error::PrecisionExhausted("discriminant indistinguishable from zero"))
        };
    }
    let cx = Ctx { ff: k.residue_field().clone(), p: k.p(), k: k.clone() };
    let zero = k.zero();
    let halfmodp = if cx.p == 2 { k.zero() } else { cx.pinv(&k.from_i64(2))? };

    let mut st = State { model: model.clone(), urst: Urst::identity(&k) };

    // Make the model integral.
    let weights = [1i64, 2, 3, 4, 6];
    let mut scale = 0i64;
    for (w, a) in weights.iter().zip(model.coeffs()) {
        if let Some(v) = a.val_lower_bound() {
            if v < 0 {
                scale = scale.max((-v + w - 1) / w);
            }
        }
    }
    if scale > 0 {
        st.apply(Urst { u: cx.pi_pow(-scale), r: zero.clone(), s: zero.clone(), t: zero.clone() })?;
    }

    loop {
        let (b2, _, _, _) = st.model.b_invariants();
        let delta = st.model.discriminant();
        let vd = delta.val()?;
        if vd == 0 {
            return Ok(finish(st, Kodaira::I(0), 1, 0, 0, Reduction::Good));
        }

        // Move the singular point to (0, 0).
        let m = &st.model;
        let (r, t) = if cx.p == 2 {
            if cx.pdiv(&b2)? {
                let r = cx.proot(&m.a4, 2)?;
                let t = cx.proot(&r.add(&m.a2).mul(&r).add(&m.a4).mul(&r).add(&m.a6), 2)?;
                (r, t)
            } else {
                let temp = cx.pinv(&m.a1)?;
                let r = temp.mul(&m.a3);
                let t = temp.mul(&m.a4.add(&r.square()));
                (r, t)
            }
        } else if cx.p == 3 {
            let (_, b4, b6, _) = m.b_invariants();
            let r = if cx.pdiv(&b2)? { cx.proot(&b6.neg(), 3)? } else { cx.pinv(&b2)?.mul(&b4).neg() };
            let t = m.a1.mul(&r).add(&m.a3);
            (r, t)
        } else {
            let (c4, c6) = m.c_invariants();
            let r = if cx.pdiv(&c4)? {
                cx.pinv(&k.from_i64(12))?.mul(&b2).neg()
            } else {
                cx.pinv(&c4.scale_i64(12))?.mul(&c6.add(&b2.mul(&c4))).neg()
            };
            let t = halfmodp.mul(&m.a1.mul(&r).add(&m.a3)).neg();
            (r, t)
        };
        let (r, t) = (cx.preduce(&r)?, cx.preduce(&t)?);
        st.rst(r, zero.clone(), t)?;
        let (b2, _, b6, b8) = st.model.b_invariants();

        if !cx.pdiv(&b2)? {
            let m = &st.model;
            let split = cx.quadroots(&k.one(), &m.a1, &m.a2.neg())?;
            let n = vd as u32;
            let (c, red) = if split { (n, Reduction::Split) } else { (if n % 2 == 0 { 2 } else { 1 }, Reduction::NonSplit) };
            return Ok(finish(st, Kodaira::I(n), c, vd, 1, red));
        }
        let m = &st.model;
        if !cx.vge(&m.a6, 2)? {
            return Ok(finish(st, Kodaira::II, 1, vd, vd, Reduction::Additive));
        }
        if !cx.vge(&b8, 3)? {
            return Ok(finish(st, Kodaira::III, 2, vd, vd - 1, Reduction::Additive));
        }
        if !cx.vge(&b6, 3)? {
            let c = if cx.quadroots(&k.one(), &cx.div_pi(&m.a3, 1), &cx.div_pi(&m.a6, 2).neg())? { 3 } else { 1 };
            return Ok(finish(st, Kodaira::IV, c, vd, vd - 2, Reduction::Additive));
        }

        // Now π | a1, a2 and π² | a3, a4 and π³ | a6.
        let (s, t) = if cx.p == 2 {
            (cx.proot(&m.a2, 2)?, cx.proot(&cx.div_pi(&m.a6, 2), 2)?.mul_pi_pow(1))
        } else if cx.p == 3 {
            (m.a1.clone(), m.a3.clone())
        } else {
            (m.a1.mul(&halfmodp).neg(), m.a3.mul(&halfmodp).neg())
        };
        st.rst(zero.clone(), s, t)?;

        let m = &st.model;
        let b = cx.div_pi(&m.a2, 1);
        let c = cx.div_pi(&m.a4, 2);
        let d = cx.div_pi(&m.a6, 3);
        let w = d
            .square()
            .scale_i64(27)
            .sub(&b.square().mul(&c.square()))
            .add(&b.square().mul(&b).mul(&d).scale_i64(4))
            .sub(&b.mul(&c).mul(&d).scale_i64(18))
            .add(&c.square().mul(&c).scale_i64(4));
        let x = c.scale_i64(3).sub(&b.square());
        let sw = if cx.pdiv(&w)? {
            if cx.pdiv(&x)? {
                3
            } else {
                2
            }
        } else {
            1
        };

        if sw == 1 {
            let cp = 1 + cx.cubicroots(&b, &c, &d)? as u32;
            return Ok(finish(st, Kodaira::IStar(0), cp, vd, vd - 4, Reduction::Additive));
        }

        if sw == 2 {
            // Double root of the cubic: move it to T = 0.
            let r = if cx.p == 2 {
                cx.proot(&c, 2)?
            } else if cx.p == 3 {
                c.mul(&cx.pinv(&b)?)
            } else {
                b.mul(&c).sub(&d.scale_i64(9)).mul(&cx.pinv(&x.scale_i64(2))?)
            };
            let r = cx.preduce(&r)?.mul_pi_pow(1);
            st.rst(r, zero.clone(), zero.clone())?;
            let (mut ix, mut iy) = (3i64, 3i64);
            let (mut mx, mut my) = (2i64, 2i64);
            let cp;
            loop {
                let m = &st.model;
                let a3t = cx.div_pi(&m.a3, my);
                let a6t = cx.div_pi(&m.a6, mx + my);
                if !cx.pdiv(&a3t.square().add(&a6t.scale_i64(4)))? {
                    cp = if cx.quadroots(&k.one(), &a3t, &a6t.neg())? { 4 } else { 2 };
                    break;
                }
                let t = if cx.p == 2 { cx.proot(&a6t, 2)? } else { cx.preduce(&a3t.mul(&halfmodp).neg())? };
                st.rst(zero.clone(), zero.clone(), t.mul_pi_pow(my))?;
                my += 1;
                iy += 1;
                let m = &st.model;
                let a2t = cx.div_pi(&m.a2, 1);
                let a4t = cx.div_pi(&m.a4, 1 + mx);
                let a6t = cx.div_pi(&m.a6, mx + my);
                if !cx.pdiv(&a4t.square().sub(&a6t.mul(&a2t).scale_i64(4)))? {
                    cp = if cx.quadroots(&a2t, &a4t, &a6t)? { 4 } else { 2 };
                    break;
                }
                let r = if cx.p == 2 {
                    cx.proot(&a6t.mul(&cx.pinv(&a2t)?), 2)?
                } else {
                    cx.preduce(&a4t.mul(&cx.pinv(&a2t.scale_i64(2))?).neg())?
                };
                st.rst(r.mul_pi_pow(mx), zero.clone(), zero.clone())?;
                mx += 1;
                ix += 1;
                if ix + iy > 6 + vd {
                    return Err(Error::PrecisionExhausted("I_n* loop did not terminate"));
                }
            }
            let n = (ix + iy - 5) as u32;
            return Ok(finish(st, Kodaira::IStar(n), cp, vd, vd - ix - iy + 1, Reduction::Additive));
        }

        // Triple root: move it to T = 0.
        let r = if cx.p == 2 {
            b.clone()
        } else if cx.p == 3 {
            cx.proot(&d.neg(), 3)?
        } else {
            b.mul(&cx.pinv(&k.from_i64(3))?).neg()
        };
        let r = cx.preduce(&r)?.mul_pi_pow(1);
        st.rst(r, zero.clone(), zero.clone())?;
        let m = &st.model;
        let a3t = cx.div_pi(&m.a3, 2);
        let a6t = cx.div_pi(&m.a6, 4);
        if !cx.pdiv(&a3t.square().add(&a6t.scale_i64(4)))? {
            let c = if cx.quadroots(&k.one(), &a3t, &a6t.neg())? { 3 } else { 1 };
            return Ok(finish(st, Kodaira::IVStar, c, vd, vd - 6, Reduction::Additive));
        }
        let t = if cx.p == 2 { cx.proot(&a6t, 2)?.neg() } else { cx.preduce(&a3t.mul(&halfmodp).neg())? };
        st.rst(zero.clone(), zero.clone(), t.mul_pi_pow(2))?;
        let m = &st.model;
        if !cx.vge(&m.a4, 4)? {
            return Ok(finish(st, Kodaira::IIIStar, 2, vd, vd - 7, Reduction::Additive));
        }
        if !cx.vge(&m.a6, 6)? {
            return Ok(finish(st, Kodaira::IIStar, 1, vd, vd - 8, Reduction::Additive));
        }
        // Not minimal: scale by π and start over.
        st.apply(Urst { u: cx.pi_pow(1), r: zero.clone(), s: zero.clone(), t: zero.clone() })?;
    }
}

fn finish(st: State, kodaira: Kodaira, tamagawa: u32, disc_val: i64, conductor: i64, reduction: Reduction) -> LocalCurveData {
    let u_val = st.urst.u.val().expect("u is a nonzero power of the uniformizer");
    LocalCurveData { kodaira, tamagawa, disc_val, conductor, reduction, minimal: st.model, urst: st.urst, u_val }
}

/// Split or nonsplit, for multiplicative reduction only.
pub fn reduction_split_test(model: &WeierstrassModel<LocalElement>) -> Result<bool> {
    let data = tate_algorithm(model)?;
    match data.reduction {
        Reduction::Split => Ok(true),
        Reduction::NonSplit => Ok(false),
        _ => Err(Error::WrongReductionClass),
    }
}

/// `C(E/K, ω) = c · |ω/ω_min|` with its 2- and 3-adic valuations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FudgeFactor {
    pub value: Rational,
    pub ord2: i64,
    pub ord3: i64,
}

impl FudgeFactor {
    pub fn new(value: Rational) -> FudgeFactor {
        let (ord2, ord3) = (val(&value, 2), val(&value, 3));
        FudgeFactor { value, ord2, ord3 }
    }

    /// From Tate data and `v(λ)` for `ω = λ · dx/(2y + a1x + a3)` on the
    /// model Tate's algorithm was run on.
    pub fn from_data(data: &LocalCurveData, k: &LocalField, scale_val: i64) -> FudgeFactor {
        // ω_min = u·ω_model, so |ω/ω_min| = |λ/u| = q^{v(u) − v(λ)}.
        FudgeFactor::new(Rational::from_integer(BigInt::from(data.tamagawa)) * q_power(k, data.u_val - scale_val))
    }

    pub fn ord(&self, l: u64) -> i64 {
        match l {
            2 => self.ord2,
            3 => self.ord3,
            _ => val(&self.value, l),
        }
    }

    /// `(−1)^{ord_l C}`.
    pub fn parity(&self, l: u64) -> i32 {
        if self.ord(l).rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }
}

/// `C(E/K, ω)` for `ω = λ · dx/(2y + a1x + a3)`.
pub fn fudge_factor(model: &WeierstrassModel<LocalElement>, scale: &LocalElement) -> Result<FudgeFactor> {
    let data = tate_algorithm(model)?;
    Ok(FudgeFactor::from_data(&data, model.a1.field(), scale.val()?))
}

/// `(−1)^{ord_l C(E/K, ω)}`.
pub fn o_sign(model: &WeierstrassModel<LocalElement>, scale: &LocalElement, l: u64) -> Result<i32> {
    Ok(fudge_factor(model, scale)?.parity(l))
}

/// The model over `K` of a curve given over `Q`.
pub fn base_change(model: &WeierstrassModel<Rational>, k: &LocalField) -> WeierstrassModel<LocalElement> {
    model.map(|a| k.from_rational(a))
}

/// `q^n` as a rational, for external callers building C-values.
pub fn q_power(k: &LocalField, n: i64) -> Rational {
    let q = k.q();
    if n >= 0 {
        Rational::from_integer(num_traits::pow(q, n as usize))
    } else {
        Rational::one() / Rational::from_integer(num_traits::pow(q, (-n) as usize))
    }
}

/// Starting digits for a model over `Q_p`: room for the discriminant plus
/// slack at 2 and 3.
pub fn start_digits(model: &WeierstrassModel<Rational>, p: u64) -> u32 {
    let vd = val(&model.discriminant(), p).max(0) as u32;
    let vc = model.coeffs().iter().filter(|a| !a.is_zero()).map(|a| (-val(a, p)).max(0) as u32).max().unwrap_or(0);
    let small = if p <= 3 { 20 } else { 0 };
    24 + 2 * vd + 6 * vc + small
}

/// Tate's algorithm for a rational model over `Q_p`, with automatic
/// precision.
pub fn tate_over_qp(model: &WeierstrassModel<Rational>, p: u64) -> Result<LocalCurveData> {
    with_precision(start_digits(model, p), |d| tate_algorithm(&base_change(model, &LocalField::qp(p, d))))
}
