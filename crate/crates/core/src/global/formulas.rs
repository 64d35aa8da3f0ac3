use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::completions::{prime_completions, Completion, PrimeCompletions};
use super::field::{archimedean_onto_places, infinite_places, FieldTag, SplittingData};
use crate::curves::WeierstrassModel;
use crate::error::{Error, Result};
use crate::exact::int::prime_support;
use crate::exact::{rat, Rational};
use crate::padic::with_precision;
use crate::signs::{archimedean_root_number, local_root_number, local_root_number_qp, parity};
use crate::tate::{fudge_factor, start_digits, tate_over_qp, FudgeFactor, Reduction};

/// `E` or the 2-isogenous curve `E' = E/⟨P⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    E,
    EPrime,
}

/// `Σ_{w|p} (ord_2, ord_3) C(E/X_w, ω)` for each curve and field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeOrds {
    pub p: u64,
    pub ords: BTreeMap<(Side, FieldTag), (i64, i64)>,
}

/// Global C-products, with `ω = λ·dx/y` on the simplified model and its
/// pushforward `λ·dx/y` on `E'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalCValues {
    pub scale: Rational,
    pub primes: Vec<PrimeOrds>,
    /// Infinite places of `L` and `F` where `E(L_v) → E'(L_v)` is onto.
    pub onto_l: usize,
    pub onto_f: usize,
}

impl GlobalCValues {
    /// `ord_l` of the global product over finite places, plus the
    /// archimedean surjectivity count for `E'` when `arch` is set.
    pub fn ord(&self, side: Side, tag: FieldTag, l: u64, arch: bool) -> i64 {
        let finite: i64 = self.primes.iter().filter_map(|p| p.ords.get(&(side, tag))).map(|&(o2, o3)| if l == 2 { o2 } else { o3 }).sum();
        let inf = match (arch, side, tag) {
            (true, Side::EPrime, FieldTag::L) => self.onto_l as i64,
            (true, Side::EPrime, FieldTag::F) => self.onto_f as i64,
            _ => 0,
        };
        finite + inf
    }
}

/// Primes where some C-value can differ from 1: 2, 3, bad primes, primes
/// in coefficient denominators and primes of the differential scale.
pub fn relevant_primes(model: &WeierstrassModel<Rational>, scale: &Rational) -> Result<Vec<u64>> {
    let mut ps = alloc::vec![2u64, 3];
    ps.extend(prime_support(&model.discriminant())?);
    for c in model.coeffs() {
        if !c.is_zero() {
            ps.extend(prime_support(&Rational::from_integer(c.denom().clone()))?);
        }
    }
    ps.extend(prime_support(scale)?);
    ps.sort_unstable();
    ps.dedup();
    Ok(ps)
}

fn scaled(c: &Completion, scale: &Rational) -> crate::padic::LocalElement {
    c.field.from_rational(&(scale * rat(2)))
}

pub(crate) fn prime_ords(sd: &SplittingData, pc: &PrimeCompletions, scale: &Rational) -> Result<PrimeOrds> {
    let mut ords = BTreeMap::new();
    let mut add = |key: (Side, FieldTag), c: FudgeFactor| {
        let e = ords.entry(key).or_insert((0, 0));
        e.0 += c.ord2;
        e.1 += c.ord3;
    };
    add((Side::E, FieldTag::K), fudge_factor(&pc.k.curve(sd), &scaled(&pc.k, scale))?);
    for w in &pc.m {
        add((Side::E, FieldTag::M), fudge_factor(&w.curve(sd), &scaled(w, scale))?);
    }
    for (tag, places) in [(FieldTag::L, &pc.l), (FieldTag::F, &pc.f)] {
        for w in places {
            add((Side::E, tag), fudge_factor(&w.curve(sd), &scaled(w, scale))?);
            add((Side::EPrime, tag), fudge_factor(&w.isogeny(sd)?.codomain, &scaled(w, scale))?);
        }
    }
    if sd.m.is_none() {
        ords.entry((Side::E, FieldTag::M)).or_insert((0, 0));
    }
    Ok(PrimeOrds { p: pc.p, ords })
}

/// All C-products entering the global formulas.
pub fn global_c_values(sd: &SplittingData, scale: &Rational) -> Result<GlobalCValues> {
    if scale.is_zero() {
        return Err(Error::InvalidInput("zero differential".into()));
    }
    let mut primes = Vec::new();
    for p in relevant_primes(&sd.model, scale)? {
        let po = with_precision(start_digits(&sd.simplified, p), |d| prime_ords(sd, &prime_completions(sd, p, d)?, scale))?;
        primes.push(po);
    }
    Ok(GlobalCValues {
        scale: scale.clone(),
        primes,
        onto_l: archimedean_onto_places(sd, FieldTag::L)?,
        onto_f: archimedean_onto_places(sd, FieldTag::F)?,
    })
}

/// `Σ_v ord_l C(E/X_v, λ·dx/y)` for one curve and field.
pub fn global_ord(sd: &SplittingData, side: Side, tag: FieldTag, l: u64, scale: &Rational, arch: bool) -> Result<i64> {
    if side == Side::EPrime && matches!(tag, FieldTag::K | FieldTag::M) && sd.d > 2 {
        return Err(Error::InvalidInput("E' is defined over L and F only".into()));
    }
    Ok(global_c_values(sd, scale)?.ord(side, tag, l, arch))
}

/// Exponents of the global root number formula and the resulting sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalFormula {
    pub d: usize,
    /// `ord_2` of the isogeny ratio over finite places.
    pub ord2_finite: i64,
    /// Infinite places where the isogeny is onto.
    pub ord2_infinite: i64,
    /// `ord_3 C(E/F)C(E/K)²/C(E/M)C(E/L)²`, zero unless `d = 6`.
    pub ord3: i64,
    pub sign: i32,
}

/// `w(E/Q)` from C-products over `L = Q(P)` and, for `d = 6`, `F`, `M`.
pub fn global_root_number_formula(sd: &SplittingData, cv: &GlobalCValues) -> GlobalFormula {
    use FieldTag::*;
    use Side::*;
    let mut ord2 = cv.ord(E, L, 2, false) - cv.ord(EPrime, L, 2, false);
    let mut inf = cv.onto_l as i64;
    let mut ord3 = 0;
    if sd.d == 6 {
        ord2 += cv.ord(E, F, 2, false) - cv.ord(EPrime, F, 2, false);
        inf += cv.onto_f as i64;
        ord3 = cv.ord(E, F, 3, false) + 2 * cv.ord(E, K, 3, false) - cv.ord(E, M, 3, false) - 2 * cv.ord(E, L, 3, false);
    }
    GlobalFormula { d: sd.d, ord2_finite: ord2, ord2_infinite: inf, ord3, sign: parity(ord2 + inf + ord3) }
}

/// `w(E/Q_v)` at each relevant prime (and `None` for the real place).
pub fn local_root_numbers(model: &WeierstrassModel<Rational>) -> Result<Vec<(Option<u64>, i32)>> {
    let mut out = alloc::vec![(None, archimedean_root_number())];
    for p in relevant_primes(model, &rat(1))? {
        out.push((Some(p), local_root_number_qp(model, p)?));
    }
    Ok(out)
}

/// `∏_v w(E/Q_v)`.
pub fn root_number_local_product(model: &WeierstrassModel<Rational>) -> Result<i32> {
    Ok(local_root_numbers(model)?.iter().map(|x| x.1).product())
}

/// `w(E/X_w)` multiplied over the places `w | p` of a lattice field.
pub fn field_root_number_at(sd: &SplittingData, tag: FieldTag, p: u64) -> Result<i32> {
    with_precision(start_digits(&sd.simplified, p), |d| {
        let pc = prime_completions(sd, p, d)?;
        let places: Vec<&Completion> = match tag {
            FieldTag::K => alloc::vec![&pc.k],
            FieldTag::M => pc.m.iter().collect(),
            FieldTag::L => pc.l.iter().collect(),
            FieldTag::F => pc.f.iter().collect(),
        };
        let mut s = 1;
        for w in places {
            s *= local_root_number(&w.curve(sd))?;
        }
        Ok(s)
    })
}

/// `w(E/X) = ∏_v w(E/X_v)` for a field of the lattice.
pub fn field_root_number(sd: &SplittingData, tag: FieldTag) -> Result<i32> {
    let field = sd.field(tag).ok_or(Error::InvalidInput("field not in the lattice".into()))?;
    let mut s = parity(infinite_places(field) as i64);
    for p in relevant_primes(&sd.model, &rat(1))? {
        s *= field_root_number_at(sd, tag, p)?;
    }
    Ok(s)
}

/// `(−1)^{#{v|∞} + #{v split multiplicative}}` for a semistable curve.
pub fn semistable_root_number(model: &WeierstrassModel<Rational>) -> Result<i32> {
    let mut split = 0;
    for p in relevant_primes(model, &rat(1))? {
        match tate_over_qp(model, p)?.reduction {
            Reduction::Additive => return Err(Error::NonSemistable),
            Reduction::Split => split += 1,
            _ => {}
        }
    }
    Ok(parity(1 + split))
}
