use alloc::vec::Vec;

use super::context::{isogeny_context, IsogenyContext};
use super::ledger::SignLedger;
use super::parity;
use crate::curves::WeierstrassModel;
use crate::error::Result;
use crate::exact::Rational;
use crate::padic::{minus_one_minus_one, with_precision, Completion, Embedding, LocalElement, LocalField};
use crate::tate::{base_change, fudge_factor, start_digits, FudgeFactor};

/// `C(E/K, dx/y)` on a model with `a1 = a3 = 0`.
pub fn dx_over_y(model: &WeierstrassModel<LocalElement>) -> Result<FudgeFactor> {
    fudge_factor(model, &model.a1.field().from_i64(2))
}

/// `w(E/K)` at a real or complex place.
pub fn archimedean_root_number() -> i32 {
    -1
}

/// One factor `O(E, field, l)` of the local product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OSign {
    pub curve: &'static str,
    pub field: &'static str,
    pub l: u64,
    pub value: i32,
}

/// The m-invariants of `E/K` and their product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MInvariants {
    pub rho: i32,
    pub eps: i32,
    pub eps_rho: i32,
    pub m: i32,
}

#[derive(Clone, Debug)]
pub struct LocalSigns {
    pub d: usize,
    pub o_signs: Vec<OSign>,
    /// `(−1)^{[K:Q_2]}` in residue characteristic 2, else `1`.
    pub degree_sign: i32,
    pub w: i32,
    pub m: Option<MInvariants>,
    pub minus_one_minus_one: i32,
}

impl LocalSigns {
    /// Append every sign to `ledger` under `place`.
    pub fn record(&self, place: &str, ledger: &mut SignLedger) -> Result<()> {
        for o in &self.o_signs {
            let name = alloc::format!("O({},{},{})", o.curve, o.field, o.l);
            ledger.record(place, &name, o.value, "parity of ord_l C with dx/y pulled back along 2-isogenies")?;
        }
        ledger.record(place, "w", self.w, "product of O-signs indexed by [K(E[2]):K]")?;
        ledger.record(place, "(-1,-1)", self.minus_one_minus_one, "degree and residue characteristic of K")?;
        if let Some(m) = self.m {
            ledger.record(place, "m1rho", m.rho, "sigma_P(E/K(P)) over orbit representatives")?;
            ledger.record(place, "m1eps", m.eps, "sigma_P(E/F) over all P when d is even")?;
            ledger.record(place, "m1epsrho", m.eps_rho, "ord_3 C(E/F)/C(E/K(sqrt D)) when d = 6")?;
            ledger.record(place, "m", m.m, "product of the three m-invariants")?;
        }
        Ok(())
    }

    /// `m = (−1,−1)_K · w`.
    pub fn m_identity_holds(&self) -> Option<bool> {
        self.m.map(|m| m.m == self.minus_one_minus_one * self.w)
    }
}

fn o(curve: &'static str, field: &'static str, l: u64, c: &FudgeFactor) -> OSign {
    OSign { curve, field, l, value: c.parity(l) }
}

fn evaluate(ctx: &IsogenyContext, with_m: bool) -> Result<LocalSigns> {
    let k = &ctx.base;
    let idk = Embedding::identity(k);
    let sp = &ctx.splitting;
    let over_f = |i: usize| -> Result<FudgeFactor> { dx_over_y(&ctx.isogeny_over(&sp.embedding, &sp.roots[i])?.codomain) };
    let (o_signs, m) = match ctx.d {
        1 => {
            let ce = dx_over_y(&ctx.model_over(&idk))?;
            let cs: Vec<FudgeFactor> = ctx.reps.iter().map(|r| dx_over_y(&r.isogeny.codomain)).collect::<Result<_>>()?;
            let os = alloc::vec![o("E", "K", 2, &ce), o("E'", "K", 2, &cs[0]), o("E''", "K", 2, &cs[1]), o("E'''", "K", 2, &cs[2])];
            let rho = parity(cs.iter().map(|c| c.ord2 - ce.ord2).sum());
            (os, Some((rho, 1, 1)))
        }
        2 => {
            let ce_k = dx_over_y(&ctx.model_over(&idk))?;
            let c1_k = dx_over_y(&ctx.reps[0].isogeny.codomain)?;
            let ce_f = dx_over_y(&ctx.model_over(&sp.embedding))?;
            let c1_f = over_f(0)?;
            let c2_f = dx_over_y(&ctx.reps[1].isogeny.codomain)?;
            let os = alloc::vec![o("E", "K", 2, &ce_k), o("E'", "K", 2, &c1_k), o("E'", "F", 2, &c1_f), o("E''", "F", 2, &c2_f)];
            let m = if with_m {
                let c3_f = over_f(2)?;
                let rho = parity(c1_k.ord2 - ce_k.ord2 + c2_f.ord2 - ce_f.ord2);
                let eps = parity(c1_f.ord2 + c2_f.ord2 + c3_f.ord2 - 3 * ce_f.ord2);
                Some((rho, eps, 1))
            } else {
                None
            };
            (os, m)
        }
        3 => {
            let ce_f = dx_over_y(&ctx.model_over(&sp.embedding))?;
            let c1_f = dx_over_y(&ctx.reps[0].isogeny.codomain)?;
            let os = alloc::vec![o("E", "F", 2, &ce_f), o("E'", "F", 2, &c1_f)];
            (os, Some((parity(c1_f.ord2 - ce_f.ord2), 1, 1)))
        }
        _ => {
            let rep = &ctx.reps[0];
            let ce_l = dx_over_y(&ctx.model_over(&rep.embedding))?;
            let c1_l = dx_over_y(&rep.isogeny.codomain)?;
            let ce_f = dx_over_y(&ctx.model_over(&sp.embedding))?;
            let c1_f = over_f(0)?;
            let (_, me) = ctx.quadratic.as_ref().expect("d = 6 carries K(sqrt D)");
            let ce_m = dx_over_y(&ctx.model_over(me))?;
            let os = alloc::vec![
                o("E", "L'", 2, &ce_l),
                o("E'", "L'", 2, &c1_l),
                o("E", "F", 2, &ce_f),
                o("E'", "F", 2, &c1_f),
                o("E", "M", 3, &ce_m),
                o("E", "F", 3, &ce_f),
            ];
            let m = if with_m {
                let (c2_f, c3_f) = (over_f(1)?, over_f(2)?);
                let rho = parity(c1_l.ord2 - ce_l.ord2);
                let eps = parity(c1_f.ord2 + c2_f.ord2 + c3_f.ord2 - 3 * ce_f.ord2);
                let eps_rho = parity(ce_f.ord3 - ce_m.ord3);
                Some((rho, eps, eps_rho))
            } else {
                None
            };
            (os, m)
        }
    };
    let degree_sign = if k.p() == 2 { parity(k.degree() as i64) } else { 1 };
    let w = degree_sign * o_signs.iter().map(|s| s.value).product::<i32>();
    let m = m.map(|(rho, eps, eps_rho)| MInvariants { rho, eps, eps_rho, m: rho * eps * eps_rho });
    Ok(LocalSigns { d: ctx.d, o_signs, degree_sign, w, m, minus_one_minus_one: minus_one_minus_one(&Completion::Local(k.clone())) as i32 })
}

/// Root number, O-signs and m-invariants of `E/K`.
pub fn local_signs(model: &WeierstrassModel<LocalElement>) -> Result<LocalSigns> {
    evaluate(&isogeny_context(model)?, true)
}

/// `w(E/K)` from the C-values of `E` and its 2-isogenous curves over the
/// subfields of `K(E[2])`.
pub fn local_root_number(model: &WeierstrassModel<LocalElement>) -> Result<i32> {
    Ok(evaluate(&isogeny_context(model)?, false)?.w)
}

pub fn local_signs_qp(model: &WeierstrassModel<Rational>, p: u64) -> Result<LocalSigns> {
    with_precision(start_digits(model, p), |d| local_signs(&base_change(model, &LocalField::qp(p, d))))
}

pub fn local_root_number_qp(model: &WeierstrassModel<Rational>, p: u64) -> Result<i32> {
    with_precision(start_digits(model, p), |d| local_root_number(&base_change(model, &LocalField::qp(p, d))))
}
