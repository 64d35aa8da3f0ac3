//! `compute local` and `compute global`: one report object per call.

use std::fmt::Write as _;

use ecparity::exact::rat;
use ecparity::global::{
    build_splitting_data, global_c_values, global_root_number_formula, kramer_scenario, local_root_numbers, semistable_root_number,
};
use ecparity::padic::{with_precision, LocalField};
use ecparity::signs::{local_signs, SignLedger};
use ecparity::tate::{base_change, fudge_factor, start_digits, tate_algorithm};
use ecparity::Error;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::record::is_squarefree;
use crate::report::ledger_lines;

fn place_name(p: Option<u64>) -> String {
    p.map_or_else(|| "inf".to_string(), |p| p.to_string())
}

/// Tate data, C-value, O-signs, root number and m-invariants over `Q_p`.
pub fn compute_local(a: [i64; 5], p: u64, precision: u32) -> Result<Value, CliError> {
    if !ecparity::exact::int::is_prime_u64(p) {
        return Err(CliError::Input(format!("{p} is not prime")));
    }
    let e = ecparity::curves::from_ints(a)?;
    let (t, c, s) = with_precision(precision.max(start_digits(&e, p)), |d| {
        let k = LocalField::qp(p, d);
        let em = base_change(&e, &k);
        Ok((tate_algorithm(&em)?, fudge_factor(&em, &k.one())?, local_signs(&base_change(&e.simplified()?, &k))?))
    })?;
    let mut ledger = SignLedger::new();
    s.record(&format!("p={p}"), &mut ledger)?;
    let o_signs: Vec<Value> = s.o_signs.iter().map(|o| json!({ "curve": o.curve, "field": o.field, "l": o.l, "value": o.value })).collect();
    Ok(json!({
        "command": "local",
        "curve": a,
        "p": p,
        "kodaira": t.kodaira.to_string(),
        "conductor_exponent": t.conductor,
        "tamagawa": t.tamagawa,
        "reduction": t.reduction.to_string(),
        "minimal_discriminant_valuation": t.disc_val,
        "c_invariant_differential": c.value.to_string(),
        "local_d": s.d,
        "o_signs": o_signs,
        "w": s.w,
        "minus_one_minus_one": s.minus_one_minus_one,
        "m_invariants": s.m.map(|m| json!({ "m1rho": m.rho, "m1eps": m.eps, "m1epsrho": m.eps_rho, "m": m.m })),
        "ledger": ledger_lines(&ledger),
    }))
}

/// The C-value assembly of `w(E/Q)`, the local root numbers, the
/// semistable formula and optionally the twist product for `Q(√r)`.
pub fn compute_global(a: [i64; 5], twist: Option<i64>) -> Result<Value, CliError> {
    let e = ecparity::curves::from_ints(a)?;
    if let Some(r) = twist {
        if !is_squarefree(r) || r == 1 {
            return Err(CliError::Input(format!("twist {r} must be squarefree and not 1")));
        }
    }
    let sd = build_splitting_data(&e)?;
    let f = global_root_number_formula(&sd, &global_c_values(&sd, &rat(1))?);
    let locals = local_root_numbers(&e)?;
    let product: i32 = locals.iter().map(|x| x.1).product();
    let fields: Vec<Value> = [Some(&sd.k), sd.m.as_ref(), Some(&sd.l), Some(&sd.f)]
        .into_iter()
        .flatten()
        .map(|nf| json!({ "field": format!("{:?}", nf.tag), "degree": nf.degree(), "poly": nf.poly.to_string() }))
        .collect();
    let semistable = match semistable_root_number(&e) {
        Ok(s) => json!(s),
        Err(Error::NonSemistable) => json!("not semistable"),
        Err(err) => return Err(err.into()),
    };
    let twist = match twist {
        None => Value::Null,
        Some(r) => {
            let rep = kramer_scenario(&e, &rat(r))?;
            let places: Vec<Value> =
                rep.places.iter().map(|pl| json!({ "place": place_name(pl.p), "kappa": pl.kappa, "lhs": pl.lhs, "w_F": pl.w_f })).collect();
            json!({ "r": r, "kramer_sign": rep.kramer_sign, "w_F": rep.w_f, "places": places, "ledger": ledger_lines(&rep.ledger) })
        }
    };
    Ok(json!({
        "command": "global",
        "curve": a,
        "d": sd.d,
        "fields": fields,
        "formula": { "ord2_finite": f.ord2_finite, "ord2_infinite": f.ord2_infinite, "ord3": f.ord3, "sign": f.sign },
        "local_root_numbers": locals.iter().map(|&(p, w)| json!({ "place": place_name(p), "w": w })).collect::<Vec<_>>(),
        "local_product": product,
        "w": f.sign,
        "semistable_formula": semistable,
        "twist": twist,
    }))
}

/// `key: value` lines; nested values are printed as compact JSON.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = v {
        for (k, x) in map {
            match x {
                Value::String(s) => {
                    let _ = writeln!(out, "{k}: {s}");
                }
                Value::Null => {}
                _ => {
                    let _ = writeln!(out, "{k}: {x}");
                }
            }
        }
    }
    out
}
