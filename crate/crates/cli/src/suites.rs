//! Verification suites. Inputs are generated sequentially from the seed,
//! checked in parallel, and reported in input order.

use ecparity::curves::{from_ints, WeierstrassModel};
use ecparity::exact::{rat, ratio, Rational};
use ecparity::global::{
    build_splitting_data, cassels_scenario, global_c_values, global_root_number_formula, kramer_scenario, local_root_numbers, s3_scenario,
    semistable_root_number, split_primes,
};
use ecparity::padic::{hilbert_symbol, with_precision, LocalField};
use ecparity::regulator::{regulator_constant, verify_relation, GRelation, PairedRepresentation};
use ecparity::signs::{isogeny_formula_check, local_root_number, local_signs, symbol_product_check, SignLedger};
use ecparity::tate::{base_change, start_digits, tate_algorithm, Reduction};
use ecparity::Error;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::generate::CurveGenerator;
use crate::oracles::{hilbert_brute, tate_table};
use crate::record::{parse_corpus, CurveRecord};
use crate::report::{CheckResult, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Hilbert,
    #[value(alias = "lemma85")]
    SymbolProduct,
    TateOracle,
    LocalRoot,
    #[value(alias = "thm83")]
    MInvariants,
    Isogeny,
    Kt,
    S3,
    Cassels,
    Global,
    Regulator,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Hilbert => "hilbert",
            Suite::SymbolProduct => "symbol-product",
            Suite::TateOracle => "tate-oracle",
            Suite::LocalRoot => "local-root",
            Suite::MInvariants => "m-invariants",
            Suite::Isogeny => "isogeny",
            Suite::Kt => "kt",
            Suite::S3 => "s3",
            Suite::Cassels => "cassels",
            Suite::Global => "global",
            Suite::Regulator => "regulator",
        }
    }

    fn takes_corpus(self) -> bool {
        !matches!(self, Suite::Hilbert | Suite::SymbolProduct | Suite::Regulator)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Starting p-adic digits; raised per curve to what its discriminant
    /// needs and doubled on precision loss.
    pub precision: u32,
    /// Replaces the generated or builtin inputs of curve suites.
    pub corpus: Option<Vec<CurveRecord>>,
    /// Restricts local suites to one residue characteristic.
    pub prime: Option<u64>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 1, precision: 30, corpus: None, prime: None }
    }
}

impl SuiteOptions {
    fn primes(&self, default: &[u64]) -> Vec<u64> {
        self.prime.map_or_else(|| default.to_vec(), |p| vec![p])
    }

    fn digits(&self, e: &WeierstrassModel<Rational>, p: u64) -> u32 {
        self.precision.max(start_digits(e, p))
    }
}

/// The committed 50-curve corpus over Q with frozen root numbers.
pub fn builtin_corpus() -> Vec<CurveRecord> {
    parse_corpus(include_str!("../data/global50.jsonl")).expect("builtin corpus parses")
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Report, CliError> {
    if opts.corpus.is_some() && !suite.takes_corpus() {
        return Err(CliError::Input(format!("suite {} generates its own inputs and takes no corpus", suite.name())));
    }
    if let Some(p) = opts.prime {
        if !ecparity::exact::int::is_prime_u64(p) {
            return Err(CliError::Input(format!("{p} is not prime")));
        }
    }
    let results = match suite {
        Suite::Hilbert => hilbert(opts),
        Suite::SymbolProduct => symbol_product(opts),
        Suite::TateOracle => tate_oracle(opts)?,
        Suite::LocalRoot => local_root(opts)?,
        Suite::MInvariants => m_invariants(opts)?,
        Suite::Isogeny => isogeny(opts),
        Suite::Kt => kt(opts)?,
        Suite::S3 => s3(opts)?,
        Suite::Cassels => cassels(opts)?,
        Suite::Global => global(opts)?,
        Suite::Regulator => regulator(opts),
    };
    Ok(Report::new(suite.name(), opts.seed, opts.precision, results))
}

fn curve_inputs(rec: &CurveRecord, p: Option<u64>) -> Value {
    let mut v = json!({ "label": rec.label, "a": rec.a });
    if let Some(p) = p {
        v["p"] = json!(p);
    }
    if let Some(r) = rec.twist {
        v["twist"] = json!(r);
    }
    v
}

fn qp_check<T>(
    e: &WeierstrassModel<Rational>,
    p: u64,
    opts: &SuiteOptions,
    f: impl Fn(&WeierstrassModel<ecparity::padic::LocalElement>) -> ecparity::Result<T>,
) -> ecparity::Result<T> {
    with_precision(opts.digits(e, p), |d| f(&base_change(e, &LocalField::qp(p, d))))
}

/// Parallel map over jobs, keeping input order.
fn par_checks<J: Sync>(jobs: &[J], f: impl Fn(&J) -> Vec<CheckResult> + Sync + Send) -> Vec<CheckResult> {
    jobs.par_iter().map(f).collect::<Vec<_>>().into_iter().flatten().collect()
}

fn corpus_or(opts: &SuiteOptions, default: impl FnOnce() -> Vec<CurveRecord>) -> Vec<CurveRecord> {
    opts.corpus.clone().unwrap_or_else(default)
}

fn model(rec: &CurveRecord) -> Result<WeierstrassModel<Rational>, CliError> {
    rec.model()
}

// ----- hilbert ---------------------------------------------------------

fn unit(g: &mut CurveGenerator, p: i64) -> Rational {
    loop {
        let (n, d) = (g.int(-60, 60), g.int(1, 12));
        if n % p != 0 && d % p != 0 {
            return ratio(n, d);
        }
    }
}

fn p_power(p: u64, k: i64) -> Rational {
    let q = rat(p as i64);
    if k >= 0 {
        num_traits::pow(q, k as usize)
    } else {
        num_traits::pow(q, (-k) as usize).recip()
    }
}

/// Every valuation pair in `[−2, 2]²` with 16 random unit pairs each.
fn hilbert(opts: &SuiteOptions) -> Vec<CheckResult> {
    let mut g = CurveGenerator::new(opts.seed);
    let mut jobs = Vec::new();
    for p in opts.primes(&[2, 3, 5, 7]) {
        for va in -2..=2 {
            for vb in -2..=2 {
                for _ in 0..16 {
                    let a = unit(&mut g, p as i64) * p_power(p, va);
                    let b = unit(&mut g, p as i64) * p_power(p, vb);
                    jobs.push((p, a, b));
                }
            }
        }
    }
    par_checks(&jobs, |(p, a, b)| {
        let (p, id) = (*p, format!("hilbert/p={p}/a={a}/b={b}"));
        let inputs = json!({ "p": p, "a": a.to_string(), "b": b.to_string() });
        let engine = with_precision(opts.precision, |d| {
            let k = LocalField::qp(p, d);
            hilbert_symbol(&k.from_rational(a), &k.from_rational(b))
        });
        vec![match engine {
            Ok(s) => {
                let brute = hilbert_brute(a, b, p);
                CheckResult::new(id, s as i32 == brute, inputs, json!({ "engine": s, "search": brute }))
            }
            Err(e) => CheckResult::from_error(id, inputs, &e),
        }]
    })
}

// ----- symbol product over the roots of a cubic ------------------------

fn cubic_disc([a, b, c]: [i64; 3]) -> i128 {
    let (a, b, c) = (a as i128, b as i128, c as i128);
    a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c
}

/// 200 random separable monic cubics per prime.
fn symbol_product(opts: &SuiteOptions) -> Vec<CheckResult> {
    let mut g = CurveGenerator::new(opts.seed);
    let mut jobs = Vec::new();
    for p in opts.primes(&[2, 3, 5]) {
        let mut n = 0;
        while n < 200 {
            let f = [g.int(-30, 30), g.int(-30, 30), g.int(-30, 30)];
            if cubic_disc(f) != 0 {
                jobs.push((p, f));
                n += 1;
            }
        }
    }
    par_checks(&jobs, |&(p, f)| {
        let id = format!("symbol-product/p={p}/f={f:?}");
        let inputs = json!({ "p": p, "cubic": f });
        let res = with_precision(opts.precision, |d| {
            let k = LocalField::qp(p, d);
            symbol_product_check(&f.map(|x| k.from_i64(x)))
        });
        vec![match res {
            Ok(c) => CheckResult::new(
                id,
                c.holds(),
                inputs,
                json!({ "factors": c.factors, "product": c.product, "minus_one_minus_one": c.expected }),
            ),
            Err(e) => CheckResult::from_error(id, inputs, &e),
        }]
    })
}

// ----- Tate's algorithm against the valuation table --------------------

fn c_model(a: [i64; 5], r: i64) -> [i64; 5] {
    let [a1, a2, a3, a4, a6] = a;
    let (b2, b4, b6) = (a1 * a1 + 4 * a2, 2 * a4 + a1 * a3, a3 * a3 + 4 * a6);
    let c4 = b2 * b2 - 24 * b4;
    let c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    [0, 0, 0, -27 * c4 * r * r, -54 * c6 * r * r * r]
}

/// Uniform models, their twists by `p`, non-minimal rescalings, and short
/// models with prescribed `p`-powers in `a4` and `a6`.
fn tate_curve(g: &mut CurveGenerator, p: i64) -> [i64; 5] {
    loop {
        let a = match g.int(0, 3) {
            0 => g.uniform(),
            1 => c_model(g.uniform(), p),
            2 => {
                let [a1, a2, a3, a4, a6] = g.uniform();
                [a1 * p, a2 * p.pow(2), a3 * p.pow(3), a4 * p.pow(4), a6 * p.pow(6)]
            }
            _ => {
                let (i, j) = (g.int(0, 4) as u32, g.int(0, 6) as u32);
                [0, 0, 0, g.int(-9, 9) * p.pow(i), g.int(-9, 9) * p.pow(j)]
            }
        };
        if from_ints(a).is_ok() {
            return a;
        }
    }
}

fn tate_oracle(opts: &SuiteOptions) -> Result<Vec<CheckResult>, CliError> {
    let primes = opts.primes(&[5, 7, 13]);
    let jobs: Vec<(CurveRecord, u64)> = match &opts.corpus {
        Some(c) => c.iter().flat_map(|r| primes.iter().map(move |&p| (r.clone(), p))).collect(),
        None => {
            let mut g = CurveGenerator::new(opts.seed);
            let mut jobs = Vec::new();
            for &p in &primes {
                let mut effective = 0;
                let mut i = 0;
                while effective < 200 && i < 1000 {
                    let a = tate_curve(&mut g, p as i64);
                    effective += tate_table(&from_ints(a)?, p).is_some() as usize;
                    jobs.push((CurveRecord::new(format!("t{p}-{i}"), a), p));
                    i += 1;
                }
            }
            jobs
        }
    };
    Ok(par_checks(&jobs, |(rec, p)| {
        let p = *p;
        let id = format!("tate-oracle/{}/p={p}", rec.label);
        let inputs = curve_inputs(rec, Some(p));
        let e = match model(rec) {
            Ok(e) => e,
            Err(e) => return vec![CheckResult::skipped(id, inputs, e.to_string())],
        };
        let Some((kod, c, f)) = tate_table(&e, p) else {
            return vec![CheckResult::skipped(id, inputs, "outside the valuation table (p < 5 or minimal v(Δ) > 12)")];
        };
        vec![match qp_check(&e, p, opts, tate_algorithm) {
            Ok(t) => CheckResult::new(
                id,
                (t.kodaira, t.tamagawa, t.conductor) == (kod, c, f),
                inputs,
                json!({
                    "engine": { "kodaira": t.kodaira.to_string(), "tamagawa": t.tamagawa, "conductor": t.conductor },
                    "table": { "kodaira": kod.to_string(), "tamagawa": c, "conductor": f },
                }),
            ),
            Err(err) => CheckResult::from_error(id, inputs, &err),
        }]
    }))
}

// ----- local root numbers at semistable places -------------------------

fn local_corpus(seed: u64, n: usize) -> Vec<CurveRecord> {
    let mut g = CurveGenerator::new(seed);
    (0..n)
        .map(|i| {
            let a = match i % 6 {
                4 => {
                    let d = g.pick(&[1, 2, 3, 6]);
                    g.with_d(d)
                }
                5 => {
                    let p = g.pick(&[2, 3]);
                    g.additive_at(p)
                }
                _ => g.uniform(),
            };
            CurveRecord::new(format!("c{i}"), a)
        })
        .collect()
}

fn local_root(opts: &SuiteOptions) -> Result<Vec<CheckResult>, CliError> {
    let corpus = corpus_or(opts, || local_corpus(opts.seed, 120));
    let primes = opts.primes(&[2, 3, 5, 7, 11, 13]);
    let jobs: Vec<(CurveRecord, u64)> = corpus.iter().flat_map(|r| primes.iter().map(move |&p| (r.clone(), p))).collect();
    Ok(par_checks(&jobs, |(rec, p)| {
        let p = *p;
        let id = format!("local-root/{}/p={p}", rec.label);
        let inputs = curve_inputs(rec, Some(p));
        let res = model(rec).map_err(|e| e.to_string()).map(|e| {
            qp_check(&e, p, opts, |em| {
                let t = tate_algorithm(em)?;
                if t.reduction == Reduction::Additive {
                    return Ok(None);
                }
                Ok(Some((t.reduction, local_root_number(em)?)))
            })
        });
        vec![match res {
            Err(msg) => CheckResult::skipped(id, inputs, msg),
            Ok(Ok(None)) => CheckResult::skipped(id, inputs, "additive reduction"),
            Ok(Ok(Some((red, w)))) => {
                let expected = if red == Reduction::Split { -1 } else { 1 };
                CheckResult::new(id, w == expected, inputs, json!({ "reduction": red.to_string(), "w": w, "expected": expected }))
            }
            Ok(Err(e)) => CheckResult::from_error(id, inputs, &e),
        }]
    }))
}

// ----- m-invariants ----------------------------------------------------

fn m_invariants(opts: &SuiteOptions) -> Result<Vec<CheckResult>, CliError> {
    let jobs: Vec<(CurveRecord, u64)> = match &opts.corpus {
        Some(c) => {
            let primes = opts.primes(&[2, 3, 5, 7]);
            c.iter().flat_map(|r| primes.iter().map(move |&p| (r.clone(), p))).collect()
        }
        None => {
            let mut g = CurveGenerator::new(opts.seed);
            let mut jobs = Vec::new();
            for p in opts.primes(&[2, 3, 5, 7]) {
                for d in [1, 2, 3, 6] {
                    for i in 0..7 {
                        jobs.push((CurveRecord::new(format!("d{d}-{i}"), g.with_d(d)), p));
                    }
                }
            }
            // Cube roots of 2 and 5 give local S3 and C3 extensions.
            for (c, p) in [(-2, 2), (-2, 3), (-5, 5), (-2, 7)] {
                if opts.prime.is_none_or(|q| q == p) {
                    jobs.push((CurveRecord::new(format!("cube-root{c}"), [0, 0, 0, 0, c]), p));
                }
            }
            jobs
        }
    };
    Ok(par_checks(&jobs, |(rec, p)| {
        let p = *p;
        let id = format!("m-invariants/{}/p={p}", rec.label);
        let inputs = curve_inputs(rec, Some(p));
        let e = match model(rec) {
            Ok(e) => e,
            Err(e) => return vec![CheckResult::skipped(id, inputs, e.to_string())],
        };
        vec![match qp_check(&e, p, opts, local_signs) {
            Ok(s) => {
                let Some(m) = s.m else {
                    return vec![CheckResult::skipped(id, inputs, "m-invariants unavailable")];
                };
                let shape = (s.d % 2 == 0 || m.eps == 1) && (s.d == 6 || m.eps_rho == 1);
                let mut ledger = SignLedger::new();
                let _ = s.record(&format!("p={p}"), &mut ledger);
                CheckResult::new(
                    id,
                    s.m_identity_holds() == Some(true) && shape,
                    inputs,
                    json!({
                        "local_d": s.d,
                        "w": s.w,
                        "minus_one_minus_one": s.minus_one_minus_one,
                        "m1rho": m.rho,
                        "m1eps": m.eps,
                        "m1epsrho": m.eps_rho,
                        "m": m.m,
                    }),
                )
                .with_ledger(&ledger)
            }
            Err(err) => CheckResult::from_error(id, inputs, &err),
        }]
    }))
}

// ----- explicit 2- and 3-isogenies ------------------------------------

fn isogeny_valid(a: i64, b: i64, deg: u64) -> bool {
    match deg {
        2 => b != 0 && a * a != 4 * b,
        3 => a != 0 && b != 0 && 4 * a + 27 * b != 0,
        _ => false,
    }
}

fn isogeny(opts: &SuiteOptions) -> Vec<CheckResult> {
    let primes = opts.primes(&[2, 3, 5, 7]);
    let mut jobs: Vec<(String, i64, i64, u64, u64)> = Vec::new();
    match &opts.corpus {
        Some(c) => {
            for r in c {
                for &l in &primes {
                    let (a, b, deg) = r.isogeny.map_or((0, 0, 0), |i| (i.a, i.b, i.p));
                    jobs.push((r.label.clone(), a, b, deg, l));
                }
            }
        }
        None => {
            let mut g = CurveGenerator::new(opts.seed);
            for &l in &primes {
                jobs.push(("fixed".into(), 22, -7, 2, l));
                jobs.push(("fixed".into(), 1, -12, 3, l));
                for (deg, n) in [(2u64, 25), (3, 13)] {
                    let mut k = 0;
                    while k < n {
                        let (a, b, u) = (g.int(-30, 30), g.int(-30, 30), g.pick(&[1i64, 1, 2, 3]));
                        let (a, b) = if deg == 2 { (u * u * a, u.pow(4) * b) } else { (u * u * a, u * u * b) };
                        if isogeny_valid(a, b, deg) {
                            jobs.push((format!("r{k}"), a, b, deg, l));
                            k += 1;
                        }
                    }
                }
            }
        }
    }
    par_checks(&jobs, |(label, a, b, deg, l)| {
        let (a, b, deg, l) = (*a, *b, *deg, *l);
        let id = format!("isogeny/{label}/deg={deg}/a={a}/b={b}/p={l}");
        let inputs = json!({ "label": label, "a": a, "b": b, "degree": deg, "p": l });
        if deg == 0 {
            return vec![CheckResult::skipped(id, inputs, "no isogeny datum")];
        }
        if !isogeny_valid(a, b, deg) {
            return vec![CheckResult::skipped(id, inputs, "singular or unsupported isogeny datum")];
        }
        let e = match deg {
            2 => from_ints([0, a, 0, b, 0]),
            _ => from_ints([0, a, 0, -2 * a * b, a * b * b]),
        };
        let start = e.map_or(opts.precision, |e| opts.digits(&e, l)).max(40);
        let res = with_precision(start, |d| {
            let k = LocalField::qp(l, d);
            isogeny_formula_check(&k.from_i64(a), &k.from_i64(b), deg)
        });
        vec![match res {
            Ok(c) => CheckResult::new(id, c.holds(), inputs, json!({ "w": c.w, "sigma": c.sigma, "symbol": c.symbol })),
            Err(err) => CheckResult::from_error(id, inputs, &err),
        }]
    })
}

// ----- Kramer–Tunnell --------------------------------------------------

fn place_name(p: Option<u64>) -> String {
    p.map_or_else(|| "inf".to_string(), |p| p.to_string())
}

fn kt(opts: &SuiteOptions) -> Result<Vec<CheckResult>, CliError> {
    let corpus = corpus_or(opts, builtin_corpus);
    Ok(par_checks(&corpus, |rec| {
        let base = format!("kt/{}", rec.label);
        let inputs = curve_inputs(rec, None);
        let Some(r) = rec.twist else {
            return vec![CheckResult::skipped(base, inputs, "no twist datum")];
        };
        let res = model(rec).map_err(|e| e.to_string()).map(|e| kramer_scenario(&e, &rat(r)));
        let rep = match res {
            Err(msg) => return vec![CheckResult::skipped(base, inputs, msg)],
            Ok(Err(err)) => return vec![CheckResult::from_error(base, inputs, &err)],
            Ok(Ok(rep)) => rep,
        };
        let places: Vec<Value> = rep
            .places
            .iter()
            .map(|pl| json!({ "place": place_name(pl.p), "kappa": pl.kappa, "lhs": pl.lhs, "holds": pl.holds() }))
            .collect();
        let local_ok = rep.places.iter().all(|pl| pl.holds() != Some(false));
        let per_place =
            CheckResult::new(format!("{base}/places"), local_ok, inputs.clone(), json!({ "places": places })).with_ledger(&rep.ledger);
        let unsupported = rep.unsupported_places();
        let product = match rep.kramer_sign {
            Some(k) if unsupported.is_empty() => {
                CheckResult::new(format!("{base}/product"), k == rep.w_f, inputs, json!({ "kramer_sign": k, "w_F": rep.w_f }))
            }
            _ => CheckResult::skipped(
                format!("{base}/product"),
                inputs,
                format!("kappa out of reach at {}", unsupported.iter().map(|&p| place_name(p)).collect::<Vec<_>>().join(",")),
            ),
        };
        vec![per_place, product]
    }))
}

// ----- S3 identity -----------------------------------------------------

fn s3(opts: &SuiteOptions) -> Result<Vec<CheckResult>, CliError> {
    let corpus = corpus_or(opts, builtin_corpus);
    Ok(par_checks(&corpus, |rec| {
        let id = format!("s3/{}", rec.label);
        let inputs = curve_inputs(rec, None);
        let sd = match model(rec).map_err(|e| e.to_string()).map(|e| build_splitting_data(&e)) {
            Err(msg) => return vec![CheckResult::skipped(id, inputs, msg)],
            Ok(Err(err)) => return vec![CheckResult::from_error(id, inputs, &err)],
            Ok(Ok(sd)) => sd,
        };
        if sd.d != 6 {
            return vec![CheckResult::skipped(id, inputs, format!("d = {}", sd.d))];
        }
        vec![match s3_scenario(&sd, &split_primes(&sd, 100)) {
            Ok(r) => {
                let places: Vec<Value> =
                    r.places.iter().map(|pl| json!({ "p": pl.p, "split": pl.split, "ord3": pl.ord3, "w_product": pl.w_product })).collect();
                let split = r.places.iter().filter(|pl| pl.split).count();
                CheckResult::new(
                    id,
                    r.holds(),
                    inputs,
                    json!({ "c_ratio_sign": r.lhs, "w_K": r.w_k, "w_M": r.w_m, "w_L": r.w_l, "split_places": split, "places": places }),
                )
                .with_ledger(&r.ledger)
            }
            Err(err) => CheckResult::from_error(id, inputs, &err),
        }]
    }))
}

// ----- isogeny product over all places --------------------------------

fn cassels(opts: &SuiteOptions) -> Result<Vec<CheckResult>, CliError> {
    let corpus = corpus_or(opts, builtin_corpus);
    Ok(par_checks(&corpus, |rec| {
        let id = format!("cassels/{}", rec.label);
        let inputs = curve_inputs(rec, None);
        let sd = match model(rec).map_err(|e| e.to_string()).map(|e| build_splitting_data(&e)) {
            Err(msg) => return vec![CheckResult::skipped(id, inputs, msg)],
            Ok(Err(err)) => return vec![CheckResult::from_error(id, inputs, &err)],
            Ok(Ok(sd)) => sd,
        };
        if sd.d > 2 {
            return vec![CheckResult::skipped(id, inputs, format!("no rational 2-torsion (d = {})", sd.d))];
        }
        vec![match cassels_scenario(&sd) {
            Ok(r) => {
                let places: Vec<Value> = r
                    .places
                    .iter()
                    .map(|pl| {
                        json!({ "place": place_name(pl.p), "sigma": pl.sigma, "sigma_local": pl.sigma_local, "w": pl.w, "symbol": pl.symbol })
                    })
                    .collect();
                CheckResult::new(
                    id,
                    r.holds(),
                    inputs,
                    json!({
                        "a": r.a.to_string(),
                        "b": r.b.to_string(),
                        "sigma_product": r.sigma_product,
                        "c_ratio_sign": r.c_ratio_sign,
                        "root_number": r.root_number,
                        "places": places,
                    }),
                )
                .with_ledger(&r.ledger)
            }
            Err(err) => CheckResult::from_error(id, inputs, &err),
        }]
    }))
}

// ----- global root number ----------------------------------------------

/// Scalings of the differential the global sign must not depend on.
fn scales() -> [Rational; 4] {
    [rat(2), rat(3), rat(6), ratio(5, 6)]
}

fn global(opts: &SuiteOptions) -> Result<Vec<CheckResult>, CliError> {
    let corpus = corpus_or(opts, builtin_corpus);
    Ok(par_checks(&corpus, |rec| {
        let id = format!("global/{}", rec.label);
        let inputs = curve_inputs(rec, None);
        let e = match model(rec) {
            Ok(e) => e,
            Err(msg) => return vec![CheckResult::skipped(id, inputs, msg.to_string())],
        };
        let res = (|| -> ecparity::Result<_> {
            let sd = build_splitting_data(&e)?;
            let f = global_root_number_formula(&sd, &global_c_values(&sd, &rat(1))?);
            let mut scaled = Vec::new();
            for s in scales() {
                scaled.push(global_root_number_formula(&sd, &global_c_values(&sd, &s)?).sign);
            }
            Ok((sd.d, f, scaled, local_root_numbers(&e)?))
        })();
        let (d, f, scaled, locals) = match res {
            Ok(x) => x,
            Err(err) => return vec![CheckResult::from_error(id, inputs, &err)],
        };
        let product: i32 = locals.iter().map(|x| x.1).product();
        let mut ledger = SignLedger::new();
        for &(p, w) in &locals {
            let _ = ledger.record(&place_name(p), "w", w, "local root number over Q_p");
        }
        let _ = ledger.record("global", "formula", f.sign, "C-values over the 2-division lattice");
        let frozen = rec.expected.is_none_or(|x| x.w == f.sign && x.d == d);
        let pass = f.sign == product && scaled.iter().all(|&s| s == f.sign) && frozen;
        let formula = CheckResult::new(
            id.clone(),
            pass,
            inputs.clone(),
            json!({
                "d": d,
                "formula": { "ord2_finite": f.ord2_finite, "ord2_infinite": f.ord2_infinite, "ord3": f.ord3, "sign": f.sign },
                "local_product": product,
                "scaled_signs": scaled,
                "expected": rec.expected.map(|x| json!({ "w": x.w, "d": x.d })),
            }),
        )
        .with_ledger(&ledger);
        let sid = format!("{id}/semistable");
        let semistable = match semistable_root_number(&e) {
            Ok(s) => CheckResult::new(sid, s == f.sign, inputs, json!({ "semistable_sign": s, "formula_sign": f.sign })),
            Err(Error::NonSemistable) => CheckResult::skipped(sid, inputs, "additive reduction somewhere"),
            Err(err) => CheckResult::from_error(sid, inputs, &err),
        };
        vec![formula, semistable]
    }))
}

// ----- regulator constants ---------------------------------------------

fn regulator(opts: &SuiteOptions) -> Vec<CheckResult> {
    let mut rels = vec![(GRelation::s3(), 3u64)];
    for p in [3u64, 7, 11] {
        rels.push((GRelation::dihedral(p as usize).expect("odd prime below 13"), p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    for (rel, p) in rels {
        let g = &rel.group;
        out.push(match verify_relation(&rel) {
            Ok(ok) => CheckResult::new(format!("regulator/{}/relation", g.name), ok, json!({ "group": g.name }), json!({ "relation": ok })),
            Err(err) => CheckResult::from_error(format!("regulator/{}/relation", g.name), json!({ "group": g.name }), &err),
        });
        let reps = [
            ("trivial", Ok(PairedRepresentation::trivial(g))),
            ("sign", PairedRepresentation::one_dimensional(g, &[-1, 1])),
            ("standard", PairedRepresentation::standard(g)),
        ];
        for (name, rep) in reps {
            let id = format!("regulator/{}/{name}", g.name);
            let inputs = json!({ "group": g.name, "representation": name, "p": p });
            let res = (|| -> ecparity::Result<_> {
                let rep = rep?;
                let base = regulator_constant(&rel, &rep, p)?;
                let mut others = Vec::new();
                for _ in 0..5 {
                    let other = rep.with_pairing(rep.random_invariant_pairing(&mut rng))?;
                    others.push(regulator_constant(&rel, &other, p)?.square_class);
                }
                Ok((base, others))
            })();
            out.push(match res {
                Ok((c, others)) => {
                    let pass = c.square_class == p.into() && c.ord_p_odd && others.iter().all(|s| *s == c.square_class);
                    CheckResult::new(
                        id,
                        pass,
                        inputs,
                        json!({
                            "value": c.value.to_string(),
                            "square_class": c.square_class.to_string(),
                            "ord_p_odd": c.ord_p_odd,
                            "random_pairings": others.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                        }),
                    )
                }
                Err(err) => CheckResult::from_error(id, inputs, &err),
            });
        }
    }
    out
}
