//! One line per acceptance criterion, at the required counts and time
//! limits. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use ecparity::tate::{tate_over_qp, Reduction};
use ecparity_cli::{builtin_corpus, run_suite, CheckResult, Report, Status, Suite, SuiteOptions};

struct Criterion {
    ok: bool,
    line: String,
}

fn timed(suite: Suite) -> (Report, Duration) {
    let t = Instant::now();
    let r = run_suite(suite, &SuiteOptions::default()).expect("default inputs are valid");
    (r, t.elapsed())
}

fn passes(r: &Report) -> impl Iterator<Item = &CheckResult> {
    r.results.iter().filter(|c| c.status == Status::Pass)
}

fn count_where(r: &Report, f: impl Fn(&CheckResult) -> bool) -> usize {
    passes(r).filter(|c| f(c)).count()
}

fn input_u64(c: &CheckResult, key: &str) -> u64 {
    c.inputs[key].as_u64().unwrap_or(0)
}

fn per_prime(r: &Report, primes: &[u64]) -> Vec<usize> {
    primes.iter().map(|&p| count_where(r, |c| input_u64(c, "p") == p)).collect()
}

fn criterion(ok: bool, line: String) -> Criterion {
    Criterion { ok, line }
}

fn secs(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}

fn main() {
    let mut out = Vec::new();

    let (r, t) = timed(Suite::Hilbert);
    let counts = per_prime(&r, &[2, 3, 5, 7]);
    out.push(criterion(
        r.summary.fail == 0 && r.summary.skip == 0 && counts.iter().all(|&n| n >= 400) && t < Duration::from_secs(60),
        format!("hilbert symbol vs solvability search: {counts:?} agreeing pairs for p = 2, 3, 5, 7 (need 400 each), {} disagree, {} (limit 60s)", r.summary.fail, secs(t)),
    ));

    let (r, t) = timed(Suite::SymbolProduct);
    let counts = per_prime(&r, &[2, 3, 5]);
    out.push(criterion(
        r.summary.fail == 0 && r.summary.skip == 0 && counts.iter().all(|&n| n >= 200) && t < Duration::from_secs(120),
        format!(
            "symbol product over cubic roots equals (-1,-1): {counts:?} cubics for p = 2, 3, 5 (need 200 each), {} fail, {} (limit 120s)",
            r.summary.fail,
            secs(t)
        ),
    ));

    let (r, t) = timed(Suite::TateOracle);
    let counts = per_prime(&r, &[5, 7, 13]);
    out.push(criterion(
        r.summary.fail == 0 && counts.iter().all(|&n| n >= 200) && t < Duration::from_secs(60),
        format!(
            "Tate's algorithm vs valuation table: {counts:?} curves for p = 5, 7, 13 (need 200 each), {} fail, {} skipped, {} (limit 60s)",
            r.summary.fail,
            r.summary.skip,
            secs(t)
        ),
    ));

    let (r, _) = timed(Suite::LocalRoot);
    let small = count_where(&r, |c| matches!(input_u64(c, "p"), 2 | 3));
    out.push(criterion(
        r.summary.fail == 0 && r.summary.pass >= 500 && small > 0,
        format!(
            "semistable local root numbers (+1 good/nonsplit, -1 split): {} place evaluations (need 500), {small} at p = 2, 3, {} fail",
            r.summary.pass, r.summary.fail
        ),
    ));

    let (r, _) = timed(Suite::MInvariants);
    let ds: BTreeSet<u64> = passes(&r).filter_map(|c| c.values["local_d"].as_u64()).collect();
    let ps: BTreeSet<u64> = passes(&r).map(|c| input_u64(c, "p")).collect();
    out.push(criterion(
        r.summary.fail == 0 && r.summary.pass >= 100 && ds == BTreeSet::from([1, 2, 3, 6]) && ps == BTreeSet::from([2, 3, 5, 7]),
        format!("m = (-1,-1) w: {} local curves (need 100), local d {ds:?}, p {ps:?}, {} fail", r.summary.pass, r.summary.fail),
    ));

    let (r, _) = timed(Suite::Isogeny);
    let deg = |d: u64| count_where(&r, |c| input_u64(c, "degree") == d);
    let fixed = |a: i64, b: i64| count_where(&r, |c| c.inputs["a"].as_i64() == Some(a) && c.inputs["b"].as_i64() == Some(b));
    let (d2, d3) = (deg(2), deg(3));
    out.push(criterion(
        r.summary.fail == 0 && d2 >= 100 && d3 >= 50 && fixed(22, -7) > 0 && fixed(1, -12) > 0,
        format!("w = sigma * symbol for explicit isogenies: {d2} of degree 2 (need 100), {d3} of degree 3 (need 50), (22,-7) and (1,-12) included, {} fail", r.summary.fail),
    ));

    let (r, t) = timed(Suite::Global);
    let global: Vec<&CheckResult> = r.results.iter().filter(|c| !c.id.ends_with("/semistable")).collect();
    let global_pass = global.iter().filter(|c| c.status == Status::Pass).count();
    let ds: BTreeSet<u64> = global.iter().filter_map(|c| c.values["d"].as_u64()).collect();
    let corpus = builtin_corpus();
    let additive = |p| corpus.iter().any(|rec| tate_over_qp(&rec.model().unwrap(), p).unwrap().reduction == Reduction::Additive);
    out.push(criterion(
        global_pass == 50 && global.len() == 50 && ds == BTreeSet::from([1, 2, 3, 6]) && additive(2) && additive(3) && t < Duration::from_secs(600),
        format!("global sign from C-values equals product of local root numbers: {global_pass}/50, d {ds:?}, additive at 2 and 3: {}, {} (limit 600s)", additive(2) && additive(3), secs(t)),
    ));

    let semi: Vec<&CheckResult> = r.results.iter().filter(|c| c.id.ends_with("/semistable") && c.status != Status::Skipped).collect();
    let semi_pass = semi.iter().filter(|c| c.status == Status::Pass).count();
    out.push(criterion(
        !semi.is_empty() && semi_pass == semi.len(),
        format!("semistable formula (-1)^(#inf + #split) equals the global sign: {semi_pass}/{} semistable corpus curves", semi.len()),
    ));

    let (r, _) = timed(Suite::S3);
    let split: u64 = passes(&r).filter_map(|c| c.values["split_places"].as_u64()).sum();
    out.push(criterion(
        r.summary.fail == 0 && r.summary.pass >= 10 && split > 0,
        format!(
            "S3 identity ord_3 C-ratio vs w(K)w(M)w(L): {} curves with d = 6 (need 10), {split} split places trivial, {} fail",
            r.summary.pass, r.summary.fail
        ),
    ));

    let (r, _) = timed(Suite::Kt);
    let label_ok = |suffix: &str, c: &CheckResult| c.id.ends_with(suffix) && c.status == Status::Pass;
    let pairs = r
        .results
        .iter()
        .filter(|c| label_ok("/product", c))
        .filter(|c| c.inputs["twist"].as_i64().is_some_and(|t| t.rem_euclid(8) == 1))
        .filter(|c| {
            let base = c.id.trim_end_matches("/product");
            r.results.iter().any(|o| o.id == format!("{base}/places") && o.status == Status::Pass)
        })
        .count();
    out.push(criterion(
        r.summary.fail == 0 && pairs >= 20,
        format!(
            "twist identity per place and w(E/F) = product of kappa: {pairs} pairs with r = 1 mod 8 (need 20), {} fail",
            r.summary.fail
        ),
    ));

    let (r, _) = timed(Suite::Regulator);
    let consts: Vec<String> = passes(&r)
        .filter(|c| c.values.get("square_class").is_some())
        .map(|c| format!("{}={}", c.id.trim_start_matches("regulator/"), c.values["square_class"].as_str().unwrap_or("?")))
        .collect();
    let pairings = passes(&r).filter(|c| c.values["random_pairings"].as_array().map_or(0, Vec::len) == 5).count();
    out.push(criterion(
        r.summary.fail == 0 && r.summary.pass == 16 && pairings == 12,
        format!("regulator constants: {} with 5 random pairings each ({pairings}/12), {} fail", consts.join(" "), r.summary.fail),
    ));

    let mut all = true;
    for (i, c) in out.iter().enumerate() {
        println!("[{}] {:2}. {}", if c.ok { "PASS" } else { "FAIL" }, i + 1, c.line);
        all &= c.ok;
    }
    if !all {
        std::process::exit(1);
    }
}
