use ecparity::curves::{from_ints, two_torsion_data, WeierstrassModel};
use ecparity::exact::{rat, ratio, QPoly, Rational};
use ecparity::global::{
    build_splitting_data, build_splitting_data_at, cassels_scenario, decompose, global_c_values, global_ord, global_root_number_formula,
    kramer_scenario, local_root_numbers, prime_completions, relevant_primes, root_number_local_product, s3_scenario,
    semistable_root_number, split_primes, FieldTag, Side,
};
use ecparity::padic::with_precision;
use ecparity::tate::{start_digits, tate_over_qp, Reduction};
use ecparity::Error;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

fn uniform(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    lo + (rng.next_u64() % (hi - lo + 1) as u64) as i64
}

fn is_int_square(n: i64) -> bool {
    n >= 0 && ((n as f64).sqrt().round() as i64).pow(2) == n
}

/// `y² = x³ + tAx² + t²Bx + t³C` with the cubic chosen to give `d`, the
/// twist `t` forcing additive reduction at 2 or 3 when divisible by them.
fn curve_with_d(rng: &mut ChaCha8Rng, d: usize) -> WeierstrassModel<Rational> {
    loop {
        let (a, b, c) = match d {
            1 => {
                let (e1, e2, e3) = (uniform(rng, -6, 6), uniform(rng, -6, 6), uniform(rng, -6, 6));
                (-(e1 + e2 + e3), e1 * e2 + e1 * e3 + e2 * e3, -e1 * e2 * e3)
            }
            2 => {
                let (e, s, t) = (uniform(rng, -6, 6), uniform(rng, -6, 6), uniform(rng, -6, 6));
                if is_int_square(s * s - 4 * t) {
                    continue;
                }
                (s - e, t - e * s, -e * t)
            }
            3 => {
                // x³ − nx² − (n + 3)x − 1 has discriminant (n² + 3n + 9)².
                let n = uniform(rng, -4, 4);
                (-n, -(n + 3), -1)
            }
            _ => (uniform(rng, -8, 8), uniform(rng, -8, 8), uniform(rng, -8, 8)),
        };
        let t = [1, 1, -1, 2, 3, -2, 6, -3][(rng.next_u64() % 8) as usize];
        let Ok(e) = from_ints([0, a * t, 0, b * t * t, c * t * t * t]) else { continue };
        if two_torsion_data(&e).unwrap().d == d {
            return e;
        }
    }
}

fn random_curve(rng: &mut ChaCha8Rng) -> WeierstrassModel<Rational> {
    loop {
        let a: [i64; 5] = core::array::from_fn(|_| uniform(rng, -12, 12));
        if let Ok(e) = from_ints(a) {
            return e;
        }
    }
}

fn additive_at(e: &WeierstrassModel<Rational>, p: u64) -> bool {
    tate_over_qp(e, p).unwrap().reduction == Reduction::Additive
}

fn e11a3() -> WeierstrassModel<Rational> {
    from_ints([0, -1, 1, 0, 0]).unwrap()
}

#[test]
fn splitting_data_degrees() {
    assert_eq!(build_splitting_data(&from_ints([0, 0, 0, -1, 0]).unwrap()).unwrap().d, 1);
    let sd = build_splitting_data(&from_ints([0, 0, 0, 1, 0]).unwrap()).unwrap();
    assert_eq!((sd.d, sd.point.clone()), (2, Some(rat(0))));
    assert_eq!(sd.m.as_ref().unwrap().degree(), 2);
    let sd = build_splitting_data(&e11a3()).unwrap();
    assert_eq!(sd.d, 6);
    assert_eq!((sd.l.degree(), sd.f.degree(), sd.m.as_ref().unwrap().degree()), (3, 6, 2));
    assert!(sd.f.poly.is_squarefree());
    let sd = build_splitting_data(&from_ints([0, 0, 0, -3, 1]).unwrap()).unwrap();
    assert_eq!((sd.d, sd.l.degree(), sd.f.degree()), (3, 3, 3));
    assert!(sd.m.is_none());
}

#[test]
fn place_decomposition_examples() {
    let sd = build_splitting_data(&e11a3()).unwrap();
    let m = sd.m.as_ref().unwrap();
    // −11 ≡ 1 mod 3 is a square, so 3 splits in Q(√−11); −11 ≡ 3 mod 7 is not.
    assert_eq!(decompose(m, Some(3), 30).unwrap().local_degrees(), vec![1, 1]);
    assert_eq!(decompose(m, Some(7), 30).unwrap().local_degrees(), vec![2]);
    let cube = build_splitting_data(&from_ints([0, 0, 0, 0, -2]).unwrap()).unwrap();
    let mut degs = decompose(&cube.l, Some(5), 30).unwrap().local_degrees();
    degs.sort();
    assert_eq!(degs, vec![1, 2]);
    for field in [&sd.k, m, &sd.l, &sd.f, &cube.l, &cube.f] {
        let inf = decompose(field, None, 30).unwrap().local_degrees();
        assert_eq!(inf.iter().sum::<usize>(), field.degree());
        for p in [2, 3, 5, 7, 11] {
            let degs = decompose(field, Some(p), 40).unwrap().local_degrees();
            assert_eq!(degs.iter().sum::<usize>(), field.degree(), "{:?} at {p}", field.tag);
        }
    }
}

#[test]
fn tower_completions_match_absolute_factorisation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in [2, 3, 6, 6, 6] {
        let sd = build_splitting_data(&curve_with_d(&mut rng, d)).unwrap();
        for p in [2, 3, 5, 7, 13] {
            let pc = with_precision(start_digits(&sd.simplified, p), |dg| prime_completions(&sd, p, dg)).unwrap();
            for (tag, comps) in [(FieldTag::L, &pc.l), (FieldTag::F, &pc.f)] {
                let field = sd.field(tag).unwrap();
                let mut tower: Vec<usize> = comps.iter().map(|c| c.field.degree()).collect();
                let mut direct = decompose(field, Some(p), 60).unwrap().local_degrees();
                tower.sort();
                direct.sort();
                assert_eq!(tower, direct, "d = {d}, {tag:?} at {p}");
            }
        }
    }
}

#[test]
fn global_ord_with_minimal_differential() {
    let sd = build_splitting_data(&e11a3()).unwrap();
    // On the simplified model dx/y is twice the minimal differential.
    let half = ratio(1, 2);
    for l in [2, 3] {
        assert_eq!(global_ord(&sd, Side::E, FieldTag::K, l, &half, false).unwrap(), 0, "l = {l}");
    }
    // 11 ramifies in Q(√−11), turning the split I1 fibre into I2 with c = 2.
    assert_eq!(global_ord(&sd, Side::E, FieldTag::M, 2, &half, false).unwrap(), 1);
    assert_eq!(global_ord(&sd, Side::E, FieldTag::M, 3, &half, false).unwrap(), 0);
    assert_eq!(global_ord(&sd, Side::E, FieldTag::K, 2, &rat(1), false).unwrap().abs(), 1);
    // Rescaling ω by 3 moves ord_3 at 3 only.
    let at3 = |scale: &Rational| {
        let cv = global_c_values(&sd, scale).unwrap();
        cv.primes.iter().find(|p| p.p == 3).unwrap().ords[&(Side::E, FieldTag::K)].1
    };
    assert_ne!(at3(&half), at3(&ratio(3, 2)));
    assert!(matches!(global_ord(&sd, Side::EPrime, FieldTag::K, 2, &rat(1), false), Err(Error::InvalidInput(_))));
}

#[test]
fn global_formula_examples() {
    let sd = build_splitting_data(&e11a3()).unwrap();
    let g = global_root_number_formula(&sd, &global_c_values(&sd, &rat(1)).unwrap());
    assert_eq!((g.d, g.sign), (6, 1));
    assert_eq!(root_number_local_product(&e11a3()).unwrap(), 1);
    let places = local_root_numbers(&e11a3()).unwrap();
    assert_eq!(places.iter().find(|x| x.0 == Some(11)).unwrap().1, -1);
    assert_eq!(places[0], (None, -1));
    let e = from_ints([0, 0, 0, -1, 0]).unwrap();
    let sd = build_splitting_data(&e).unwrap();
    let g = global_root_number_formula(&sd, &global_c_values(&sd, &rat(1)).unwrap());
    assert_eq!(g.sign, root_number_local_product(&e).unwrap());
}

#[test]
fn global_formula_matches_local_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut seen = [0usize; 7];
    let (mut add2, mut add3) = (0, 0);
    for i in 0..48 {
        let e = if i % 6 == 5 { random_curve(&mut rng) } else { curve_with_d(&mut rng, [1, 2, 3, 6, 6][i % 5]) };
        let sd = build_splitting_data(&e).unwrap();
        let sign = global_root_number_formula(&sd, &global_c_values(&sd, &rat(1)).unwrap()).sign;
        assert_eq!(sign, root_number_local_product(&e).unwrap(), "{e:?}");
        for scale in [rat(2), rat(3), rat(6), ratio(5, 6)] {
            let s = global_root_number_formula(&sd, &global_c_values(&sd, &scale).unwrap()).sign;
            assert_eq!(s, sign, "{e:?} with ω scaled by {scale}");
        }
        seen[sd.d] += 1;
        add2 += additive_at(&e, 2) as usize;
        add3 += additive_at(&e, 3) as usize;
    }
    assert!(seen[1] > 0 && seen[2] > 0 && seen[3] > 0 && seen[6] > 0, "{seen:?}");
    assert!(add2 > 0 && add3 > 0, "{add2} {add3}");
}

#[test]
fn rational_point_choice_does_not_matter() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..6 {
        let e = curve_with_d(&mut rng, 1);
        let signs: Vec<i32> = (0..3)
            .map(|i| {
                let sd = build_splitting_data_at(&e, i).unwrap();
                global_root_number_formula(&sd, &global_c_values(&sd, &rat(1)).unwrap()).sign
            })
            .collect();
        assert!(signs.iter().all(|&s| s == signs[0]), "{e:?}: {signs:?}");
    }
    assert!(build_splitting_data_at(&from_ints([0, 0, 0, 1, 0]).unwrap(), 1).is_err());
}

#[test]
fn semistable_formula() {
    assert_eq!(semistable_root_number(&e11a3()).unwrap(), 1);
    assert!(matches!(semistable_root_number(&from_ints([0, 0, 0, -1, 0]).unwrap()), Err(Error::NonSemistable)));
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut checked = 0;
    while checked < 10 {
        let e = random_curve(&mut rng);
        let Ok(s) = semistable_root_number(&e) else { continue };
        let sd = build_splitting_data(&e).unwrap();
        assert_eq!(s, global_root_number_formula(&sd, &global_c_values(&sd, &rat(1)).unwrap()).sign, "{e:?}");
        checked += 1;
    }
}

#[test]
fn s3_identity() {
    let sd = build_splitting_data(&e11a3()).unwrap();
    let r = s3_scenario(&sd, &split_primes(&sd, 60)).unwrap();
    assert!(r.holds());
    assert!(r.places.iter().any(|p| p.split));
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..10 {
        let sd = build_splitting_data(&curve_with_d(&mut rng, 6)).unwrap();
        let r = s3_scenario(&sd, &split_primes(&sd, 60)).unwrap();
        assert!(r.holds(), "{:?}: {r:?}", sd.model);
    }
    let d2 = build_splitting_data(&from_ints([0, 0, 0, 1, 0]).unwrap()).unwrap();
    assert!(s3_scenario(&d2, &[]).is_err());
}

#[test]
fn split_primes_split_completely() {
    let sd = build_splitting_data(&from_ints([0, 0, 0, 0, -2]).unwrap()).unwrap();
    let ps = split_primes(&sd, 60);
    // x³ − 2 splits mod p iff p ≡ 1 mod 3 and 2 is a cube mod p.
    assert_eq!(ps, vec![31, 43]);
    for p in ps {
        assert_eq!(decompose(&sd.f, Some(p), 30).unwrap().local_degrees(), vec![1; 6]);
    }
}

#[test]
fn cassels_product() {
    let sd = build_splitting_data(&from_ints([0, 0, 0, 1, 0]).unwrap()).unwrap();
    let r = cassels_scenario(&sd).unwrap();
    assert!(r.holds(), "{r:?}");
    assert_eq!((r.a.clone(), r.b.clone()), (rat(0), rat(1)));
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..12 {
        let sd = build_splitting_data(&curve_with_d(&mut rng, 1 + i % 2)).unwrap();
        let r = cassels_scenario(&sd).unwrap();
        assert!(r.holds(), "{:?}: {r:?}", sd.model);
    }
    assert!(cassels_scenario(&build_splitting_data(&e11a3()).unwrap()).is_err());
}

#[test]
fn kramer_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let twists = [17, -7, 33, -15, 41, -23, 57, 65, -31, 73];
    let mut pairs = 0;
    for (i, &r) in twists.iter().enumerate() {
        let e = if i % 2 == 0 { e11a3() } else { curve_with_d(&mut rng, [1, 2, 3, 6][i % 4]) };
        let rep = kramer_scenario(&e, &rat(r)).unwrap();
        assert!(rep.unsupported_places().is_empty());
        assert!(rep.holds(), "{e:?}, r = {r}: {rep:?}");
        assert_eq!(rep.kramer_sign, Some(rep.w_f));
        pairs += 1;
    }
    assert_eq!(pairs, twists.len());
    // A twist ramified at 2 leaves κ_2 out of reach and is reported as such.
    let rep = kramer_scenario(&e11a3(), &rat(3)).unwrap();
    assert_eq!(rep.unsupported_places(), vec![Some(2)]);
    assert_eq!(rep.kramer_sign, None);
    assert!(kramer_scenario(&e11a3(), &rat(4)).is_err());
}

#[test]
fn relevant_primes_cover_bad_and_scale_primes() {
    let ps = relevant_primes(&e11a3(), &ratio(5, 7)).unwrap();
    assert_eq!(ps, vec![2, 3, 5, 7, 11]);
    let sd = build_splitting_data(&e11a3()).unwrap();
    let p = QPoly::from_ints(&[0, 1]);
    assert_eq!(sd.k.poly, p);
}
