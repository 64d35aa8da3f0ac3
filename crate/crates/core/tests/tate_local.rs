use ecparity::curves::{from_ints, kernel_translate, WeierstrassModel};
use ecparity::exact::int::val;
use ecparity::exact::{rat, ratio, QPoly, Rational};
use ecparity::padic::{factor_over, factor_over_qp, is_square, LocalField};
use ecparity::tate::{
    base_change, fudge_factor, o_sign, reduction_split_test, tate_algorithm, tate_over_qp, FudgeFactor, Kodaira, Reduction,
};
use ecparity::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

fn over(model: &WeierstrassModel<Rational>, k: &LocalField) -> WeierstrassModel<ecparity::padic::LocalElement> {
    base_change(model, k)
}

#[test]
fn small_examples() {
    let d = tate_over_qp(&from_ints([0, 0, 0, -1, 0]).unwrap(), 5).unwrap();
    assert_eq!((d.kodaira, d.tamagawa, d.reduction, d.conductor), (Kodaira::I(0), 1, Reduction::Good, 0));

    let e11 = from_ints([0, -1, 1, 0, 0]).unwrap();
    let d = tate_over_qp(&e11, 11).unwrap();
    assert_eq!((d.kodaira, d.tamagawa, d.reduction, d.conductor), (Kodaira::I(1), 1, Reduction::Split, 1));

    let d = tate_over_qp(&from_ints([0, 0, 0, 0, 5]).unwrap(), 5).unwrap();
    assert_eq!((d.kodaira, d.tamagawa, d.conductor), (Kodaira::II, 1, 2));

    let d = tate_over_qp(&from_ints([0, -1, 1, -10, -20]).unwrap(), 11).unwrap();
    assert_eq!((d.kodaira, d.tamagawa, d.reduction), (Kodaira::I(5), 5, Reduction::Split));
}

#[test]
fn conductors_of_known_curves() {
    // (coefficients, conductor) for curves of small conductor.
    let table: [([i64; 5], u64); 9] = [
        ([0, 0, 0, -1, 0], 32),
        ([0, 0, 0, 1, 0], 64),
        ([0, 0, 0, 0, 1], 36),
        ([0, 0, 1, 0, -7], 27),
        ([0, -1, 0, -4, 4], 24),
        ([1, 0, 1, 4, -6], 14),
        ([0, -1, 1, -10, -20], 11),
        ([0, 0, 1, -1, 0], 37),
        ([1, -1, 1, 0, 0], 53),
    ];
    for (a, n) in table {
        let e = from_ints(a).unwrap();
        let disc = e.discriminant().numer().abs();
        let mut cond = 1u64;
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53] {
            if (&disc % BigInt::from(p)).is_zero() {
                let d = tate_over_qp(&e, p).unwrap();
                cond *= p.pow(d.conductor as u32);
            }
        }
        assert_eq!(cond, n, "{a:?}");
    }
}

#[test]
fn split_test_guards_and_base_change() {
    let e = from_ints([0, 0, 0, 0, 3]).unwrap();
    let k = LocalField::qp(3, 30);
    let r = tate_algorithm(&over(&e, &k)).unwrap();
    assert_eq!(r.reduction, Reduction::Additive);
    assert!(matches!(reduction_split_test(&over(&e, &k)), Err(Error::WrongReductionClass)));

    // A nonsplit curve becomes split over the unramified quadratic extension.
    let mut found = 0;
    for c in -8..=8i64 {
        let Ok(e) = from_ints([0, 1, 1, c, 0]) else { continue };
        for p in [5u64, 7] {
            let Ok(d) = tate_over_qp(&e, p) else { continue };
            if d.reduction != Reduction::NonSplit {
                continue;
            }
            let k2 = LocalField::unramified(p, 2, 30);
            assert!(reduction_split_test(&over(&e, &k2)).unwrap());
            found += 1;
        }
    }
    assert!(found > 0);

    // 11a3 stays split over Q_11(√11), with doubled discriminant valuation.
    let e11 = from_ints([0, -1, 1, 0, 0]).unwrap();
    let c = factor_over_qp(&QPoly::from_ints(&[-11, 0, 1]), 11, 30).unwrap();
    let d = tate_algorithm(&over(&e11, &c[0].field)).unwrap();
    assert_eq!((d.kodaira, d.reduction, d.tamagawa), (Kodaira::I(2), Reduction::Split, 2));
}

#[test]
fn good_reduction_persists_in_extensions() {
    let e = from_ints([0, 0, 0, -1, 0]).unwrap();
    for poly in [vec![-5, 0, 1], vec![2, 0, 1], vec![-5, 0, 0, 1], vec![1, 1, 0, 1]] {
        for comp in factor_over_qp(&QPoly::from_ints(&poly), 5, 30).unwrap() {
            let d = tate_algorithm(&over(&e, &comp.field)).unwrap();
            assert_eq!(d.reduction, Reduction::Good);
        }
    }
}

#[test]
fn fudge_factors() {
    let k = LocalField::qp(5, 30);
    let e = over(&from_ints([0, 0, 0, -1, 0]).unwrap(), &k);
    let f = fudge_factor(&e, &k.one()).unwrap();
    assert_eq!(f.value, rat(1));
    assert_eq!((f.parity(2), f.parity(3)), (1, 1));
    let f = fudge_factor(&e, &k.uniformizer()).unwrap();
    assert_eq!(f.value, ratio(1, 5));

    let k = LocalField::qp(11, 30);
    let e = over(&from_ints([0, -1, 1, -10, -20]).unwrap(), &k);
    assert_eq!(fudge_factor(&e, &k.one()).unwrap().value, rat(5));
    assert_eq!(o_sign(&e, &k.one(), 2).unwrap(), 1);

    assert_eq!(FudgeFactor::new(rat(1)).parity(2), 1);
    assert_eq!(FudgeFactor::new(rat(2)).parity(2), -1);
    assert_eq!(FudgeFactor::new(ratio(2, 3)).parity(3), -1);
}

#[test]
fn fudge_factor_is_transform_covariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for p in [2u64, 3, 5] {
        let k = LocalField::qp(p, 60);
        for _ in 0..15 {
            let c: Vec<i64> = (0..5).map(|_| (rng.next_u64() % 21) as i64 - 10).collect();
            let Ok(e) = from_ints([c[0], c[1], c[2], c[3], c[4]]) else { continue };
            let base = fudge_factor(&over(&e, &k), &k.one()).unwrap();
            let (u, r, s, t) = (ratio(p as i64, 1), rat(c[0]), ratio(1, p as i64), rat(3));
            let e2 = e.transform(&u, &r, &s, &t).unwrap();
            // dx/(2y + …) on E is u⁻¹ times the same differential on the transformed model.
            let f2 = fudge_factor(&over(&e2, &k), &k.from_rational(&u.recip())).unwrap();
            assert_eq!(base, f2, "p={p} {c:?}");
            let u = ratio(1, p as i64 * p as i64);
            let e3 = e.transform(&u, &rat(0), &rat(0), &rat(0)).unwrap();
            let f3 = fudge_factor(&over(&e3, &k), &k.from_rational(&u.recip())).unwrap();
            assert_eq!(base, f3);
        }
    }
}

#[test]
fn tate_is_idempotent_on_minimal_models() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for p in [2u64, 3, 5, 7] {
        let k = LocalField::qp(p, 80);
        let mut n = 0;
        while n < 20 {
            let e = random_curve(&mut rng, p);
            let Ok(e) = e else { continue };
            let d = tate_algorithm(&over(&e, &k)).unwrap();
            let d2 = tate_algorithm(&d.minimal).unwrap();
            assert_eq!((d.kodaira, d.tamagawa, d.conductor, d.disc_val), (d2.kodaira, d2.tamagawa, d2.conductor, d2.disc_val));
            assert_eq!(d2.u_val, 0);
            n += 1;
        }
    }
}

fn random_curve(rng: &mut ChaCha8Rng, p: u64) -> ecparity::Result<WeierstrassModel<Rational>> {
    let mut a = [0i64; 5];
    let maxk = [1u32, 2, 3, 4, 6];
    for i in 0..5 {
        let base = (rng.next_u64() % 41) as i64 - 20;
        let k = (rng.next_u64() % (maxk[i] as u64 + 1)) as u32;
        a[i] = base * (p as i64).pow(k.min(4));
    }
    from_ints(a)
}

// ---- valuation-table oracle for residue characteristic ≥ 5 -------------

fn vp(x: &BigInt, p: u64) -> i64 {
    if x.is_zero() {
        return 1000;
    }
    val(&Rational::from_integer(x.clone()), p)
}

fn residue(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

fn is_sq_mod(x: u64, p: u64) -> bool {
    (1..p).any(|y| (y * y) % p == x % p)
}

/// `(Kodaira, tamagawa, conductor)` from the valuations of `c4, c6, Δ`
/// together with residue tests on the short model.
fn table_oracle(e: &WeierstrassModel<Rational>, p: u64) -> (Kodaira, u32, i64) {
    let (c4, c6) = e.c_invariants();
    let (mut c4, mut c6, mut dl) = (c4.to_integer(), c6.to_integer(), e.discriminant().to_integer());
    let pb = BigInt::from(p);
    while vp(&c4, p) >= 4 && vp(&c6, p) >= 6 {
        c4 /= pb.pow(4);
        c6 /= pb.pow(6);
        dl /= pb.pow(12);
    }
    let (v4, vd) = (vp(&c4, p), vp(&dl, p));
    if vd == 0 {
        return (Kodaira::I(0), 1, 0);
    }
    if v4 == 0 {
        let n = vd as u32;
        let split = is_sq_mod(residue(&-&c6, p), p);
        let c = if split {
            n
        } else if n % 2 == 0 {
            2
        } else {
            1
        };
        return (Kodaira::I(n), c, 1);
    }
    let unit = |x: &BigInt, k: u32| residue(&(x / pb.pow(k)), p);
    if 3 * v4 < vd {
        let n = (vd - 6) as u32;
        return (Kodaira::IStar(n), two_power_torsion(&c4, &c6, p, n), 2);
    }
    match vd {
        2 => (Kodaira::II, 1, 2),
        3 => (Kodaira::III, 2, 2),
        4 => (Kodaira::IV, if is_sq_mod(residue(&(BigInt::from(-6) * (&c6 / pb.pow(2))), p), p) { 3 } else { 1 }, 2),
        6 => {
            let (a, b) = (unit(&c4, 2), unit(&c6, 3));
            let roots = (0..p).filter(|&x| (x * x % p * x + (p - 3 * a % p) * x + (2 * p * p - 2 * b)) % p == 0).count();
            (Kodaira::IStar(0), 1 + roots as u32, 2)
        }
        8 => (Kodaira::IVStar, if is_sq_mod(residue(&(BigInt::from(-6) * (&c6 / pb.pow(4))), p), p) { 3 } else { 1 }, 2),
        9 => (Kodaira::IIIStar, 2, 2),
        10 => (Kodaira::IIStar, 1, 2),
        _ => panic!("unexpected valuation {vd}"),
    }
}

/// For `I_n*` at odd `p` the component group is the 2-primary torsion of
/// `E(Q_p)`: count rational 2-torsion, and for odd `n` test whether the
/// rational 2-torsion point is divisible by 2.
fn two_power_torsion(c4: &BigInt, c6: &BigInt, p: u64, n: u32) -> u32 {
    let a4 = Rational::from_integer(c4 * -27);
    let a6 = Rational::from_integer(c6 * -54);
    let cubic = QPoly::new(vec![a6.clone(), a4.clone(), rat(0), rat(1)]);
    let comps = factor_over_qp(&cubic, p, 60).unwrap();
    let roots: Vec<_> = comps.iter().filter(|c| c.degree() == 1).collect();
    if n % 2 == 0 {
        return 1 + roots.len() as u32;
    }
    assert_eq!(roots.len(), 1);
    let k = roots[0].field.clone();
    let f = [k.zero(), k.from_rational(&a4), k.from_rational(&a6)];
    let (a, b) = kernel_translate(&f, &roots[0].root).unwrap();
    if !is_square(&b).unwrap() {
        return 2;
    }
    let sq = factor_over(&k, &[b.neg(), k.zero(), k.one()]).unwrap();
    let d = sq.iter().find(|c| c.degree() == 1).unwrap().root.clone();
    let two_d = d.add(&d);
    if is_square(&a.add(&two_d)).unwrap() || is_square(&a.sub(&two_d)).unwrap() {
        4
    } else {
        2
    }
}

#[test]
fn valuation_table_oracle_for_large_residue_characteristic() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for p in [5u64, 7, 13] {
        let mut n = 0;
        let mut seen = std::collections::BTreeSet::new();
        while n < 200 {
            let Ok(e) = random_curve(&mut rng, p) else { continue };
            let (kod, c, f) = table_oracle(&e, p);
            let d = tate_over_qp(&e, p).unwrap();
            if d.disc_val > 12 {
                continue;
            }
            assert_eq!((d.kodaira, d.tamagawa, d.conductor), (kod, c, f), "p={p} {e}");
            seen.insert(format!("{kod}"));
            n += 1;
        }
        assert!(seen.len() >= 8, "p={p}: {seen:?}");
    }
}

#[test]
fn non_integral_and_non_minimal_models() {
    let e = from_ints([0, 0, 0, -1, 0]).unwrap();
    let z = rat(0);
    let k = LocalField::qp(5, 30);
    // u = 5 makes a4 non-integral; dx/(2y) there is 5 times the Néron differential.
    let e2 = e.transform(&rat(5), &z, &z, &z).unwrap();
    let d = tate_over_qp(&e2, 5).unwrap();
    assert_eq!((d.kodaira, d.u_val), (Kodaira::I(0), -1));
    assert_eq!(fudge_factor(&over(&e2, &k), &k.one()).unwrap().value, ratio(1, 5));
    // u = 1/5 gives an integral non-minimal model.
    let e3 = e.transform(&ratio(1, 5), &z, &z, &z).unwrap();
    let d = tate_over_qp(&e3, 5).unwrap();
    assert_eq!((d.kodaira, d.u_val), (Kodaira::I(0), 1));
    assert_eq!(fudge_factor(&over(&e3, &k), &k.one()).unwrap().value, rat(5));
}
