use ecparity::curves::real::{component_count, real_analysis, two_isogeny_surjective};
use ecparity::curves::{from_ints, kernel_translate, quadratic_twist, three_isogeny, two_torsion_data, TwoIsogeny, WeierstrassModel};
use ecparity::exact::{rat, ratio, Rational};
use ecparity::Error;
use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

fn short(a: i64, b: i64, c: i64) -> WeierstrassModel<Rational> {
    from_ints([0, a, 0, b, c]).unwrap()
}

#[test]
fn invariants_of_small_curves() {
    let e = short(0, 1, 0);
    let inv = e.invariants().unwrap();
    assert_eq!(inv.disc, rat(-64));
    assert_eq!(inv.c4, rat(-48));
    assert_eq!(inv.j, rat(1728));

    let e = from_ints([0, -1, 1, 0, 0]).unwrap();
    let inv = e.invariants().unwrap();
    assert_eq!((inv.b2.clone(), inv.b4.clone(), inv.b6.clone(), inv.b8.clone()), (rat(-4), rat(0), rat(1), rat(-1)));
    assert_eq!(inv.disc, rat(-11));
}

#[test]
fn c4_c6_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let c: Vec<i64> = (0..5).map(|_| (rng.next_u64() % 41) as i64 - 20).collect();
        let Ok(e) = from_ints([c[0], c[1], c[2], c[3], c[4]]) else { continue };
        let inv = e.invariants().unwrap();
        let lhs = &inv.c4 * &inv.c4 * &inv.c4 - &inv.c6 * &inv.c6;
        assert_eq!(lhs, rat(1728) * &inv.disc);
    }
}

#[test]
fn singular_models_are_rejected() {
    assert!(matches!(from_ints([0, 0, 0, 0, 0]), Err(Error::Singular)));
    assert!(matches!(from_ints([0, 1, 0, 0, 0]), Err(Error::Singular)));
}

#[test]
fn transforms() {
    let e = from_ints([1, -1, 1, -3, 5]).unwrap();
    let (o, z) = (rat(1), rat(0));
    assert_eq!(e.transform(&o, &z, &z, &z).unwrap(), e);

    let f = short(0, 1, 0).transform(&rat(2), &z, &z, &z).unwrap();
    assert_eq!(f, WeierstrassModel::raw(z.clone(), z.clone(), z.clone(), ratio(1, 16), z.clone()));
    assert_eq!(f.discriminant(), rat(-64) / rat(4096));

    let (u, r, s, t) = (rat(3), ratio(1, 2), rat(-2), rat(7));
    let g = e.transform(&u, &r, &s, &t).unwrap();
    assert_eq!(g.discriminant(), e.discriminant() / rat(531441));
    let ui = Rational::one() / &u;
    let back = g.transform(&ui, &(-&r / (&u * &u)), &(-&s / &u), &((&r * &s - &t) / (&u * &u * &u))).unwrap();
    assert_eq!(back, e);

    // Composition of coordinate changes.
    let (u2, r2, s2, t2) = (ratio(1, 5), rat(2), rat(1), rat(-3));
    let two_step = g.transform(&u2, &r2, &s2, &t2).unwrap();
    let uc = &u * &u2;
    let rc = &r + &u * &u * &r2;
    let sc = &s + &u * &s2;
    let tc = &t + &u * &u * &s * &r2 + &u * &u * &u * &t2;
    assert_eq!(e.transform(&uc, &rc, &sc, &tc).unwrap(), two_step);
}

#[test]
fn twists() {
    let e = short(0, 1, 0);
    assert_eq!(quadratic_twist(&e, &rat(1)).unwrap(), e);
    let e = short(0, -1, 0);
    assert_eq!(quadratic_twist(&e, &rat(-1)).unwrap(), e);
    let e = short(2, -3, 5);
    let j = e.invariants().unwrap().j;
    assert_eq!(quadratic_twist(&e, &rat(9)).unwrap().invariants().unwrap().j, j);
    assert!(quadratic_twist(&e, &rat(0)).is_err());
    // Twisting twice by r is twisting by r², i.e. u = 1/r.
    let r = rat(-7);
    let tt = quadratic_twist(&quadratic_twist(&e, &r).unwrap(), &r).unwrap();
    let z = rat(0);
    assert_eq!(tt.transform(&r, &z, &z, &z).unwrap(), e);
    // Non-simplified models are simplified first.
    let e = from_ints([1, 0, 1, 2, 3]).unwrap();
    assert_eq!(quadratic_twist(&e, &rat(5)).unwrap().invariants().unwrap().j, e.invariants().unwrap().j);
}

#[test]
fn kernel_translations() {
    let f = [rat(0), rat(-1), rat(0)];
    assert_eq!(kernel_translate(&f, &rat(1)).unwrap(), (rat(3), rat(2)));
    assert_eq!(kernel_translate(&f, &rat(0)).unwrap(), (rat(0), rat(-1)));
    assert_eq!(kernel_translate(&f, &rat(-1)).unwrap(), (rat(-3), rat(2)));
    assert!(matches!(kernel_translate(&f, &rat(2)), Err(Error::NotARoot)));
    // a_r² − 4b_r = (r₂ − r₃)² on split cubics.
    for roots in [[1, 2, 3], [-5, 0, 7], [2, -9, 4]] {
        let [r1, r2, r3] = roots.map(rat);
        let f = [-(&r1 + &r2 + &r3), &r1 * &r2 + &r1 * &r3 + &r2 * &r3, -(&r1 * &r2 * &r3)];
        for (r, s, t) in [(&r1, &r2, &r3), (&r2, &r1, &r3), (&r3, &r1, &r2)] {
            let (a, b) = kernel_translate(&f, r).unwrap();
            assert_eq!(&a * &a - rat(4) * &b, (s - t) * (s - t));
            assert!(!b.is_zero());
        }
    }
}

#[test]
fn two_isogeny_codomains() {
    let phi = TwoIsogeny::new(rat(0), rat(1)).unwrap();
    assert_eq!(phi.codomain, short(0, -4, 0));
    let phi = TwoIsogeny::new(rat(3), rat(2)).unwrap();
    assert_eq!(phi.codomain, short(-6, 1, 0));
    assert!(TwoIsogeny::new(rat(2), rat(1)).is_err());
    assert!(TwoIsogeny::new(rat(2), rat(0)).is_err());
}

fn on_curve(e: &WeierstrassModel<Rational>, x: &Rational, y: &Rational) -> bool {
    y * y == x * x * x + &e.a2 * x * x + &e.a4 * x + &e.a6
}

fn double(a: &Rational, b: &Rational, x: &Rational, y: &Rational) -> (Rational, Rational) {
    let l = (rat(3) * x * x + rat(2) * a * x + b) / (rat(2) * y);
    let x3 = &l * &l - a - rat(2) * x;
    let y3 = -(y + &l * (&x3 - x));
    (x3, y3)
}

#[test]
fn isogeny_then_dual_is_doubling() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 40 {
        let mut r = || ratio((rng.next_u64() % 21) as i64 - 10, 1 + (rng.next_u64() % 3) as i64);
        let (a, x, y) = (r(), r(), r());
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let b = (&y * &y - &x * &x * &x - &a * &x * &x) / &x;
        let Ok(phi) = TwoIsogeny::new(a.clone(), b.clone()) else { continue };
        assert!(on_curve(&phi.domain, &x, &y));
        let (x1, y1) = phi.map_point(&x, &y).unwrap().unwrap();
        assert!(on_curve(&phi.codomain, &x1, &y1));
        let dual = phi.dual().unwrap();
        let Some((x2, y2)) = dual.map_point(&x1, &y1).unwrap() else { continue };
        let (dx, dy) = double(&a, &b, &x, &y);
        assert_eq!(x2, rat(4) * dx);
        assert_eq!(y2, rat(8) * dy);
        checked += 1;
    }
}

#[test]
fn three_isogeny_codomains() {
    let (_, c) = three_isogeny(&rat(1), &rat(1)).unwrap();
    assert_eq!(c, short(1, 18, -11));
    let (d, c) = three_isogeny(&rat(1), &rat(-12)).unwrap();
    assert_eq!(c, short(1, -216, -4080));
    assert_eq!(d, short(1, 24, 144));
    assert!(matches!(three_isogeny(&rat(0), &rat(1)), Err(Error::Singular)));
}

#[test]
fn real_components() {
    assert_eq!(real_analysis(&short(0, -1, 0), None).unwrap().0, 2);
    assert_eq!(real_analysis(&short(0, 1, 0), None).unwrap().0, 1);
    assert_eq!(component_count(1), 2);
}

/// Numerical oracle: a real point `(x', y')` of the codomain has a real
/// preimage iff `x² + (a − x')x + b = 0` has a real root `x` with
/// `x³ + ax² + bx ≥ 0`.
fn has_preimage(a: f64, b: f64, xp: f64) -> bool {
    let (p, q) = (a - xp, b);
    let disc = p * p - 4.0 * q;
    if disc < -1e-12 {
        return false;
    }
    let s = disc.max(0.0).sqrt();
    [(-p + s) / 2.0, (-p - s) / 2.0].iter().any(|&x| x * (x * x + a * x + b) >= -1e-9)
}

#[test]
fn real_surjectivity_matches_fibre_sampling() {
    for a in -6i64..=6 {
        for b in -6i64..=6 {
            let d = a * a - 4 * b;
            if b == 0 || d == 0 {
                continue;
            }
            let (af, bf, df) = (a as f64, b as f64, d as f64);
            // Real points of E': y² = x(x² − 2ax + d).
            // (0, 0) on E' has a real preimage iff a² − 4b > 0.
            let mut onto = df > 0.0;
            if onto {
                for i in -4000..4000 {
                    let xp = i as f64 / 100.0;
                    if xp == 0.0 {
                        continue;
                    }
                    if xp * (xp * xp - 2.0 * af * xp + df) >= 0.0 && !has_preimage(af, bf, xp) {
                        onto = false;
                        break;
                    }
                }
            }
            let sa = a.signum() as i8;
            let sb = b.signum() as i8;
            let sd = d.signum() as i8;
            assert_eq!(two_isogeny_surjective(sa, sb, sd), onto, "a={a} b={b}");
            let (_, s) = real_analysis(&short(a, b, 0), Some((&rat(a), &rat(b)))).unwrap();
            assert_eq!(s, Some(onto));
        }
    }
}

fn brute_rational_roots(b2: i64, b4: i64, b6: i64) -> usize {
    // Roots of 4x³ + b2x² + 2b4x + b6 have the form n/4 with n | 16·b6.
    let g = |n: i64| n * n * n + b2 * n * n + 8 * b4 * n + 16 * b6;
    if b6 == 0 {
        let q = |n: i64| n * n + b2 * n + 8 * b4;
        let mut roots = vec![0i64];
        for n in -4000..=4000 {
            if n != 0 && q(n) == 0 && !roots.contains(&n) {
                roots.push(n);
            }
        }
        return roots.len();
    }
    let m = (16 * b6).abs();
    let mut count = 0;
    for n in 1..=m {
        if m % n == 0 {
            count += usize::from(g(n) == 0) + usize::from(g(-n) == 0);
        }
    }
    count
}

#[test]
fn two_torsion_classification() {
    let e = short(0, -1, 0);
    assert_eq!(two_torsion_data(&e).unwrap().d, 1);
    let e = short(0, 1, 0);
    assert_eq!(two_torsion_data(&e).unwrap().d, 2);
    let e = from_ints([0, -1, 1, 0, 0]).unwrap();
    let t = two_torsion_data(&e).unwrap();
    assert_eq!(t.d, 6);
    assert_eq!(t.orbits.len(), 1);
    // x³ − 3x + 1 has square discriminant 81.
    let e = short(0, -3, 1);
    assert_eq!(two_torsion_data(&e).unwrap().d, 3);

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut n = 0;
    while n < 200 {
        let c: Vec<i64> = (0..5).map(|_| (rng.next_u64() % 21) as i64 - 10).collect();
        let Ok(e) = from_ints([c[0], c[1], c[2], c[3], c[4]]) else { continue };
        let (b2, b4, b6, _) = e.b_invariants();
        let to_i = |x: &Rational| -> i64 { x.to_integer().try_into().unwrap() };
        let roots = brute_rational_roots(to_i(&b2), to_i(&b4), to_i(&b6));
        let t = two_torsion_data(&e).unwrap();
        let disc = to_i(&e.discriminant());
        let sq = disc > 0 && {
            let s = (disc as f64).sqrt().round() as i64;
            (s - 1..=s + 1).any(|s| s * s == disc)
        };
        let expect = match roots {
            3 => 1,
            1 => 2,
            0 if sq => 3,
            0 => 6,
            _ => unreachable!(),
        };
        assert_eq!(t.d, expect, "{c:?}");
        assert_eq!(t.pattern.iter().sum::<usize>(), 3);
        n += 1;
    }
}
