use ecparity::exact::{rat, ratio, QPoly};
use ecparity::padic::{factor_over, factor_over_qp, hilbert_symbol, is_square, minus_one_minus_one, norm_to_base, Completion, LocalField};

fn qp(p: u64) -> LocalField {
    LocalField::qp(p, 24)
}

#[test]
fn split_cubic_over_q5() {
    let comps = factor_over_qp(&QPoly::from_ints(&[0, -1, 0, 1]), 5, 20).unwrap();
    assert_eq!(comps.len(), 3);
    for c in &comps {
        assert_eq!((c.field.e(), c.field.f()), (1, 1));
    }
}

#[test]
fn eisenstein_quadratic_at_two() {
    let comps = factor_over_qp(&QPoly::from_ints(&[-2, 0, 1]), 2, 20).unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!((comps[0].field.e(), comps[0].field.f()), (2, 1));
    let r = &comps[0].root;
    assert!(r.square().sub(&comps[0].field.from_i64(2)).is_zero());
}

#[test]
fn cubic_at_eleven_degrees_sum() {
    // 4x³ − 4x² + 1 made monic: x³ − x² + 1/4.
    let poly = QPoly::new(vec![ratio(1, 4), rat(0), rat(-1), rat(1)]);
    let comps = factor_over_qp(&poly, 11, 20).unwrap();
    let total: usize = comps.iter().map(|c| c.field.degree()).sum();
    assert_eq!(total, 3);
    // Oracle: simple roots mod 11 lift uniquely. The discriminant −176 has odd
    // 11-valuation, so the double root mod 11 cannot split over Q_11.
    let f = |x: i64| 4 * x * x * x - 4 * x * x + 1;
    let df = |x: i64| 12 * x * x - 8 * x;
    let simple = (0..11).filter(|&x| f(x) % 11 == 0 && df(x) % 11 != 0).count();
    assert_eq!(comps.iter().filter(|c| c.degree() == 1).count(), simple);
    let quad: Vec<_> = comps.iter().filter(|c| c.degree() == 2).collect();
    assert_eq!(quad.len(), 1);
    assert_eq!(quad[0].field.e(), 2);
}

#[test]
fn unramified_and_wild_factorisations() {
    // x² + 1 over Q_3: unramified quadratic.
    let c = factor_over_qp(&QPoly::from_ints(&[1, 0, 1]), 3, 20).unwrap();
    assert_eq!((c[0].field.e(), c[0].field.f()), (1, 2));
    // x² + 1 over Q_2: ramified; x² + x + 1 over Q_2: unramified.
    let c = factor_over_qp(&QPoly::from_ints(&[1, 0, 1]), 2, 20).unwrap();
    assert_eq!((c[0].field.e(), c[0].field.f()), (2, 1));
    let c = factor_over_qp(&QPoly::from_ints(&[1, 1, 1]), 2, 20).unwrap();
    assert_eq!((c[0].field.e(), c[0].field.f()), (1, 2));
    // x³ − 2 over Q_3: totally (wildly) ramified cubic.
    let c = factor_over_qp(&QPoly::from_ints(&[-2, 0, 0, 1]), 3, 24).unwrap();
    assert_eq!((c[0].field.e(), c[0].field.f()), (3, 1));
    // x³ − 2 over Q_5: one root and an unramified quadratic.
    let c = factor_over_qp(&QPoly::from_ints(&[-2, 0, 0, 1]), 5, 20).unwrap();
    let mut shapes: Vec<_> = c.iter().map(|c| (c.field.e(), c.field.f())).collect();
    shapes.sort();
    assert_eq!(shapes, [(1, 1), (1, 2)]);
    // x⁶ + 3 over Q_2 (degree 6, mixed).
    let c = factor_over_qp(&QPoly::from_ints(&[3, 0, 0, 0, 0, 0, 1]), 2, 30).unwrap();
    let total: usize = c.iter().map(|c| c.field.degree()).sum();
    assert_eq!(total, 6);
}

#[test]
fn relative_extension_tower() {
    // Q_2(√2)(√3): y² − 3 over K = Q_2(√2).
    let c = factor_over_qp(&QPoly::from_ints(&[-2, 0, 1]), 2, 30).unwrap();
    let k = c[0].field.clone();
    let poly = vec![k.from_i64(-3), k.zero(), k.one()];
    let ext = factor_over(&k, &poly).unwrap();
    assert_eq!(ext.len(), 1);
    let l = &ext[0];
    assert_eq!(l.field.degree(), 4);
    assert!(l.root.square().sub(&l.field.from_i64(3)).is_zero());
    // The embedding respects √2.
    let s2 = l.embedding.apply(&c[0].root);
    assert!(s2.square().sub(&l.field.from_i64(2)).is_zero());
}

#[test]
fn square_examples() {
    assert!(is_square(&qp(7).from_i64(4)).unwrap());
    assert!(!is_square(&qp(2).from_i64(5)).unwrap());
    for p in [2, 3, 5, 7] {
        assert!(!is_square(&qp(p).from_i64(p as i64)).unwrap());
    }
    assert!(is_square(&qp(2).from_i64(17)).unwrap());
    assert!(is_square(&qp(2).from_i64(-7)).unwrap());
    assert!(!is_square(&qp(2).from_i64(3)).unwrap());
}

#[test]
fn squares_of_two_adic_units_are_one_mod_eight() {
    // Oracle: squaring every unit mod 2^6.
    let sq: Vec<i64> = (1..64).step_by(2).map(|x| (x * x) % 64).collect();
    for u in (1..64).step_by(2) {
        let brute = sq.contains(&u);
        assert_eq!(is_square(&qp(2).from_i64(u)).unwrap(), brute, "u = {u}");
    }
}

#[test]
fn hilbert_examples() {
    let k2 = qp(2);
    let k3 = qp(3);
    assert_eq!(hilbert_symbol(&k2.one(), &k2.from_i64(7)).unwrap(), 1);
    assert_eq!(hilbert_symbol(&k2.from_i64(-1), &k2.from_i64(-1)).unwrap(), -1);
    assert_eq!(hilbert_symbol(&k3.from_i64(-1), &k3.from_i64(3)).unwrap(), -1);
    assert_eq!(hilbert_symbol(&k2.from_i64(2), &k2.from_i64(3)).unwrap(), -1);
    assert_eq!(hilbert_symbol(&k2.from_i64(2), &k2.from_i64(7)).unwrap(), 1);
}

#[test]
fn minus_one_minus_one_table() {
    assert_eq!(minus_one_minus_one(&Completion::Local(qp(3))), 1);
    assert_eq!(minus_one_minus_one(&Completion::Local(qp(2))), -1);
    assert_eq!(minus_one_minus_one(&Completion::Real), -1);
    assert_eq!(minus_one_minus_one(&Completion::Complex), 1);
}

#[test]
fn minus_one_minus_one_matches_symbol_in_extensions() {
    for (poly, p) in [(vec![-2, 0, 1], 2u64), (vec![1, 1, 1], 2), (vec![-2, 0, 0, 1], 2), (vec![3, 0, 1], 3)] {
        let comps = factor_over_qp(&QPoly::from_ints(&poly), p, 30).unwrap();
        for c in comps {
            let k = &c.field;
            let m1 = k.from_i64(-1);
            assert_eq!(hilbert_symbol(&m1, &m1).unwrap(), minus_one_minus_one(&Completion::Local(k.clone())));
        }
    }
}

#[test]
fn norms() {
    let c = factor_over_qp(&QPoly::from_ints(&[-2, 0, 1]), 2, 24).unwrap();
    let n = norm_to_base(&c[0].root, &c[0].embedding).unwrap();
    assert!(n.sub(&c[0].embedding.src.from_i64(-2)).is_zero());
    // √5 ∈ Q_11: the extension is trivial.
    let c = factor_over_qp(&QPoly::from_ints(&[-5, 0, 1]), 11, 20).unwrap();
    assert_eq!(c.len(), 2);
    let x = c[0].root.add(&c[0].field.one());
    let n = norm_to_base(&x, &c[0].embedding).unwrap();
    assert!(n.sub(&x).is_zero());
    // Norm of a base element is its power.
    let c = factor_over_qp(&QPoly::from_ints(&[1, 1, 1]), 2, 24).unwrap();
    let k = c[0].embedding.src.clone();
    let three = c[0].embedding.apply(&k.from_i64(3));
    let n = norm_to_base(&three, &c[0].embedding).unwrap();
    assert!(n.sub(&k.from_i64(9)).is_zero());
}

#[test]
fn norm_compatibility_of_symbols() {
    // (a, N b)_K = (a, b)_L for a ∈ K.
    for (poly, p) in [(vec![-2, 0, 1], 2u64), (vec![1, 1, 1], 2), (vec![1, 0, 1], 3), (vec![-3, 0, 1], 3)] {
        let c = factor_over_qp(&QPoly::from_ints(&poly), p, 30).unwrap();
        let c = &c[0];
        let k = c.embedding.src.clone();
        for a in [-1i64, 2, 3, 5, 6, -3] {
            for b in [c.root.clone(), c.root.add(&c.field.one()), c.root.add(&c.field.from_i64(3))] {
                if !b.is_certified_nonzero() {
                    continue;
                }
                let nb = norm_to_base(&b, &c.embedding).unwrap();
                let lhs = hilbert_symbol(&k.from_i64(a), &nb).unwrap();
                let rhs = hilbert_symbol(&c.embedding.apply(&k.from_i64(a)), &b).unwrap();
                assert_eq!(lhs, rhs, "p={p} poly={poly:?} a={a}");
            }
        }
    }
}

#[test]
fn symbol_identities_in_extensions() {
    let c = factor_over_qp(&QPoly::from_ints(&[-2, 0, 0, 1]), 2, 30).unwrap();
    for comp in c {
        let k = comp.field.clone();
        let r = comp.root.clone();
        let elems = [r.clone(), r.add(&k.one()), r.square().add(&k.from_i64(3)), k.from_i64(-5), r.sub(&k.from_i64(6))];
        let m11 = minus_one_minus_one(&Completion::Local(k.clone()));
        for a in &elems {
            let one_minus = k.one().sub(a);
            if one_minus.is_certified_nonzero() {
                assert_eq!(hilbert_symbol(a, &one_minus).unwrap(), 1);
            }
            assert_eq!(hilbert_symbol(a, &a.neg()).unwrap(), 1);
            for b in &elems {
                let c3 = a.add(b).neg();
                if c3.is_certified_nonzero() {
                    let s = hilbert_symbol(a, &b.neg()).unwrap()
                        * hilbert_symbol(b, &c3.neg()).unwrap()
                        * hilbert_symbol(&c3, &a.neg()).unwrap();
                    assert_eq!(s, m11);
                }
                for c2 in &elems {
                    assert_eq!(hilbert_symbol(&a.mul(b), c2).unwrap(), hilbert_symbol(a, c2).unwrap() * hilbert_symbol(b, c2).unwrap());
                }
            }
        }
    }
}
