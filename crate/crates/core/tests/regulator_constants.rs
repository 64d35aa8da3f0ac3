use ecparity::exact::rat;
use ecparity::regulator::{regulator_constant, verify_relation, GRelation, PairedRepresentation, PermGroup};
use ecparity::Error;
use num_bigint::BigInt;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

fn irreducibles(g: &PermGroup) -> Vec<PairedRepresentation> {
    vec![
        PairedRepresentation::trivial(g),
        PairedRepresentation::one_dimensional(g, &[-1, 1]).unwrap(),
        PairedRepresentation::standard(g).unwrap(),
    ]
}

#[test]
fn group_orders() {
    assert_eq!(PermGroup::symmetric3().order(), 6);
    for p in [3, 5, 7, 11, 13] {
        assert_eq!(PermGroup::dihedral(p).unwrap().order(), 2 * p);
    }
    assert_eq!(PermGroup::cyclic(5).unwrap().order(), 5);
    assert!(PermGroup::dihedral(9).is_err());
    assert!(PermGroup::dihedral(17).is_err());
    assert!(PermGroup::new("bad", 3, vec![vec![0, 0, 1]]).is_err());
}

#[test]
fn relations_verify() {
    assert!(verify_relation(&GRelation::s3()).unwrap());
    for p in [3, 5, 7, 11, 13] {
        assert!(verify_relation(&GRelation::dihedral(p).unwrap()).unwrap());
    }
    let g = PermGroup::symmetric3();
    let trivial = GRelation { group: g.clone(), terms: vec![(vec![], 1), (vec![], -1)] };
    assert!(verify_relation(&trivial).unwrap());
    let not = GRelation { group: g.clone(), terms: vec![(vec![], 1), (vec![g.generators[0].clone()], -2)] };
    assert!(!verify_relation(&not).unwrap());
    let bad = GRelation { group: g.clone(), terms: vec![(vec![vec![0, 1, 2, 3]], 1)] };
    assert_eq!(verify_relation(&bad), Err(Error::MalformedSubgroup));
    // C5 is not inside S3.
    let c5 = PermGroup::cyclic(5).unwrap();
    let foreign = GRelation { group: g, terms: vec![(c5.generators.clone(), 1)] };
    assert_eq!(verify_relation(&foreign), Err(Error::MalformedSubgroup));
}

#[test]
fn s3_constants_are_three() {
    let rel = GRelation::s3();
    for rep in irreducibles(&rel.group) {
        let c = regulator_constant(&rel, &rep, 3).unwrap();
        assert_eq!(c.square_class, BigInt::from(3), "dim {}", rep.dim);
        assert!(c.ord_p_odd);
        assert!(!regulator_constant(&rel, &rep, 2).unwrap().ord_p_odd);
    }
    assert_eq!(regulator_constant(&rel, &PairedRepresentation::trivial(&rel.group), 3).unwrap().value, ecparity::exact::ratio(1, 3));
}

#[test]
fn dihedral_constants_are_p() {
    for p in [3usize, 5, 7, 11, 13] {
        let rel = GRelation::dihedral(p).unwrap();
        for rep in irreducibles(&rel.group) {
            let c = regulator_constant(&rel, &rep, p as u64).unwrap();
            assert_eq!(c.square_class, BigInt::from(p), "D{} dim {}", 2 * p, rep.dim);
            assert!(c.ord_p_odd);
        }
    }
}

#[test]
fn constants_do_not_depend_on_the_pairing() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let rels = [GRelation::s3(), GRelation::dihedral(3).unwrap(), GRelation::dihedral(7).unwrap(), GRelation::dihedral(11).unwrap()];
    for rel in &rels {
        for rep in irreducibles(&rel.group) {
            let base = regulator_constant(rel, &rep, 3).unwrap().square_class;
            for _ in 0..5 {
                let other = rep.with_pairing(rep.random_invariant_pairing(&mut rng)).unwrap();
                assert_eq!(regulator_constant(rel, &other, 3).unwrap().square_class, base);
            }
        }
    }
}

#[test]
fn constants_are_multiplicative_in_direct_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for rel in [GRelation::s3(), GRelation::dihedral(5).unwrap()] {
        let irr = irreducibles(&rel.group);
        for a in &irr {
            for b in &irr {
                let sum = a.direct_sum(b).unwrap();
                let sum = sum.with_pairing(sum.random_invariant_pairing(&mut rng)).unwrap();
                let ca = regulator_constant(&rel, a, 2).unwrap().value;
                let cb = regulator_constant(&rel, b, 2).unwrap().value;
                let cs = regulator_constant(&rel, &sum, 2).unwrap().value;
                assert!(ecparity::exact::int::is_rational_square(&(cs / (ca * cb))));
            }
        }
    }
}

#[test]
fn s3_burnside_identity() {
    let g = PermGroup::symmetric3();
    let [s, r] = [g.generators[0].clone(), g.generators[1].clone()];
    let pc = |gens: &[Vec<usize>]| g.permutation_character(&g.subgroup(gens).unwrap());
    let (c2, c3, all) = (pc(&[s.clone()]), pc(&[r.clone()]), pc(&[s, r]));
    let irr = irreducibles(&g);
    let chars: Vec<_> = irr.iter().map(PairedRepresentation::character).collect();
    for i in 0..g.order() {
        let lhs = rat(c2[i] + c3[i] - all[i]);
        assert_eq!(lhs, &chars[0][i] + &chars[1][i] + &chars[2][i]);
    }
}

#[test]
fn invalid_representations_are_rejected() {
    let g = PermGroup::symmetric3();
    // A transposition cannot act by the identity while the 3-cycle acts by −1.
    assert!(PairedRepresentation::one_dimensional(&g, &[1, -1]).is_err());
    let std = PairedRepresentation::standard(&g).unwrap();
    let bad_pairing = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
    assert!(std.with_pairing(bad_pairing).is_err());
    let degenerate = vec![vec![rat(0), rat(0)], vec![rat(0), rat(0)]];
    assert!(std.with_pairing(degenerate).is_err());
}

#[test]
fn constants_need_a_relation_on_the_same_group() {
    let rel = GRelation::s3();
    let d6 = PermGroup::dihedral(3).unwrap();
    assert!(matches!(regulator_constant(&rel, &PairedRepresentation::trivial(&d6), 3), Err(Error::InvalidInput(_))));
    let g = rel.group.clone();
    let not = GRelation { group: g.clone(), terms: vec![(vec![g.generators[0].clone()], 1)] };
    assert!(matches!(regulator_constant(&not, &PairedRepresentation::trivial(&g), 3), Err(Error::InvalidInput(_))));
}

#[test]
fn indefinite_invariant_pairings_give_the_same_class() {
    // C2 swapping two coordinates; [[1,2],[2,1]] is invariant and
    // indefinite, with fixed line (1,1) of length 6.
    let g = PermGroup::cyclic(2).unwrap();
    let swap = vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]];
    let rep = PairedRepresentation::new(&g, vec![swap.clone()], vec![vec![rat(1), rat(2)], vec![rat(2), rat(1)]]).unwrap();
    let rel = GRelation { group: g.clone(), terms: vec![(vec![g.generators[0].clone()], 2), (vec![], -1), (vec![], 1)] };
    assert!(!verify_relation(&rel).unwrap());
    let trivial = GRelation { group: g.clone(), terms: vec![(vec![g.generators[0].clone()], 1), (vec![g.generators[0].clone()], -1)] };
    assert_eq!(regulator_constant(&trivial, &rep, 2).unwrap().value, rat(1));
    assert!(PairedRepresentation::new(&g, vec![swap], vec![vec![rat(1), rat(0)], vec![rat(0), rat(-1)]]).is_err());
}
