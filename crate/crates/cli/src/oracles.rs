//! Engine-independent oracles.

use ecparity::curves::{kernel_translate, WeierstrassModel};
use ecparity::exact::int::val;
use ecparity::exact::{rat, QPoly, Rational};
use ecparity::padic::{factor_over, factor_over_qp, is_square};
use ecparity::tate::Kodaira;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// `u mod p^n` for the unit part `u` of `x = p^v u`, and `v`.
fn split(x: &Rational, p: u64, modulus: i64) -> (i64, i64) {
    let v = val(x, p);
    let pb = BigInt::from(p);
    let mut n = x.numer().clone();
    let mut d = x.denom().clone();
    while n.is_multiple_of(&pb) {
        n /= &pb;
    }
    while d.is_multiple_of(&pb) {
        d /= &pb;
    }
    let m = BigInt::from(modulus);
    let dinv = d.extended_gcd(&m).x;
    let u = (n * dinv).mod_floor(&m);
    (u.to_i64().expect("reduced modulo a small modulus"), v)
}

/// `(a, b)_p` by searching for a primitive zero of `ax² + by² − z²`
/// modulo `p^N`. After scaling `a` and `b` by squares to valuations 0 or 1,
/// every partial derivative at a primitive zero with its unit coordinate
/// set to 1 has valuation at most `v(2) + 1`, so `N = 2v(2) + 3` makes any
/// zero mod `p^N` lift by Hensel's lemma.
pub fn hilbert_brute(a: &Rational, b: &Rational, p: u64) -> i32 {
    assert!(!a.is_zero() && !b.is_zero());
    let v2 = (p == 2) as u32;
    let n = 2 * v2 + 3;
    let q = (p as i64).pow(n);
    let pi = p as i64;
    let (ua, va) = split(a, p, q);
    let (ub, vb) = split(b, p, q);
    let lift = |u: i64, v: i64| if v.rem_euclid(2) == 1 { u * pi % q } else { u };
    let (a, b) = (lift(ua, va), lift(ub, vb));
    let f = |x: i64, y: i64, z: i64| (a * (x * x % q) + b * (y * y % q) - z * z % q).rem_euclid(q) == 0;
    for s in 0..q {
        for t in 0..q {
            if f(1, s, t) || f(s, 1, t) || f(s, t, 1) {
                return 1;
            }
        }
    }
    -1
}

fn vp(x: &BigInt, p: u64) -> i64 {
    if x.is_zero() {
        return i64::MAX / 4;
    }
    val(&Rational::from_integer(x.clone()), p)
}

fn residue(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue below p")
}

fn is_sq_mod(x: u64, p: u64) -> bool {
    (1..p).any(|y| (y * y) % p == x % p)
}

/// `(Kodaira, Tamagawa number, conductor exponent)` for an integral model
/// at `p ≥ 5` from the valuations of `c4, c6, Δ` and residue tests.
/// `None` outside the table (small `p` or minimal `v(Δ) > 12`).
pub fn tate_table(e: &WeierstrassModel<Rational>, p: u64) -> Option<(Kodaira, u32, i64)> {
    if p < 5 || e.coeffs().iter().any(|c| !c.is_integer()) {
        return None;
    }
    let (c4, c6) = e.c_invariants();
    let (mut c4, mut c6, mut dl) = (c4.to_integer(), c6.to_integer(), e.discriminant().to_integer());
    let pb = BigInt::from(p);
    while vp(&c4, p) >= 4 && vp(&c6, p) >= 6 {
        c4 /= pb.pow(4);
        c6 /= pb.pow(6);
        dl /= pb.pow(12);
    }
    let (v4, vd) = (vp(&c4, p), vp(&dl, p));
    if vd > 12 {
        return None;
    }
    if vd == 0 {
        return Some((Kodaira::I(0), 1, 0));
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
        return Some((Kodaira::I(n), c, 1));
    }
    let unit = |x: &BigInt, k: u32| residue(&(x / pb.pow(k)), p);
    if 3 * v4 < vd {
        let n = (vd - 6) as u32;
        return Some((Kodaira::IStar(n), two_power_torsion(&c4, &c6, p, n), 2));
    }
    Some(match vd {
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
        _ => return None,
    })
}

/// For `I_n*` at odd `p` the component group is the 2-primary torsion of
/// `E(Q_p)`: count rational 2-torsion, and for odd `n` test whether the
/// rational 2-torsion point is divisible by 2.
fn two_power_torsion(c4: &BigInt, c6: &BigInt, p: u64, n: u32) -> u32 {
    let a4 = Rational::from_integer(c4 * -27);
    let a6 = Rational::from_integer(c6 * -54);
    let cubic = QPoly::new(vec![a6.clone(), a4.clone(), rat(0), rat(1)]);
    let comps = factor_over_qp(&cubic, p, 60).expect("separable cubic");
    let roots: Vec<_> = comps.iter().filter(|c| c.degree() == 1).collect();
    if n % 2 == 0 {
        return 1 + roots.len() as u32;
    }
    let k = roots[0].field.clone();
    let f = [k.zero(), k.from_rational(&a4), k.from_rational(&a6)];
    let (a, b) = kernel_translate(&f, &roots[0].root).expect("root of the cubic");
    if !is_square(&b).expect("unit or certified valuation") {
        return 2;
    }
    let sq = factor_over(&k, &[b.neg(), k.zero(), k.one()]).expect("square root");
    let d = sq.iter().find(|c| c.degree() == 1).expect("split").root.clone();
    let two_d = d.add(&d);
    if is_square(&a.add(&two_d)).unwrap_or(false) || is_square(&a.sub(&two_d)).unwrap_or(false) {
        4
    } else {
        2
    }
}
