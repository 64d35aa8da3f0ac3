use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed};

use crate::curves::{kernel_translate, two_torsion_data, TwoTorsionData, WeierstrassModel};
use crate::error::{Error, Result};
use crate::exact::{rat, QPoly, Rational};
use crate::padic::{factor_over_qp, LocalField};

/// The fields of the 2-torsion lattice of `E/Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldTag {
    /// `Q` itself.
    K,
    /// `Q(√Δ)`.
    M,
    /// `Q(P)` for the chosen 2-torsion point.
    L,
    /// `Q(E[2])`.
    F,
}

/// A number field given by a monic irreducible polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    pub tag: FieldTag,
    pub poly: QPoly,
    pub real_places: usize,
    pub complex_places: usize,
}

impl NumberField {
    pub fn new(tag: FieldTag, poly: QPoly) -> Self {
        let poly = poly.monic();
        let real_places = poly.isolate_real_roots().len();
        let complex_places = (poly.deg() - real_places) / 2;
        NumberField { tag, poly, real_places, complex_places }
    }

    pub fn degree(&self) -> usize {
        self.poly.deg()
    }
}

/// `E/Q` with its 2-torsion fields and the point `P` of the global formula.
#[derive(Clone, Debug)]
pub struct SplittingData {
    pub model: WeierstrassModel<Rational>,
    /// `y² = x³ + Ax² + Bx + C`, on which `ω = dx/y`.
    pub simplified: WeierstrassModel<Rational>,
    pub cubic: [Rational; 3],
    pub torsion: TwoTorsionData,
    pub d: usize,
    /// `x(P)` when `P` is rational.
    pub point: Option<Rational>,
    /// The irreducible factor of the 2-division cubic that `x(P)` satisfies.
    pub point_poly: QPoly,
    /// For `d = 2`, the quadratic factor cutting out `F`.
    pub quadratic_factor: Option<QPoly>,
    pub disc: Rational,
    pub k: NumberField,
    pub m: Option<NumberField>,
    pub l: NumberField,
    pub f: NumberField,
}

impl SplittingData {
    pub fn field(&self, tag: FieldTag) -> Option<&NumberField> {
        match tag {
            FieldTag::K => Some(&self.k),
            FieldTag::M => self.m.as_ref(),
            FieldTag::L => Some(&self.l),
            FieldTag::F => Some(&self.f),
        }
    }

    pub fn cubic_poly(&self) -> QPoly {
        let [a, b, c] = self.cubic.clone();
        QPoly::new(vec![c, b, a, rat(1)])
    }
}

/// Build the field lattice, taking the first rational 2-torsion point.
pub fn build_splitting_data(model: &WeierstrassModel<Rational>) -> Result<SplittingData> {
    build_splitting_data_at(model, 0)
}

/// As [`build_splitting_data`], with `P` the `choice`-th rational root of
/// the 2-division cubic (only meaningful when `d = 1`).
pub fn build_splitting_data_at(model: &WeierstrassModel<Rational>, choice: usize) -> Result<SplittingData> {
    let torsion = two_torsion_data(model)?;
    let simplified = model.simplified()?;
    let cubic = simplified.two_division_cubic()?;
    let d = torsion.d;
    let disc = torsion.disc.clone();
    let x = QPoly::x();
    let k = NumberField::new(FieldTag::K, x.clone());
    let m = (d % 2 == 0).then(|| NumberField::new(FieldTag::M, QPoly::new(vec![-disc.clone(), rat(0), rat(1)])));
    let cubic_poly = torsion.cubic.clone();
    let (point, point_poly, quadratic_factor, l, f) = match d {
        1 | 2 => {
            let roots = &torsion.rational_roots;
            if choice >= roots.len() {
                return Err(Error::InvalidInput("no such rational 2-torsion point".into()));
            }
            let r = roots[choice].clone();
            let lin = QPoly::new(vec![-r.clone(), rat(1)]);
            let l = NumberField::new(FieldTag::L, x.clone());
            if d == 1 {
                (Some(r), lin, None, l, NumberField::new(FieldTag::F, x))
            } else {
                let q = cubic_poly.divrem(&lin).0;
                let f = NumberField::new(FieldTag::F, q.clone());
                (Some(r), lin, Some(q), l, f)
            }
        }
        3 => {
            let l = NumberField::new(FieldTag::L, cubic_poly.clone());
            let f = NumberField::new(FieldTag::F, cubic_poly.clone());
            (None, cubic_poly, None, l, f)
        }
        _ => {
            let l = NumberField::new(FieldTag::L, cubic_poly.clone());
            let f = NumberField::new(FieldTag::F, sextic_generator(&cubic_poly, &disc));
            (None, cubic_poly, None, l, f)
        }
    };
    Ok(SplittingData { model: model.clone(), simplified, cubic, torsion, d, point, point_poly, quadratic_factor, disc, k, m, l, f })
}

/// A defining polynomial for `Q(r, √D)`: the minimal polynomial of
/// `r + c√D`, namely `f(x − s)f(x + s)` with `s² = c²D`, for the first
/// `c` making it squarefree.
fn sextic_generator(f: &QPoly, disc: &Rational) -> QPoly {
    // Taylor coefficients T_k = f^{(k)}/k!.
    let mut taylor = vec![f.clone()];
    let mut fact = Rational::one();
    let mut der = f.clone();
    for k in 1..=3 {
        der = der.derivative();
        fact *= rat(k);
        taylor.push(der.scale(&(Rational::one() / &fact)));
    }
    for c in 1..20i64 {
        let s2 = disc * rat(c * c);
        let mut g = QPoly::zero();
        let mut s2n = Rational::one();
        for n in (0..=6).step_by(2) {
            let mut coeff = QPoly::zero();
            for j in 0..=n {
                let kk = n - j;
                if j > 3 || kk > 3 {
                    continue;
                }
                let term = taylor[j].mul(&taylor[kk]);
                coeff = if j % 2 == 0 { coeff.add(&term) } else { coeff.sub(&term) };
            }
            g = g.add(&coeff.scale(&s2n));
            s2n *= &s2;
        }
        if g.is_squarefree() {
            return g;
        }
    }
    unreachable!("a primitive element r + c√D exists for some small c")
}

/// A place of a number field above a rational prime or infinity.
#[derive(Clone, Debug)]
pub enum Place {
    Real,
    Complex,
    Finite { completion: LocalField },
}

impl Place {
    pub fn local_degree(&self) -> usize {
        match self {
            Place::Real => 1,
            Place::Complex => 2,
            Place::Finite { completion } => completion.degree(),
        }
    }
}

/// The places of a field above `p` (`None` for the infinite place).
#[derive(Clone, Debug)]
pub struct PlaceDecomposition {
    pub prime: Option<u64>,
    pub places: Vec<Place>,
}

impl PlaceDecomposition {
    pub fn local_degrees(&self) -> Vec<usize> {
        self.places.iter().map(Place::local_degree).collect()
    }
}

/// Completions of `field` at `p` by factoring its defining polynomial over
/// `Q_p`; real and complex places come from its real roots.
pub fn decompose(field: &NumberField, p: Option<u64>, digits: u32) -> Result<PlaceDecomposition> {
    let places = match p {
        None => {
            let mut v = vec![Place::Real; field.real_places];
            v.extend(vec![Place::Complex; field.complex_places]);
            v
        }
        Some(p) => factor_over_qp(&field.poly, p, digits)?.into_iter().map(|c| Place::Finite { completion: c.field }).collect(),
    };
    Ok(PlaceDecomposition { prime: p, places })
}

/// Number of infinite places of `field` at which the 2-isogeny with kernel
/// `P` maps `E` onto `E'`.
pub(crate) fn archimedean_onto_places(sd: &SplittingData, tag: FieldTag) -> Result<usize> {
    use crate::curves::real::{sign, two_isogeny_surjective};
    let [a_, b_, _] = sd.cubic.clone();
    if let Some(r) = &sd.point {
        let (a, b) = kernel_translate(&sd.cubic, r)?;
        let four = rat(4);
        let onto = two_isogeny_surjective(sign(&a), sign(&b), sign(&(&a * &a - &b * &four))) as usize;
        return Ok(match tag {
            FieldTag::K | FieldTag::L => onto,
            FieldTag::F => match &sd.quadratic_factor {
                Some(q) if q.discriminant().is_positive() => 2 * onto,
                Some(_) => 1,
                None => onto,
            },
            FieldTag::M => return Err(Error::InvalidInput("M carries no 2-isogeny".into())),
        });
    }
    // P = (r, 0) with r a root of the cubic; a = 3r + A, b = 3r² + 2Ar + B.
    let cubic = sd.cubic_poly();
    let a_poly = QPoly::new(vec![a_.clone(), rat(3)]);
    let b_poly = QPoly::new(vec![b_.clone(), &a_ * rat(2), rat(3)]);
    let disc_poly = a_poly.mul(&a_poly).sub(&b_poly.scale(&rat(4)));
    // Over K(r), F is cut out by x² + sx + t, s = A + r, t = B + rs.
    let s_poly = QPoly::new(vec![a_.clone(), rat(1)]);
    let t_poly = QPoly::constant(b_.clone()).add(&QPoly::x().mul(&s_poly));
    let rest_disc = s_poly.mul(&s_poly).sub(&t_poly.scale(&rat(4)));
    let real_roots = cubic.isolate_real_roots();
    let complex_l = (3 - real_roots.len()) / 2;
    let mut count = 0;
    for root in &real_roots {
        let onto = two_isogeny_surjective(root.sign_of(&a_poly), root.sign_of(&b_poly), root.sign_of(&disc_poly)) as usize;
        count += match tag {
            FieldTag::L => onto,
            FieldTag::F if sd.d == 3 => onto,
            FieldTag::F => {
                if root.sign_of(&rest_disc) > 0 {
                    2 * onto
                } else {
                    1
                }
            }
            _ => return Err(Error::InvalidInput("the isogeny lives over L and F only".into())),
        };
    }
    count += match tag {
        FieldTag::L => complex_l,
        _ if sd.d == 3 => complex_l,
        _ => 2 * complex_l,
    };
    Ok(count)
}

/// `Σ_{v|∞} 1` over the infinite places of `field`.
pub(crate) fn infinite_places(field: &NumberField) -> usize {
    field.real_places + field.complex_places
}
