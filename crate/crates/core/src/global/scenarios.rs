//! Global sign identities evaluated side by side: the S3 ord_3 formula,
//! the product of isogeny signs `σ_φ` and the product of norm-index signs
//! `κ` over a quadratic twist field.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::completions::prime_completions;
use super::field::{FieldTag, SplittingData};
use super::formulas::{
    field_root_number, field_root_number_at, global_c_values, prime_ords, relevant_primes, root_number_local_product, PrimeOrds, Side,
};
use crate::curves::{kernel_translate, TwoIsogeny, WeierstrassModel};
use crate::error::{Error, Result};
use crate::exact::int::{is_prime_u64, is_rational_square, val};
use crate::exact::{rat, QPoly, Rational};
use crate::padic::{factor_over_qp, hilbert_real, hilbert_symbol, with_precision, LocalField};
use crate::signs::{
    archimedean_root_number, h_symbol, h_symbol_real, kappa, kappa_real, kt_identity_check, kt_identity_real, local_root_number, parity,
    sigma_real_isogeny, sigma_two_isogeny, SignLedger,
};
use crate::tate::{base_change, start_digits};

fn place_name(p: Option<u64>) -> String {
    match p {
        Some(p) => format!("{p}"),
        None => "inf".into(),
    }
}

/// Contribution of one rational prime to both sides of the S3 identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S3Place {
    pub p: u64,
    /// `F` splits completely above `p`.
    pub split: bool,
    /// `ord_3` of the C-ratio over the places above `p`.
    pub ord3: i64,
    /// `w(E/K_p) w(E/M_p) w(E/L_p)`, each a product over places above `p`.
    pub w_product: i32,
}

impl S3Place {
    /// Both sides are trivial at a prime splitting completely in `F`.
    pub fn split_trivial(&self) -> Option<bool> {
        self.split.then(|| self.ord3 == 0 && self.w_product == 1)
    }
}

/// `(−1)^{ord_3 C(E/F)C(E/K)²/C(E/M)C(E/L)²}` against `w(E/K)w(E/M)w(E/L)`.
#[derive(Clone, Debug)]
pub struct S3Report {
    pub places: Vec<S3Place>,
    pub lhs: i32,
    pub w_k: i32,
    pub w_m: i32,
    pub w_l: i32,
    pub ledger: SignLedger,
}

impl S3Report {
    pub fn rhs(&self) -> i32 {
        self.w_k * self.w_m * self.w_l
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs() && self.places.iter().all(|p| p.split_trivial() != Some(false))
    }
}

/// Good primes below `bound` at which the 2-division cubic splits into
/// distinct linear factors, so that `F` splits completely.
pub fn split_primes(sd: &SplittingData, bound: u64) -> Vec<u64> {
    let cubic = sd.cubic_poly();
    (5..bound)
        .filter(|&p| is_prime_u64(p) && val(&sd.disc, p) == 0 && sd.simplified.coeffs().iter().all(|c| c.is_zero() || val(c, p) >= 0))
        .filter(|&p| (0..p as i64).filter(|&x| val(&cubic.eval(&rat(x)), p) > 0).count() == 3)
        .collect()
}

/// Both sides of the S3 identity, prime by prime over the primes where
/// some C-value can be nontrivial and over `extra` primes (typically from
/// [`split_primes`]).
pub fn s3_scenario(sd: &SplittingData, extra: &[u64]) -> Result<S3Report> {
    if sd.d != 6 {
        return Err(Error::InvalidInput(format!("the S3 identity needs d = 6, got d = {}", sd.d)));
    }
    let cv = global_c_values(sd, &rat(1))?;
    let mut all: Vec<PrimeOrds> = cv.primes.clone();
    for &p in extra {
        if all.iter().all(|po| po.p != p) {
            all.push(with_precision(start_digits(&sd.simplified, p), |d| prime_ords(sd, &prime_completions(sd, p, d)?, &rat(1)))?);
        }
    }
    let mut ledger = SignLedger::new();
    let mut places = Vec::new();
    let mut ord3_total = 0;
    for po in &all {
        let o = |tag| po.ords.get(&(Side::E, tag)).map_or(0, |x: &(i64, i64)| x.1);
        let ord3 = o(FieldTag::F) + 2 * o(FieldTag::K) - o(FieldTag::M) - 2 * o(FieldTag::L);
        ord3_total += ord3;
        let split = with_precision(start_digits(&sd.simplified, po.p), |d| Ok(prime_completions(sd, po.p, d)?.f.len() == 6))?;
        let mut w_product = 1;
        for tag in [FieldTag::K, FieldTag::M, FieldTag::L] {
            w_product *= field_root_number_at(sd, tag, po.p)?;
        }
        let place = place_name(Some(po.p));
        ledger.record(&place, "ord3 C-ratio", parity(ord3), "C-values over the completions of F, K, M and L")?;
        ledger.record(&place, "w(K)w(M)w(L)", w_product, "local root numbers over each completion")?;
        places.push(S3Place { p: po.p, split, ord3, w_product });
    }
    Ok(S3Report {
        places,
        lhs: parity(ord3_total),
        w_k: field_root_number(sd, FieldTag::K)?,
        w_m: field_root_number(sd, FieldTag::M)?,
        w_l: field_root_number(sd, FieldTag::L)?,
        ledger,
    })
}

/// One place of the isogeny product: `σ_φ` from C-values, the locally
/// computed `σ_φ`, the root number and the quadratic symbol term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasselsPlace {
    pub p: Option<u64>,
    pub sigma: i32,
    pub sigma_local: i32,
    pub w: i32,
    pub symbol: i32,
}

impl CasselsPlace {
    pub fn holds(&self) -> bool {
        self.sigma == self.sigma_local && self.w == self.sigma * self.symbol
    }
}

/// `∏_v σ_φ` against `(−1)^{ord_2 C(E/K)/C(E'/K)}` and `w(E/Q)`.
#[derive(Clone, Debug)]
pub struct CasselsReport {
    pub a: Rational,
    pub b: Rational,
    pub places: Vec<CasselsPlace>,
    pub sigma_product: i32,
    pub c_ratio_sign: i32,
    pub root_number: i32,
    pub ledger: SignLedger,
}

impl CasselsReport {
    pub fn holds(&self) -> bool {
        self.sigma_product == self.c_ratio_sign && self.sigma_product == self.root_number && self.places.iter().all(CasselsPlace::holds)
    }
}

pub fn cassels_scenario(sd: &SplittingData) -> Result<CasselsReport> {
    let r = sd.point.as_ref().ok_or_else(|| Error::InvalidInput("no rational 2-isogeny: d > 2".into()))?;
    let (a, b) = kernel_translate(&sd.cubic, r)?;
    let cv = global_c_values(sd, &rat(1))?;
    let mut ledger = SignLedger::new();
    let mut places = Vec::new();
    for po in &cv.primes {
        let o2 = |side| po.ords.get(&(side, FieldTag::L)).map_or(0, |x: &(i64, i64)| x.0);
        let sigma = parity(o2(Side::EPrime) - o2(Side::E));
        let (sigma_local, w, symbol) = with_precision(start_digits(&sd.simplified, po.p), |d| {
            let k = LocalField::qp(po.p, d);
            let (la, lb) = (k.from_rational(&a), k.from_rational(&b));
            let phi = TwoIsogeny::new(la.clone(), lb.clone())?;
            let w = local_root_number(&base_change(&sd.simplified, &k))?;
            Ok((sigma_two_isogeny(&phi)?, w, h_symbol(&la, &lb)? as i32))
        })?;
        places.push(CasselsPlace { p: Some(po.p), sigma, sigma_local, w, symbol });
    }
    let sigma_inf = sigma_real_isogeny(&a, &b)?;
    places.push(CasselsPlace {
        p: None,
        sigma: sigma_inf,
        sigma_local: sigma_inf,
        w: archimedean_root_number(),
        symbol: h_symbol_real(&a, &b)? as i32,
    });
    for pl in &places {
        let place = place_name(pl.p);
        ledger.record(&place, "sigma", pl.sigma, "parity of ord_2 C(E'/K_v)/C(E/K_v)")?;
        ledger.record(&place, "w", pl.w, "local root number")?;
        ledger.record(&place, "h", pl.symbol, "quadratic symbol of the isogeny coefficients")?;
    }
    let finite = cv.ord(Side::E, FieldTag::L, 2, false) - cv.ord(Side::EPrime, FieldTag::L, 2, false);
    Ok(CasselsReport {
        sigma_product: places.iter().map(|p| p.sigma).product(),
        c_ratio_sign: parity(finite + cv.onto_l as i64),
        root_number: root_number_local_product(&sd.model)?,
        a,
        b,
        places,
        ledger,
    })
}

/// One place of the twist product. `kappa` is `None` where the norm index
/// is not computable (a ramified or inert place above 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KramerPlace {
    pub p: Option<u64>,
    pub kappa: Option<i32>,
    /// `w(E/K_v) w(E_r/K_v) (−Δ, r)_v`.
    pub lhs: i32,
    /// `∏_{w|v} w(E/F_w)`.
    pub w_f: i32,
}

impl KramerPlace {
    pub fn holds(&self) -> Option<bool> {
        self.kappa.map(|k| k == self.lhs)
    }
}

/// `∏_v κ_v` against `w(E/F)` for `F = Q(√r)`.
#[derive(Clone, Debug)]
pub struct KramerReport {
    pub r: Rational,
    pub places: Vec<KramerPlace>,
    /// `None` if some `κ_v` was not computable.
    pub kramer_sign: Option<i32>,
    pub w_f: i32,
    pub ledger: SignLedger,
}

impl KramerReport {
    /// Every computable place satisfies the local identity and, when all
    /// places are computable, the global products agree.
    pub fn holds(&self) -> bool {
        self.places.iter().all(|p| p.holds() != Some(false)) && self.kramer_sign.is_none_or(|k| k == self.w_f)
    }

    pub fn unsupported_places(&self) -> Vec<Option<u64>> {
        self.places.iter().filter(|p| p.kappa.is_none()).map(|p| p.p).collect()
    }
}

pub fn kramer_scenario(model: &WeierstrassModel<Rational>, r: &Rational) -> Result<KramerReport> {
    if r.is_zero() || is_rational_square(r) {
        return Err(Error::InvalidInput("the twist must be a non-square".into()));
    }
    let simplified = model.simplified()?;
    let minus_disc = -simplified.discriminant();
    let twist_poly = QPoly::new(alloc::vec![-r.clone(), rat(0), rat(1)]);
    let mut places = Vec::new();
    for p in relevant_primes(model, r)? {
        let place = with_precision(start_digits(&simplified, p), |d| {
            let k = LocalField::qp(p, d);
            let e = base_change(&simplified, &k);
            let lr = k.from_rational(r);
            let kappa = match kappa(&e, &lr) {
                Ok(v) => Some(v),
                Err(Error::Unsupported(_)) => None,
                Err(err) => return Err(err),
            };
            let lhs = match kappa {
                Some(_) => kt_identity_check(&e, &lr)?.lhs(),
                None => {
                    let twist = crate::curves::quadratic_twist(&e, &lr)?;
                    local_root_number(&e)? * local_root_number(&twist)? * hilbert_symbol(&k.from_rational(&minus_disc), &lr)? as i32
                }
            };
            let mut w_f = 1;
            for c in factor_over_qp(&twist_poly, p, d)? {
                w_f *= local_root_number(&base_change(&simplified, &c.field))?;
            }
            Ok(KramerPlace { p: Some(p), kappa, lhs, w_f })
        })?;
        places.push(place);
    }
    let kt = kt_identity_real(&simplified, r)?;
    debug_assert_eq!(kt.kappa, kappa_real(&simplified, r)?);
    let s = |x: &Rational| if x.is_negative() { -1 } else { 1 };
    debug_assert_eq!(kt.symbol, hilbert_real(s(&minus_disc), s(r)) as i32);
    // Two real places above a real place when r > 0, one complex otherwise.
    let w_f_inf = if r.is_positive() { 1 } else { -1 };
    places.push(KramerPlace { p: None, kappa: Some(kt.kappa), lhs: kt.lhs(), w_f: w_f_inf });
    let mut ledger = SignLedger::new();
    for pl in &places {
        let place = place_name(pl.p);
        if let Some(k) = pl.kappa {
            ledger.record(&place, "kappa", k, "norm index from C-values of E, E_r and E/F")?;
        }
        ledger.record(&place, "w w_r (-D,r)", pl.lhs, "local root numbers and the Hilbert symbol")?;
        ledger.record(&place, "w(E/F)", pl.w_f, "local root numbers over the completions of F")?;
    }
    let kramer_sign = places.iter().try_fold(1, |acc, p| p.kappa.map(|k| acc * k));
    Ok(KramerReport { r: r.clone(), kramer_sign, w_f: places.iter().map(|p| p.w_f).product(), places, ledger })
}
