//! Local signs: `σ_φ`, the isogeny symbol, local root numbers from 2-isogeny
//! data, the m-invariants, `κ` and the identities tying them together.

mod context;
mod isogeny;
mod kappa;
mod ledger;
mod local;
mod symbols;

pub use context::{isogeny_context, IsogenyContext, OrbitRep, SplittingField};
pub use isogeny::{isogeny_formula_check, sigma_three_isogeny, sigma_two_isogeny, IsogenyCheck};
pub use kappa::{kappa, kappa_real, kt_identity_check, kt_identity_real, KtCheck};
pub use ledger::{SignEntry, SignLedger};
pub use local::{
    archimedean_root_number, dx_over_y, local_root_number, local_root_number_qp, local_signs, local_signs_qp, LocalSigns, MInvariants,
    OSign,
};
pub use symbols::{h_symbol, h_symbol_real, sigma_complex, sigma_real_isogeny, symbol_product_check, SymbolProductCheck};

/// `(−1)^n`.
pub fn parity(n: i64) -> i32 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
