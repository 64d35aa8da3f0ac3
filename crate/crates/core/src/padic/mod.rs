//! p-adic fields: tower-form extensions of `Q_p`, local factorisation,
//! square classes, Hilbert symbols and norms.

mod embed;
pub mod engine;
mod field;
mod hilbert;
pub(crate) mod linalg;
mod norm;

pub use embed::Embedding;
pub use engine::{factor_over, factor_over_qp, Component, MAX_ABSOLUTE_DEGREE};
pub use field::{LocalElement, LocalField};
pub use hilbert::{hilbert_real, hilbert_symbol, is_square, minus_one_minus_one, Completion};
pub use norm::norm_to_base;

/// Run `f` at `start` digits, doubling on precision exhaustion, at most
/// four retries.
pub fn with_precision<T>(start: u32, mut f: impl FnMut(u32) -> crate::Result<T>) -> crate::Result<T> {
    let mut digits = start.max(4);
    let mut last = None;
    for _ in 0..5 {
        match f(digits) {
            Err(crate::Error::PrecisionExhausted(m)) => last = Some(m),
            other => return other,
        }
        digits *= 2;
    }
    Err(crate::Error::PrecisionExhausted(last.unwrap_or("precision retries exhausted")))
}

/// Default p-adic digits for a field of ramification `e` over `Q_p`.
pub fn default_digits(p: u64, e: usize) -> u32 {
    let v2 = if p == 2 { e as u32 } else { 0 };
    20 + 2 * v2
}
