//! `E/Q` over the fields of its 2-torsion lattice: global C-products, the
//! root number formula and the global sign identities.

mod completions;
mod field;
mod formulas;
mod scenarios;

pub use completions::{prime_completions, Completion, PrimeCompletions};
pub use field::{
    build_splitting_data, build_splitting_data_at, decompose, FieldTag, NumberField, Place, PlaceDecomposition, SplittingData,
};
pub use formulas::{
    field_root_number, field_root_number_at, global_c_values, global_ord, global_root_number_formula, local_root_numbers, relevant_primes,
    root_number_local_product, semistable_root_number, GlobalCValues, GlobalFormula, PrimeOrds, Side,
};
pub use scenarios::{
    cassels_scenario, kramer_scenario, s3_scenario, split_primes, CasselsPlace, CasselsReport, KramerPlace, KramerReport, S3Place, S3Report,
};
