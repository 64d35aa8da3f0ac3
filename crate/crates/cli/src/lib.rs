//! Corpus ingestion, seeded generators, oracles and verification suites
//! around the `ecparity` engine.

pub mod compute;
pub mod error;
pub mod generate;
pub mod oracles;
pub mod record;
pub mod report;
pub mod suites;

pub use error::CliError;
pub use record::CurveRecord;
pub use report::{CheckResult, Outcome, Report, Status};
pub use suites::{builtin_corpus, run_suite, Suite, SuiteOptions};
