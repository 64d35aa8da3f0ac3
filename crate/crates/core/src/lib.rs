#![no_std]

extern crate alloc;

pub mod curves;
pub mod error;
pub mod exact;
pub mod global;
pub mod padic;
pub mod regulator;
pub mod signs;
pub mod tate;

pub use error::{Error, Result};
