use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// One named sign at one place, with the formula that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignEntry {
    pub place: String,
    pub name: String,
    pub value: i32,
    pub source: &'static str,
}

/// An append-only record of computed signs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignLedger {
    entries: Vec<SignEntry>,
}

impl SignLedger {
    pub fn new() -> Self {
        Self::default()
    }

    /// Rejects anything but `±1` and an empty provenance.
    pub fn record(&mut self, place: &str, name: &str, value: i32, source: &'static str) -> Result<()> {
        if value != 1 && value != -1 {
            return Err(Error::InvalidInput(alloc::format!("sign {name} at {place} is {value}")));
        }
        if source.is_empty() {
            return Err(Error::InvalidInput(alloc::format!("sign {name} at {place} has no provenance")));
        }
        self.entries.push(SignEntry { place: place.to_string(), name: name.to_string(), value, source });
        Ok(())
    }

    pub fn entries(&self) -> &[SignEntry] {
        &self.entries
    }

    pub fn get(&self, place: &str, name: &str) -> Option<i32> {
        self.entries.iter().find(|e| e.place == place && e.name == name).map(|e| e.value)
    }

    /// Product of every entry called `name`, across places.
    pub fn product(&self, name: &str) -> i32 {
        self.entries.iter().filter(|e| e.name == name).map(|e| e.value).product()
    }

    pub fn extend(&mut self, other: SignLedger) {
        self.entries.extend(other.entries);
    }
}
