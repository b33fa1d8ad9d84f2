//! Labeled energy listings shared by every producer of levels.

use alloc::string::String;
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

/// Reflection parity `(−1)^r` of a level or of a QES sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_r(r: u32) -> Self {
        if r.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Parity of the n-th level of a one-dimensional even potential.
    pub fn of_level(n: u32) -> Self {
        Self::from_r(n)
    }

    pub fn r(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// Where an energy came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Provenance {
    /// Quasi-exact level of the sextic family.
    Exact,
    /// Closed-form spectrum of a deformed oscillator.
    DeformedModel,
    /// Finite-difference diagonalization.
    GridOracle,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Exact => "exact",
            Provenance::DeformedModel => "deformed-model",
            Provenance::GridOracle => "grid-oracle",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct EnergyRow {
    pub index: u32,
    pub parity: Parity,
    pub energy: f64,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct EnergyTable {
    pub label: String,
    pub rows: Vec<EnergyRow>,
}

impl EnergyTable {
    pub fn new(label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, index: u32, parity: Parity, energy: f64, provenance: Provenance) {
        self.rows.push(EnergyRow {
            index,
            parity,
            energy,
            provenance,
        });
    }

    pub fn energies(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.energy).collect()
    }

    /// Energy of the row with the given level index, if present.
    pub fn energy_of(&self, index: u32) -> Option<f64> {
        self.rows
            .iter()
            .find(|r| r.index == index)
            .map(|r| r.energy)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}
