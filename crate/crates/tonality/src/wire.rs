//! Serialization schema for catalog rows.
//!
//! One wire row corresponds field for field to a `CatalogRow`; chords and
//! cadences travel as numeral labels, tone sets as ascending residues.
//! Rendering is stable: serializing what was just parsed reproduces the
//! input bytes.

use serde::{Deserialize, Serialize};

use crate::degree::degree_label;
use crate::error::Error;
use crate::modulation::CatalogRow;

/// JSON form of one catalog row. Field order is the column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRowWire {
    pub tr: u8,
    pub cadence: Vec<String>,
    pub quantum: Vec<u8>,
    pub modulator: String,
    pub pivots: Vec<String>,
    pub covered: bool,
    pub annotations: Vec<String>,
}

impl CatalogRowWire {
    pub fn from_row(row: &CatalogRow, width: usize) -> Self {
        CatalogRowWire {
            tr: row.distance,
            cadence: row
                .cadence
                .indices()
                .map(|i| degree_label(i, width))
                .collect(),
            quantum: row.quantum.residues().collect(),
            modulator: row.modulator.to_string(),
            pivots: row
                .pivots
                .indices()
                .map(|i| degree_label(i, width))
                .collect(),
            covered: row.covered,
            annotations: row.annotations.iter().map(|a| a.to_string()).collect(),
        }
    }
}

pub fn rows_to_wire(rows: &[CatalogRow], width: usize) -> Vec<CatalogRowWire> {
    rows.iter().map(|r| CatalogRowWire::from_row(r, width)).collect()
}

/// Pretty printed JSON array with a trailing newline.
pub fn wires_to_json(wires: &[CatalogRowWire]) -> String {
    let mut text = serde_json::to_string_pretty(wires).expect("serializable");
    text.push('\n');
    text
}

pub fn wires_from_json(text: &str) -> Result<Vec<CatalogRowWire>, Error> {
    serde_json::from_str(text).map_err(|_| Error::Parse {
        what: "catalog rows",
        input: summary(text),
    })
}

fn summary(text: &str) -> String {
    let mut s: String = text.chars().take(40).collect();
    if text.chars().nth(40).is_some() {
        s.push_str("...");
    }
    s
}

/// The checked-in catalog of the twelve-tone tetradic major orbit, used by
/// the golden tests and by `catalog --check-golden`.
pub fn tetradic_major_reference_json() -> &'static str {
    include_str!("../data/tetradic_major_catalog.json")
}
