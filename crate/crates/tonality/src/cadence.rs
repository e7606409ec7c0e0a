//! Cadential degree sets: groups of chords that pin down one tonality of
//! an orbit.
//!
//! A degree set J is cadential when the representative tonality is the
//! only orbit member whose degree chords include every chord that J picks
//! out of the representative. The minimal such sets form an antichain and
//! are what the modulation catalog feeds on.

use crate::degree::DegreeSet;
use crate::error::Error;
use crate::scale::TonalityOrbit;

/// Degree counts above this make the 2^k subset sweep unreasonable.
pub const MAX_SEARCH_DEGREES: usize = 16;

/// The minimal cadential sets of an orbit, lexicographically ordered by
/// their ascending index sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CadentialCatalog {
    minimal_sets: Vec<DegreeSet>,
}

impl CadentialCatalog {
    pub fn minimal_sets(&self) -> &[DegreeSet] {
        &self.minimal_sets
    }

    pub fn len(&self) -> usize {
        self.minimal_sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minimal_sets.is_empty()
    }

    pub fn contains(&self, set: DegreeSet) -> bool {
        self.minimal_sets.contains(&set)
    }
}

fn check_indices(orbit: &TonalityOrbit, j: DegreeSet) -> Result<(), Error> {
    let count = orbit.degree_count();
    match j.max_index() {
        Some(max) if max >= count => Err(Error::DegreeOutOfRange { index: max, count }),
        _ => Ok(()),
    }
}

/// Bitmask over orbit members that hold every chord J selects from the
/// representative. Member 0 is always present.
fn fiber_mask(orbit: &TonalityOrbit, j: DegreeSet) -> u128 {
    let rep = orbit.representative();
    let mut fiber = (1u128 << orbit.len()) - 1;
    for index in j.indices() {
        let chord = rep.degree(index);
        let mut holders = 0u128;
        for (m, member) in orbit.members().iter().enumerate() {
            if member.has_chord(chord) {
                holders |= 1u128 << m;
            }
        }
        fiber &= holders;
    }
    fiber
}

/// Whether J pins the representative uniquely. The empty set is cadential
/// exactly in single-member orbits, where there is nothing to confuse.
pub fn is_cadential(orbit: &TonalityOrbit, j: DegreeSet) -> Result<bool, Error> {
    check_indices(orbit, j)?;
    Ok(fiber_mask(orbit, j) == 1)
}

/// All cadential sets without a cadential proper subset.
///
/// Cadentiality is monotone under inclusion, so dropping one element at a
/// time suffices for the minimality check.
pub fn minimal_cadential_sets(orbit: &TonalityOrbit) -> Result<CadentialCatalog, Error> {
    let k = orbit.degree_count();
    if k > MAX_SEARCH_DEGREES {
        return Err(Error::CapacityExceeded {
            count: k,
            max: MAX_SEARCH_DEGREES,
        });
    }

    // Holder masks per degree; every subset's fiber is their intersection.
    let rep = orbit.representative();
    let all = (1u128 << orbit.len()) - 1;
    let holders: Vec<u128> = (0..k)
        .map(|index| {
            let chord = rep.degree(index);
            let mut mask = 0u128;
            for (m, member) in orbit.members().iter().enumerate() {
                if member.has_chord(chord) {
                    mask |= 1u128 << m;
                }
            }
            mask
        })
        .collect();

    let cadential: Vec<bool> = (0u32..1 << k)
        .map(|subset| {
            let mut fiber = all;
            for (index, h) in holders.iter().enumerate() {
                if subset & (1 << index) != 0 {
                    fiber &= h;
                }
            }
            fiber == 1
        })
        .collect();

    let mut minimal_sets: Vec<DegreeSet> = (0u32..1 << k)
        .filter(|&subset| {
            cadential[subset as usize]
                && (0..k).all(|index| {
                    subset & (1 << index) == 0 || !cadential[(subset & !(1 << index)) as usize]
                })
        })
        .map(|subset| DegreeSet::from_indices((0..k).filter(|i| subset & (1 << i) != 0)))
        .collect();
    minimal_sets.sort();
    Ok(CadentialCatalog { minimal_sets })
}
