//! Scales, stacked-third interpretations, and orbits of tonalities.
//!
//! An interpretation reads a scale of k tones as k chords of a fixed note
//! count m, built by skipping alternate scale steps: degree i collects the
//! scale tones at positions i, i+2, ..., i+2(m-1), positions taken mod k.
//! Transposing the whole picture by a gives a tonality; the set of all
//! distinct transposed copies is the orbit the cadence and modulation
//! machinery works in.

use crate::error::Error;
use crate::pitch::{AffineSymmetry, Modulus, PitchClass, PitchClassSet};

/// A nonempty set of tones, indexable in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scale {
    tones: PitchClassSet,
    ascending: Vec<u8>,
}

impl Scale {
    pub fn new(tones: PitchClassSet) -> Result<Self, Error> {
        if tones.is_empty() {
            return Err(Error::EmptyScale);
        }
        let ascending = tones.residues().collect();
        Ok(Scale { tones, ascending })
    }

    pub fn from_residues<I>(modulus: Modulus, residues: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = i64>,
    {
        Scale::new(PitchClassSet::from_residues(modulus, residues))
    }

    pub fn tones(&self) -> PitchClassSet {
        self.tones
    }

    pub fn modulus(&self) -> Modulus {
        self.tones.modulus()
    }

    /// Number of tones, written k throughout.
    pub fn len(&self) -> usize {
        self.ascending.len()
    }

    pub fn is_empty(&self) -> bool {
        false // ruled out at construction
    }

    /// The i-th tone in ascending order, i < k.
    pub fn tone(&self, index: usize) -> PitchClass {
        PitchClass::new(self.modulus(), self.ascending[index] as i64)
    }
}

/// A scale read as stacked-third chords of a fixed width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpretation {
    scale: Scale,
    width: usize,
    degrees: Vec<PitchClassSet>,
}

impl Interpretation {
    pub fn new(scale: Scale, width: usize) -> Result<Self, Error> {
        if width == 0 {
            return Err(Error::ZeroWidth);
        }
        let k = scale.len();
        let degrees = (0..k)
            .map(|i| {
                // Position collisions for small k collapse; a degree may
                // then hold fewer than `width` tones.
                PitchClassSet::from_residues(
                    scale.modulus(),
                    (0..width).map(|j| scale.tone((i + 2 * j) % k).value() as i64),
                )
            })
            .collect();
        Ok(Interpretation {
            scale,
            width,
            degrees,
        })
    }

    pub fn scale(&self) -> &Scale {
        &self.scale
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn modulus(&self) -> Modulus {
        self.scale.modulus()
    }

    pub fn degree_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[PitchClassSet] {
        &self.degrees
    }

    pub fn degree(&self, index: usize) -> &PitchClassSet {
        &self.degrees[index]
    }

    /// All distinct transposed copies, ascending by the first transposition
    /// that produces each scale set. Symmetric scales fold: the whole-tone
    /// hexachord yields two members, the chromatic scale one.
    pub fn orbit(&self) -> TonalityOrbit {
        let n = self.modulus().get();
        let mut members: Vec<Tonality> = Vec::new();
        for a in 0..n {
            let shift = AffineSymmetry::transposition(self.modulus(), a as i64);
            let scale_image = shift.apply_set(&self.scale.tones()).expect("same modulus");
            if members.iter().any(|t| t.scale() == scale_image) {
                continue;
            }
            // Degree labels travel with the transposition instead of being
            // re-derived from the transposed scale's own ascending order.
            let degrees = self
                .degrees
                .iter()
                .map(|d| shift.apply_set(d).expect("same modulus"))
                .collect();
            members.push(Tonality {
                transposition: a,
                scale: scale_image,
                degrees,
            });
        }
        TonalityOrbit {
            width: self.width,
            members,
        }
    }
}

/// One transposed copy of an interpretation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tonality {
    transposition: u8,
    scale: PitchClassSet,
    degrees: Vec<PitchClassSet>,
}

impl Tonality {
    pub fn transposition(&self) -> u8 {
        self.transposition
    }

    pub fn scale(&self) -> PitchClassSet {
        self.scale
    }

    pub fn modulus(&self) -> Modulus {
        self.scale.modulus()
    }

    pub fn degree_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[PitchClassSet] {
        &self.degrees
    }

    pub fn degree(&self, index: usize) -> &PitchClassSet {
        &self.degrees[index]
    }

    /// Whether some degree equals the given chord as a set.
    pub fn has_chord(&self, chord: &PitchClassSet) -> bool {
        self.degrees.iter().any(|d| d == chord)
    }
}

/// The distinct transpositions of one interpretation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TonalityOrbit {
    width: usize,
    members: Vec<Tonality>,
}

impl TonalityOrbit {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn members(&self) -> &[Tonality] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // orbits always contain the representative
    }

    /// The member at transposition zero.
    pub fn representative(&self) -> &Tonality {
        &self.members[0]
    }

    pub fn modulus(&self) -> Modulus {
        self.representative().modulus()
    }

    pub fn degree_count(&self) -> usize {
        self.representative().degree_count()
    }

    pub fn member_with_scale(&self, scale: &PitchClassSet) -> Option<&Tonality> {
        self.members.iter().find(|t| t.scale() == *scale)
    }

    /// The member whose scale is the representative's scale moved up by
    /// `distance`; always present because the orbit holds every transposed
    /// copy.
    pub fn member_at_distance(&self, distance: i64) -> &Tonality {
        let target = self.representative().scale().transposed(distance);
        self.member_with_scale(&target)
            .expect("orbit contains every transposed scale")
    }

    /// Transpositions of the members having `chord` among their degrees,
    /// ascending.
    pub fn tonalities_containing(&self, chord: &PitchClassSet) -> Vec<u8> {
        self.members
            .iter()
            .filter(|t| t.has_chord(chord))
            .map(|t| t.transposition())
            .collect()
    }
}
