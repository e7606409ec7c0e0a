//! Modulation quanta: the tone material a symmetry forces between two
//! tonalities, and the catalog of all quantized modulations of an orbit.
//!
//! Given a modulator g carrying the source scale onto the target scale and
//! a cadential degree set of the target, the quantum is the union of the
//! cadence chords swept out by the cyclic group of g. The modulation
//! counts as quantized when the quantum's footprint inside the target
//! scale is rigid, that is, fixed by no symmetry except the identity.
//! Target degrees lying entirely inside the quantum are the pivots.

use std::fmt;

use crate::cadence::minimal_cadential_sets;
use crate::degree::DegreeSet;
use crate::error::Error;
use crate::pitch::{modulator_rank, AffineSymmetry, PitchClassSet, SymmetryGroup};
use crate::scale::{Tonality, TonalityOrbit};

/// A candidate modulation: source and target tonalities, the modulator
/// carrying one scale onto the other, and the cadence anchoring the
/// target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modulation {
    source: Tonality,
    target: Tonality,
    modulator: AffineSymmetry,
    cadence: DegreeSet,
}

impl Modulation {
    /// Validates that the scales live in one tone space, that the
    /// modulator maps the source scale exactly onto the target scale, and
    /// that the cadence indices name existing degrees.
    pub fn new(
        source: Tonality,
        target: Tonality,
        modulator: AffineSymmetry,
        cadence: DegreeSet,
    ) -> Result<Self, Error> {
        if source.modulus() != target.modulus() {
            return Err(Error::ModulusMismatch {
                left: source.modulus().get(),
                right: target.modulus().get(),
            });
        }
        let image = modulator.apply_set(&source.scale())?;
        if image != target.scale() {
            return Err(Error::NotAModulator {
                modulator: modulator.to_string(),
            });
        }
        if let Some(max) = cadence.max_index() {
            let count = target.degree_count();
            if max >= count {
                return Err(Error::DegreeOutOfRange { index: max, count });
            }
        }
        Ok(Modulation {
            source,
            target,
            modulator,
            cadence,
        })
    }

    pub fn source(&self) -> &Tonality {
        &self.source
    }

    pub fn target(&self) -> &Tonality {
        &self.target
    }

    pub fn modulator(&self) -> AffineSymmetry {
        self.modulator
    }

    pub fn cadence(&self) -> DegreeSet {
        self.cadence
    }

    /// Union of the target's cadence chords.
    fn cadence_union(&self) -> PitchClassSet {
        self.cadence
            .indices()
            .map(|i| *self.target.degree(i))
            .fold(PitchClassSet::empty(self.target.modulus()), |acc, d| {
                acc.union(d)
            })
    }
}

/// Result of a successful quantum computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumResult {
    /// Union of the cadence chords over the cyclic group of the modulator.
    pub quantum: PitchClassSet,
    /// The quantum cut down to the target scale.
    pub trace: PitchClassSet,
    /// Target degrees contained in the quantum.
    pub pivots: DegreeSet,
    /// Whether the pivot chords jointly cover the trace.
    pub covered: bool,
    /// Certificate that the trace passed the rigidity test.
    pub rigid: bool,
}

/// Outcome of the quantum computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuantumOutcome {
    Quantized(QuantumResult),
    /// The trace admitted a nontrivial symmetry; the first offender in
    /// canonical pool order is reported.
    NotQuantized {
        trace: PitchClassSet,
        offending: AffineSymmetry,
    },
}

impl QuantumOutcome {
    pub fn is_quantized(&self) -> bool {
        matches!(self, QuantumOutcome::Quantized(_))
    }

    pub fn quantized(&self) -> Option<&QuantumResult> {
        match self {
            QuantumOutcome::Quantized(r) => Some(r),
            QuantumOutcome::NotQuantized { .. } => None,
        }
    }
}

/// All symmetries of the default pool carrying the source scale onto the
/// target scale: transpositions first by ascending shift, then the
/// inversions. Empty when the scales are unrelated.
pub fn enumerate_modulators(source: &Tonality, target: &Tonality) -> Vec<AffineSymmetry> {
    assert_eq!(
        source.modulus(),
        target.modulus(),
        "modulators need one tone space"
    );
    let source_scale = source.scale();
    let target_scale = target.scale();
    SymmetryGroup::special_affine(source.modulus())
        .elements()
        .iter()
        .copied()
        .filter(|g| g.apply_set(&source_scale).expect("same modulus") == target_scale)
        .collect()
}

/// Runs the quantum computation with the default rigidity pool (all
/// transpositions and inversions).
pub fn compute_quantum(modulation: &Modulation) -> QuantumOutcome {
    let pool = SymmetryGroup::special_affine(modulation.target.modulus());
    compute_quantum_with_rigidity(modulation, &pool).expect("pool modulus matches")
}

/// Same computation with a caller-chosen rigidity pool, e.g. the full
/// affine pool for experiments with every unit multiplier.
pub fn compute_quantum_with_rigidity(
    modulation: &Modulation,
    rigidity_pool: &SymmetryGroup,
) -> Result<QuantumOutcome, Error> {
    if rigidity_pool.modulus() != modulation.target.modulus() {
        return Err(Error::ModulusMismatch {
            left: rigidity_pool.modulus().get(),
            right: modulation.target.modulus().get(),
        });
    }

    let cadence_union = modulation.cadence_union();
    let group = SymmetryGroup::generated_by(modulation.modulator);
    let mut quantum = PitchClassSet::empty(modulation.target.modulus());
    for h in group.elements() {
        quantum = quantum.union(h.apply_set(&cadence_union).expect("same modulus"));
    }

    let trace = quantum.intersection(modulation.target.scale());
    let stabilizer = rigidity_pool.stabilizer(&trace).expect("same modulus");
    if let Some(offending) = stabilizer.first_nontrivial() {
        return Ok(QuantumOutcome::NotQuantized { trace, offending });
    }

    let pivots = DegreeSet::from_indices(
        (0..modulation.target.degree_count())
            .filter(|&i| modulation.target.degree(i).is_subset(quantum)),
    );
    let pivot_union = pivots
        .indices()
        .map(|i| *modulation.target.degree(i))
        .fold(PitchClassSet::empty(modulation.target.modulus()), |acc, d| {
            acc.union(d)
        });

    Ok(QuantumOutcome::Quantized(QuantumResult {
        quantum,
        trace,
        pivots,
        covered: pivot_union == trace,
        rigid: true,
    }))
}

/// Structural labels attached to catalog rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Annotation {
    /// The quantum's interval cycle alternates half and whole steps.
    DiminishedScale,
    /// The modulation distance is half the tone space.
    TritoneSubstitution,
    /// Distance two with the lone dominant cadence; such steps chain.
    Chaining,
}

impl Annotation {
    pub fn as_str(self) -> &'static str {
        match self {
            Annotation::DiminishedScale => "diminished-scale",
            Annotation::TritoneSubstitution => "tritone-substitution",
            Annotation::Chaining => "chaining",
        }
    }
}

impl fmt::Display for Annotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One quantized modulation of the catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogRow {
    pub distance: u8,
    pub cadence: DegreeSet,
    pub quantum: PitchClassSet,
    pub modulator: AffineSymmetry,
    pub pivots: DegreeSet,
    pub covered: bool,
    pub annotations: Vec<Annotation>,
}

/// Knobs for the catalog sweep. Defaults: every minimal cadential set,
/// every distance except zero, uncovered rows kept, rigidity checked
/// against the default pool.
#[derive(Debug, Clone, Default)]
pub struct CatalogOptions {
    pub cadences: Option<Vec<DegreeSet>>,
    pub distances: Option<Vec<u8>>,
    pub require_cover: bool,
    pub widen_rigidity: bool,
}

fn is_alternating_step_cycle(set: &PitchClassSet) -> bool {
    let gaps = set.interval_cycle();
    if gaps.len() < 2 || gaps.len() % 2 != 0 {
        return false;
    }
    let (a, b) = (gaps[0], gaps[1]);
    if !matches!((a, b), (1, 2) | (2, 1)) {
        return false;
    }
    gaps.iter()
        .enumerate()
        .all(|(i, &g)| g == if i % 2 == 0 { a } else { b })
}

fn annotate(n: u8, distance: u8, cadence: DegreeSet, quantum: &PitchClassSet) -> Vec<Annotation> {
    let mut annotations = Vec::new();
    if is_alternating_step_cycle(quantum) {
        annotations.push(Annotation::DiminishedScale);
    }
    if n % 2 == 0 && distance == n / 2 {
        annotations.push(Annotation::TritoneSubstitution);
    }
    if distance == 2 && cadence == DegreeSet::single(4) {
        annotations.push(Annotation::Chaining);
    }
    annotations
}

/// Sweeps every (distance, modulator, cadence) combination of the orbit
/// and keeps the quantized ones, sorted by distance, then cadence, then
/// modulator. Capacity errors from the default cadence search propagate.
pub fn modulation_catalog(
    orbit: &TonalityOrbit,
    options: &CatalogOptions,
) -> Result<Vec<CatalogRow>, Error> {
    let n = orbit.modulus().get();
    let cadences: Vec<DegreeSet> = match &options.cadences {
        Some(pool) => {
            let count = orbit.degree_count();
            for j in pool {
                if let Some(max) = j.max_index() {
                    if max >= count {
                        return Err(Error::DegreeOutOfRange { index: max, count });
                    }
                }
            }
            pool.clone()
        }
        None => minimal_cadential_sets(orbit)?.minimal_sets().to_vec(),
    };
    let distances: Vec<u8> = match &options.distances {
        Some(ds) => ds.clone(),
        None => (1..n).collect(),
    };
    let rigidity_pool = if options.widen_rigidity {
        SymmetryGroup::full_affine(orbit.modulus())
    } else {
        SymmetryGroup::special_affine(orbit.modulus())
    };

    let source = orbit.representative();
    let mut rows = Vec::new();
    for &distance in &distances {
        let target = orbit.member_at_distance(distance as i64);
        for modulator in enumerate_modulators(source, target) {
            for &cadence in &cadences {
                let modulation =
                    Modulation::new(source.clone(), target.clone(), modulator, cadence)?;
                let outcome = compute_quantum_with_rigidity(&modulation, &rigidity_pool)?;
                if let QuantumOutcome::Quantized(result) = outcome {
                    if options.require_cover && !result.covered {
                        continue;
                    }
                    rows.push(CatalogRow {
                        distance,
                        cadence,
                        quantum: result.quantum,
                        modulator,
                        pivots: result.pivots,
                        covered: result.covered,
                        annotations: annotate(n, distance, cadence, &result.quantum),
                    });
                }
            }
        }
    }
    rows.sort_by_key(|row| (row.distance, row.cadence, modulator_rank(&row.modulator)));
    Ok(rows)
}
