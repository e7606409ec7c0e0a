//! Computational harmony over cyclic tone spaces.
//!
//! The crate models a tone space of n pitch classes (3 to 64) acted on by
//! the maps `x -> v*x + a` with `v = 1` or `v = n - 1`, reads scales as
//! stacked-third chord interpretations, and builds three things on top:
//!
//! * cadential degree sets, the chord groups that pin down one tonality
//!   among all transposed copies of a scale ([`cadence`]);
//! * modulation quanta, the tone material a scale-to-scale symmetry forces
//!   between two tonalities, together with the catalog of all quantized
//!   modulations of an orbit ([`modulation`]);
//! * the chord-cover nerve, the simplicial complex recording which degree
//!   chords intersect ([`nerve`]).
//!
//! Everything is exact integer combinatorics; there are no tolerances
//! anywhere. Sets are bitmask backed, so membership and the symmetry
//! action stay cheap even in the widest supported tone space.

pub mod cadence;
pub mod degree;
pub mod error;
pub mod modulation;
pub mod nerve;
pub mod pitch;
pub mod scale;
pub mod wire;

pub use cadence::{is_cadential, minimal_cadential_sets, CadentialCatalog, MAX_SEARCH_DEGREES};
pub use degree::{degree_label, parse_degree_label, parse_degree_set, DegreeSet};
pub use error::Error;
pub use modulation::{
    compute_quantum, compute_quantum_with_rigidity, enumerate_modulators, modulation_catalog,
    Annotation, CatalogOptions, CatalogRow, Modulation, QuantumOutcome, QuantumResult,
};
pub use nerve::{complex_stats, compute_nerve, ComplexStats, FVector, SimplicialComplex};
pub use pitch::{AffineSymmetry, Modulus, PitchClass, PitchClassSet, SymmetryGroup};
pub use scale::{Interpretation, Scale, Tonality, TonalityOrbit};
