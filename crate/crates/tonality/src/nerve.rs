//! The chord-cover nerve of an interpretation.
//!
//! Vertices are degree indices; a set of vertices spans a simplex exactly
//! when the corresponding chords share at least one tone. The complex is
//! stored by its maximal faces and the closure is enumerated on demand,
//! which stays cheap because the vertex count is capped.

use crate::degree::DegreeSet;
use crate::error::Error;
use crate::scale::Interpretation;

/// Degree counts above this make the closure enumeration unreasonable.
pub const MAX_NERVE_DEGREES: usize = 16;

/// A finite simplicial complex on degree-index vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    maximal_faces: Vec<DegreeSet>,
}

impl SimplicialComplex {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// The inclusion-maximal faces, lexicographically ordered.
    pub fn maximal_faces(&self) -> &[DegreeSet] {
        &self.maximal_faces
    }

    /// Whether a nonempty vertex set spans a simplex.
    pub fn is_face(&self, candidate: DegreeSet) -> bool {
        !candidate.is_empty() && self.maximal_faces.iter().any(|m| candidate.is_subset(*m))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.is_face(DegreeSet::from_indices([a, b]))
    }

    /// Checks a closed walk: consecutive vertices, including the wrap from
    /// last back to first, must be distinct and joined by edges. Walks
    /// shorter than three vertices never count.
    pub fn is_cycle(&self, vertices: &[usize]) -> bool {
        if vertices.len() < 3 {
            return false;
        }
        (0..vertices.len()).all(|i| {
            let a = vertices[i];
            let b = vertices[(i + 1) % vertices.len()];
            a < self.vertex_count && b < self.vertex_count && self.has_edge(a, b)
        })
    }

    /// The downward closure, every face of every dimension, in ascending
    /// lexicographic order.
    pub fn faces(&self) -> Vec<DegreeSet> {
        let mut seen = std::collections::BTreeSet::new();
        for maximal in &self.maximal_faces {
            let vertices: Vec<usize> = maximal.indices().collect();
            let d = vertices.len();
            for selector in 1u32..1 << d {
                seen.insert(DegreeSet::from_indices(
                    (0..d).filter(|j| selector & (1 << j) != 0).map(|j| vertices[j]),
                ));
            }
        }
        seen.into_iter().collect()
    }

    /// Face counts by dimension; `counts()[d]` is the number of d-faces.
    pub fn f_vector(&self) -> FVector {
        let top = self
            .maximal_faces
            .iter()
            .map(|m| m.len())
            .max()
            .unwrap_or(0);
        let mut counts = vec![0usize; top];
        for face in self.faces() {
            counts[face.len() - 1] += 1;
        }
        FVector { counts }
    }

    /// Whether every vertex pair is joined by an edge.
    pub fn skeleton_is_complete(&self) -> bool {
        (0..self.vertex_count)
            .all(|a| (a + 1..self.vertex_count).all(|b| self.has_edge(a, b)))
    }
}

/// Face counts by dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<usize>,
}

impl FVector {
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, dimension: usize) -> usize {
        self.counts.get(dimension).copied().unwrap_or(0)
    }

    /// Alternating sum of the face counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

/// Headline numbers of a complex in one bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexStats {
    pub f_vector: FVector,
    pub euler_characteristic: i64,
    pub skeleton_complete: bool,
    pub maximal_faces: Vec<DegreeSet>,
}

pub fn complex_stats(complex: &SimplicialComplex) -> ComplexStats {
    let f_vector = complex.f_vector();
    let euler_characteristic = f_vector.euler_characteristic();
    ComplexStats {
        f_vector,
        euler_characteristic,
        skeleton_complete: complex.skeleton_is_complete(),
        maximal_faces: complex.maximal_faces().to_vec(),
    }
}

/// Builds the nerve of an interpretation.
///
/// Every face arises from a witness tone: the degrees through one tone of
/// the scale always intersect, and any intersecting family shares such a
/// tone. The maximal faces are therefore the maximal per-tone degree sets.
pub fn compute_nerve(interpretation: &Interpretation) -> Result<SimplicialComplex, Error> {
    let k = interpretation.degree_count();
    if k > MAX_NERVE_DEGREES {
        return Err(Error::CapacityExceeded {
            count: k,
            max: MAX_NERVE_DEGREES,
        });
    }

    let mut witness_faces: Vec<DegreeSet> = Vec::new();
    for tone in interpretation.scale().tones().pitch_classes() {
        let face = DegreeSet::from_indices(
            (0..k).filter(|&i| interpretation.degree(i).contains(tone)),
        );
        if !face.is_empty() && !witness_faces.contains(&face) {
            witness_faces.push(face);
        }
    }
    let mut maximal_faces: Vec<DegreeSet> = witness_faces
        .iter()
        .copied()
        .filter(|f| {
            !witness_faces
                .iter()
                .any(|other| *f != *other && f.is_subset(*other))
        })
        .collect();
    maximal_faces.sort();
    Ok(SimplicialComplex {
        vertex_count: k,
        maximal_faces,
    })
}
