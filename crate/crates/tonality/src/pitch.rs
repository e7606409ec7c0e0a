//! Residue arithmetic over a cyclic tone space and the affine symmetries
//! acting on it.
//!
//! Everything downstream works with three building blocks defined here:
//! pitch classes modulo `n`, sets of pitch classes stored as bitmasks, and
//! the maps `x -> v*x + a`. The default symmetry pool restricts the
//! multiplier `v` to `1` and `n - 1` (transpositions and inversions); other
//! units of the ring are accepted by the explicit constructors so that the
//! rigidity test can optionally be widened.

use std::fmt;

use crate::error::Error;

/// Size of the tone space, restricted to `3..=64` so that sets fit in a
/// single `u64` mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u8);

impl Modulus {
    pub const MIN: u8 = 3;
    pub const MAX: u8 = 64;

    pub fn new(n: i64) -> Result<Self, Error> {
        if n < Self::MIN as i64 || n > Self::MAX as i64 {
            return Err(Error::ModulusOutOfRange(n));
        }
        Ok(Modulus(n as u8))
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// Canonical residue of an arbitrary integer.
    pub fn reduce(self, value: i64) -> u8 {
        let n = self.0 as i64;
        (((value % n) + n) % n) as u8
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A residue class modulo a fixed modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PitchClass {
    value: u8,
    modulus: Modulus,
}

impl PitchClass {
    pub fn new(modulus: Modulus, value: i64) -> Self {
        PitchClass {
            value: modulus.reduce(value),
            modulus,
        }
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }
}

impl fmt::Display for PitchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A set of pitch classes sharing one modulus.
///
/// Membership, union and intersection are single mask operations. Iteration
/// is always in ascending residue order, which keeps every rendering of a
/// set deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PitchClassSet {
    bits: u64,
    modulus: Modulus,
}

impl PitchClassSet {
    pub fn empty(modulus: Modulus) -> Self {
        PitchClassSet { bits: 0, modulus }
    }

    /// The full tone space.
    pub fn full(modulus: Modulus) -> Self {
        let n = modulus.get() as u32;
        let bits = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        PitchClassSet { bits, modulus }
    }

    /// Builds a set from raw integers, each reduced mod `n`. Duplicates
    /// collapse.
    pub fn from_residues<I>(modulus: Modulus, residues: I) -> Self
    where
        I: IntoIterator<Item = i64>,
    {
        let mut bits = 0u64;
        for r in residues {
            bits |= 1u64 << modulus.reduce(r);
        }
        PitchClassSet { bits, modulus }
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, pc: PitchClass) -> bool {
        assert_eq!(self.modulus, pc.modulus, "mixed moduli in set membership");
        self.bits & (1u64 << pc.value) != 0
    }

    pub fn contains_residue(self, residue: u8) -> bool {
        debug_assert!(residue < self.modulus.get());
        self.bits & (1u64 << residue) != 0
    }

    /// Ascending residues.
    pub fn residues(self) -> impl Iterator<Item = u8> {
        let n = self.modulus.get();
        let bits = self.bits;
        (0..n).filter(move |r| bits & (1u64 << r) != 0)
    }

    pub fn pitch_classes(self) -> impl Iterator<Item = PitchClass> {
        let modulus = self.modulus;
        self.residues().map(move |r| PitchClass::new(modulus, r as i64))
    }

    pub fn union(self, other: Self) -> Self {
        assert_eq!(self.modulus, other.modulus, "mixed moduli in union");
        PitchClassSet {
            bits: self.bits | other.bits,
            modulus: self.modulus,
        }
    }

    pub fn intersection(self, other: Self) -> Self {
        assert_eq!(self.modulus, other.modulus, "mixed moduli in intersection");
        PitchClassSet {
            bits: self.bits & other.bits,
            modulus: self.modulus,
        }
    }

    pub fn difference(self, other: Self) -> Self {
        assert_eq!(self.modulus, other.modulus, "mixed moduli in difference");
        PitchClassSet {
            bits: self.bits & !other.bits,
            modulus: self.modulus,
        }
    }

    pub fn is_subset(self, other: Self) -> bool {
        assert_eq!(self.modulus, other.modulus, "mixed moduli in subset test");
        self.bits & !other.bits == 0
    }

    /// Image under the transposition by `a`.
    pub fn transposed(self, a: i64) -> Self {
        AffineSymmetry::transposition(self.modulus, a)
            .apply_set(&self)
            .expect("same modulus")
    }

    /// Cyclic gaps between consecutive members in ascending order, closing
    /// around the octave. The gaps sum to `n`; a singleton yields `[n]`.
    pub fn interval_cycle(self) -> Vec<u8> {
        let members: Vec<u8> = self.residues().collect();
        let n = self.modulus.get();
        match members.len() {
            0 => Vec::new(),
            1 => vec![n],
            k => (0..k)
                .map(|i| {
                    let here = members[i];
                    let next = members[(i + 1) % k];
                    self.modulus.reduce(next as i64 - here as i64 + n as i64)
                })
                .map(|g| if g == 0 { n } else { g })
                .collect(),
        }
    }

    /// A set is rigid when no symmetry of the tone space other than the
    /// identity fixes it.
    pub fn is_rigid(self) -> bool {
        SymmetryGroup::special_affine(self.modulus)
            .stabilizer(&self)
            .expect("same modulus")
            .is_trivial()
    }
}

impl fmt::Display for PitchClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "\u{2205}");
        }
        let mut first = true;
        for r in self.residues() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Modular inverse of a unit; caller guarantees `gcd(value, n) == 1`.
fn mod_inverse(value: u8, n: u8) -> u8 {
    let (n, value) = (n as i64, value as i64);
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (n, value);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "not a unit");
    (((t % n) + n) % n) as u8
}

/// The map `x -> multiplier * x + shift` on the tone space.
///
/// `transposition` and `inversion` cover the default pool, where the
/// multiplier is `1` or `n - 1`. `new` additionally accepts any unit of the
/// ring. Rendered as `T<shift>` when the multiplier is `1`, otherwise as
/// `T<shift>.<multiplier>` with the multiplier as a residue, so the
/// inversion through `5` over twelve tones prints `T5.11`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineSymmetry {
    multiplier: u8,
    shift: u8,
    modulus: Modulus,
}

impl AffineSymmetry {
    pub fn identity(modulus: Modulus) -> Self {
        AffineSymmetry {
            multiplier: 1,
            shift: 0,
            modulus,
        }
    }

    pub fn transposition(modulus: Modulus, shift: i64) -> Self {
        AffineSymmetry {
            multiplier: 1,
            shift: modulus.reduce(shift),
            modulus,
        }
    }

    /// The map `x -> shift - x`.
    pub fn inversion(modulus: Modulus, shift: i64) -> Self {
        AffineSymmetry {
            multiplier: modulus.get() - 1,
            shift: modulus.reduce(shift),
            modulus,
        }
    }

    /// General affine map; the multiplier must be a unit mod `n`.
    pub fn new(modulus: Modulus, multiplier: i64, shift: i64) -> Result<Self, Error> {
        let multiplier = modulus.reduce(multiplier);
        if gcd(multiplier as u64, modulus.get() as u64) != 1 {
            return Err(Error::NotAUnit {
                multiplier,
                modulus: modulus.get(),
            });
        }
        Ok(AffineSymmetry {
            multiplier,
            shift: modulus.reduce(shift),
            modulus,
        })
    }

    /// Parses the textual forms `T5`, `T5.11` and `T5.-1`; the multiplier,
    /// when present, is reduced mod `n` and must be a unit.
    pub fn parse(modulus: Modulus, text: &str) -> Result<Self, Error> {
        let parse_err = || Error::Parse {
            what: "symmetry",
            input: text.to_string(),
        };
        let rest = text.strip_prefix('T').ok_or_else(parse_err)?;
        let (shift_text, mult_text) = match rest.split_once('.') {
            Some((s, m)) => (s, Some(m)),
            None => (rest, None),
        };
        let shift: i64 = shift_text.parse().map_err(|_| parse_err())?;
        let multiplier: i64 = match mult_text {
            None => 1,
            Some(m) => m.parse().map_err(|_| parse_err())?,
        };
        AffineSymmetry::new(modulus, multiplier, shift)
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn multiplier(self) -> u8 {
        self.multiplier
    }

    pub fn shift(self) -> u8 {
        self.shift
    }

    pub fn is_identity(self) -> bool {
        self.multiplier == 1 && self.shift == 0
    }

    pub fn is_transposition(self) -> bool {
        self.multiplier == 1
    }

    /// True when the multiplier is `1` or `n - 1`.
    pub fn is_special(self) -> bool {
        self.multiplier == 1 || self.multiplier == self.modulus.get() - 1
    }

    pub fn apply(self, pc: PitchClass) -> PitchClass {
        assert_eq!(self.modulus, pc.modulus, "mixed moduli in application");
        PitchClass::new(
            self.modulus,
            self.multiplier as i64 * pc.value as i64 + self.shift as i64,
        )
    }

    /// Pointwise image of a set; cardinality is preserved because the map
    /// is a bijection.
    pub fn apply_set(self, set: &PitchClassSet) -> Result<PitchClassSet, Error> {
        if self.modulus != set.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: set.modulus.get(),
            });
        }
        let mut bits = 0u64;
        for r in set.residues() {
            bits |= 1u64 << self
                .modulus
                .reduce(self.multiplier as i64 * r as i64 + self.shift as i64);
        }
        Ok(PitchClassSet {
            bits,
            modulus: self.modulus,
        })
    }

    /// Function composition `self . other`: `other` is applied first.
    pub fn compose(self, other: Self) -> Result<Self, Error> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            });
        }
        Ok(AffineSymmetry {
            multiplier: self
                .modulus
                .reduce(self.multiplier as i64 * other.multiplier as i64),
            shift: self
                .modulus
                .reduce(self.multiplier as i64 * other.shift as i64 + self.shift as i64),
            modulus: self.modulus,
        })
    }

    pub fn inverse(self) -> Self {
        let inv = mod_inverse(self.multiplier, self.modulus.get());
        AffineSymmetry {
            multiplier: inv,
            shift: self.modulus.reduce(-(inv as i64) * self.shift as i64),
            modulus: self.modulus,
        }
    }

    /// Ordering key used everywhere a pool of symmetries is listed:
    /// transpositions by ascending shift, then the other multipliers in
    /// ascending order, each by ascending shift.
    fn rank(self) -> (u8, u8) {
        (self.multiplier, self.shift)
    }
}

impl fmt::Display for AffineSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplier == 1 {
            write!(f, "T{}", self.shift)
        } else {
            write!(f, "T{}.{}", self.shift, self.multiplier)
        }
    }
}

/// A finite set of symmetries sharing one modulus, closed under
/// composition and inverse for the constructors provided here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryGroup {
    elements: Vec<AffineSymmetry>,
    modulus: Modulus,
}

impl SymmetryGroup {
    pub fn trivial(modulus: Modulus) -> Self {
        SymmetryGroup {
            elements: vec![AffineSymmetry::identity(modulus)],
            modulus,
        }
    }

    /// All `2n` maps `x -> v*x + a` with `v` in `{1, n-1}`, transpositions
    /// first.
    pub fn special_affine(modulus: Modulus) -> Self {
        let n = modulus.get() as i64;
        let mut elements = Vec::with_capacity(2 * n as usize);
        for a in 0..n {
            elements.push(AffineSymmetry::transposition(modulus, a));
        }
        for a in 0..n {
            elements.push(AffineSymmetry::inversion(modulus, a));
        }
        SymmetryGroup { elements, modulus }
    }

    /// Every map `x -> u*x + a` with `u` a unit of the ring; strictly
    /// larger than the special pool whenever `n` has units besides
    /// `1` and `n - 1`.
    pub fn full_affine(modulus: Modulus) -> Self {
        let n = modulus.get();
        let mut elements = Vec::new();
        for u in 1..n {
            if gcd(u as u64, n as u64) != 1 {
                continue;
            }
            for a in 0..n {
                elements.push(
                    AffineSymmetry::new(modulus, u as i64, a as i64).expect("unit checked"),
                );
            }
        }
        SymmetryGroup { elements, modulus }
    }

    /// Cyclic closure of a single symmetry: identity, `g`, `g*g`, ... until
    /// the powers repeat.
    pub fn generated_by(g: AffineSymmetry) -> Self {
        let modulus = g.modulus;
        let mut elements = vec![AffineSymmetry::identity(modulus)];
        let mut power = g;
        while !power.is_identity() {
            elements.push(power);
            power = power.compose(g).expect("same modulus");
        }
        SymmetryGroup { elements, modulus }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn elements(&self) -> &[AffineSymmetry] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_identity()
    }

    pub fn contains(&self, s: &AffineSymmetry) -> bool {
        self.elements.contains(s)
    }

    /// The subgroup of elements fixing `x` setwise, in the pool's order.
    pub fn stabilizer(&self, x: &PitchClassSet) -> Result<SymmetryGroup, Error> {
        if self.modulus != x.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: x.modulus.get(),
            });
        }
        let elements = self
            .elements
            .iter()
            .copied()
            .filter(|s| s.apply_set(x).expect("same modulus") == *x)
            .collect();
        Ok(SymmetryGroup {
            elements,
            modulus: self.modulus,
        })
    }

    /// First element other than the identity, if any; stable because the
    /// element order is fixed at construction.
    pub fn first_nontrivial(&self) -> Option<AffineSymmetry> {
        self.elements.iter().copied().find(|s| !s.is_identity())
    }

    /// Elements sorted by the canonical rank, for order-insensitive
    /// comparisons.
    pub fn sorted_elements(&self) -> Vec<AffineSymmetry> {
        let mut v = self.elements.clone();
        v.sort_by_key(|s| s.rank());
        v
    }
}

pub(crate) fn modulator_rank(s: &AffineSymmetry) -> (u8, u8) {
    s.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m12() -> Modulus {
        Modulus::new(12).unwrap()
    }

    fn major(m: Modulus) -> PitchClassSet {
        PitchClassSet::from_residues(m, [0, 2, 4, 5, 7, 9, 11])
    }

    #[test]
    fn modulus_bounds() {
        assert!(Modulus::new(2).is_err());
        assert!(Modulus::new(65).is_err());
        assert_eq!(Modulus::new(3).unwrap().get(), 3);
        assert_eq!(Modulus::new(64).unwrap().get(), 64);
    }

    #[test]
    fn reduction_is_canonical() {
        let m = m12();
        assert_eq!(m.reduce(-1), 11);
        assert_eq!(m.reduce(12), 0);
        assert_eq!(PitchClass::new(m, -25).value(), 11);
    }

    #[test]
    fn inversion_through_5_maps_major_to_its_reflection() {
        let m = m12();
        let image = AffineSymmetry::inversion(m, 5).apply_set(&major(m)).unwrap();
        assert_eq!(
            image,
            PitchClassSet::from_residues(m, [0, 1, 3, 5, 6, 8, 10])
        );
        assert_eq!(image.len(), 7);
    }

    #[test]
    fn identity_fixes_everything() {
        let m = m12();
        let id = AffineSymmetry::identity(m);
        assert_eq!(id.apply_set(&major(m)).unwrap(), major(m));
    }

    #[test]
    fn composition_follows_right_to_left_order() {
        let m = m12();
        let t2 = AffineSymmetry::transposition(m, 2);
        let inv0 = AffineSymmetry::inversion(m, 0);
        // x -> -x first, then +2, which is the inversion through 2
        assert_eq!(t2.compose(inv0).unwrap(), AffineSymmetry::inversion(m, 2));
        let t3 = AffineSymmetry::transposition(m, 3);
        assert_eq!(t3.compose(t3).unwrap(), AffineSymmetry::transposition(m, 6));
    }

    #[test]
    fn inversions_are_involutions() {
        let m = m12();
        for a in 0..12 {
            let s = AffineSymmetry::inversion(m, a);
            assert!(s.compose(s).unwrap().is_identity(), "T{a}.11 twice");
        }
    }

    #[test]
    fn inverse_composes_to_identity_for_every_special_element() {
        for n in [3i64, 4, 5, 12, 20, 64] {
            let m = Modulus::new(n).unwrap();
            for s in SymmetryGroup::special_affine(m).elements() {
                assert!(s.compose(s.inverse()).unwrap().is_identity());
                assert!(s.inverse().compose(*s).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn generated_group_of_a_transposition_walks_the_subgroup() {
        let m = m12();
        let g = SymmetryGroup::generated_by(AffineSymmetry::transposition(m, 3));
        let shifts: Vec<u8> = g.elements().iter().map(|s| s.shift()).collect();
        assert_eq!(shifts, vec![0, 3, 6, 9]);
        assert!(g.elements().iter().all(|s| s.is_transposition()));

        let whole = SymmetryGroup::generated_by(AffineSymmetry::transposition(m, 1));
        assert_eq!(whole.len(), 12);
    }

    #[test]
    fn generated_group_of_an_inversion_is_a_pair() {
        let m = m12();
        let g = SymmetryGroup::generated_by(AffineSymmetry::inversion(m, 5));
        assert_eq!(g.len(), 2);
        assert!(g.elements()[0].is_identity());
        assert_eq!(g.elements()[1], AffineSymmetry::inversion(m, 5));
    }

    #[test]
    fn special_pool_has_2n_elements_and_divides_generated_subgroups() {
        for n in [3i64, 7, 12, 20] {
            let m = Modulus::new(n).unwrap();
            let pool = SymmetryGroup::special_affine(m);
            assert_eq!(pool.len(), 2 * n as usize);
            for g in pool.elements() {
                let sub = SymmetryGroup::generated_by(*g);
                assert_eq!((2 * n as usize) % sub.len(), 0, "Lagrange for {g}");
            }
        }
    }

    #[test]
    fn stabilizer_of_the_major_scale_is_identity_plus_one_inversion() {
        let m = m12();
        let stab = SymmetryGroup::special_affine(m)
            .stabilizer(&major(m))
            .unwrap();
        assert_eq!(
            stab.elements(),
            &[
                AffineSymmetry::transposition(m, 0),
                AffineSymmetry::inversion(m, 4)
            ]
        );
    }

    #[test]
    fn stabilizer_of_the_full_space_is_the_whole_pool() {
        let m = m12();
        let pool = SymmetryGroup::special_affine(m);
        let stab = pool.stabilizer(&PitchClassSet::full(m)).unwrap();
        assert_eq!(stab.len(), 24);
        assert!(!PitchClassSet::full(m).is_rigid());
        assert!(!PitchClassSet::empty(m).is_rigid());
    }

    // Rigidity of {1,2,4,7,9,11}, checked first against a plain integer
    // reimplementation of the action so the expected value does not depend
    // on the code under test.
    #[test]
    fn six_tone_trace_of_the_second_step_is_rigid() {
        let members = [1i64, 2, 4, 7, 9, 11];
        let mut fixing: Vec<(i64, i64)> = Vec::new();
        for v in [1i64, -1] {
            for a in 0..12 {
                let image: std::collections::BTreeSet<i64> =
                    members.iter().map(|x| (v * x + a).rem_euclid(12)).collect();
                if image == members.iter().copied().collect() {
                    fixing.push((v, a));
                }
            }
        }
        assert_eq!(fixing, vec![(1, 0)]);

        let m = m12();
        let set = PitchClassSet::from_residues(m, members);
        assert!(set.is_rigid());
        let stab = SymmetryGroup::special_affine(m).stabilizer(&set).unwrap();
        assert!(stab.is_trivial());
    }

    #[test]
    fn parsing_accepts_the_residue_and_sign_forms() {
        let m = m12();
        assert_eq!(
            AffineSymmetry::parse(m, "T6").unwrap(),
            AffineSymmetry::transposition(m, 6)
        );
        assert_eq!(
            AffineSymmetry::parse(m, "T6.11").unwrap(),
            AffineSymmetry::inversion(m, 6)
        );
        assert_eq!(
            AffineSymmetry::parse(m, "T6.-1").unwrap(),
            AffineSymmetry::inversion(m, 6)
        );
        assert!(AffineSymmetry::parse(m, "T6.4").is_err());
        assert!(AffineSymmetry::parse(m, "6.11").is_err());
        assert!(AffineSymmetry::parse(m, "T").is_err());
    }

    #[test]
    fn display_uses_residue_notation() {
        let m = m12();
        assert_eq!(AffineSymmetry::transposition(m, 5).to_string(), "T5");
        assert_eq!(AffineSymmetry::inversion(m, 5).to_string(), "T5.11");
        let m20 = Modulus::new(20).unwrap();
        assert_eq!(AffineSymmetry::inversion(m20, 3).to_string(), "T3.19");
    }

    #[test]
    fn parse_display_round_trip() {
        let m = m12();
        for s in SymmetryGroup::special_affine(m).elements() {
            assert_eq!(AffineSymmetry::parse(m, &s.to_string()).unwrap(), *s);
        }
    }

    #[test]
    fn full_affine_pool_holds_all_units() {
        let m = m12();
        let pool = SymmetryGroup::full_affine(m);
        assert_eq!(pool.len(), 48); // units 1, 5, 7, 11
        let mults: std::collections::BTreeSet<u8> =
            pool.elements().iter().map(|s| s.multiplier()).collect();
        assert_eq!(mults.into_iter().collect::<Vec<_>>(), vec![1, 5, 7, 11]);
        for s in pool.elements() {
            assert!(s.compose(s.inverse()).unwrap().is_identity());
        }
    }

    #[test]
    fn mismatched_moduli_are_rejected() {
        let m12 = m12();
        let m20 = Modulus::new(20).unwrap();
        let s = AffineSymmetry::transposition(m12, 1);
        let x = PitchClassSet::from_residues(m20, [0, 1]);
        assert!(matches!(
            s.apply_set(&x),
            Err(Error::ModulusMismatch { left: 12, right: 20 })
        ));
        assert!(s
            .compose(AffineSymmetry::transposition(m20, 1))
            .is_err());
        assert!(SymmetryGroup::special_affine(m12).stabilizer(&x).is_err());
    }

    #[test]
    fn interval_cycle_wraps_and_sums_to_n() {
        let m = m12();
        assert_eq!(major(m).interval_cycle(), vec![2, 2, 1, 2, 2, 2, 1]);
        let octatonic = PitchClassSet::from_residues(m, [0, 2, 3, 5, 6, 8, 9, 11]);
        assert_eq!(octatonic.interval_cycle(), vec![2, 1, 2, 1, 2, 1, 2, 1]);
        let single = PitchClassSet::from_residues(m, [4]);
        assert_eq!(single.interval_cycle(), vec![12]);
        assert_eq!(PitchClassSet::empty(m).interval_cycle(), Vec::<u8>::new());
        for set in [major(m), octatonic] {
            let total: u32 = set.interval_cycle().iter().map(|&g| g as u32).sum();
            assert_eq!(total, 12);
        }
    }
}
