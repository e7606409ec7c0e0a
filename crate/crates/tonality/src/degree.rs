//! Sets of scale-degree indices and their Roman numeral labels.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

/// A set of degree indices of one interpretation, stored as a bitmask.
///
/// Indices are zero based: index 0 is degree I. Ordering is lexicographic
/// on the ascending index sequence, which is the order every listing in
/// this crate uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DegreeSet {
    mask: u64,
}

impl DegreeSet {
    pub const fn empty() -> Self {
        DegreeSet { mask: 0 }
    }

    pub fn single(index: usize) -> Self {
        assert!(index < 64, "degree index out of mask range");
        DegreeSet { mask: 1u64 << index }
    }

    pub fn from_indices<I>(indices: I) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        let mut mask = 0u64;
        for i in indices {
            assert!(i < 64, "degree index out of mask range");
            mask |= 1u64 << i;
        }
        DegreeSet { mask }
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < 64, "degree index out of mask range");
        self.mask |= 1u64 << index;
    }

    pub fn contains(self, index: usize) -> bool {
        index < 64 && self.mask & (1u64 << index) != 0
    }

    pub fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.mask;
        (0..64usize).filter(move |i| mask & (1u64 << i) != 0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn without(self, index: usize) -> Self {
        DegreeSet {
            mask: self.mask & !(1u64 << index),
        }
    }

    pub fn max_index(self) -> Option<usize> {
        if self.mask == 0 {
            None
        } else {
            Some(63 - self.mask.leading_zeros() as usize)
        }
    }

    /// Comma separated numeral labels, or the empty-set sign.
    pub fn labels(self, width: usize) -> String {
        if self.is_empty() {
            return "\u{2205}".to_string();
        }
        self.indices()
            .map(|i| degree_label(i, width))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Ord for DegreeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.indices();
        let mut b = other.indices();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl PartialOrd for DegreeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

const ROMAN_PAIRS: [(usize, &str); 7] = [
    (50, "L"),
    (40, "XL"),
    (10, "X"),
    (9, "IX"),
    (5, "V"),
    (4, "IV"),
    (1, "I"),
];

/// Roman numeral for a one-based ordinal up to 64.
pub fn roman_numeral(ordinal: usize) -> String {
    assert!((1..=64).contains(&ordinal), "ordinal out of numeral range");
    let mut rest = ordinal;
    let mut out = String::new();
    for (value, token) in ROMAN_PAIRS {
        while rest >= value {
            out.push_str(token);
            rest -= value;
        }
    }
    out
}

fn parse_roman(text: &str) -> Option<usize> {
    if text.is_empty() {
        return None;
    }
    let mut rest = text;
    let mut value = 0usize;
    for (v, token) in ROMAN_PAIRS {
        while let Some(stripped) = rest.strip_prefix(token) {
            value += v;
            rest = stripped;
        }
    }
    // Re-rendering catches malformed spellings such as IIII or VX.
    if rest.is_empty() && (1..=64).contains(&value) && roman_numeral(value) == text {
        Some(value)
    } else {
        None
    }
}

/// Label of a zero-based degree index: the numeral of `index + 1`, with a
/// `7` suffix for four-note (seventh chord) interpretations.
pub fn degree_label(index: usize, width: usize) -> String {
    let numeral = roman_numeral(index + 1);
    if width == 4 {
        format!("{numeral}7")
    } else {
        numeral
    }
}

/// Inverse of `degree_label`; a trailing `7` is accepted regardless of
/// width so that triadic and tetradic spellings both parse.
pub fn parse_degree_label(text: &str) -> Result<usize, Error> {
    let trimmed = text.trim();
    let body = trimmed.strip_suffix('7').unwrap_or(trimmed);
    parse_roman(body).map(|v| v - 1).ok_or(Error::Parse {
        what: "degree label",
        input: text.to_string(),
    })
}

/// Parses a comma separated group such as `II,V` or `V7`.
pub fn parse_degree_set(text: &str) -> Result<DegreeSet, Error> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "\u{2205}" {
        return Ok(DegreeSet::empty());
    }
    let mut set = DegreeSet::empty();
    for part in trimmed.split(',') {
        set.insert(parse_degree_label(part)?);
    }
    Ok(set)
}

impl fmt::Display for DegreeSet {
    /// Displays raw indices; use `labels` for numeral output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "\u{2205}");
        }
        let mut first = true;
        for i in self.indices() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        Ok(())
    }
}
