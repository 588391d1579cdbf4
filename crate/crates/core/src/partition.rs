//! Partitions, hook lengths and beta-sets.
//!
//! A partition is stored as its nonincreasing list of parts. Its beta-set is
//! the set of first-column hook lengths, kept sorted in descending order so
//! that the i-th element corresponds to the i-th row.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// `n choose 2`, panicking on overflow.
pub(crate) fn binom2(n: u64) -> u64 {
    if n < 2 {
        return 0;
    }
    let (a, b) = if n.is_multiple_of(2) {
        (n / 2, n - 1)
    } else {
        (n, (n - 1) / 2)
    };
    a.checked_mul(b)
        .expect("binomial coefficient overflows u64")
}

/// A finite nonincreasing sequence of positive integers.
///
/// The empty sequence is the empty partition and is a perfectly ordinary
/// value: it has size 0, an empty beta-set, and distinct parts.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Validates `parts` and wraps them. An empty input gives the empty partition.
    pub fn new(parts: impl Into<Vec<u64>>) -> Result<Self> {
        let parts = parts.into();
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::NonPositivePart { index });
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::IncreasingParts {
                prev: w[0],
                next: w[1],
            });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parts must already be valid; only checked in debug builds.
    pub(crate) fn from_parts_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of parts, written ℓ(λ) in the literature.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .expect("partition size overflows u64")
    }

    /// Column lengths of the Young diagram: entry `j` counts the rows with
    /// at least `j + 1` boxes.
    pub(crate) fn column_lengths(&self) -> Vec<u64> {
        let width = self.parts.first().copied().unwrap_or(0) as usize;
        let mut cols = vec![0u64; width];
        for &p in &self.parts {
            for c in &mut cols[..p as usize] {
                *c += 1;
            }
        }
        cols
    }

    /// Every hook length in the diagram.
    pub fn hook_grid(&self) -> HookGrid {
        let cols = self.column_lengths();
        let rows = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &part)| {
                (0..part as usize)
                    .map(|j| (part - j as u64 - 1) + (cols[j] - i as u64 - 1) + 1)
                    .collect()
            })
            .collect();
        HookGrid { rows }
    }

    /// First-column hook lengths: h(i, 1) = λᵢ + ℓ − i.
    pub fn beta_set(&self) -> BetaSet {
        let len = self.parts.len() as u64;
        let elements = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + len - 1 - i as u64)
            .collect();
        BetaSet { elements }
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// Ordering used for all enumerator output: by size, then descending
    /// lexicographic order of parts.
    pub fn canonical_cmp(&self, other: &Partition) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// A finite set of distinct positive integers, stored in descending order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BetaSet {
    elements: Vec<u64>,
}

impl BetaSet {
    /// Accepts the elements in any order; rejects 0 and repeats.
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut elements: Vec<u64> = elements.into_iter().collect();
        if elements.contains(&0) {
            return Err(Error::NonPositiveBeta);
        }
        elements.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateBeta(w[0]));
        }
        Ok(BetaSet { elements })
    }

    /// Elements in descending order.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search_by(|probe| x.cmp(probe)).is_ok()
    }

    pub fn max(&self) -> Option<u64> {
        self.elements.first().copied()
    }

    /// Inverse of [`Partition::beta_set`]: with x₁ > … > x_k, λᵢ = xᵢ − k + i.
    pub fn to_partition(&self) -> Partition {
        let k = self.elements.len() as u64;
        let parts = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, &x)| x + i as u64 + 1 - k)
            .collect();
        Partition::from_parts_unchecked(parts)
    }

    /// Σx − C(|B|, 2), the size of the corresponding partition.
    pub fn size(&self) -> u64 {
        let sum = self
            .elements
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x))
            .expect("beta-set sum overflows u64");
        sum - binom2(self.elements.len() as u64)
    }

    /// True iff no two elements differ by exactly 1, which happens exactly
    /// when the partition has distinct parts.
    pub fn has_no_consecutive(&self) -> bool {
        self.elements.windows(2).all(|w| w[0] - w[1] != 1)
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BetaSet{self}")
    }
}

/// Hook lengths of a Young diagram, one row per part.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HookGrid {
    rows: Vec<Vec<u64>>,
}

impl HookGrid {
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u64> {
        self.rows.get(row)?.get(col).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn contains(&self, h: u64) -> bool {
        self.iter().any(|x| x == h)
    }
}

/// Free-function form of [`Partition::new`].
pub fn make_partition(parts: &[u64]) -> Result<Partition> {
    Partition::new(parts.to_vec())
}

pub fn hook_grid(p: &Partition) -> HookGrid {
    p.hook_grid()
}

pub fn beta_set(p: &Partition) -> BetaSet {
    p.beta_set()
}

pub fn partition_of_beta(b: &BetaSet) -> Partition {
    b.to_partition()
}

pub fn size_from_beta(b: &BetaSet) -> u64 {
    b.size()
}

pub fn has_distinct_parts(p: &Partition) -> bool {
    p.has_distinct_parts()
}

pub fn beta_distinct_criterion(b: &BetaSet) -> bool {
    b.has_no_consecutive()
}
