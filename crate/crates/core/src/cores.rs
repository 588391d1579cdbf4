//! Core-partition predicates and exhaustive enumerators.
//!
//! Two independent predicates are provided: [`is_core`] inspects every hook
//! length of the Young diagram, while [`abacus_is_t_core`] only looks at the
//! beta-set. The enumerators here are the ground truth that the faster,
//! structure-aware routines in the rest of the crate are checked against.

use std::collections::BTreeSet;

use num_integer::gcd;

use crate::error::{Error, Result};
use crate::partition::{BetaSet, Partition};

/// Largest `n` accepted by [`enumerate_partitions`].
pub const DEFAULT_PARTITION_CAP: u64 = 120;

/// Largest gap-set size accepted by [`enumerate_simultaneous_cores`].
///
/// The subset search only ever extends sets that are already cores for both
/// moduli, so its cost tracks the number of cores rather than 2^|G|.
pub const DEFAULT_GAP_CAP: u64 = 66;

/// A set of forbidden hook lengths {t₁, …, t_m}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreSpec {
    forbidden: BTreeSet<u64>,
}

impl CoreSpec {
    pub fn new(forbidden: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for t in forbidden {
            if t == 0 {
                return Err(Error::InvalidCoreSpec("hook lengths are positive".into()));
            }
            if !set.insert(t) {
                return Err(Error::InvalidCoreSpec(format!("{t} listed twice")));
            }
        }
        if set.is_empty() {
            return Err(Error::EmptyCoreSpec);
        }
        Ok(CoreSpec { forbidden: set })
    }

    pub fn single(t: u64) -> Result<Self> {
        CoreSpec::new([t])
    }

    pub fn forbidden(&self) -> &BTreeSet<u64> {
        &self.forbidden
    }
}

/// True iff no hook length of `p` is forbidden by `spec`.
pub fn is_core(p: &Partition, spec: &CoreSpec) -> bool {
    !p.hook_grid().iter().any(|h| spec.forbidden.contains(&h))
}

/// Abacus condition: every x ∈ B with x ≥ t has x − t ∈ B.
pub fn abacus_is_t_core(b: &BetaSet, t: u64) -> bool {
    assert!(t >= 1, "modulus must be positive");
    b.elements()
        .iter()
        .filter(|&&x| x >= t)
        .all(|&x| b.contains(x - t))
}

/// Every partition of `n` (or every one with distinct parts), in descending
/// lexicographic order of parts.
pub fn enumerate_partitions(n: u64, distinct_only: bool) -> Result<Partitions> {
    enumerate_partitions_capped(n, distinct_only, DEFAULT_PARTITION_CAP)
}

pub fn enumerate_partitions_capped(n: u64, distinct_only: bool, cap: u64) -> Result<Partitions> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "n",
            value: n,
            cap,
        });
    }
    Ok(Partitions::new(n, distinct_only))
}

/// Single-pass stream of partitions of a fixed integer.
#[derive(Clone, Debug)]
pub struct Partitions {
    n: u64,
    distinct: bool,
    current: Vec<u64>,
    started: bool,
    done: bool,
}

impl Partitions {
    fn new(n: u64, distinct: bool) -> Self {
        Partitions {
            n,
            distinct,
            current: Vec::new(),
            started: false,
            done: false,
        }
    }

    /// Whether `rest` can be written with parts at most `max`
    /// (strictly below `max + 1`, pairwise distinct when required).
    fn completable(&self, rest: u64, max: u64) -> bool {
        if rest == 0 {
            return true;
        }
        if max == 0 {
            return false;
        }
        if self.distinct {
            max * (max + 1) / 2 >= rest
        } else {
            true
        }
    }

    /// Appends the lexicographically largest completion of `rest` below `max`.
    fn fill_greedy(&mut self, mut rest: u64, mut max: u64) {
        while rest > 0 {
            let part = rest.min(max);
            self.current.push(part);
            rest -= part;
            if self.distinct {
                max = part - 1;
            }
        }
    }

    fn advance(&mut self) -> bool {
        let mut tail: u64 = 0;
        while let Some(last) = self.current.pop() {
            tail += last;
            if last < 2 {
                continue;
            }
            let candidate = last - 1;
            let rest = tail - candidate;
            let below = if self.distinct {
                candidate - 1
            } else {
                candidate
            };
            if self.completable(rest, below) {
                self.current.push(candidate);
                self.fill_greedy(rest, below);
                return true;
            }
        }
        false
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.n > 0 {
                self.current.push(self.n);
            }
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(Partition::from_parts_unchecked(self.current.clone()))
    }
}

/// Positive integers not of the form a·t1 + b·t2 with a, b ≥ 0.
///
/// Every integer above the Frobenius number t1·t2 − t1 − t2 is representable,
/// so sieving [1, t1·t2] finds all of them.
pub(crate) fn semigroup_gaps(t1: u64, t2: u64) -> Vec<u64> {
    let bound = (t1 * t2) as usize;
    let mut representable = vec![false; bound + 1];
    representable[0] = true;
    for x in 1..=bound {
        let x1 = x >= t1 as usize && representable[x - t1 as usize];
        let x2 = x >= t2 as usize && representable[x - t2 as usize];
        representable[x] = x1 || x2;
    }
    (1..=bound as u64)
        .filter(|&x| !representable[x as usize])
        .collect()
}

fn check_pair(t1: u64, t2: u64) -> Result<()> {
    if t1 == 0 || t2 == 0 {
        return Err(Error::InvalidCoreSpec("moduli must be positive".into()));
    }
    if gcd(t1, t2) != 1 {
        return Err(Error::NotCoprime { t1, t2 });
    }
    Ok(())
}

/// Every (t1, t2)-core partition, optionally restricted to distinct parts,
/// sorted by size and then in descending lexicographic order.
pub fn enumerate_simultaneous_cores(
    t1: u64,
    t2: u64,
    distinct_only: bool,
) -> Result<Vec<Partition>> {
    enumerate_simultaneous_cores_capped(t1, t2, distinct_only, DEFAULT_GAP_CAP)
}

pub fn enumerate_simultaneous_cores_capped(
    t1: u64,
    t2: u64,
    distinct_only: bool,
    gap_cap: u64,
) -> Result<Vec<Partition>> {
    check_pair(t1, t2)?;
    let gap_count = (t1 - 1) * (t2 - 1) / 2;
    if gap_count > gap_cap {
        return Err(Error::CapExceeded {
            what: "gap-set size",
            value: gap_count,
            cap: gap_cap,
        });
    }
    let gaps = semigroup_gaps(t1, t2);
    debug_assert_eq!(gaps.len() as u64, gap_count);

    // chosen[x] marks membership for x ≤ max gap. Gaps are visited in
    // ascending order, so x − t1, x − t2 and x − 1 are already decided
    // whenever x is considered.
    let top = gaps.last().copied().unwrap_or(0) as usize;
    let mut chosen = vec![false; top + 1];
    let mut out = Vec::new();
    let mut search = GapSearch {
        gaps: &gaps,
        t1: t1 as usize,
        t2: t2 as usize,
        distinct_only,
        chosen: &mut chosen,
        out: &mut out,
    };
    search.run(0);

    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

struct GapSearch<'a> {
    gaps: &'a [u64],
    t1: usize,
    t2: usize,
    distinct_only: bool,
    chosen: &'a mut Vec<bool>,
    out: &'a mut Vec<Partition>,
}

impl GapSearch<'_> {
    fn allowed(&self, x: usize) -> bool {
        let below = |t: usize| x < t || self.chosen[x - t];
        below(self.t1) && below(self.t2) && !(self.distinct_only && x >= 1 && self.chosen[x - 1])
    }

    fn run(&mut self, idx: usize) {
        if idx == self.gaps.len() {
            let beta = BetaSet::new(
                (1..self.chosen.len())
                    .filter(|&x| self.chosen[x])
                    .map(|x| x as u64),
            )
            .expect("gap subsets are valid beta-sets");
            self.out.push(beta.to_partition());
            return;
        }
        let x = self.gaps[idx] as usize;
        self.run(idx + 1);
        if self.allowed(x) {
            self.chosen[x] = true;
            self.run(idx + 1);
            self.chosen[x] = false;
        }
    }
}

/// C(n, k) with overflow detection.
pub(crate) fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        // acc * (n - i) is divisible by i + 1 at every step.
        acc = acc.checked_mul(n as u128 - i)? / (i + 1);
    }
    Some(acc)
}

/// The rational Catalan number C(t1 + t2, t1) / (t1 + t2).
pub fn anderson_count(t1: u64, t2: u64) -> Result<u128> {
    check_pair(t1, t2)?;
    let n = t1
        .checked_add(t2)
        .ok_or(Error::Overflow("anderson count"))?;
    let c = binomial(n, t1).ok_or(Error::Overflow("anderson count"))?;
    debug_assert_eq!(c % n as u128, 0);
    Ok(c / n as u128)
}

/// (t1² − 1)(t2² − 1) / 24, the largest size of a (t1, t2)-core.
pub fn olsson_stanton_max(t1: u64, t2: u64) -> Result<u128> {
    check_pair(t1, t2)?;
    let sq = |t: u64| (t as u128).checked_mul(t as u128).map(|s| s - 1);
    let prod = sq(t1)
        .zip(sq(t2))
        .and_then(|(a, b)| a.checked_mul(b))
        .ok_or(Error::Overflow("largest core size"))?;
    debug_assert_eq!(prod % 24, 0);
    Ok(prod / 24)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_example_core() {
        let lambda = p(&[5, 3, 3, 2, 1]);
        assert!(is_core(&lambda, &CoreSpec::new([8, 10]).unwrap()));
        assert!(!is_core(&lambda, &CoreSpec::single(9).unwrap()));
        assert!(is_core(
            &Partition::empty(),
            &CoreSpec::new([1, 2, 3]).unwrap()
        ));
    }

    #[test]
    fn core_spec_rejects_bad_input() {
        assert_eq!(CoreSpec::new([]), Err(Error::EmptyCoreSpec));
        assert!(CoreSpec::new([0]).is_err());
        assert!(CoreSpec::new([3, 3]).is_err());
    }

    #[test]
    fn abacus() {
        let b = BetaSet::new([9, 6, 5, 3, 1]).unwrap();
        assert!(abacus_is_t_core(&b, 8));
        assert!(!abacus_is_t_core(&b, 9));
        assert!(abacus_is_t_core(&BetaSet::default(), 5));
    }

    #[test]
    fn partitions_of_small_n() {
        let got: Vec<_> = enumerate_partitions(3, true).unwrap().collect();
        assert_eq!(got, vec![p(&[3]), p(&[2, 1])]);
        let got: Vec<_> = enumerate_partitions(0, false).unwrap().collect();
        assert_eq!(got, vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(5, false).unwrap().count(), 7);
        let all: Vec<_> = enumerate_partitions(4, false).unwrap().collect();
        assert_eq!(
            all,
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        assert!(matches!(
            enumerate_partitions(121, false),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn gaps() {
        assert_eq!(semigroup_gaps(2, 3), vec![1]);
        assert_eq!(semigroup_gaps(3, 4), vec![1, 2, 5]);
        assert_eq!(semigroup_gaps(1, 7), Vec::<u64>::new());
    }

    #[test]
    fn simultaneous_cores() {
        assert_eq!(
            enumerate_simultaneous_cores(2, 3, false).unwrap(),
            vec![Partition::empty(), p(&[1])]
        );
        assert_eq!(enumerate_simultaneous_cores(3, 4, false).unwrap().len(), 5);
        assert_eq!(
            enumerate_simultaneous_cores(4, 5, true).unwrap(),
            vec![Partition::empty(), p(&[1]), p(&[2]), p(&[3]), p(&[2, 1])]
        );
        assert_eq!(
            enumerate_simultaneous_cores(4, 6, false),
            Err(Error::NotCoprime { t1: 4, t2: 6 })
        );
        assert!(matches!(
            enumerate_simultaneous_cores(13, 14, false),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn background_formulas() {
        assert_eq!(anderson_count(2, 3).unwrap(), 2);
        assert_eq!(anderson_count(3, 4).unwrap(), 5);
        assert_eq!(anderson_count(5, 6).unwrap(), 42);
        assert_eq!(olsson_stanton_max(2, 3).unwrap(), 1);
        assert_eq!(olsson_stanton_max(3, 4).unwrap(), 5);
        assert_eq!(olsson_stanton_max(4, 5).unwrap(), 15);
        assert!(anderson_count(2, 4).is_err());
        assert!(olsson_stanton_max(6, 9).is_err());
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![1u128];
        for n in 0..60u64 {
            for (k, &c) in row.iter().enumerate() {
                assert_eq!(binomial(n, k as u64), Some(c));
            }
            let mut next = vec![1u128; row.len() + 1];
            for k in 1..row.len() {
                next[k] = row[k - 1] + row[k];
            }
            row = next;
        }
    }
}
