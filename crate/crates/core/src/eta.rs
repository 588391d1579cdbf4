//! The η encoding of t-core partitions.
//!
//! A t-core's beta-set is closed under subtracting t, so within each residue
//! class i mod t it is an initial run i, i + t, …, i + (nᵢ − 1)t. Recording the
//! run lengths (n₁, …, n_{t−1}) gives a bijection between t-cores and ℕ^{t−1}.
//! Residue 0 never occurs: 0 is not a beta-set element, so no multiple of t
//! can be one either.

use std::fmt;

use crate::cores::abacus_is_t_core;
use crate::error::{Error, Result};
use crate::partition::{binom2, BetaSet, Partition};

/// Run lengths (n₁, …, n_{t−1}) of a t-core's beta-set, tagged with t.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EtaVector {
    t: u64,
    counts: Vec<u64>,
}

impl EtaVector {
    pub fn new(t: u64, counts: impl Into<Vec<u64>>) -> Result<Self> {
        let counts = counts.into();
        check_modulus(t)?;
        let expected = (t - 1) as usize;
        if counts.len() != expected {
            return Err(Error::EtaLength {
                t,
                expected,
                got: counts.len(),
            });
        }
        Ok(EtaVector { t, counts })
    }

    pub fn zero(t: u64) -> Result<Self> {
        check_modulus(t)?;
        Ok(EtaVector {
            t,
            counts: vec![0; (t - 1) as usize],
        })
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Entry i − 1 is nᵢ.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Σ nᵢ, which equals the number of parts of the encoded partition.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// The beta-set ⋃ᵢ {i, i + t, …, i + (nᵢ − 1)t}.
    pub fn beta_set(&self) -> BetaSet {
        let elements = self.counts.iter().enumerate().flat_map(|(idx, &n)| {
            let i = idx as u64 + 1;
            (0..n).map(move |j| j * self.t + i)
        });
        BetaSet::new(elements).expect("residue runs are disjoint and positive")
    }

    pub fn to_partition(&self) -> Partition {
        self.beta_set().to_partition()
    }

    /// No two adjacent entries are both nonzero.
    pub fn in_c_t(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] == 0 || w[1] == 0)
    }

    /// Σᵢ (i·nᵢ + t·C(nᵢ, 2)) − C(Σ nᵢ, 2).
    pub fn size(&self) -> u64 {
        let mut acc: u64 = 0;
        for (idx, &n) in self.counts.iter().enumerate() {
            let i = idx as u64 + 1;
            let term = i
                .checked_mul(n)
                .and_then(|a| self.t.checked_mul(binom2(n)).and_then(|b| a.checked_add(b)))
                .expect("eta size overflows u64");
            acc = acc.checked_add(term).expect("eta size overflows u64");
        }
        acc - binom2(self.total())
    }
}

impl fmt::Debug for EtaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EtaVector(t={}, {:?})", self.t, self.counts)
    }
}

fn check_modulus(t: u64) -> Result<()> {
    if t < 2 {
        return Err(Error::ModulusTooSmall { t, min: 2 });
    }
    Ok(())
}

/// Encodes a t-core. Fails if `p` is not a t-core.
pub fn eta(p: &Partition, t: u64) -> Result<EtaVector> {
    check_modulus(t)?;
    let beta = p.beta_set();
    if !abacus_is_t_core(&beta, t) {
        return Err(Error::NotACore { t });
    }
    let mut counts = vec![0u64; (t - 1) as usize];
    for &x in beta.elements() {
        let r = x % t;
        debug_assert_ne!(r, 0, "abacus condition excludes multiples of t");
        counts[(r - 1) as usize] += 1;
    }
    Ok(EtaVector { t, counts })
}

pub fn eta_inverse(v: &EtaVector) -> Partition {
    v.to_partition()
}

pub fn in_c_t(v: &EtaVector) -> bool {
    v.in_c_t()
}

pub fn size_of_eta(v: &EtaVector) -> u64 {
    v.size()
}

/// x is t-maximal in B when x + t is not in B.
pub fn is_t_maximal(b: &BetaSet, x: u64, t: u64) -> Result<bool> {
    if !b.contains(x) {
        return Err(Error::NotInBetaSet { x });
    }
    Ok(!b.contains(x + t))
}

/// Visits every η vector for modulus `t` whose partition has size at most
/// `limit`, optionally restricted to vectors in C_t (distinct parts).
///
/// Vectors are grouped by k = Σ nᵢ. For fixed k the size Σx − C(k, 2) grows
/// with every element, so a branch is cut as soon as the elements chosen so
/// far plus the smallest possible remaining ones overshoot. Two bounds keep
/// k and the entries finite:
///
/// * a partition with k parts has size at least k (k(k+1)/2 with distinct parts);
/// * its largest part max(β) − k + 1 is at most the size, so every element is
///   at most `limit + k − 1`.
pub fn for_each_core_vector<F>(t: u64, limit: u64, distinct_only: bool, mut visit: F) -> Result<()>
where
    F: FnMut(&EtaVector, u64),
{
    check_modulus(t)?;
    let k_max = if distinct_only {
        // largest k with k(k+1)/2 ≤ limit
        let mut k = 0u64;
        while (k + 1) * (k + 2) / 2 <= limit {
            k += 1;
        }
        k
    } else {
        limit
    };
    let mut search = VectorSearch {
        t,
        limit,
        distinct_only,
        counts: vec![0; (t - 1) as usize],
        visit: &mut visit,
    };
    for k in 0..=k_max {
        search.descend(1, k, 0, 0);
    }
    Ok(())
}

struct VectorSearch<'a, F> {
    t: u64,
    limit: u64,
    distinct_only: bool,
    counts: Vec<u64>,
    visit: &'a mut F,
}

impl<F: FnMut(&EtaVector, u64)> VectorSearch<'_, F> {
    /// Smallest possible sum of `rest` elements drawn from residues i+1..t−1.
    /// The `rest` smallest positive integers in those classes already form
    /// initial runs, so this minimum is attained.
    fn tail_min(&self, i: u64, rest: u64) -> u128 {
        let (t, i, rest) = (u128::from(self.t), u128::from(i), u128::from(rest));
        let m = t - 1 - i;
        if rest == 0 || m == 0 {
            return 0;
        }
        let (q, r) = (rest / m, rest % m);
        let level: u128 = (i + 1 + t - 1) * m / 2;
        let full = q * level + m * t * q * q.saturating_sub(1) / 2;
        let partial = r * (2 * i + r + 1) / 2 + r * q * t;
        full + partial
    }

    /// Decides n_i for residue `i`, with `used` elements summing to `sum`
    /// already placed and `k` elements required in total.
    fn descend(&mut self, i: u64, k: u64, used: u64, sum: u64) {
        let budget = self.limit + binom2(k);
        // entries from position i on are still zero here
        if used == k {
            debug_assert!(sum <= budget);
            let v = EtaVector {
                t: self.t,
                counts: self.counts.clone(),
            };
            (self.visit)(&v, sum - binom2(k));
            return;
        }
        if i == self.t {
            return;
        }
        let prev_nonzero = i > 1 && self.counts[(i - 2) as usize] != 0;
        let max_here = if self.distinct_only && prev_nonzero {
            0
        } else {
            k - used
        };
        let max_element = self.limit + k.saturating_sub(1);
        let mut run_sum = sum;
        for n in 0..=max_here {
            if n > 0 {
                let x = i + (n - 1) * self.t;
                if x > max_element {
                    break;
                }
                run_sum += x;
            }
            let rest = k - used - n;
            if rest > 0 && i + 1 == self.t {
                continue;
            }
            if u128::from(run_sum) + self.tail_min(i, rest) > u128::from(budget) {
                // rest_min can shrink as n grows, so keep scanning
                continue;
            }
            self.counts[(i - 1) as usize] = n;
            self.descend(i + 1, k, used + n, run_sum);
        }
        self.counts[(i - 1) as usize] = 0;
    }
}
