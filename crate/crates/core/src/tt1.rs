//! (t, t+1)-core partitions with distinct parts.
//!
//! Such a partition is determined by its beta-set, which is exactly a subset
//! of {1, …, t−1} with no two consecutive members (a "nice" subset). The
//! empty set is nice and corresponds to the empty partition; it has to be
//! counted for the Fibonacci count F_{t+1} to come out right.
//!
//! Totals over all nice subsets obey Fibonacci-like recurrences obtained by
//! splitting on whether t − 1 is a member:
//!
//! | sequence | meaning                         | recurrence (t ≥ 4)                    |
//! |----------|---------------------------------|---------------------------------------|
//! | a_t      | number of nice subsets          | a_{t−1} + a_{t−2}                     |
//! | b_t      | Σ |B|                           | b_{t−1} + b_{t−2} + F_{t−1}           |
//! | c_t      | Σ |B|²                          | c_{t−1} + c_{t−2} + 2b_{t−2} + F_{t−1}|
//! | d_t      | Σ Σ_{x∈B} x                     | d_{t−1} + d_{t−2} + (t−1)F_{t−1}      |
//! | e_t      | d_t − Σ C(|B|, 2), total size   | d_t − (c_t − b_t)/2                   |
//!
//! and the Fibonacci convolutions φ_n = Σ_{i+j=n} F_iF_j, ψ_n = Σ_{i+j+k=n} F_iF_jF_k
//! satisfy φ_n = φ_{n−1} + φ_{n−2} + F_{n−1} and ψ_{n+1} = ψ_n + ψ_{n−1} + φ_n.

use std::fmt;
use std::io;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{binom2, BetaSet, Partition};

/// Largest t accepted by the routines that list every nice subset.
pub const MAX_ENUMERATION_T: u64 = 40;

/// Largest t accepted by [`sequence_table`].
pub const MAX_TABLE_T: u64 = 90;

/// Rows up to this t are also recomputed directly from the nice subsets.
pub const DEFINITIONAL_T: u64 = 25;

fn check_t(t: u64) -> Result<()> {
    if t < 2 {
        return Err(Error::ModulusTooSmall { t, min: 2 });
    }
    Ok(())
}

fn check_enumerable(t: u64) -> Result<()> {
    check_t(t)?;
    if t > MAX_ENUMERATION_T {
        return Err(Error::CapExceeded {
            what: "t",
            value: t,
            cap: MAX_ENUMERATION_T,
        });
    }
    Ok(())
}

/// F_0 = 0, F_1 = 1, F_i = F_{i−1} + F_{i−2}. Exact up to F_186.
pub fn fibonacci(i: u64) -> Result<u128> {
    // b runs one index ahead and may overflow before a does
    let (mut a, mut b) = (0u128, Some(1u128));
    for _ in 0..i {
        let cur = b.ok_or(Error::Overflow("fibonacci"))?;
        (a, b) = (cur, a.checked_add(cur));
    }
    Ok(a)
}

fn fibonacci_upto(n: u64) -> Result<Vec<u128>> {
    let mut fib: Vec<u128> = Vec::with_capacity(n as usize + 1);
    for i in 0..=n {
        let value = match i {
            0 => 0,
            1 => 1,
            _ => fib[i as usize - 1]
                .checked_add(fib[i as usize - 2])
                .ok_or(Error::Overflow("fibonacci"))?,
        };
        fib.push(value);
    }
    Ok(fib)
}

/// A subset of {1, …, t−1} without two consecutive members.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NiceSubset {
    t: u64,
    members: Vec<u64>,
}

impl NiceSubset {
    pub fn new(t: u64, members: impl IntoIterator<Item = u64>) -> Result<Self> {
        check_t(t)?;
        let mut members: Vec<u64> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&x| x == 0 || x >= t) {
            return Err(Error::InvalidCoreSpec(format!(
                "members of a nice subset lie in 1..={}",
                t - 1
            )));
        }
        if members.windows(2).any(|w| w[1] - w[0] == 1) {
            return Err(Error::InvalidCoreSpec(
                "nice subsets have no consecutive members".into(),
            ));
        }
        Ok(NiceSubset { t, members })
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Members in ascending order.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn beta_set(&self) -> BetaSet {
        BetaSet::new(self.members.iter().copied()).expect("nice subsets are valid beta-sets")
    }

    pub fn to_partition(&self) -> Partition {
        self.beta_set().to_partition()
    }
}

impl fmt::Debug for NiceSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NiceSubset(t={}, {:?})", self.t, self.members)
    }
}

/// All nice subsets of {1, …, t−1}, the empty one included, in lexicographic
/// order of their sorted member lists.
pub fn nice_subsets(t: u64) -> Result<Vec<NiceSubset>> {
    check_enumerable(t)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    collect_nice(t, 1, &mut current, &mut out);
    Ok(out)
}

fn collect_nice(t: u64, from: u64, current: &mut Vec<u64>, out: &mut Vec<NiceSubset>) {
    out.push(NiceSubset {
        t,
        members: current.clone(),
    });
    for x in from..t {
        current.push(x);
        collect_nice(t, x + 2, current, out);
        current.pop();
    }
}

/// Every (t, t+1)-core partition with distinct parts, one per nice subset,
/// in the same order as [`nice_subsets`].
pub fn enumerate_tt1_distinct(t: u64) -> Result<Vec<Partition>> {
    Ok(nice_subsets(t)?
        .iter()
        .map(NiceSubset::to_partition)
        .collect())
}

/// F_{t+1}.
pub fn count_tt1_distinct(t: u64) -> Result<u128> {
    check_t(t)?;
    fibonacci(t + 1)
}

/// ⌊C(t+1, 2) / 3⌋.
pub fn largest_size(t: u64) -> Result<u64> {
    check_t(t)?;
    Ok(binom2(t + 1) / 3)
}

/// 2 when t ≡ 1 (mod 3), else 1.
pub fn maximizer_count(t: u64) -> Result<u8> {
    check_t(t)?;
    Ok(if t % 3 == 1 { 2 } else { 1 })
}

/// The partitions of largest size, built from the beta-sets
/// {t−1, t−3, …, t−(2k−1)}. Writing t = 3n + r, the admissible k are n for
/// r = 0, n and n+1 for r = 1, and n+1 for r = 2.
pub fn maximizers(t: u64) -> Result<Vec<Partition>> {
    check_t(t)?;
    let n = t / 3;
    let ks: Vec<u64> = match t % 3 {
        0 => vec![n],
        1 => vec![n, n + 1],
        _ => vec![n + 1],
    };
    let mut out: Vec<Partition> = ks
        .into_iter()
        .map(|k| {
            BetaSet::new((1..=k).map(|j| t + 1 - 2 * j))
                .expect("alternating run below t")
                .to_partition()
        })
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

/// φ_n = Σ_{i+j=n, i,j≥1} F_iF_j by direct convolution.
pub fn phi(n: u64) -> Result<u128> {
    let fib = fibonacci_upto(n.max(1))?;
    let mut acc: u128 = 0;
    for i in 1..n {
        let term = fib[i as usize]
            .checked_mul(fib[(n - i) as usize])
            .ok_or(Error::Overflow("phi"))?;
        acc = acc.checked_add(term).ok_or(Error::Overflow("phi"))?;
    }
    Ok(acc)
}

/// ψ_n = Σ_{i+j+k=n, i,j,k≥1} F_iF_jF_k by direct triple convolution.
pub fn psi(n: u64) -> Result<u128> {
    let fib = fibonacci_upto(n.max(1))?;
    let mut acc: u128 = 0;
    for i in 1..n {
        for j in 1..n - i {
            let k = n - i - j;
            let term = fib[i as usize]
                .checked_mul(fib[j as usize])
                .and_then(|x| x.checked_mul(fib[k as usize]))
                .ok_or(Error::Overflow("psi"))?;
            acc = acc.checked_add(term).ok_or(Error::Overflow("psi"))?;
        }
    }
    Ok(acc)
}

/// Sum of sizes over all (t, t+1)-core partitions with distinct parts: ψ_{t+1}.
pub fn total_size(t: u64) -> Result<u128> {
    check_t(t)?;
    psi(t + 1)
}

/// ψ_{t+1} / F_{t+1}, reduced.
pub fn average_size(t: u64) -> Result<Ratio<u128>> {
    let total = total_size(t)?;
    let count = count_tt1_distinct(t)?;
    Ok(Ratio::new(total, count))
}

/// Decimal expansion of a nonnegative fraction, rounded half up to `digits`
/// places after the point.
pub fn render_decimal(value: &Ratio<u128>, digits: usize) -> String {
    let (num, den) = (*value.numer(), *value.denom());
    let mut int_part = num / den;
    let mut rem = num % den;
    let mut frac = Vec::with_capacity(digits);
    for _ in 0..digits {
        rem *= 10;
        frac.push((rem / den) as u8);
        rem %= den;
    }
    if rem * 2 >= den {
        // carry the rounding up through the fractional digits
        let mut i = frac.len();
        loop {
            if i == 0 {
                int_part += 1;
                break;
            }
            i -= 1;
            if frac[i] == 9 {
                frac[i] = 0;
            } else {
                frac[i] += 1;
                break;
            }
        }
    }
    let mut s = int_part.to_string();
    if digits > 0 {
        s.push('.');
        s.extend(frac.iter().map(|d| char::from(b'0' + d)));
    }
    s
}

/// One row of the sequence ladder. `phi`, `psi` and `fib` are indexed by the
/// same t as the other columns, so e_t = ψ_{t+1} is the next row's `psi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRow {
    pub t: u64,
    pub a: u128,
    pub b: u128,
    pub c: u128,
    pub d: u128,
    pub e: u128,
    pub phi: u128,
    pub psi: u128,
    #[serde(rename = "F")]
    pub fib: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceTable {
    pub t_max: u64,
    pub rows: Vec<SequenceRow>,
}

impl SequenceTable {
    pub fn row(&self, t: u64) -> Option<&SequenceRow> {
        self.rows.get(t.checked_sub(2)? as usize)
    }

    /// CSV with header `t,a,b,c,d,e,phi,psi,F`.
    pub fn write_csv<W: io::Write>(&self, writer: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        for row in &self.rows {
            w.serialize(row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is utf-8")
    }
}

/// Totals over nice subsets computed straight from their definitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirectTotals {
    pub a: u128,
    pub b: u128,
    pub c: u128,
    pub d: u128,
    pub e: u128,
}

pub fn direct_totals(t: u64) -> Result<DirectTotals> {
    let subsets = nice_subsets(t)?;
    let mut totals = DirectTotals {
        a: subsets.len() as u128,
        b: 0,
        c: 0,
        d: 0,
        e: 0,
    };
    let mut pairs: u128 = 0;
    for s in &subsets {
        let k = s.len() as u128;
        totals.b += k;
        totals.c += k * k;
        totals.d += s.members().iter().map(|&x| x as u128).sum::<u128>();
        pairs += binom2(k as u64) as u128;
    }
    totals.e = totals.d - pairs;
    Ok(totals)
}

/// Fills rows t = 2..=t_max by the recurrences, then checks them against the
/// direct definitions: subset totals for t ≤ [`DEFINITIONAL_T`], and the
/// convolution sums for φ and ψ on every row.
pub fn sequence_table(t_max: u64) -> Result<SequenceTable> {
    check_t(t_max)?;
    if t_max > MAX_TABLE_T {
        return Err(Error::CapExceeded {
            what: "t_max",
            value: t_max,
            cap: MAX_TABLE_T,
        });
    }
    let overflow = || Error::Overflow("sequence table");
    let fib = fibonacci_upto(t_max + 1)?;
    let mut rows: Vec<SequenceRow> = Vec::with_capacity(t_max as usize - 1);
    for t in 2..=t_max {
        let f_prev = fib[t as usize - 1];
        let row = if t < 4 {
            // 𝓑_2 = {∅, {1}}, 𝓑_3 = {∅, {1}, {2}}
            let (a, b, c, d, phi, psi) = if t == 2 {
                (2, 1, 1, 1, 1, 0)
            } else {
                (3, 2, 2, 3, 2, 1)
            };
            SequenceRow {
                t,
                a,
                b,
                c,
                d,
                e: 0,
                phi,
                psi,
                fib: fib[t as usize],
            }
        } else {
            let p1 = &rows[rows.len() - 1];
            let p2 = &rows[rows.len() - 2];
            let add = |x: u128, y: u128| x.checked_add(y).ok_or_else(overflow);
            let a = add(p1.a, p2.a)?;
            let b = add(add(p1.b, p2.b)?, f_prev)?;
            let c = add(add(add(p1.c, p2.c)?, 2 * p2.b)?, f_prev)?;
            let d = add(
                add(p1.d, p2.d)?,
                ((t - 1) as u128).checked_mul(f_prev).ok_or_else(overflow)?,
            )?;
            let phi = add(add(p1.phi, p2.phi)?, f_prev)?;
            // ψ_t = ψ_{t−1} + ψ_{t−2} + φ_{t−1}
            let psi = add(add(p1.psi, p2.psi)?, p1.phi)?;
            SequenceRow {
                t,
                a,
                b,
                c,
                d,
                e: 0,
                phi,
                psi,
                fib: fib[t as usize],
            }
        };
        let mut row = row;
        debug_assert_eq!((row.c - row.b) % 2, 0);
        row.e = row.d - (row.c - row.b) / 2;
        rows.push(row);
    }

    for row in &rows {
        let mismatch = |name, definition, recurrence| Error::SequenceMismatch {
            name,
            t: row.t,
            definition,
            recurrence,
        };
        let direct_phi = phi(row.t)?;
        if direct_phi != row.phi {
            return Err(mismatch("phi", direct_phi, row.phi));
        }
        let direct_psi = psi(row.t)?;
        if direct_psi != row.psi {
            return Err(mismatch("psi", direct_psi, row.psi));
        }
        if (row.c - row.b) % 2 != 0 {
            return Err(mismatch("c - b parity", 0, row.c - row.b));
        }
        if row.t <= DEFINITIONAL_T {
            let direct = direct_totals(row.t)?;
            for (name, definition, recurrence) in [
                ("a", direct.a, row.a),
                ("b", direct.b, row.b),
                ("c", direct.c, row.c),
                ("d", direct.d, row.d),
                ("e", direct.e, row.e),
            ] {
                if definition != recurrence {
                    return Err(mismatch(name, definition, recurrence));
                }
            }
        }
    }
    Ok(SequenceTable { t_max, rows })
}
