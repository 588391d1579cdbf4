//! Brute-force reference implementations, written without reference to the
//! library's algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// All partitions of n (parts nonincreasing), by plain recursion.
pub fn partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn distinct_partitions(n: u64) -> Vec<Vec<u64>> {
    partitions(n)
        .into_iter()
        .filter(|p| p.windows(2).all(|w| w[0] != w[1]))
        .collect()
}

/// Hook lengths by materialising the diagram and counting boxes.
pub fn hooks_by_counting(parts: &[u64]) -> Vec<Vec<u64>> {
    let cells: BTreeSet<(u64, u64)> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| (0..p).map(move |j| (i as u64, j)))
        .collect();
    parts
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            (0..p)
                .map(|j| {
                    let right = cells
                        .iter()
                        .filter(|&&(r, c)| r == i as u64 && c > j)
                        .count();
                    let below = cells
                        .iter()
                        .filter(|&&(r, c)| c == j && r > i as u64)
                        .count();
                    (right + below + 1) as u64
                })
                .collect()
        })
        .collect()
}

pub fn has_hook(parts: &[u64], h: u64) -> bool {
    hooks_by_counting(parts).iter().flatten().any(|&x| x == h)
}

/// Fibonacci by the defining recurrence.
pub fn fib(i: u64) -> u128 {
    let mut v = vec![0u128, 1];
    while v.len() <= i as usize {
        let n = v.len();
        v.push(v[n - 1] + v[n - 2]);
    }
    v[i as usize]
}

/// Subsets of {1..t-1} with no two consecutive members, via bitmasks.
pub fn nice_masks(t: u64) -> Vec<Vec<u64>> {
    let m = t - 1;
    (0u64..1 << m)
        .filter(|mask| mask & (mask >> 1) == 0)
        .map(|mask| {
            (0..m)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| b + 1)
                .collect()
        })
        .collect()
}

/// Pascal-triangle binomial.
pub fn binomial(n: u64, k: u64) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for j in 1..row.len() {
            next[j] = row[j - 1] + row[j];
        }
        row = next;
    }
    row.get(k as usize).copied().unwrap_or(0)
}
