//! Expected values that are not read off directly are first recomputed by the
//! brute-force routines in `common`, then frozen and compared with the library.

mod common;

use corekit::*;

fn p(parts: &[u64]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// (t1, t2)-cores by brute force: a core has size at most `size_bound`.
fn brute_cores(t1: u64, t2: u64, size_bound: u64, distinct: bool) -> Vec<Vec<u64>> {
    (0..=size_bound)
        .flat_map(common::partitions)
        .filter(|q| !distinct || q.windows(2).all(|w| w[0] != w[1]))
        .filter(|q| !common::has_hook(q, t1) && !common::has_hook(q, t2))
        .collect()
}

#[test]
fn hook_grid_matches_box_counting() {
    assert_eq!(common::hooks_by_counting(&[3]), vec![vec![3, 2, 1]]);
    assert_eq!(p(&[3]).hook_grid().rows(), &[vec![3, 2, 1]]);
    for n in 0..=12 {
        for parts in common::partitions(n) {
            let grid = p(&parts).hook_grid();
            assert_eq!(
                grid.rows(),
                common::hooks_by_counting(&parts).as_slice(),
                "{parts:?}"
            );
        }
    }
}

#[test]
fn beta_of_two_one() {
    let first_column: Vec<u64> = common::hooks_by_counting(&[2, 1])
        .iter()
        .map(|r| r[0])
        .collect();
    assert_eq!(first_column, vec![3, 1]);
    assert_eq!(p(&[2, 1]).beta_set().elements(), &[3, 1]);
    assert_eq!(BetaSet::new([3, 1]).unwrap().to_partition(), p(&[2, 1]));
}

#[test]
fn partition_counts_match_recursion() {
    assert_eq!(common::partitions(5).len(), 7);
    assert_eq!(enumerate_partitions(5, false).unwrap().count(), 7);
    for n in 0..=25 {
        let ours: Vec<Vec<u64>> = enumerate_partitions(n, false)
            .unwrap()
            .map(|q| q.parts().to_vec())
            .collect();
        assert_eq!(ours, common::partitions(n), "n = {n}");
        let ours: Vec<Vec<u64>> = enumerate_partitions(n, true)
            .unwrap()
            .map(|q| q.parts().to_vec())
            .collect();
        assert_eq!(ours, common::distinct_partitions(n), "n = {n}");
    }
}

#[test]
fn simultaneous_core_counts_by_brute_force() {
    // (t1, t2, largest possible size, expected count, expected max)
    let cases = [
        (2, 3, 1, 2, 1),
        (3, 4, 5, 5, 5),
        (4, 5, 15, 14, 15),
        (2, 5, 3, 3, 3),
        (3, 5, 8, 7, 8),
    ];
    for (t1, t2, bound, count, max) in cases {
        // the brute force scans a few sizes beyond the bound to confirm it
        let brute = brute_cores(t1, t2, bound + 3, false);
        assert_eq!(brute.len() as u128, count, "({t1},{t2})");
        assert_eq!(
            brute.iter().map(|q| q.iter().sum::<u64>()).max().unwrap(),
            max
        );
        assert_eq!(common::binomial(t1 + t2, t1) / (t1 + t2) as u128, count);

        let ours = enumerate_simultaneous_cores(t1, t2, false).unwrap();
        assert_eq!(ours.len() as u128, count);
        assert_eq!(anderson_count(t1, t2).unwrap(), count);
        assert_eq!(olsson_stanton_max(t1, t2).unwrap(), max as u128);
        let mut brute_sorted: Vec<Partition> = brute.iter().map(|q| p(q)).collect();
        brute_sorted.sort_by(|a, b| a.canonical_cmp(b));
        assert_eq!(ours, brute_sorted);
    }
    assert_eq!(common::binomial(11, 5) / 11, 42);
    assert_eq!(anderson_count(5, 6).unwrap(), 42);
}

#[test]
fn distinct_four_five_cores() {
    let brute = brute_cores(4, 5, 18, true);
    let mut expected: Vec<Partition> = brute.iter().map(|q| p(q)).collect();
    expected.sort_by(|a, b| a.canonical_cmp(b));
    assert_eq!(
        expected,
        vec![Partition::empty(), p(&[1]), p(&[2]), p(&[3]), p(&[2, 1])]
    );
    assert_eq!(enumerate_simultaneous_cores(4, 5, true).unwrap(), expected);
}

#[test]
fn distinct_t_core_series_by_brute_force() {
    let brute = |t: u64, limit: u64| -> Vec<u64> {
        (0..=limit)
            .map(|n| {
                common::distinct_partitions(n)
                    .iter()
                    .filter(|q| !common::has_hook(q, t))
                    .count() as u64
            })
            .collect()
    };
    assert_eq!(brute(4, 5), vec![1, 1, 1, 2, 0, 1]);
    assert_eq!(brute(3, 9), vec![1, 1, 1, 0, 1, 0, 1, 0, 0, 1]);
    assert_eq!(brute(2, 6), vec![1, 1, 0, 1, 0, 0, 1]);
    for t in 2..=6 {
        let b = brute(t, 20);
        assert_eq!(cd_series_eq2(t, 20).unwrap().coeffs, b, "t = {t}");
        assert_eq!(cd_series_oracle(t, 20).unwrap().coeffs, b, "t = {t}");
    }
    for t in 2..=4 {
        assert_eq!(
            cd_series_closed(t, 20).unwrap().coeffs,
            brute(t, 20),
            "t = {t}"
        );
    }
}

#[test]
fn tt1_partitions_by_brute_force() {
    for t in 2..=5u64 {
        let bound = (t * t - 1) * ((t + 1) * (t + 1) - 1) / 24;
        let brute = brute_cores(t, t + 1, bound, true);
        let fib = common::fib(t + 1);
        assert_eq!(brute.len() as u128, fib, "t = {t}");
        let mut ours = enumerate_tt1_distinct(t).unwrap();
        ours.sort_by(|a, b| a.canonical_cmp(b));
        let mut expected: Vec<Partition> = brute.iter().map(|q| p(q)).collect();
        expected.sort_by(|a, b| a.canonical_cmp(b));
        assert_eq!(ours, expected, "t = {t}");

        let total: u64 = brute.iter().flatten().sum();
        assert_eq!(total_size(t).unwrap(), total as u128);
        let max = brute.iter().map(|q| q.iter().sum::<u64>()).max().unwrap();
        assert_eq!(largest_size(t).unwrap(), max);
    }
    assert_eq!(total_size(4).unwrap(), 9);
    assert_eq!(average_size(4).unwrap(), Ratio::new(9, 5));
}

#[test]
fn fibonacci_and_convolutions() {
    assert_eq!(common::fib(10), 55);
    assert_eq!(common::fib(11), 89);
    for i in 0..=100 {
        assert_eq!(fibonacci(i).unwrap(), common::fib(i));
    }
    let psi_brute = |n: u64| -> u128 {
        let mut acc = 0;
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    if i + j + k == n {
                        acc += common::fib(i) * common::fib(j) * common::fib(k);
                    }
                }
            }
        }
        acc
    };
    assert_eq!(psi_brute(5), 9);
    for n in 0..=40 {
        assert_eq!(psi(n).unwrap(), psi_brute(n), "n = {n}");
    }
}

#[test]
fn sequence_table_against_bitmask_subsets() {
    let table = sequence_table(16).unwrap();
    for t in 2..=16u64 {
        let subsets = common::nice_masks(t);
        let row = table.row(t).unwrap();
        let a = subsets.len() as u128;
        let b: u128 = subsets.iter().map(|s| s.len() as u128).sum();
        let c: u128 = subsets.iter().map(|s| (s.len() * s.len()) as u128).sum();
        let d: u128 = subsets.iter().flatten().map(|&x| x as u128).sum();
        let pairs: u128 = subsets
            .iter()
            .map(|s| common::binomial(s.len() as u64, 2))
            .sum();
        assert_eq!(
            (row.a, row.b, row.c, row.d, row.e),
            (a, b, c, d, d - pairs),
            "t = {t}"
        );
        assert_eq!(row.fib, common::fib(t));
    }
    assert_eq!(table.row(2).unwrap().b, 1);
}

#[test]
fn eta_examples_by_hand() {
    // β = {2, 5}: residues mod 3 are both 2, so n = (0, 2)
    let q = p(&[4, 2]);
    assert_eq!(q.beta_set().elements(), &[5, 2]);
    assert_eq!(eta(&q, 3).unwrap(), EtaVector::new(3, vec![0, 2]).unwrap());
    assert_eq!(size_of_eta(&EtaVector::new(3, vec![0, 2]).unwrap()), 6);
    assert_eq!(q.size(), 6);
}
