//! Catalogue of cross-verification checks.
//!
//! Each check pits a structural result against an independent computation
//! (brute-force enumeration, the hook-length test, direct convolution) over a
//! bounded sweep and produces a [`TheoremReport`]. Checks are independent of
//! one another and can run in parallel; [`run_checks`] returns reports sorted
//! by check name whatever the completion order.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::cores::{
    abacus_is_t_core, anderson_count, enumerate_partitions, enumerate_simultaneous_cores, is_core,
    olsson_stanton_max, CoreSpec,
};
use crate::error::{Error, Result};
use crate::eta::{eta, for_each_core_vector};
use crate::genfun::{cd_series_closed, cd_series_eq2, cd_series_oracle, compare_series};
use crate::partition::{BetaSet, Partition};
use crate::report::{Status, TheoremReport};
use crate::tt1::{
    count_tt1_distinct, enumerate_tt1_distinct, fibonacci, largest_size, maximizer_count,
    maximizers, nice_subsets, psi, sequence_table, total_size,
};

/// Largest `--t-max` accepted by [`checks_for`].
pub const MAX_VERIFY_T: u64 = 60;
/// Largest `--n-max` accepted by [`checks_for`].
pub const MAX_VERIFY_N: u64 = 60;

/// Largest partition size used by checks that visit every partition.
pub const SWEEP_N_LIMIT: u64 = 40;

/// Coprime pairs (t1, t2) with at most this many gaps are used for the
/// rational Catalan and largest-size cross-checks.
pub const BACKGROUND_GAP_LIMIT: u64 = 20;

/// Degree used when comparing the generating function with its closed forms.
pub const CLOSED_FORM_LIMIT: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Kernel,
    Oracle,
    Eta,
    Genfun,
    Tt1,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["kernel", "oracle", "eta", "genfun", "tt1", "all"];
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "kernel" => Suite::Kernel,
            "oracle" => Suite::Oracle,
            "eta" => Suite::Eta,
            "genfun" => Suite::Genfun,
            "tt1" => Suite::Tt1,
            "all" => Suite::All,
            other => return Err(format!("unknown suite `{other}`")),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Kernel => "kernel",
            Suite::Oracle => "oracle",
            Suite::Eta => "eta",
            Suite::Genfun => "genfun",
            Suite::Tt1 => "tt1",
            Suite::All => "all",
        };
        f.write_str(name)
    }
}

type Outcome = std::result::Result<(), String>;

/// A named, parameterised check that has not run yet.
pub struct Check {
    name: String,
    params: BTreeMap<String, String>,
    body: Box<dyn Fn() -> Outcome + Send + Sync>,
}

impl Check {
    pub fn new<F>(name: impl Into<String>, params: &[(&str, String)], body: F) -> Self
    where
        F: Fn() -> Outcome + Send + Sync + 'static,
    {
        Check {
            name: name.into(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            body: Box::new(body),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn run(&self) -> TheoremReport {
        let start = Instant::now();
        let outcome = (self.body)();
        let (status, detail) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(counterexample) => (Status::Fail, Some(counterexample)),
        };
        TheoremReport {
            check_name: self.name.clone(),
            params: self.params.clone(),
            status,
            detail,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check")
            .field("name", &self.name)
            .field("params", &self.params)
            .finish()
    }
}

/// Runs `checks` on up to `jobs` threads, calling `on_done` as each finishes.
/// The returned reports are sorted by check name.
pub fn run_checks<F>(checks: Vec<Check>, jobs: usize, on_done: F) -> Vec<TheoremReport>
where
    F: Fn(&TheoremReport) + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let mut reports: Vec<TheoremReport> = pool.install(|| {
        checks
            .par_iter()
            .map(|c| {
                let r = c.run();
                on_done(&r);
                r
            })
            .collect()
    });
    reports.sort_by(|a, b| a.check_name.cmp(&b.check_name));
    reports
}

/// The checks making up `suite`, with sweep sizes derived from `t_max`
/// (largest modulus) and `n_max` (largest partition size).
///
/// Enumeration-heavy sweeps clamp their bounds to the range they can afford:
/// sweeps over every partition stop at size [`SWEEP_N_LIMIT`], nice-subset
/// sweeps at t = 25, the gap-set comparison at t = 9 and the quadratic bound
/// at t = 15.
pub fn checks_for(suite: Suite, t_max: u64, n_max: u64) -> Result<Vec<Check>> {
    if t_max < 2 {
        return Err(Error::ModulusTooSmall { t: t_max, min: 2 });
    }
    if t_max > MAX_VERIFY_T {
        return Err(Error::CapExceeded {
            what: "t_max",
            value: t_max,
            cap: MAX_VERIFY_T,
        });
    }
    if n_max > MAX_VERIFY_N {
        return Err(Error::CapExceeded {
            what: "n_max",
            value: n_max,
            cap: MAX_VERIFY_N,
        });
    }
    let sweep_n = n_max.min(SWEEP_N_LIMIT);
    let mut checks = Vec::new();
    let wants = |s: Suite| suite == Suite::All || suite == s;
    if wants(Suite::Kernel) {
        checks.push(hook_example());
        checks.push(beta_round_trip(sweep_n));
        checks.push(size_from_beta_sweep(sweep_n));
        checks.push(distinct_criterion_sweep(sweep_n));
        checks.push(column_hooks_sweep(sweep_n));
    }
    if wants(Suite::Oracle) {
        checks.push(predicate_equivalence(sweep_n, t_max));
        checks.push(tt1_window_containment(t_max.min(10)));
        checks.push(tt1_distinct_containment(t_max.min(12)));
        checks.push(anderson_cross_check(BACKGROUND_GAP_LIMIT));
        checks.push(olsson_stanton_cross_check(BACKGROUND_GAP_LIMIT));
    }
    if wants(Suite::Eta) {
        checks.push(eta_round_trip(t_max, sweep_n));
        checks.push(eta_vector_round_trip(t_max, sweep_n));
        checks.push(eta_distinct_correspondence(t_max, sweep_n));
    }
    if wants(Suite::Genfun) {
        checks.push(eq2_vs_oracle(t_max, n_max as usize));
        checks.push(eq2_vs_closed(CLOSED_FORM_LIMIT.max(n_max as usize)));
        checks.push(series_sanity(t_max, n_max as usize));
    }
    if wants(Suite::Tt1) {
        checks.push(nice_subset_count(t_max.min(25)));
        checks.push(tt1_count_vs_gap_enumerator(t_max.min(9)));
        checks.push(tt1_largest_size(t_max.min(25)));
        checks.push(tt1_quadratic_bound(t_max.min(15)));
        checks.push(tt1_total_size(t_max.min(25)));
        checks.push(ladder_identities(t_max));
        checks.push(sequence_anchors());
    }
    Ok(checks)
}

fn fail<T: fmt::Display>(msg: T) -> Outcome {
    Err(msg.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err_str(e: Error) -> String {
    e.to_string()
}

/// Every partition of size at most `n_max`, optionally only distinct-part ones.
pub fn partitions_upto(n_max: u64, distinct_only: bool) -> impl Iterator<Item = Partition> {
    (0..=n_max).flat_map(move |n| {
        enumerate_partitions(n, distinct_only).expect("sweep sizes stay below the partition cap")
    })
}

fn for_partitions(n_max: u64, mut f: impl FnMut(&Partition) -> Outcome) -> Outcome {
    partitions_upto(n_max, false).try_for_each(|p| f(&p))
}

pub fn hook_example() -> Check {
    Check::new("kernel.hook_example", &[], || {
        let lambda = Partition::new(vec![5, 3, 3, 2, 1]).map_err(err_str)?;
        let expected: Vec<Vec<u64>> = vec![
            vec![9, 7, 5, 2, 1],
            vec![6, 4, 2],
            vec![5, 3, 1],
            vec![3, 1],
            vec![1],
        ];
        let grid = lambda.hook_grid();
        ensure(grid.rows() == expected.as_slice(), || {
            format!("hook grid of {lambda} is {:?}", grid.rows())
        })?;
        let beta = lambda.beta_set();
        ensure(beta.elements() == [9, 6, 5, 3, 1], || {
            format!("beta-set of {lambda} is {beta}")
        })?;
        let spec = CoreSpec::new([8, 10]).map_err(err_str)?;
        ensure(is_core(&lambda, &spec), || {
            format!("{lambda} is not an (8,10)-core")
        })
    })
}

pub fn beta_round_trip(n_max: u64) -> Check {
    Check::new(
        "kernel.beta_round_trip",
        &[("n_max", n_max.to_string())],
        move || {
            for_partitions(n_max, |p| {
                let back = p.beta_set().to_partition();
                ensure(&back == p, || format!("{p} maps back to {back}"))
            })
        },
    )
}

pub fn size_from_beta_sweep(n_max: u64) -> Check {
    Check::new(
        "kernel.size_from_beta",
        &[("n_max", n_max.to_string())],
        move || {
            for_partitions(n_max, |p| {
                let s = p.beta_set().size();
                ensure(s == p.size(), || {
                    format!("{p}: beta-set size {s}, true size {}", p.size())
                })
            })
        },
    )
}

pub fn distinct_criterion_sweep(n_max: u64) -> Check {
    Check::new(
        "kernel.distinct_criterion",
        &[("n_max", n_max.to_string())],
        move || {
            for_partitions(n_max, |p| {
                let beta = p.beta_set();
                ensure(p.has_distinct_parts() == beta.has_no_consecutive(), || {
                    format!("{p} with beta-set {beta}")
                })
            })
        },
    )
}

pub fn column_hooks_sweep(n_max: u64) -> Check {
    Check::new(
        "kernel.column_hooks",
        &[("n_max", n_max.to_string())],
        move || {
            for_partitions(n_max, |p| {
                let grid = p.hook_grid();
                let len = p.len() as u64;
                let column: Vec<u64> = grid.rows().iter().map(|r| r[0]).collect();
                ensure(column.windows(2).all(|w| w[0] > w[1]), || {
                    format!("{p}: first column {column:?} not strictly decreasing")
                })?;
                for (i, (&h, &part)) in column.iter().zip(p.parts()).enumerate() {
                    ensure(h == part + len - 1 - i as u64, || {
                        format!("{p}: h({}, 1) = {h}", i + 1)
                    })?;
                }
                Ok(())
            })
        },
    )
}

pub fn predicate_equivalence(n_max: u64, t_max: u64) -> Check {
    Check::new(
        "oracle.predicate_equivalence",
        &[("n_max", n_max.to_string()), ("t_max", t_max.to_string())],
        move || {
            let specs: Vec<(u64, CoreSpec)> = (1..=t_max)
                .map(|t| (t, CoreSpec::single(t).expect("positive modulus")))
                .collect();
            for_partitions(n_max, |p| {
                let beta = p.beta_set();
                for (t, spec) in &specs {
                    let by_hooks = is_core(p, spec);
                    let by_abacus = abacus_is_t_core(&beta, *t);
                    ensure(by_hooks == by_abacus, || {
                        format!("{p}, t = {t}: hook test {by_hooks}, abacus {by_abacus}")
                    })?;
                }
                Ok(())
            })
        },
    )
}

/// β-sets of (t, t+1)-cores avoid every a·t + b·(t+1), i.e. lie in the
/// windows [(k−1)(t+1) + 1, kt − 1] for 1 ≤ k ≤ t − 1.
pub fn tt1_window_containment(t_max: u64) -> Check {
    Check::new(
        "oracle.tt1_window_containment",
        &[("t_max", t_max.to_string())],
        move || {
            for t in 2..=t_max {
                let in_window = |x: u64| (1..t).any(|k| (k - 1) * (t + 1) < x && x < k * t);
                for p in enumerate_simultaneous_cores(t, t + 1, false).map_err(err_str)? {
                    let beta = p.beta_set();
                    if let Some(x) = beta.elements().iter().find(|&&x| !in_window(x)) {
                        return fail(format!("t = {t}: {p} has {x} in beta-set {beta}"));
                    }
                }
            }
            Ok(())
        },
    )
}

/// β-sets of distinct-part (t, t+1)-cores lie in {1, …, t − 1}.
pub fn tt1_distinct_containment(t_max: u64) -> Check {
    Check::new(
        "oracle.tt1_distinct_containment",
        &[("t_max", t_max.to_string())],
        move || {
            for t in 2..=t_max {
                for p in enumerate_simultaneous_cores(t, t + 1, true).map_err(err_str)? {
                    let beta = p.beta_set();
                    ensure(beta.max().is_none_or(|m| m < t), || {
                        format!("t = {t}: {p} has beta-set {beta}")
                    })?;
                }
            }
            Ok(())
        },
    )
}

/// Coprime pairs 2 ≤ t1 < t2 with (t1 − 1)(t2 − 1)/2 ≤ `gap_limit`.
pub fn coprime_pairs(gap_limit: u64) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for t1 in 2.. {
        if (t1 - 1) * t1 / 2 > gap_limit {
            break;
        }
        for t2 in t1 + 1.. {
            if (t1 - 1) * (t2 - 1) / 2 > gap_limit {
                break;
            }
            if num_integer::gcd(t1, t2) == 1 {
                pairs.push((t1, t2));
            }
        }
    }
    pairs
}

pub fn anderson_cross_check(gap_limit: u64) -> Check {
    Check::new(
        "oracle.anderson_count",
        &[("gap_limit", gap_limit.to_string())],
        move || {
            for (t1, t2) in coprime_pairs(gap_limit) {
                let found = enumerate_simultaneous_cores(t1, t2, false)
                    .map_err(err_str)?
                    .len() as u128;
                let formula = anderson_count(t1, t2).map_err(err_str)?;
                ensure(found == formula, || {
                    format!("({t1},{t2}): enumerated {found}, formula {formula}")
                })?;
            }
            Ok(())
        },
    )
}

pub fn olsson_stanton_cross_check(gap_limit: u64) -> Check {
    Check::new(
        "oracle.olsson_stanton_max",
        &[("gap_limit", gap_limit.to_string())],
        move || {
            for (t1, t2) in coprime_pairs(gap_limit) {
                let cores = enumerate_simultaneous_cores(t1, t2, false).map_err(err_str)?;
                let found = cores.iter().map(Partition::size).max().unwrap_or(0) as u128;
                let formula = olsson_stanton_max(t1, t2).map_err(err_str)?;
                ensure(found == formula, || {
                    format!("({t1},{t2}): enumerated max {found}, formula {formula}")
                })?;
            }
            Ok(())
        },
    )
}

/// t-cores of size ≤ `n_max` for each 2 ≤ t ≤ `t_max`, found by brute force.
fn brute_force_cores(t_max: u64, n_max: u64) -> impl Iterator<Item = (u64, Vec<Partition>)> {
    let all: Vec<(Partition, BetaSet)> = partitions_upto(n_max, false)
        .map(|p| {
            let b = p.beta_set();
            (p, b)
        })
        .collect();
    (2..=t_max).map(move |t| {
        let cores = all
            .iter()
            .filter(|(_, b)| abacus_is_t_core(b, t))
            .map(|(p, _)| p.clone())
            .collect();
        (t, cores)
    })
}

pub fn eta_round_trip(t_max: u64, n_max: u64) -> Check {
    Check::new(
        "eta.round_trip",
        &[("n_max", n_max.to_string()), ("t_max", t_max.to_string())],
        move || {
            for (t, cores) in brute_force_cores(t_max, n_max) {
                for p in cores {
                    let v = eta(&p, t).map_err(|e| format!("{p}, t = {t}: {e}"))?;
                    let back = v.to_partition();
                    ensure(back == p, || format!("t = {t}: {p} -> {v:?} -> {back}"))?;
                    ensure(v.size() == p.size(), || {
                        format!(
                            "t = {t}: {p} has size {}, size formula gives {}",
                            p.size(),
                            v.size()
                        )
                    })?;
                    ensure(v.total() == p.len() as u64, || {
                        format!(
                            "t = {t}: {p} has {} parts, entries sum to {}",
                            p.len(),
                            v.total()
                        )
                    })?;
                }
            }
            Ok(())
        },
    )
}

/// Every vector whose size is at most `n_max` decodes to a t-core that
/// re-encodes to the same vector, and these vectors are exactly as many as
/// the brute-force t-cores of size ≤ `n_max`.
pub fn eta_vector_round_trip(t_max: u64, n_max: u64) -> Check {
    Check::new(
        "eta.vector_round_trip",
        &[("n_max", n_max.to_string()), ("t_max", t_max.to_string())],
        move || {
            for (t, cores) in brute_force_cores(t_max, n_max) {
                let mut seen = HashSet::new();
                let mut problem: Option<String> = None;
                for_each_core_vector(t, n_max, false, |v, size| {
                    if problem.is_some() {
                        return;
                    }
                    let p = v.to_partition();
                    match eta(&p, t) {
                        Ok(w) if &w == v && p.size() == size => {
                            seen.insert(p);
                        }
                        Ok(w) => problem = Some(format!("t = {t}: {v:?} -> {p} -> {w:?}")),
                        Err(e) => problem = Some(format!("t = {t}: {v:?} -> {p}: {e}")),
                    }
                })
                .map_err(err_str)?;
                if let Some(msg) = problem {
                    return fail(msg);
                }
                if let Some(missing) = cores.iter().find(|p| !seen.contains(*p)) {
                    return fail(format!(
                        "t = {t}: core {missing} has no vector of size ≤ {n_max}"
                    ));
                }
                ensure(seen.len() == cores.len(), || {
                    format!("t = {t}: {} vectors, {} cores", seen.len(), cores.len())
                })?;
            }
            Ok(())
        },
    )
}

pub fn eta_distinct_correspondence(t_max: u64, n_max: u64) -> Check {
    Check::new(
        "eta.distinct_correspondence",
        &[("n_max", n_max.to_string()), ("t_max", t_max.to_string())],
        move || {
            for (t, cores) in brute_force_cores(t_max, n_max) {
                for p in cores {
                    let v = eta(&p, t).map_err(err_str)?;
                    ensure(v.in_c_t() == p.has_distinct_parts(), || {
                        format!("t = {t}: {p} -> {v:?}")
                    })?;
                }
            }
            Ok(())
        },
    )
}

pub fn eq2_vs_oracle(t_max: u64, limit: usize) -> Check {
    Check::new(
        "genfun.eq2_vs_oracle",
        &[("limit", limit.to_string()), ("t_max", t_max.to_string())],
        move || {
            for t in 2..=t_max {
                let a = cd_series_eq2(t, limit).map_err(err_str)?;
                let b = cd_series_oracle(t, limit).map_err(err_str)?;
                let report = compare_series(&a, &b).map_err(err_str)?;
                if !report.passed() {
                    return fail(format!("t = {t}: {}", report.detail.unwrap_or_default()));
                }
            }
            Ok(())
        },
    )
}

pub fn eq2_vs_closed(limit: usize) -> Check {
    Check::new(
        "genfun.eq2_vs_closed",
        &[("limit", limit.to_string())],
        move || {
            for t in 2..=4 {
                let a = cd_series_eq2(t, limit).map_err(err_str)?;
                let b = cd_series_closed(t, limit).map_err(err_str)?;
                let report = compare_series(&a, &b).map_err(err_str)?;
                if !report.passed() {
                    return fail(format!("t = {t}: {}", report.detail.unwrap_or_default()));
                }
            }
            Ok(())
        },
    )
}

/// c₀ = 1, each cd_t(n) is at most the number of distinct-part partitions of
/// n, and every vector visited while summing lies in C_t and has the size it
/// is credited with.
pub fn series_sanity(t_max: u64, limit: usize) -> Check {
    Check::new(
        "genfun.series_sanity",
        &[("limit", limit.to_string()), ("t_max", t_max.to_string())],
        move || {
            let distinct_counts: Vec<u64> = (0..=limit as u64)
                .map(|n| enumerate_partitions(n, true).map(|it| it.count() as u64))
                .collect::<Result<_>>()
                .map_err(err_str)?;
            for t in 2..=t_max {
                let s = cd_series_eq2(t, limit).map_err(err_str)?;
                ensure(s.coeffs[0] == 1, || {
                    format!("t = {t}: c_0 = {}", s.coeffs[0])
                })?;
                for (n, (&c, &q)) in s.coeffs.iter().zip(&distinct_counts).enumerate() {
                    ensure(c <= q, || format!("t = {t}: c_{n} = {c} exceeds {q}"))?;
                }
                let mut problem = None;
                for_each_core_vector(t, limit as u64, true, |v, size| {
                    if problem.is_none() && (!v.in_c_t() || v.size() != size) {
                        problem = Some(format!("t = {t}: visited {v:?} credited size {size}"));
                    }
                })
                .map_err(err_str)?;
                if let Some(msg) = problem {
                    return fail(msg);
                }
            }
            Ok(())
        },
    )
}

pub fn nice_subset_count(t_max: u64) -> Check {
    Check::new("tt1.count", &[("t_max", t_max.to_string())], move || {
        for t in 2..=t_max {
            let listed = enumerate_tt1_distinct(t).map_err(err_str)?.len() as u128;
            let fib = fibonacci(t + 1).map_err(err_str)?;
            let formula = count_tt1_distinct(t).map_err(err_str)?;
            ensure(listed == fib && formula == fib, || {
                format!("t = {t}: {listed} nice subsets, F_(t+1) = {fib}")
            })?;
        }
        Ok(())
    })
}

pub fn tt1_count_vs_gap_enumerator(t_max: u64) -> Check {
    Check::new(
        "tt1.count_vs_gap_enumerator",
        &[("t_max", t_max.to_string())],
        move || {
            for t in 2..=t_max {
                let mut by_gaps = enumerate_simultaneous_cores(t, t + 1, true).map_err(err_str)?;
                let mut by_subsets = enumerate_tt1_distinct(t).map_err(err_str)?;
                by_gaps.sort_by(|a, b| a.canonical_cmp(b));
                by_subsets.sort_by(|a, b| a.canonical_cmp(b));
                if by_gaps != by_subsets {
                    let odd = by_gaps
                        .iter()
                        .find(|p| !by_subsets.contains(p))
                        .or_else(|| by_subsets.iter().find(|p| !by_gaps.contains(p)));
                    return fail(format!(
                        "t = {t}: {} vs {} partitions, e.g. {}",
                        by_gaps.len(),
                        by_subsets.len(),
                        odd.map(|p| p.to_string()).unwrap_or_else(|| "order".into())
                    ));
                }
            }
            Ok(())
        },
    )
}

pub fn tt1_largest_size(t_max: u64) -> Check {
    Check::new(
        "tt1.largest_size",
        &[("t_max", t_max.to_string())],
        move || {
            for t in 2..=t_max {
                let all = enumerate_tt1_distinct(t).map_err(err_str)?;
                let best = all.iter().map(Partition::size).max().unwrap_or(0);
                let formula = largest_size(t).map_err(err_str)?;
                ensure(best == formula, || {
                    format!("t = {t}: max size {best}, formula {formula}")
                })?;
                let mut attaining: Vec<Partition> =
                    all.into_iter().filter(|p| p.size() == best).collect();
                attaining.sort_by(|a, b| a.canonical_cmp(b));
                let count = maximizer_count(t).map_err(err_str)? as usize;
                ensure(attaining.len() == count, || {
                    format!("t = {t}: {} maximizers, expected {count}", attaining.len())
                })?;
                let built = maximizers(t).map_err(err_str)?;
                ensure(attaining == built, || {
                    format!("t = {t}: scan finds {attaining:?}, construction gives {built:?}")
                })?;
            }
            Ok(())
        },
    )
}

/// 24·size + (6k − 2t − 1)² ≤ (2t + 1)² for every nice subset with k members,
/// the integer form of size ≤ −(3/2)(k − (2t+1)/6)² + (2t+1)²/24.
pub fn tt1_quadratic_bound(t_max: u64) -> Check {
    Check::new(
        "tt1.quadratic_bound",
        &[("t_max", t_max.to_string())],
        move || {
            for t in 2..=t_max {
                for s in nice_subsets(t).map_err(err_str)? {
                    let k = s.len() as i128;
                    let size = s.beta_set().size() as i128;
                    let t = t as i128;
                    let lhs = 24 * size + (6 * k - 2 * t - 1).pow(2);
                    ensure(lhs <= (2 * t + 1).pow(2), || {
                        format!("t = {t}: {s:?} has size {size}")
                    })?;
                }
            }
            Ok(())
        },
    )
}

pub fn tt1_total_size(t_max: u64) -> Check {
    Check::new(
        "tt1.total_size",
        &[("t_max", t_max.to_string())],
        move || {
            let table = sequence_table(t_max.max(2)).map_err(err_str)?;
            for t in 2..=t_max {
                let summed: u128 = enumerate_tt1_distinct(t)
                    .map_err(err_str)?
                    .iter()
                    .map(|p| p.size() as u128)
                    .sum();
                let formula = total_size(t).map_err(err_str)?;
                let e = table.row(t).map(|r| r.e).unwrap_or_default();
                ensure(summed == formula && e == formula, || {
                    format!("t = {t}: summed {summed}, e_t = {e}, psi_(t+1) = {formula}")
                })?;
            }
            Ok(())
        },
    )
}

/// For 4 ≤ t ≤ `t_max`:
/// ψ_{t+1} − ψ_t − ψ_{t−1} = (t−1)F_{t−1} − b_{t−2} = φ_t,
/// φ_t = φ_{t−1} + φ_{t−2} + F_{t−1}, and e_t = ψ_{t+1} for 2 ≤ t ≤ `t_max`.
pub fn ladder_identities(t_max: u64) -> Check {
    Check::new(
        "tt1.ladder_identities",
        &[("t_max", t_max.to_string())],
        move || {
            let table = sequence_table(t_max + 1).map_err(err_str)?;
            let row = |t: u64| table.row(t).expect("row in table");
            for t in 2..=t_max {
                let e = row(t).e;
                let psi_next = psi(t + 1).map_err(err_str)?;
                ensure(e == psi_next, || {
                    format!("t = {t}: e_t = {e}, psi_(t+1) = {psi_next}")
                })?;
            }
            for t in 4..=t_max {
                let psi_t = |n: u64| psi(n).map(|x| x as i128).map_err(err_str);
                let lhs = psi_t(t + 1)? - psi_t(t)? - psi_t(t - 1)?;
                let mid = (t as i128 - 1) * fibonacci(t - 1).map_err(err_str)? as i128
                    - row(t - 2).b as i128;
                let phi_t = row(t).phi as i128;
                ensure(lhs == mid, || {
                    format!("t = {t}: psi difference {lhs}, (t-1)F_(t-1) - b_(t-2) = {mid}")
                })?;
                ensure(mid == phi_t, || {
                    format!("t = {t}: (t-1)F_(t-1) - b_(t-2) = {mid}, phi_t = {phi_t}")
                })?;
                let rec = row(t - 1).phi + row(t - 2).phi + row(t - 1).fib;
                ensure(row(t).phi == rec, || {
                    format!("t = {t}: phi_t = {}, recurrence gives {rec}", row(t).phi)
                })?;
            }
            Ok(())
        },
    )
}

pub fn sequence_anchors() -> Check {
    Check::new("tt1.anchors", &[], || {
        let table = sequence_table(3).map_err(err_str)?;
        let (e2, e3) = (table.rows[0].e, table.rows[1].e);
        let (p3, p4) = (psi(3).map_err(err_str)?, psi(4).map_err(err_str)?);
        ensure((e2, e3, p3, p4) == (1, 3, 1, 3), || {
            format!("e_2 = {e2}, e_3 = {e3}, psi_3 = {p3}, psi_4 = {p4}")
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn caps() {
        assert!(checks_for(Suite::All, 10_000, 30).is_err());
        assert!(checks_for(Suite::All, 8, 61).is_err());
        assert!(checks_for(Suite::All, 1, 10).is_err());
    }

    #[test]
    fn coprime_pair_list() {
        let pairs = coprime_pairs(3);
        assert_eq!(pairs, vec![(2, 3), (2, 5), (2, 7), (3, 4)]);
    }

    #[test]
    fn reports_are_sorted_and_failures_carry_detail() {
        let checks = vec![
            Check::new("b.pass", &[], || Ok(())),
            Check::new("a.fail", &[], || Err("counterexample: (1)".into())),
        ];
        let reports = run_checks(checks, 2, |_| {});
        assert_eq!(reports[0].check_name, "a.fail");
        assert_eq!(reports[0].status, Status::Fail);
        assert_eq!(reports[0].detail.as_deref(), Some("counterexample: (1)"));
        assert_eq!(reports[1].status, Status::Pass);
    }

    #[test]
    fn small_suite_passes() {
        let checks = checks_for(Suite::All, 5, 12).unwrap();
        for report in run_checks(checks, 4, |_| {}) {
            assert!(report.passed(), "{report}");
        }
    }
}
