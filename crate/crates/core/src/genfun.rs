//! Coefficients of the generating function for t-core partitions with
//! distinct parts.
//!
//! Three independent routes produce the same series:
//!
//! * [`cd_series_eq2`] sums q^{size(v)} over η vectors v ∈ C_t,
//! * [`cd_series_closed`] expands the single/double sums known for t = 2, 3, 4,
//! * [`cd_series_oracle`] filters distinct-part partitions through the hook test.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cores::{enumerate_partitions, is_core, CoreSpec};
use crate::error::{Error, Result};
use crate::eta::for_each_core_vector;
use crate::report::{Status, TheoremReport};

/// Largest limit accepted by [`cd_series_oracle`].
pub const DEFAULT_ORACLE_CAP: usize = 80;

/// Largest limit accepted by the dense series routines.
pub const MAX_SERIES_LIMIT: usize = 1_000_000;

/// Exact coefficients c₀, …, c_N of a power series truncated after q^N.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientSeries {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    pub limit: usize,
    pub coeffs: Vec<u64>,
}

impl CoefficientSeries {
    pub fn zeros(t: Option<u64>, limit: usize) -> Self {
        CoefficientSeries {
            t,
            limit,
            coeffs: vec![0; limit + 1],
        }
    }

    /// Builds an untagged series from explicit coefficients.
    pub fn from_coeffs(coeffs: Vec<u64>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least c_0");
        CoefficientSeries {
            t: None,
            limit: coeffs.len() - 1,
            coeffs,
        }
    }

    fn bump(&mut self, exponent: u64) {
        if let Some(c) = self.coeffs.get_mut(exponent as usize) {
            *c += 1;
        }
    }

    /// One coefficient per line.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.coeffs.len() * 2);
        for c in &self.coeffs {
            s.push_str(&c.to_string());
            s.push('\n');
        }
        s
    }
}

fn check_t(t: u64) -> Result<()> {
    if t < 2 {
        return Err(Error::ModulusTooSmall { t, min: 2 });
    }
    Ok(())
}

fn check_limit(limit: usize, cap: usize) -> Result<()> {
    if limit > cap {
        return Err(Error::CapExceeded {
            what: "series limit",
            value: limit as u64,
            cap: cap as u64,
        });
    }
    Ok(())
}

/// cd_t(n) for n ≤ `limit`, summed over η vectors in C_t.
pub fn cd_series_eq2(t: u64, limit: usize) -> Result<CoefficientSeries> {
    check_t(t)?;
    check_limit(limit, MAX_SERIES_LIMIT)?;
    let mut series = CoefficientSeries::zeros(Some(t), limit);
    for_each_core_vector(t, limit as u64, true, |_, size| series.bump(size))?;
    Ok(series)
}

/// Expands the closed forms for t ∈ {2, 3, 4}.
pub fn cd_series_closed(t: u64, limit: usize) -> Result<CoefficientSeries> {
    check_limit(limit, MAX_SERIES_LIMIT)?;
    let n_max = limit as i64;
    let mut series = CoefficientSeries::zeros(Some(t), limit);
    let mut add = |e: i64| {
        if (0..=n_max).contains(&e) {
            series.bump(e as u64);
        }
    };
    match t {
        2 => {
            // Σ_{n≥0} q^{C(n+1,2)}
            for n in (0i64..).take_while(|n| n * (n + 1) / 2 <= n_max) {
                add(n * (n + 1) / 2);
            }
        }
        3 => {
            // Σ_{n≥1} q^{n²} + Σ_{n≥0} q^{2·C(n+1,2)}
            for n in (1i64..).take_while(|n| n * n <= n_max) {
                add(n * n);
            }
            for n in (0i64..).take_while(|n| n * (n + 1) <= n_max) {
                add(n * (n + 1));
            }
        }
        4 => {
            // Σ_{n≥1} q^{n(3n+1)/2} + Σ_{n,m≥0} q^{(n(3n−1) + 3m(m+1) − 2mn)/2}
            for n in (1i64..).take_while(|n| n * (3 * n + 1) / 2 <= n_max) {
                add(n * (3 * n + 1) / 2);
            }
            // The double-sum exponent is at least n² − n/2 + m², so this
            // square covers every term of degree ≤ limit.
            let side = ((2 * n_max) as f64).sqrt().ceil() as i64 + 2;
            for n in 0..=side {
                for m in 0..=side {
                    let twice = n * (3 * n - 1) + 3 * m * (m + 1) - 2 * m * n;
                    debug_assert!(twice >= 0 && twice % 2 == 0);
                    add(twice / 2);
                }
            }
        }
        _ => return Err(Error::NoClosedForm { t }),
    }
    Ok(series)
}

/// Brute force: counts distinct-part partitions of each n ≤ `limit` with no
/// hook of length t.
pub fn cd_series_oracle(t: u64, limit: usize) -> Result<CoefficientSeries> {
    cd_series_oracle_capped(t, limit, DEFAULT_ORACLE_CAP)
}

pub fn cd_series_oracle_capped(t: u64, limit: usize, cap: usize) -> Result<CoefficientSeries> {
    check_t(t)?;
    check_limit(limit, cap)?;
    let spec = CoreSpec::single(t)?;
    let mut series = CoefficientSeries::zeros(Some(t), limit);
    for n in 0..=limit {
        series.coeffs[n] = enumerate_partitions(n as u64, true)?
            .filter(|p| is_core(p, &spec))
            .count() as u64;
    }
    Ok(series)
}

/// Coefficient-wise comparison. Fails with [`Error::LimitMismatch`] when the
/// two series are truncated at different degrees.
pub fn compare_series(a: &CoefficientSeries, b: &CoefficientSeries) -> Result<TheoremReport> {
    let start = Instant::now();
    if a.limit != b.limit {
        return Err(Error::LimitMismatch {
            left: a.limit,
            right: b.limit,
        });
    }
    let mut params = BTreeMap::new();
    params.insert("limit".to_string(), a.limit.to_string());
    if let Some(t) = a.t.or(b.t) {
        params.insert("t".to_string(), t.to_string());
    }
    let divergence = a.coeffs.iter().zip(&b.coeffs).position(|(x, y)| x != y);
    let (status, detail) = match divergence {
        None => (Status::Pass, None),
        Some(i) => (
            Status::Fail,
            Some(format!(
                "first divergence at index {i}: {} vs {}",
                a.coeffs[i], b.coeffs[i]
            )),
        ),
    };
    Ok(TheoremReport {
        check_name: "genfun.compare".to_string(),
        params,
        status,
        detail,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
