//! Exact enumeration and cross-verification of t-core partitions with
//! distinct parts and of (t, t+1)-core partitions with distinct parts.
//!
//! The modules build on one another:
//!
//! * [`partition`]: partitions, hook lengths, beta-sets;
//! * [`cores`]: hook-based and abacus-based core tests, brute-force enumerators;
//! * [`eta`]: the run-length encoding of t-cores by residue class;
//! * [`genfun`]: coefficients of the generating function of distinct-part t-cores;
//! * [`tt1`]: counts, extremes and total size of distinct-part (t, t+1)-cores;
//! * [`verify`]: the cross-check catalogue behind `corekit verify`.

pub mod cores;
pub mod error;
pub mod eta;
pub mod genfun;
pub mod partition;
pub mod report;
pub mod tt1;
pub mod verify;

pub use cores::{
    abacus_is_t_core, anderson_count, enumerate_partitions, enumerate_simultaneous_cores, is_core,
    olsson_stanton_max, CoreSpec, Partitions,
};
pub use error::{Error, Result};
pub use eta::{eta, eta_inverse, in_c_t, is_t_maximal, size_of_eta, EtaVector};
pub use genfun::{
    cd_series_closed, cd_series_eq2, cd_series_oracle, compare_series, CoefficientSeries,
};
pub use num_rational::Ratio;
pub use partition::{
    beta_distinct_criterion, beta_set, has_distinct_parts, hook_grid, make_partition,
    partition_of_beta, size_from_beta, BetaSet, HookGrid, Partition,
};
pub use report::{Status, TheoremReport};
pub use tt1::{
    average_size, count_tt1_distinct, enumerate_tt1_distinct, fibonacci, largest_size,
    maximizer_count, maximizers, nice_subsets, psi, sequence_table, total_size, NiceSubset,
    SequenceRow, SequenceTable,
};
