//! Serialized shapes of command output. Field order here is the canonical
//! JSON order.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use corekit::{Partition, TheoremReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRecord {
    pub parts: Vec<u64>,
    pub size: u64,
    pub beta: Vec<u64>,
}

impl From<&Partition> for PartitionRecord {
    fn from(p: &Partition) -> Self {
        PartitionRecord {
            parts: p.parts().to_vec(),
            size: p.size(),
            beta: p.beta_set().elements().to_vec(),
        }
    }
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

impl PartitionRecord {
    fn text(&self) -> String {
        let parts = if self.parts.is_empty() {
            "∅".to_string()
        } else {
            format!("({})", join(&self.parts))
        };
        format!("{parts}\tsize {}\tbeta {{{}}}", self.size, join(&self.beta))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateOutput {
    pub t1: u64,
    pub t2: u64,
    pub distinct: bool,
    pub count: usize,
    pub partitions: Vec<PartitionRecord>,
}

impl EnumerateOutput {
    pub fn write_text(&self, out: &mut impl Write) -> io::Result<()> {
        let kind = if self.distinct {
            " with distinct parts"
        } else {
            ""
        };
        writeln!(
            out,
            "# {} ({},{})-core partitions{kind}",
            self.count, self.t1, self.t2
        )?;
        for p in &self.partitions {
            writeln!(out, "{}", p.text())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsOutput {
    pub t: u64,
    pub count: u128,
    pub largest_size: u64,
    pub maximizer_count: u8,
    pub maximizers: Vec<PartitionRecord>,
    pub total_size: u128,
    /// Exact reduced fraction, e.g. "9/5".
    pub average: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub average_decimal: Option<String>,
}

impl StatsOutput {
    pub fn write_text(&self, out: &mut impl Write) -> io::Result<()> {
        writeln!(out, "t: {}", self.t)?;
        writeln!(out, "count: {}", self.count)?;
        writeln!(out, "largest size: {}", self.largest_size)?;
        writeln!(out, "maximizer count: {}", self.maximizer_count)?;
        for p in &self.maximizers {
            writeln!(out, "maximizer: {}", p.text())?;
        }
        writeln!(out, "total size: {}", self.total_size)?;
        writeln!(out, "average size: {}", self.average)?;
        if let Some(d) = &self.average_decimal {
            writeln!(out, "average size (decimal): {d}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub suite: String,
    pub t_max: u64,
    pub n_max: u64,
    pub passed: bool,
    pub reports: Vec<TheoremReport>,
}

impl VerifyOutput {
    pub fn write_text(&self, out: &mut impl Write) -> io::Result<()> {
        for r in &self.reports {
            writeln!(out, "{r}")?;
        }
        let failed = self.reports.iter().filter(|r| !r.passed()).count();
        writeln!(
            out,
            "{} of {} checks passed",
            self.reports.len() - failed,
            self.reports.len()
        )
    }
}
