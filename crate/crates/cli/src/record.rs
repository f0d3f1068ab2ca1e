//! Per-run statistics records and their CSV form.
//!
//! The CSV layout is fixed: one header, then one row per run with the
//! columns below, all fields numeric or token-safe so no quoting is ever
//! needed. Percentages are stored as integer permille to keep the file
//! float-free.

use std::fmt;
use std::fs::OpenOptions;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunStatus {
    Optimal,
    Timeout,
    Error,
}

impl RunStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RunStatus::Optimal => "optimal",
            RunStatus::Timeout => "timeout",
            RunStatus::Error => "error",
        }
    }
}

impl fmt::Display for RunStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Seesaw share of the coloring extraction, in permille (0 when no seesaw
/// rounds were played).
pub fn percent_permille(color_wins: u64, partition_wins: u64) -> u32 {
    (1000 * color_wins)
        .checked_div(color_wins + partition_wins)
        .unwrap_or(0) as u32
}

/// One solver run, as it appears in the benchmark CSV.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunRecord {
    pub instance: String,
    pub k: u32,
    pub bound: String,
    pub status: RunStatus,
    pub size: usize,
    pub nodes: u64,
    pub time_ms: u64,
    pub color_wins: u64,
    pub partition_wins: u64,
    pub percent_color: u32,
}

impl RunRecord {
    pub const CSV_HEADER: &'static str =
        "instance,k,bound,status,size,nodes,time_ms,color_wins,partition_wins,percent_color";

    /// Placeholder row for an instance that failed to parse.
    pub fn error(instance: &str, k: u32, bound: &str) -> Self {
        RunRecord {
            instance: instance.to_string(),
            k,
            bound: bound.to_string(),
            status: RunStatus::Error,
            size: 0,
            nodes: 0,
            time_ms: 0,
            color_wins: 0,
            partition_wins: 0,
            percent_color: 0,
        }
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.instance,
            self.k,
            self.bound,
            self.status,
            self.size,
            self.nodes,
            self.time_ms,
            self.color_wins,
            self.partition_wins,
            self.percent_color
        )
    }
}

/// Append-mode CSV sink; writes the header only when the file is new or
/// empty, so repeated runs keep extending the same file.
pub struct CsvWriter {
    out: BufWriter<std::fs::File>,
}

impl CsvWriter {
    pub fn open(path: &Path) -> Result<Self> {
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .with_context(|| format!("opening {}", path.display()))?;
        let needs_header = file.metadata().map(|m| m.len() == 0).unwrap_or(true);
        let mut out = BufWriter::new(file);
        if needs_header {
            writeln!(out, "{}", RunRecord::CSV_HEADER)?;
        }
        Ok(CsvWriter { out })
    }

    pub fn write_record(&mut self, record: &RunRecord) -> Result<()> {
        writeln!(self.out, "{}", record.csv_line())?;
        self.out.flush()?;
        Ok(())
    }
}
