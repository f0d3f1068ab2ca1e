//! The three commands: solve, bench, oracle.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use kplex_core::oracle::max_kplex_bruteforce;
use kplex_core::solver::solve;
use kplex_core::{BoundKind, SolveReport};

use crate::load::{load_instance, FormatChoice, LoadedInstance};
use crate::record::{percent_permille, CsvWriter, RunRecord, RunStatus};

#[derive(Debug)]
pub struct SolveOutcome {
    pub record: RunRecord,
    /// Best k-plex in the instance's own vertex labels, ascending.
    pub witness: Vec<u64>,
    pub report: SolveReport,
}

/// Parses one instance and solves it to optimality or cutoff.
pub fn run_solve(
    path: &Path,
    k: u32,
    bound: BoundKind,
    cutoff: Duration,
    format: FormatChoice,
) -> Result<SolveOutcome> {
    if k < 1 {
        bail!("k must be >= 1");
    }
    let instance = load_instance(path, format)?;
    let report = solve(&instance.graph, k, bound, cutoff).context("solver rejected arguments")?;
    Ok(outcome_from_report(&instance, k, bound, report))
}

fn outcome_from_report(
    instance: &LoadedInstance,
    k: u32,
    bound: BoundKind,
    report: SolveReport,
) -> SolveOutcome {
    let mut witness: Vec<u64> = report
        .best
        .iter()
        .map(|&v| instance.labels[v as usize])
        .collect();
    witness.sort_unstable();
    let status = if report.optimal {
        RunStatus::Optimal
    } else {
        RunStatus::Timeout
    };
    let record = RunRecord {
        instance: instance.name.clone(),
        k,
        bound: bound.name().to_string(),
        status,
        size: report.size,
        nodes: report.nodes,
        time_ms: report.elapsed.as_millis() as u64,
        color_wins: report.color_wins,
        partition_wins: report.partition_wins,
        percent_color: percent_permille(report.color_wins, report.partition_wins),
    };
    SolveOutcome {
        record,
        witness,
        report,
    }
}

pub fn solve_summary(o: &SolveOutcome) -> String {
    let r = &o.record;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{}: k={} bound={} -> size {} ({})",
        r.instance, r.k, r.bound, r.size, r.status
    );
    let _ = writeln!(
        s,
        "  nodes={} bound_calls={} time={}ms seesaw color={} partition={} ({} permille color)",
        r.nodes, o.report.bound_calls, r.time_ms, r.color_wins, r.partition_wins, r.percent_color
    );
    let _ = writeln!(
        s,
        "  vertices: {}",
        o.witness
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    s
}

pub struct BenchConfig {
    pub k_list: Vec<u32>,
    pub bounds: Vec<BoundKind>,
    pub cutoff: Duration,
    pub format: FormatChoice,
    pub jobs: usize,
    pub csv_out: Option<PathBuf>,
}

/// Runs the Cartesian product of directory instances, k values, and bounds.
/// Unparseable files become `status=error` rows instead of failing the
/// bench. Returns records in task order; CSV rows are appended as runs
/// finish, serialized through one writer.
pub fn run_bench(dir: &Path, cfg: &BenchConfig) -> Result<Vec<RunRecord>> {
    if cfg.k_list.iter().any(|&k| k < 1) {
        bail!("k must be >= 1");
    }
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("reading directory {}", dir.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    if paths.is_empty() {
        eprintln!("warning: no instance files in {}", dir.display());
    }

    // Parse each instance once, up front; failures stay as error stubs.
    let instances: Vec<(String, Result<LoadedInstance>)> = paths
        .iter()
        .map(|p| {
            let name = p
                .file_name()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| p.display().to_string());
            (name, load_instance(p, cfg.format))
        })
        .collect();

    struct Task {
        instance: usize,
        k: u32,
        bound: BoundKind,
    }
    let mut tasks = Vec::new();
    for instance in 0..instances.len() {
        for &k in &cfg.k_list {
            for &bound in &cfg.bounds {
                tasks.push(Task { instance, k, bound });
            }
        }
    }

    let writer = match &cfg.csv_out {
        Some(path) => Some(Mutex::new(CsvWriter::open(path)?)),
        None => None,
    };
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<RunRecord>>> =
        tasks.iter().map(|_| Mutex::new(None)).collect();
    let failures = Mutex::new(Vec::<anyhow::Error>::new());

    let workers = cfg.jobs.max(1).min(tasks.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                let Some(task) = tasks.get(idx) else { break };
                let (name, parsed) = &instances[task.instance];
                let record = match parsed {
                    Ok(instance) => {
                        match solve(&instance.graph, task.k, task.bound, cfg.cutoff) {
                            Ok(report) => {
                                outcome_from_report(instance, task.k, task.bound, report).record
                            }
                            Err(_) => RunRecord::error(name, task.k, task.bound.name()),
                        }
                    }
                    Err(_) => RunRecord::error(name, task.k, task.bound.name()),
                };
                if let Some(writer) = &writer {
                    let mut w = writer.lock().unwrap();
                    if let Err(e) = w.write_record(&record) {
                        failures.lock().unwrap().push(e);
                    }
                }
                *slots[idx].lock().unwrap() = Some(record);
            });
        }
    });

    if let Some(e) = failures.into_inner().unwrap().into_iter().next() {
        return Err(e);
    }
    Ok(slots
        .into_iter()
        .map(|slot| slot.into_inner().unwrap().expect("task completed"))
        .collect())
}

/// Solved-instance counts per (k, bound) pair.
pub fn bench_summary(records: &[RunRecord], k_list: &[u32], bounds: &[BoundKind]) -> String {
    let mut solved: BTreeMap<(u32, &str), usize> = BTreeMap::new();
    for r in records {
        if r.status == RunStatus::Optimal {
            *solved.entry((r.k, r.bound.as_str())).or_default() += 1;
        }
    }
    let instances = records.len() / k_list.len().max(1) / bounds.len().max(1);
    let mut s = format!("solved instances (of {instances}) per k and bound:\n");
    let _ = write!(s, "{:>6}", "k");
    for b in bounds {
        let _ = write!(s, "{:>10}", b.name());
    }
    s.push('\n');
    for &k in k_list {
        let _ = write!(s, "{k:>6}");
        for b in bounds {
            let count = solved.get(&(k, b.name())).copied().unwrap_or(0);
            let _ = write!(s, "{count:>10}");
        }
        s.push('\n');
    }
    s
}

#[derive(Debug)]
pub struct OracleOutcome {
    pub size: usize,
    /// Witness in the instance's own vertex labels, ascending.
    pub witness: Vec<u64>,
}

/// Brute-forces a small instance for ground truth.
pub fn run_oracle(path: &Path, k: u32, format: FormatChoice) -> Result<OracleOutcome> {
    if k < 1 {
        bail!("k must be >= 1");
    }
    let instance = load_instance(path, format)?;
    let result = max_kplex_bruteforce(&instance.graph, k)?;
    let mut witness: Vec<u64> = result
        .witness
        .iter()
        .map(|&v| instance.labels[v as usize])
        .collect();
    witness.sort_unstable();
    Ok(OracleOutcome {
        size: result.size,
        witness,
    })
}
