//! Command behavior: records, CSV accounting, exit codes, determinism.

mod common;

use std::fs;
use std::process::Command;
use std::time::Duration;

use common::fixture;
use kplex_cli::{
    load_instance, run_bench, run_oracle, run_solve, BenchConfig, CsvWriter, FormatChoice,
    RunRecord, RunStatus,
};
use kplex_core::BoundKind;

const CUTOFF: Duration = Duration::from_secs(1800);

#[test]
fn solve_partition_fixture_is_optimal_size_3() {
    let o = run_solve(
        &fixture("partition_wins.clq"),
        2,
        BoundKind::RelaxPub,
        CUTOFF,
        FormatChoice::Auto,
    )
    .unwrap();
    assert_eq!(o.record.status, RunStatus::Optimal);
    assert_eq!(o.record.size, 3);
}

#[test]
fn solve_cycle_with_plain_color_bound() {
    let o = run_solve(
        &fixture("cycle5.clq"),
        2,
        BoundKind::Gcb,
        CUTOFF,
        FormatChoice::Auto,
    )
    .unwrap();
    assert_eq!(o.record.size, 3);
    assert_eq!(o.record.bound, "gcb");
}

#[test]
fn solve_rejects_k_zero() {
    let err = run_solve(
        &fixture("cycle5.clq"),
        0,
        BoundKind::Gcb,
        CUTOFF,
        FormatChoice::Auto,
    )
    .unwrap_err();
    assert!(err.to_string().contains("k must be"));
}

#[test]
fn solve_is_deterministic_apart_from_time() {
    let run = || {
        run_solve(
            &fixture("rules_demo.clq"),
            4,
            BoundKind::RelaxPub,
            CUTOFF,
            FormatChoice::Auto,
        )
        .unwrap()
    };
    let (a, b) = (run(), run());
    assert_eq!(a.record.size, b.record.size);
    assert_eq!(a.record.nodes, b.record.nodes);
    assert_eq!(a.record.color_wins, b.record.color_wins);
    assert_eq!(a.record.partition_wins, b.record.partition_wins);
    assert_eq!(a.witness, b.witness);
}

#[test]
fn oracle_command_reports_witness_in_original_labels() {
    let o = run_oracle(&fixture("cycle5.clq"), 2, FormatChoice::Auto).unwrap();
    assert_eq!(o.size, 3);
    assert_eq!(o.witness.len(), 3);
    assert!(o.witness.iter().all(|&v| (1..=5).contains(&v)));

    // edge-list labels survive the id compaction
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tiny.edges");
    fs::write(&path, "# comment\n10 20\n20 30\n").unwrap();
    let o = run_oracle(&path, 1, FormatChoice::Auto).unwrap();
    assert_eq!(o.size, 2);
    assert!(o.witness.iter().all(|v| [10u64, 20, 30].contains(v)));
}

#[test]
fn oracle_refuses_oversized_instances() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.clq");
    fs::write(&path, kplex_core::Graph::from_edges(30, &[(0, 1)]).to_dimacs()).unwrap();
    let err = run_oracle(&path, 2, FormatChoice::Auto).unwrap_err();
    assert!(err.to_string().contains("at most"));
}

#[test]
fn load_respects_format_hint() {
    // The edge-list parser must choke on a DIMACS file when forced.
    assert!(load_instance(&fixture("cycle5.clq"), FormatChoice::EdgeList).is_err());
    assert!(load_instance(&fixture("cycle5.clq"), FormatChoice::Dimacs).is_ok());
}

fn bench_fixture_dir() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    for name in ["cycle5.clq", "color_wins.clq", "partition_wins.clq"] {
        fs::copy(fixture(name), dir.path().join(name)).unwrap();
    }
    dir
}

#[test]
fn bench_row_count_is_the_cartesian_product() {
    let dir = bench_fixture_dir();
    let csv = dir.path().join("out.csv");
    let cfg = BenchConfig {
        k_list: vec![2, 3],
        bounds: vec![BoundKind::Gcb, BoundKind::RelaxPub],
        cutoff: CUTOFF,
        format: FormatChoice::Auto,
        jobs: 1,
        csv_out: Some(csv.clone()),
    };
    let records = run_bench(dir.path(), &cfg).unwrap();
    assert_eq!(records.len(), 12);
    assert!(records.iter().all(|r| r.status == RunStatus::Optimal));

    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(RunRecord::CSV_HEADER));
    assert_eq!(lines.count(), 12);
}

#[test]
fn bench_on_empty_dir_writes_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let cfg = BenchConfig {
        k_list: vec![2],
        bounds: vec![BoundKind::Gcb],
        cutoff: CUTOFF,
        format: FormatChoice::Auto,
        jobs: 1,
        csv_out: Some(csv.clone()),
    };
    let records = run_bench(dir.path(), &cfg).unwrap();
    assert!(records.is_empty());
    assert_eq!(fs::read_to_string(&csv).unwrap().trim(), RunRecord::CSV_HEADER);
}

#[test]
fn bench_records_corrupt_files_as_error_rows() {
    let dir = bench_fixture_dir();
    fs::remove_file(dir.path().join("color_wins.clq")).unwrap();
    fs::write(dir.path().join("broken.clq"), "p edge 2 1\ne 1 nonsense\n").unwrap();
    let cfg = BenchConfig {
        k_list: vec![2],
        bounds: vec![BoundKind::Gcb, BoundKind::RelaxPub],
        cutoff: CUTOFF,
        format: FormatChoice::Auto,
        jobs: 1,
        csv_out: None,
    };
    let records = run_bench(dir.path(), &cfg).unwrap();
    assert_eq!(records.len(), 6);
    let errors: Vec<&RunRecord> = records
        .iter()
        .filter(|r| r.status == RunStatus::Error)
        .collect();
    assert_eq!(errors.len(), 2);
    assert!(errors.iter().all(|r| r.instance == "broken.clq" && r.size == 0));
}

#[test]
fn bench_is_stable_across_thread_counts() {
    let dir = bench_fixture_dir();
    let cfg = |jobs| BenchConfig {
        k_list: vec![2, 3],
        bounds: vec![BoundKind::RelaxPub],
        cutoff: CUTOFF,
        format: FormatChoice::Auto,
        jobs,
        csv_out: None,
    };
    let strip_time = |mut rs: Vec<RunRecord>| {
        for r in &mut rs {
            r.time_ms = 0;
        }
        rs
    };
    let serial = strip_time(run_bench(dir.path(), &cfg(1)).unwrap());
    let parallel = strip_time(run_bench(dir.path(), &cfg(3)).unwrap());
    assert_eq!(serial, parallel);
}

#[test]
fn csv_appends_without_repeating_the_header() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let record = RunRecord::error("a.clq", 2, "gcb");
    CsvWriter::open(&path).unwrap().write_record(&record).unwrap();
    CsvWriter::open(&path).unwrap().write_record(&record).unwrap();
    let text = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], RunRecord::CSV_HEADER);
    assert_eq!(lines[1], lines[2]);
}

fn kplex_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kplex"))
}

#[test]
fn binary_exit_codes() {
    let ok = kplex_bin()
        .args(["solve"])
        .arg(fixture("cycle5.clq"))
        .args(["--k", "2"])
        .output()
        .unwrap();
    assert!(ok.status.success(), "{}", String::from_utf8_lossy(&ok.stderr));
    let stdout = String::from_utf8_lossy(&ok.stdout);
    assert!(stdout.contains("size 3"));

    let bad_k = kplex_bin()
        .args(["solve"])
        .arg(fixture("cycle5.clq"))
        .args(["--k", "0"])
        .output()
        .unwrap();
    assert_eq!(bad_k.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_k.stderr).contains("k must be"));

    let bad_bound = kplex_bin()
        .args(["solve"])
        .arg(fixture("cycle5.clq"))
        .args(["--k", "2", "--bound", "fancy"])
        .output()
        .unwrap();
    assert_eq!(bad_bound.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_bound.stderr).contains("unknown bound"));

    let missing = kplex_bin()
        .args(["solve", "no-such-file.clq", "--k", "2"])
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn binary_oracle_output() {
    let out = kplex_bin()
        .args(["oracle"])
        .arg(fixture("cycle5.clq"))
        .args(["--k", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("size 3"));
}
