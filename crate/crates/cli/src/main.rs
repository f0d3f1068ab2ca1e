use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use kplex_cli::{
    bench_summary, run_bench, run_oracle, run_solve, solve_summary, BenchConfig, CsvWriter,
    FormatChoice,
};
use kplex_core::BoundKind;

#[derive(Parser)]
#[command(name = "kplex", version, about = "Exact maximum k-plex solver and benchmark harness")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Auto,
    Dimacs,
    Edgelist,
}

impl From<FormatArg> for FormatChoice {
    fn from(f: FormatArg) -> FormatChoice {
        match f {
            FormatArg::Auto => FormatChoice::Auto,
            FormatArg::Dimacs => FormatChoice::Dimacs,
            FormatArg::Edgelist => FormatChoice::EdgeList,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve one instance to optimality or cutoff
    Solve {
        path: PathBuf,
        /// Relaxation parameter: members tolerate at most k non-neighbors
        #[arg(long)]
        k: u32,
        /// Upper bound: gcb|norules|relaxgcb|disepub|gcbpub|relaxpub
        #[arg(long, default_value = "relaxpub")]
        bound: String,
        /// Per-run cutoff in seconds
        #[arg(long, default_value_t = 1800)]
        cutoff: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
        /// Append the run record to this CSV file
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Solve every instance in a directory for each k and bound
    Bench {
        dir: PathBuf,
        /// Comma-separated k values
        #[arg(long = "k-list", value_delimiter = ',', default_value = "2")]
        k_list: Vec<u32>,
        /// Comma-separated bound names
        #[arg(long = "bound-list", value_delimiter = ',', default_value = "relaxpub")]
        bound_list: Vec<String>,
        /// Per-run cutoff in seconds
        #[arg(long, default_value_t = 1800)]
        cutoff: u64,
        /// CSV file to append run records to
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Concurrent solver threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
    },
    /// Exhaustively verify the maximum of a small instance
    Oracle {
        path: PathBuf,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
    },
}

fn parse_bounds(names: &[String]) -> anyhow::Result<Vec<BoundKind>> {
    names.iter().map(|n| Ok(n.parse::<BoundKind>()?)).collect()
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Cmd::Solve {
            path,
            k,
            bound,
            cutoff,
            format,
            csv,
        } => {
            let bound: BoundKind = bound.parse()?;
            let outcome = run_solve(
                &path,
                k,
                bound,
                Duration::from_secs(cutoff),
                format.into(),
            )?;
            print!("{}", solve_summary(&outcome));
            if let Some(csv) = csv {
                CsvWriter::open(&csv)?.write_record(&outcome.record)?;
            }
        }
        Cmd::Bench {
            dir,
            k_list,
            bound_list,
            cutoff,
            csv,
            jobs,
            format,
        } => {
            let bounds = parse_bounds(&bound_list)?;
            let cfg = BenchConfig {
                k_list: k_list.clone(),
                bounds: bounds.clone(),
                cutoff: Duration::from_secs(cutoff),
                format: format.into(),
                jobs,
                csv_out: csv,
            };
            let records = run_bench(&dir, &cfg)?;
            print!("{}", bench_summary(&records, &k_list, &bounds));
        }
        Cmd::Oracle { path, k, format } => {
            let outcome = run_oracle(&path, k, format.into())?;
            println!("size {}", outcome.size);
            println!(
                "vertices: {}",
                outcome
                    .witness
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
