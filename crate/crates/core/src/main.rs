use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gf4_circulant::analysis::{
    check_self_dual, macwilliams_check, BoundsTable, WeightEnumerator,
};
use gf4_circulant::report::{exit_code, to_json_line, to_json_lines, to_table};
use gf4_circulant::search::{
    analyze_vector, candidate_pipeline, sweep_symmetric, AnalyzeOptions, Strategy, SweepOptions,
};
use gf4_circulant::{candidate_vector, dense_family_vector, CandidateMode, Error, Execution, GeneratorVector};

/// Additive GF(4) codes from circulant graphs.
#[derive(Parser)]
#[command(name = "gf4-circulant", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum distance, self-duality and classification of a generator vector.
    Analyze {
        vector: String,
        /// Also compute the full weight enumerator.
        #[arg(long)]
        enumerator: bool,
        /// Largest subset size to search.
        #[arg(long, value_name = "K")]
        cap: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Full weight enumerator, checked against the MacWilliams identity.
    Weights {
        vector: String,
        #[command(flatten)]
        common: Common,
    },
    /// Self-orthogonality, row independence and self-duality.
    Verify {
        vector: String,
        #[arg(long)]
        json: bool,
    },
    /// Print a candidate vector (`--n --target --mode`) or a dense-family vector (`--dense`).
    Construct {
        #[arg(long, requires_all = ["target", "mode"], conflicts_with = "dense")]
        n: Option<usize>,
        #[arg(long = "target", short = 'L')]
        target: Option<usize>,
        #[arg(long)]
        mode: Option<CandidateMode>,
        #[arg(long, value_name = "N")]
        dense: Option<usize>,
    },
    /// Build and analyse both candidate vectors for an even length.
    Pipeline {
        n: usize,
        #[arg(long)]
        enumerator: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Analyse circulant-symmetric vectors of length n.
    Sweep {
        n: usize,
        #[arg(long, default_value_t = 4096)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep only codes with at least this distance (defaults to the lower bound, if known).
        #[arg(long)]
        target: Option<u32>,
        /// Report every analysed vector, even when a bound is known.
        #[arg(long, conflicts_with = "target")]
        all: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Graphviz DOT text of the circulant graph.
    ExportDot { vector: String },
}

#[derive(Args)]
struct Common {
    /// Lift the length guard on weight enumeration.
    #[arg(long)]
    allow_large: bool,
    /// Bounds file with lines `n L [U]`; entries override the built-in table.
    #[arg(long, value_name = "FILE")]
    bounds: Option<PathBuf>,
    /// Emit JSON lines instead of a table.
    #[arg(long)]
    json: bool,
    /// Run on one thread.
    #[arg(long)]
    sequential: bool,
    /// Report elapsed_ms as 0 so repeated runs are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

impl Common {
    fn options(&self) -> Result<AnalyzeOptions, Error> {
        let mut bounds = BoundsTable::embedded();
        if let Some(path) = &self.bounds {
            bounds.merge(&BoundsTable::load(path)?);
        }
        Ok(AnalyzeOptions {
            bounds,
            allow_large: self.allow_large,
            execution: self.execution(),
            timing: !self.no_timing,
            ..Default::default()
        })
    }

    fn execution(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}

fn run(command: Command) -> Result<String, Error> {
    match command {
        Command::Analyze { vector, enumerator, cap, common } => {
            let v = GeneratorVector::parse(&vector)?;
            let opts = AnalyzeOptions { cap, enumerator, ..common.options()? };
            let record = analyze_vector(&v, Strategy::Direct, &opts)?;
            Ok(render(&[record], common.json))
        }
        Command::Weights { vector, common } => {
            let v = GeneratorVector::parse(&vector)?;
            let opts = AnalyzeOptions { enumerator: true, ..common.options()? };
            let record = analyze_vector(&v, Strategy::Direct, &opts)?;
            if common.json {
                return Ok(to_json_line(&record) + "\n");
            }
            let counts = record.enumerator.clone().expect("enumerator was requested");
            let e = WeightEnumerator::from_counts(record.n, counts)?;
            let check = match macwilliams_check(&e) {
                Ok(()) => "MacWilliams identity: ok".to_string(),
                Err(v) => format!("MacWilliams identity: violated ({v})"),
            };
            Ok(format!("{}W(z) = {e}\n{check}\n", to_table(&[record])))
        }
        Command::Verify { vector, json } => {
            let v = GeneratorVector::parse(&vector)?;
            let report = check_self_dual(&v.expand());
            if json {
                Ok(serde_json::to_string(&report).expect("report serializes") + "\n")
            } else {
                Ok(format!(
                    "self_orthogonal {}\nindependent_rows {} (rank {})\nself_dual {}\nfirst_violation {}\n",
                    report.self_orthogonal,
                    report.independent_rows,
                    report.rank,
                    report.self_dual,
                    report
                        .first_violation
                        .map_or("none".to_string(), |(i, j)| format!("rows {i} and {j}")),
                ))
            }
        }
        Command::Construct { n, target, mode, dense } => {
            let v = match (n, dense) {
                (Some(n), None) => candidate_vector(
                    n,
                    target.expect("clap enforces --target"),
                    mode.expect("clap enforces --mode"),
                )?,
                (None, Some(d)) => dense_family_vector(d)?,
                _ => return Err(Error::Empty),
            };
            Ok(format!("{v}\n"))
        }
        Command::Pipeline { n, enumerator, common } => {
            let opts = AnalyzeOptions { enumerator, ..common.options()? };
            let records = candidate_pipeline(n, &opts)?;
            Ok(render(&records, true))
        }
        Command::Sweep { n, budget, seed, target, all, common } => {
            let analyze = common.options()?;
            let target = match (target, all) {
                (Some(t), _) => Some(t),
                (None, true) => None,
                (None, false) => analyze.bounds.get(n).map(|b| b.lower as u32),
            };
            let records = sweep_symmetric(n, &SweepOptions { budget, seed, target, analyze })?;
            Ok(render(&records, true))
        }
        Command::ExportDot { vector } => Ok(GeneratorVector::parse(&vector)?.to_dot()),
    }
}

fn render(records: &[gf4_circulant::search::ReportRecord], json: bool) -> String {
    if json {
        to_json_lines(records)
    } else {
        to_table(records)
    }
}
