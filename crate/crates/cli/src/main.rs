//! `mtrace`: command-line front end for the block Minkowski trace checks.
//!
//! Exit status: 0 when every reported check is satisfied, 1 on usage or
//! input errors, 2 when at least one check is violated.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minkowski_trace::linalg::read_matrix;
use minkowski_trace::tolerance::DEFAULT_SLACK_REL;
use minkowski_trace::{
    make_partition, mutual_information, run_campaign, scan_p, scan_partitions,
    verify_all_permutations, verify_density, verify_hermitian, verify_shifted_scalar,
    verify_vector, CampaignMode, CampaignSpec, InequalityReport, PermutationMode, ProbabilityGrid,
    RngSeed,
};

use output::{emit_fuzz, emit_rows, Context, Format, Row};

#[derive(Parser)]
#[command(
    name = "mtrace",
    version,
    about = "Numerical checks of the block Minkowski trace inequality"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Relative slack separating a violation from round-off noise.
    #[arg(long, default_value_t = DEFAULT_SLACK_REL)]
    tolerance: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct PartitionArgs {
    /// Number of diagonal blocks.
    #[arg(long)]
    n: usize,
    /// Block size.
    #[arg(long)]
    m: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Check one matrix file at one exponent.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        partition: PartitionArgs,
        #[arg(long)]
        p: f64,
        /// Treat the input as Hermitian and check A + x·I with x = SHIFT.
        #[arg(long, conflicts_with_all = ["permutations", "perm_samples"])]
        shift: Option<f64>,
        /// Also check all N! index permutations of the state (N ≤ 8).
        #[arg(long, conflicts_with = "perm_samples")]
        permutations: bool,
        /// Check this many random index permutations instead.
        #[arg(long)]
        perm_samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check one density matrix over a range of exponents.
    ScanP {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        partition: PartitionArgs,
        #[arg(long)]
        p_min: f64,
        #[arg(long)]
        p_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Spacing::Linear)]
        spacing: Spacing,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Seeded campaign over random states.
    Fuzz {
        /// Matrix dimension; defaults to n·m.
        #[arg(long)]
        dim: Option<usize>,
        #[command(flatten)]
        partition: PartitionArgs,
        /// Comma-separated exponents.
        #[arg(long, value_delimiter = ',', required = true)]
        p_list: Vec<f64>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Rank of the random density matrices; defaults to dim.
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Mode::Density)]
        mode: Mode,
        /// Added to −λ_min in hermitian mode (default 0.1); the shift x in
        /// scalar mode (default 0, the unshifted vector inequality).
        #[arg(long)]
        shift_margin: Option<f64>,
        /// Emit every check, not only the summary.
        #[arg(long)]
        per_trial: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a probability grid.
    Scalar {
        /// Grid values as positional numbers.
        values: Vec<String>,
        /// Grid values as a CSV row or JSON array.
        #[arg(long = "values", value_name = "LIST", conflicts_with = "values")]
        values_flag: Option<String>,
        #[command(flatten)]
        partition: PartitionArgs,
        #[arg(long)]
        p: f64,
        /// Compare 𝒫₁ and 𝒫₂ at this shift instead of the plain vector form.
        #[arg(long)]
        x: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check one density matrix under every admissible block partition.
    Partitions {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        max_padding: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Density,
    Hermitian,
    Scalar,
}

impl From<Mode> for CampaignMode {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Density => CampaignMode::Density,
            Mode::Hermitian => CampaignMode::Hermitian,
            Mode::Scalar => CampaignMode::Scalar,
        }
    }
}

type CliResult<T> = Result<T, String>;

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn check_tolerance(tol: f64) -> CliResult<()> {
    if !tol.is_finite() || tol < 0.0 {
        return Err(format!("tolerance {tol} must be finite and >= 0"));
    }
    Ok(())
}

fn exponent_grid(p_min: f64, p_max: f64, steps: usize, spacing: Spacing) -> CliResult<Vec<f64>> {
    if !(p_min.is_finite() && p_max.is_finite()) || p_min <= 0.0 || p_min > p_max {
        return Err(format!("need 0 < p-min <= p-max, got {p_min}..{p_max}"));
    }
    if steps == 0 {
        return Err("steps must be at least 1".into());
    }
    if p_min == p_max {
        return Ok(vec![p_min]);
    }
    if steps == 1 {
        return Err("steps must be at least 2 when p-min < p-max".into());
    }
    let last = (steps - 1) as f64;
    let mut grid: Vec<f64> = (0..steps)
        .map(|i| {
            let t = i as f64 / last;
            match spacing {
                Spacing::Linear => p_min + t * (p_max - p_min),
                Spacing::Log => p_min * (p_max / p_min).powf(t),
            }
        })
        .collect();
    grid[steps - 1] = p_max;
    Ok(grid)
}

fn parse_values(positional: &[String], flag: Option<&str>) -> CliResult<Vec<f64>> {
    let text = match flag {
        Some(s) => s.to_string(),
        None => positional.join(" "),
    };
    let text = text.trim();
    if text.starts_with('[') {
        return serde_json::from_str(text).map_err(|e| format!("grid values: {e}"));
    }
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| format!("grid values: cannot parse {s:?}"))
        })
        .collect()
}

fn load(path: &std::path::Path) -> CliResult<minkowski_trace::ComplexMatrix> {
    read_matrix(path).map_err(|e| match e {
        // read errors already carry the path
        minkowski_trace::Error::InvalidMatrix(msg) if msg.starts_with(&*path.to_string_lossy()) => {
            msg
        }
        e => format!("{}: {e}", path.display()),
    })
}

fn rows_of(reports: impl IntoIterator<Item = InequalityReport>, tolerance: f64) -> Vec<Row> {
    reports
        .into_iter()
        .map(|r| Row::new(r.with_slack(tolerance).record()))
        .collect()
}

fn status(rows: &[Row]) -> ExitCode {
    if rows.iter().all(|r| r.record.satisfied) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn emit(rows: &[Row], output: &OutputArgs, with_mi: bool) -> CliResult<ExitCode> {
    emit_rows(rows, output.format, with_mi).map_err(fail)?;
    Ok(status(rows))
}

fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Verify {
            input,
            partition,
            p,
            shift,
            permutations,
            perm_samples,
            seed,
            output,
        } => {
            check_tolerance(output.tolerance)?;
            let a = load(&input)?;
            let part = make_partition(a.dim(), partition.n, partition.m).map_err(fail)?;
            let mode = match (permutations, perm_samples) {
                (true, _) => Some(PermutationMode::Exhaustive),
                (false, Some(count)) => Some(PermutationMode::Sampled {
                    count,
                    seed: RngSeed(seed),
                }),
                (false, None) => None,
            };
            let rows = if let Some(mode) = mode {
                verify_all_permutations(&a, &part, p, mode)
                    .map_err(fail)?
                    .into_iter()
                    .map(|(sigma, report)| Row {
                        context: Context {
                            permutation: Some(sigma.to_string()),
                            ..Context::default()
                        },
                        ..Row::new(report.with_slack(output.tolerance).record())
                    })
                    .collect()
            } else {
                let report = match shift {
                    Some(x) => verify_hermitian(&a, &part, p, x),
                    None => verify_density(&a, &part, p),
                }
                .map_err(fail)?;
                rows_of([report], output.tolerance)
            };
            emit(&rows, &output, false)
        }
        Command::ScanP {
            input,
            partition,
            p_min,
            p_max,
            steps,
            spacing,
            output,
        } => {
            check_tolerance(output.tolerance)?;
            let ps = exponent_grid(p_min, p_max, steps, spacing)?;
            let rho = load(&input)?;
            let part = make_partition(rho.dim(), partition.n, partition.m).map_err(fail)?;
            let reports = scan_p(&rho, &part, &ps).map_err(fail)?;
            emit(&rows_of(reports, output.tolerance), &output, false)
        }
        Command::Fuzz {
            dim,
            partition,
            p_list,
            trials,
            rank,
            seed,
            mode,
            shift_margin,
            per_trial,
            output,
        } => {
            let dim = dim.unwrap_or(partition.n * partition.m);
            let default_margin = if mode == Mode::Hermitian { 0.1 } else { 0.0 };
            let spec = CampaignSpec {
                rank: rank.unwrap_or(dim),
                mode: mode.into(),
                shift_margin: shift_margin.unwrap_or(default_margin),
                slack_rel: output.tolerance,
                ..CampaignSpec::density(dim, partition.n, partition.m, p_list, trials, seed)
            };
            let outcome = run_campaign(&spec).map_err(fail)?;
            let rows: Option<Vec<Row>> = per_trial.then(|| {
                outcome
                    .records
                    .iter()
                    .map(|t| Row {
                        context: Context {
                            trial: Some(t.trial),
                            seed: Some(t.seed.0),
                            permutation: None,
                        },
                        ..Row::new(t.report.record())
                    })
                    .collect()
            });
            emit_fuzz(&outcome.summary, rows.as_deref(), output.format).map_err(fail)?;
            Ok(if outcome.summary.violations == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Scalar {
            values,
            values_flag,
            partition,
            p,
            x,
            output,
        } => {
            check_tolerance(output.tolerance)?;
            let values = parse_values(&values, values_flag.as_deref())?;
            let grid = ProbabilityGrid::new(partition.n, partition.m, values).map_err(fail)?;
            let report = match x {
                Some(x) => verify_shifted_scalar(&grid, x, p),
                None => verify_vector(&grid, p),
            }
            .map_err(fail)?;
            let mut row = Row::new(report.with_slack(output.tolerance).record());
            if grid.is_normalized() {
                row.mutual_information = Some(mutual_information(&grid).map_err(fail)?);
            } else {
                eprintln!("note: grid is not normalized; mutual information omitted");
            }
            emit(&[row], &output, true)
        }
        Command::Partitions {
            input,
            p,
            max_padding,
            output,
        } => {
            check_tolerance(output.tolerance)?;
            let rho = load(&input)?;
            let reports = scan_partitions(&rho, p, max_padding).map_err(fail)?;
            if reports.is_empty() {
                return Err(format!(
                    "no partition with n, m >= 2 fits dim {} with padding <= {max_padding}",
                    rho.dim()
                ));
            }
            emit(
                &rows_of(reports.into_iter().map(|(_, r)| r), output.tolerance),
                &output,
                false,
            )
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // help and version go to stdout and are not errors
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
