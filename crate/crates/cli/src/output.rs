//! JSON and CSV emission. CSV cells are rendered with serde_json so both
//! formats carry byte-identical numbers.

use std::io::{self, Write};

use clap::ValueEnum;
use minkowski_trace::report::CSV_COLUMNS;
use minkowski_trace::{CampaignSummary, ReportRecord};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A report with optional leading context columns (trial, seed, permutation)
/// and trailing extras (mutual information).
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    #[serde(flatten)]
    pub context: Context,
    #[serde(flatten)]
    pub record: ReportRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutual_information: Option<f64>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Context {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<String>,
}

impl Row {
    pub fn new(record: ReportRecord) -> Self {
        Self {
            context: Context::default(),
            record,
            mutual_information: None,
        }
    }
}

fn cell<T: Serialize>(value: &T) -> String {
    let s = serde_json::to_string(value).expect("plain values serialize");
    s.trim_matches('"').to_string()
}

fn record_cells(r: &ReportRecord) -> Vec<String> {
    vec![
        cell(&r.p),
        cell(&r.x),
        cell(&r.n),
        cell(&r.m),
        cell(&r.padding),
        cell(&r.lhs),
        cell(&r.rhs),
        cell(&r.j_value),
        cell(&r.margin),
        cell(&r.direction),
        cell(&r.satisfied),
    ]
}

/// Context columns are included when the first row has them; the
/// mutual-information column when `with_mi` is set (empty cell if absent).
fn write_csv(rows: &[Row], with_mi: bool, out: impl Write) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let first = rows.first().map(|r| r.context.clone()).unwrap_or_default();
    let mut header: Vec<&str> = Vec::new();
    if first.trial.is_some() {
        header.push("trial");
    }
    if first.seed.is_some() {
        header.push("seed");
    }
    if first.permutation.is_some() {
        header.push("permutation");
    }
    header.extend(CSV_COLUMNS);
    if with_mi {
        header.push("mutual_information");
    }
    w.write_record(&header)?;
    for row in rows {
        let mut cells = Vec::with_capacity(header.len());
        if let Some(t) = row.context.trial {
            cells.push(cell(&t));
        }
        if let Some(s) = row.context.seed {
            cells.push(cell(&s));
        }
        if let Some(p) = &row.context.permutation {
            cells.push(p.clone());
        }
        cells.extend(record_cells(&row.record));
        if with_mi {
            cells.push(row.mutual_information.map(|v| cell(&v)).unwrap_or_default());
        }
        w.write_record(&cells)?;
    }
    w.flush()
}

/// One row is printed as a JSON object, several as an array.
pub fn emit_rows(rows: &[Row], format: Format, with_mi: bool) -> io::Result<()> {
    let stdout = io::stdout().lock();
    match format {
        Format::Csv => write_csv(rows, with_mi, stdout),
        Format::Json => {
            let mut out = stdout;
            match rows {
                [single] => serde_json::to_writer_pretty(&mut out, single)?,
                _ => serde_json::to_writer_pretty(&mut out, rows)?,
            }
            writeln!(out)
        }
    }
}

#[derive(Serialize)]
struct FuzzJson<'a> {
    summary: &'a CampaignSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    records: Option<&'a [Row]>,
}

/// JSON: `{"summary": …, "records": […]}`. CSV: the per-trial rows when
/// requested (summary on stderr), otherwise a one-line summary table.
pub fn emit_fuzz(
    summary: &CampaignSummary,
    rows: Option<&[Row]>,
    format: Format,
) -> io::Result<()> {
    let stdout = io::stdout().lock();
    match format {
        Format::Json => {
            let mut out = stdout;
            serde_json::to_writer_pretty(
                &mut out,
                &FuzzJson {
                    summary,
                    records: rows,
                },
            )?;
            writeln!(out)
        }
        Format::Csv => match rows {
            Some(rows) => {
                eprintln!(
                    "{}",
                    serde_json::to_string(summary).expect("summary serializes")
                );
                write_csv(rows, false, stdout)
            }
            None => {
                let mut w = csv::Writer::from_writer(stdout);
                w.write_record([
                    "trials",
                    "checks",
                    "violations",
                    "min_margin",
                    "argmin_trial",
                    "argmin_seed",
                    "argmin_p",
                ])?;
                w.write_record([
                    cell(&summary.trials),
                    cell(&summary.checks),
                    cell(&summary.violations),
                    cell(&summary.min_margin),
                    cell(&summary.argmin_trial),
                    cell(&summary.argmin_seed),
                    cell(&summary.argmin_p),
                ])?;
                w.flush()
            }
        },
    }
}
