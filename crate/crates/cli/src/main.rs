use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jacsyz_core::analysis::DEFAULT_MAX_DEGREE;
use jacsyz_core::{
    analyze_text, corpus, family, oracle, AnalysisError, AnalysisOptions, CurveRecord, Report,
};
use rayon::prelude::*;

const EXIT_INVALID: u8 = 1;
const EXIT_MISMATCH: u8 = 2;

#[derive(Parser)]
#[command(name = "jacsyz", version, about = "Jacobian syzygies of reduced plane curves")]
struct Cli {
    /// Worker threads for multi-curve runs (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the curves in a JSON file (an array of curve records).
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Refuse curves above this degree.
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Run the built-in corpus against its expected values.
    Corpus {
        /// Only curves whose name contains this string.
        #[arg(long)]
        filter: Option<String>,
        /// Also fail on any failed audit check.
        #[arg(long)]
        audit: bool,
        /// Include the slow high-degree curves.
        #[arg(long)]
        slow: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Generate and analyze a member of a family: ts, ex2, exnularge, exrnc.
    Family {
        name: String,
        /// Comma-separated integer parameters, e.g. `2,2,1` for ts.
        #[arg(long, value_delimiter = ',', required = true)]
        params: Vec<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Compare the Hilbert tables with a Gröbner-free linear algebra oracle.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        /// Last degree to compare.
        #[arg(long)]
        max_degree: u32,
    },
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

/// Outcome of analyzing one record.
struct Outcome {
    name: String,
    result: Result<Report, AnalysisError>,
    mismatches: Vec<String>,
}

fn caret(text: &str, position: usize) -> String {
    format!("    {text}\n    {}^", " ".repeat(position.saturating_sub(1)))
}

fn describe_error(rec: &CurveRecord, e: &AnalysisError) -> String {
    let position = match e {
        AnalysisError::NotHomogeneous { position } => Some(*position),
        AnalysisError::Parse(p) => p.position(),
        _ => None,
    };
    let mut msg = format!("error: {}: {e}", rec.name);
    if let Some(p) = position {
        msg.push('\n');
        msg.push_str(&caret(&rec.f_text, p));
    }
    msg
}

fn run_records(records: &[CurveRecord], opts: &AnalysisOptions, with_audit: bool) -> Vec<Outcome> {
    records
        .par_iter()
        .map(|rec| {
            let result = analyze_text(&rec.name, &rec.f_text, rec.meta.clone(), opts)
                .map(|a| Report::from_analysis(&a));
            let mut mismatches = Vec::new();
            if let Ok(report) = &result {
                if let Some(exp) = &rec.expected {
                    mismatches.extend(exp.mismatches(report));
                }
                if with_audit {
                    mismatches.extend(
                        report
                            .audit_failures()
                            .map(|c| format!("{} failed: {}", c.id, c.details)),
                    );
                }
            }
            Outcome {
                name: rec.name.clone(),
                result,
                mismatches,
            }
        })
        .collect()
}

fn read_records(path: &PathBuf) -> Result<Vec<CurveRecord>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("{}: invalid JSON: {e}", path.display()))?;
    let value = if value.is_object() {
        serde_json::Value::Array(vec![value])
    } else {
        value
    };
    serde_json::from_value(value).map_err(|e| format!("{}: invalid curve record: {e}", path.display()))
}

/// Prints the outcomes and returns the exit code.
fn report(records: &[CurveRecord], outcomes: &[Outcome], format: Format) -> u8 {
    let mut code = 0;
    for (rec, o) in records.iter().zip(outcomes) {
        if let Err(e) = &o.result {
            eprintln!("{}", describe_error(rec, e));
            code = EXIT_INVALID;
        }
    }
    match format {
        Format::Json => {
            let reports: Vec<&Report> = outcomes.iter().filter_map(|o| o.result.as_ref().ok()).collect();
            emit(&serde_json::to_string_pretty(&reports).expect("reports serialize"));
            emit("\n");
        }
        Format::Text => {
            for o in outcomes {
                if let Ok(r) = &o.result {
                    emit(&r.to_text());
                }
            }
        }
    }
    for o in outcomes {
        for m in &o.mismatches {
            eprintln!("mismatch: {}: {m}", o.name);
        }
    }
    if code == 0 && outcomes.iter().any(|o| !o.mismatches.is_empty()) {
        code = EXIT_MISMATCH;
    }
    code
}

fn run(cli: Cli) -> u8 {
    if let Some(jobs) = cli.jobs {
        // only fails if a global pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match cli.command {
        Command::Analyze {
            input,
            format,
            max_degree,
        } => {
            let records = match read_records(&input) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_INVALID;
                }
            };
            let outcomes = run_records(&records, &AnalysisOptions { max_degree }, true);
            report(&records, &outcomes, format)
        }
        Command::Corpus {
            filter,
            audit,
            slow,
            format,
            max_degree,
        } => {
            let records: Vec<CurveRecord> = corpus()
                .into_iter()
                .filter(|r| slow || !r.slow)
                .filter(|r| filter.as_deref().is_none_or(|f| r.name.contains(f)))
                .collect();
            if records.is_empty() {
                eprintln!("error: no corpus curve matches the filter");
                return EXIT_INVALID;
            }
            let outcomes = run_records(&records, &AnalysisOptions { max_degree }, audit);
            let code = report(&records, &outcomes, format);
            if matches!(format, Format::Text) {
                let failed = outcomes
                    .iter()
                    .filter(|o| o.result.is_err() || !o.mismatches.is_empty())
                    .count();
                emit(&format!("{} curves, {} failed\n", outcomes.len(), failed));
            }
            code
        }
        Command::Family {
            name,
            params,
            format,
            max_degree,
        } => {
            let rec = match family(&name, &params) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_INVALID;
                }
            };
            let records = vec![rec];
            let outcomes = run_records(&records, &AnalysisOptions { max_degree }, true);
            report(&records, &outcomes, format)
        }
        Command::Oracle { input, max_degree } => {
            let records = match read_records(&input) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_INVALID;
                }
            };
            let opts = AnalysisOptions::default();
            let results: Vec<Result<Vec<String>, AnalysisError>> = records
                .par_iter()
                .map(|rec| {
                    analyze_text(&rec.name, &rec.f_text, rec.meta.clone(), &opts)
                        .map(|a| oracle::compare(&a, max_degree))
                })
                .collect();
            let mut code = 0;
            for (rec, res) in records.iter().zip(&results) {
                match res {
                    Err(e) => {
                        eprintln!("{}", describe_error(rec, e));
                        code = EXIT_INVALID;
                    }
                    Ok(diffs) if diffs.is_empty() => {
                        emit(&format!("{}: degrees 0..={max_degree} agree\n", rec.name))
                    }
                    Ok(diffs) => {
                        for d in diffs {
                            emit(&format!("{}: {d}\n", rec.name));
                        }
                        if code == 0 {
                            code = EXIT_MISMATCH;
                        }
                    }
                }
            }
            code
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}
