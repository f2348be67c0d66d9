//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verified identity failed, 2 bad arguments.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::diagram::{table_map, Generator, GeneratorMap};
use crate::enumerate::{enumerate_palindromic, enumerate_words};
use crate::error::Error;
use crate::seifert::{WordDetail, WordRecord};
use crate::stats::{aggregate, Limits, DEFAULT_VERIFY_MAX};
use crate::verify::{verify_with, VerifyOptions};
use crate::word::{RunWord, Sign};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "twobridge", version, about = "2-bridge knot census: enumeration, Seifert genus, exact averages")]
pub struct Cli {
    /// Worker threads for per-word work (default: all cores). Output does
    /// not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Raise the largest crossing number that may be fully enumerated.
    #[arg(long, global = true)]
    pub cap: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One record per word of T(c) (or T_p(c)), in lexicographic order.
    Enumerate {
        #[arg(short = 'c', long = "crossings")]
        c: usize,
        /// Only words of palindromic type.
        #[arg(long)]
        palindromic: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Full detail for one word, given as symbols ("+-++--+") or runs ("1,1,2,2,1").
    Word {
        word: String,
        #[arg(long, value_enum, default_value_t = DetailFormat::Text)]
        format: DetailFormat,
    },
    /// Per-crossing-number statistics.
    Stats {
        #[arg(long)]
        min: usize,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Check every identity over a range; exits 1 if any fails.
    Verify {
        #[arg(long, default_value_t = 3)]
        min: usize,
        #[arg(long, default_value_t = DEFAULT_VERIFY_MAX)]
        max: usize,
        #[arg(long, value_enum, default_value_t = DetailFormat::Text)]
        format: DetailFormat,
        /// Swap the crossing assigned to `--` runs (exercises the failure path).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DetailFormat {
    Text,
    Json,
}

fn faulty_map(sign: Sign, len: u8) -> Generator {
    match (sign, len) {
        (Sign::Minus, 2) => Generator::S2Inv,
        _ => table_map(sign, len),
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Threads(#[from] rayon::ThreadPoolBuildError),
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = match cli.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(CliError::from)
            .and_then(|pool| pool.install(|| execute(&cli, &mut buf))),
        None => execute(&cli, &mut buf),
    };
    let result = result.and_then(|code| {
        out.write_all(&buf)?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn limits(cli: &Cli) -> Limits {
    cli.cap.map(Limits::with_cap).unwrap_or_default()
}

fn execute(cli: &Cli, out: &mut Vec<u8>) -> Result<i32, CliError> {
    let limits = limits(cli);
    match &cli.command {
        Command::Enumerate { c, palindromic, format } => {
            let words = if *palindromic {
                limits.check_palindromic(*c)?;
                enumerate_palindromic(*c)?
            } else {
                limits.check_full(*c)?;
                enumerate_words(*c)?
            };
            let records = {
                use rayon::prelude::*;
                words.par_iter().map(WordRecord::new).collect::<Result<Vec<_>, _>>()?
            };
            write_table(out, *format, &records)?;
        }
        Command::Word { word, format } => {
            let w = RunWord::parse(word)?;
            let detail = WordDetail::new(&w)?;
            match format {
                DetailFormat::Json => {
                    serde_json::to_writer_pretty(&mut *out, &detail)?;
                    writeln!(out)?;
                }
                DetailFormat::Text => write_detail(out, &detail)?,
            }
        }
        Command::Stats { min, max, format } => {
            if min > max {
                return Err(Error::InvalidRange { min: *min, max: *max }.into());
            }
            limits.check_full(*min)?;
            limits.check_full(*max)?;
            let rows = (*min..=*max).map(|c| aggregate(c, &limits)).collect::<Result<Vec<_>, _>>()?;
            match format {
                TableFormat::Json => {
                    serde_json::to_writer_pretty(&mut *out, &rows)?;
                    writeln!(out)?;
                }
                TableFormat::Csv => {
                    let mut csv = csv::Writer::from_writer(&mut *out);
                    csv.write_record([
                        "c",
                        "t",
                        "t_p",
                        "knots",
                        "s_total",
                        "s_p_total",
                        "avg_seifert",
                        "avg_genus",
                        "epsilon",
                    ])?;
                    for r in &rows {
                        csv.write_record([
                            r.c.to_string(),
                            r.t.to_string(),
                            r.t_p.to_string(),
                            r.knot_count.to_string(),
                            r.s_total.to_string(),
                            r.s_p_total.to_string(),
                            r.avg_seifert.to_string(),
                            r.avg_genus.to_string(),
                            r.epsilon.to_string(),
                        ])?;
                    }
                    csv.flush()?;
                }
            }
        }
        Command::Verify { min, max, format, inject_fault } => {
            let map: GeneratorMap = if *inject_fault { faulty_map } else { table_map };
            let report = verify_with(*min, *max, &VerifyOptions { limits, map })?;
            match format {
                DetailFormat::Json => {
                    serde_json::to_writer_pretty(&mut *out, &report)?;
                    writeln!(out)?;
                }
                DetailFormat::Text => writeln!(out, "{report}")?,
            }
            if !report.all_passed() {
                return Ok(EXIT_IDENTITY_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

fn write_table<T: Serialize>(out: &mut dyn Write, format: TableFormat, rows: &[T]) -> Result<(), CliError> {
    match format {
        TableFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)?;
        }
        TableFormat::Csv => {
            let mut csv = csv::Writer::from_writer(&mut *out);
            for r in rows {
                csv.serialize(r)?;
            }
            csv.flush()?;
        }
    }
    Ok(())
}

fn write_detail(out: &mut dyn Write, d: &WordDetail) -> std::io::Result<()> {
    let generators: Vec<&str> = d.generators.iter().map(|g| g.name()).collect();
    writeln!(out, "word:          {}", d.word)?;
    writeln!(out, "runs:          {}", d.runs)?;
    writeln!(out, "crossings:     {}", d.c)?;
    writeln!(out, "length:        {}", d.length)?;
    writeln!(out, "generators:    {}", generators.join(","))?;
    writeln!(out, "right closure: {}", d.right_closure.name())?;
    writeln!(out, "orientations:  {}", d.orientations)?;
    writeln!(out, "circles:       {}", d.s)?;
    writeln!(out, "genus:         {}", d.genus)?;
    writeln!(out, "case:          {}", d.case.map_or("-".to_string(), |c| c.to_string()))?;
    writeln!(out, "palindromic:   {}", d.palindromic)?;
    writeln!(out, "partner:       {}", d.partner)
}
