//! Command-line surface: subcommand dispatch, the plain-text table cache,
//! and the CSV/JSON sequence exporters.
//!
//! Exit codes: 0 for success or an all-pass verification, 1 for a
//! verification failure or an oracle disagreement, 2 for usage, range,
//! capacity and file-format errors. Data outputs are byte-identical
//! across runs; the only nondeterministic lines are the `#`-prefixed
//! timing lines of the verification report.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::complexity::{self, ComplexityTable};
use crate::error::{Error, Result};
use crate::factorization::DivisorSieve;
use crate::trees;
use crate::vectors;
use crate::verify;

/// First line of every table cache file.
pub const CACHE_HEADER: &str = "ASRT-TABLE v1";

/// Default cap on materialized enumerations, to bound memory.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Parser)]
#[command(
    name = "asrt",
    version,
    about = "Complexity T(n) of natural numbers and the absolutely symmetric rooted trees behind it"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print T(n)
    Value {
        n: u64,
        /// Plain-text table cache to reuse, creating or extending it as needed
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Print T*(n) = T(n) - T(n-1)
    Star {
        n: u64,
        /// diff subtracts adjacent table entries; ie sums the
        /// inclusion-exclusion terms over prime subsets (n >= 2)
        #[arg(long, value_enum, default_value_t = StarMethod::Diff)]
        method: StarMethod,
    },
    /// Export n, T(n), T*(n) for 0..=N as CSV or JSON
    Table {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = ExportFormat::Csv)]
        format: ExportFormat,
        /// Write to this file (atomically) instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// List the composition vectors with f(A) = n, lexicographically
    Vectors {
        n: u64,
        /// Print only how many there are
        #[arg(long)]
        count_only: bool,
        /// Fail rather than materialize more than this many vectors
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        limit: usize,
    },
    /// List the absolutely symmetric rooted trees with n edges
    Trees {
        n: u64,
        #[arg(long, value_enum)]
        format: TreeFormat,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        limit: usize,
    },
    /// Classify n as prime or composite from T*(n)
    IsPrime {
        n: u64,
        /// Also run trial division and fail on disagreement
        #[arg(long)]
        oracle_check: bool,
    },
    /// Cross-check every identity over a range and print the report
    Verify {
        /// Upper bound for the formula-based checks
        #[arg(long)]
        max: u64,
        /// Upper bound for the enumeration-based checks (default min(max, 40))
        #[arg(long)]
        deep_max: Option<u64>,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum StarMethod {
    Diff,
    Ie,
}

#[derive(ValueEnum, Clone, Copy)]
enum ExportFormat {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy)]
enum TreeFormat {
    Levels,
    Paren,
    Dot,
}

/// Entry point used by the binary: parses `argv` and runs the command,
/// writing to the real stdout/stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with_io(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], with caller-supplied output streams (used by the tests to
/// pin outputs byte for byte).
pub fn run_with_io<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{rendered}");
                0
            } else {
                let _ = write!(err, "{rendered}");
                2
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Value { n, cache } => {
            let table = table_for(n, cache.as_deref())?;
            writeln!(out, "{}", table.t(n)?)?;
            Ok(0)
        }
        Command::Star { n, method } => {
            let table = table_for(n, None)?;
            match method {
                StarMethod::Diff => writeln!(out, "{}", table.t_star(n)?)?,
                StarMethod::Ie => {
                    let sieve = DivisorSieve::new(n.max(2))?;
                    writeln!(
                        out,
                        "{}",
                        complexity::t_star_inclusion_exclusion(&table, &sieve, n)?
                    )?;
                }
            }
            Ok(0)
        }
        Command::Table {
            max,
            format,
            out: out_path,
            cache,
        } => {
            let table = table_for(max, cache.as_deref())?;
            match out_path {
                Some(path) => write_atomic(&path, |w| export(&table, format, w))?,
                None => {
                    let mut w = BufWriter::new(&mut *out);
                    export(&table, format, &mut w)?;
                    w.flush()?;
                }
            }
            Ok(0)
        }
        Command::Vectors {
            n,
            count_only,
            limit,
        } => {
            let sieve = DivisorSieve::new(n.max(2))?;
            if count_only {
                writeln!(out, "{}", vectors::count_vectors(n, &sieve)?)?;
            } else {
                let vs = vectors::enumerate_vectors_capped(n, &sieve, limit)?;
                let mut w = BufWriter::new(&mut *out);
                for v in &vs {
                    writeln!(w, "{v}")?;
                }
                w.flush()?;
            }
            Ok(0)
        }
        Command::Trees { n, format, limit } => {
            let sieve = DivisorSieve::new(n.max(2))?;
            let ts = trees::enumerate_trees_capped(n, &sieve, limit)?;
            let mut w = BufWriter::new(&mut *out);
            for (i, t) in ts.iter().enumerate() {
                match format {
                    TreeFormat::Levels => writeln!(w, "{t}")?,
                    TreeFormat::Paren => writeln!(w, "{}", t.to_paren()?)?,
                    TreeFormat::Dot => write!(w, "{}", t.to_dot(&format!("t{i}"))?)?,
                }
            }
            w.flush()?;
            Ok(0)
        }
        Command::IsPrime { n, oracle_check } => {
            let table = table_for(n, None)?;
            let by_complexity = complexity::is_prime_by_complexity(&table, n)?;
            writeln!(out, "{}", if by_complexity { "prime" } else { "composite" })?;
            if oracle_check {
                let by_trial_division = verify::trial_division_is_prime(n)?;
                if by_trial_division != by_complexity {
                    writeln!(
                        err,
                        "oracle disagreement at n = {n}: complexity says {by_complexity}, trial division says {by_trial_division}"
                    )?;
                    return Ok(1);
                }
            }
            Ok(0)
        }
        Command::Verify {
            max,
            deep_max,
            json,
        } => {
            let sieve = DivisorSieve::new(max.max(2))?;
            let table = ComplexityTable::build(max, &sieve)?;
            let deep = deep_max.unwrap_or(40).min(max);
            let mut report = verify::verify_census(deep, &table, &sieve)?;
            report.absorb(verify::verify_recurrence(max, &table, &sieve)?);
            report.absorb(verify::verify_star_identities(max, &table, &sieve)?);
            report.absorb(verify::verify_bounds(max, &table, &sieve)?);
            if json {
                write_report_json(&report, out)?;
            } else {
                write!(out, "{report}")?;
                let failed = report.claims.iter().filter(|c| !c.passed).count();
                if failed == 0 {
                    writeln!(out, "all claims passed")?;
                } else {
                    writeln!(out, "{failed} claim(s) failed")?;
                }
            }
            Ok(if report.all_passed() { 0 } else { 1 })
        }
    }
}

/// Builds the table covering `limit`, routing through the cache file when
/// one is given: an existing cache is loaded and, if too short, extended
/// by resuming the recurrence and rewritten.
fn table_for(limit: u64, cache: Option<&Path>) -> Result<ComplexityTable> {
    match cache {
        None => {
            let sieve = DivisorSieve::new(limit.max(2))?;
            ComplexityTable::build(limit, &sieve)
        }
        Some(path) => {
            let mut table = if path.exists() {
                read_cache(path)?
            } else {
                ComplexityTable::from_values(vec![BigUint::from(1u32)])?
            };
            if table.limit() < limit {
                let sieve = DivisorSieve::new(limit.max(2))?;
                table.extend_to(limit, &sieve)?;
                write_cache(&table, path)?;
            }
            Ok(table)
        }
    }
}

fn export(table: &ComplexityTable, format: ExportFormat, w: &mut dyn Write) -> Result<()> {
    match format {
        ExportFormat::Csv => export_csv(table, w),
        ExportFormat::Json => export_json(table, w),
    }
}

/// CSV with header `n,T,Tstar`; `Tstar` is empty for n = 0. `T` values are
/// decimal strings, never native numbers, so downstream consumers cannot
/// lose precision past 53 bits.
fn export_csv(table: &ComplexityTable, w: &mut dyn Write) -> Result<()> {
    writeln!(w, "n,T,Tstar")?;
    let values = table.values();
    for (n, t) in values.iter().enumerate() {
        if n == 0 {
            writeln!(w, "0,{t},")?;
        } else {
            writeln!(w, "{n},{t},{}", t - &values[n - 1])?;
        }
    }
    Ok(())
}

/// JSON array of `{"n": ..., "T": "...", "Tstar": "..."}` records, one per
/// line; `Tstar` is `null` for n = 0. Values are decimal strings.
fn export_json(table: &ComplexityTable, w: &mut dyn Write) -> Result<()> {
    writeln!(w, "[")?;
    let values = table.values();
    for (n, t) in values.iter().enumerate() {
        let sep = if n + 1 == values.len() { "" } else { "," };
        if n == 0 {
            writeln!(w, "  {{\"n\": 0, \"T\": \"{t}\", \"Tstar\": null}}{sep}")?;
        } else {
            writeln!(
                w,
                "  {{\"n\": {n}, \"T\": \"{t}\", \"Tstar\": \"{}\"}}{sep}",
                t - &values[n - 1]
            )?;
        }
    }
    writeln!(w, "]")?;
    Ok(())
}

fn write_report_json(report: &verify::VerificationReport, w: &mut dyn Write) -> Result<()> {
    writeln!(w, "{{")?;
    writeln!(w, "  \"range\": [{}, {}],", report.lo, report.hi)?;
    writeln!(w, "  \"all_passed\": {},", report.all_passed())?;
    writeln!(w, "  \"claims\": [")?;
    for (i, c) in report.claims.iter().enumerate() {
        let sep = if i + 1 == report.claims.len() {
            ""
        } else {
            ","
        };
        let counterexample = match c.first_counterexample {
            Some(n) => n.to_string(),
            None => "null".to_string(),
        };
        writeln!(
            w,
            "    {{\"id\": \"{}\", \"passed\": {}, \"checked\": {}, \"first_counterexample\": {}}}{sep}",
            c.id, c.passed, c.checked, counterexample
        )?;
    }
    writeln!(w, "  ]")?;
    writeln!(w, "}}")?;
    Ok(())
}

/// Serializes the table as the plain-text cache: the header line, then one
/// `<n><TAB><decimal T(n)>` line per entry, ascending from 0.
pub fn write_cache(table: &ComplexityTable, path: &Path) -> Result<()> {
    write_atomic(path, |w| {
        writeln!(w, "{CACHE_HEADER}")?;
        for (n, value) in table.values().iter().enumerate() {
            writeln!(w, "{n}\t{value}")?;
        }
        Ok(())
    })
}

/// Parses a cache file back into a (possibly partial) table, validating
/// the header, the contiguous indices from 0, and the sign-free decimal
/// values.
pub fn read_cache(path: &Path) -> Result<ComplexityTable> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    match lines.next() {
        Some(line) if line == CACHE_HEADER => {}
        _ => {
            return Err(Error::Format(format!(
                "cache {} is missing the \"{CACHE_HEADER}\" header",
                path.display()
            )))
        }
    }
    let mut values = Vec::new();
    for (i, line) in lines.enumerate() {
        let (index, digits) = line.split_once('\t').ok_or_else(|| {
            Error::Format(format!("cache line {}: expected <n><TAB><value>", i + 2))
        })?;
        if index.parse::<u64>() != Ok(i as u64) {
            return Err(Error::Format(format!(
                "cache line {}: expected index {}, found {index:?}",
                i + 2,
                i
            )));
        }
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Format(format!(
                "cache line {}: value must be an unsigned decimal, found {digits:?}",
                i + 2
            )));
        }
        values.push(digits.parse::<BigUint>().expect("digits validated"));
    }
    if values.is_empty() {
        return Err(Error::Format("cache holds a header but no entries".into()));
    }
    ComplexityTable::from_values(values)
}

/// Whole-file atomic write: stream into `<path>.tmp`, then rename over the
/// destination.
fn write_atomic<F>(path: &Path, fill: F) -> Result<()>
where
    F: FnOnce(&mut BufWriter<fs::File>) -> Result<()>,
{
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    let result = (|| {
        let mut w = BufWriter::new(fs::File::create(&tmp)?);
        fill(&mut w)?;
        w.flush()?;
        Ok(())
    })();
    if let Err(e) = result {
        let _ = fs::remove_file(&tmp);
        return Err(e);
    }
    fs::rename(&tmp, path)?;
    Ok(())
}
