//! The `permlip` command line.
//!
//! Exit codes are a stable contract: 0 success, 1 a verification check
//! failed, 2 usage error, 3 the brute-force ceiling was exceeded.
//! Structured output goes to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::asymptotics::{convergence_report, report_csv, AsymptoticEstimate, DEFAULT_TOLERANCE};
use crate::engine::{self, Engine};
use crate::enumerator::{BigCount, BruteForce};
use crate::error::{Error, Result};
use crate::probe::build_profile;
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CEILING: i32 = 3;

const ENGINES: [&str; 4] = ["brute", "closed", "recurrence", "gf"];
const SUITES: [&str; 7] = [
    "max-position",
    "d-class",
    "c-bijection",
    "b-recurrence",
    "split",
    "gf",
    "asymptotics",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    /// One `n value` pair per line, ascending `n`, no header.
    Bfile,
    Plain,
}

#[derive(Debug, Parser)]
#[command(
    name = "permlip",
    version,
    about = "Count and analyse 132-avoiding permutations with bounded adjacent differences"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print A_n^(m), the number of 132-avoiders of length n with adjacent
    /// entries differing by at most m.
    Count {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'm')]
        m: u32,
        /// Defaults to `closed` where it applies, `brute` otherwise.
        #[arg(long, value_parser = PossibleValuesParser::new(ENGINES).map(|s| s.parse::<Engine>().expect("listed")))]
        engine: Option<Engine>,
    },
    /// Print A_1^(m), ..., A_N^(m).
    Seq {
        #[arg(short = 'm')]
        m: u32,
        #[arg(short = 'N')]
        n_max: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
        #[arg(long, value_parser = PossibleValuesParser::new(ENGINES).map(|s| s.parse::<Engine>().expect("listed")))]
        engine: Option<Engine>,
    },
    /// Run a check suite against the brute-force oracle; exits 1 on the
    /// first failed check.
    Verify {
        #[arg(long, value_parser = PossibleValuesParser::new(SUITES).map(|s| s.parse::<Suite>().expect("listed")))]
        suite: Suite,
        #[arg(short = 'N')]
        n_max: usize,
        /// Adjacency bound for the max-position suite (default: 1 to 4).
        #[arg(short = 'm')]
        m: Option<u32>,
    },
    /// Print rho, alpha and C for m = 2 as JSON, optionally followed by a
    /// convergence table for n = 1..=N.
    Asym {
        #[arg(long, value_name = "N")]
        csv: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Print a growth profile (exact terms, fitted recurrence, growth
    /// estimate) for bound m as JSON.
    Probe {
        #[arg(short = 'm')]
        m: u32,
        #[arg(short = 'N')]
        n_max: usize,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CeilingExceeded { .. } => EXIT_CEILING,
        _ => EXIT_USAGE,
    }
}

#[derive(Serialize)]
struct SequenceJson<'a> {
    m: u32,
    n_max: usize,
    engine: Engine,
    terms: &'a [BigCount],
}

/// Renders `A_1..A_N` in `format`.
pub fn format_sequence(m: u32, engine: Engine, terms: &[BigCount], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            let doc = SequenceJson {
                m,
                n_max: terms.len(),
                engine,
                terms,
            };
            out = serde_json::to_string_pretty(&doc).expect("serializes");
            out.push('\n');
        }
        OutputFormat::Csv => terms.iter().enumerate().for_each(|(i, t)| {
            let _ = writeln!(out, "{},{t}", i + 1);
        }),
        OutputFormat::Bfile => terms.iter().enumerate().for_each(|(i, t)| {
            let _ = writeln!(out, "{} {t}", i + 1);
        }),
        OutputFormat::Plain => terms.iter().for_each(|t| {
            let _ = writeln!(out, "{t}");
        }),
    }
    out
}

/// Parses b-file text: `n value` per line. Blank lines and `#` comments
/// are skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<(usize, BigCount)>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let bad = || Error::Domain(format!("malformed b-file line {line:?}"));
            let (n, v) = line.split_once(' ').ok_or_else(bad)?;
            Ok((
                n.parse().map_err(|_| bad())?,
                v.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect()
}

enum Outcome {
    Ok,
    VerifyFailed,
}

fn execute(command: Command, out: &mut dyn Write) -> Result<Outcome> {
    let bf = BruteForce::from_env()?;
    let io = |e: std::io::Error| Error::Domain(format!("write failed: {e}"));
    match command {
        Command::Count { n, m, engine } => {
            let engine = engine.unwrap_or_else(|| Engine::preferred(m, n));
            let value = engine::count(engine, n, m, &bf)?;
            writeln!(out, "{value}").map_err(io)?;
        }
        Command::Seq {
            m,
            n_max,
            format,
            engine,
        } => {
            let engine = engine.unwrap_or_else(|| Engine::preferred(m, n_max));
            let terms = engine::sequence(engine, m, n_max, &bf)?;
            out.write_all(format_sequence(m, engine, &terms, format).as_bytes())
                .map_err(io)?;
        }
        Command::Verify { suite, n_max, m } => {
            let report = run_suite(suite, n_max, m, &bf)?;
            writeln!(out, "{report}").map_err(io)?;
            if !report.passed() {
                return Ok(Outcome::VerifyFailed);
            }
        }
        Command::Asym { csv, tolerance } => {
            let est = AsymptoticEstimate::compute(tolerance)?;
            let json = serde_json::to_string_pretty(&est).expect("serializes");
            writeln!(out, "{json}").map_err(io)?;
            if let Some(n_max) = csv {
                out.write_all(report_csv(&convergence_report(n_max)?).as_bytes())
                    .map_err(io)?;
            }
        }
        Command::Probe { m, n_max } => {
            let profile = build_profile(m, n_max, &bf)?;
            writeln!(out, "{}", profile.to_json()).map_err(io)?;
        }
    }
    Ok(Outcome::Ok)
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(Outcome::Ok) => EXIT_OK,
        Ok(Outcome::VerifyFailed) => EXIT_VERIFY_FAILED,
        Err(e) => {
            let _ = writeln!(err, "permlip: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("permlip").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn count_examples() {
        assert_eq!(
            call(&["count", "-n", "6", "-m", "2", "--engine", "brute"]).1,
            "18\n"
        );
        assert_eq!(
            call(&["count", "-n", "1", "-m", "1", "--engine", "brute"]).1,
            "1\n"
        );
        let gf = call(&["count", "-n", "100", "-m", "2", "--engine", "gf"]);
        let rec = call(&["count", "-n", "100", "-m", "2", "--engine", "recurrence"]);
        assert_eq!((gf.0, &gf.1), (0, &rec.1));
    }

    #[test]
    fn usage_and_ceiling_codes() {
        assert_eq!(
            call(&["count", "-n", "8", "-m", "3", "--engine", "gf"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["count", "-n", "8", "-m", "3", "--engine", "warp"]).0,
            EXIT_USAGE
        );
        assert_eq!(call(&["count", "-n", "8", "-m", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["seq", "-m", "2", "-N", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        let (code, _, err) = call(&["count", "-n", "40", "-m", "3"]);
        assert_eq!(code, EXIT_CEILING);
        assert!(err.contains("ceiling"), "{err}");
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn seq_formats() {
        let (code, bfile, _) = call(&["seq", "-m", "2", "-N", "6", "--format", "bfile"]);
        assert_eq!(code, 0);
        assert_eq!(bfile, "1 1\n2 2\n3 5\n4 8\n5 12\n6 18\n");
        let parsed = parse_bfile(&bfile).unwrap();
        assert_eq!(parsed.last().unwrap(), &(6, BigCount::from(18)));
        assert_eq!(
            call(&["seq", "-m", "1", "-N", "4", "--format", "csv"]).1,
            "1,1\n2,2\n3,2\n4,2\n"
        );
        let json = call(&["seq", "-m", "2", "-N", "3", "--format", "json"]).1;
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["terms"], serde_json::json!(["1", "2", "5"]));
    }

    #[test]
    fn bfile_parser_rejects_garbage() {
        assert!(parse_bfile("1 1\nfoo\n").is_err());
        assert_eq!(
            parse_bfile("# header\n\n3 5\n").unwrap(),
            vec![(3, BigCount::from(5))]
        );
    }

    #[test]
    fn verify_asym_probe() {
        assert_eq!(call(&["verify", "--suite", "split", "-N", "9"]).0, 0);
        assert_eq!(
            call(&["verify", "--suite", "max-position", "-N", "8", "-m", "3"]).0,
            0
        );
        let (code, out, _) = call(&["asym", "--csv", "5"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"rho\": 0.68232780382"), "{out}");
        assert!(out.contains("n,exact,asymptotic,rel_error"));
        let probe = call(&["probe", "-m", "2", "-N", "14"]).1;
        let v: serde_json::Value = serde_json::from_str(&probe).unwrap();
        assert_eq!(
            v["fitted"]["coefficients"],
            serde_json::json!([3, -3, 2, -2, 1])
        );
    }
}
