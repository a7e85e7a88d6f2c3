//! Command-line front end.
//!
//! Exit codes: 0 when every executed check passes, 1 when any check fails,
//! 2 for usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::identities::IdentityId;
use crate::quaternions::{jln_quat, jn_quat, naive_sum_jn, quat_sum_jn, un_quat, vn_quat};
use crate::report::{paper_example, Report, Sweep};
use crate::sequences::{third_jacobsthal, third_jacobsthal_lucas, u3, v3, SequenceKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Terms above this index get a size warning on stderr.
pub const LARGE_INDEX: usize = 1_000_000;

/// Environment variable holding an optional worker-count hint for sweeps.
pub const THREADS_ENV: &str = "NQ_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "nqverify",
    version,
    about = "Exact third-order Jacobsthal dual quaternions and identity checks"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one term of a sequence.
    Term {
        /// J3, j3, V3, U3, JN3, jN3, VN3 or UN3 (case-sensitive).
        #[arg(long, value_parser = parse_kind)]
        kind: SequenceKind,
        #[arg(long)]
        n: usize,
    },
    /// Check identities over a range of indices and write a report.
    Verify {
        /// `all`, a tag or label (`T6_CASSINI`, `t13`), a comma list, or a range like `p1..p9`.
        #[arg(long, default_value = "all")]
        identity: String,
        #[arg(long)]
        max: usize,
        /// Cap on (m, n) pairs for the two-index identity, sampled with a fixed seed.
        #[arg(long)]
        pairs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the closed-form sum JN(0) + ... + JN(m) and compare it to the naive sum.
    Sum {
        #[arg(long)]
        m: usize,
    },
    /// Recompute the worked Cassini example.
    Example {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_kind(s: &str) -> Result<SequenceKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI with explicit output streams. `argv[0]` is the program name.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(config.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Term { kind, n } => {
            warn_if_large(n, err);
            writeln!(out, "{}", term_text(kind, n))?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            identity,
            max,
            pairs,
            format,
            out: path,
        } => {
            warn_if_large(max, err);
            let ids = IdentityId::parse_selection(&identity)?;
            let report = Sweep::new(ids, max)
                .pair_budget(pairs)
                .threads(threads_hint(err))
                .run()?;
            emit(&report, format, path, out)?;
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Sum { m } => {
            warn_if_large(m, err);
            let closed = quat_sum_jn(m)?;
            let naive = naive_sum_jn(m);
            writeln!(out, "{closed}")?;
            if closed == naive {
                writeln!(err, "naive sum agrees")?;
                Ok(EXIT_OK)
            } else {
                writeln!(err, "naive sum differs: {naive}")?;
                Ok(EXIT_FAIL)
            }
        }
        Command::Example { format, out: path } => {
            let report = paper_example();
            emit(&report, format, path, out)?;
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAIL })
        }
    }
}

/// Canonical text of term `n` of `kind`.
pub fn term_text(kind: SequenceKind, n: usize) -> String {
    match kind {
        SequenceKind::J3 => third_jacobsthal(n).to_string(),
        SequenceKind::Jl3 => third_jacobsthal_lucas(n).to_string(),
        SequenceKind::V3 => v3(n).to_string(),
        SequenceKind::U3 => u3(n).to_string(),
        SequenceKind::JN3 => jn_quat(n).to_string(),
        SequenceKind::JlN3 => jln_quat(n).to_string(),
        SequenceKind::VN3 => vn_quat(n).to_string(),
        SequenceKind::UN3 => un_quat(n).to_string(),
    }
}

fn emit(report: &Report, format: Format, path: Option<PathBuf>, out: &mut dyn Write) -> Result<(), CliError> {
    let text = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json()? + "\n",
        Format::Csv => report.to_csv()?,
    };
    match path {
        Some(p) => std::fs::write(&p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(CliError::from),
    }
}

fn warn_if_large(n: usize, err: &mut dyn Write) {
    if n > LARGE_INDEX {
        let _ = writeln!(
            err,
            "warning: index {n} is large; terms have roughly {} decimal digits",
            n * 3 / 10
        );
    }
}

fn threads_hint(err: &mut dyn Write) -> Option<usize> {
    let raw = std::env::var(THREADS_ENV).ok()?;
    match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => Some(n),
        _ => {
            let _ = writeln!(err, "warning: ignoring {THREADS_ENV}={raw:?}");
            None
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("nqverify").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn term_kinds() {
        assert_eq!(
            run_capture(&["term", "--kind", "JN3", "--n", "3"]),
            (0, "2 + 5i + 9j + 18k\n".into(), String::new())
        );
        assert_eq!(run_capture(&["term", "--kind", "j3", "--n", "7"]).1, "145\n");
        assert_eq!(run_capture(&["term", "--kind", "V3", "--n", "4"]).1, "-3\n");
        assert_eq!(
            run_capture(&["term", "--kind", "UN3", "--n", "1"]).1,
            "1 - 1i + 0j + 1k\n"
        );
    }

    #[test]
    fn bad_input_exits_two() {
        assert_eq!(run_capture(&["term", "--kind", "J3", "--n", "-1"]).0, 2);
        assert_eq!(run_capture(&["term", "--kind", "J3", "--n=-1"]).0, 2);
        assert_eq!(run_capture(&["term", "--kind", "Q3", "--n", "1"]).0, 2);
        assert_eq!(run_capture(&["verify", "--identity", "t99", "--max", "3"]).0, 2);
        assert_eq!(run_capture(&["verify", "--max", "3", "--bogus"]).0, 2);
        assert_eq!(run_capture(&[]).0, 2);
        let (code, _, err) = run_capture(&["verify", "--identity", ",", "--max", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("no identities"));
    }

    #[test]
    fn sum_and_example() {
        let (code, out, _) = run_capture(&["sum", "--m", "3"]);
        assert_eq!((code, out.as_str()), (0, "4 + 9i + 17j + 34k\n"));
        let (code, out, _) = run_capture(&["example"]);
        assert_eq!(code, 0);
        assert!(out.contains("1 + 1i + 3j + 8k"));
    }

    #[test]
    fn help_is_not_an_error() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }
}
