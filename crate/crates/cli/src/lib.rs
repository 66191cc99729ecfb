//! Argument parsing and dispatch for the `sievebench` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use sieve_workbench::{
    calculation_table, compare_with, jk_rows, pattern_replay, render, sieves, verify, Check,
    Format, Method, Renderable,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDINGS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "sievebench", version, about = "Pattern sieve workbench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the primes up to a bound with the chosen sieve.
    Primes {
        #[arg(long)]
        limit: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Fabio)]
        method: MethodArg,
    },
    /// The first COUNT calculations of the unbounded pattern table.
    Table {
        #[arg(long, default_value_t = 79)]
        count: usize,
    },
    /// The J = K rows for every prime K up to MAX_K.
    JkTable {
        #[arg(long, default_value_t = 101)]
        max_k: u64,
    },
    /// Per-sieve statistics at a bound.
    Compare {
        #[arg(long, default_value_t = 1000)]
        limit: u64,
        /// Include each method's prime list (JSON only).
        #[arg(long)]
        include_primes: bool,
    },
    /// Check the pattern family against the trial-division oracle.
    Verify {
        #[arg(long)]
        limit: u64,
        #[arg(long, value_enum, default_value_t = CheckArg::All)]
        check: CheckArg,
        /// Exit with status 1 when any check finds a counterexample.
        #[arg(long)]
        strict: bool,
    },
    /// Lettered step-by-step replay of the patterns applied up to a bound.
    Replay {
        #[arg(long, default_value_t = 100)]
        limit: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Fabio,
    Eratosthenes,
    Euler,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Fabio => Method::Fabio,
            MethodArg::Eratosthenes => Method::Eratosthenes,
            MethodArg::Euler => Method::Euler,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Disjoint,
    Coverage,
    Divergence,
    JkNote,
    All,
}

impl CheckArg {
    fn checks(self) -> Vec<Check> {
        match self {
            CheckArg::Disjoint => vec![Check::Disjoint],
            CheckArg::Coverage => vec![Check::Coverage],
            CheckArg::Divergence => vec![Check::Divergence],
            CheckArg::JkNote => vec![Check::JkNote],
            CheckArg::All => Check::ALL.to_vec(),
        }
    }
}

/// Produces the rendered bytes plus whether a strict run should fail.
fn execute(cli: &Cli) -> sieve_workbench::Result<(Vec<u8>, bool)> {
    let format = cli.format.into();
    match &cli.command {
        Command::Primes { limit, method } => {
            let run = match Method::from(*method) {
                Method::Fabio => {
                    sieves::fabio_sieve_with(*limit, sieves::RunOptions::counters_only())?
                }
                Method::Eratosthenes => sieves::eratosthenes_instrumented_with(
                    *limit,
                    sieves::RunOptions::counters_only(),
                )?,
                Method::Euler => {
                    sieves::euler_instrumented_with(*limit, sieves::RunOptions::counters_only())?
                }
                Method::Oracle => sieves::oracle_primes(*limit)?,
            };
            Ok((render(&Renderable::Primes(&run), format)?, false))
        }
        Command::Table { count } => {
            let rows = calculation_table(*count)?;
            Ok((render(&Renderable::Table(&rows), format)?, false))
        }
        Command::JkTable { max_k } => {
            let rows = jk_rows(*max_k)?;
            Ok((render(&Renderable::JkTable(&rows), format)?, false))
        }
        Command::Compare {
            limit,
            include_primes,
        } => {
            let report = compare_with(*limit, *include_primes)?;
            Ok((render(&Renderable::Comparison(&report), format)?, false))
        }
        Command::Verify {
            limit,
            check,
            strict,
        } => {
            let report = verify(*limit, &check.checks())?;
            let bytes = render(&Renderable::Verification(&report), format)?;
            Ok((bytes, *strict && report.has_findings()))
        }
        Command::Replay { limit } => {
            let steps = pattern_replay(*limit)?;
            Ok((render(&Renderable::Replay(&steps), format)?, false))
        }
    }
}

/// Runs one invocation and returns its exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };

    let (bytes, failed) = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };

    let written = match &cli.output {
        Some(path) => std::fs::write(path, &bytes).map_err(|e| (path.display().to_string(), e)),
        None => out.write_all(&bytes).map_err(|e| ("stdout".to_string(), e)),
    };
    if let Err((target, e)) = written {
        let _ = writeln!(err, "error: cannot write {target}: {e}");
        return EXIT_USAGE;
    }
    if failed {
        EXIT_FINDINGS
    } else {
        EXIT_OK
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invoke(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["sievebench"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn primes_fabio_100() {
        let (code, out, _) = invoke(&["primes", "--limit", "100", "--method", "fabio"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 25);
        assert_eq!(out.lines().last(), Some("97"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(invoke(&["primes", "--limit", "1"]).0, 2);
        assert_eq!(
            invoke(&["primes", "--limit", "10", "--method", "atkin"]).0,
            2
        );
        assert_eq!(invoke(&["primes", "--limit", "10", "--bogus"]).0, 2);
        assert_eq!(invoke(&["jk-table", "--max-k", "15"]).0, 2);
        assert_eq!(invoke(&[]).0, 2);
        let (code, _, err) = invoke(&["table", "--count", "0"]);
        assert_eq!(code, 2);
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn unsupported_format_is_an_error() {
        let (code, _, err) = invoke(&["replay", "--limit", "10", "--format", "csv"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error: cannot render replay as csv"));
    }

    #[test]
    fn strict_verify_exit_codes() {
        assert_eq!(invoke(&["verify", "--limit", "1330", "--strict"]).0, 0);
        let (code, out, _) = invoke(&["verify", "--limit", "2000", "--strict"]);
        assert_eq!(code, 1);
        assert!(out.contains("first divergence: 1331"));
        assert_eq!(invoke(&["verify", "--limit", "2000"]).0, 0);
        assert_eq!(
            invoke(&["verify", "--limit", "2000", "--check", "disjoint", "--strict"]).0,
            0
        );
    }

    #[test]
    fn unwritable_output() {
        let (code, out, err) = invoke(&[
            "table",
            "--count",
            "3",
            "--output",
            "/nonexistent-dir/x/table.txt",
        ]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.starts_with("error: cannot write /nonexistent-dir/x/table.txt"));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = invoke(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("jk-table"));
    }
}
