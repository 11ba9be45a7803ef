//! Command-line front end. The binary is a thin wrapper around [`dispatch`].
//!
//! Exit status: 0 when every executed check is clean, 1 when a scan or check
//! reports a violation, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::audit::audit_pair;
use crate::continuant::cf_value;
use crate::error::Error;
use crate::render::{self, Format};
use crate::replacement::align;
use crate::scan::{run_scan, ScanKind, DEFAULT_MAX_Q};
use crate::snake::{fact_basic_report, markov_number, snake_word, Index};
use crate::word::Word;

pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "markov-audit",
    version,
    about = "Markov-number words, replacement analysis, and induction audits"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the quotient word c_{p/q}.
    Word { index: Index },
    /// Print the Markov number m_{p/q}.
    Markov { index: Index },
    /// Check the five structural counts of c_{p/q}.
    Facts { index: Index },
    /// Align two words entry by entry and list the replacements.
    Align { a: Index, b: Index },
    /// Replay the induction for the pair (p/(q+1), p/q).
    Audit { index: Index },
    /// Exhaustive range check.
    Scan {
        /// numerator | denominator | sum | facts | theorem52 | oracle | audits
        kind: ScanKind,
        #[arg(long = "max-q", default_value_t = DEFAULT_MAX_Q)]
        max_q: u32,
    },
    /// Exact value of the continued fraction [a_1, a_2, ...].
    Cf {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        letters: Vec<String>,
    },
}

struct Output {
    text: String,
    status: i32,
    /// Diagnostic line for stderr, kept out of the rendered output.
    timing: Option<String>,
}

fn run(command: Command, format: Format) -> Result<Output, Error> {
    let clean = |text| Output {
        text,
        status: EXIT_CLEAN,
        timing: None,
    };
    match command {
        Command::Word { index } => {
            render::render_word(index, &snake_word(index), format).map(clean)
        }
        Command::Markov { index } => {
            render::render_markov(index, &markov_number(index), format).map(clean)
        }
        Command::Facts { index } => {
            let r = fact_basic_report(index)?;
            Ok(Output {
                text: render::render_facts(&r, format)?,
                status: if r.all_hold() {
                    EXIT_CLEAN
                } else {
                    EXIT_VIOLATED
                },
                timing: None,
            })
        }
        Command::Align { a, b } => {
            let (wa, wb) = (snake_word(a), snake_word(b));
            let al = align(&wa, &wb)?;
            render::render_alignment((a, &wa), (b, &wb), &al, format).map(clean)
        }
        Command::Audit { index } => {
            let t = audit_pair(index)?;
            let sound = t.odd.balances()
                && t.steps.iter().all(|s| s.sign_bridge_holds())
                && t.overall_difference > BigInt::zero();
            Ok(Output {
                text: render::render_trace(&t, format)?,
                status: if sound { EXIT_CLEAN } else { EXIT_VIOLATED },
                timing: None,
            })
        }
        Command::Scan { kind, max_q } => {
            let r = run_scan(kind, max_q);
            Ok(Output {
                text: render::render_scan(&r, format)?,
                status: if r.is_clean() {
                    EXIT_CLEAN
                } else {
                    EXIT_VIOLATED
                },
                timing: Some(format!(
                    "scan {} finished in {:.3}s",
                    r.scan,
                    r.elapsed.as_secs_f64()
                )),
            })
        }
        Command::Cf { letters } => {
            let w: Word = letters.join(" ").parse()?;
            let value = cf_value(&w)?;
            render::render_cf(&w, &value, format).map(clean)
        }
    }
}

/// Parses `argv` (including the program name), runs the command, and
/// returns the process exit status.
pub fn dispatch<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_CLEAN
            };
        }
    };
    let out = match run(cli.command, cli.format) {
        Ok(out) => out,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Some(line) = &out.timing {
        let _ = writeln!(stderr, "{line}");
    }
    let written = match &cli.out {
        Some(path) => {
            std::fs::write(path, &out.text).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => stdout
            .write_all(out.text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    out.status
}
