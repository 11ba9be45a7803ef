//! Plain, JSON, and CSV renderings of everything the CLI prints.
//!
//! Big integers are always written as decimal strings and words in the
//! shared text format. Output is a pure function of the value rendered.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::audit::{AuditStep, AuditTrace};
use crate::error::{Error, Result};
use crate::replacement::{Alignment, Parity};
use crate::scan::ScanReport;
use crate::snake::{FactBasicReport, Index};
use crate::word::Word;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Format::Plain),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn csv_records<I, R>(records: I) -> Result<String>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    for r in records {
        w.write_record(r)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Serialize(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Serialize(e.to_string()))
}

pub fn render_word(idx: Index, w: &Word, format: Format) -> Result<String> {
    match format {
        Format::Plain => Ok(format!("{w}\n")),
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                index: Index,
                word: &'a Word,
                length: usize,
            }
            json(&Doc {
                index: idx,
                word: w,
                length: w.len(),
            })
        }
        Format::Csv => csv_records([w.iter().map(|l| l.to_string()).collect::<Vec<_>>()]),
    }
}

pub fn render_markov(idx: Index, value: &BigUint, format: Format) -> Result<String> {
    match format {
        Format::Plain => Ok(format!("{value}\n")),
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                index: Index,
                markov: String,
            }
            json(&Doc {
                index: idx,
                markov: value.to_string(),
            })
        }
        Format::Csv => csv_records([[value.to_string()]]),
    }
}

pub fn render_cf(w: &Word, value: &BigRational, format: Format) -> Result<String> {
    match format {
        Format::Plain => Ok(format!("{value}\n")),
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                word: &'a Word,
                value: String,
                numerator: String,
                denominator: String,
            }
            json(&Doc {
                word: w,
                value: value.to_string(),
                numerator: value.numer().to_string(),
                denominator: value.denom().to_string(),
            })
        }
        Format::Csv => csv_records([
            ["numerator".to_string(), "denominator".to_string()],
            [value.numer().to_string(), value.denom().to_string()],
        ]),
    }
}

pub fn render_facts(r: &FactBasicReport, format: Format) -> Result<String> {
    let rows = [
        ("ones", r.ones),
        ("twos", r.twos),
        ("length", r.length),
        ("entries", r.entries),
    ];
    match format {
        Format::Plain => {
            let mut s = format!("facts for {}\n", r.index);
            let mark = |ok: bool| if ok { "ok" } else { "FAIL" };
            writeln!(
                s,
                "  (a) first and last letter are 2: {}",
                mark(r.endpoints)
            )
            .unwrap();
            for (label, (name, c)) in ["(b)", "(c)", "(d)", "(e)"].iter().zip(rows) {
                writeln!(
                    s,
                    "  {label} {name}: observed {}, expected {}: {}",
                    c.observed,
                    c.expected,
                    mark(c.holds())
                )
                .unwrap();
            }
            writeln!(s, "all hold: {}", r.all_hold()).unwrap();
            Ok(s)
        }
        Format::Json => json(r),
        Format::Csv => {
            let mut header = vec!["index".to_string(), "endpoints".to_string()];
            let mut row = vec![r.index.to_string(), r.endpoints.to_string()];
            for (name, c) in rows {
                header.push(format!("{name}_observed"));
                header.push(format!("{name}_expected"));
                row.push(c.observed.to_string());
                row.push(c.expected.to_string());
            }
            header.push("all_hold".into());
            row.push(r.all_hold().to_string());
            csv_records([header, row])
        }
    }
}

pub fn render_alignment(
    (ia, a): (Index, &Word),
    (ib, b): (Index, &Word),
    al: &Alignment,
    format: Format,
) -> Result<String> {
    match format {
        Format::Plain => {
            let mut s = String::new();
            writeln!(s, "A = c_{ia}: {a}").unwrap();
            writeln!(s, "B = c_{ib}: {b}").unwrap();
            writeln!(s, "replacements: {} ({})", al.replacements.len(), al.parity).unwrap();
            for r in &al.replacements {
                writeln!(
                    s,
                    "  entry {}: A@{} {} vs B@{} {}",
                    r.entry, r.offset_a, r.kind_a, r.offset_b, r.kind_b
                )
                .unwrap();
            }
            writeln!(s, "matched entries: {}", al.matched).unwrap();
            writeln!(s, "residual A: {}", al.residual_a).unwrap();
            writeln!(s, "residual B: {}", al.residual_b).unwrap();
            Ok(s)
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                a: Index,
                b: Index,
                word_a: &'a Word,
                word_b: &'a Word,
                #[serde(flatten)]
                alignment: &'a Alignment,
            }
            json(&Doc {
                a: ia,
                b: ib,
                word_a: a,
                word_b: b,
                alignment: al,
            })
        }
        Format::Csv => {
            let header = ["entry", "offset_a", "offset_b", "kind_a", "kind_b"].map(String::from);
            let rows = al.replacements.iter().map(|r| {
                [
                    r.entry.to_string(),
                    r.offset_a.to_string(),
                    r.offset_b.to_string(),
                    r.kind_a.to_string(),
                    r.kind_b.to_string(),
                ]
            });
            csv_records(std::iter::once(header).chain(rows))
        }
    }
}

fn sign_word(n: &BigInt) -> &'static str {
    if n.is_zero() {
        "zero"
    } else if *n > BigInt::zero() {
        "positive"
    } else {
        "negative"
    }
}

fn render_step(s: &mut String, step: &AuditStep) {
    let f = &step.factorization;
    let tag = if step.is_base {
        " (base: ν = ν′)"
    } else {
        ""
    };
    writeln!(s, "level {}{tag}", step.level).unwrap();
    writeln!(
        s,
        "  μ  = {} (length {}, {})",
        f.mu,
        f.mu.len(),
        step.mu_parity
    )
    .unwrap();
    writeln!(s, "  δ  = {}", f.delta).unwrap();
    writeln!(s, "  ν  = {}", f.nu).unwrap();
    writeln!(s, "  ν′ = {}", f.nu_prime).unwrap();
    let q = &step.quantities;
    writeln!(s, "  N[ν,2] - N[ν′] = {}", q.q1).unwrap();
    writeln!(s, "  N[⁻ν,2] - N[⁻ν′] = {}", q.q2).unwrap();
    writeln!(s, "  N[μ⁻]N[ν′] - N[μ]N[⁻ν′] = {}", q.q3).unwrap();
    writeln!(
        s,
        "  [μ̃] = {} < [ν′] = {}: {}",
        step.cf
            .mu_reversed
            .as_ref()
            .map_or("1/0".to_string(), |v| v.to_string()),
        step.cf.nu_prime,
        step.cf.holds
    )
    .unwrap();
    if let Some(d) = &step.base_difference {
        writeln!(s, "  N[μ,1,1,δ,2,ν,2] - N[μ,2,δ,1,1,ν] = {d}").unwrap();
    }
    if step.is_defective() {
        writeln!(
            s,
            "  ! level {}: prefix length {}, CF inequality {}, q3 {}",
            step.level,
            step.mu_parity,
            step.cf.holds,
            sign_word(&q.q3)
        )
        .unwrap();
    }
}

pub fn render_trace(t: &AuditTrace, format: Format) -> Result<String> {
    match format {
        Format::Csv => Err(Error::TraceFormat),
        Format::Json => json(t),
        Format::Plain => {
            let mut s = String::new();
            let o = &t.odd;
            let f = &o.factorization;
            writeln!(s, "audit of m_{} < m_{}", t.shorter, t.longer).unwrap();
            writeln!(s, "odd setting: A = μ 1 1 ν 2, B = μ′ 2 ν").unwrap();
            writeln!(s, "  μ  = {} (length {})", f.mu, f.mu.len()).unwrap();
            writeln!(s, "  μ′ = {}", f.mu_prime).unwrap();
            writeln!(s, "  ν  = {}", f.nu).unwrap();
            writeln!(s, "  N[μ,1,1,ν,2] - N[μ′,2,ν] = {}", o.total).unwrap();
            writeln!(s, "  N[μ,2,ν,2] - N[μ′,2,ν] = {}", o.main).unwrap();
            writeln!(s, "  N[μ⁻]·N[⁻(ν,2)] = {}", o.correction).unwrap();
            writeln!(
                s,
                "  identity N[μ,1,1,ν,2] = N[μ,2,ν,2] + N[μ⁻]·N[⁻(ν,2)]: {} = {}: {}",
                o.identity.lhs,
                o.identity.rhs,
                o.balances()
            )
            .unwrap();
            if f.nu.is_empty() {
                writeln!(s, "  ν is empty, so N[⁻(ν,2)] reads N[ ] = 1").unwrap();
            }
            for step in &t.steps {
                render_step(&mut s, step);
            }
            let parities: Vec<String> = t
                .steps
                .iter()
                .map(|st| match st.mu_parity {
                    Parity::Odd => "odd".into(),
                    Parity::Even => "even".into(),
                })
                .collect();
            if !parities.is_empty() {
                writeln!(s, "prefix parities by level: {}", parities.join(", ")).unwrap();
            }
            writeln!(s, "verdict: {}", t.verdict).unwrap();
            writeln!(
                s,
                "m_{} - m_{} = {} ({})",
                t.longer,
                t.shorter,
                t.overall_difference,
                sign_word(&t.overall_difference)
            )
            .unwrap();
            Ok(s)
        }
    }
}

pub fn render_scan(r: &ScanReport, format: Format) -> Result<String> {
    match format {
        Format::Json => json(r),
        Format::Plain => {
            let mut s = String::new();
            writeln!(s, "scan {} (max q = {})", r.scan, r.max_q).unwrap();
            writeln!(s, "pairs checked: {}", r.pairs_checked).unwrap();
            for note in &r.notes {
                writeln!(s, "note: {note}").unwrap();
            }
            for c in &r.counterexamples {
                writeln!(
                    s,
                    "counterexample {}: {} [{}]",
                    c.indices,
                    c.reason,
                    c.witnesses.join(", ")
                )
                .unwrap();
            }
            writeln!(s, "verdict: {}", r.verdict).unwrap();
            Ok(s)
        }
        Format::Csv => {
            let header = [
                "scan",
                "max_q",
                "pairs_checked",
                "verdict",
                "indices",
                "reason",
                "witnesses",
            ]
            .map(String::from);
            let row = |indices: &str, reason: &str, witnesses: String| {
                [
                    r.scan.clone(),
                    r.max_q.to_string(),
                    r.pairs_checked.to_string(),
                    r.verdict.to_string(),
                    indices.to_string(),
                    reason.to_string(),
                    witnesses,
                ]
            };
            let rows: Vec<[String; 7]> = if r.counterexamples.is_empty() {
                vec![row("", "", String::new())]
            } else {
                r.counterexamples
                    .iter()
                    .map(|c| row(&c.indices, &c.reason, c.witnesses.join(";")))
                    .collect()
            };
            csv_records(std::iter::once(header).chain(rows))
        }
    }
}
