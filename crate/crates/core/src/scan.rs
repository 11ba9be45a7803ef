//! Exhaustive range scans over Markov-number indices.
//!
//! Every scan fans out over denominators with rayon and assembles a
//! [`ScanReport`] whose counterexamples are sorted by `(q, p, i)`, so the
//! report does not depend on scheduling.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::audit::audit_pair;
use crate::error::{Error, Result};
use crate::oracle::{triple_tree, triple_tree_oracle};
use crate::replacement::pair_report;
use crate::snake::{fact_basic_report, markov_number, Index};

pub const DEFAULT_MAX_Q: u32 = 150;

/// Label attached to results for indices with `gcd(p, q) > 1`.
pub const CONDITIONAL_LABEL: &str = "non-coprime, reconstruction-dependent";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanVerdict {
    Clean,
    Violated,
}

impl fmt::Display for ScanVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScanVerdict::Clean => "clean",
            ScanVerdict::Violated => "violated",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(skip)]
    key: (u32, u32, u32),
    pub indices: String,
    pub reason: String,
    pub witnesses: Vec<String>,
}

impl Counterexample {
    fn new(
        key: (u32, u32, u32),
        indices: String,
        reason: impl Into<String>,
        witnesses: Vec<String>,
    ) -> Self {
        Counterexample {
            key,
            indices,
            reason: reason.into(),
            witnesses,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub scan: String,
    pub max_q: u32,
    pub pairs_checked: u64,
    pub verdict: ScanVerdict,
    pub counterexamples: Vec<Counterexample>,
    /// Non-coprime indices that were checked; their outcome depends on the
    /// floor-block word construction.
    pub conditional: Vec<String>,
    pub notes: Vec<String>,
    /// Wall-clock time. Not serialized, so rendered reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ScanReport {
    fn finish(
        scan: &str,
        max_q: u32,
        pairs_checked: u64,
        mut counterexamples: Vec<Counterexample>,
        conditional: Vec<String>,
        notes: Vec<String>,
        started: Instant,
    ) -> Self {
        counterexamples.sort_by_key(|c| c.key);
        ScanReport {
            scan: scan.to_string(),
            max_q,
            pairs_checked,
            verdict: if counterexamples.is_empty() {
                ScanVerdict::Clean
            } else {
                ScanVerdict::Violated
            },
            counterexamples,
            conditional,
            notes,
            elapsed: started.elapsed(),
        }
    }

    pub fn is_clean(&self) -> bool {
        self.verdict == ScanVerdict::Clean
    }
}

/// `m_{p/q}` for every `1 <= p < q <= max_q`.
pub struct MarkovTable {
    rows: Vec<Vec<BigUint>>,
}

impl MarkovTable {
    pub fn build(max_q: u32) -> Self {
        let rows = (0..=max_q)
            .into_par_iter()
            .map(|q| {
                (0..q)
                    .map(|p| match Index::new(p, q) {
                        Ok(idx) => markov_number(idx),
                        Err(_) => BigUint::zero(),
                    })
                    .collect()
            })
            .collect();
        MarkovTable { rows }
    }

    /// Panics outside the built range.
    pub fn get(&self, p: u32, q: u32) -> &BigUint {
        assert!(p >= 1 && p < q, "index out of range: {p}/{q}");
        &self.rows[q as usize][p as usize]
    }
}

fn coprime(a: u32, b: u32) -> bool {
    a.gcd(&b) == 1
}

/// `m_{p/q} < m_{p/(q+i)}` whenever `gcd(q, p) = gcd(q+i, p) = 1`, `q + i <= max_q`.
pub fn scan_fixed_numerator(max_q: u32) -> ScanReport {
    let started = Instant::now();
    let table = MarkovTable::build(max_q);
    let (checked, cex) = (2..max_q)
        .into_par_iter()
        .map(|q| {
            let mut checked = 0u64;
            let mut cex = Vec::new();
            for p in (1..q).filter(|&p| coprime(p, q)) {
                for i in (1..=max_q - q).filter(|&i| coprime(q + i, p)) {
                    checked += 1;
                    let (lo, hi) = (table.get(p, q), table.get(p, q + i));
                    if lo >= hi {
                        cex.push(Counterexample::new(
                            (q, p, i),
                            format!("{p}/{q} vs {p}/{}", q + i),
                            "m_{p/q} >= m_{p/(q+i)}",
                            vec![lo.to_string(), hi.to_string()],
                        ));
                    }
                }
            }
            (checked, cex)
        })
        .reduce(|| (0, Vec::new()), merge);
    ScanReport::finish(
        "numerator",
        max_q,
        checked,
        cex,
        Vec::new(),
        Vec::new(),
        started,
    )
}

/// `m_{p/q} < m_{(p+i)/q}` for reduced `p/q`, `(p+i)/q` with `p + i < q <= max_q`.
pub fn scan_fixed_denominator(max_q: u32) -> ScanReport {
    let started = Instant::now();
    let table = MarkovTable::build(max_q);
    let (checked, cex) = (2..=max_q)
        .into_par_iter()
        .map(|q| {
            let reduced: Vec<u32> = (1..q).filter(|&p| coprime(p, q)).collect();
            let mut checked = 0u64;
            let mut cex = Vec::new();
            for (k, &p) in reduced.iter().enumerate() {
                for &r in &reduced[k + 1..] {
                    checked += 1;
                    let (lo, hi) = (table.get(p, q), table.get(r, q));
                    if lo >= hi {
                        cex.push(Counterexample::new(
                            (q, p, r - p),
                            format!("{p}/{q} vs {r}/{q}"),
                            "m_{p/q} >= m_{(p+i)/q}",
                            vec![lo.to_string(), hi.to_string()],
                        ));
                    }
                }
            }
            (checked, cex)
        })
        .reduce(|| (0, Vec::new()), merge);
    ScanReport::finish(
        "denominator",
        max_q,
        checked,
        cex,
        Vec::new(),
        Vec::new(),
        started,
    )
}

/// For reduced `p/q`, `p′/q′` with `p + q = p′ + q′`, `p < p′` and both
/// denominators `<= max_q`: `m_{p/q} > m_{p′/q′}`.
pub fn scan_fixed_sum(max_q: u32) -> ScanReport {
    let started = Instant::now();
    let table = MarkovTable::build(max_q);
    let max_sum = (2 * max_q).saturating_sub(1);
    let (checked, cex) = (3..=max_sum)
        .into_par_iter()
        .map(|s| {
            let members: Vec<(u32, u32)> = (1..s)
                .map(|p| (p, s - p))
                .filter(|&(p, q)| p < q && q <= max_q && coprime(p, q))
                .collect();
            let mut checked = 0u64;
            let mut cex = Vec::new();
            for (k, &(p, q)) in members.iter().enumerate() {
                for &(pp, qq) in &members[k + 1..] {
                    checked += 1;
                    let (big, small) = (table.get(p, q), table.get(pp, qq));
                    if big <= small {
                        cex.push(Counterexample::new(
                            (q, p, pp - p),
                            format!("{p}/{q} vs {pp}/{qq}"),
                            "m_{p/q} <= m_{p'/q'} with p < p' and equal sums",
                            vec![big.to_string(), small.to_string()],
                        ));
                    }
                }
            }
            (checked, cex)
        })
        .reduce(|| (0, Vec::new()), merge);
    ScanReport::finish("sum", max_q, checked, cex, Vec::new(), Vec::new(), started)
}

/// `m_{p/q} < m_{p/(q+1)}` for every `p < q`, `q + 1 <= max_q`, with no gcd condition.
pub fn scan_theorem52(max_q: u32) -> ScanReport {
    let started = Instant::now();
    let table = MarkovTable::build(max_q);
    let (checked, cex, conditional) = (2..max_q)
        .into_par_iter()
        .map(|q| {
            let mut cex = Vec::new();
            let mut conditional = Vec::new();
            for p in 1..q {
                let (lo, hi) = (table.get(p, q), table.get(p, q + 1));
                if !coprime(p, q) || !coprime(p, q + 1) {
                    conditional.push(format!("{p}/{q}"));
                }
                if lo >= hi {
                    cex.push(Counterexample::new(
                        (q, p, 1),
                        format!("{p}/{q} vs {p}/{}", q + 1),
                        "m_{p/q} >= m_{p/(q+1)}",
                        vec![lo.to_string(), hi.to_string()],
                    ));
                }
            }
            (u64::from(q - 1), cex, conditional)
        })
        .reduce(
            || (0, Vec::new(), Vec::new()),
            |mut a, b| {
                a.0 += b.0;
                a.1.extend(b.1);
                a.2.extend(b.2);
                a
            },
        );
    let notes = if conditional.is_empty() {
        Vec::new()
    } else {
        vec![format!(
            "{} pairs involve a non-reduced index: {CONDITIONAL_LABEL}",
            conditional.len()
        )]
    };
    ScanReport::finish(
        "theorem52",
        max_q,
        checked,
        cex,
        conditional,
        notes,
        started,
    )
}

/// Structural facts: the five snake-word counts for every `p < q <= max_q`,
/// and the replacement structure of every pair `(p/(q+1), p/q)` with
/// `q + 1 <= max_q`. `pairs_checked` counts the pairs.
pub fn scan_facts(max_q: u32) -> ScanReport {
    let started = Instant::now();
    let (words, pairs, cex) = (2..=max_q)
        .into_par_iter()
        .map(|q| {
            let mut cex = Vec::new();
            let mut pairs = 0u64;
            for p in 1..q {
                let idx = Index::new(p, q).expect("p < q");
                match fact_basic_report(idx) {
                    Ok(r) if r.all_hold() => {}
                    Ok(r) => cex.push(Counterexample::new(
                        (q, p, 0),
                        idx.to_string(),
                        "basic counts",
                        vec![
                            format!("endpoints={}", r.endpoints),
                            format!("ones={}/{}", r.ones.observed, r.ones.expected),
                            format!("twos={}/{}", r.twos.observed, r.twos.expected),
                            format!("length={}/{}", r.length.observed, r.length.expected),
                            format!("entries={}/{}", r.entries.observed, r.entries.expected),
                        ],
                    )),
                    Err(e) => cex.push(Counterexample::new(
                        (q, p, 0),
                        idx.to_string(),
                        e.to_string(),
                        vec![],
                    )),
                }
                if q + 1 > max_q {
                    continue;
                }
                pairs += 1;
                let label = format!("{p}/{} vs {idx}", q + 1);
                match pair_report(idx) {
                    Ok(r) if r.all_hold() => {}
                    Ok(r) => cex.push(Counterexample::new(
                        (q, p, 1),
                        label,
                        "replacement structure",
                        vec![
                            format!("replacements={}", r.replacements),
                            format!("alternating={}", r.alternating),
                            format!("starts_with_11_in_a={}", r.starts_with_ones_in_a),
                            format!("residuals_ok={}", r.residuals_ok),
                            format!("ones_gap={}", r.ones_gap),
                            format!("entry_gap={}", r.entry_gap),
                            format!("fact2={}", r.fact2.holds),
                            format!("fact3={}", r.fact3),
                        ],
                    )),
                    Err(e) => {
                        cex.push(Counterexample::new((q, p, 1), label, e.to_string(), vec![]))
                    }
                }
            }
            (u64::from(q - 1), pairs, cex)
        })
        .reduce(
            || (0, 0, Vec::new()),
            |mut a, b| {
                a.0 += b.0;
                a.1 += b.1;
                a.2.extend(b.2);
                a
            },
        );
    let notes = vec![format!("basic counts checked on {words} words")];
    ScanReport::finish("facts", max_q, pairs, cex, Vec::new(), notes, started)
}

/// Word-built `m_{p/q}` against the triple-tree oracle on every reduced
/// `p/q` with `q <= max_q`, and the Markov equation on every tree node.
pub fn oracle_cross_check(max_q: u32) -> ScanReport {
    let started = Instant::now();
    let (checked, mut cex) = (2..=max_q)
        .into_par_iter()
        .map(|q| {
            let mut checked = 0u64;
            let mut cex = Vec::new();
            for p in (1..q).filter(|&p| coprime(p, q)) {
                checked += 1;
                let word_value = markov_number(Index::new(p, q).expect("p < q"));
                match triple_tree_oracle(p, q) {
                    Ok(v) if v == word_value => {}
                    Ok(v) => cex.push(Counterexample::new(
                        (q, p, 0),
                        format!("{p}/{q}"),
                        "word continuant differs from tree value",
                        vec![word_value.to_string(), v.to_string()],
                    )),
                    Err(e) => cex.push(Counterexample::new(
                        (q, p, 0),
                        format!("{p}/{q}"),
                        e.to_string(),
                        vec![],
                    )),
                }
            }
            (checked, cex)
        })
        .reduce(|| (0, Vec::new()), merge);
    let nodes = triple_tree(max_q);
    for node in nodes.iter().filter(|n| !n.satisfies_markov_equation()) {
        let (p, q) = node.mediant();
        cex.push(Counterexample::new(
            (q, p, 1),
            format!("{p}/{q}"),
            "triple violates a^2+b^2+c^2=3abc",
            vec![
                node.left_value.to_string(),
                node.right_value.to_string(),
                node.mediant_value().to_string(),
            ],
        ));
    }
    let notes = vec![format!(
        "{} tree triples checked against the Markov equation",
        nodes.len()
    )];
    ScanReport::finish("oracle", max_q, checked, cex, Vec::new(), notes, started)
}

/// Runs [`audit_pair`] on every `p < q` with `q + 1 <= max_q` and checks
/// that the odd-case identity balances, the `q3`/continued-fraction sign
/// bridge holds at every level, and `m_{p/(q+1)} - m_{p/q} > 0` even for
/// traces that report a defect.
pub fn scan_audits(max_q: u32) -> ScanReport {
    #[derive(Default)]
    struct Tally {
        pairs: u64,
        levels: u64,
        defects: u64,
        out_of_pattern: u64,
        cex: Vec<Counterexample>,
    }
    let started = Instant::now();
    let tally = (2..max_q)
        .into_par_iter()
        .map(|q| {
            let mut t = Tally::default();
            for p in 1..q {
                let idx = Index::new(p, q).expect("p < q");
                t.pairs += 1;
                let label = format!("{p}/{} vs {idx}", q + 1);
                let trace = match audit_pair(idx) {
                    Ok(trace) => trace,
                    Err(e) => {
                        t.cex
                            .push(Counterexample::new((q, p, 0), label, e.to_string(), vec![]));
                        continue;
                    }
                };
                t.levels += trace.steps.len() as u64;
                if trace.verdict.out_of_pattern.is_some() {
                    t.out_of_pattern += 1;
                }
                if !trace.odd.balances() {
                    t.cex.push(Counterexample::new(
                        (q, p, 1),
                        label.clone(),
                        "odd-case identity does not balance",
                        vec![
                            trace.odd.identity.lhs.to_string(),
                            trace.odd.identity.rhs.to_string(),
                        ],
                    ));
                }
                if let Some(step) = trace.steps.iter().find(|s| !s.sign_bridge_holds()) {
                    t.cex.push(Counterexample::new(
                        (q, p, 2),
                        label.clone(),
                        format!("sign bridge fails at level {}", step.level),
                        vec![step.quantities.q3.to_string(), step.cf.holds.to_string()],
                    ));
                }
                if trace.verdict.defect_level().is_some() {
                    t.defects += 1;
                }
                if trace.overall_difference <= BigInt::zero() {
                    t.cex.push(Counterexample::new(
                        (q, p, 3),
                        label,
                        "m_{p/(q+1)} - m_{p/q} is not positive",
                        vec![trace.overall_difference.to_string()],
                    ));
                }
            }
            t
        })
        .reduce(Tally::default, |mut a, b| {
            a.pairs += b.pairs;
            a.levels += b.levels;
            a.defects += b.defects;
            a.out_of_pattern += b.out_of_pattern;
            a.cex.extend(b.cex);
            a
        });
    let notes = vec![
        format!("{} induction levels replayed", tally.levels),
        format!("{} traces with a defective level", tally.defects),
        format!("{} traces out of pattern", tally.out_of_pattern),
    ];
    ScanReport::finish(
        "audits",
        max_q,
        tally.pairs,
        tally.cex,
        Vec::new(),
        notes,
        started,
    )
}

fn merge(
    mut a: (u64, Vec<Counterexample>),
    b: (u64, Vec<Counterexample>),
) -> (u64, Vec<Counterexample>) {
    a.0 += b.0;
    a.1.extend(b.1);
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AignerVariant {
    Numerator,
    Denominator,
    Sum,
}

impl FromStr for AignerVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "numerator" => Ok(AignerVariant::Numerator),
            "denominator" => Ok(AignerVariant::Denominator),
            "sum" => Ok(AignerVariant::Sum),
            other => Err(Error::UnknownVariant(other.to_string())),
        }
    }
}

pub fn scan_aigner(max_q: u32, variant: AignerVariant) -> ScanReport {
    match variant {
        AignerVariant::Numerator => scan_fixed_numerator(max_q),
        AignerVariant::Denominator => scan_fixed_denominator(max_q),
        AignerVariant::Sum => scan_fixed_sum(max_q),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanKind {
    Aigner(AignerVariant),
    Facts,
    Theorem52,
    Oracle,
    Audits,
}

impl FromStr for ScanKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "facts" => Ok(ScanKind::Facts),
            "theorem52" => Ok(ScanKind::Theorem52),
            "oracle" => Ok(ScanKind::Oracle),
            "audits" => Ok(ScanKind::Audits),
            other => other.parse().map(ScanKind::Aigner),
        }
    }
}

pub fn run_scan(kind: ScanKind, max_q: u32) -> ScanReport {
    match kind {
        ScanKind::Aigner(v) => scan_aigner(max_q, v),
        ScanKind::Facts => scan_facts(max_q),
        ScanKind::Theorem52 => scan_theorem52(max_q),
        ScanKind::Oracle => oracle_cross_check(max_q),
        ScanKind::Audits => scan_audits(max_q),
    }
}
