//! Exact construction of the continued-fraction words behind Markov numbers
//! `m_{p/q}`, the replacement structure between consecutive denominators, and
//! a mechanical replay of the induction argument for `m_{p/q} < m_{p/(q+1)}`.
//!
//! ```
//! use markov_audit::{audit_pair, markov_number, snake_word, word, Index};
//!
//! let idx = Index::new(1, 4).unwrap();
//! assert_eq!(snake_word(idx), word![2, 1, 1, 1, 1, 2]);
//! assert_eq!(markov_number(idx).to_string(), "34");
//!
//! let trace = audit_pair(Index::new(9, 13).unwrap()).unwrap();
//! assert_eq!(trace.verdict.defect_level(), Some(2));
//! ```
//!
//! Runnable walkthroughs for each capability live in `examples/`.

#[macro_use]
mod word;

pub mod audit;
pub mod cli;
pub mod continuant;
mod error;
pub mod oracle;
pub mod render;
pub mod replacement;
pub mod scan;
mod serde_decimal;
pub mod snake;

pub use audit::{
    audit_pair, base_difference, even_step_quantities, overall_difference, AuditStep, AuditTrace,
    Verdict,
};
pub use continuant::{cf_less, cf_value, continuant, identity3_check, tail_slot, Identity3};
pub use error::{Error, Result};
pub use oracle::{triple_tree, triple_tree_oracle, TripleNode};
pub use replacement::{
    align, decompose, even_factorization, fact2_check, fact3_check, odd_factorization, pair_report,
    Alignment, Entry, EntryKind, EvenFactorization, OddFactorization, Parity,
};
pub use scan::{
    oracle_cross_check, run_scan, scan_aigner, scan_audits, scan_facts, scan_fixed_numerator,
    scan_theorem52, AignerVariant, ScanKind, ScanReport, ScanVerdict,
};
pub use snake::{fact_basic_report, markov_number, snake_word, FactBasicReport, Index};
pub use word::{Letter, Word};
