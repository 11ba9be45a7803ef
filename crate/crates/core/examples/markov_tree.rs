// The Markov-equation tree as an independent oracle for m_{p/q}.
//
// cargo run --example markov_tree [max_q]

use markov_audit::{markov_number, oracle_cross_check, triple_tree, triple_tree_oracle, Index};

pub fn run_example(max_q: u32) -> markov_audit::Result<()> {
    for node in triple_tree(5) {
        let (p, q) = node.mediant();
        println!(
            "{p}/{q}: ({}, {}, {})  a²+b²+c² = 3abc: {}",
            node.left_value,
            node.right_value,
            node.mediant_value(),
            node.satisfies_markov_equation()
        );
    }
    let (p, q) = (2, 5);
    println!(
        "tree m_{p}/{q} = {}, word m_{p}/{q} = {}",
        triple_tree_oracle(p, q)?,
        markov_number(Index::new(p, q)?)
    );
    let report = oracle_cross_check(max_q);
    println!(
        "cross-check up to q = {max_q}: {} fractions, verdict {}",
        report.pairs_checked, report.verdict
    );
    Ok(())
}

fn main() -> markov_audit::Result<()> {
    let max_q = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(50);
    run_example(max_q)
}
