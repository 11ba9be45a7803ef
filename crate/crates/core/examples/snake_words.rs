// Quotient words c_{p/q}, their Markov numbers, and the five structural counts.
//
// cargo run --example snake_words [p/q ...]

use markov_audit::{fact_basic_report, markov_number, snake_word, Index};

pub fn run_example(indices: &[Index]) -> markov_audit::Result<()> {
    for &idx in indices {
        let w = snake_word(idx);
        let facts = fact_basic_report(idx)?;
        println!("c_{idx} = [{w}]");
        println!("  m_{idx} = {}", markov_number(idx));
        println!(
            "  |w| = {}, |w|_1 = {}, |w|_2 = {}, entries = {}, all counts hold: {}",
            facts.length.observed,
            facts.ones.observed,
            facts.twos.observed,
            facts.entries.observed,
            facts.all_hold()
        );
    }
    Ok(())
}

fn main() -> markov_audit::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let indices = if args.is_empty() {
        ["1/4", "1/5", "9/13", "9/14"]
            .map(|s| s.parse().unwrap())
            .to_vec()
    } else {
        args.iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Index>, _>>()?
    };
    run_example(&indices)
}
