// Replays the induction for m_{p/q} < m_{p/(q+1)} and prints where it breaks.
//
// cargo run --example audit_trace [p/q] [--json]

use markov_audit::render::{render_trace, Format};
use markov_audit::{audit_pair, Index};

pub fn run_example(idx: Index, format: Format) -> markov_audit::Result<()> {
    let trace = audit_pair(idx)?;
    print!("{}", render_trace(&trace, format)?);
    Ok(())
}

fn main() -> markov_audit::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let format = if args.iter().any(|a| a == "--json") {
        Format::Json
    } else {
        Format::Plain
    };
    let indices: Vec<Index> = args
        .iter()
        .filter(|a| !a.starts_with("--"))
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    if indices.is_empty() {
        run_example(Index::new(9, 13)?, format)?;
        println!();
        run_example(Index::new(1, 4)?, format)
    } else {
        indices
            .into_iter()
            .try_for_each(|idx| run_example(idx, format))
    }
}
