// Exhaustive checks of the fixed numerator/denominator/sum orderings, the
// consecutive-denominator inequality, and the audit sweep.
//
// cargo run --release --example conjecture_scans [max_q]

use markov_audit::render::{render_scan, Format};
use markov_audit::{run_scan, ScanKind};

pub fn run_example(max_q: u32) -> markov_audit::Result<bool> {
    let mut clean = true;
    for name in [
        "numerator",
        "denominator",
        "sum",
        "theorem52",
        "facts",
        "oracle",
        "audits",
    ] {
        let kind: ScanKind = name.parse()?;
        let report = run_scan(kind, max_q);
        clean &= report.is_clean();
        print!("{}", render_scan(&report, Format::Plain)?);
        println!("  ({:.2?})", report.elapsed);
    }
    Ok(clean)
}

fn main() -> markov_audit::Result<()> {
    let max_q = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(60);
    if !run_example(max_q)? {
        std::process::exit(1);
    }
    Ok(())
}
