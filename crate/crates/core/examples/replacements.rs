// Entry decomposition, replacement alignment, and the odd/even factorizations
// of the consecutive pair (p/(q+1), p/q).
//
// cargo run --example replacements [p/q]

use markov_audit::{
    align, decompose, even_factorization, odd_factorization, snake_word, Index, Word,
};

pub fn run_example(idx: Index) -> markov_audit::Result<()> {
    let longer = idx.next_denominator();
    let (a, b) = (snake_word(longer), snake_word(idx));
    println!("A = c_{longer} = {a}  ({} entries)", decompose(&a)?.len());
    println!("B = c_{idx} = {b}  ({} entries)", decompose(&b)?.len());

    let al = align(&a, &b)?;
    println!(
        "{} replacements ({}), alternating: {}",
        al.replacements.len(),
        al.parity,
        al.alternates()
    );
    for r in &al.replacements {
        println!("  entry {:>3}: {:>2} vs {}", r.entry, r.kind_a, r.kind_b);
    }
    println!("residuals: A = {}, B = {}", al.residual_a, al.residual_b);

    let odd = odd_factorization(&a, &b)?;
    println!(
        "odd setting: μ = {}, μ′ = {}, ν = {}",
        odd.mu, odd.mu_prime, odd.nu
    );

    let two = markov_audit::word![2];
    let mut pair = (
        Word::concat([&odd.mu, &two, &odd.nu, &two]),
        Word::concat([&odd.mu_prime, &two, &odd.nu]),
    );
    let mut level = 1;
    while let Ok(f) = even_factorization(&pair.0, &pair.1) {
        println!(
            "even level {level}: μ = {}, δ = {}, ν = {}, ν′ = {}",
            f.mu, f.delta, f.nu, f.nu_prime
        );
        if f.nu == f.nu_prime {
            break;
        }
        pair = (Word::concat([&f.nu, &two]), f.nu_prime);
        level += 1;
    }
    Ok(())
}

fn main() -> markov_audit::Result<()> {
    let idx = match std::env::args().nth(1) {
        Some(s) => s.parse()?,
        None => Index::new(9, 13)?,
    };
    run_example(idx)
}
