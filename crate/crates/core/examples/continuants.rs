// Continuants, exact continued fractions, and the odd-case splitting identity.
//
// cargo run --example continuants

use markov_audit::{cf_less, cf_value, continuant, identity3_check, tail_slot, word};

pub fn run_example() -> markov_audit::Result<()> {
    for w in [
        word![],
        word![2, 1, 1, 2],
        word![2, 1, 1, 1, 1, 2],
        word![2, 2, 2, 2],
    ] {
        println!("N[{w}] = {}", continuant(&w));
    }

    let w = word![1, 1, 2];
    println!(
        "[{w}] = {}  (N[w]/N[⁻w] = {}/{})",
        cf_value(&w)?,
        continuant(&w),
        continuant(&w.strip_first()?)
    );

    // ν = ε: the N[⁻ν, 2] slot collapses to N[ ] = 1.
    let nu = word![];
    println!(
        "tail_slot({nu}) = {}  N = {}",
        tail_slot(&nu),
        continuant(&tail_slot(&nu))
    );

    for (mu, nu) in [
        (word![2], word![]),
        (word![2, 2], word![2]),
        (word![2, 1, 1, 1, 1], word![]),
    ] {
        let id = identity3_check(&mu, &nu)?;
        println!(
            "μ = {mu}, ν = {nu}: N[μ,1,1,ν,2] = {} = {} ... {}",
            id.lhs, id.rhs, id.holds
        );
    }

    let (mu1, nu_prime_1) = (word![2, 2], word![2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 2]);
    println!(
        "[{}] < [{nu_prime_1}]: {}",
        mu1.reverse(),
        cf_less(&mu1.reverse(), &nu_prime_1)?
    );
    Ok(())
}

fn main() -> markov_audit::Result<()> {
    run_example()
}
