//! Step-by-step replay of the induction used to prove `m_{p/q} < m_{p/(q+1)}`.
//!
//! The pair `(A, B) = (c_{p/(q+1)}, c_{p/q})` is first cut in the odd
//! setting `A = μ·11·ν·2`, `B = μ′·2·ν`. The odd case reduces to the even
//! comparison of `μ·2·ν·2` against `μ′·2·ν`, which the induction then peels
//! apart level by level: each level factors the current pair as
//! `μ_k·11·δ_k·2·ν_k·2` / `μ_k·2·δ_k·11·ν′_k` and recurses on
//! `(ν_k·2, ν′_k)` until `ν_k = ν′_k`.
//!
//! At every level the argument needs three positive quantities. The third
//! one, `N[μ⁻]N[ν′] - N[μ]N[⁻ν′]`, is positive exactly when `[μ̃] < [ν′]`,
//! and that comparison is only guaranteed when `|μ|` is odd.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::continuant::{
    cf_value, continuant, continuant_diff, identity3_check, tail_slot, Identity3,
};
use crate::error::{Error, Result};
use crate::replacement::{
    align, even_factorization, odd_factorization, EvenFactorization, OddFactorization, Parity,
};
use crate::serde_decimal;
use crate::snake::{markov_number, snake_word, Index};
use crate::word::Word;

/// The three quantities whose positivity each induction level relies on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepQuantities {
    /// `N[ν,2] - N[ν′]`
    #[serde(with = "serde_decimal")]
    pub q1: BigInt,
    /// `N[⁻ν,2] - N[⁻ν′]`
    #[serde(with = "serde_decimal")]
    pub q2: BigInt,
    /// `N[μ⁻]N[ν′] - N[μ]N[⁻ν′]`
    #[serde(with = "serde_decimal")]
    pub q3: BigInt,
}

pub fn even_step_quantities(mu: &Word, nu: &Word, nu_prime: &Word) -> Result<StepQuantities> {
    let mu_head = mu.strip_last().map_err(|_| Error::TooShort("μ⁻"))?;
    quantities(continuant(&mu_head), mu, nu, nu_prime)
}

/// Like [`even_step_quantities`], but an empty `μ` is allowed and `N[ε⁻]`
/// takes the recurrence's `K_{-1} = 0`, giving `q3 = -N[⁻ν′]`.
fn level_quantities(mu: &Word, nu: &Word, nu_prime: &Word) -> Result<StepQuantities> {
    let head = match mu.strip_last() {
        Ok(head) => continuant(&head),
        Err(_) => BigUint::zero(),
    };
    quantities(head, mu, nu, nu_prime)
}

fn quantities(mu_head: BigUint, mu: &Word, nu: &Word, nu_prime: &Word) -> Result<StepQuantities> {
    let two = word![2];
    let nu_tail = nu.strip_first().map_err(|_| Error::TooShort("⁻ν"))?;
    let nu_prime_tail = nu_prime.strip_first().map_err(|_| Error::TooShort("⁻ν′"))?;
    Ok(StepQuantities {
        q1: continuant_diff(&Word::concat([nu, &two]), nu_prime),
        q2: continuant_diff(&Word::concat([&nu_tail, &two]), &nu_prime_tail),
        q3: BigInt::from(mu_head * continuant(nu_prime))
            - BigInt::from(continuant(mu) * continuant(&nu_prime_tail)),
    })
}

/// `N[μ,1,1,δ,2,ν,2] - N[μ,2,δ,1,1,ν]`, the difference at the recursion base.
pub fn base_difference(mu: &Word, delta: &Word, nu: &Word) -> Result<BigInt> {
    if delta.iter().any(|l| l != 2) {
        return Err(Error::DeltaNotTwos);
    }
    let (one_one, two) = (word![1, 1], word![2]);
    Ok(continuant_diff(
        &Word::concat([mu, &one_one, delta, &two, nu, &two]),
        &Word::concat([mu, &two, delta, &one_one, nu]),
    ))
}

/// `m_{p/(q+1)} - m_{p/q}`.
pub fn overall_difference(idx: Index) -> BigInt {
    BigInt::from(markov_number(idx.next_denominator())) - BigInt::from(markov_number(idx))
}

/// Exact values on both sides of `[μ̃] < [ν′]`. `mu_reversed` is `None`
/// when `μ = ε`, read as `[ε] = 1/0`, which is never below `[ν′]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CfComparison {
    #[serde(serialize_with = "serialize_extended")]
    pub mu_reversed: Option<BigRational>,
    #[serde(with = "serde_decimal")]
    pub nu_prime: BigRational,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditStep {
    pub level: usize,
    pub factorization: EvenFactorization,
    pub quantities: StepQuantities,
    pub mu_parity: Parity,
    pub cf: CfComparison,
    pub is_base: bool,
    #[serde(with = "serde_decimal::option")]
    pub base_difference: Option<BigInt>,
}

fn serialize_extended<S: serde::Serializer>(
    value: &Option<BigRational>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(v) => serializer.collect_str(v),
        None => serializer.serialize_str("1/0"),
    }
}

impl CfComparison {
    fn new(mu: &Word, nu_prime: &Word) -> Result<Self> {
        let mu_reversed = match mu.is_empty() {
            true => None,
            false => Some(cf_value(&mu.reverse())?),
        };
        let nu_prime = cf_value(nu_prime).map_err(|_| Error::TooShort("ν′"))?;
        let holds = mu_reversed.as_ref().is_some_and(|m| *m < nu_prime);
        Ok(CfComparison {
            mu_reversed,
            nu_prime,
            holds,
        })
    }

    pub fn is_tie(&self) -> bool {
        self.mu_reversed.as_ref() == Some(&self.nu_prime)
    }
}

impl AuditStep {
    /// `sign(q3) > 0` iff `[μ̃] < [ν′]`, and `q3 = 0` iff they are equal.
    pub fn sign_bridge_holds(&self) -> bool {
        let q3 = &self.quantities.q3;
        (*q3 > BigInt::zero()) == self.cf.holds && q3.is_zero() == self.cf.is_tie()
    }

    /// A level is defective when its common prefix has even length or the
    /// continued-fraction inequality fails.
    pub fn is_defective(&self) -> bool {
        self.mu_parity == Parity::Even || !self.cf.holds
    }
}

/// The odd-case reduction `N[μ,1,1,ν,2] - N[μ′,2,ν] = (N[μ,2,ν,2] - N[μ′,2,ν]) + N[μ⁻]N[⁻(ν,2)]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddStep {
    pub factorization: OddFactorization,
    pub identity: Identity3,
    /// `N[μ,1,1,ν,2] - N[μ′,2,ν]`
    #[serde(with = "serde_decimal")]
    pub total: BigInt,
    /// `N[μ,2,ν,2] - N[μ′,2,ν]`
    #[serde(with = "serde_decimal")]
    pub main: BigInt,
    /// `N[μ⁻]·N[tail_slot(ν)]`
    #[serde(with = "serde_decimal")]
    pub correction: BigUint,
}

impl OddStep {
    pub fn balances(&self) -> bool {
        self.identity.holds && self.total == &self.main + BigInt::from(self.correction.clone())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Verdict {
    /// Set when the even comparison does not have the shape the induction
    /// expects (fewer than two replacements), so no level was replayed.
    pub out_of_pattern: Option<String>,
    pub first_even_prefix: Option<usize>,
    pub first_cf_failure: Option<usize>,
}

impl Verdict {
    /// The first level at which the published argument breaks.
    pub fn defect_level(&self) -> Option<usize> {
        match (self.first_even_prefix, self.first_cf_failure) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(reason) = &self.out_of_pattern {
            return write!(f, "out-of-pattern: {reason}");
        }
        match self.defect_level() {
            None => f.write_str("no defect found"),
            Some(level) => {
                write!(f, "defect at level {level}")?;
                let mut causes = Vec::new();
                if self.first_even_prefix == Some(level) {
                    causes.push("common prefix has even length");
                }
                if self.first_cf_failure == Some(level) {
                    causes.push("continued-fraction inequality fails");
                }
                write!(f, " ({})", causes.join("; "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditTrace {
    /// `p/(q+1)`
    pub longer: Index,
    /// `p/q`
    pub shorter: Index,
    pub odd: OddStep,
    pub steps: Vec<AuditStep>,
    pub verdict: Verdict,
    #[serde(with = "serde_decimal")]
    pub overall_difference: BigInt,
}

/// Replays the argument for the pair `(p/(q+1), p/q)`.
pub fn audit_pair(idx: Index) -> Result<AuditTrace> {
    let longer = idx.next_denominator();
    let a = snake_word(longer);
    let b = snake_word(idx);
    let odd = odd_factorization(&a, &b)?;

    let two = word![2];
    let main_a = Word::concat([&odd.mu, &two, &odd.nu, &two]);
    let main_b = Word::concat([&odd.mu_prime, &two, &odd.nu]);
    let correction = continuant(&odd.mu.strip_last()?) * continuant(&tail_slot(&odd.nu));
    let odd_step = OddStep {
        identity: identity3_check(&odd.mu, &odd.nu)?,
        total: continuant_diff(&a, &b),
        main: continuant_diff(&main_a, &main_b),
        correction,
        factorization: odd,
    };

    let mut verdict = Verdict::default();
    let mut steps: Vec<AuditStep> = Vec::new();
    let (mut cur_a, mut cur_b) = (main_a, main_b);
    loop {
        let level = steps.len() + 1;
        let count = align(&cur_a, &cur_b)?.replacements.len();
        if count < 2 {
            verdict.out_of_pattern = Some(format!(
                "level {level} comparison has {count} replacement{}; the even case needs at least two",
                if count == 1 { "" } else { "s" }
            ));
            break;
        }
        let f = even_factorization(&cur_a, &cur_b)?;
        if let Some(prev) = steps.last() {
            if f.nu.len() >= prev.factorization.nu.len() {
                return Err(Error::DescentStalled(level));
            }
        }
        let quantities = level_quantities(&f.mu, &f.nu, &f.nu_prime)?;
        let cf = CfComparison::new(&f.mu, &f.nu_prime)?;
        let is_base = f.nu == f.nu_prime;
        let step = AuditStep {
            level,
            mu_parity: Parity::of(f.mu.len()),
            base_difference: if is_base {
                Some(base_difference(&f.mu, &f.delta, &f.nu)?)
            } else {
                None
            },
            is_base,
            quantities,
            cf,
            factorization: f,
        };
        if step.mu_parity == Parity::Even && verdict.first_even_prefix.is_none() {
            verdict.first_even_prefix = Some(level);
        }
        if !step.cf.holds && verdict.first_cf_failure.is_none() {
            verdict.first_cf_failure = Some(level);
        }
        let next = (
            Word::concat([&step.factorization.nu, &two]),
            step.factorization.nu_prime.clone(),
        );
        steps.push(step);
        if is_base {
            break;
        }
        (cur_a, cur_b) = next;
    }

    Ok(AuditTrace {
        longer,
        shorter: idx,
        odd: odd_step,
        steps,
        verdict,
        overall_difference: overall_difference(idx),
    })
}
