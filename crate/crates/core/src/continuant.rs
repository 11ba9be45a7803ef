//! Continuants and exact finite continued fractions.
//!
//! `N[a_1, ..., a_n]` is the continuant `K(a_1, ..., a_n)`, the numerator of
//! `[a_1, ..., a_n] = a_1 + 1/(a_2 + 1/(... + 1/a_n))`. Everything here is
//! exact; no floating point is involved.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::serde_decimal;
use crate::word::Word;

/// `K(ε) = 1`, `K(a) = a`, `K(a_1..a_n) = a_n K(a_1..a_{n-1}) + K(a_1..a_{n-2})`.
pub fn continuant(w: &Word) -> BigUint {
    let mut prev = BigUint::ZERO;
    let mut cur = BigUint::one();
    for a in w.iter() {
        let next = &cur * a + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Signed difference `N[a] - N[b]`.
pub fn continuant_diff(a: &Word, b: &Word) -> BigInt {
    BigInt::from(continuant(a)) - BigInt::from(continuant(b))
}

/// Exact value of the finite continued fraction `[a_1, a_2, ...]`.
///
/// Evaluated from the last quotient backwards, independently of the
/// forward continuant recurrence.
pub fn cf_value(w: &Word) -> Result<BigRational> {
    let mut rev = w.iter().rev();
    let last = rev.next().ok_or(Error::CfEmpty)?;
    let mut num = BigInt::from(last);
    let mut den = BigInt::one();
    for a in rev {
        let next = &num * a + &den;
        den = std::mem::replace(&mut num, next);
    }
    Ok(BigRational::new(num, den))
}

/// Exact comparison `[u] < [v]`.
pub fn cf_less(u: &Word, v: &Word) -> Result<bool> {
    Ok(cf_value(u)? < cf_value(v)?)
}

/// The `N[⁻ν, 2]` slot: `⁻(v·2)`. For nonempty `v` this is `(⁻v)·2`; for
/// `v = ε` it is `ε`, so `N[tail_slot(ε)] = N[ ] = 1`.
pub fn tail_slot(v: &Word) -> Word {
    Word::concat([v, &word![2]])
        .strip_first()
        .expect("v·2 is never empty")
}

/// Both sides of `N[μ,1,1,ν,2] = N[μ,2,ν,2] + N[μ⁻]·N[⁻(ν,2)]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identity3 {
    #[serde(with = "serde_decimal")]
    pub lhs: BigUint,
    #[serde(with = "serde_decimal")]
    pub rhs: BigUint,
    pub holds: bool,
}

/// Checks the `μ′`-free content of the odd-case splitting identity:
/// `N[mu·11·v·2] = N[mu·2·v·2] + N[mu⁻]·N[tail_slot(v)]`.
pub fn identity3_check(mu: &Word, v: &Word) -> Result<Identity3> {
    let mu_short = mu.strip_last().map_err(|_| Error::EmptyMu)?;
    let two = word![2];
    let lhs = continuant(&Word::concat([mu, &word![1, 1], v, &two]));
    let rhs = continuant(&Word::concat([mu, &two, v, &two]))
        + continuant(&mu_short) * continuant(&tail_slot(v));
    let holds = lhs == rhs;
    Ok(Identity3 { lhs, rhs, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nat(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn continuant_values() {
        assert_eq!(continuant(&word![]), nat(1));
        assert_eq!(continuant(&word![2, 1, 1, 2]), nat(13));
        assert_eq!(continuant(&word![2, 1, 1, 1, 1, 2]), nat(34));
        assert_eq!(continuant(&word![2, 2, 2, 2]), nat(29));
        assert_eq!(continuant(&word![7]), nat(7));
    }

    #[test]
    fn cf_values() {
        assert_eq!(cf_value(&word![2]).unwrap(), rat(2, 1));
        assert_eq!(cf_value(&word![2, 2]).unwrap(), rat(5, 2));
        assert_eq!(cf_value(&word![1, 1, 2]).unwrap(), rat(5, 3));
        assert_eq!(cf_value(&word![]), Err(Error::CfEmpty));
    }

    #[test]
    fn tail_slot_cases() {
        assert_eq!(tail_slot(&word![]), word![]);
        assert_eq!(continuant(&tail_slot(&word![])), nat(1));
        assert_eq!(tail_slot(&word![2]), word![2]);
        assert_eq!(tail_slot(&word![2, 2, 1]), word![2, 1, 2]);
    }

    #[test]
    fn identity3_examples() {
        let r = identity3_check(&word![2], &word![]).unwrap();
        assert_eq!((r.lhs, r.rhs, r.holds), (nat(13), nat(13), true));
        let r = identity3_check(&word![2, 2], &word![2]).unwrap();
        assert_eq!((r.lhs, r.rhs, r.holds), (nat(74), nat(74), true));
        let r = identity3_check(&word![2], &word![2]).unwrap();
        assert_eq!((r.lhs, r.rhs, r.holds), (nat(31), nat(31), true));
        assert_eq!(identity3_check(&word![], &word![2]), Err(Error::EmptyMu));
    }

    #[test]
    fn cf_less_examples() {
        assert!(cf_less(&word![2], &word![2, 2]).unwrap());
        assert!(!cf_less(&word![2, 2], &word![2, 2]).unwrap());
        // [μ̃₁] < [ν′₁] fails at the second level of the 9/13 audit.
        let nu_prime_1 = word![2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 2];
        assert!(!cf_less(&word![2, 2], &nu_prime_1).unwrap());
        assert_eq!(cf_less(&word![], &word![2]), Err(Error::CfEmpty));
    }

    fn letters(max: u32, len: std::ops::Range<usize>) -> impl Strategy<Value = Word> {
        prop::collection::vec(1..=max, len).prop_map(|v| Word::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn recurrence(w in letters(5, 2..40)) {
            let short = w.strip_last().unwrap();
            let shorter = short.strip_last().unwrap();
            prop_assert_eq!(
                continuant(&w),
                continuant(&short) * w.last().unwrap() + continuant(&shorter)
            );
        }

        #[test]
        fn reversal_symmetry(w in letters(5, 0..40)) {
            prop_assert_eq!(continuant(&w), continuant(&w.reverse()));
        }

        #[test]
        fn cf_matches_continuant_ratio(w in letters(5, 1..40)) {
            let expected = BigRational::new(
                continuant(&w).into(),
                continuant(&w.strip_first().unwrap()).into(),
            );
            prop_assert_eq!(cf_value(&w).unwrap(), expected);
        }

        #[test]
        fn identity3_binary(mu in letters(2, 1..30), v in letters(2, 0..30)) {
            prop_assert!(identity3_check(&mu, &v).unwrap().holds);
        }

        #[test]
        fn identity3_wide(mu in letters(5, 1..30), v in letters(5, 0..30)) {
            prop_assert!(identity3_check(&mu, &v).unwrap().holds);
        }

        // N[μ⁻]N[ν′] - N[μ]N[⁻ν′] > 0  iff  [μ̃] < [ν′]
        #[test]
        fn sign_bridge(mu in letters(3, 1..20), nu in letters(3, 1..20)) {
            let q3 = BigInt::from(continuant(&mu.strip_last().unwrap()) * continuant(&nu))
                - BigInt::from(continuant(&mu) * continuant(&nu.strip_first().unwrap()));
            prop_assert_eq!(q3 > BigInt::ZERO, cf_less(&mu.reverse(), &nu).unwrap());
        }
    }
}
