//! Replaceable entries and the replacement alignment of two quotient words.
//!
//! A word over `{1, 2}` splits into entries: each `2` is one entry and each
//! maximal run of `1`s is read as consecutive `11` entries. Two words are
//! compared entry by entry from the left; positions where the kinds differ
//! are replacements.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::snake::{snake_word, Index};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EntryKind {
    #[serde(rename = "11")]
    OneOne,
    #[serde(rename = "2")]
    Two,
}

impl EntryKind {
    /// Number of letters the entry covers.
    pub fn width(self) -> usize {
        match self {
            EntryKind::OneOne => 2,
            EntryKind::Two => 1,
        }
    }
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntryKind::OneOne => "11",
            EntryKind::Two => "2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub kind: EntryKind,
    /// Letter offset in the source word.
    pub start: usize,
}

pub fn decompose(w: &Word) -> Result<Vec<Entry>> {
    let letters = w.letters();
    let mut entries = Vec::with_capacity(letters.len());
    let mut i = 0;
    while i < letters.len() {
        match letters[i] {
            2 => {
                entries.push(Entry {
                    kind: EntryKind::Two,
                    start: i,
                });
                i += 1;
            }
            1 => {
                let run = letters[i..].iter().take_while(|&&l| l == 1).count();
                if run % 2 == 1 {
                    return Err(Error::UnpairableRun { offset: i });
                }
                entries.extend((i..i + run).step_by(2).map(|start| Entry {
                    kind: EntryKind::OneOne,
                    start,
                }));
                i += run;
            }
            letter => return Err(Error::LetterOutsideAlphabet { letter, offset: i }),
        }
    }
    Ok(entries)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Replacement {
    /// Entry position shared by both words.
    pub entry: usize,
    pub offset_a: usize,
    pub offset_b: usize,
    pub kind_a: EntryKind,
    pub kind_b: EntryKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Alignment {
    pub replacements: Vec<Replacement>,
    pub matched: usize,
    pub residual_a: Word,
    pub residual_b: Word,
    pub parity: Parity,
}

impl Alignment {
    /// Consecutive replacements have opposite orientation.
    pub fn alternates(&self) -> bool {
        self.replacements
            .windows(2)
            .all(|w| w[0].kind_a != w[1].kind_a)
    }

    /// The first replacement has `11` in A and `2` in B.
    pub fn starts_with_ones_in_a(&self) -> bool {
        self.replacements
            .first()
            .is_some_and(|r| r.kind_a == EntryKind::OneOne)
    }
}

pub fn align(a: &Word, b: &Word) -> Result<Alignment> {
    let ea = decompose(a)?;
    let eb = decompose(b)?;
    let common = ea.len().min(eb.len());
    let replacements: Vec<Replacement> = ea
        .iter()
        .zip(&eb)
        .enumerate()
        .filter(|(_, (x, y))| x.kind != y.kind)
        .map(|(entry, (x, y))| Replacement {
            entry,
            offset_a: x.start,
            offset_b: y.start,
            kind_a: x.kind,
            kind_b: y.kind,
        })
        .collect();
    let residual = |w: &Word, e: &[Entry]| match e.get(common) {
        Some(first) => w.slice(first.start..w.len()),
        None => Word::empty(),
    };
    Ok(Alignment {
        matched: common - replacements.len(),
        parity: Parity::of(replacements.len()),
        residual_a: residual(a, &ea),
        residual_b: residual(b, &eb),
        replacements,
    })
}

/// `A = μ·11·ν·2`, `B = μ′·2·ν`, cut at the last replacement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddFactorization {
    pub mu: Word,
    pub mu_prime: Word,
    pub nu: Word,
}

impl OddFactorization {
    pub fn reassemble(&self) -> (Word, Word) {
        (
            Word::concat([&self.mu, &word![1, 1], &self.nu, &word![2]]),
            Word::concat([&self.mu_prime, &word![2], &self.nu]),
        )
    }
}

pub fn odd_factorization(a: &Word, b: &Word) -> Result<OddFactorization> {
    let al = align(a, b)?;
    if al.parity != Parity::Odd {
        return Err(Error::NotOddSetting("even number of replacements"));
    }
    if al.residual_a != word![2] || !al.residual_b.is_empty() {
        return Err(Error::NotOddSetting("residuals are not ([2], ε)"));
    }
    let last = al.replacements.last().expect("odd count is nonzero");
    if last.kind_a != EntryKind::OneOne {
        return Err(Error::NotOddSetting("last replacement is not 11 against 2"));
    }
    let fact = OddFactorization {
        mu: a.slice(0..last.offset_a),
        mu_prime: b.slice(0..last.offset_b),
        nu: a.slice(last.offset_a + 2..a.len() - 1),
    };
    if fact.reassemble() != (a.clone(), b.clone()) {
        return Err(Error::NotOddSetting("B is not μ′·2·ν"));
    }
    Ok(fact)
}

/// `A = μ·11·δ·2·ν·2`, `B = μ·2·δ·11·ν′`, cut at the first two replacements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenFactorization {
    pub mu: Word,
    pub delta: Word,
    pub nu: Word,
    pub nu_prime: Word,
}

impl EvenFactorization {
    pub fn reassemble(&self) -> (Word, Word) {
        let (one_one, two) = (word![1, 1], word![2]);
        (
            Word::concat([&self.mu, &one_one, &self.delta, &two, &self.nu, &two]),
            Word::concat([&self.mu, &two, &self.delta, &one_one, &self.nu_prime]),
        )
    }
}

pub fn even_factorization(a: &Word, b: &Word) -> Result<EvenFactorization> {
    let al = align(a, b)?;
    let (first, second) = match al.replacements.as_slice() {
        [first, second, ..] => (first, second),
        _ => return Err(Error::FewerThanTwoReplacements),
    };
    if first.kind_a != EntryKind::OneOne || second.kind_a != EntryKind::Two {
        return Err(Error::WrongOrientation);
    }
    if al.residual_a != word![2] {
        return Err(Error::UnexpectedResidual);
    }
    let delta = a.slice(first.offset_a + 2..second.offset_a);
    if delta.iter().any(|l| l != 2) {
        return Err(Error::DeltaNotTwos);
    }
    let fact = EvenFactorization {
        mu: a.slice(0..first.offset_a),
        delta,
        nu: a.slice(second.offset_a + 1..a.len() - 1),
        nu_prime: b.slice(second.offset_b + 2..b.len()),
    };
    if fact.reassemble() != (a.clone(), b.clone()) {
        return Err(Error::Reassembly);
    }
    Ok(fact)
}

/// Outcome of the `|ν| = |ν′| + 1` check. With a single replacement there is
/// no even setting to factor, and the check holds vacuously.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Fact2Check {
    pub applicable: bool,
    pub holds: bool,
}

pub fn fact2_check(a: &Word, b: &Word) -> Result<Fact2Check> {
    if align(a, b)?.replacements.len() < 2 {
        return Ok(Fact2Check {
            applicable: false,
            holds: true,
        });
    }
    let f = even_factorization(a, b)?;
    Ok(Fact2Check {
        applicable: true,
        holds: f.nu.len() == f.nu_prime.len() + 1 && f.nu != f.nu_prime,
    })
}

/// Odd replacement parity, and `|A|_1 - |B|_1 = 2`.
pub fn fact3_check(a: &Word, b: &Word) -> Result<bool> {
    let odd = align(a, b)?.parity == Parity::Odd;
    Ok(odd && a.count(1) as isize - b.count(1) as isize == 2)
}

/// Every structural check on the pair `(c_{p/(q+1)}, c_{p/q})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub index: Index,
    pub replacements: usize,
    pub parity: Parity,
    pub alternating: bool,
    pub starts_with_ones_in_a: bool,
    pub residuals_ok: bool,
    pub ones_gap: isize,
    pub entry_gap: isize,
    pub fact2: Fact2Check,
    pub fact3: bool,
}

impl PairReport {
    pub fn all_hold(&self) -> bool {
        self.parity == Parity::Odd
            && self.alternating
            && self.starts_with_ones_in_a
            && self.residuals_ok
            && self.ones_gap == 2
            && self.entry_gap == 1
            && self.fact2.holds
            && self.fact3
    }
}

pub fn pair_report(idx: Index) -> Result<PairReport> {
    let a = snake_word(idx.next_denominator());
    let b = snake_word(idx);
    let al = align(&a, &b)?;
    Ok(PairReport {
        index: idx,
        replacements: al.replacements.len(),
        parity: al.parity,
        alternating: al.alternates(),
        starts_with_ones_in_a: al.starts_with_ones_in_a(),
        residuals_ok: al.residual_a == word![2] && al.residual_b.is_empty(),
        ones_gap: a.count(1) as isize - b.count(1) as isize,
        entry_gap: decompose(&a)?.len() as isize - decompose(&b)?.len() as isize,
        fact2: fact2_check(&a, &b)?,
        fact3: fact3_check(&a, &b)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snake::Index;
    use EntryKind::{OneOne, Two};

    fn snake(p: u32, q: u32) -> Word {
        snake_word(Index::new(p, q).unwrap())
    }

    fn kinds(w: &Word) -> Vec<EntryKind> {
        decompose(w).unwrap().into_iter().map(|e| e.kind).collect()
    }

    #[test]
    fn decompose_cases() {
        assert_eq!(kinds(&word![2, 1, 1, 2]), [Two, OneOne, Two]);
        assert_eq!(kinds(&word![1, 1, 1, 1]), [OneOne, OneOne]);
        assert_eq!(
            decompose(&word![2, 1, 2]),
            Err(Error::UnpairableRun { offset: 1 })
        );
        assert_eq!(
            decompose(&word![2, 3]),
            Err(Error::LetterOutsideAlphabet {
                letter: 3,
                offset: 1
            })
        );
        assert!(decompose(&word![]).unwrap().is_empty());
    }

    #[test]
    fn align_example1() {
        let al = align(&snake(1, 5), &snake(1, 4)).unwrap();
        assert_eq!(al.replacements.len(), 1);
        let r = al.replacements[0];
        assert_eq!((r.entry, r.kind_a, r.kind_b), (3, OneOne, Two));
        assert_eq!(al.parity, Parity::Odd);
        assert_eq!(al.residual_a, word![2]);
        assert!(al.residual_b.is_empty());
    }

    #[test]
    fn align_example2() {
        let al = align(&snake(9, 14), &snake(9, 13)).unwrap();
        assert_eq!(al.replacements.len(), 7);
        assert_eq!(al.parity, Parity::Odd);
        assert_eq!(al.residual_a, word![2]);
        assert!(al.alternates());
        assert!(al.starts_with_ones_in_a());
    }

    #[test]
    fn align_identical() {
        let w = snake(1, 4);
        let al = align(&w, &w).unwrap();
        assert!(al.replacements.is_empty());
        assert_eq!(al.parity, Parity::Even);
        assert!(al.residual_a.is_empty() && al.residual_b.is_empty());
        assert_eq!(al.matched, 4);
    }

    #[test]
    fn odd_factorizations() {
        let f = odd_factorization(&snake(1, 5), &snake(1, 4)).unwrap();
        assert_eq!(f.mu, word![2, 1, 1, 1, 1]);
        assert_eq!(f.mu_prime, word![2, 1, 1, 1, 1]);
        assert!(f.nu.is_empty());

        let f = odd_factorization(&snake(9, 14), &snake(9, 13)).unwrap();
        assert_eq!(
            f.mu,
            word![2, 2, 2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 2, 2]
        );
        assert_eq!(
            f.mu_prime,
            word![2, 2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2]
        );
        assert_eq!(f.nu, word![2, 2]);

        let f = odd_factorization(&snake(1, 3), &snake(1, 2)).unwrap();
        assert_eq!((f.mu.clone(), f.mu_prime.clone()), (word![2], word![2]));
        assert!(f.nu.is_empty());
    }

    #[test]
    fn odd_factorization_rejects_even() {
        let w = snake(2, 5);
        assert!(matches!(
            odd_factorization(&w, &w),
            Err(Error::NotOddSetting(_))
        ));
    }

    #[test]
    fn even_factorization_chain_of_example2() {
        let odd = odd_factorization(&snake(9, 14), &snake(9, 13)).unwrap();
        let two = word![2];
        let a = Word::concat([&odd.mu, &two, &odd.nu, &two]);
        let b = Word::concat([&odd.mu_prime, &two, &odd.nu]);
        assert_eq!((a.len(), b.len()), (25, 24));

        let f = even_factorization(&a, &b).unwrap();
        assert_eq!(f.mu, word![2, 2, 2]);
        assert_eq!(f.delta, word![2]);
        assert_eq!(
            f.nu,
            word![2, 2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 2, 2, 2]
        );
        assert_eq!(
            f.nu_prime,
            word![2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 2]
        );

        let f1 = even_factorization(&Word::concat([&f.nu, &two]), &f.nu_prime).unwrap();
        assert_eq!(f1.mu, word![2, 2]);
        assert_eq!(f1.delta, word![2]);
        assert_eq!(f1.nu, word![2, 2, 1, 1, 2, 2, 2, 2, 2, 2, 2]);
        assert_eq!(f1.nu_prime, word![2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 2]);

        let f2 = even_factorization(&Word::concat([&f1.nu, &two]), &f1.nu_prime).unwrap();
        assert_eq!(f2.mu, word![2, 2]);
        assert_eq!(f2.delta, word![2]);
        assert_eq!(f2.nu, word![2, 2, 2, 2, 2]);
        assert_eq!(f2.nu_prime, f2.nu);
    }

    #[test]
    fn even_factorization_errors() {
        assert_eq!(
            even_factorization(&snake(1, 5), &snake(1, 4)),
            Err(Error::FewerThanTwoReplacements)
        );
        // 2 11 2 11 2 against 2 2 11 2 2: first replacement has 2 in A.
        assert_eq!(
            even_factorization(&word![2, 2, 1, 1, 2], &word![2, 1, 1, 2, 2]),
            Err(Error::WrongOrientation)
        );
        // δ would be 11.
        assert_eq!(
            even_factorization(&word![1, 1, 1, 1, 2, 2], &word![2, 1, 1, 1, 1]),
            Err(Error::DeltaNotTwos)
        );
    }

    #[test]
    fn facts_2_and_3_on_examples() {
        for (p, q) in [(9, 13), (1, 4), (1, 2)] {
            let (a, b) = (snake(p, q + 1), snake(p, q));
            assert!(fact2_check(&a, &b).unwrap().holds, "{p}/{q}");
            assert!(fact3_check(&a, &b).unwrap(), "{p}/{q}");
        }
        let f2 = fact2_check(&snake(1, 5), &snake(1, 4)).unwrap();
        assert_eq!(
            f2,
            Fact2Check {
                applicable: false,
                holds: true
            }
        );
        assert!(
            fact2_check(&snake(9, 14), &snake(9, 13))
                .unwrap()
                .applicable
        );
    }

    #[test]
    fn pair_invariants_small_range() {
        for q in 2..60 {
            for p in 1..q {
                let r = pair_report(Index::new(p, q).unwrap()).unwrap();
                assert!(r.all_hold(), "{r:?}");
            }
        }
    }
}
