//! The quotient word `c_{p/q}` encoded by the Markov snake graph, and the
//! structural counts every such word satisfies.
//!
//! The word is `2 · B_1 · … · B_{q-2} · 2`, where block `B_i` is `1 1` when
//! the mechanical word of slope `(q-p)/q` jumps between `i` and `i+1`, and
//! `2 2` otherwise.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::continuant::continuant;
use crate::error::{Error, Result};
use crate::replacement::decompose;
use crate::word::Word;

/// A rational index `p/q` with `1 <= p < q`. Not required to be reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index {
    p: u32,
    q: u32,
}

impl Index {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p < 1 || p >= q {
            return Err(Error::IndexOutOfRange {
                p: p.into(),
                q: q.into(),
            });
        }
        Ok(Index { p, q })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn q(self) -> u32 {
        self.q
    }

    pub fn is_reduced(self) -> bool {
        self.p.gcd(&self.q) == 1
    }

    /// `p/(q+1)`, the partner of this index in the consecutive-denominator pair.
    pub fn next_denominator(self) -> Index {
        Index {
            p: self.p,
            q: self.q + 1,
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Index {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let malformed = || Error::MalformedFraction(s.to_string());
        let (p, q) = s.trim().split_once('/').ok_or_else(malformed)?;
        let p: u64 = p.trim().parse().map_err(|_| malformed())?;
        let q: u64 = q.trim().parse().map_err(|_| malformed())?;
        match (u32::try_from(p), u32::try_from(q)) {
            (Ok(p), Ok(q)) => Index::new(p, q),
            _ => Err(Error::IndexOutOfRange { p, q }),
        }
    }
}

impl Serialize for Index {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn snake_word(idx: Index) -> Word {
    let (p, q) = (u64::from(idx.p), u64::from(idx.q));
    let slope = q - p;
    let mut letters = Vec::with_capacity(2 * idx.q as usize - 2);
    letters.push(2);
    for i in 1..q - 1 {
        let jump = ((i + 1) * slope) / q - (i * slope) / q;
        letters.extend_from_slice(if jump == 1 { &[1, 1] } else { &[2, 2] });
    }
    letters.push(2);
    Word::new(letters).expect("snake letters are 1 or 2")
}

/// `m_{p/q} = N[c_{p/q}]`.
pub fn markov_number(idx: Index) -> BigUint {
    continuant(&snake_word(idx))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CountCheck {
    pub observed: usize,
    pub expected: usize,
}

impl CountCheck {
    pub fn holds(&self) -> bool {
        self.observed == self.expected
    }
}

/// The five structural facts of a snake word: both ends are `2`,
/// `|w|_1 = 2q-2p-2`, `|w|_2 = 2p`, `|w| = 2q-2`, and `q+p-1` replaceable entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactBasicReport {
    pub index: Index,
    pub endpoints: bool,
    pub ones: CountCheck,
    pub twos: CountCheck,
    pub length: CountCheck,
    pub entries: CountCheck,
}

impl FactBasicReport {
    pub fn all_hold(&self) -> bool {
        self.endpoints
            && self.ones.holds()
            && self.twos.holds()
            && self.length.holds()
            && self.entries.holds()
    }
}

pub fn fact_basic_report(idx: Index) -> Result<FactBasicReport> {
    let w = snake_word(idx);
    let (p, q) = (idx.p as usize, idx.q as usize);
    let entries = decompose(&w)?.len();
    Ok(FactBasicReport {
        index: idx,
        endpoints: w.first() == Some(2) && w.last() == Some(2),
        ones: CountCheck {
            observed: w.count(1),
            expected: 2 * q - 2 * p - 2,
        },
        twos: CountCheck {
            observed: w.count(2),
            expected: 2 * p,
        },
        length: CountCheck {
            observed: w.len(),
            expected: 2 * q - 2,
        },
        entries: CountCheck {
            observed: entries,
            expected: q + p - 1,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(p: u32, q: u32) -> Index {
        Index::new(p, q).unwrap()
    }

    #[test]
    fn printed_words() {
        assert_eq!(snake_word(idx(1, 4)), word![2, 1, 1, 1, 1, 2]);
        assert_eq!(snake_word(idx(1, 5)), word![2, 1, 1, 1, 1, 1, 1, 2]);
        assert_eq!(
            snake_word(idx(9, 14)),
            word![2, 2, 2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 2]
        );
        assert_eq!(
            snake_word(idx(9, 13)),
            word![2, 2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 2]
        );
    }

    #[test]
    fn markov_numbers() {
        assert_eq!(markov_number(idx(1, 2)), BigUint::from(5u32));
        assert_eq!(markov_number(idx(1, 4)), BigUint::from(34u32));
        assert_eq!(markov_number(idx(2, 3)), BigUint::from(29u32));
    }

    #[test]
    fn index_bounds() {
        assert_eq!(Index::new(3, 3), Err(Error::IndexOutOfRange { p: 3, q: 3 }));
        assert_eq!(Index::new(0, 3), Err(Error::IndexOutOfRange { p: 0, q: 3 }));
        assert_eq!("9/14".parse::<Index>().unwrap(), idx(9, 14));
        assert!(matches!(
            "9-14".parse::<Index>(),
            Err(Error::MalformedFraction(_))
        ));
        assert!(matches!(
            "a/3".parse::<Index>(),
            Err(Error::MalformedFraction(_))
        ));
        assert!(matches!(
            "5/3".parse::<Index>(),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(!idx(2, 4).is_reduced());
    }

    fn counts(r: &FactBasicReport) -> (usize, usize, usize, usize) {
        (
            r.ones.observed,
            r.twos.observed,
            r.length.observed,
            r.entries.observed,
        )
    }

    #[test]
    fn fact_reports() {
        let r = fact_basic_report(idx(9, 14)).unwrap();
        assert!(r.all_hold());
        assert_eq!(counts(&r), (8, 18, 26, 22));
        let r = fact_basic_report(idx(1, 2)).unwrap();
        assert!(r.all_hold());
        assert_eq!(counts(&r), (0, 2, 2, 2));
        let r = fact_basic_report(idx(1, 5)).unwrap();
        assert!(r.all_hold());
        assert_eq!(counts(&r), (6, 2, 8, 5));
    }

    #[test]
    fn ones_only_in_pairs() {
        for q in 2..=60 {
            for p in 1..q {
                let w = snake_word(idx(p, q));
                let mut run = 0;
                for l in w.iter().chain([2]) {
                    if l == 1 {
                        run += 1;
                    } else {
                        assert_eq!(run % 2, 0, "odd 1-run in {p}/{q}");
                        run = 0;
                    }
                }
            }
        }
    }
}
