//! Quotient words: finite sequences of positive partial quotients.
//!
//! The text format used everywhere in this crate is whitespace-separated
//! letters (`2 1 1 2`), with `-` standing for the empty word.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Letter = u32;

/// A finite word over the positive integers. Every letter is `>= 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

/// Builds a [`Word`] from literal letters, panicking on a zero letter.
#[macro_export]
macro_rules! word {
    () => {
        $crate::Word::empty()
    };
    ($($letter:expr),+ $(,)?) => {
        $crate::Word::new(vec![$($letter),+]).expect("letters must be positive")
    };
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|&&l| l == 0) {
            return Err(Error::InvalidLetter(bad.to_string()));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Concatenates the given words in order.
    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        Word(
            parts
                .into_iter()
                .flat_map(|w| w.0.iter().copied())
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// `|w|_a`, the number of occurrences of `letter`.
    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `⁻w`: the word without its first letter.
    pub fn strip_first(&self) -> Result<Word> {
        match self.0.split_first() {
            Some((_, rest)) => Ok(Word(rest.to_vec())),
            None => Err(Error::StripEmpty),
        }
    }

    /// `w⁻`: the word without its last letter.
    pub fn strip_last(&self) -> Result<Word> {
        match self.0.split_last() {
            Some((_, rest)) => Ok(Word(rest.to_vec())),
            None => Err(Error::StripEmpty),
        }
    }

    /// Subword by letter offsets. Panics when out of bounds.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Word::empty());
        }
        let letters = s
            .split_whitespace()
            .map(|tok| match tok.parse::<Letter>() {
                Ok(l) if l >= 1 => Ok(l),
                _ => Err(Error::InvalidLetter(tok.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(letters))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_format() {
        assert_eq!(word![2, 1, 1, 2].to_string(), "2 1 1 2");
        assert_eq!(Word::empty().to_string(), "-");
        assert_eq!("  2 1\t1 2 ".parse::<Word>().unwrap(), word![2, 1, 1, 2]);
        assert_eq!("-".parse::<Word>().unwrap(), Word::empty());
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
    }

    #[test]
    fn rejects_bad_letters() {
        assert_eq!(
            "2 0 2".parse::<Word>(),
            Err(Error::InvalidLetter("0".into()))
        );
        assert_eq!("2 x".parse::<Word>(), Err(Error::InvalidLetter("x".into())));
        assert_eq!(
            "2 -1".parse::<Word>(),
            Err(Error::InvalidLetter("-1".into()))
        );
        assert!(Word::new(vec![1, 0]).is_err());
    }

    #[test]
    fn word_operators() {
        assert_eq!(word![2, 1, 1].reverse(), word![1, 1, 2]);
        assert_eq!(word![2, 2].strip_first().unwrap(), word![2]);
        assert_eq!(word![2].strip_last().unwrap(), word![]);
        assert_eq!(Word::empty().strip_first(), Err(Error::StripEmpty));
        assert_eq!(Word::empty().strip_last(), Err(Error::StripEmpty));
    }

    #[test]
    fn counts() {
        let w = word![2, 2, 2, 1, 1];
        assert_eq!(w.count(2), 3);
        assert_eq!(w.count(1), 2);
        assert_eq!(w.len(), 5);
    }
}
