//! Words over the positive integers.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite word whose letters are positive integers.
///
/// Words order lexicographically, dereference to `&[u32]`, and serialize as
/// plain JSON arrays. `Display` prints a digit string when every letter is
/// at most 9 and a comma-separated list otherwise; `FromStr` accepts both.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    /// Wraps a letter sequence, rejecting the letter 0.
    pub fn new(letters: Vec<u32>) -> Result<Word> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word(letters))
    }

    /// The empty word.
    pub fn empty() -> Word {
        Word::default()
    }

    /// The letters, in order.
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    /// The set of letters that occur.
    pub fn support(&self) -> BTreeSet<u32> {
        self.0.iter().copied().collect()
    }

    /// The largest letter, or 0 for the empty word.
    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// True if the support is exactly `{1, ..., max_letter}`.
    ///
    /// The empty word is initial.
    pub fn is_initial(&self) -> bool {
        let support = self.support();
        support.len() as u32 == self.max_letter()
    }

    /// Relabels the letters by the unique order isomorphism onto
    /// `{1, ..., k}`, where `k` is the number of distinct letters.
    ///
    /// Equal letters stay equal, so `21331` standardizes to `21331` and
    /// `41771` to `21331`.
    pub fn standardize(&self) -> Word {
        let ranks: Vec<u32> = self.support().into_iter().collect();
        Word(
            self.0
                .iter()
                .map(|x| ranks.binary_search(x).unwrap() as u32 + 1)
                .collect(),
        )
    }

    /// Keeps only the letters in `a..=b`, preserving order.
    pub fn restrict(&self, a: u32, b: u32) -> Result<Word> {
        if a > b {
            return Err(Error::EmptyInterval { a, b });
        }
        Ok(Word(
            self.0.iter().copied().filter(|&x| a <= x && x <= b).collect(),
        ))
    }

    /// Length of the longest strictly increasing subsequence.
    pub fn lis(&self) -> usize {
        self.longest_subsequence(|prev, next| prev < next)
    }

    /// Length of the longest strictly decreasing subsequence.
    pub fn lds(&self) -> usize {
        self.longest_subsequence(|prev, next| prev > next)
    }

    fn longest_subsequence(&self, extends: impl Fn(u32, u32) -> bool) -> usize {
        let mut best = vec![0usize; self.0.len()];
        for i in 0..self.0.len() {
            best[i] = 1 + (0..i)
                .filter(|&j| extends(self.0[j], self.0[i]))
                .map(|j| best[j])
                .max()
                .unwrap_or(0);
        }
        best.into_iter().max().unwrap_or(0)
    }
}

impl Deref for Word {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Word> for Vec<u32> {
    fn from(word: Word) -> Vec<u32> {
        word.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&x| x <= 9) {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses either a digit string (`"1342"`) or a comma-separated list
    /// (`"13,4,2"`). The empty string is the empty word.
    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let parse = |part: &str| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| Error::WordParse(s.to_owned()))
        };
        let letters: Vec<u32> = if s.contains(',') {
            s.split(',').map(parse).collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::WordParse(s.to_owned())))
                .collect::<Result<_>>()?
        };
        Word::new(letters)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Word, D::Error> {
        let letters = Vec::<u32>::deserialize(deserializer)?;
        Word::new(letters).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn rejects_zero() {
        assert!(Word::new(vec![1, 0, 2]).is_err());
        assert!("102".parse::<Word>().is_err());
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!(w("1342").letters(), &[1, 3, 4, 2]);
        assert_eq!(w("13,4,2").letters(), &[13, 4, 2]);
        assert_eq!(w("").letters(), &[] as &[u32]);
    }

    #[test]
    fn display_roundtrips() {
        for s in ["", "1342", "13,4,2", "9,10"] {
            assert_eq!(w(s).to_string().parse::<Word>().unwrap(), w(s));
        }
        assert_eq!(w("13,4,2").to_string(), "13,4,2");
        assert_eq!(w("1,3,4,2").to_string(), "1342");
    }

    #[test]
    fn support_and_initial() {
        assert_eq!(w("21331").support().into_iter().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert!(w("21331").is_initial());
        assert!(!w("233").is_initial());
        assert!(w("").is_initial());
    }

    #[test]
    fn standardize_preserves_equalities() {
        assert_eq!(w("41771").standardize(), w("21331"));
        assert_eq!(w("21331").standardize(), w("21331"));
        assert_eq!(w("").standardize(), w(""));
    }

    #[test]
    fn restriction() {
        assert_eq!(w("4235124").restrict(2, 4).unwrap(), w("42324"));
        assert_eq!(w("4235124").restrict(1, 9).unwrap(), w("4235124"));
        assert!(w("123").restrict(3, 2).is_err());
    }

    #[test]
    fn subsequence_lengths() {
        assert_eq!(w("1342").lis(), 3);
        assert_eq!(w("1342").lds(), 2);
        assert_eq!(w("").lis(), 0);
        assert_eq!(w("11111").lis(), 1);
        assert_eq!(w("54321").lds(), 5);
    }

    #[test]
    fn json_roundtrip() {
        let word = w("1342");
        let json = serde_json::to_string(&word).unwrap();
        assert_eq!(json, "[1,3,4,2]");
        assert_eq!(serde_json::from_str::<Word>(&json).unwrap(), word);
        assert!(serde_json::from_str::<Word>("[1,0]").is_err());
    }
}
