//! Lorenz words: primitive cyclic words over `{x, y}` in canonical form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One symbol of a Lorenz word. `X` means a pass around the left hole of the
/// template, `Y` a pass around the right hole. Ordered `X < Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swapped(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("empty word")]
    EmptyWord,
    #[error("invalid letter {letter:?} at position {position}; only x and y are allowed")]
    InvalidLetter { letter: char, position: usize },
    #[error("word uses a single letter; it names an ear boundary, not a knot")]
    SingleLetterWord,
    #[error("word is a proper power with period {period}; it names a multiply traversed orbit")]
    PeriodicWord { period: usize },
}

/// A maximal block `x^x_run y^y_run` of a canonical word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Syllable {
    pub x_run: usize,
    pub y_run: usize,
}

/// A primitive cyclic word containing both letters, stored as its
/// lexicographically least rotation (which therefore starts with `x` and ends
/// with `y`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LorenzWord {
    letters: Vec<Letter>,
}

impl LorenzWord {
    /// Parses a word, case-insensitively, and returns its canonical rotation.
    pub fn parse(text: &str) -> Result<LorenzWord, WordError> {
        let letters = text
            .chars()
            .enumerate()
            .map(|(position, ch)| match ch.to_ascii_lowercase() {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                _ => Err(WordError::InvalidLetter {
                    letter: ch,
                    position,
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        LorenzWord::from_letters(letters)
    }

    pub fn from_letters(mut letters: Vec<Letter>) -> Result<LorenzWord, WordError> {
        if letters.is_empty() {
            return Err(WordError::EmptyWord);
        }
        if !letters.contains(&Letter::X) || !letters.contains(&Letter::Y) {
            return Err(WordError::SingleLetterWord);
        }
        let period = smallest_period(&letters);
        if period < letters.len() && letters.len().is_multiple_of(period) {
            return Err(WordError::PeriodicWord { period });
        }
        let start = least_rotation(&letters);
        letters.rotate_left(start);
        Ok(LorenzWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// Number of cyclic `y -> x` adjacencies.
    pub fn trip_number(&self) -> usize {
        let n = self.letters.len();
        (0..n)
            .filter(|&i| self.letters[i] == Letter::X && self.letters[(i + n - 1) % n] == Letter::Y)
            .count()
    }

    pub fn syllables(&self) -> Vec<Syllable> {
        // Canonical words start with x and end with y, so the runs pair up.
        let mut out = Vec::new();
        let mut i = 0;
        let n = self.letters.len();
        while i < n {
            let x_start = i;
            while i < n && self.letters[i] == Letter::X {
                i += 1;
            }
            let y_start = i;
            while i < n && self.letters[i] == Letter::Y {
                i += 1;
            }
            out.push(Syllable {
                x_run: y_start - x_start,
                y_run: i - y_start,
            });
        }
        out
    }

    /// The word with `x` and `y` exchanged, re-canonicalized.
    pub fn swapped(&self) -> LorenzWord {
        let letters = self.letters.iter().map(|l| l.swapped()).collect();
        LorenzWord::from_letters(letters).expect("letter swap preserves primitivity")
    }

    /// The letters read cyclically from `start`. Not canonical in general.
    pub fn rotation(&self, start: usize) -> Vec<Letter> {
        let mut r = self.letters.clone();
        r.rotate_left(start % self.letters.len());
        r
    }
}

impl fmt::Display for LorenzWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for LorenzWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LorenzWord::parse(s)
    }
}

impl Serialize for LorenzWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LorenzWord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Start index of the lexicographically least rotation (two-pointer
/// minimum-expression scan, linear time).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = &s[(i + k) % n];
        let b = &s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// Smallest `p` such that `s[i] == s[i + p]` wherever both exist.
fn smallest_period<T: Eq>(s: &[T]) -> usize {
    let n = s.len();
    let mut fail = vec![0usize; n];
    for i in 1..n {
        let mut k = fail[i - 1];
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    n - fail[n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_least(w: &str) -> String {
        (0..w.len())
            .map(|i| format!("{}{}", &w[i..], &w[..i]))
            .min()
            .unwrap()
    }

    #[test]
    fn parse_canonicalizes() {
        assert_eq!(LorenzWord::parse("yyx").unwrap().to_string(), "xyy");
        assert_eq!(LorenzWord::parse("YXYXX").unwrap().to_string(), "xxyxy");
        let w = LorenzWord::parse("xyyxxxyyy").unwrap();
        assert_eq!(w.to_string(), "xxxyyyxyy");
        assert_eq!((w.count(Letter::X), w.count(Letter::Y)), (4, 5));
    }

    #[test]
    fn parse_is_idempotent_on_canonical_input() {
        let w = LorenzWord::parse("xxxyyyxyy").unwrap();
        assert_eq!(LorenzWord::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(LorenzWord::parse(""), Err(WordError::EmptyWord));
        assert_eq!(
            LorenzWord::parse("xyz"),
            Err(WordError::InvalidLetter {
                letter: 'z',
                position: 2
            })
        );
        assert_eq!(LorenzWord::parse("xxx"), Err(WordError::SingleLetterWord));
        assert_eq!(LorenzWord::parse("y"), Err(WordError::SingleLetterWord));
        assert_eq!(
            LorenzWord::parse("xyxy"),
            Err(WordError::PeriodicWord { period: 2 })
        );
        assert_eq!(
            LorenzWord::parse("xyyxyyxyy"),
            Err(WordError::PeriodicWord { period: 3 })
        );
    }

    #[test]
    fn syllables_match_runs() {
        let s = |w: &str| {
            LorenzWord::parse(w)
                .unwrap()
                .syllables()
                .iter()
                .map(|s| (s.x_run, s.y_run))
                .collect::<Vec<_>>()
        };
        assert_eq!(s("xxxyyyxyy"), vec![(3, 3), (1, 2)]);
        assert_eq!(s("xy"), vec![(1, 1)]);
        assert_eq!(s("xyxyy"), vec![(1, 1), (1, 2)]);
        assert_eq!(LorenzWord::parse("xyxyy").unwrap().trip_number(), 2);
    }

    #[test]
    fn least_rotation_agrees_with_brute_force() {
        for bits in 1u32..(1 << 10) {
            for len in 2..=10 {
                let w: String = (0..len)
                    .map(|i| if bits >> i & 1 == 1 { 'y' } else { 'x' })
                    .collect();
                let bytes = w.as_bytes();
                let k = least_rotation(bytes);
                assert_eq!(format!("{}{}", &w[k..], &w[..k]), brute_least(&w), "{w}");
            }
        }
    }

    #[test]
    fn swap_exchanges_letters() {
        let w = LorenzWord::parse("xxxyyyxyy").unwrap();
        let s = w.swapped();
        assert_eq!(s.count(Letter::X), 5);
        assert_eq!(s.trip_number(), 2);
        assert_eq!(s.swapped(), w);
    }
}
