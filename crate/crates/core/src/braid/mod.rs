//! Lorenz braids and their Alexander polynomials.
//!
//! Reading the branch line left to right, the `a` left strands each cross
//! over some right strands as the template folds. Sorting the first-return
//! permutation by adjacent swaps, leftmost inversion first, produces a
//! positive braid word whose closure is the knot.

mod burau;
mod laurent;

use serde::Serialize;
use thiserror::Error;

use crate::orbit::OrbitCombinatorics;

pub use burau::{alexander_polynomial, burau_matrix};
pub use laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("polynomial division left a remainder")]
    InexactDivision,
    #[error(
        "braid closes to {components} components; the Alexander polynomial is computed for knots"
    )]
    MultiComponent { components: usize },
    #[error("coefficient overflow in exact arithmetic")]
    Overflow,
    #[error("generator {generator} is out of range for {strands} strands")]
    GeneratorOutOfRange { generator: usize, strands: usize },
}

/// Which interval of the branch line a strand starts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Origin {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidData {
    pub strands: usize,
    /// First-return permutation on branch-line positions, 0-based.
    pub pi: Vec<usize>,
    pub origin: Vec<Origin>,
    /// Generators `sigma_j`, 1-based, in order.
    pub word: Vec<usize>,
    /// Number of crossings.
    pub k: usize,
}

impl BraidData {
    /// The word as space-separated generator indices.
    pub fn word_string(&self) -> String {
        self.word
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Number of pairs `i < j` with `pi(i) > pi(j)`.
pub fn inversion_count(braid: &BraidData) -> usize {
    let pi = &braid.pi;
    (0..pi.len())
        .map(|i| pi[i + 1..].iter().filter(|&&p| p < pi[i]).count())
        .sum()
}

/// The positive braid of the orbit. Every generator moves a strand from the
/// left interval over one from the right interval.
pub fn lorenz_braid(oc: &OrbitCombinatorics) -> BraidData {
    let perm = oc.first_return();
    let len = perm.len();
    let mut cur: Vec<usize> = (0..len).collect();
    let mut word = Vec::new();
    'sweep: loop {
        for j in 0..len.saturating_sub(1) {
            if perm[cur[j]] > perm[cur[j + 1]] {
                debug_assert!(cur[j] < oc.a() && cur[j + 1] >= oc.a());
                cur.swap(j, j + 1);
                word.push(j + 1);
                continue 'sweep;
            }
        }
        break;
    }
    let origin = (0..len)
        .map(|i| {
            if i < oc.a() {
                Origin::Left
            } else {
                Origin::Right
            }
        })
        .collect();
    BraidData {
        strands: len,
        pi: perm.to_vec(),
        origin,
        k: word.len(),
        word,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid(w: &str) -> BraidData {
        lorenz_braid(&OrbitCombinatorics::new(&w.parse().unwrap()))
    }

    #[test]
    fn known_braid_words() {
        assert_eq!(braid("xy").word, vec![1]);
        assert_eq!(braid("xyxyy").word_string(), "2 1 3 2 4 3");
        assert_eq!(braid("xyxyy").word, vec![2, 1, 3, 2, 4, 3]);
        assert_eq!(
            braid("xxxyyyxyy").word,
            vec![4, 3, 2, 1, 5, 4, 3, 6, 5, 7, 6, 8]
        );
    }

    #[test]
    fn crossings_equal_inversions() {
        for w in ["xy", "xyxyy", "xxxyyyxyy", "xxyxyxyyy"] {
            let b = braid(w);
            assert_eq!(b.k, inversion_count(&b), "{w}");
            assert_eq!(b.k, b.word.len());
        }
    }
}
