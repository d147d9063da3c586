//! Branch-line combinatorics of a Lorenz orbit.
//!
//! Every letter position of the word is one intersection of the orbit with the
//! branch line. Points are ordered by comparing the rotations of the word that
//! start at them, lexicographically with `x < y`. Points whose rotation starts
//! with `x` lie on the left interval and are ranked `p_1 < ... < p_a` from the
//! left; the others lie on the right interval and are ranked from the RIGHT
//! end, so that the full order reads `p_1 < ... < p_a < q_b < ... < q_1`.
//! The first-return map sends the point at letter `i` to the point at letter
//! `i + 1`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::words::{Letter, LorenzWord, Syllable};

/// A point of the branch line, by its rank on its interval (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BranchPoint {
    /// `p_i`, counted left to right on the left interval.
    P(usize),
    /// `q_j`, counted right to left on the right interval.
    Q(usize),
}

#[derive(Clone, Debug)]
pub struct OrbitCombinatorics {
    word: LorenzWord,
    a: usize,
    b: usize,
    t: usize,
    syllables: Vec<Syllable>,
    /// Branch-line position (0-based, left to right) of each letter index.
    position: Vec<usize>,
    /// Branch point at each letter index.
    point: Vec<BranchPoint>,
    /// First-return permutation on branch-line positions.
    first_return: Vec<usize>,
    p_image: Vec<BranchPoint>,
    q_image: Vec<BranchPoint>,
    mu: Vec<usize>,
    nu: Vec<usize>,
}

impl OrbitCombinatorics {
    pub fn new(word: &LorenzWord) -> OrbitCombinatorics {
        let letters = word.letters();
        let len = letters.len();
        let a = word.count(Letter::X);
        let b = len - a;

        let mut order: Vec<usize> = (0..len).collect();
        order.sort_by(|&i, &j| compare_rotations(letters, i, j));
        let mut position = vec![0; len];
        for (pos, &i) in order.iter().enumerate() {
            position[i] = pos;
        }

        let point: Vec<BranchPoint> = (0..len)
            .map(|i| match letters[i] {
                Letter::X => BranchPoint::P(position[i] + 1),
                Letter::Y => BranchPoint::Q(len - position[i]),
            })
            .collect();

        let mut first_return = vec![0; len];
        let mut p_image = vec![BranchPoint::P(0); a];
        let mut q_image = vec![BranchPoint::P(0); b];
        for i in 0..len {
            let next = (i + 1) % len;
            first_return[position[i]] = position[next];
            match point[i] {
                BranchPoint::P(r) => p_image[r - 1] = point[next],
                BranchPoint::Q(r) => q_image[r - 1] = point[next],
            }
        }

        let mut mu = Vec::new();
        let mut nu = Vec::new();
        for i in 0..len {
            let prev = letters[(i + len - 1) % len];
            match (prev, point[i]) {
                (Letter::Y, BranchPoint::P(r)) => mu.push(r),
                (Letter::X, BranchPoint::Q(r)) => nu.push(r),
                _ => {}
            }
        }
        mu.sort_unstable();
        nu.sort_unstable();

        let syllables = word.syllables();
        OrbitCombinatorics {
            word: word.clone(),
            a,
            b,
            t: syllables.len(),
            syllables,
            position,
            point,
            first_return,
            p_image,
            q_image,
            mu,
            nu,
        }
    }

    pub fn word(&self) -> &LorenzWord {
        &self.word
    }

    /// Number of `x` letters (points on the left interval).
    pub fn a(&self) -> usize {
        self.a
    }

    /// Number of `y` letters (points on the right interval).
    pub fn b(&self) -> usize {
        self.b
    }

    /// Trip number.
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn strands(&self) -> usize {
        self.a + self.b
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn alpha(&self) -> Vec<usize> {
        self.syllables.iter().map(|s| s.x_run).collect()
    }

    pub fn beta(&self) -> Vec<usize> {
        self.syllables.iter().map(|s| s.y_run).collect()
    }

    /// Ranks of the left-interval points that are images of right-interval
    /// points, ascending.
    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    /// Ranks of the right-interval points that are images of left-interval
    /// points, ascending.
    pub fn nu(&self) -> &[usize] {
        &self.nu
    }

    pub fn mu_sum(&self) -> usize {
        self.mu.iter().sum()
    }

    pub fn nu_sum(&self) -> usize {
        self.nu.iter().sum()
    }

    /// The branch point visited at each letter of the canonical word.
    pub fn points(&self) -> &[BranchPoint] {
        &self.point
    }

    /// Branch-line position (0-based) of each letter of the canonical word.
    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    /// First-return map as a permutation of branch-line positions (0-based).
    pub fn first_return(&self) -> &[usize] {
        &self.first_return
    }

    /// Image of `p_rank` under the first-return map.
    pub fn p_image(&self, rank: usize) -> BranchPoint {
        self.p_image[rank - 1]
    }

    /// Image of `q_rank` under the first-return map.
    pub fn q_image(&self, rank: usize) -> BranchPoint {
        self.q_image[rank - 1]
    }

    /// Branch-line position (0-based) of a point.
    pub fn position_of(&self, point: BranchPoint) -> usize {
        match point {
            BranchPoint::P(r) => r - 1,
            BranchPoint::Q(r) => self.a + self.b - r,
        }
    }

    /// Checks every structural invariant of the combinatorics, returning a
    /// description of the first one that fails.
    pub fn check_invariants(&self) -> Result<(), String> {
        let (a, b, t) = (self.a, self.b, self.t);
        let alpha_sum: usize = self.alpha().iter().sum();
        let beta_sum: usize = self.beta().iter().sum();
        if alpha_sum != a || beta_sum != b || a + b != self.word.len() || t == 0 {
            return Err(format!(
                "syllable sums {alpha_sum},{beta_sum} vs a={a}, b={b}"
            ));
        }
        if self.mu.len() != t || self.nu.len() != t {
            return Err(format!(
                "|mu|={}, |nu|={}, t={t}",
                self.mu.len(),
                self.nu.len()
            ));
        }
        if self.mu[0] != 1 || self.nu[0] != 1 {
            return Err(format!("mu_1={}, nu_1={}", self.mu[0], self.nu[0]));
        }
        if self.mu.windows(2).any(|w| w[0] >= w[1]) || self.nu.windows(2).any(|w| w[0] >= w[1]) {
            return Err("mu or nu not strictly increasing".into());
        }
        if self.mu[t - 1] > a || self.nu[t - 1] > b {
            return Err("mu or nu out of range".into());
        }
        // Order preservation on each interval.
        let left: Vec<usize> = (1..=a).map(|r| self.position_of(self.p_image(r))).collect();
        let right: Vec<usize> = (1..=b)
            .rev()
            .map(|r| self.position_of(self.q_image(r)))
            .collect();
        if left.windows(2).any(|w| w[0] >= w[1]) || right.windows(2).any(|w| w[0] >= w[1]) {
            return Err("first-return map not monotone on an interval".into());
        }
        // mu are the images of q-points, nu the images of p-points.
        let mut mu_from_images: Vec<usize> = (1..=b)
            .filter_map(|r| match self.q_image(r) {
                BranchPoint::P(i) => Some(i),
                BranchPoint::Q(_) => None,
            })
            .collect();
        mu_from_images.sort_unstable();
        let mut nu_from_images: Vec<usize> = (1..=a)
            .filter_map(|r| match self.p_image(r) {
                BranchPoint::Q(j) => Some(j),
                BranchPoint::P(_) => None,
            })
            .collect();
        nu_from_images.sort_unstable();
        if mu_from_images != self.mu || nu_from_images != self.nu {
            return Err("mu/nu disagree with the images of the first-return map".into());
        }
        if cycle_count(&self.first_return) != 1 {
            return Err("first-return map is not a single cycle".into());
        }
        Ok(())
    }
}

/// Compares the rotations of `letters` starting at `i` and `j` over a window
/// of one full period. Distinct rotations of a primitive word always differ
/// inside that window.
fn compare_rotations(letters: &[Letter], i: usize, j: usize) -> Ordering {
    if i == j {
        return Ordering::Equal;
    }
    let n = letters.len();
    for k in 0..n {
        match letters[(i + k) % n].cmp(&letters[(j + k) % n]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    panic!("rotations {i} and {j} coincide; the word is not primitive")
}

pub(crate) fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    cycles
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orbit(w: &str) -> OrbitCombinatorics {
        OrbitCombinatorics::new(&w.parse().unwrap())
    }

    #[test]
    fn word_x3y3xy2() {
        let oc = orbit("xxxyyyxyy");
        assert_eq!((oc.a(), oc.b(), oc.t()), (4, 5, 2));
        assert_eq!(oc.mu(), &[1, 3]);
        assert_eq!(oc.nu(), &[1, 3]);
        assert_eq!(oc.alpha(), vec![3, 1]);
        assert_eq!(oc.beta(), vec![3, 2]);
        oc.check_invariants().unwrap();
    }

    #[test]
    fn trefoil_word_matches_rank_brute_force() {
        // Rotations of xyxyy sorted: xyxyy < xyyxy < yxyxy < yxyyx < yyxyx,
        // so p_1 = xyxyy, p_2 = xyyxy, q_3 = yxyxy, q_2 = yxyyx, q_1 = yyxyx.
        let oc = orbit("xyxyy");
        assert_eq!(oc.positions(), &[0, 3, 1, 4, 2]);
        assert_eq!(oc.mu(), &[1, 2]);
        assert_eq!(oc.nu(), &[1, 2]);
        assert_eq!(oc.t(), 2);
        assert_eq!(oc.first_return(), &[3, 4, 0, 1, 2]);
    }

    #[test]
    fn trip_number_one() {
        for w in ["xy", "xxy", "xyy", "xxxxyyy"] {
            let oc = orbit(w);
            assert_eq!(oc.t(), 1);
            assert_eq!(oc.mu(), &[1]);
            assert_eq!(oc.nu(), &[1]);
            oc.check_invariants().unwrap();
        }
    }

    #[test]
    fn cycle_count_counts() {
        assert_eq!(cycle_count(&[1, 2, 0]), 1);
        assert_eq!(cycle_count(&[1, 0, 2]), 2);
    }
}
