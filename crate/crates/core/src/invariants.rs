//! Closed-form invariants computed from the orbit combinatorics alone.
//!
//! Everything here is exact integer arithmetic on `a`, `b`, `t`, `sum(mu)` and
//! `sum(nu)`. The grid and braid modules recompute the same quantities by
//! independent means and compare against these values.

use serde::Serialize;
use thiserror::Error;

use crate::orbit::OrbitCombinatorics;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("expected an even numerator, got {numerator}")]
    IntegralityViolation { numerator: i64 },
    #[error("negative genus numerator {numerator}")]
    NegativeGenus { numerator: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub grid_number: usize,
    pub crossings_total: usize,
    pub crossings_a: usize,
    pub crossings_b: usize,
    pub crossings_c: usize,
    pub unknotting: usize,
    /// Alexander grading of the grid state `x-`; its closed form has the same
    /// right-hand side as the unknotting number.
    pub alexander_x_minus: i64,
}

struct Params {
    a: i64,
    b: i64,
    t: i64,
    mu_sum: i64,
    nu_sum: i64,
}

fn params(oc: &OrbitCombinatorics) -> Params {
    Params {
        a: oc.a() as i64,
        b: oc.b() as i64,
        t: oc.t() as i64,
        mu_sum: oc.mu_sum() as i64,
        nu_sum: oc.nu_sum() as i64,
    }
}

/// `2u = (a+b)(t-1) - sum(mu) - sum(nu) + (t+1)`.
pub fn twice_unknotting(oc: &OrbitCombinatorics) -> i64 {
    let p = params(oc);
    (p.a + p.b) * (p.t - 1) - p.mu_sum - p.nu_sum + (p.t + 1)
}

pub fn closed_form_invariants(oc: &OrbitCombinatorics) -> Result<InvariantRecord, InvariantError> {
    let p = params(oc);
    let twice_u = twice_unknotting(oc);
    if twice_u % 2 != 0 {
        return Err(InvariantError::IntegralityViolation { numerator: twice_u });
    }
    if twice_u < 0 {
        return Err(InvariantError::NegativeGenus { numerator: twice_u });
    }
    let tri = p.t * (p.t + 1) / 2;
    let c_a = p.a * p.t - p.mu_sum - p.t * p.t + tri;
    let c_b = p.b * p.t - p.nu_sum - p.t * p.t + tri;
    let c_c = p.t * p.t;
    let total = (p.a + p.b) * p.t - p.mu_sum - p.nu_sum + p.t;
    debug_assert_eq!(total, c_a + c_b + c_c);
    Ok(InvariantRecord {
        grid_number: (2 * p.a + 2 * p.b - p.t) as usize,
        crossings_total: total as usize,
        crossings_a: c_a as usize,
        crossings_b: c_b as usize,
        crossings_c: c_c as usize,
        unknotting: (twice_u / 2) as usize,
        alexander_x_minus: twice_u / 2,
    })
}

/// Unknotting number `(k - n + 1) / 2` of the closure of a positive braid with
/// `k` crossings on `strands` strands.
pub fn positive_braid_unknotting(k: i64, strands: i64) -> Result<i64, InvariantError> {
    let numerator = k - strands + 1;
    if numerator < 0 {
        return Err(InvariantError::NegativeGenus { numerator });
    }
    if numerator % 2 != 0 {
        return Err(InvariantError::IntegralityViolation { numerator });
    }
    Ok(numerator / 2)
}

/// Crossings on the `k`-th long vertical strand (1-based):
/// `(b - nu_k) - (t - k)`.
pub fn long_vertical_crossings(oc: &OrbitCombinatorics, k: usize) -> usize {
    (oc.b() - oc.nu()[k - 1]) - (oc.t() - k)
}

/// Crossings of the `k`-th long horizontal strand with short verticals:
/// `(a - mu_k) - (t - k)`.
pub fn long_horizontal_crossings(oc: &OrbitCombinatorics, k: usize) -> usize {
    (oc.a() - oc.mu()[k - 1]) - (oc.t() - k)
}

/// `J(O, O) = a t - sum(mu) - t^2 + t(t+1)/2 + b(2b - 1)`; always an integer.
pub fn j_oo(oc: &OrbitCombinatorics) -> i64 {
    let p = params(oc);
    p.a * p.t - p.mu_sum - p.t * p.t + p.t * (p.t + 1) / 2 + p.b * (2 * p.b - 1)
}

/// `J(X, X) = b t - sum(nu) - t^2 + t(t+1)/2 + 2a^2 - a`; always an integer.
pub fn j_xx(oc: &OrbitCombinatorics) -> i64 {
    let p = params(oc);
    p.b * p.t - p.nu_sum - p.t * p.t + p.t * (p.t + 1) / 2 + 2 * p.a * p.a - p.a
}

/// Sum of `-w` over the `2a` points of `x-` lying in the rows of `A` and `C`.
pub fn winding_sum_upper(oc: &OrbitCombinatorics) -> i64 {
    let a = oc.a() as i64;
    a * a
}

/// Sum of `-w` over the `2b - t` points of `x-` lying in the rows of `B`:
/// `-b^2 + b + b t - sum(nu)`.
pub fn winding_sum_lower(oc: &OrbitCombinatorics) -> i64 {
    let p = params(oc);
    -p.b * p.b + p.b + p.b * p.t - p.nu_sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oc(w: &str) -> OrbitCombinatorics {
        OrbitCombinatorics::new(&w.parse().unwrap())
    }

    #[test]
    fn word_x3y3xy2() {
        let r = closed_form_invariants(&oc("xxxyyyxyy")).unwrap();
        assert_eq!(r.unknotting, 2);
        assert_eq!(r.alexander_x_minus, 2);
        assert_eq!(r.crossings_total, 12);
        assert_eq!((r.crossings_a, r.crossings_b, r.crossings_c), (3, 5, 4));
        assert_eq!(r.grid_number, 16);
    }

    #[test]
    fn trefoil_word() {
        let r = closed_form_invariants(&oc("xyxyy")).unwrap();
        assert_eq!(r.unknotting, 1);
        assert_eq!(r.crossings_total, 6);
        assert_eq!((r.crossings_a, r.crossings_b, r.crossings_c), (0, 2, 4));
        assert_eq!(r.grid_number, 8);
    }

    #[test]
    fn trip_number_one_is_unknot() {
        for w in ["xy", "xxy", "xxxyyyy"] {
            let r = closed_form_invariants(&oc(w)).unwrap();
            assert_eq!(r.unknotting, 0);
            assert_eq!(r.crossings_c, 1);
        }
    }

    #[test]
    fn positive_braid_formula() {
        assert_eq!(positive_braid_unknotting(6, 5), Ok(1));
        assert_eq!(positive_braid_unknotting(12, 9), Ok(2));
        assert_eq!(positive_braid_unknotting(1, 2), Ok(0));
        assert_eq!(
            positive_braid_unknotting(2, 2),
            Err(InvariantError::IntegralityViolation { numerator: 1 })
        );
        assert_eq!(
            positive_braid_unknotting(0, 3),
            Err(InvariantError::NegativeGenus { numerator: -2 })
        );
    }

    #[test]
    fn pairing_and_winding_closed_forms() {
        let o = oc("xxxyyyxyy");
        assert_eq!(j_oo(&o), 48);
        assert_eq!(j_xx(&o), 33);
        assert_eq!(winding_sum_upper(&o), 16);
        assert_eq!(winding_sum_upper(&o) + winding_sum_lower(&o), 2);
        assert_eq!(long_vertical_crossings(&o, 1), 3);
        assert_eq!(long_vertical_crossings(&o, 2), 2);
        assert_eq!(long_horizontal_crossings(&o, 1), 2);
        assert_eq!(long_horizontal_crossings(&o, 2), 1);
    }
}
