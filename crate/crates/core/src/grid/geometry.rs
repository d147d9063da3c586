//! Plane geometry of a grid: marker positions, winding numbers, the bilinear
//! pairing of point sets and the Alexander grading of the `x-` state.
//!
//! Coordinates are doubled so that cell centres and cell corners are both
//! integral: the centre of cell `(row, col)` is `(2 col + 1, -(2 row + 1))`,
//! with `y` increasing upward.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{GridDiagram, GridError, StrandRole};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PlanePoint {
    pub x: i64,
    pub y: i64,
}

impl PlanePoint {
    pub fn cell_centre(row: usize, col: usize) -> PlanePoint {
        PlanePoint {
            x: 2 * col as i64 + 1,
            y: -(2 * row as i64 + 1),
        }
    }

    pub fn lower_left_corner(row: usize, col: usize) -> PlanePoint {
        PlanePoint {
            x: 2 * col as i64,
            y: -2 * (row as i64 + 1),
        }
    }
}

/// An element of `Z/2`, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub fn from_twice(twice: i64) -> HalfInt {
        HalfInt { twice }
    }

    pub fn from_integer(v: i64) -> HalfInt {
        HalfInt { twice: 2 * v }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("HalfInt", 2)?;
        s.serialize_field("num", &self.twice)?;
        s.serialize_field("den", &2)?;
        s.end()
    }
}

pub fn x_markers(g: &GridDiagram) -> Vec<PlanePoint> {
    (0..g.n())
        .map(|r| PlanePoint::cell_centre(r, g.x_in_row(r)))
        .collect()
}

pub fn o_markers(g: &GridDiagram) -> Vec<PlanePoint> {
    (0..g.n())
        .map(|r| PlanePoint::cell_centre(r, g.o_in_row(r)))
        .collect()
}

/// The state `x-`: the lower-left corner of every X cell, listed by row.
pub fn x_minus(g: &GridDiagram) -> Vec<PlanePoint> {
    (0..g.n())
        .map(|r| PlanePoint::lower_left_corner(r, g.x_in_row(r)))
        .collect()
}

/// Winding number of the knot projection around a point off the diagram's
/// segments. A ray to the left meets each vertical segment at most once;
/// downward segments count `+1`, upward ones `-1`.
pub fn winding_number(g: &GridDiagram, p: PlanePoint) -> i64 {
    (0..g.n())
        .filter(|&c| 2 * c as i64 + 1 < p.x)
        .map(|c| {
            let (top, bottom) = g.column_span(c);
            let (y_top, y_bottom) = (-(2 * top as i64 + 1), -(2 * bottom as i64 + 1));
            if y_bottom < p.y && p.y < y_top {
                if g.column_runs_down(c) {
                    1
                } else {
                    -1
                }
            } else {
                0
            }
        })
        .sum()
}

/// Pairs `(p, q)` with `p` strictly south-west of `q`.
fn southwest_pairs(ps: &[PlanePoint], qs: &[PlanePoint]) -> i64 {
    ps.iter()
        .map(|p| qs.iter().filter(|q| p.x < q.x && p.y < q.y).count() as i64)
        .sum()
}

/// `J(P, Q) = (I(P, Q) + I(Q, P)) / 2`, where `I` counts south-west pairs.
pub fn j_pairing(ps: &[PlanePoint], qs: &[PlanePoint]) -> HalfInt {
    HalfInt::from_twice(southwest_pairs(ps, qs) + southwest_pairs(qs, ps))
}

/// The terms of the Alexander grading of `x-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlexanderGrading {
    /// Sum of `-w` over points of `x-` in rows of the upper part (`A` and `C`).
    pub winding_upper: i64,
    /// Sum of `-w` over points of `x-` in rows of `B`.
    pub winding_lower: i64,
    pub j_oo: HalfInt,
    pub j_xx: HalfInt,
    pub value: i64,
}

/// `A(x-) = sum(-w) + (J(O,O) - J(X,X))/2 - (n-1)/2`, with its parts.
pub fn alexander_breakdown(g: &GridDiagram) -> Result<AlexanderGrading, GridError> {
    let (mut upper, mut lower) = (0, 0);
    for (r, p) in x_minus(g).into_iter().enumerate() {
        let w = -winding_number(g, p);
        if g.row_roles()[r] == StrandRole::BShort {
            lower += w;
        } else {
            upper += w;
        }
    }
    let (xs, os) = (x_markers(g), o_markers(g));
    let j_oo = j_pairing(&os, &os);
    let j_xx = j_pairing(&xs, &xs);
    let quadruple = 4 * (upper + lower) + j_oo.twice() - j_xx.twice() - 2 * (g.n() as i64 - 1);
    if quadruple % 4 != 0 {
        return Err(GridError::NonIntegerGrading { quadruple });
    }
    Ok(AlexanderGrading {
        winding_upper: upper,
        winding_lower: lower,
        j_oo,
        j_xx,
        value: quadruple / 4,
    })
}

pub fn alexander_direct(g: &GridDiagram) -> Result<i64, GridError> {
    alexander_breakdown(g).map(|a| a.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_is_symmetric_and_half_integral() {
        let p = [PlanePoint { x: 0, y: 0 }, PlanePoint { x: 3, y: 1 }];
        let q = [PlanePoint { x: 1, y: 2 }];
        assert_eq!(j_pairing(&p, &q), j_pairing(&q, &p));
        assert_eq!(j_pairing(&p, &q), HalfInt::from_twice(1));
        assert_eq!(j_pairing(&p, &p), HalfInt::from_integer(1));
    }

    #[test]
    fn unknot_grid() {
        // The 2x2 grid of the unknot: x- has grading 0.
        let g = GridDiagram::from_markers(vec![0, 1], vec![1, 0]).unwrap();
        assert_eq!(alexander_direct(&g).unwrap(), 0);
    }

    #[test]
    fn half_int_serializes_as_fraction() {
        let s = serde_json::to_string(&HalfInt::from_twice(3)).unwrap();
        assert_eq!(s, r#"{"num":3,"den":2}"#);
        assert_eq!(HalfInt::from_twice(3).to_string(), "3/2");
    }
}
