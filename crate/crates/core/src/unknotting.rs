//! Counting the crossing changes that unknot a Lorenz grid diagram.
//!
//! Travel along the knot starting at the X of a long horizontal strand. A
//! crossing is *wrong* when its vertical (over) segment is reached after its
//! horizontal (under) segment; changing every wrong crossing leaves a
//! descending diagram, which is an unknot.
//!
//! Cutting the knot at the left ends of the long horizontals splits it into
//! `t` strings (the `B` numeration); cutting at their right ends gives the `A`
//! numeration. On each of `A ∪ C` and `B ∪ C` the wrong crossings are those
//! where the vertical string comes after the horizontal one, and their number
//! follows from the crossing count, the number of strands and the sign sums
//! `N_B`, `N_A` of the central square.

use serde::Serialize;
use thiserror::Error;

use crate::grid::{
    enumerate_crossings, trace_from_row, GridDiagram, GridError, Region, Segment, StrandRole,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnknotError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("grid has no long strands")]
    NoLongStrands,
    #[error("start strand {start} is not in 1..={t}")]
    BadStart { start: usize, t: usize },
    #[error("grid is not a knot: the trace covers {covered} of {total} segments")]
    NotAKnot { covered: usize, total: usize },
    #[error("unknotting procedure disagrees with the trace: {detail}")]
    ProcedureMismatch { detail: String },
}

/// Where the knot is cut into strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CutMode {
    /// Cut at the X (left) end of each long horizontal.
    B,
    /// Cut at the O (right) end of each long horizontal.
    A,
}

/// String number (1-based) of every vertical and horizontal segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringLabeling {
    pub columns: Vec<usize>,
    pub rows: Vec<usize>,
}

/// Numbers the strings along a trace that starts with the vertical leaving
/// the X of the first long horizontal.
pub fn string_labels(g: &GridDiagram, trace: &[Segment], mode: CutMode) -> StringLabeling {
    let t = g.t();
    let is_long_row = |r: usize| g.row_roles()[r].is_long();
    let mut columns = vec![0; g.n()];
    let mut rows = vec![0; g.n()];
    let mut count = 0;
    for &seg in trace {
        match (mode, seg) {
            (CutMode::B, Segment::Vertical(c)) => {
                if is_long_row(g.x_in_column(c)) {
                    count += 1;
                }
                columns[c] = count;
            }
            (CutMode::B, Segment::Horizontal(r)) => rows[r] = count,
            (CutMode::A, Segment::Vertical(c)) => columns[c] = count % t + 1,
            (CutMode::A, Segment::Horizontal(r)) => {
                if is_long_row(r) {
                    count += 1;
                }
                rows[r] = count % t + 1;
            }
        }
    }
    StringLabeling { columns, rows }
}

/// The `t x t` central square: string labels of the long verticals from
/// left to right, and of the long horizontals from top to bottom in both
/// numerations. Verticals carry the same label in either numeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSquare {
    pub vertical_labels: Vec<usize>,
    pub horizontal_b: Vec<usize>,
    pub horizontal_a: Vec<usize>,
}

impl CentralSquare {
    pub fn new(g: &GridDiagram, b: &StringLabeling, a: &StringLabeling) -> CentralSquare {
        let mut cols: Vec<usize> = g.long_vertical_order().to_vec();
        let mut rows: Vec<usize> = g.long_horizontal_order().to_vec();
        cols.sort_unstable();
        rows.sort_unstable();
        CentralSquare {
            vertical_labels: cols.iter().map(|&c| b.columns[c]).collect(),
            horizontal_b: rows.iter().map(|&r| b.rows[r]).collect(),
            horizontal_a: rows.iter().map(|&r| a.rows[r]).collect(),
        }
    }

    /// Exchanges the long verticals at positions `i` and `j` (0-based, left
    /// to right).
    pub fn swap_verticals(&mut self, i: usize, j: usize) {
        self.vertical_labels.swap(i, j);
    }

    fn positions(labels: &[usize], i: usize, j: usize) -> (usize, usize) {
        let pi = labels
            .iter()
            .position(|&l| l == i)
            .expect("string label present");
        let pj = labels
            .iter()
            .position(|&l| l == j)
            .expect("string label present");
        (pi.min(pj), pi.max(pj))
    }

    /// `sgn(left column label - top row label)` over the rectangle spanned by
    /// the strands of strings `i` and `j`, `B` numeration.
    pub fn epsilon(&self, i: usize, j: usize) -> i64 {
        let (left, _) = Self::positions(&self.vertical_labels, i, j);
        let (top, _) = Self::positions(&self.horizontal_b, i, j);
        sign(self.vertical_labels[left] as i64 - self.horizontal_b[top] as i64)
    }

    /// `sgn(bottom row label - right column label)` over the rectangle
    /// spanned by the strands of strings `i` and `j`, `A` numeration.
    pub fn delta(&self, i: usize, j: usize) -> i64 {
        let (_, right) = Self::positions(&self.vertical_labels, i, j);
        let (_, bottom) = Self::positions(&self.horizontal_a, i, j);
        sign(self.horizontal_a[bottom] as i64 - self.vertical_labels[right] as i64)
    }

    /// `N_B`.
    pub fn epsilon_sum(&self) -> i64 {
        self.pairs().map(|(i, j)| self.epsilon(i, j)).sum()
    }

    /// `N_A`.
    pub fn delta_sum(&self) -> i64 {
        self.pairs().map(|(i, j)| self.delta(i, j)).sum()
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let t = self.vertical_labels.len();
        (1..=t).flat_map(move |i| (i + 1..=t).map(move |j| (i, j)))
    }
}

/// The central square of a grid, numbered from the first long horizontal.
pub fn central_square(g: &GridDiagram) -> Result<CentralSquare, UnknotError> {
    let trace = start_trace(g, 1)?;
    let b = string_labels(g, &trace, CutMode::B);
    let a = string_labels(g, &trace, CutMode::A);
    Ok(CentralSquare::new(g, &b, &a))
}

fn sign(v: i64) -> i64 {
    v.signum()
}

/// `(N_B, N_A)` for a grid, tracing from the first long horizontal.
pub fn epsilon_delta(g: &GridDiagram) -> Result<(i64, i64), UnknotError> {
    let square = central_square(g)?;
    Ok((square.epsilon_sum(), square.delta_sum()))
}

fn start_trace(g: &GridDiagram, start: usize) -> Result<Vec<Segment>, UnknotError> {
    let t = g.t();
    if t == 0 {
        return Err(UnknotError::NoLongStrands);
    }
    if start == 0 || start > t {
        return Err(UnknotError::BadStart { start, t });
    }
    let trace = trace_from_row(g, g.long_horizontal_order()[start - 1]);
    if trace.len() != 2 * g.n() {
        return Err(UnknotError::NotAKnot {
            covered: trace.len(),
            total: 2 * g.n(),
        });
    }
    Ok(trace)
}

/// A crossing together with its string numbers and whether it is wrong.
/// Rows and columns are 0-based here and 1-based when serialized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingChange {
    pub row: usize,
    pub col: usize,
    pub region: Region,
    /// `(vertical string, horizontal string)`: `B` numeration in `B` and `C`,
    /// `A` numeration in `A`.
    pub strings: (usize, usize),
    pub wrong: bool,
}

impl Serialize for CrossingChange {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("CrossingChange", 5)?;
        st.serialize_field("row", &(self.row + 1))?;
        st.serialize_field("col", &(self.col + 1))?;
        st.serialize_field("region", &self.region)?;
        st.serialize_field("strings", &[self.strings.0, self.strings.1])?;
        st.serialize_field("wrong", &self.wrong)?;
        st.end()
    }
}

/// Classifies every crossing by tracing from the X of long horizontal
/// `start` (1-based).
pub fn classify_by_trace_from(
    g: &GridDiagram,
    start: usize,
) -> Result<Vec<CrossingChange>, UnknotError> {
    let trace = start_trace(g, start)?;
    let mut col_time = vec![0; g.n()];
    let mut row_time = vec![0; g.n()];
    for (time, seg) in trace.iter().enumerate() {
        match *seg {
            Segment::Vertical(c) => col_time[c] = time,
            Segment::Horizontal(r) => row_time[r] = time,
        }
    }
    let b = string_labels(g, &trace, CutMode::B);
    let a = string_labels(g, &trace, CutMode::A);
    Ok(enumerate_crossings(g)?
        .into_iter()
        .map(|c| {
            let labels = if c.region == Region::A { &a } else { &b };
            CrossingChange {
                row: c.row,
                col: c.col,
                region: c.region,
                strings: (labels.columns[c.col], labels.rows[c.row]),
                wrong: col_time[c.col] > row_time[c.row],
            }
        })
        .collect())
}

pub fn classify_by_trace(g: &GridDiagram) -> Result<Vec<CrossingChange>, UnknotError> {
    classify_by_trace_from(g, 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WrongCrossingReport {
    pub start_strand: usize,
    pub n_a: i64,
    pub n_b: i64,
    pub c_ac: usize,
    pub c_bc: usize,
    /// Crossings in `A ∪ C` whose two segments carry the same `A` label.
    pub self_a: usize,
    /// Crossings in `B ∪ C` whose two segments carry the same `B` label.
    pub self_b: usize,
    pub u_ac: i64,
    pub u_bc: i64,
    /// `U = u_AC + u_BC - t(t-1)/2`.
    #[serde(rename = "U")]
    pub total: i64,
    /// Wrong crossings found directly by the trace.
    pub trace_wrong: usize,
    /// Every crossing in row-major order; the wrong ones are to be changed.
    pub crossings: Vec<CrossingChange>,
}

impl WrongCrossingReport {
    /// The crossings to change.
    pub fn changes(&self) -> impl Iterator<Item = &CrossingChange> {
        self.crossings.iter().filter(|c| c.wrong)
    }
}

/// Runs the counting procedure from long horizontal `start` without
/// cross-checking it against the trace.
pub fn wrong_crossing_report(
    g: &GridDiagram,
    start: usize,
) -> Result<WrongCrossingReport, UnknotError> {
    let trace = start_trace(g, start)?;
    let t = g.t() as i64;
    let label_b = string_labels(g, &trace, CutMode::B);
    let label_a = string_labels(g, &trace, CutMode::A);
    let square = CentralSquare::new(g, &label_b, &label_a);
    let (n_b, n_a) = (square.epsilon_sum(), square.delta_sum());

    let all = classify_by_trace_from(g, start)?;
    let c_ac = all.iter().filter(|c| c.region != Region::B).count();
    let c_bc = all.iter().filter(|c| c.region != Region::A).count();
    let self_a = all
        .iter()
        .filter(|c| c.region != Region::B && label_a.columns[c.col] == label_a.rows[c.row])
        .count();
    let self_b = all
        .iter()
        .filter(|c| c.region != Region::A && label_b.columns[c.col] == label_b.rows[c.row])
        .count();

    // Each ear contributes one self-crossing per strand of that ear.
    let a = (g
        .row_roles()
        .iter()
        .filter(|r| **r != StrandRole::BShort)
        .count()
        / 2) as i64;
    let b = (g
        .column_roles()
        .iter()
        .filter(|r| **r != StrandRole::AShort)
        .count()
        / 2) as i64;
    let twice_bc = c_bc as i64 - b + n_b;
    let twice_ac = c_ac as i64 - a - n_a;
    if twice_bc % 2 != 0 || twice_ac % 2 != 0 {
        return Err(UnknotError::ProcedureMismatch {
            detail: format!("odd counts 2u_BC = {twice_bc}, 2u_AC = {twice_ac}"),
        });
    }
    let (u_bc, u_ac) = (twice_bc / 2, twice_ac / 2);
    let trace_wrong = all.iter().filter(|c| c.wrong).count();
    Ok(WrongCrossingReport {
        start_strand: start,
        n_a,
        n_b,
        c_ac,
        c_bc,
        self_a,
        self_b,
        u_ac,
        u_bc,
        total: u_ac + u_bc - t * (t - 1) / 2,
        trace_wrong,
        crossings: all,
    })
}

/// The set of crossings to change, starting from the first long horizontal,
/// with every count cross-checked against the trace.
pub fn unknotting_set(g: &GridDiagram) -> Result<WrongCrossingReport, UnknotError> {
    let report = wrong_crossing_report(g, 1)?;
    let mismatch = |detail: String| Err(UnknotError::ProcedureMismatch { detail });
    let wrong_in = |skip: Region| report.changes().filter(|c| c.region != skip).count() as i64;
    if wrong_in(Region::A) != report.u_bc {
        return mismatch(format!(
            "{} wrong in B ∪ C, counted {}",
            wrong_in(Region::A),
            report.u_bc
        ));
    }
    if wrong_in(Region::B) != report.u_ac {
        return mismatch(format!(
            "{} wrong in A ∪ C, counted {}",
            wrong_in(Region::B),
            report.u_ac
        ));
    }
    if report.total != report.trace_wrong as i64 {
        return mismatch(format!(
            "U = {} but the trace finds {}",
            report.total, report.trace_wrong
        ));
    }
    // String order rules: in B ∪ C a crossing is wrong iff i > j; in A ∪ C,
    // under the A numeration, iff j != 1 and i >= j.
    let trace = start_trace(g, 1)?;
    let label_a = string_labels(g, &trace, CutMode::A);
    let label_b = string_labels(g, &trace, CutMode::B);
    for c in classify_by_trace(g)? {
        if c.region != Region::A {
            let (i, j) = (label_b.columns[c.col], label_b.rows[c.row]);
            if c.wrong != (i > j) {
                return mismatch(format!(
                    "B rule fails at row {}, column {}",
                    c.row + 1,
                    c.col + 1
                ));
            }
        }
        if c.region != Region::B {
            let (i, j) = (label_a.columns[c.col], label_a.rows[c.row]);
            if c.wrong != (j != 1 && i >= j) {
                return mismatch(format!(
                    "A rule fails at row {}, column {}",
                    c.row + 1,
                    c.col + 1
                ));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::build_grid;
    use crate::orbit::OrbitCombinatorics;

    fn grid(w: &str) -> GridDiagram {
        build_grid(&OrbitCombinatorics::new(&w.parse().unwrap())).unwrap()
    }

    #[test]
    fn trefoil_needs_one_change() {
        let r = unknotting_set(&grid("xyxyy")).unwrap();
        assert_eq!(r.total, 1);
        let changes: Vec<_> = r.changes().collect();
        assert_eq!(changes.len(), 1);
        assert_eq!(changes[0].region, Region::C);
        assert_eq!((r.self_a, r.self_b), (2, 3));
        assert_eq!(r.n_b - r.n_a, -1);
    }

    #[test]
    fn word_x3y3xy2_counts() {
        let r = unknotting_set(&grid("xxxyyyxyy")).unwrap();
        assert_eq!((r.u_ac, r.u_bc, r.total), (1, 2, 2));
        assert_eq!((r.self_a, r.self_b), (4, 5));
        let in_region = |g| r.changes().filter(|c| c.region == g).count();
        assert_eq!(
            (
                in_region(Region::A),
                in_region(Region::B),
                in_region(Region::C)
            ),
            (0, 1, 1)
        );
    }

    #[test]
    fn b_labels_cut_at_x_ends() {
        let g = grid("xxxyyyxyy");
        let trace = start_trace(&g, 1).unwrap();
        let b = string_labels(&g, &trace, CutMode::B);
        let a = string_labels(&g, &trace, CutMode::A);
        let first = g.long_horizontal_order()[0];
        assert_eq!(b.rows[first], g.t());
        assert_eq!(a.rows[first], 1);
        // Verticals carry the same number in both numerations.
        assert_eq!(a.columns, b.columns);
    }

    #[test]
    fn central_square_signs() {
        let mut sq = CentralSquare {
            vertical_labels: vec![2, 1],
            horizontal_b: vec![1, 2],
            horizontal_a: vec![2, 1],
        };
        assert_eq!(sq.epsilon(1, 2), 1);
        assert_eq!(sq.delta(1, 2), 0);
        sq.swap_verticals(0, 1);
        assert_eq!(sq.epsilon(1, 2), 0);
        assert_eq!(sq.delta(1, 2), -1);
        assert_eq!(sq.epsilon_sum() - sq.delta_sum(), 1);
    }

    #[test]
    fn bad_start() {
        let g = grid("xyxyy");
        assert_eq!(
            wrong_crossing_report(&g, 3),
            Err(UnknotError::BadStart { start: 3, t: 2 })
        );
        let bare = GridDiagram::from_markers(vec![0, 1], vec![1, 0]).unwrap();
        assert_eq!(unknotting_set(&bare), Err(UnknotError::NoLongStrands));
    }
}
