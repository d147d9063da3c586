//! Grid diagrams of Lorenz knots.
//!
//! The left ear of the template becomes `a` nested clockwise hooks in the
//! upper-left part `A` of the grid, the right ear `b` nested counter-clockwise
//! hooks in the lower-right part `B`. The `t` arcs that cross from the left
//! interval to the right one run as long vertical strands from `A` down to
//! `B`; the `t` arcs going back run as long horizontal strands from `B`
//! leftward into `A`. Long verticals meet long horizontals in the central
//! square `C`. Vertical segments always pass over horizontal ones.
//!
//! Rows and columns are 0-based here; the JSON and text exports are 1-based.
//!
//! Row order, top to bottom:
//!   `top(p_a) .. top(p_1)`, `land(p_1) .. land(p_a)`, `dep(q_{b-t}) .. dep(q_1)`,
//!   `bot(q_1) .. bot(q_b)`,
//! where the landing row of `p_{mu_k}` doubles as the departure row of
//! `q_{b-k+1}` (the `k`-th long horizontal).
//!
//! Column order, left to right:
//!   `left(p_a) .. left(p_1)`, `right(p_1) .. right(p_{a-t})`, `arr(q_b) .. arr(q_1)`,
//!   `ret(q_1) .. ret(q_b)`,
//! where the arrival column of `q_{nu_k}` doubles as the right side of
//! `p_{a-k+1}` (the `k`-th long vertical).

mod crossings;
mod export;
mod geometry;
mod trace;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::invariants;
use crate::orbit::{BranchPoint, OrbitCombinatorics};
use crate::unknotting;
use crate::words::WordError;

pub use crossings::{enumerate_crossings, raw_crossings, Crossing, Region};
pub use export::{export, ExportFormat};
pub use geometry::{
    alexander_breakdown, alexander_direct, j_pairing, winding_number, x_minus, AlexanderGrading,
    HalfInt, PlanePoint,
};
pub use trace::{component_count, trace_from_row, trace_word, Segment, TraceError};

/// What a row or column carries in the three-part layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrandRole {
    AShort,
    /// The `k`-th long strand, `k` in `1..=t`. Long strands cross `C`.
    #[serde(rename = "c_long")]
    Long(usize),
    BShort,
}

impl StrandRole {
    pub fn is_long(self) -> bool {
        matches!(self, StrandRole::Long(_))
    }
}

/// The postconditions a constructed diagram must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Postcondition {
    /// Valid grid of size `2a + 2b - t` with `t` long strands each way and the
    /// expected marker counts per part.
    P1,
    /// A single component whose traced word is the input word.
    P2,
    /// Crossings only on long strands, with the closed-form regional and
    /// per-strand counts.
    P3,
    /// Direct Alexander grading of `x-` equals its closed form.
    P4,
    /// The crossing-change procedure gives `U = u` and `N_B - N_A = -(t-1)`.
    P5,
    /// Marker pairings and winding sums equal their closed forms.
    P6,
}

impl Postcondition {
    pub const ALL: [Postcondition; 6] = [
        Postcondition::P1,
        Postcondition::P2,
        Postcondition::P3,
        Postcondition::P4,
        Postcondition::P5,
        Postcondition::P6,
    ];
}

impl fmt::Display for Postcondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Postcondition::P1 => "P1 valid grid",
            Postcondition::P2 => "P2 single component realizing the word",
            Postcondition::P3 => "P3 crossing counts",
            Postcondition::P4 => "P4 Alexander grading",
            Postcondition::P5 => "P5 unknotting procedure",
            Postcondition::P6 => "P6 pairings and winding sums",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("construction failure at {postcondition}: {detail}")]
    ConstructionFailure {
        postcondition: Postcondition,
        detail: String,
    },
    #[error("crossing of two short segments at row {row}, column {col}", row = .row + 1, col = .col + 1)]
    ShortShortCrossing { row: usize, col: usize },
    #[error("Alexander grading is not an integer (4A = {quadruple})")]
    NonIntegerGrading { quadruple: i64 },
    #[error("unknown export format {0:?}; expected ascii, svg or json")]
    UnknownFormat(String),
    #[error("malformed grid JSON: {0}")]
    Json(String),
}

/// An `n x n` grid with one `X` and one `O` in every row and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridDiagram {
    n: usize,
    x_col: Vec<usize>,
    o_col: Vec<usize>,
    x_row: Vec<usize>,
    o_row: Vec<usize>,
    column_roles: Vec<StrandRole>,
    row_roles: Vec<StrandRole>,
    long_vertical_order: Vec<usize>,
    long_horizontal_order: Vec<usize>,
}

impl GridDiagram {
    /// Builds a diagram from marker columns per row and strand roles,
    /// checking that the markers form a grid and the long-strand labels are
    /// `1..=t` on both axes.
    pub fn new(
        x_col: Vec<usize>,
        o_col: Vec<usize>,
        column_roles: Vec<StrandRole>,
        row_roles: Vec<StrandRole>,
    ) -> Result<GridDiagram, GridError> {
        let n = x_col.len();
        if n == 0 {
            return Err(GridError::InvalidGrid("empty grid".into()));
        }
        if o_col.len() != n || column_roles.len() != n || row_roles.len() != n {
            return Err(GridError::InvalidGrid(
                "marker and role vectors differ in length".into(),
            ));
        }
        let x_row = invert(&x_col)
            .ok_or_else(|| GridError::InvalidGrid("X columns do not form a permutation".into()))?;
        let o_row = invert(&o_col)
            .ok_or_else(|| GridError::InvalidGrid("O columns do not form a permutation".into()))?;
        if let Some(r) = (0..n).find(|&r| x_col[r] == o_col[r]) {
            return Err(GridError::InvalidGrid(format!(
                "X and O share the cell in row {}",
                r + 1
            )));
        }
        let long_vertical_order = long_order(&column_roles, "column")?;
        let long_horizontal_order = long_order(&row_roles, "row")?;
        if long_vertical_order.len() != long_horizontal_order.len() {
            return Err(GridError::InvalidGrid(format!(
                "{} long columns but {} long rows",
                long_vertical_order.len(),
                long_horizontal_order.len()
            )));
        }
        Ok(GridDiagram {
            n,
            x_col,
            o_col,
            x_row,
            o_row,
            column_roles,
            row_roles,
            long_vertical_order,
            long_horizontal_order,
        })
    }

    /// A bare grid with no long strands: every row and column is tagged `A`.
    pub fn from_markers(x_col: Vec<usize>, o_col: Vec<usize>) -> Result<GridDiagram, GridError> {
        let n = x_col.len();
        GridDiagram::new(
            x_col,
            o_col,
            vec![StrandRole::AShort; n],
            vec![StrandRole::AShort; n],
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of long strands in each direction.
    pub fn t(&self) -> usize {
        self.long_vertical_order.len()
    }

    /// Column of the `X` in each row.
    pub fn x_columns(&self) -> &[usize] {
        &self.x_col
    }

    /// Column of the `O` in each row.
    pub fn o_columns(&self) -> &[usize] {
        &self.o_col
    }

    pub fn x_in_row(&self, row: usize) -> usize {
        self.x_col[row]
    }

    pub fn o_in_row(&self, row: usize) -> usize {
        self.o_col[row]
    }

    pub fn x_in_column(&self, col: usize) -> usize {
        self.x_row[col]
    }

    pub fn o_in_column(&self, col: usize) -> usize {
        self.o_row[col]
    }

    pub fn column_roles(&self) -> &[StrandRole] {
        &self.column_roles
    }

    pub fn row_roles(&self) -> &[StrandRole] {
        &self.row_roles
    }

    /// Column of the `k`-th long vertical, indexed by `k - 1`.
    pub fn long_vertical_order(&self) -> &[usize] {
        &self.long_vertical_order
    }

    /// Row of the `k`-th long horizontal, indexed by `k - 1`.
    pub fn long_horizontal_order(&self) -> &[usize] {
        &self.long_horizontal_order
    }

    /// Rows spanned by the vertical segment of `col`, as `(top, bottom)`.
    pub fn column_span(&self, col: usize) -> (usize, usize) {
        let (r1, r2) = (self.x_row[col], self.o_row[col]);
        (r1.min(r2), r1.max(r2))
    }

    /// Columns spanned by the horizontal segment of `row`, as `(left, right)`.
    pub fn row_span(&self, row: usize) -> (usize, usize) {
        let (c1, c2) = (self.x_col[row], self.o_col[row]);
        (c1.min(c2), c1.max(c2))
    }

    /// Whether the vertical segment in `col` runs downward (X above O).
    pub fn column_runs_down(&self, col: usize) -> bool {
        self.o_row[col] > self.x_row[col]
    }
}

fn invert(perm: &[usize]) -> Option<Vec<usize>> {
    let n = perm.len();
    let mut inv = vec![usize::MAX; n];
    for (i, &p) in perm.iter().enumerate() {
        if p >= n || inv[p] != usize::MAX {
            return None;
        }
        inv[p] = i;
    }
    Some(inv)
}

fn long_order(roles: &[StrandRole], axis: &str) -> Result<Vec<usize>, GridError> {
    let ks: Vec<(usize, usize)> = roles
        .iter()
        .enumerate()
        .filter_map(|(i, r)| match r {
            StrandRole::Long(k) => Some((*k, i)),
            _ => None,
        })
        .collect();
    let t = ks.len();
    let mut order = vec![usize::MAX; t];
    for (k, i) in ks {
        if k == 0 || k > t || order[k - 1] != usize::MAX {
            return Err(GridError::InvalidGrid(format!(
                "long {axis} labels must be 1..={t}, each once"
            )));
        }
        order[k - 1] = i;
    }
    Ok(order)
}

/// Lays out the grid for the orbit and certifies every postcondition.
pub fn build_grid(oc: &OrbitCombinatorics) -> Result<GridDiagram, GridError> {
    let grid = layout(oc)?;
    for p in Postcondition::ALL {
        check_postcondition(&grid, oc, p).map_err(|detail| GridError::ConstructionFailure {
            postcondition: p,
            detail,
        })?;
    }
    Ok(grid)
}

/// Places the markers for the orbit without certifying the result.
pub fn layout(oc: &OrbitCombinatorics) -> Result<GridDiagram, GridError> {
    let (a, b, t) = (oc.a(), oc.b(), oc.t());
    let (mu, nu) = (oc.mu(), oc.nu());
    let n = 2 * a + 2 * b - t;
    let fail = |detail: String| GridError::ConstructionFailure {
        postcondition: Postcondition::P1,
        detail,
    };

    // Rows.
    let top = |i: usize| a - i;
    let land = |r: usize| a + r - 1;
    let bot = |s: usize| 2 * a + (b - t) + s - 1;
    let dep = |s: usize| {
        if s > b - t {
            land(mu[b - s])
        } else {
            2 * a + (b - t - s)
        }
    };
    // Columns.
    let left = |i: usize| a - i;
    let arr = |s: usize| 2 * a - t + (b - s);
    let ret = |s: usize| 2 * a - t + b + s - 1;
    let right = |i: usize| if i > a - t { arr(nu[a - i]) } else { a + i - 1 };

    let mut x_col = vec![None; n];
    let mut o_col = vec![None; n];
    let place = |markers: &mut Vec<Option<usize>>, row: usize, col: usize, what: &str| {
        if markers[row].replace(col).is_some() {
            return Err(fail(format!("two {what} markers in row {}", row + 1)));
        }
        Ok(())
    };

    for i in 1..=a {
        place(&mut x_col, land(i), left(i), "X")?;
        place(&mut o_col, top(i), left(i), "O")?;
        place(&mut x_col, top(i), right(i), "X")?;
        match oc.p_image(i) {
            BranchPoint::P(r) if i <= a - t => place(&mut o_col, land(r), right(i), "O")?,
            BranchPoint::Q(s) if i > a - t && s == nu[a - i] => {
                place(&mut o_col, bot(s), right(i), "O")?
            }
            image => {
                return Err(fail(format!(
                    "p_{i} maps to {image:?}, out of monotone order"
                )))
            }
        }
    }
    for s in 1..=b {
        place(&mut x_col, bot(s), ret(s), "X")?;
        place(&mut o_col, dep(s), ret(s), "O")?;
        match oc.q_image(s) {
            BranchPoint::Q(s2) if s <= b - t => place(&mut x_col, dep(s), arr(s2), "X")?,
            BranchPoint::P(r) if s > b - t && r == mu[b - s] => {}
            image => {
                return Err(fail(format!(
                    "q_{s} maps to {image:?}, out of monotone order"
                )))
            }
        }
        if !nu.contains(&s) {
            place(&mut o_col, bot(s), arr(s), "O")?;
        }
    }

    let mut column_roles = vec![None; n];
    let mut row_roles = vec![None; n];
    for i in 1..=a {
        column_roles[left(i)] = Some(StrandRole::AShort);
        row_roles[top(i)] = Some(StrandRole::AShort);
        if i <= a - t {
            column_roles[right(i)] = Some(StrandRole::AShort);
        }
        row_roles[land(i)] = Some(match mu.iter().position(|&m| m == i) {
            Some(k) => StrandRole::Long(k + 1),
            None => StrandRole::AShort,
        });
    }
    for s in 1..=b {
        column_roles[ret(s)] = Some(StrandRole::BShort);
        row_roles[bot(s)] = Some(StrandRole::BShort);
        if s <= b - t {
            row_roles[dep(s)] = Some(StrandRole::BShort);
        }
        column_roles[arr(s)] = Some(match nu.iter().position(|&v| v == s) {
            Some(k) => StrandRole::Long(k + 1),
            None => StrandRole::BShort,
        });
    }

    let unwrap_all = |v: Vec<Option<usize>>, what: &str| {
        v.into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| fail(format!("row {} has no {what}", i + 1))))
            .collect::<Result<Vec<_>, _>>()
    };
    let x_col = unwrap_all(x_col, "X")?;
    let o_col = unwrap_all(o_col, "O")?;
    let column_roles = column_roles
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| fail("unassigned column role".into()))?;
    let row_roles = row_roles
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| fail("unassigned row role".into()))?;

    GridDiagram::new(x_col, o_col, column_roles, row_roles).map_err(|e| fail(e.to_string()))
}

/// Checks one postcondition of `grid` against the orbit it was built from.
pub fn check_postcondition(
    grid: &GridDiagram,
    oc: &OrbitCombinatorics,
    which: Postcondition,
) -> Result<(), String> {
    match which {
        Postcondition::P1 => check_valid(grid, oc),
        Postcondition::P2 => check_trace(grid, oc),
        Postcondition::P3 => check_crossings(grid, oc),
        Postcondition::P4 => check_alexander(grid, oc),
        Postcondition::P5 => check_unknotting(grid, oc),
        Postcondition::P6 => check_pairings(grid, oc),
    }
}

fn expect_eq<T: PartialEq + fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn check_valid(grid: &GridDiagram, oc: &OrbitCombinatorics) -> Result<(), String> {
    let (a, b, t) = (oc.a(), oc.b(), oc.t());
    expect_eq("grid number", grid.n(), 2 * a + 2 * b - t)?;
    expect_eq("long verticals", grid.t(), t)?;
    // Rows of A and C carry 2a X markers; columns of B and C carry 2b O markers.
    let upper_rows = grid
        .row_roles()
        .iter()
        .filter(|r| **r != StrandRole::BShort)
        .count();
    expect_eq("X markers in the rows of A and C", upper_rows, 2 * a)?;
    let right_cols = grid
        .column_roles()
        .iter()
        .filter(|r| **r != StrandRole::AShort)
        .count();
    expect_eq("O markers in the columns of B and C", right_cols, 2 * b)?;
    for (k, &col) in grid.long_vertical_order().iter().enumerate() {
        let (top, bottom) = grid.column_span(col);
        if grid.row_roles()[top] == StrandRole::BShort
            || grid.row_roles()[bottom] != StrandRole::BShort
        {
            return Err(format!("long vertical {} does not run from A to B", k + 1));
        }
        if !grid.column_runs_down(col) {
            return Err(format!("long vertical {} is not oriented downward", k + 1));
        }
    }
    for (k, &row) in grid.long_horizontal_order().iter().enumerate() {
        let (l, r) = grid.row_span(row);
        if grid.column_roles()[l] != StrandRole::AShort
            || grid.column_roles()[r] != StrandRole::BShort
        {
            return Err(format!(
                "long horizontal {} does not run from B to A",
                k + 1
            ));
        }
        if grid.x_in_row(row) != l {
            return Err(format!(
                "long horizontal {} is not oriented leftward",
                k + 1
            ));
        }
    }
    Ok(())
}

fn check_trace(grid: &GridDiagram, oc: &OrbitCombinatorics) -> Result<(), String> {
    let word = trace_word(grid).map_err(|e| e.to_string())?;
    expect_eq("traced word", word.to_string(), oc.word().to_string())
}

fn check_crossings(grid: &GridDiagram, oc: &OrbitCombinatorics) -> Result<(), String> {
    let record = invariants::closed_form_invariants(oc).map_err(|e| e.to_string())?;
    let crossings = enumerate_crossings(grid).map_err(|e| e.to_string())?;
    let count = |region: Region| crossings.iter().filter(|c| c.region == region).count();
    expect_eq("crossings in A", count(Region::A), record.crossings_a)?;
    expect_eq("crossings in B", count(Region::B), record.crossings_b)?;
    expect_eq("crossings in C", count(Region::C), record.crossings_c)?;
    expect_eq("total crossings", crossings.len(), record.crossings_total)?;
    for k in 1..=oc.t() {
        let col = grid.long_vertical_order()[k - 1];
        let on_vertical = crossings
            .iter()
            .filter(|c| c.col == col && c.region == Region::B)
            .count();
        expect_eq(
            &format!("B crossings on long vertical {k}"),
            on_vertical,
            invariants::long_vertical_crossings(oc, k),
        )?;
        let row = grid.long_horizontal_order()[k - 1];
        let on_horizontal = crossings
            .iter()
            .filter(|c| c.row == row && c.region == Region::A)
            .count();
        expect_eq(
            &format!("A crossings on long horizontal {k}"),
            on_horizontal,
            invariants::long_horizontal_crossings(oc, k),
        )?;
    }
    Ok(())
}

fn check_alexander(grid: &GridDiagram, oc: &OrbitCombinatorics) -> Result<(), String> {
    let record = invariants::closed_form_invariants(oc).map_err(|e| e.to_string())?;
    let direct = alexander_direct(grid).map_err(|e| e.to_string())?;
    expect_eq("A(x-)", direct, record.alexander_x_minus)
}

fn check_unknotting(grid: &GridDiagram, oc: &OrbitCombinatorics) -> Result<(), String> {
    let record = invariants::closed_form_invariants(oc).map_err(|e| e.to_string())?;
    let report = unknotting::unknotting_set(grid).map_err(|e| e.to_string())?;
    expect_eq("wrong crossings U", report.total, record.unknotting as i64)?;
    expect_eq("N_B - N_A", report.n_b - report.n_a, 1 - oc.t() as i64)
}

fn check_pairings(grid: &GridDiagram, oc: &OrbitCombinatorics) -> Result<(), String> {
    let alexander = alexander_breakdown(grid).map_err(|e| e.to_string())?;
    expect_eq(
        "J(O,O)",
        alexander.j_oo,
        HalfInt::from_integer(invariants::j_oo(oc)),
    )?;
    expect_eq(
        "J(X,X)",
        alexander.j_xx,
        HalfInt::from_integer(invariants::j_xx(oc)),
    )?;
    expect_eq(
        "sum of -w over upper x-",
        alexander.winding_upper,
        invariants::winding_sum_upper(oc),
    )?;
    expect_eq(
        "sum of -w over lower x-",
        alexander.winding_lower,
        invariants::winding_sum_lower(oc),
    )
}

impl From<WordError> for TraceError {
    fn from(e: WordError) -> Self {
        TraceError::NotLorenz(e)
    }
}
