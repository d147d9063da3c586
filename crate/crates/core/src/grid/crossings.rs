use serde::Serialize;

use super::{GridDiagram, GridError};

/// The part of the grid a crossing lies in, read off the roles of its two
/// strands: `C` where two long strands meet, `A` where a long horizontal
/// passes under a short vertical, `B` where a short horizontal passes under a
/// long vertical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Region {
    A,
    B,
    C,
}

/// A crossing of the vertical segment in `col` over the horizontal segment in
/// `row` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub row: usize,
    pub col: usize,
    pub region: Region,
}

/// Every crossing cell in row-major order, without classification.
pub fn raw_crossings(g: &GridDiagram) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for row in 0..g.n() {
        let (l, r) = g.row_span(row);
        for col in l + 1..r {
            let (top, bottom) = g.column_span(col);
            if top < row && row < bottom {
                out.push((row, col));
            }
        }
    }
    out
}

/// Every crossing with its region. A crossing between two short strands
/// means the diagram does not have the three-part layout.
pub fn enumerate_crossings(g: &GridDiagram) -> Result<Vec<Crossing>, GridError> {
    raw_crossings(g)
        .into_iter()
        .map(|(row, col)| {
            let region = match (
                g.row_roles()[row].is_long(),
                g.column_roles()[col].is_long(),
            ) {
                (true, true) => Region::C,
                (true, false) => Region::A,
                (false, true) => Region::B,
                (false, false) => return Err(GridError::ShortShortCrossing { row, col }),
            };
            Ok(Crossing { row, col, region })
        })
        .collect()
}
