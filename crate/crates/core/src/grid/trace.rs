use thiserror::Error;

use super::GridDiagram;
use crate::orbit::cycle_count;
use crate::words::{Letter, LorenzWord, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("grid has {components} components; a knot has one")]
    MultipleComponents { components: usize },
    #[error("traced word is not a Lorenz word: {0}")]
    NotLorenz(WordError),
}

/// One oriented segment of the knot: a column runs from its X to its O, a
/// row from its O to its X.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Segment {
    Vertical(usize),
    Horizontal(usize),
}

/// Number of link components.
pub fn component_count(g: &GridDiagram) -> usize {
    let next: Vec<usize> = (0..g.n()).map(|r| g.o_in_column(g.x_in_row(r))).collect();
    cycle_count(&next)
}

/// The segments of the component through the X of `row`, in orientation
/// order, starting with the vertical leaving that X.
pub fn trace_from_row(g: &GridDiagram, row: usize) -> Vec<Segment> {
    let mut out = Vec::new();
    let mut r = row;
    loop {
        let c = g.x_in_row(r);
        out.push(Segment::Vertical(c));
        r = g.o_in_column(c);
        out.push(Segment::Horizontal(r));
        if r == row {
            return out;
        }
    }
}

/// Reads the Lorenz word back off the grid.
///
/// An X whose column arrives from above and whose row leaves to the right
/// records a pass through the left ear (`x`); an O whose column arrives from
/// above and whose row continues to the right records a pass through the
/// right ear (`y`).
pub fn trace_word(g: &GridDiagram) -> Result<LorenzWord, TraceError> {
    let components = component_count(g);
    if components != 1 {
        return Err(TraceError::MultipleComponents { components });
    }
    let mut letters = Vec::new();
    for seg in trace_from_row(g, 0) {
        match seg {
            Segment::Vertical(c) => {
                let r = g.o_in_column(c);
                if g.x_in_column(c) < r && g.x_in_row(r) > c {
                    letters.push(Letter::Y);
                }
            }
            Segment::Horizontal(r) => {
                let c = g.x_in_row(r);
                if g.o_in_column(c) < r && g.o_in_row(r) > c {
                    letters.push(Letter::X);
                }
            }
        }
    }
    Ok(LorenzWord::from_letters(letters)?)
}
