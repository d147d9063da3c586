//! Lorenz knots from their symbolic words.
//!
//! A Lorenz knot is named by a primitive cyclic word over `{x, y}`. This crate
//! turns such a word into the branch-line combinatorics of the orbit, lays the
//! knot out as a grid diagram split into an upper-left ear (`A`), a lower-right
//! ear (`B`) and a central square (`C`), and computes the unknotting number by
//! three independent routes:
//!
//! * the closed form in terms of `a`, `b`, `t`, `mu` and `nu` ([`invariants`]);
//! * the Alexander grading of the grid state `x-` read directly off the
//!   diagram ([`grid::alexander_direct`]);
//! * an explicit descending-diagram crossing-change procedure
//!   ([`unknotting::unknotting_set`]).
//!
//! The Lorenz permutation braid and its Burau-derived Alexander polynomial
//! ([`braid`]) serve as an independent oracle, and [`harness`] sweeps every
//! small word through all of the identities.
//!
//! ```
//! use lorenz_core::{LorenzWord, OrbitCombinatorics, invariants::closed_form_invariants};
//!
//! let word: LorenzWord = "xxxyyyxyy".parse().unwrap();
//! let orbit = OrbitCombinatorics::new(&word);
//! assert_eq!(orbit.mu(), &[1, 3]);
//! assert_eq!(closed_form_invariants(&orbit).unwrap().unknotting, 2);
//! ```

pub mod braid;
pub mod grid;
pub mod harness;
pub mod invariants;
pub mod orbit;
pub mod unknotting;
pub mod words;

pub use braid::{BraidData, LaurentPoly};
pub use grid::GridDiagram;
pub use invariants::InvariantRecord;
pub use orbit::{BranchPoint, OrbitCombinatorics};
pub use words::{Letter, LorenzWord, Syllable, WordError};
