//! Decision engine for elements of finitely generated free groups: does a
//! given element (equivalently, its conjugacy class, or a knot class in a
//! genus-`g` handlebody) lie in a proper free factor, or does it bind the
//! whole group?
//!
//! The verdict always comes with a machine-checkable certificate: a
//! replayable sequence of elementary automorphisms exhibiting a free factor,
//! or a Whitehead-graph / orbit-exhaustion witness for binding.

pub mod automorphism;
pub mod error;
mod fold;
pub mod graph;
pub mod handlebody;
pub mod separability;
pub mod word;

pub use error::{Error, Result};
pub use word::{CyclicWord, Letter, Rank, Word};
