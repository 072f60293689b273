//! Mastermind satisfiability toolkit.
//!
//! * [`score`]: codes, the black/white score and its two residual distances.
//! * [`solver`]: decide, witness, enumerate and verify instances.
//! * [`reduction`]: vertex cover to Mastermind, with witness mapping both ways.
//! * [`uniqueness`]: unique-solution detection via follow-up solves.
//! * [`io`]: text formats for instances, graphs and codes.

pub mod error;
pub mod graph;
pub mod instance;
pub mod io;
pub mod reduction;
pub mod score;
pub mod solver;
pub mod uniqueness;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use graph::{brute_force_vertex_cover, Graph};
pub use instance::{MspInstance, ScoredGuess};
pub use reduction::{
    construct_witness, extract_cover, reduce, ColorMap, ReductionArtifact, Variant,
};
pub use score::{naive_score, rho1, rho2, score, Code, Color, ColorMultiset, Palette, Score};
pub use solver::{enumerate_all, solve, verify, Enumeration, SolveMode, SolveOutcome, Solver};
pub use uniqueness::{is_unique, score_pairs_excluding_perfect, UniquenessReport};
