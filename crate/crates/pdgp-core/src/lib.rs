//! Exact computation of partial-dual genus polynomials and related graph
//! invariants over GF(2).
//!
//! The library has two independent routes to the same polynomial:
//!
//! * [`invariants::pdgp`] enumerates vertex subsets of a simple graph and
//!   sums `z^(rank(M_A) + rank(M_Ac))` over GF(2) adjacency ranks, and
//! * [`chord::pdgp_via_ribbon`] traces boundary components of the spanning
//!   surfaces of a chord diagram and sums `z^genus` over partial duals.
//!
//! For a chord diagram and its intersection graph the two routes agree,
//! which the test suite and the `pdgp verify` subcommands check exhaustively
//! at small sizes. On top of the plain polynomial the crate computes the
//! refined (vertex-graded) variant, the skew characteristic polynomial and
//! its refinement, the k-part generalization, a degree-one recurrence
//! evaluator, four-term relation defects, and evaluations of multiplicative
//! invariants on the primitive projection of the graph bialgebra.
//!
//! All coefficients are exact `i128` integers with checked arithmetic;
//! results are deterministic regardless of thread count.

pub mod bialgebra;
pub mod chord;
pub mod gf2;
pub mod graph;
pub mod invariants;
mod par;
pub mod poly;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("size {size} exceeds cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("integer overflow in exact polynomial arithmetic")]
    Overflow,
    #[error("chord label {label:?} must occur exactly twice, found {count}")]
    BadOccurrenceCount { label: String, count: usize },
    #[error("empty chord word")]
    EmptyInput,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("k = {k} is out of range for a graph on {n} vertices")]
    KOutOfRange { k: usize, n: usize },
    #[error("invariant {0} is not multiplicative over disjoint union")]
    NonMultiplicativeInvariant(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Hard cap on vertex / chord counts: index subsets must fit in one `u64`.
pub const MAX_VERTICES: usize = 63;
