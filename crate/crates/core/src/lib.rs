//! Exact reverse-discrepancy computations for uniform hypergraphs.
//!
//! Given a hypergraph and an edge weighting `f: E -> [-1, 1]` with zero total,
//! the *unbalancedness* `X(f)` is the smallest absolute vertex imbalance
//! `|sum_{A ∋ v} f(A)|`. This crate evaluates the best known upper bounds on
//! `max_f X(f)` for complete and complete equipartite hypergraphs, builds the
//! weightings that attain them, and checks both against exact oracles.
//!
//! All arithmetic is over arbitrary-precision rationals ([`Rational`]).
//!
//! ```
//! use zerosum::{bounds, constructions, solver, Hypergraph};
//!
//! let bound = bounds::complete_bound(6, 3).unwrap();
//! let built = constructions::majority_weighting_complete(6, 3).unwrap();
//! assert_eq!(built.unbalancedness, bound.value);
//!
//! let lp = solver::lp_max(&Hypergraph::complete(6, 3).unwrap()).unwrap();
//! assert_eq!(lp.value, bound.value);
//! ```
//!
//! The guide in `book/` walks through each module with runnable examples.

pub mod arith;
pub mod bounds;
pub mod constructions;
pub mod cube;
mod error;
pub mod hypergraph;
pub mod solver;

pub use arith::Rational;
pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, SignPattern, Weighting};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/hypergraphs.md")]
    mod hypergraphs {}
    #[doc = include_str!("../../../book/src/cube.md")]
    mod cube {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
