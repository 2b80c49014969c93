//! Depth of powers of cover ideals of path graphs.
//!
//! `depth R/J(P_n)^t` is computed by closed formulas, by a dynamic program
//! over realizable edge sets, and by two exhaustive oracles. The
//! [`monomial`] module supplies the ideal arithmetic used to check the
//! reduction to edge sets directly, and [`graph`] the matching invariants.

pub mod depth;
pub mod error;
pub mod graph;
pub mod monomial;
pub mod verify;

pub use depth::{
    BlockLayout, Budget, DepthQuery, DepthReport, FeasibilityWitness, Method,
};
pub use error::{Error, Result};
pub use graph::{EdgeSubset, ForestComponents, PathGraph, SimpleGraph};
pub use monomial::{Monomial, MonomialIdeal};
