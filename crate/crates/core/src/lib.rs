//! Centrally symmetric configurations of integer matrices and graphs.
//!
//! Given `A` in `Z^{d x n}`, the configuration `A±` stacks `[0 | A | -A]` on
//! a row of ones. This crate builds `A±` and the incidence configurations of
//! graphs, and answers exact questions about them: lattice indices and
//! unimodularity, reduced Gröbner bases of toric ideals, normality,
//! Hilbert functions and Gorenstein-Fano polytopes.

pub mod configs;
pub mod error;
pub mod graphs;
pub mod intlin;
pub mod polytope;
pub mod semigroup;
pub mod toric;

pub use error::{Error, Result};
