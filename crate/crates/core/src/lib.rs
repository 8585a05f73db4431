//! Exact Euler calculus on finite simplicial complexes.
//!
//! Links, iterated links and constructible functions are computed
//! combinatorially and used to test the parity and `2^k` congruences that
//! constrain real algebraic sets. A separate module handles monodromy data
//! of weighted homogeneous plane curve singularities.

pub mod cli;
pub mod complex;
pub mod congruence;
pub mod constructible;
pub mod corpus;
pub mod document;
pub mod error;
pub mod links;
pub mod monodromy;
pub mod report;
pub mod selftest;

pub use complex::{Complex, ConstructibleSet, Simplex, Vertex};
pub use congruence::{OrderedFamily, Stratification, Stratum};
pub use constructible::ConstructibleFunction;
pub use error::{Error, Result};
