//! Exact computation of high-dimensional spanning trees, cycletrees, winding
//! and cutting numbers, and the standard harmonic cycle and cocycle of a
//! finite chain complex.

pub mod complex;
pub mod cycletrees;
pub mod decimal;
pub mod error;
pub mod fixtures;
pub mod forests;
pub mod graph;
pub mod harmonic;
pub mod homology;
pub mod io;
pub mod linalg;

pub use complex::{complement, Chain, ChainComplex, Cochain, Selection};
pub use error::{ConditionError, Error, Result};
pub use linalg::{IntMatrix, RatVector};

/// Default limit on the number of subsets an enumeration may visit.
pub const DEFAULT_CAP: u128 = 1_000_000;
