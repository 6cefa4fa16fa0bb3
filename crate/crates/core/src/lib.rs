//! Simplicial models of barycenter spaces, symmetric products and symmetric
//! joins, exact homology, and the closed-form series they are checked against.

pub mod constructions;
pub mod error;
pub mod homology;
pub mod series;
pub mod sset;
pub mod symbolic;

pub use error::{Error, Result};
pub use sset::{CellCensus, Face, GroupAction, OperatorWord, SimplicialMap, SimplicialSet};
pub use homology::{betti_mod_p, integral_homology, DegreeHomology, HomologyProfile};
pub use series::PoincareSeries;
