//! Finite simplicial sets and the constructions built on them.

pub mod action;
pub mod product;
pub mod quotient;
pub mod simplicial_set;
pub mod spaces;
pub mod subdivision;
pub mod word;

pub use action::{orbit_quotient, permutations, GroupAction};
pub use product::{
    power_with_action, product, product_of, smash, smash_power, symmetric_quotient, TupleSpace,
    DEFAULT_CELL_BUDGET,
};
pub use quotient::{attach, disjoint_union, quotient, suspension, wedge, PartialMap, Relation};
pub use simplicial_set::{CellCensus, Face, SimplicialMap, SimplicialSet, SimplicialSetDocument};
pub use spaces::{minimal_sphere, point, rp2, standard_simplex, surface, torus, two_points};
pub use subdivision::{barycentric_subdivision, permutation_sphere, sd_simplex_with_action};
pub use word::OperatorWord;
