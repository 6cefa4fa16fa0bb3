//! Exact homology of finite simplicial sets.

pub mod chains;
pub mod modp;
pub mod profile;
pub mod snf;

pub use chains::{normalized_chains, ChainComplex, SparseMatrix};
pub use modp::rank_mod_p;
pub use profile::{betti_mod_p, euler_from_census, integral_homology, is_prime, DegreeHomology, HomologyProfile};
pub use snf::{smith_normal_form, smith_normal_form_dense, Certificates, SnfResult};
