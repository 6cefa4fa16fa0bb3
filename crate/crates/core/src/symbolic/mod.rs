//! Closed forms: Euler characteristics, admissible-word bases for symmetric
//! products of spheres, wedge decompositions and stable splittings.

pub mod admissible;
pub mod euler;
pub mod splitting;
pub mod tables;

pub use admissible::{
    admissible_sequences, count_monomials, AdmissibleWord, BigradedGenerator, Filtration, Provenance,
};
pub use euler::{euler_barycenter, euler_rsp, euler_sp};
pub use splitting::{b2_product_splitting, b2_surface_splitting, rp2_reduced, ProductPieces, Summand, SplittingReport};
pub use tables::{
    barycenter_s2_series_modp, barycenter_sphere_large_p, barycenter_sphere_series_mod2, rsp_sphere_series_mod2,
    rsp_wedge_series, s3_generators_odd, sp_sphere_series_mod2, sphere_generators_mod2, RspFamily,
};
