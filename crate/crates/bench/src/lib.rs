//! Fixtures shared by the benchmarks.

use barytop_core::constructions::{barycenter_model_skeleton, BarycenterModel, ModelKind};
use barytop_core::sset::{minimal_sphere, surface, torus, DEFAULT_CELL_BUDGET};
use barytop_core::SimplicialSet;

/// Named base spaces the benchmarks build on.
pub fn spaces() -> Vec<(&'static str, SimplicialSet)> {
    vec![
        ("S(1)", minimal_sphere(1).expect("sphere")),
        ("S(2)", minimal_sphere(2).expect("sphere")),
        ("torus", torus()),
        ("surface(2)", surface(2)),
    ]
}

pub fn space(name: &str) -> SimplicialSet {
    spaces()
        .into_iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no fixture named {name}"))
        .1
}

/// A complete model of `B_n` of the named space.
pub fn model(kind: ModelKind, n: usize, name: &str) -> BarycenterModel {
    barycenter_model_skeleton(kind, n, &space(name), None, DEFAULT_CELL_BUDGET, name).expect("within budget")
}
