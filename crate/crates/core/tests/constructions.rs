use barytop_core::constructions::*;
use barytop_core::homology::{betti_mod_p, integral_homology, HomologyProfile};
use barytop_core::sset::*;

const BUDGET: usize = DEFAULT_CELL_BUDGET;

fn groups(h: &HomologyProfile) -> Vec<(usize, Vec<u64>)> {
    h.degrees.iter().map(|g| (g.rank, g.torsion.clone())).collect()
}

/// `(rank, torsion)` list for a wedge of spheres, given as degree multiplicities.
fn spheres(top: usize, cells: &[(usize, usize)]) -> Vec<(usize, Vec<u64>)> {
    let mut out = vec![(0, vec![]); top + 1];
    out[0].0 = 1;
    for &(d, m) in cells {
        out[d].0 += m;
    }
    out
}

fn s(k: usize) -> SimplicialSet {
    minimal_sphere(k).unwrap()
}

#[test]
fn symmetric_square_of_two_sphere_is_cp2() {
    let sp = symmetric_product(2, &s(2), BUDGET).unwrap();
    sp.validate().unwrap();
    let h = integral_homology(&sp, None).unwrap();
    assert_eq!(groups(&h), spheres(4, &[(2, 1), (4, 1)]));
}

#[test]
fn symmetric_square_of_circle_is_a_circle() {
    let sp = symmetric_product(2, &s(1), BUDGET).unwrap();
    let h = integral_homology(&sp, None).unwrap();
    assert_eq!(groups(&h), spheres(2, &[(1, 1)]));
}

#[test]
fn symmetric_product_of_weight_one_is_identity() {
    let t = torus();
    assert_eq!(symmetric_product(1, &t, BUDGET).unwrap(), t);
}

#[test]
fn reduced_symmetric_square_routes_agree() {
    for x in [s(1), s(2), s(3), torus(), rp2()] {
        let fused = reduced_symmetric_product(2, &x, BUDGET).unwrap();
        let generic = reduced_symmetric_product_generic(2, &x, BUDGET).unwrap();
        let filtration = reduced_symmetric_product_filtration(2, &x, BUDGET).unwrap();
        fused.validate().unwrap();
        let h = integral_homology(&fused, None).unwrap();
        assert_eq!(h, integral_homology(&generic, None).unwrap());
        assert_eq!(h, integral_homology(&filtration, None).unwrap());
        assert_eq!(fused.counts(), generic.counts());
    }
}

#[test]
fn reduced_symmetric_cube_routes_agree() {
    for x in [s(1), s(2), torus()] {
        let fused = reduced_symmetric_product(3, &x, BUDGET).unwrap();
        let generic = reduced_symmetric_product_generic(3, &x, BUDGET).unwrap();
        let filtration = reduced_symmetric_product_filtration(3, &x, BUDGET).unwrap();
        let h = integral_homology(&fused, None).unwrap();
        assert_eq!(h, integral_homology(&generic, None).unwrap());
        assert_eq!(h, integral_homology(&filtration, None).unwrap());
    }
}

#[test]
fn reduced_symmetric_squares_of_spheres() {
    // SP̄²S² = S⁴
    let h = integral_homology(&reduced_symmetric_product(2, &s(2), BUDGET).unwrap(), None).unwrap();
    assert_eq!(groups(&h), spheres(4, &[(4, 1)]));
    // SP̄²S³ = Σ³RP²
    let x = reduced_symmetric_product(2, &s(3), BUDGET).unwrap();
    let h = integral_homology(&x, None).unwrap();
    assert_eq!(h.reduced(5).torsion, vec![2]);
    assert!(h.reduced(6).is_zero());
    let b = betti_mod_p(&x, 2, None).unwrap();
    assert_eq!(b.coeffs, vec![1, 0, 0, 0, 0, 1, 1]);
    // SP̄¹X = X
    assert_eq!(reduced_symmetric_product(1, &torus(), BUDGET).unwrap().counts(), torus().counts());
}

#[test]
fn barycenter_of_circle_models() {
    for kind in [ModelKind::Suspension, ModelKind::Direct] {
        let m = barycenter_model(kind, 2, &s(1), BUDGET, "S(1)").unwrap();
        let h = m.homology(None).unwrap();
        assert_eq!(groups(&h), spheres(3, &[(3, 1)]), "{kind}");
    }
}

#[test]
fn barycenter_models_agree_on_small_spaces() {
    for (n, x) in [(2, s(2)), (2, torus()), (2, rp2()), (3, s(1)), (1, torus())] {
        let a = barycenter_suspension_model(n, &x, BUDGET, "x").unwrap();
        let b = barycenter_direct_model(n, &x, BUDGET, "x").unwrap();
        let top = a.top_degree().max(b.top_degree());
        assert_eq!(a.homology(Some(top)).unwrap(), b.homology(Some(top)).unwrap(), "n = {n}");
        assert_eq!(a.euler_characteristic().unwrap(), b.euler_characteristic().unwrap());
    }
}

#[test]
fn direct_model_of_weight_one_is_the_space() {
    let m = barycenter_direct_model(1, &torus(), BUDGET, "torus").unwrap();
    assert_eq!(m.homology(None).unwrap(), integral_homology(&torus(), None).unwrap());
}

#[test]
fn cylinder_model() {
    let h = integral_homology(&symjoin2_cylinder_model(&s(1), BUDGET).unwrap(), None).unwrap();
    assert_eq!(groups(&h).len(), 4);
    assert_eq!(groups(&h), spheres(3, &[(3, 1)]));
    let h = integral_homology(&symjoin2_cylinder_model(&s(2), BUDGET).unwrap(), None).unwrap();
    assert_eq!(h.reduced(4).torsion, vec![2]);
    assert!((0..=5).filter(|&d| d != 4).all(|d| h.reduced(d).is_zero()));
    let h = integral_homology(&symjoin2_cylinder_model(&point(), BUDGET).unwrap(), None).unwrap();
    assert!(h.is_acyclic());
}

#[test]
fn q_inference_for_small_spheres() {
    let q = infer_q_homology(2, 1, None, BUDGET).unwrap();
    assert_eq!(groups(&q.profile), vec![(1, vec![]), (1, vec![])]);
    let q = infer_q_homology(2, 2, None, BUDGET).unwrap();
    assert_eq!(groups(&q.profile), vec![(1, vec![]), (0, vec![2]), (0, vec![])]);
}

#[test]
fn budget_is_enforced() {
    let err = reduced_symmetric_product(3, &torus(), 10).unwrap_err();
    assert!(matches!(err, barytop_core::Error::BudgetExceeded { .. }));
}

#[test]
fn skeleton_models_agree_in_low_degrees() {
    for kind in [ModelKind::Suspension, ModelKind::Direct] {
        let full = barycenter_model(kind, 2, &torus(), BUDGET, "torus").unwrap();
        let low = barycenter_model_skeleton(kind, 2, &torus(), Some(3), BUDGET, "torus").unwrap();
        assert!(full.is_complete());
        assert!(!low.is_complete());
        assert!(low.space.total_cells() < full.space.total_cells());
        assert!(low.euler_characteristic().is_err());
        let h = low.homology(Some(3)).unwrap();
        assert_eq!(h, full.homology(Some(3)).unwrap(), "{kind}");
    }
}
