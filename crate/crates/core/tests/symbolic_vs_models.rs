use barytop_core::constructions::*;
use barytop_core::homology::{betti_mod_p, euler_from_census, integral_homology};
use barytop_core::sset::*;
use barytop_core::symbolic::*;
use barytop_core::PoincareSeries;
use num_bigint::BigInt;

const BUDGET: usize = DEFAULT_CELL_BUDGET;

fn s(k: usize) -> SimplicialSet {
    minimal_sphere(k).unwrap()
}

#[test]
fn small_nakaoka_grid() {
    for n in 1..=3 {
        for k in 1..=3u32 {
            let dmax = 10;
            let x = reduced_symmetric_product(n, &s(k as usize), BUDGET).unwrap();
            let brute = betti_mod_p(&x, 2, Some(dmax)).unwrap().truncate(dmax);
            assert_eq!(rsp_sphere_series_mod2(n, k, dmax).unwrap(), brute, "n={n} k={k}");
        }
    }
}

#[test]
fn symmetric_products_against_brute_force() {
    for (n, k) in [(2, 2), (3, 2), (2, 3), (2, 1)] {
        let x = symmetric_product(n, &s(k as usize), BUDGET).unwrap();
        let brute = betti_mod_p(&x, 2, Some(10)).unwrap().truncate(10);
        assert_eq!(sp_sphere_series_mod2(n, k, 10).unwrap(), brute, "n={n} k={k}");
    }
}

#[test]
fn barycenter_tables_against_both_models() {
    for (n, k) in [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3)] {
        let table = barycenter_sphere_series_mod2(n, k, 9).unwrap();
        for kind in [ModelKind::Suspension, ModelKind::Direct] {
            let m = barycenter_model(kind, n, &s(k as usize), BUDGET, "S").unwrap();
            let brute = m.betti_mod_p(2, Some(9)).unwrap().truncate(9);
            assert_eq!(table, brute, "n={n} k={k} {kind}");
        }
    }
}

#[test]
fn odd_prime_tables_against_models() {
    for (n, p) in [(1, 3), (2, 3), (3, 3), (2, 5), (3, 5)] {
        let table = barycenter_s2_series_modp(n, p, 8).unwrap();
        let m = barycenter_direct_model(n, &s(2), BUDGET, "S(2)").unwrap();
        let brute = m.betti_mod_p(p, Some(8)).unwrap().truncate(8);
        assert_eq!(table, brute, "n={n} p={p}");
    }
}

#[test]
fn large_prime_tables_against_models() {
    for (n, k, p) in [(2, 1, 3), (2, 2, 5), (2, 3, 3), (3, 1, 5)] {
        let table = barycenter_sphere_large_p(n, k, p).unwrap();
        let m = barycenter_direct_model(n, &s(k as usize), BUDGET, "S").unwrap();
        let brute = m.betti_mod_p(p, Some(table.dmax())).unwrap().truncate(table.dmax());
        assert_eq!(table, brute, "n={n} k={k} p={p}");
    }
}

#[test]
fn euler_characteristics_of_models() {
    let corpus = [("S1", s(1)), ("S2", s(2)), ("T", torus()), ("RP2", rp2())];
    for n in 1..=2 {
        for (name, x) in &corpus {
            let chi = euler_from_census(x);
            for kind in [ModelKind::Suspension, ModelKind::Direct] {
                let m = barycenter_model(kind, n, x, BUDGET, name).unwrap();
                assert_eq!(BigInt::from(m.euler_characteristic().unwrap()), euler_barycenter(n, chi), "{name} n={n} {kind}");
            }
        }
    }
    for k in 1..=3 {
        for n in 1..=3 {
            let x = reduced_symmetric_product(n, &s(k), BUDGET).unwrap();
            assert_eq!(BigInt::from(euler_from_census(&x)), euler_rsp(n, euler_from_census(&s(k))));
        }
    }
}

#[test]
fn surface_splitting_against_models() {
    for (g, x) in [(0, s(2)), (1, torus())] {
        for p in [2, 3] {
            let report = b2_surface_splitting(g, p, 6);
            let m = barycenter_direct_model(2, &x, BUDGET, "C_g").unwrap();
            let brute = m.betti_mod_p(p, Some(6)).unwrap().truncate(6);
            assert_eq!(report.total, brute, "g={g} p={p}");
        }
    }
}

#[test]
fn wedge_series_against_brute_force() {
    let circles = wedge(&s(1), &s(1));
    let x = reduced_symmetric_product(2, &circles, BUDGET).unwrap();
    let h = integral_homology(&x, None).unwrap();
    assert!((0..=h.max_degree()).all(|d| d == 2 || h.reduced(d).is_zero()));
    assert_eq!(h.reduced(2).rank, 1);
    assert!(h.reduced(2).torsion.is_empty());

    let circle = RspFamily::concentrated("S^1", PoincareSeries::monomial(2, 6, 1, 1), 2);
    let table = rsp_wedge_series(2, &[circle.clone(), circle]).unwrap();
    assert_eq!(betti_mod_p(&x, 2, Some(6)).unwrap().truncate(6), table);

    let y = reduced_symmetric_product(2, &wedge(&s(2), &s(3)), BUDGET).unwrap();
    let parts = [RspFamily::sphere_mod2(2, 2, 8).unwrap(), RspFamily::sphere_mod2(3, 2, 8).unwrap()];
    let table = rsp_wedge_series(2, &parts).unwrap();
    assert_eq!(betti_mod_p(&y, 2, Some(8)).unwrap().truncate(8), table);
}
