//! Stable splittings of `B_2` of surfaces and of products, as Betti series.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::PoincareSeries;

/// One wedge summand: `multiplicity` copies of a space with reduced Betti
/// numbers `series`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub name: String,
    pub multiplicity: u64,
    pub series: PoincareSeries,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingReport {
    pub summands: Vec<Summand>,
    /// Betti numbers of the whole wedge (1 in degree 0).
    pub total: PoincareSeries,
}

impl SplittingReport {
    fn from_summands(p: u64, dmax: usize, summands: Vec<Summand>) -> Self {
        let mut total = PoincareSeries::unit(p, dmax);
        for s in &summands {
            total = total.add(&s.series.scale(s.multiplicity));
        }
        SplittingReport { summands, total }
    }
}

/// Reduced Betti numbers of `RP^2` over `F_p` (`p = 0` for rational).
pub fn rp2_reduced(p: u64, dmax: usize) -> PoincareSeries {
    let mut s = PoincareSeries::zero(p, dmax);
    if p == 2 {
        for d in 1..=2.min(dmax) {
            s.coeffs[d] = 1;
        }
    }
    s
}

fn sphere(p: u64, dmax: usize, k: usize) -> PoincareSeries {
    PoincareSeries::monomial(p, dmax, k, 1)
}

/// `B_2(C_g) ≃_s (S^3)^{∨(2g²+g)} ∨ (S^4)^{∨2g} ∨ Σ^3 RP^2`, with the
/// Betti numbers over `F_p` up to `dmax`.
pub fn b2_surface_splitting(g: u64, p: u64, dmax: usize) -> SplittingReport {
    let summands = vec![
        Summand {
            name: "S^3".into(),
            multiplicity: 2 * g * g + g,
            series: sphere(p, dmax, 3),
        },
        Summand {
            name: "S^4".into(),
            multiplicity: 2 * g,
            series: sphere(p, dmax, 4),
        },
        Summand {
            name: "Σ^3 RP^2".into(),
            multiplicity: 1,
            series: rp2_reduced(p, dmax).shift_up(3),
        },
    ];
    SplittingReport::from_summands(p, dmax, summands)
}

/// Reduced Betti series of the constituents of `B_2(X × Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductPieces {
    /// `H̃(X)`
    pub x: PoincareSeries,
    /// `H̃(Y)`
    pub y: PoincareSeries,
    /// `H̃(B_2 X)`
    pub b2x: PoincareSeries,
    /// `H̃(B_2 Y)`
    pub b2y: PoincareSeries,
    /// `H̃(B_2(X ∧ Y))`
    pub b2_smash: PoincareSeries,
}

/// `B_2(X × Y) ≃_s B_2 X ∨ B_2 Y ∨ B_2(X ∧ Y) ∨ X*Y ∨ X*X∧Y ∨ Y*Y∧X`, the
/// join terms derived by the Künneth formula over `F_p`.
pub fn b2_product_splitting(pieces: &ProductPieces) -> Result<SplittingReport> {
    let all = [&pieces.x, &pieces.y, &pieces.b2x, &pieces.b2y, &pieces.b2_smash];
    let p = pieces.x.p;
    if all.iter().any(|s| s.p != p) {
        return Err(Error::InvalidParameter("characteristics differ".into()));
    }
    let dmax = all.iter().map(|s| s.dmax()).min().unwrap();
    let x = pieces.x.reduced().truncate(dmax);
    let y = pieces.y.reduced().truncate(dmax);
    let join = |a: &PoincareSeries| a.shift_up(1);
    let named = |name: &str, series: PoincareSeries| Summand {
        name: name.into(),
        multiplicity: 1,
        series: series.reduced().truncate(dmax),
    };
    let summands = vec![
        named("B_2(X)", pieces.b2x.clone()),
        named("B_2(Y)", pieces.b2y.clone()),
        named("B_2(X∧Y)", pieces.b2_smash.clone()),
        named("X*Y", join(&x.mul(&y))),
        named("X*X∧Y", join(&x.mul(&x).mul(&y))),
        named("Y*Y∧X", join(&y.mul(&y).mul(&x))),
    ];
    Ok(SplittingReport::from_summands(p, dmax, summands))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::{barycenter_sphere_series_mod2, rsp_wedge_series, RspFamily};

    #[test]
    fn torus_mod2_and_mod3() {
        let r = b2_surface_splitting(1, 2, 6);
        let names: Vec<(&str, u64)> = r.summands.iter().map(|s| (s.name.as_str(), s.multiplicity)).collect();
        assert_eq!(names, vec![("S^3", 3), ("S^4", 2), ("Σ^3 RP^2", 1)]);
        assert_eq!(r.total.coeffs, vec![1, 0, 0, 3, 3, 1, 0]);
        assert_eq!(b2_surface_splitting(1, 3, 6).total.coeffs, vec![1, 0, 0, 3, 2, 0, 0]);
    }

    #[test]
    fn sphere_case_is_the_projective_plane_term() {
        let r = b2_surface_splitting(0, 2, 6);
        assert_eq!(r.summands[0].multiplicity, 0);
        assert_eq!(r.summands[1].multiplicity, 0);
        assert_eq!(r.total, barycenter_sphere_series_mod2(2, 2, 6).unwrap());
    }

    #[test]
    fn genus_two() {
        let r = b2_surface_splitting(2, 2, 6);
        assert_eq!(r.summands[0].multiplicity, 10);
        assert_eq!(r.summands[1].multiplicity, 4);
        assert_eq!(r.total.coeffs, vec![1, 0, 0, 10, 5, 1, 0]);
    }

    #[test]
    fn surface_splitting_matches_wedge_calculus() {
        // ΣC_g ≃ S^3 ∨ (S^2)^{∨2g}
        for g in 0..4 {
            let dmax = 8;
            let mut parts = vec![RspFamily::sphere_mod2(3, 2, dmax).unwrap()];
            parts.extend((0..2 * g).map(|_| RspFamily::sphere_mod2(2, 2, dmax).unwrap()));
            let wedge = rsp_wedge_series(2, &parts).unwrap();
            let split = b2_surface_splitting(g, 2, dmax - 1);
            let mut shifted = wedge.reduced().shift_down(1);
            shifted.coeffs[0] = 1;
            assert_eq!(shifted, split.total, "g = {g}");
        }
    }

    #[test]
    fn torus_as_a_product() {
        let dmax = 6;
        let circle = PoincareSeries::monomial(2, dmax, 1, 1);
        let pieces = ProductPieces {
            x: circle.clone(),
            y: circle,
            b2x: barycenter_sphere_series_mod2(2, 1, dmax).unwrap(),
            b2y: barycenter_sphere_series_mod2(2, 1, dmax).unwrap(),
            b2_smash: barycenter_sphere_series_mod2(2, 2, dmax).unwrap(),
        };
        let r = b2_product_splitting(&pieces).unwrap();
        assert_eq!(r.summands.len(), 6);
        assert_eq!(r.total, b2_surface_splitting(1, 2, dmax).total);
    }

    #[test]
    fn json_shape() {
        let r = b2_surface_splitting(0, 3, 2);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["summands"][2]["name"], "Σ^3 RP^2");
        assert_eq!(v["summands"][2]["multiplicity"], 1);
        assert_eq!(v["total"]["coeffs"], serde_json::json!([1, 0, 0]));
    }
}
