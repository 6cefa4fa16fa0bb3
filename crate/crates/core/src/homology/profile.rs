//! Integral homology profiles and mod-p Betti numbers of simplicial sets.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::chains::normalized_chains;
use super::modp::rank_mod_p;
use super::snf::{factor_to_u64, reduce};
use crate::error::{Error, Result};
use crate::series::PoincareSeries;
use crate::sset::SimplicialSet;

/// `H_d = Z^rank ⊕ ⨁ Z/torsion[i]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeHomology {
    pub degree: usize,
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl DegreeHomology {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for DegreeHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Homology in degrees `0..=max`. `truncated` is set when higher degrees
/// were requested but cannot be determined from the model (a skeleton).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomologyProfile {
    pub degrees: Vec<DegreeHomology>,
    pub truncated: bool,
}

impl HomologyProfile {
    /// Builds a profile from `(rank, torsion)` pairs starting at degree 0.
    pub fn from_groups(groups: Vec<(usize, Vec<u64>)>) -> Self {
        HomologyProfile {
            degrees: groups
                .into_iter()
                .enumerate()
                .map(|(degree, (rank, torsion))| DegreeHomology { degree, rank, torsion })
                .collect(),
            truncated: false,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.len().saturating_sub(1)
    }

    /// The group in degree `d`, zero if past the end.
    pub fn get(&self, d: usize) -> DegreeHomology {
        self.degrees.get(d).cloned().unwrap_or(DegreeHomology {
            degree: d,
            ..Default::default()
        })
    }

    /// Reduced homology in degree `d`.
    pub fn reduced(&self, d: usize) -> DegreeHomology {
        let mut h = self.get(d);
        if d == 0 {
            h.rank = h.rank.saturating_sub(1);
        }
        h
    }

    /// True if every reduced group in range is zero.
    pub fn is_acyclic(&self) -> bool {
        (0..self.degrees.len()).all(|d| self.reduced(d).is_zero())
    }

    /// Pads or cuts to degrees `0..=max` (padding with zeros).
    pub fn resized(&self, max: usize) -> Self {
        HomologyProfile {
            degrees: (0..=max).map(|d| self.get(d)).collect(),
            truncated: self.truncated,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .map(|h| if h.degree % 2 == 0 { h.rank as i64 } else { -(h.rank as i64) })
            .sum()
    }

    /// Betti numbers over `F_p` by universal coefficients.
    pub fn betti_mod_p(&self, p: u64) -> PoincareSeries {
        let div = |h: &DegreeHomology| h.torsion.iter().filter(|&&t| t % p == 0).count() as u64;
        let coeffs = (0..self.degrees.len())
            .map(|d| {
                let h = &self.degrees[d];
                let below = if d == 0 { 0 } else { div(&self.degrees[d - 1]) };
                h.rank as u64 + div(h) + below
            })
            .collect();
        PoincareSeries::from_coeffs(p, coeffs)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(&self.degrees).expect("serializable")
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<Self> {
        let degrees: Vec<DegreeHomology> = serde_json::from_value(v)?;
        if degrees.iter().enumerate().any(|(d, h)| h.degree != d) {
            return Err(Error::InvalidParameter("degrees must run 0, 1, 2, ...".into()));
        }
        Ok(HomologyProfile {
            degrees,
            truncated: false,
        })
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for h in &self.degrees {
            writeln!(f, "H_{:<3} {}", h.degree, h)?;
        }
        if self.truncated {
            writeln!(f, "(truncated: higher degrees are not determined by this model)")?;
        }
        Ok(())
    }
}

/// Highest degree whose homology the model determines.
fn determined_top(x: &SimplicialSet) -> usize {
    if x.is_skeleton() {
        x.dim().saturating_sub(1)
    } else {
        x.dim()
    }
}

/// Integral homology in degrees `0..=max_degree` (default: the model's
/// dimension). Degrees above the dimension of a complete model are zero.
pub fn integral_homology(x: &SimplicialSet, max_degree: Option<usize>) -> Result<HomologyProfile> {
    let known = determined_top(x);
    let want = max_degree.unwrap_or(known);
    let top = want.min(known);
    // reduce ∂_{top+1} down to ∂_1, clearing with unit pivots from above
    let chain_top = (top + 1).min(x.dim());
    let chains = normalized_chains(x, Some(chain_top));
    let mut rank = vec![0usize; chain_top + 2];
    let mut factors: Vec<Vec<u64>> = vec![Vec::new(); chain_top + 2];
    let mut cleared: Option<Vec<bool>> = None;
    for d in (1..=chain_top).rev() {
        let red = reduce(&chains.boundary[d], cleared.as_deref());
        rank[d] = red.rank;
        for f in &red.factors {
            let v = factor_to_u64(f).ok_or_else(|| Error::TorsionOverflow(f.to_string()))?;
            if v > 1 {
                factors[d].push(v);
            }
        }
        cleared = Some(red.unit_pivot_rows);
    }
    let mut degrees = Vec::with_capacity(want + 1);
    for d in 0..=(if x.is_skeleton() { top } else { want }) {
        let cells = x.count(d);
        let r_in = if d >= 1 && d <= chain_top { rank[d] } else { 0 };
        let r_out = if d < chain_top { rank[d + 1] } else { 0 };
        let torsion = if d < chain_top { factors[d + 1].clone() } else { Vec::new() };
        degrees.push(DegreeHomology {
            degree: d,
            rank: if d <= x.dim() { cells - r_in - r_out } else { 0 },
            torsion,
        });
    }
    Ok(HomologyProfile {
        degrees,
        truncated: x.is_skeleton() && want > known,
    })
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Dimensions of `H_d(X; F_p)` for `d = 0..=max_degree` (default: the
/// model's dimension), from ranks over `F_p`. For a skeleton the series
/// stops below its top dimension.
pub fn betti_mod_p(x: &SimplicialSet, p: u64, max_degree: Option<usize>) -> Result<PoincareSeries> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let known = determined_top(x);
    let want = max_degree.unwrap_or(known);
    let top = want.min(known);
    let chain_top = (top + 1).min(x.dim());
    let chains = normalized_chains(x, Some(chain_top));
    let mut rank = vec![0usize; chain_top + 2];
    let mut cleared: Option<Vec<bool>> = None;
    for d in (1..=chain_top).rev() {
        let (r, rows) = rank_mod_p(&chains.boundary[d], p, cleared.as_deref());
        rank[d] = r;
        cleared = Some(rows);
    }
    let last = if x.is_skeleton() { top } else { want };
    let coeffs = (0..=last)
        .map(|d| {
            if d > x.dim() {
                return 0;
            }
            let r_in = if d >= 1 && d <= chain_top { rank[d] } else { 0 };
            let r_out = if d < chain_top { rank[d + 1] } else { 0 };
            (x.count(d) - r_in - r_out) as u64
        })
        .collect();
    Ok(PoincareSeries::from_coeffs(p, coeffs))
}

/// Alternating count of nondegenerate cells.
pub fn euler_from_census(x: &SimplicialSet) -> i64 {
    x.census().euler_characteristic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{minimal_sphere, point, rp2, standard_simplex, torus};

    fn groups(p: &HomologyProfile) -> Vec<(usize, Vec<u64>)> {
        p.degrees.iter().map(|h| (h.rank, h.torsion.clone())).collect()
    }

    #[test]
    fn projective_plane() {
        let h = integral_homology(&rp2(), None).unwrap();
        assert_eq!(groups(&h), vec![(1, vec![]), (0, vec![2]), (0, vec![])]);
        assert_eq!(betti_mod_p(&rp2(), 2, None).unwrap().coeffs, vec![1, 1, 1]);
        assert_eq!(betti_mod_p(&rp2(), 3, None).unwrap().coeffs, vec![1, 0, 0]);
    }

    #[test]
    fn spheres_and_torus() {
        for k in 1..5 {
            let h = integral_homology(&minimal_sphere(k).unwrap(), None).unwrap();
            for d in 0..=k {
                let expected = usize::from(d == 0 || d == k);
                assert_eq!(h.get(d).rank, expected);
            }
        }
        let t = integral_homology(&torus(), None).unwrap();
        assert_eq!(groups(&t), vec![(1, vec![]), (2, vec![]), (1, vec![])]);
        assert_eq!(betti_mod_p(&torus(), 2, None).unwrap().coeffs, vec![1, 2, 1]);
    }

    #[test]
    fn contractible_simplex() {
        let h = integral_homology(&standard_simplex(4), None).unwrap();
        assert!(h.is_acyclic());
        assert_eq!(h.get(0).rank, 1);
    }

    #[test]
    fn requested_range_beyond_dimension() {
        let h = integral_homology(&point(), Some(3)).unwrap();
        assert_eq!(h.degrees.len(), 4);
        assert!(!h.truncated);
    }

    #[test]
    fn composite_modulus_is_rejected() {
        assert!(matches!(betti_mod_p(&torus(), 4, None), Err(Error::NotPrime(4))));
    }

    #[test]
    fn census_euler() {
        assert_eq!(euler_from_census(&point()), 1);
        assert_eq!(euler_from_census(&minimal_sphere(2).unwrap()), 2);
        assert_eq!(euler_from_census(&torus()), 0);
    }

    #[test]
    fn json_round_trip() {
        let h = integral_homology(&rp2(), None).unwrap();
        let v = h.to_json_value();
        assert_eq!(
            v.to_string(),
            r#"[{"degree":0,"rank":1,"torsion":[]},{"degree":1,"rank":0,"torsion":[2]},{"degree":2,"rank":0,"torsion":[]}]"#
        );
        assert_eq!(HomologyProfile::from_json_value(v).unwrap(), h);
    }
}
