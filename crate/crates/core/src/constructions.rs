//! Symmetric products, reduced symmetric products, barycenter spaces and the
//! two-point symmetric join, as finite simplicial sets.
//!
//! Two independent models of `B_n(X)` are provided. The suspension model is
//! `SP̄^n(ΣX)`, whose reduced homology is that of `B_n(X)` shifted up by one.
//! The direct model is `(Δ^{n-1}/∂Δ^{n-1}) ∧_{S_n} X^(n)`, with `S_n` acting
//! on the subdivided simplex by permuting vertices and on the smash power by
//! permuting factors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{betti_mod_p, integral_homology, DegreeHomology, HomologyProfile};
use crate::series::PoincareSeries;
use crate::sset::{
    attach, disjoint_union, orbit_quotient, permutation_sphere, product_of, quotient, smash_power,
    standard_simplex, suspension, symmetric_quotient, Face, OperatorWord, PartialMap, Relation,
    SimplicialSet, TupleSpace,
};

fn need_weight(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    Ok(())
}

/// `SP^n X = X^n / S_n`, with the tuple behind each cell.
pub fn symmetric_product_space(n: usize, x: &SimplicialSet, budget: usize) -> Result<TupleSpace> {
    need_weight(n)?;
    symmetric_quotient(x, n, false, None, None, budget, &format!("SP^{n}"))
}

/// `SP^n X = X^n / S_n`.
pub fn symmetric_product(n: usize, x: &SimplicialSet, budget: usize) -> Result<SimplicialSet> {
    Ok(symmetric_product_space(n, x, budget)?.into_space())
}

/// The `max_dim`-skeleton of `SP^n X`.
pub fn symmetric_product_skeleton(
    n: usize,
    x: &SimplicialSet,
    max_dim: Option<usize>,
    budget: usize,
) -> Result<SimplicialSet> {
    need_weight(n)?;
    Ok(symmetric_quotient(x, n, false, None, max_dim, budget, &format!("sp({n})"))?.into_space())
}

/// `SP̄^n X = X^(n) / S_n`, built one orbit at a time.
pub fn reduced_symmetric_product(n: usize, x: &SimplicialSet, budget: usize) -> Result<SimplicialSet> {
    reduced_symmetric_product_skeleton(n, x, None, budget)
}

/// The `max_dim`-skeleton of `SP̄^n X`.
pub fn reduced_symmetric_product_skeleton(
    n: usize,
    x: &SimplicialSet,
    max_dim: Option<usize>,
    budget: usize,
) -> Result<SimplicialSet> {
    need_weight(n)?;
    Ok(symmetric_quotient(x, n, true, None, max_dim, budget, &format!("rsp({n})"))?.into_space())
}

/// `SP̄^n X` as the orbit space of the materialized smash power.
pub fn reduced_symmetric_product_generic(
    n: usize,
    x: &SimplicialSet,
    budget: usize,
) -> Result<SimplicialSet> {
    let power = smash_power(x, n, budget)?;
    let action = power.action().expect("smash power carries its action");
    Ok(orbit_quotient(power.space(), action)?.0)
}

/// `SP^n X / SP^{n-1} X`, where `SP^{n-1}` sits inside `SP^n` by adding the
/// basepoint as an extra entry.
pub fn reduced_symmetric_product_filtration(
    n: usize,
    x: &SimplicialSet,
    budget: usize,
) -> Result<SimplicialSet> {
    need_weight(n)?;
    let big = symmetric_product_space(n, x, budget)?;
    if n == 1 {
        return Ok(big.into_space());
    }
    let small = symmetric_product_space(n - 1, x, budget)?;
    let base = x.basepoint();
    let mut group = Vec::new();
    for d in 0..small.space().counts().len() {
        for c in 0..small.space().count(d) as u32 {
            let mut t: Vec<(OperatorWord, u32)> =
                (0..n - 1).map(|i| small.component(d, c, i)).collect();
            t.push((OperatorWord::full(d), base));
            t.sort_unstable_by_key(|(w, c)| (w.mask(), *c));
            let id = big
                .lookup(d, &t)
                .ok_or_else(|| Error::Structure("SP^{n-1} cell missing from SP^n".into()))?;
            group.push((d, id));
        }
    }
    let (mut q, map) = quotient(big.space(), &Relation::new().collapse(group))?;
    // the collapsed filtration is the basepoint
    let base_cell = big
        .lookup(0, &vec![(OperatorWord::IDENTITY, base); n])
        .expect("base tuple");
    q.set_basepoint(map.images[0][base_cell as usize].target)?;
    Ok(q)
}

/// Which construction realizes a barycenter space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Suspension,
    Direct,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelKind::Suspension => write!(f, "suspension"),
            ModelKind::Direct => write!(f, "direct"),
        }
    }
}

/// A simplicial model of `B_n(X)`: the reduced homology of `B_n(X)` in
/// degree `d` is that of `space` in degree `d + degree_shift`.
#[derive(Clone, Debug)]
pub struct BarycenterModel {
    pub kind: ModelKind,
    pub space: SimplicialSet,
    pub degree_shift: usize,
    pub n: usize,
    pub source: String,
}

impl BarycenterModel {
    /// Highest degree of `B_n(X)` the model covers.
    pub fn top_degree(&self) -> usize {
        self.space.dim().saturating_sub(self.degree_shift)
    }

    /// Integral homology of `B_n(X)` in degrees `0..=max_degree` (default:
    /// everything the model covers).
    pub fn homology(&self, max_degree: Option<usize>) -> Result<HomologyProfile> {
        let want = max_degree.unwrap_or(self.top_degree());
        let raw = integral_homology(&self.space, Some(want + self.degree_shift))?;
        let s = self.degree_shift;
        let mut degrees = Vec::with_capacity(want + 1);
        let known = raw.max_degree().checked_sub(s);
        for d in 0..=known.map_or(0, |k| k.min(want)) {
            let mut h = raw.reduced(d + s);
            h.degree = d;
            if d == 0 {
                h.rank += 1;
            }
            degrees.push(h);
        }
        if known.is_none() {
            degrees = vec![DegreeHomology { degree: 0, rank: 1, torsion: Vec::new() }];
        }
        Ok(HomologyProfile {
            degrees,
            truncated: raw.truncated,
        })
    }

    /// Betti numbers of `B_n(X)` over `F_p`.
    pub fn betti_mod_p(&self, p: u64, max_degree: Option<usize>) -> Result<PoincareSeries> {
        let want = max_degree.unwrap_or(self.top_degree());
        let raw = betti_mod_p(&self.space, p, Some(want + self.degree_shift))?.reduced();
        let s = self.degree_shift;
        let mut coeffs: Vec<u64> = (s..=raw.dmax().max(s)).map(|d| raw.get(d)).collect();
        coeffs[0] += 1;
        Ok(PoincareSeries::from_coeffs(p, coeffs))
    }

    /// Whether every cell of the model was built.
    pub fn is_complete(&self) -> bool {
        !self.space.is_skeleton()
    }

    /// `χ(B_n(X))` from the model's cell census.
    pub fn euler_characteristic(&self) -> Result<i64> {
        if !self.is_complete() {
            return Err(Error::InvalidParameter("the census of a skeleton does not determine χ".into()));
        }
        let chi = self.space.census().euler_characteristic();
        Ok(if self.degree_shift % 2 == 1 { 2 - chi } else { chi })
    }
}

/// `B_n(X)` through `SP̄^n(ΣX)`.
pub fn barycenter_suspension_model(
    n: usize,
    x: &SimplicialSet,
    budget: usize,
    source: &str,
) -> Result<BarycenterModel> {
    barycenter_model_skeleton(ModelKind::Suspension, n, x, None, budget, source)
}

/// `B_n(X)` as `(Δ^{n-1}/∂Δ^{n-1}) ∧_{S_n} X^(n)`.
pub fn barycenter_direct_model(
    n: usize,
    x: &SimplicialSet,
    budget: usize,
    source: &str,
) -> Result<BarycenterModel> {
    barycenter_model_skeleton(ModelKind::Direct, n, x, None, budget, source)
}

pub fn barycenter_model(
    kind: ModelKind,
    n: usize,
    x: &SimplicialSet,
    budget: usize,
    source: &str,
) -> Result<BarycenterModel> {
    barycenter_model_skeleton(kind, n, x, None, budget, source)
}

/// A model with only the cells needed for the homology of `B_n(X)` in
/// degrees `0..=max_degree` (all cells when `None`).
pub fn barycenter_model_skeleton(
    kind: ModelKind,
    n: usize,
    x: &SimplicialSet,
    max_degree: Option<usize>,
    budget: usize,
    source: &str,
) -> Result<BarycenterModel> {
    need_weight(n)?;
    let label = format!("bary({n}, {source}) [{kind} model]");
    let degree_shift = match kind {
        ModelKind::Suspension => 1,
        ModelKind::Direct => 0,
    };
    let max_dim = max_degree.map(|d| d + degree_shift + 1);
    let space = match kind {
        ModelKind::Suspension => symmetric_quotient(&suspension(x), n, true, None, max_dim, budget, &label)?,
        ModelKind::Direct => {
            let (sphere, action) = permutation_sphere(n)?;
            symmetric_quotient(x, n, true, Some((&sphere, &action)), max_dim, budget, &label)?
        }
    }
    .into_space();
    Ok(BarycenterModel {
        kind,
        space,
        degree_shift,
        n,
        source: source.to_string(),
    })
}

/// The double mapping cylinder of `X ← X×X → SP²X` (second projection and
/// the orbit map), a model of the two-fold symmetric join.
pub fn symjoin2_cylinder_model(x: &SimplicialSet, budget: usize) -> Result<SimplicialSet> {
    let sp2 = symmetric_product_space(2, x, budget)?;
    let z = disjoint_union(x, sp2.space());
    let interval = standard_simplex(1);
    let cyl = product_of(&[x, x, &interval]);
    let y = cyl.space();
    if y.total_cells() + z.total_cells() > budget {
        return Err(Error::BudgetExceeded {
            construction: "symjoin2 cylinder".into(),
            budget,
            census: y.counts().to_vec(),
        });
    }
    let mut f = PartialMap::empty(y);
    for d in 0..y.counts().len() {
        for c in 0..y.count(d) as u32 {
            let (w, end) = cyl.component(d, c, 2);
            if w.len() != d {
                continue;
            }
            let a = cyl.component(d, c, 0);
            let b = cyl.component(d, c, 1);
            let image = if end == 0 {
                Face { word: b.0, target: b.1 }
            } else {
                let mut t = [a, b];
                t.sort_unstable_by_key(|(w, c)| (w.mask(), *c));
                let id = sp2
                    .lookup(d, &t)
                    .ok_or_else(|| Error::Structure("pair missing from SP^2".into()))?;
                Face::nondegenerate(x.count(d) as u32 + id)
            };
            f.set(d, c, image);
        }
    }
    Ok(attach(&z, y, &f)?.0)
}

/// Homology of `Q_{n,k}` read off from `B_n(S^k) ≃ Σ^{k+1} Q_{n,k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QProfile {
    pub n: usize,
    pub k: usize,
    pub profile: HomologyProfile,
}

/// `H̃_i(Q_{n,k}) = H̃_{i+k+1}(B_n(S^k))` for `i = 0..=max_degree` (default:
/// the dimension bound `(k+1)(n-1)-1`).
pub fn infer_q_homology(n: usize, k: usize, max_degree: Option<usize>, budget: usize) -> Result<QProfile> {
    if n < 2 || k < 1 {
        return Err(Error::InvalidParameter("Q_{n,k} needs n >= 2 and k >= 1".into()));
    }
    let bound = (k + 1) * (n - 1) - 1;
    let want = max_degree.unwrap_or(bound);
    let sphere = crate::sset::minimal_sphere(k)?;
    let model = barycenter_suspension_model(n, &sphere, budget, &format!("S({k})"))?;
    let b = model.homology(Some(want + k + 1))?;
    for d in 1..=k.min(b.max_degree()) {
        if !b.reduced(d).is_zero() {
            return Err(Error::Structure(format!(
                "B_{n}(S^{k}) has reduced homology in degree {d}, so it is not a {}-fold suspension",
                k + 1
            )));
        }
    }
    let known = b.max_degree().saturating_sub(k + 1);
    let degrees = (0..=want.min(known))
        .map(|i| {
            let mut h = b.reduced(i + k + 1);
            h.degree = i;
            if i == 0 {
                h.rank += 1;
            }
            h
        })
        .collect();
    Ok(QProfile {
        n,
        k,
        profile: HomologyProfile {
            degrees,
            truncated: b.truncated || want > known,
        },
    })
}
