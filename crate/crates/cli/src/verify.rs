//! Cross-validation suites: closed forms against brute-force models, and
//! structural invariants of every construction.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use barytop_core::constructions::{
    barycenter_model_skeleton, infer_q_homology, reduced_symmetric_product, reduced_symmetric_product_skeleton,
    symjoin2_cylinder_model, symmetric_product, BarycenterModel, ModelKind,
};
use barytop_core::homology::snf::certificate_product;
use barytop_core::homology::{euler_from_census, normalized_chains, smith_normal_form, smith_normal_form_dense};
use barytop_core::sset::{
    barycentric_subdivision, minimal_sphere, orbit_quotient, point, power_with_action, product, rp2, smash,
    surface, suspension, torus, wedge,
};
use barytop_core::symbolic::{
    admissible_sequences, b2_product_splitting, b2_surface_splitting, barycenter_s2_series_modp,
    barycenter_sphere_large_p, barycenter_sphere_series_mod2, euler_barycenter, euler_rsp, euler_sp,
    rsp_sphere_series_mod2, AdmissibleWord, ProductPieces,
};
use barytop_core::{
    betti_mod_p, integral_homology, DegreeHomology, GroupAction, HomologyProfile, PoincareSeries, SimplicialSet,
};
use num_bigint::BigInt;
use serde_json::json;

use crate::commands::Report;
use crate::error::CliError;

pub const SUITES: &[&str] = &[
    "sset",
    "homology",
    "models",
    "sphere-mod2",
    "nakaoka",
    "euler",
    "connectivity",
    "topclass",
    "splitting",
    "wedge",
    "simply-connected",
    "q-space",
    "large-prime",
    "odd-prime",
    "admissible",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Over the cell budget where the check is only run when it fits.
    Skip,
    /// Over the cell budget where the check is required.
    Budget,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
            Status::Budget => "BUDGET",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub computed: String,
}

pub struct Verifier {
    pub budget: usize,
    suite: &'static str,
    pub checks: Vec<Check>,
}

impl Verifier {
    pub fn new(budget: usize) -> Self {
        Verifier {
            budget,
            suite: "",
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: String, status: Status, expected: String, computed: String) {
        self.checks.push(Check {
            suite: self.suite,
            name,
            status,
            expected,
            computed,
        });
    }

    /// Records whether `computed == expected`.
    pub fn equal<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, expected: T, computed: T) {
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        self.push(name.into(), status, format!("{expected:?}"), format!("{computed:?}"));
    }

    pub fn holds(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(name.into(), status, "true".into(), detail.into());
    }

    /// Runs `f`; a budget overrun is a skip when `optional`, any other error
    /// a failure.
    fn guarded(&mut self, name: &str, optional: bool, f: impl FnOnce(&mut Self) -> Result<(), CliError>) {
        if let Err(e) = f(self) {
            let status = match (e.is_budget(), optional) {
                (true, true) => Status::Skip,
                (true, false) => Status::Budget,
                _ => Status::Fail,
            };
            self.push(name.to_string(), status, String::new(), e.to_string());
        }
    }

    pub fn run(&mut self, name: &str, f: impl FnOnce(&mut Self) -> Result<(), CliError>) {
        self.guarded(name, false, f)
    }

    pub fn run_if_fits(&mut self, name: &str, f: impl FnOnce(&mut Self) -> Result<(), CliError>) {
        self.guarded(name, true, f)
    }
}

/// Nonzero reduced groups, e.g. `H3=Z H4=Z/2`; `0` if acyclic.
pub fn summary(h: &HomologyProfile) -> String {
    let parts: Vec<String> = (0..h.degrees.len())
        .filter_map(|d| {
            let g = h.reduced(d);
            (!g.is_zero()).then(|| format!("H{d}={g}"))
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

/// Profile with the given reduced groups through degree `top`.
fn reduced_profile(top: usize, groups: &[(usize, usize, &[u64])]) -> HomologyProfile {
    let mut degrees: Vec<DegreeHomology> = (0..=top)
        .map(|degree| DegreeHomology {
            degree,
            rank: usize::from(degree == 0),
            torsion: Vec::new(),
        })
        .collect();
    for &(d, rank, torsion) in groups {
        degrees[d].rank += rank;
        degrees[d].torsion = torsion.to_vec();
    }
    HomologyProfile {
        degrees,
        truncated: false,
    }
}

fn corpus() -> Vec<(&'static str, SimplicialSet)> {
    vec![
        ("pt", point()),
        ("S(1)", minimal_sphere(1).unwrap()),
        ("S(2)", minimal_sphere(2).unwrap()),
        ("S(3)", minimal_sphere(3).unwrap()),
        ("RP2", rp2()),
        ("torus", torus()),
        ("surface(2)", surface(2)),
    ]
}

/// The corpus for barycenter statements, with dimensions.
fn bary_corpus() -> Vec<(&'static str, SimplicialSet)> {
    vec![
        ("S(1)", minimal_sphere(1).unwrap()),
        ("S(2)", minimal_sphere(2).unwrap()),
        ("torus", torus()),
        ("RP2", rp2()),
        ("surface(2)", surface(2)),
    ]
}

fn constructed(budget: usize) -> Result<Vec<(String, SimplicialSet)>, CliError> {
    let s1 = minimal_sphere(1)?;
    let s2 = minimal_sphere(2)?;
    let t = torus();
    Ok(vec![
        ("wedge(S(1), S(2))".into(), wedge(&s1, &s2)),
        ("prod(torus, S(2))".into(), product(&t, &s2).into_space()),
        ("smash(RP2, S(2))".into(), smash(&rp2(), &s2)),
        ("susp(torus)".into(), suspension(&t)),
        ("sd(RP2)".into(), barycentric_subdivision(&rp2())),
        ("sp(2, S(2))".into(), symmetric_product(2, &s2, budget)?),
        ("rsp(3, S(2))".into(), reduced_symmetric_product(3, &s2, budget)?),
        (
            "bary(2, torus) suspension".into(),
            barycenter_model_skeleton(ModelKind::Suspension, 2, &t, None, budget, "torus")?.space,
        ),
        (
            "bary(2, RP2) direct".into(),
            barycenter_model_skeleton(ModelKind::Direct, 2, &rp2(), None, budget, "RP2")?.space,
        ),
        ("symjoin2(S(1))".into(), symjoin2_cylinder_model(&s1, budget)?),
    ])
}

fn everything(v: &Verifier) -> Result<Vec<(String, SimplicialSet)>, CliError> {
    let mut all: Vec<(String, SimplicialSet)> = corpus().into_iter().map(|(n, x)| (n.to_string(), x)).collect();
    all.extend(constructed(v.budget)?);
    Ok(all)
}

fn model(v: &Verifier, kind: ModelKind, n: usize, x: &SimplicialSet, name: &str, max: Option<usize>) -> Result<BarycenterModel, CliError> {
    Ok(barycenter_model_skeleton(kind, n, x, max, v.budget, name)?)
}

fn suite_sset(v: &mut Verifier) {
    v.run("construct corpus", |v| {
        for (name, x) in everything(v)? {
            v.holds(format!("simplicial identities: {name}"), x.validate().is_ok(), format!("{:?}", x.validate().err()));
            let h = integral_homology(&x, None)?;
            v.equal(format!("χ census = χ homology: {name}"), euler_from_census(&x), h.euler_characteristic());
        }
        Ok(())
    });
    v.run("quotients", |v| {
        for (name, x) in corpus() {
            let (q, _) = orbit_quotient(&x, &GroupAction::trivial(&x))?;
            v.holds(format!("trivial quotient is the identity: {name}"), q == x, format!("{:?}", q.counts()));
        }
        for k in [1, 2] {
            let x = minimal_sphere(k)?;
            let power = power_with_action(&x, 4, v.budget)?;
            let action = power.action().expect("power carries the symmetric action");
            let find = |perm: &[usize]| action.elements().iter().position(|g| g == perm).unwrap();
            let a = action.subgroup(&[find(&[1, 0, 2, 3])]);
            let b = action.subgroup(&[find(&[0, 1, 3, 2])]);
            let twice = |first: &GroupAction, second: &GroupAction| -> Result<SimplicialSet, CliError> {
                let (q1, map) = orbit_quotient(power.space(), first)?;
                let rest = second.descend(&map, &q1)?;
                Ok(orbit_quotient(&q1, &rest)?.0)
            };
            let (ab, ba) = (twice(&a, &b)?, twice(&b, &a)?);
            v.equal(format!("commuting quotients of S({k})^4: census"), ab.counts().to_vec(), ba.counts().to_vec());
            v.equal(
                format!("commuting quotients of S({k})^4: homology"),
                integral_homology(&ab, None)?,
                integral_homology(&ba, None)?,
            );
        }
        Ok(())
    });
    v.run("suspension", |v| {
        for (name, x) in corpus() {
            let h = integral_homology(&x, None)?;
            let s = integral_homology(&suspension(&x), None)?;
            let shifted: Vec<DegreeHomology> = (0..=h.max_degree())
                .map(|d| DegreeHomology {
                    degree: d,
                    ..s.reduced(d + 1)
                })
                .collect();
            let want: Vec<DegreeHomology> = (0..=h.max_degree()).map(|d| h.reduced(d)).collect();
            v.equal(format!("suspension shifts homology: {name}"), want, shifted);
        }
        Ok(())
    });
    v.run("product census", |v| {
        let fact = |n: usize| -> usize { (1..=n).product() };
        for (a, x) in corpus() {
            for (b, y) in corpus().into_iter().take(5) {
                let p = product(&x, &y).into_space();
                let want: Vec<usize> = (0..=x.dim() + y.dim())
                    .map(|d| {
                        let mut total = 0;
                        for i in 0..=d.min(x.dim()) {
                            for j in d - i..=d.min(y.dim()) {
                                let ways = fact(d) / (fact(d - i) * fact(d - j) * fact(i + j - d));
                                total += x.census().get(i) * y.census().get(j) * ways;
                            }
                        }
                        total
                    })
                    .collect();
                v.equal(format!("shuffle count: {a} × {b}"), want, p.counts().to_vec());
            }
        }
        Ok(())
    });
}

fn suite_homology(v: &mut Verifier) {
    v.run("invariants", |v| {
        for (name, x) in everything(v)? {
            v.holds(format!("∂² = 0: {name}"), normalized_chains(&x, None).check().is_ok(), "");
            let h = integral_homology(&x, None)?;
            let chi = euler_from_census(&x);
            for p in [2, 3, 5] {
                let b = betti_mod_p(&x, p, None)?;
                v.equal(format!("universal coefficients mod {p}: {name}"), h.betti_mod_p(p), b.clone());
                v.equal(format!("χ mod {p}: {name}"), chi, b.euler_characteristic());
            }
        }
        Ok(())
    });
    v.run("subdivision and relabeling", |v| {
        for (name, x) in corpus() {
            let h = integral_homology(&x, None)?;
            let sd = barycentric_subdivision(&x);
            v.equal(format!("subdivision invariance: {name}"), h.clone(), integral_homology(&sd, None)?);
            let reversed: Vec<Vec<u32>> = x.counts().iter().map(|&c| (0..c as u32).rev().collect()).collect();
            let y = x.relabel(&reversed)?;
            v.equal(format!("relabeling invariance: {name}"), h, integral_homology(&y, None)?);
        }
        Ok(())
    });
    v.run("certificates", |v| {
        for (name, x) in [("RP2", rp2()), ("torus", torus()), ("sd(RP2)", barycentric_subdivision(&rp2()))] {
            let c = normalized_chains(&x, None);
            for (d, m) in c.boundary.iter().enumerate() {
                let dense: Vec<Vec<BigInt>> =
                    m.to_dense().into_iter().map(|row| row.into_iter().map(BigInt::from).collect()).collect();
                let snf = smith_normal_form_dense(&dense, m.ncols(), true);
                let cert = snf.certificates.as_ref().expect("requested");
                let product = certificate_product(&dense, m.ncols(), cert);
                let diagonal_ok = product.iter().enumerate().all(|(i, row)| {
                    row.iter().enumerate().all(|(j, e)| {
                        let want = if i == j { snf.diagonal.get(i).cloned().unwrap_or_default() } else { BigInt::default() };
                        *e == want
                    })
                });
                v.holds(format!("U·A·V = D: {name} ∂_{d}"), diagonal_ok, "");
                v.equal(format!("sparse and dense agree: {name} ∂_{d}"), snf.diagonal, smith_normal_form(m).diagonal);
            }
        }
        Ok(())
    });
}

fn suite_models(v: &mut Verifier) {
    v.run("circle", |v| {
        let s1 = minimal_sphere(1)?;
        for (n, kinds) in [(2, vec![ModelKind::Suspension, ModelKind::Direct]), (3, vec![ModelKind::Direct])] {
            let top = 2 * n - 1;
            let want = integral_homology(&minimal_sphere(top)?, None)?;
            for kind in kinds {
                let m = model(v, kind, n, &s1, "S(1)", None)?;
                v.equal(format!("bary({n}, S(1)) ≃ S^{top} [{kind}]"), summary(&want), summary(&m.homology(None)?));
            }
        }
        Ok(())
    });
    v.run("projective spaces", |v| {
        let expected = [
            (1, reduced_profile(3, &[(3, 1, &[])])),
            (2, reduced_profile(5, &[(4, 0, &[2])])),
            (3, reduced_profile(7, &[(5, 0, &[2]), (7, 1, &[])])),
        ];
        for (k, want) in expected {
            let m = model(v, ModelKind::Direct, 2, &minimal_sphere(k)?, &format!("S({k})"), None)?;
            v.equal(format!("bary(2, S({k})) ≃ Σ^{} RP^{k}", k + 1), summary(&want), summary(&m.homology(None)?));
        }
        Ok(())
    });
    for (name, x) in bary_corpus() {
        for n in 2..=3usize {
            v.run_if_fits(&format!("model agreement bary({n}, {name})"), |v| {
                if n == 3 && (name == "surface(2)" || name == "torus") {
                    // the suspension model of these is large; both models are
                    // still compared through H_2
                    let a = model(v, ModelKind::Suspension, n, &x, name, Some(2))?.homology(Some(2))?;
                    let b = model(v, ModelKind::Direct, n, &x, name, Some(2))?.homology(Some(2))?;
                    v.equal(format!("models agree through H2: bary({n}, {name})"), a, b);
                    return Ok(());
                }
                let a = model(v, ModelKind::Suspension, n, &x, name, None)?;
                let b = model(v, ModelKind::Direct, n, &x, name, None)?;
                let (ha, hb) = (a.homology(None)?, b.homology(None)?);
                let top = ha.max_degree().max(hb.max_degree());
                v.equal(format!("models agree: bary({n}, {name})"), ha.resized(top), hb.resized(top));
                let bound = n * (x.dim() + 1) - 1;
                let above = hb.resized(top.max(bound + 1));
                let vanishes = (bound + 1..above.degrees.len()).all(|d| above.reduced(d).is_zero());
                v.holds(
                    format!("dimension bound {bound}: bary({n}, {name})"),
                    vanishes && a.top_degree() <= bound && b.top_degree() <= bound,
                    summary(&hb),
                );
                Ok(())
            });
        }
    }
    v.run("cylinder", |v| {
        for (name, x) in [("S(1)", minimal_sphere(1)?), ("S(2)", minimal_sphere(2)?), ("RP2", rp2())] {
            let cyl = integral_homology(&symjoin2_cylinder_model(&x, v.budget)?, None)?;
            let direct = model(v, ModelKind::Direct, 2, &x, name, None)?.homology(None)?;
            let top = cyl.max_degree().max(direct.max_degree());
            v.equal(format!("symjoin2({name}) = bary(2, {name})"), direct.resized(top), cyl.resized(top));
        }
        Ok(())
    });
}

fn suite_sphere_mod2(v: &mut Verifier) {
    v.run("B_2(S^2) table", |v| {
        let s = barycenter_sphere_series_mod2(2, 2, 5)?;
        v.equal("F_2 at degrees 4 and 5", vec![1, 0, 0, 0, 1, 1], s.coeffs.clone());
        for kind in [ModelKind::Suspension, ModelKind::Direct] {
            let m = model(v, kind, 2, &minimal_sphere(2)?, "S(2)", None)?;
            v.equal(format!("bary(2, S(2)) mod 2 [{kind}]"), s.clone(), m.betti_mod_p(2, Some(5))?);
        }
        Ok(())
    });
    for n in 1..=3usize {
        for k in 1..=2u32 {
            v.run(&format!("bary({n}, S({k})) mod 2"), |v| {
                let dmax = n * (k as usize + 1) + 1;
                let sym = barycenter_sphere_series_mod2(n, k, dmax)?;
                let mut shifted = rsp_sphere_series_mod2(n, k + 1, dmax + 1)?.shift_down(1);
                shifted.coeffs[0] = 1;
                v.equal(format!("σ-shift: bary({n}, S({k}))"), sym.clone(), shifted);
                for kind in [ModelKind::Suspension, ModelKind::Direct] {
                    let m = model(v, kind, n, &minimal_sphere(k as usize)?, &format!("S({k})"), Some(dmax))?;
                    v.equal(format!("bary({n}, S({k})) mod 2 [{kind}]"), sym.clone(), m.betti_mod_p(2, Some(dmax))?);
                }
                Ok(())
            });
        }
    }
}

fn suite_nakaoka(v: &mut Verifier) {
    let dmax = 12;
    for n in 1..=4usize {
        for k in 1..=3u32 {
            v.run_if_fits(&format!("rsp({n}, S({k}))"), |v| {
                let x = reduced_symmetric_product_skeleton(n, &minimal_sphere(k as usize)?, Some(dmax + 1), v.budget)?;
                v.equal(
                    format!("Nakaoka: rsp({n}, S({k})) mod 2 through {dmax}"),
                    rsp_sphere_series_mod2(n, k, dmax)?,
                    betti_mod_p(&x, 2, Some(dmax))?,
                );
                Ok(())
            });
        }
    }
}

fn suite_euler(v: &mut Verifier) {
    for (name, x) in bary_corpus() {
        let chi = euler_from_census(&x);
        for n in 1..=3usize {
            v.run_if_fits(&format!("χ bary({n}, {name})"), |v| {
                let m = model(v, ModelKind::Direct, n, &x, name, None)?;
                v.equal(format!("χ bary({n}, {name})"), euler_barycenter(n, chi), BigInt::from(m.euler_characteristic()?));
                Ok(())
            });
        }
        for n in 1..=2usize {
            v.run_if_fits(&format!("χ rsp/sp({n}, {name})"), |v| {
                let r = reduced_symmetric_product(n, &x, v.budget)?;
                v.equal(format!("χ rsp({n}, {name})"), euler_rsp(n, chi), BigInt::from(euler_from_census(&r)));
                let s = symmetric_product(n, &x, v.budget)?;
                v.equal(format!("χ sp({n}, {name})"), euler_sp(n, chi), BigInt::from(euler_from_census(&s)));
                Ok(())
            });
        }
    }
    v.run("suspension identity", |v| {
        let mut bad = Vec::new();
        for n in 1..=8usize {
            for chi in -8..=8i64 {
                if euler_barycenter(n, chi) != 2 - euler_rsp(n, 2 - chi) {
                    bad.push((n, chi));
                }
            }
        }
        v.equal("χ(B_n) = 2 − χ(rsp(n, ΣX)) for n ≤ 8, |χ| ≤ 8", Vec::<(usize, i64)>::new(), bad);
        Ok(())
    });
}

fn suite_connectivity(v: &mut Verifier) {
    let connected = [
        ("S(2)", minimal_sphere(2).unwrap(), 1),
        ("S(3)", minimal_sphere(3).unwrap(), 2),
        ("susp(torus)", suspension(&torus()), 1),
        ("susp(RP2)", suspension(&rp2()), 1),
    ];
    for (name, x, r) in connected {
        for n in 2..=3usize {
            v.run_if_fits(&format!("connectivity bary({n}, {name})"), |v| {
                let bound = 2 * n + r - 2;
                let h = model(v, ModelKind::Direct, n, &x, name, Some(bound))?.homology(Some(bound))?;
                v.equal(format!("H̃_i = 0 for i ≤ {bound}: bary({n}, {name})"), "0".to_string(), summary(&h));
                Ok(())
            });
        }
    }
    v.run("sharpness", |v| {
        let h = model(v, ModelKind::Direct, 2, &minimal_sphere(2)?, "S(2)", Some(4))?.homology(Some(4))?;
        v.holds("H̃_4 bary(2, S(2)) ≠ 0", !h.reduced(4).is_zero(), h.reduced(4).to_string());
        Ok(())
    });
}

fn suite_topclass(v: &mut Verifier) {
    let closed = [
        ("S(1)", minimal_sphere(1).unwrap(), 1usize),
        ("S(2)", minimal_sphere(2).unwrap(), 2),
        ("torus", torus(), 2),
    ];
    for (name, x, d) in closed {
        for n in 2..=3usize {
            if n == 3 && name == "torus" {
                continue;
            }
            v.run_if_fits(&format!("top class bary({n}, {name})"), |v| {
                let top = n * (d + 1) - 1;
                let m = model(v, ModelKind::Direct, n, &x, name, None)?;
                let h = m.homology(Some(top))?;
                let want = DegreeHomology {
                    degree: top,
                    rank: usize::from(d % 2 == 1),
                    torsion: Vec::new(),
                };
                v.equal(format!("H_{top} bary({n}, {name})"), want.to_string(), h.get(top).to_string());
                let b = m.betti_mod_p(2, Some(top))?;
                v.holds(format!("mod 2 top class bary({n}, {name})"), b.get(top) > 0, format!("b_{top} = {}", b.get(top)));
                Ok(())
            });
        }
    }
}

fn suite_splitting(v: &mut Verifier) {
    for g in 0..=2u64 {
        let check = |v: &mut Verifier| -> Result<(), CliError> {
            let m = model(v, ModelKind::Direct, 2, &surface(g as usize), &format!("surface({g})"), None)?;
            for p in [2, 3] {
                let split = b2_surface_splitting(g, p, 5);
                v.equal(format!("B_2(C_{g}) mod {p} = splitting"), split.total, m.betti_mod_p(p, Some(5))?);
            }
            Ok(())
        };
        if g == 2 {
            v.run_if_fits("surface splitting g = 2", check);
        } else {
            v.run(&format!("surface splitting g = {g}"), check);
        }
    }
    v.run("torus as a product", |v| {
        let dmax = 5;
        let s1 = minimal_sphere(1)?;
        let budget = v.budget;
        let b = |x: &SimplicialSet, name: &str, p: u64| -> Result<PoincareSeries, CliError> {
            Ok(barycenter_model_skeleton(ModelKind::Direct, 2, x, None, budget, name)?.betti_mod_p(p, Some(dmax))?.truncate(dmax))
        };
        for p in [2, 3] {
            let circle = betti_mod_p(&s1, p, Some(dmax))?.truncate(dmax);
            let pieces = ProductPieces {
                x: circle.clone(),
                y: circle,
                b2x: b(&s1, "S(1)", p)?,
                b2y: b(&s1, "S(1)", p)?,
                b2_smash: b(&smash(&s1, &s1), "smash(S(1), S(1))", p)?,
            };
            let split = b2_product_splitting(&pieces)?;
            v.equal(format!("B_2(S^1 × S^1) mod {p} = product splitting"), b(&torus(), "torus", p)?, split.total);
        }
        Ok(())
    });
}

/// `(rank, p^e ↦ multiplicity)`: a group up to isomorphism.
fn primary(groups: &[DegreeHomology]) -> (usize, BTreeMap<u64, usize>) {
    let mut rank = 0;
    let mut parts = BTreeMap::new();
    for g in groups {
        rank += g.rank;
        for &t in &g.torsion {
            let (mut t, mut q) = (t, 2);
            while t > 1 {
                let mut pe = 1;
                while t % q == 0 {
                    t /= q;
                    pe *= q;
                }
                if pe > 1 {
                    *parts.entry(pe).or_insert(0) += 1;
                }
                q += 1;
            }
        }
    }
    (rank, parts)
}

fn suite_wedge(v: &mut Verifier) {
    v.run("rsp(2, wedge(S(1), S(1)))", |v| {
        let s1 = minimal_sphere(1)?;
        let x = reduced_symmetric_product(2, &wedge(&s1, &s1), v.budget)?;
        let want = reduced_profile(2, &[(2, 1, &[])]);
        v.equal("rsp(2, wedge(S(1), S(1))) ≃ S^2", summary(&want), summary(&integral_homology(&x, None)?));
        Ok(())
    });
    let pairs = [("S(1)", "S(1)", 1, 1), ("S(1)", "S(2)", 1, 2), ("S(2)", "S(2)", 2, 2), ("S(1)", "RP2", 1, 0)];
    for (a, b, ka, kb) in pairs {
        for n in 2..=3usize {
            v.run_if_fits(&format!("decomposition rsp({n}, wedge({a}, {b}))"), |v| {
                let space = |k: usize| -> Result<SimplicialSet, CliError> {
                    Ok(if k == 0 { rp2() } else { minimal_sphere(k)? })
                };
                let (x, y) = (space(ka)?, space(kb)?);
                let whole = integral_homology(&reduced_symmetric_product(n, &wedge(&x, &y), v.budget)?, None)?;
                let mut pieces = Vec::new();
                for r in 0..=n {
                    let s = n - r;
                    let piece = match (r, s) {
                        (0, _) => reduced_symmetric_product(s, &y, v.budget)?,
                        (_, 0) => reduced_symmetric_product(r, &x, v.budget)?,
                        _ => smash(
                            &reduced_symmetric_product(r, &x, v.budget)?,
                            &reduced_symmetric_product(s, &y, v.budget)?,
                        ),
                    };
                    let h = integral_homology(&piece, None)?;
                    pieces.extend((0..h.degrees.len()).map(|d| h.reduced(d)));
                }
                let lhs: Vec<DegreeHomology> = (0..whole.degrees.len()).map(|d| whole.reduced(d)).collect();
                let top = lhs.len().max(pieces.iter().map(|g| g.degree + 1).max().unwrap_or(0));
                let by_degree = |groups: &[DegreeHomology]| -> Vec<(usize, BTreeMap<u64, usize>)> {
                    (0..top)
                        .map(|d| primary(&groups.iter().filter(|g| g.degree == d).cloned().collect::<Vec<_>>()))
                        .collect()
                };
                v.equal(format!("rsp({n}, wedge({a}, {b})) = ⊕ smash pieces"), by_degree(&pieces), by_degree(&lhs));
                Ok(())
            });
        }
    }
}

fn suite_simply_connected(v: &mut Verifier) {
    for (name, x) in bary_corpus() {
        for n in 2..=3usize {
            v.run_if_fits(&format!("H1 bary({n}, {name})"), |v| {
                let h = model(v, ModelKind::Direct, n, &x, name, Some(1))?.homology(Some(1))?;
                v.equal(format!("H1 bary({n}, {name}) = 0"), "0".to_string(), h.get(1).to_string());
                Ok(())
            });
        }
    }
}

fn suite_q_space(v: &mut Verifier) {
    let expected = [
        (1, reduced_profile(1, &[(1, 1, &[])])),
        (2, reduced_profile(2, &[(1, 0, &[2])])),
        (3, reduced_profile(3, &[(1, 0, &[2]), (3, 1, &[])])),
    ];
    for (k, want) in expected {
        v.run(&format!("Q(2, {k})"), |v| {
            let q = infer_q_homology(2, k, None, v.budget)?;
            v.equal(format!("Q(2, {k}) ≃ RP^{k}"), summary(&want), summary(&q.profile));
            Ok(())
        });
    }
}

fn suite_large_prime(v: &mut Verifier) {
    v.run("vanishing", |v| {
        let b = model(v, ModelKind::Direct, 2, &minimal_sphere(2)?, "S(2)", None)?.betti_mod_p(5, Some(5))?;
        v.equal("bary(2, S(2)) mod 5", vec![1, 0, 0, 0, 0, 0], b.coeffs);
        let b = model(v, ModelKind::Direct, 2, &minimal_sphere(1)?, "S(1)", None)?.betti_mod_p(3, Some(3))?;
        v.equal("bary(2, S(1)) mod 3", vec![1, 0, 0, 1], b.coeffs);
        Ok(())
    });
    for (n, k, p) in [(2usize, 1u32, 3u64), (2, 2, 5), (2, 3, 3), (3, 1, 5), (3, 2, 5)] {
        v.run(&format!("large p bary({n}, S({k})) mod {p}"), |v| {
            let sym = barycenter_sphere_large_p(n, k, p)?;
            let dmax = sym.dmax();
            for kind in [ModelKind::Suspension, ModelKind::Direct] {
                let m = model(v, kind, n, &minimal_sphere(k as usize)?, &format!("S({k})"), None)?;
                v.equal(
                    format!("bary({n}, S({k})) mod {p} [{kind}]"),
                    sym.clone(),
                    m.betti_mod_p(p, Some(dmax))?.truncate(dmax),
                );
            }
            Ok(())
        });
    }
}

fn suite_odd_prime(v: &mut Verifier) {
    for (n, p) in [(1usize, 3u64), (2, 3), (3, 3), (2, 5), (3, 5), (2, 7)] {
        v.run_if_fits(&format!("bary({n}, S(2)) mod {p}"), |v| {
            let dmax = 3 * n - 1;
            let sym = barycenter_s2_series_modp(n, p, dmax)?;
            let m = model(v, ModelKind::Direct, n, &minimal_sphere(2)?, "S(2)", None)?;
            v.equal(format!("bary({n}, S(2)) mod {p}"), sym, m.betti_mod_p(p, Some(dmax))?.truncate(dmax));
            Ok(())
        });
    }
}

/// Every sequence of positive integers of weight at most `room`.
fn all_sequences(room: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![(Vec::new(), room)];
    while let Some((seq, left)) = frontier.pop() {
        for i in 1..=left {
            let mut next: Vec<u32> = seq.clone();
            next.push(i);
            out.push(next.clone());
            frontier.push((next, left - i));
        }
    }
    out
}

fn suite_admissible(v: &mut Verifier) {
    v.run("enumeration", |v| {
        for base in 2..=5u32 {
            let dmax = base + 12;
            let mut naive: Vec<AdmissibleWord> = all_sequences(dmax - base)
                .into_iter()
                .filter(|s| {
                    let doubling = s.windows(2).all(|w| w[0] >= 2 * w[1]);
                    let last = s.last().is_none_or(|&i| i >= 2);
                    let excess = s.first().map_or(0, |&f| 2 * f as i64 - s.iter().sum::<u32>() as i64);
                    doubling && last && excess < base as i64
                })
                .map(|s| AdmissibleWord::new(base, s))
                .collect();
            naive.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.indices.cmp(&b.indices)));
            let words = admissible_sequences(base, dmax)?;
            v.equal(format!("complete enumeration on ι_{base} through {dmax}"), naive, words);
        }
        Ok(())
    });
}

pub fn run_suite(name: &str, v: &mut Verifier) -> Result<(), CliError> {
    let f: fn(&mut Verifier) = match name {
        "sset" => suite_sset,
        "homology" => suite_homology,
        "models" => suite_models,
        "sphere-mod2" => suite_sphere_mod2,
        "nakaoka" => suite_nakaoka,
        "euler" => suite_euler,
        "connectivity" => suite_connectivity,
        "topclass" => suite_topclass,
        "splitting" => suite_splitting,
        "wedge" => suite_wedge,
        "simply-connected" => suite_simply_connected,
        "q-space" => suite_q_space,
        "large-prime" => suite_large_prime,
        "odd-prime" => suite_odd_prime,
        "admissible" => suite_admissible,
        _ => {
            return Err(CliError::Usage(format!(
                "unknown suite `{name}` (known: {}, all)",
                SUITES.join(", ")
            )))
        }
    };
    v.suite = SUITES.iter().find(|s| **s == name).copied().unwrap();
    f(v);
    Ok(())
}

/// Runs one suite, or every suite for `all`.
pub fn cmd_verify(name: &str, budget: usize) -> Result<Report, CliError> {
    let mut v = Verifier::new(budget);
    let names: Vec<&str> = if name == "all" { SUITES.to_vec() } else { vec![name] };
    let mut timings = Vec::new();
    for n in &names {
        let start = Instant::now();
        run_suite(n, &mut v)?;
        timings.push((*n, start.elapsed().as_secs_f64()));
    }
    let count = |s: Status| v.checks.iter().filter(|c| c.status == s).count();
    let (pass, fail, skip, over) = (count(Status::Pass), count(Status::Fail), count(Status::Skip), count(Status::Budget));
    let mut text = String::new();
    for c in &v.checks {
        let _ = writeln!(text, "[{:>6}] {:<16} {}", c.status.label(), c.suite, c.name);
        if matches!(c.status, Status::Fail | Status::Budget) {
            let _ = writeln!(text, "         expected: {}\n         computed: {}", c.expected, c.computed);
        } else if c.status == Status::Skip {
            let _ = writeln!(text, "         {}", c.computed);
        }
    }
    for (n, secs) in &timings {
        let _ = writeln!(text, "suite {n} finished in {secs:.2}s");
    }
    let _ = writeln!(text, "{pass} passed, {fail} failed, {skip} skipped, {over} over budget");
    let checks: Vec<_> = v
        .checks
        .iter()
        .map(|c| {
            json!({
                "suite": c.suite,
                "name": c.name,
                "status": c.status.label().to_lowercase(),
                "expected": c.expected,
                "computed": c.computed,
            })
        })
        .collect();
    let mut report = Report::new(
        fail == 0 && over == 0,
        text,
        json!({
            "command": "verify",
            "suite": name,
            "budget": budget,
            "passed": pass,
            "failed": fail,
            "skipped": skip,
            "over_budget": over,
            "checks": checks,
        }),
    );
    report.budget_exceeded = over > 0;
    Ok(report)
}
