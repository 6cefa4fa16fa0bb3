//! The commands behind each subcommand. Every command returns a [`Report`]
//! holding both renderings, so text and JSON output never drift apart.

use std::fmt::Write as _;

use barytop_core::constructions::{barycenter_model_skeleton, reduced_symmetric_product_skeleton, BarycenterModel};
use barytop_core::homology::{euler_from_census, is_prime};
use barytop_core::sset::minimal_sphere;
use barytop_core::symbolic::{
    admissible_sequences, barycenter_s2_series_modp, barycenter_sphere_large_p, barycenter_sphere_series_mod2,
    rsp_sphere_series_mod2,
};
use barytop_core::{betti_mod_p, integral_homology, HomologyProfile, PoincareSeries};
use serde_json::{json, Value};

use crate::config::{Coefficients, Format, ModelChoice, RunConfig};
use crate::error::CliError;
use crate::eval::{evaluate, evaluate_skeleton, symbolic_euler};
use crate::expr::SpaceExpr;

pub const SCHEMA: u64 = 1;

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    /// False when a cross-check inside the command disagreed.
    pub ok: bool,
    /// Set when a required computation ran out of cells.
    pub budget_exceeded: bool,
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn new(ok: bool, text: String, mut json: Value) -> Self {
        json["schema"] = json!(SCHEMA);
        json["ok"] = json!(ok);
        Report {
            ok,
            budget_exceeded: false,
            text,
            json,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

/// Either kind of homology result.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Groups {
    Integral(HomologyProfile),
    ModP(PoincareSeries),
}

impl Groups {
    fn top(&self) -> usize {
        match self {
            Groups::Integral(h) => h.max_degree(),
            Groups::ModP(s) => s.dmax(),
        }
    }

    fn resized(&self, max: usize) -> Self {
        match self {
            Groups::Integral(h) => Groups::Integral(h.resized(max)),
            Groups::ModP(s) => Groups::ModP(s.truncate(max)),
        }
    }

    fn json(&self) -> Value {
        match self {
            Groups::Integral(h) => h.to_json_value(),
            Groups::ModP(s) => serde_json::to_value(s).expect("serializable"),
        }
    }

    fn table(&self, out: &mut String) {
        match self {
            Groups::Integral(h) => {
                for g in &h.degrees {
                    let _ = writeln!(out, "  H_{:<3} {g}", g.degree);
                }
                if h.truncated {
                    let _ = writeln!(out, "  (higher degrees not computed)");
                }
            }
            Groups::ModP(s) => {
                for (d, c) in s.coeffs.iter().enumerate() {
                    let _ = writeln!(out, "  b_{d:<3} {c}");
                }
            }
        }
    }
}

fn coefficient_label(c: Coefficients) -> String {
    match c {
        Coefficients::Integral => "Z".into(),
        Coefficients::Prime(p) => format!("F_{p}"),
    }
}

fn coefficient_json(c: Coefficients) -> Value {
    match c {
        Coefficients::Integral => json!("integral"),
        Coefficients::Prime(p) => json!(p),
    }
}

fn model_groups(model: &BarycenterModel, cfg: &RunConfig) -> Result<Groups, CliError> {
    Ok(match cfg.coefficients {
        Coefficients::Integral => Groups::Integral(model.homology(cfg.max_degree)?),
        Coefficients::Prime(p) => Groups::ModP(model.betti_mod_p(p, cfg.max_degree)?),
    })
}

/// Homology of `expr`. A barycenter space at the top level is computed in
/// each model `cfg.model` selects, and the models must agree.
pub fn cmd_homology(expr: &SpaceExpr, cfg: &RunConfig) -> Result<Report, CliError> {
    cfg.validate()?;
    let mut results = Vec::new();
    if let SpaceExpr::Barycenter(n, inner) = expr {
        let x = evaluate(inner, cfg.budget)?;
        for kind in cfg.model.kinds() {
            let model = barycenter_model_skeleton(kind, *n as usize, &x, cfg.max_degree, cfg.budget, &inner.to_string())?;
            results.push((Some(kind.to_string()), model.space.census().counts, model_groups(&model, cfg)?));
        }
    } else {
        let x = evaluate_skeleton(expr, cfg.max_degree, cfg.budget)?;
        let groups = match cfg.coefficients {
            Coefficients::Integral => Groups::Integral(integral_homology(&x, cfg.max_degree)?),
            Coefficients::Prime(p) => Groups::ModP(betti_mod_p(&x, p, cfg.max_degree)?),
        };
        results.push((None, x.census().counts, groups));
    }
    let top = results.iter().map(|r| r.2.top()).max().unwrap_or(0);
    let agree = results.windows(2).all(|w| w[0].2.resized(top) == w[1].2.resized(top));

    let mut text = format!("homology of {expr} with {} coefficients\n", coefficient_label(cfg.coefficients));
    let mut entries = Vec::new();
    for (model, census, groups) in &results {
        match model {
            Some(m) => {
                let _ = writeln!(text, "{m} model ({} cells)", census.iter().sum::<usize>());
            }
            None => {
                let _ = writeln!(text, "model with {} cells", census.iter().sum::<usize>());
            }
        }
        groups.table(&mut text);
        entries.push(json!({
            "model": model,
            "census": census,
            "groups": groups.json(),
        }));
    }
    if results.len() > 1 {
        let _ = writeln!(text, "models {}", if agree { "agree" } else { "DISAGREE" });
    }
    Ok(Report::new(
        agree,
        text,
        json!({
            "command": "homology",
            "expr": expr.to_string(),
            "coefficients": coefficient_json(cfg.coefficients),
            "max_degree": cfg.max_degree,
            "results": entries,
            "models_agree": agree,
        }),
    ))
}

/// `χ` of `expr` from closed forms, checked against the cell census of a
/// model.
pub fn cmd_euler(expr: &SpaceExpr, budget: usize) -> Result<Report, CliError> {
    let formula = symbolic_euler(expr);
    let x = evaluate(expr, budget)?;
    let census = euler_from_census(&x);
    let ok = formula == census.into();
    let text = format!(
        "χ({expr}) = {formula}\ncell census of the model: {census} ({})\n",
        if ok { "agrees" } else { "DISAGREES" }
    );
    Ok(Report::new(
        ok,
        text,
        json!({
            "command": "euler",
            "expr": expr.to_string(),
            "formula": formula.to_string(),
            "census": census,
            "cells": x.census().counts,
        }),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Source {
    Symbolic,
    Brute,
    Both,
}

/// Which family `cmd_poincare` tabulates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `B_n(S^k)`
    Barycenter(usize),
    /// `SP̄^n(S^k)`
    ReducedSymmetric(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareQuery {
    pub family: Family,
    pub sphere: u32,
    pub p: u64,
    pub dmax: usize,
    pub source: Source,
    pub model: ModelChoice,
    pub budget: usize,
}

fn family_label(q: &PoincareQuery) -> String {
    match q.family {
        Family::Barycenter(n) => format!("bary({n}, S({}))", q.sphere),
        Family::ReducedSymmetric(n) => format!("rsp({n}, S({}))", q.sphere),
    }
}

/// The closed-form series, if one is implemented for the query.
pub fn symbolic_series(q: &PoincareQuery) -> Result<PoincareSeries, CliError> {
    let (p, k, dmax) = (q.p, q.sphere, q.dmax);
    let none = || CliError::Usage(format!("no closed form for {} over F_{p}", family_label(q)));
    Ok(match q.family {
        Family::ReducedSymmetric(n) if p == 2 => rsp_sphere_series_mod2(n, k, dmax)?,
        Family::ReducedSymmetric(1) => PoincareSeries::unit(p, dmax).add(&PoincareSeries::monomial(p, dmax, k as usize, 1)),
        Family::ReducedSymmetric(_) => return Err(none()),
        Family::Barycenter(n) if p == 2 => barycenter_sphere_series_mod2(n, k, dmax)?,
        Family::Barycenter(1) => PoincareSeries::unit(p, dmax).add(&PoincareSeries::monomial(p, dmax, k as usize, 1)),
        Family::Barycenter(n) if p > n as u64 => barycenter_sphere_large_p(n, k, p)?.truncate(dmax),
        Family::Barycenter(n) if k == 2 => barycenter_s2_series_modp(n, p, dmax)?,
        Family::Barycenter(_) => return Err(none()),
    })
}

/// The series computed from simplicial models, one per model kind.
pub fn brute_series(q: &PoincareQuery) -> Result<Vec<(String, PoincareSeries)>, CliError> {
    let sphere = minimal_sphere(q.sphere as usize)?;
    let source = format!("S({})", q.sphere);
    match q.family {
        Family::Barycenter(n) => q
            .model
            .kinds()
            .into_iter()
            .map(|kind| {
                let model = barycenter_model_skeleton(kind, n, &sphere, Some(q.dmax), q.budget, &source)?;
                Ok((kind.to_string(), model.betti_mod_p(q.p, Some(q.dmax))?.truncate(q.dmax)))
            })
            .collect(),
        Family::ReducedSymmetric(n) => {
            let x = reduced_symmetric_product_skeleton(n, &sphere, Some(q.dmax + 1), q.budget)?;
            Ok(vec![("rsp".into(), betti_mod_p(&x, q.p, Some(q.dmax))?.truncate(q.dmax))])
        }
    }
}

/// Betti series of `B_n(S^k)` or `SP̄^n(S^k)` over `F_p`, from the closed
/// forms, from the models, or both (then they must agree).
pub fn cmd_poincare(q: &PoincareQuery) -> Result<Report, CliError> {
    if !is_prime(q.p) {
        return Err(CliError::Usage(format!("--mod expects a prime, got {}", q.p)));
    }
    if q.budget == 0 {
        return Err(CliError::Usage("the cell budget must be positive".into()));
    }
    let mut rows: Vec<(String, PoincareSeries)> = Vec::new();
    if q.source != Source::Brute {
        rows.push(("symbolic".into(), symbolic_series(q)?));
    }
    if q.source != Source::Symbolic {
        rows.extend(brute_series(q)?);
    }
    let ok = rows.windows(2).all(|w| w[0].1 == w[1].1);
    let mut text = format!("Betti numbers of {} over F_{} up to degree {}\n", family_label(q), q.p, q.dmax);
    let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    for (name, s) in &rows {
        let coeffs: Vec<String> = s.coeffs.iter().map(u64::to_string).collect();
        let _ = writeln!(text, "  {name:<width$}  {}", coeffs.join(" "));
    }
    if rows.len() > 1 {
        let _ = writeln!(text, "sources {}", if ok { "agree" } else { "DISAGREE" });
    }
    let series: serde_json::Map<String, Value> = rows
        .iter()
        .map(|(name, s)| (name.clone(), serde_json::to_value(s).expect("serializable")))
        .collect();
    Ok(Report::new(
        ok,
        text,
        json!({
            "command": "poincare",
            "space": family_label(q),
            "p": q.p,
            "dmax": q.dmax,
            "series": series,
            "sources_agree": ok,
        }),
    ))
}

/// Admissible words on `ι_base` of degree at most `dmax`.
pub fn cmd_admissible(base: u32, dmax: u32) -> Result<Report, CliError> {
    let words = admissible_sequences(base, dmax)?;
    let mut text = format!("{} admissible word(s) on ι_{base} up to degree {dmax}\n", words.len());
    let _ = writeln!(text, "  {:>6} {:>6} {:>6}  word", "degree", "excess", "filt");
    for w in &words {
        let _ = writeln!(text, "  {:>6} {:>6} {:>6}  {w}", w.degree(), w.excess(), w.filtration());
    }
    let list: Vec<Value> = words
        .iter()
        .map(|w| {
            json!({
                "indices": w.indices,
                "degree": w.degree(),
                "excess": w.excess(),
                "filtration": w.filtration(),
                "word": w.to_string(),
            })
        })
        .collect();
    Ok(Report::new(
        true,
        text,
        json!({ "command": "admissible", "base": base, "dmax": dmax, "words": list }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    #[test]
    fn circle_barycenter_is_a_three_sphere() {
        let cfg = RunConfig {
            model: ModelChoice::Both,
            ..RunConfig::default()
        };
        let r = cmd_homology(&parse("bary(2, S(1))").unwrap(), &cfg).unwrap();
        assert!(r.ok);
        let groups = &r.json["results"][0]["groups"];
        let ranks: Vec<u64> = groups.as_array().unwrap().iter().map(|g| g["rank"].as_u64().unwrap()).collect();
        assert_eq!(ranks, vec![1, 0, 0, 1]);
        assert_eq!(r.json["results"][1]["groups"], *groups);
    }

    #[test]
    fn euler_of_the_torus_barycenter() {
        let r = cmd_euler(&parse("bary(2, torus)").unwrap(), 1_000_000).unwrap();
        assert!(r.ok);
        assert_eq!(r.json["formula"], "0");
    }

    #[test]
    fn poincare_sources_agree() {
        let q = PoincareQuery {
            family: Family::Barycenter(2),
            sphere: 2,
            p: 2,
            dmax: 6,
            source: Source::Both,
            model: ModelChoice::Both,
            budget: 1_000_000,
        };
        let r = cmd_poincare(&q).unwrap();
        assert!(r.ok, "{}", r.text);
        assert_eq!(r.json["series"]["symbolic"]["coeffs"], json!([1, 0, 0, 0, 1, 1, 0]));
    }

    #[test]
    fn no_closed_form_is_a_usage_error() {
        let q = PoincareQuery {
            family: Family::Barycenter(3),
            sphere: 3,
            p: 3,
            dmax: 6,
            source: Source::Symbolic,
            model: ModelChoice::Direct,
            budget: 1000,
        };
        assert!(matches!(cmd_poincare(&q), Err(CliError::Usage(_))));
    }

    #[test]
    fn json_is_deterministic_and_versioned() {
        let e = parse("rsp(2, S(2))").unwrap();
        let a = cmd_homology(&e, &RunConfig::default()).unwrap().render(Format::Json);
        let b = cmd_homology(&e, &RunConfig::default()).unwrap().render(Format::Json);
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["schema"], 1);
    }
}
