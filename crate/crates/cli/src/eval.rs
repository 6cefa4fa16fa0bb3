//! Turning expressions into simplicial sets and closed-form Euler
//! characteristics.

use barytop_core::constructions::{
    barycenter_model_skeleton, reduced_symmetric_product, reduced_symmetric_product_skeleton, symjoin2_cylinder_model,
    symmetric_product, symmetric_product_skeleton, ModelKind,
};
use barytop_core::sset::{minimal_sphere, point, product, rp2, smash, surface, suspension, torus, wedge};
use barytop_core::symbolic::{euler_barycenter, euler_rsp, euler_sp};
use barytop_core::{CellCensus, Error, SimplicialSet};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::CliError;
use crate::expr::SpaceExpr;

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Cell counts of `X × Y`, saturating.
pub fn product_census(x: &CellCensus, y: &CellCensus) -> Vec<u128> {
    let (dx, dy) = (x.counts.len(), y.counts.len());
    let top = (dx + dy).saturating_sub(2);
    (0..=top)
        .map(|d| {
            let mut total: u128 = 0;
            for i in 0..dx.min(d + 1) {
                for j in (d - i)..dy.min(d + 1) {
                    let ways = factorial(d) / (factorial(d - i) * factorial(d - j) * factorial(i + j - d));
                    let cells = (x.counts[i] as u128).saturating_mul(y.counts[j] as u128);
                    total = total.saturating_add(cells.saturating_mul(ways));
                }
            }
            total
        })
        .collect()
}

fn guard(what: &str, census: Vec<u128>, budget: usize) -> Result<(), CliError> {
    let total = census.iter().fold(0u128, |a, &b| a.saturating_add(b));
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            construction: what.to_string(),
            budget,
            census: census.iter().map(|&c| c.min(usize::MAX as u128) as usize).collect(),
        }
        .into());
    }
    Ok(())
}

/// A simplicial set realizing `expr`. Barycenter spaces use the direct
/// model.
pub fn evaluate(expr: &SpaceExpr, budget: usize) -> Result<SimplicialSet, CliError> {
    evaluate_skeleton(expr, None, budget)
}

/// Like [`evaluate`], but a symmetric product or barycenter space at the
/// top of `expr` gets only the cells needed for homology in degrees
/// `0..=max_degree`.
pub fn evaluate_skeleton(expr: &SpaceExpr, max_degree: Option<usize>, budget: usize) -> Result<SimplicialSet, CliError> {
    use SpaceExpr::*;
    let ev = |e: &SpaceExpr| evaluate(e, budget);
    let max_dim = max_degree.map(|d| d + 1);
    Ok(match expr {
        Sphere(k) => minimal_sphere(*k as usize)?,
        Point => point(),
        Rp2 => rp2(),
        Torus => torus(),
        Surface(g) => surface(*g as usize),
        Wedge(a, b) => wedge(&ev(a)?, &ev(b)?),
        Product(a, b) => {
            let (x, y) = (ev(a)?, ev(b)?);
            guard(&expr.to_string(), product_census(&x.census(), &y.census()), budget)?;
            product(&x, &y).into_space()
        }
        Smash(a, b) => {
            let (x, y) = (ev(a)?, ev(b)?);
            guard(&expr.to_string(), product_census(&x.census(), &y.census()), budget)?;
            smash(&x, &y)
        }
        Suspension(a) => suspension(&ev(a)?),
        SymmetricProduct(n, a) => match max_dim {
            None => symmetric_product(*n as usize, &ev(a)?, budget)?,
            Some(_) => symmetric_product_skeleton(*n as usize, &ev(a)?, max_dim, budget)?,
        },
        ReducedSymmetricProduct(n, a) => match max_dim {
            None => reduced_symmetric_product(*n as usize, &ev(a)?, budget)?,
            Some(_) => reduced_symmetric_product_skeleton(*n as usize, &ev(a)?, max_dim, budget)?,
        },
        Barycenter(n, a) => {
            barycenter_model_skeleton(ModelKind::Direct, *n as usize, &ev(a)?, max_degree, budget, &a.to_string())?.space
        }
        SymJoin2(a) => {
            let x = ev(a)?;
            let xx = product_census(&x.census(), &x.census());
            let interval = CellCensus { counts: vec![2, 1] };
            let xxi = product_census(
                &CellCensus {
                    counts: xx.iter().map(|&c| c.min(usize::MAX as u128) as usize).collect(),
                },
                &interval,
            );
            guard(&expr.to_string(), xxi, budget)?;
            symjoin2_cylinder_model(&x, budget)?
        }
    })
}

/// `χ` of the space `expr` names, from closed forms alone.
pub fn symbolic_euler(expr: &SpaceExpr) -> BigInt {
    use SpaceExpr::*;
    let small = |e: &SpaceExpr| -> Option<i64> { symbolic_euler(e).to_i64() };
    match expr {
        Sphere(k) => BigInt::from(if k % 2 == 0 { 2 } else { 0 }),
        Point | Rp2 => BigInt::from(1),
        Torus => BigInt::from(0),
        Surface(g) => BigInt::from(2 - 2 * i64::from(*g)),
        Wedge(a, b) => symbolic_euler(a) + symbolic_euler(b) - 1,
        Product(a, b) => symbolic_euler(a) * symbolic_euler(b),
        Smash(a, b) => {
            let (x, y) = (symbolic_euler(a), symbolic_euler(b));
            &x * &y - x - y + 2
        }
        Suspension(a) => 2 - symbolic_euler(a),
        SymmetricProduct(n, a) => match small(a) {
            Some(chi) => euler_sp(*n as usize, chi),
            None => unreachable_chi(a),
        },
        ReducedSymmetricProduct(n, a) => match small(a) {
            Some(chi) => euler_rsp(*n as usize, chi),
            None => unreachable_chi(a),
        },
        Barycenter(n, a) => match small(a) {
            Some(chi) => euler_barycenter(*n as usize, chi),
            None => unreachable_chi(a),
        },
        SymJoin2(a) => match small(a) {
            Some(chi) => euler_barycenter(2, chi),
            None => unreachable_chi(a),
        },
    }
}

fn unreachable_chi(a: &SpaceExpr) -> BigInt {
    panic!("χ({a}) does not fit in 64 bits")
}
