//! Degreewise products of simplicial sets, smash products and their
//! symmetric-group quotients.
//!
//! A nondegenerate `d`-simplex of `F_1 × ... × F_m` is a tuple
//! `(s_{A_1} x_1, ..., s_{A_m} x_m)` with each `x_i` nondegenerate and the
//! degeneracy sets `A_i` having empty common intersection. Tuples are packed
//! one `u64` per factor and stored per dimension in lexicographic order, so
//! lookup is a binary search.
//!
//! The same engine builds orbit spaces of the symmetric group acting on a
//! power `X^n` (optionally smashed, optionally with a leading factor carrying
//! its own action of the same group) without materializing the power: only
//! one canonical tuple per orbit is generated.

use std::cmp::Ordering;

use super::action::{permutations, GroupAction};
use super::simplicial_set::{Face, SimplicialSet};
use super::word::{compress, low_bits, OperatorWord};
use crate::error::{Error, Result};

/// Default ceiling on the number of nondegenerate cells a construction may
/// produce.
pub const DEFAULT_CELL_BUDGET: usize = 5_000_000;

const CELL_BITS: u32 = 40;
const CELL_MASK: u64 = (1 << CELL_BITS) - 1;
const MAX_TUPLE_DIM: usize = 23;

#[inline]
fn pack(word: u64, cell: u32) -> u64 {
    word << CELL_BITS | cell as u64
}

#[inline]
fn unpack(code: u64) -> (u64, u32) {
    (code >> CELL_BITS, (code & CELL_MASK) as u32)
}

/// How the symmetric group enters a tuple construction.
#[derive(Clone, Copy)]
pub(crate) enum Symmetry<'a> {
    /// Plain product; no group.
    None,
    /// The last `n` factors are identical and permuted by `S_n`; if `lead` is
    /// set, factor 0 carries an action of the same `S_n` (elements in the
    /// order of [`permutations`]). Only orbit representatives are built.
    Quotient { n: usize, lead: Option<&'a GroupAction> },
    /// As `Quotient` without a lead factor, but every tuple is built and the
    /// permutation action is returned alongside.
    Materialize { n: usize },
}

pub(crate) struct TupleSpec<'a> {
    pub factors: Vec<&'a SimplicialSet>,
    pub smash: bool,
    pub symmetry: Symmetry<'a>,
    pub max_dim: Option<usize>,
    pub budget: usize,
    pub label: String,
}

/// A constructed product-like space, with the tuple behind each cell.
#[derive(Clone, Debug)]
pub struct TupleSpace {
    space: SimplicialSet,
    arity: usize,
    smash: bool,
    tuples: Vec<Vec<u64>>,
    action: Option<GroupAction>,
}

impl TupleSpace {
    pub fn space(&self) -> &SimplicialSet {
        &self.space
    }

    pub fn into_space(self) -> SimplicialSet {
        self.space
    }

    pub fn action(&self) -> Option<&GroupAction> {
        self.action.as_ref()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// True for the collapsed basepoint of a smash construction.
    pub fn is_smash_basepoint(&self, d: usize, cell: u32) -> bool {
        self.smash && d == 0 && cell == 0
    }

    fn offset(&self, d: usize) -> usize {
        usize::from(self.smash && d == 0)
    }

    /// Component `factor` of the tuple behind a nondegenerate cell.
    pub fn component(&self, d: usize, cell: u32, factor: usize) -> (OperatorWord, u32) {
        assert!(!self.is_smash_basepoint(d, cell), "smash basepoint has no tuple");
        let idx = cell as usize - self.offset(d);
        let (w, c) = unpack(self.tuples[d][idx * self.arity + factor]);
        (OperatorWord::from_mask(w), c)
    }

    /// Finds the cell whose tuple is exactly `components`.
    pub fn lookup(&self, d: usize, components: &[(OperatorWord, u32)]) -> Option<u32> {
        let key: Vec<u64> = components
            .iter()
            .map(|(w, c)| pack(w.mask(), *c))
            .collect();
        find(&self.tuples[d], self.arity, &key).map(|i| (i + self.offset(d)) as u32)
    }
}

fn find(arena: &[u64], m: usize, key: &[u64]) -> Option<usize> {
    let n = arena.len() / m;
    let (mut lo, mut hi) = (0usize, n);
    while lo < hi {
        let mid = (lo + hi) / 2;
        match arena[mid * m..mid * m + m].cmp(key) {
            Ordering::Less => lo = mid + 1,
            Ordering::Greater => hi = mid,
            Ordering::Equal => return Some(mid),
        }
    }
    None
}

/// `(word, cell)` options one factor can contribute to a `d`-simplex.
fn factor_options(x: &SimplicialSet, d: usize, exclude_base: bool) -> Vec<u64> {
    let mut out = Vec::new();
    for p in 0..=d.min(x.dim()) {
        let r = d - p;
        let masks = subsets_of_size(d, r);
        for c in 0..x.count(p) as u32 {
            if exclude_base && p == 0 && c == x.basepoint() {
                continue;
            }
            for &m in &masks {
                out.push(pack(m, c));
            }
        }
    }
    out.sort_unstable();
    out
}

fn subsets_of_size(n: usize, r: usize) -> Vec<u64> {
    if r > n {
        return Vec::new();
    }
    if r == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut s: u64 = low_bits(r);
    let limit = 1u64 << n;
    while s < limit {
        out.push(s);
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let rr = s + c;
        s = (((rr ^ s) >> 2) / c) | rr;
    }
    out
}

struct Engine<'a> {
    spec: &'a TupleSpec<'a>,
    m: usize,
    /// first symmetric position
    sym_start: usize,
    perms: Vec<Vec<usize>>,
}

impl<'a> Engine<'a> {
    fn quotienting(&self) -> bool {
        matches!(self.spec.symmetry, Symmetry::Quotient { .. })
    }

    fn lead(&self) -> Option<&'a GroupAction> {
        match self.spec.symmetry {
            Symmetry::Quotient { lead, .. } => lead,
            _ => None,
        }
    }

    /// Puts a `d`-simplex tuple into canonical orbit form in place.
    fn canonicalize(&self, t: &mut [u64], d: usize) {
        if !self.quotienting() {
            return;
        }
        let s = self.sym_start;
        match self.lead() {
            None => t[s..].sort_unstable(),
            Some(action) => {
                let x: Vec<u64> = t[s..].to_vec();
                let mut sorted = x.clone();
                sorted.sort_unstable();
                let (lw, lc) = unpack(t[0]);
                let p = d - lw.count_ones() as usize;
                let mut best = u64::MAX;
                // g moves position i to perm[i]; keep those with g·x = sorted
                for (g, perm) in self.perms.iter().enumerate() {
                    if (0..x.len()).all(|i| sorted[perm[i]] == x[i]) {
                        best = best.min(pack(lw, action.act(g, p, lc)));
                    }
                }
                t[0] = best;
                t[s..].copy_from_slice(&sorted);
            }
        }
    }

    /// True if `t` (sorted in its symmetric part) is the canonical
    /// representative of its orbit.
    fn is_canonical(&self, t: &[u64], d: usize) -> bool {
        let Some(action) = self.lead() else {
            return true;
        };
        let s = self.sym_start;
        let x = &t[s..];
        let (lw, lc) = unpack(t[0]);
        let p = d - lw.count_ones() as usize;
        for (g, perm) in self.perms.iter().enumerate().skip(1) {
            if (0..x.len()).all(|i| x[perm[i]] == x[i])
                && pack(lw, action.act(g, p, lc)) < t[0]
            {
                return false;
            }
        }
        true
    }

    fn enumerate(&self, d: usize, options: &[Vec<u64>], arena: &mut Vec<u64>, budget_left: usize) -> Result<()> {
        let maxcov: Vec<usize> = self
            .spec
            .factors
            .iter()
            .map(|f| f.dim().min(d))
            .collect();
        let mut suffix = vec![0usize; self.m + 1];
        for f in (0..self.m).rev() {
            suffix[f] = suffix[f + 1] + maxcov[f];
        }
        let mut tuple = vec![0u64; self.m];
        let mut idx = vec![0usize; self.m];
        let mut produced = 0usize;
        self.recurse(d, 0, low_bits(d), options, &suffix, &mut tuple, &mut idx, arena, &mut produced, budget_left)
    }

    #[allow(clippy::too_many_arguments)]
    fn recurse(
        &self,
        d: usize,
        f: usize,
        uncovered: u64,
        options: &[Vec<u64>],
        suffix: &[usize],
        tuple: &mut [u64],
        idx: &mut [usize],
        arena: &mut Vec<u64>,
        produced: &mut usize,
        budget_left: usize,
    ) -> Result<()> {
        if f == self.m {
            if uncovered == 0 && self.is_canonical(tuple, d) {
                *produced += 1;
                if *produced > budget_left {
                    return Err(Error::BudgetExceeded {
                        construction: self.spec.label.clone(),
                        budget: self.spec.budget,
                        census: Vec::new(),
                    });
                }
                arena.extend_from_slice(tuple);
            }
            return Ok(());
        }
        if uncovered.count_ones() as usize > suffix[f] {
            return Ok(());
        }
        let start = if self.quotienting() && f > self.sym_start {
            idx[f - 1]
        } else {
            0
        };
        for (k, &code) in options[f].iter().enumerate().skip(start) {
            let (w, _) = unpack(code);
            tuple[f] = code;
            idx[f] = k;
            self.recurse(d, f + 1, uncovered & w, options, suffix, tuple, idx, arena, produced, budget_left)?;
        }
        Ok(())
    }
}

pub(crate) fn build(spec: &TupleSpec<'_>) -> Result<TupleSpace> {
    let m = spec.factors.len();
    if m == 0 {
        return Err(Error::InvalidParameter("empty product".into()));
    }
    let (sym_start, n_sym) = match spec.symmetry {
        Symmetry::None => (m, 0),
        Symmetry::Quotient { n, lead } => (usize::from(lead.is_some()), n),
        Symmetry::Materialize { n } => (0, n),
    };
    if !matches!(spec.symmetry, Symmetry::None) {
        if m - sym_start != n_sym {
            return Err(Error::InvalidParameter("symmetric factor count mismatch".into()));
        }
        if spec.factors[sym_start..].iter().any(|f| **f != *spec.factors[sym_start]) {
            return Err(Error::InvalidParameter("permuted factors must be identical".into()));
        }
    }
    let perms = if n_sym > 0 { permutations(n_sym) } else { vec![Vec::new()] };
    if let Symmetry::Quotient { lead: Some(a), .. } = spec.symmetry {
        if a.elements() != perms.as_slice() {
            return Err(Error::Action("lead action must list S_n in lexicographic order".into()));
        }
        a.validate(spec.factors[0])?;
    }
    let engine = Engine { spec, m, sym_start, perms };
    let full_dim: usize = spec.factors.iter().map(|f| f.dim()).sum();
    let top = spec.max_dim.map_or(full_dim, |c| c.min(full_dim));
    if top > MAX_TUPLE_DIM {
        return Err(Error::InvalidParameter(format!(
            "{}: dimension {top} exceeds the supported {MAX_TUPLE_DIM}",
            spec.label
        )));
    }

    let mut counts: Vec<usize> = Vec::new();
    let mut faces: Vec<Vec<Face>> = Vec::new();
    let mut tuples: Vec<Vec<u64>> = Vec::new();
    let mut total = 0usize;
    let over_budget = |counts: &[usize], extra: usize| Error::BudgetExceeded {
        construction: spec.label.clone(),
        budget: spec.budget,
        census: counts.iter().copied().chain(std::iter::once(extra)).collect(),
    };

    for d in 0..=top {
        let options: Vec<Vec<u64>> = spec
            .factors
            .iter()
            .map(|f| factor_options(f, d, spec.smash))
            .collect();
        let mut arena = Vec::new();
        engine
            .enumerate(d, &options, &mut arena, spec.budget.saturating_sub(total))
            .map_err(|e| match e {
                Error::BudgetExceeded { .. } => over_budget(&counts, arena.len() / m),
                other => other,
            })?;
        let offset = usize::from(spec.smash && d == 0);
        let n_cells = arena.len() / m + offset;
        total += n_cells;
        if total > spec.budget {
            return Err(over_budget(&counts, n_cells));
        }

        let mut fs: Vec<Face> = Vec::with_capacity(if d == 0 { 0 } else { n_cells * (d + 1) });
        if d > 0 {
            let mut t = vec![0u64; m];
            for cell in 0..n_cells {
                let row = &arena[cell * m..cell * m + m];
                for i in 0..=d {
                    fs.push(face_of_tuple(&engine, spec, row, d, i, &tuples, &mut t));
                }
            }
        }
        counts.push(n_cells);
        faces.push(fs);
        tuples.push(arena);
    }

    let basepoint = if spec.smash {
        0
    } else {
        let key: Vec<u64> = spec
            .factors
            .iter()
            .map(|f| pack(0, f.basepoint()))
            .collect();
        find(&tuples[0], m, &key).expect("basepoint tuple exists") as u32
    };
    let space = SimplicialSet::from_parts_unchecked(counts, faces, basepoint)
        .mark_skeleton(top < full_dim || spec.factors.iter().any(|f| f.is_skeleton()));
    let mut out = TupleSpace {
        space,
        arity: m,
        smash: spec.smash,
        tuples,
        action: None,
    };
    if let Symmetry::Materialize { .. } = spec.symmetry {
        out.action = Some(materialized_action(&out, &engine.perms));
    }
    Ok(out)
}

fn face_of_tuple(
    engine: &Engine<'_>,
    spec: &TupleSpec<'_>,
    row: &[u64],
    d: usize,
    i: usize,
    tuples: &[Vec<u64>],
    t: &mut [u64],
) -> Face {
    let m = row.len();
    let mut common = u64::MAX;
    for f in 0..m {
        let (w, c) = unpack(row[f]);
        let x = spec.factors[f];
        let face = x.face_of(d, Face { word: OperatorWord::from_mask(w), target: c }, i);
        if spec.smash && face.target == x.basepoint() && face.word.len() == d - 1 {
            return Face {
                word: OperatorWord::full(d - 1),
                target: 0,
            };
        }
        common &= face.word.mask();
        t[f] = pack(face.word.mask(), face.target);
    }
    let common = common & low_bits(d - 1);
    if common != 0 {
        for code in t.iter_mut() {
            let (w, c) = unpack(*code);
            *code = pack(compress(w, common), c);
        }
    }
    let td = d - 1 - common.count_ones() as usize;
    engine.canonicalize(t, td);
    let offset = usize::from(spec.smash && td == 0);
    let idx = find(&tuples[td], m, t).unwrap_or_else(|| {
        panic!("{}: face tuple missing in dimension {td}", spec.label)
    });
    Face {
        word: OperatorWord::from_mask(common),
        target: (idx + offset) as u32,
    }
}

fn materialized_action(space: &TupleSpace, perms: &[Vec<usize>]) -> GroupAction {
    let m = space.arity;
    let dims = space.space.counts().len();
    let mut tables = Vec::with_capacity(perms.len());
    for perm in perms {
        let mut table = Vec::with_capacity(dims);
        for d in 0..dims {
            let offset = space.offset(d);
            let mut row = Vec::with_capacity(space.space.count(d));
            if offset == 1 {
                row.push(0);
            }
            let arena = &space.tuples[d];
            let mut moved = vec![0u64; m];
            for cell in 0..arena.len() / m {
                for (i, &code) in arena[cell * m..cell * m + m].iter().enumerate() {
                    moved[perm[i]] = code;
                }
                let j = find(arena, m, &moved).expect("permuted tuple present");
                row.push((j + offset) as u32);
            }
            table.push(row);
        }
        tables.push(table);
    }
    GroupAction::new(perms.to_vec(), tables).expect("consistent tables")
}

/// The product `X × Y`, with the pair behind each cell.
pub fn product(x: &SimplicialSet, y: &SimplicialSet) -> TupleSpace {
    product_of(&[x, y])
}

/// The product of several factors.
pub fn product_of(factors: &[&SimplicialSet]) -> TupleSpace {
    build(&TupleSpec {
        factors: factors.to_vec(),
        smash: false,
        symmetry: Symmetry::None,
        max_dim: None,
        budget: usize::MAX,
        label: "product".into(),
    })
    .expect("unbounded product")
}

/// `X ∧ Y = X × Y / X ∨ Y`; vertex 0 is the collapsed wedge.
pub fn smash(x: &SimplicialSet, y: &SimplicialSet) -> SimplicialSet {
    build(&TupleSpec {
        factors: vec![x, y],
        smash: true,
        symmetry: Symmetry::None,
        max_dim: None,
        budget: usize::MAX,
        label: "smash".into(),
    })
    .expect("unbounded smash")
    .into_space()
}

/// The `n`-fold smash power together with the action of `S_n` permuting the
/// factors (available through [`TupleSpace::action`]).
pub fn smash_power(x: &SimplicialSet, n: usize, budget: usize) -> Result<TupleSpace> {
    if n == 0 {
        return Err(Error::InvalidParameter("smash power needs n >= 1".into()));
    }
    build(&TupleSpec {
        factors: vec![x; n],
        smash: true,
        symmetry: Symmetry::Materialize { n },
        max_dim: None,
        budget,
        label: format!("smash power ^{n}"),
    })
}

/// The `n`-fold product with its permutation action.
pub fn power_with_action(x: &SimplicialSet, n: usize, budget: usize) -> Result<TupleSpace> {
    if n == 0 {
        return Err(Error::InvalidParameter("power needs n >= 1".into()));
    }
    build(&TupleSpec {
        factors: vec![x; n],
        smash: false,
        symmetry: Symmetry::Materialize { n },
        max_dim: None,
        budget,
        label: format!("power ^{n}"),
    })
}

/// `X^n / S_n` (or `X^(n) / S_n` when `smash`), optionally smashed on the
/// left with a space carrying its own `S_n` action and quotiented by the
/// diagonal action. Built one canonical tuple per orbit.
pub fn symmetric_quotient(
    x: &SimplicialSet,
    n: usize,
    smash: bool,
    lead: Option<(&SimplicialSet, &GroupAction)>,
    max_dim: Option<usize>,
    budget: usize,
    label: &str,
) -> Result<TupleSpace> {
    if n == 0 {
        return Err(Error::InvalidParameter("symmetric quotient needs n >= 1".into()));
    }
    let mut factors = Vec::with_capacity(n + 1);
    if let Some((l, _)) = lead {
        factors.push(l);
    }
    factors.extend(std::iter::repeat_n(x, n));
    build(&TupleSpec {
        factors,
        smash,
        symmetry: Symmetry::Quotient {
            n,
            lead: lead.map(|(_, a)| a),
        },
        max_dim,
        budget,
        label: label.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::spaces::{minimal_sphere, point, standard_simplex, torus};

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn gosper_enumerates_all_subsets() {
        for n in 0..8 {
            for r in 0..=n {
                let s = subsets_of_size(n, r);
                assert_eq!(s.len(), binom(n, r));
                assert!(s.iter().all(|m| m.count_ones() as usize == r && *m < 1 << n));
            }
        }
    }

    #[test]
    fn square_has_two_triangles() {
        let i = standard_simplex(1);
        let sq = product(&i, &i);
        sq.space().validate().unwrap();
        assert_eq!(sq.space().counts(), &[4, 5, 2]);
    }

    #[test]
    fn product_census_is_shuffle_count() {
        let x = torus();
        let y = standard_simplex(2);
        let p = product(&x, &y);
        p.space().validate().unwrap();
        for d in 0..=4 {
            let mut expected = 0;
            for i in 0..=d {
                for j in 0..=d {
                    // an (i, j) pair of cells spans d-simplices when max(i,j) <= d <= i+j
                    if i.max(j) <= d && d <= i + j {
                        expected += x.count(i) * y.count(j) * binom(d, i) * binom(i, d - j);
                    }
                }
            }
            assert_eq!(p.space().count(d), expected, "dimension {d}");
        }
    }

    #[test]
    fn product_with_point_is_identity_census() {
        let x = torus();
        let p = product(&point(), &x);
        assert_eq!(p.space().counts(), x.counts());
    }

    #[test]
    fn smash_power_census_and_action() {
        let s1 = minimal_sphere(1).unwrap();
        let sp = smash_power(&s1, 3, usize::MAX).unwrap();
        sp.space().validate().unwrap();
        // 3! top cells, collapsed basepoint
        assert_eq!(sp.space().count(3), 6);
        assert_eq!(sp.space().count(0), 1);
        sp.action().unwrap().validate(sp.space()).unwrap();
    }

    #[test]
    fn projection_bookkeeping() {
        let i = standard_simplex(1);
        let s1 = minimal_sphere(1).unwrap();
        let p = product(&i, &s1);
        for d in 0..=p.space().dim() {
            for c in 0..p.space().count(d) as u32 {
                let a = p.component(d, c, 0);
                let b = p.component(d, c, 1);
                assert_eq!(a.0.mask() & b.0.mask(), 0);
                assert_eq!(p.lookup(d, &[a, b]), Some(c));
            }
        }
    }
}
