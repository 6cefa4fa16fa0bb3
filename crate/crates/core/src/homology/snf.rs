//! Integer Smith normal form.
//!
//! The sparse route eliminates on unit entries first, choosing pivots to
//! keep fill-in low. Each unit pivot splits off an identity block, so only
//! the columns left without a unit entry go through a dense elimination
//! over arbitrary-precision integers.
//! Arithmetic is done in `i64` with overflow checks and redone in `BigInt`
//! if anything overflows.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::chains::SparseMatrix;

pub(crate) trait Scalar: Clone + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn times(&self, b: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        q.checked_mul(*b).and_then(|p| self.checked_sub(p))
    }
    fn times(&self, b: &Self) -> Option<Self> {
        self.checked_mul(*b)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn times(&self, b: &Self) -> Option<Self> {
        Some(self * b)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

type Column<T> = Vec<(u32, T)>;

/// `target - q * src` on sorted sparse columns.
fn sub_scaled<T: Scalar>(target: &[(u32, T)], q: &T, src: &[(u32, T)]) -> Option<Column<T>> {
    let mut out = Vec::with_capacity(target.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < src.len() {
        let ti = target.get(i).map(|e| e.0);
        let sj = src.get(j).map(|e| e.0);
        match (ti, sj) {
            (Some(a), Some(b)) if a == b => {
                let v = target[i].1.sub_mul(q, &src[j].1)?;
                if !v.is_zero() {
                    out.push((a, v));
                }
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a < b => {
                out.push(target[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(target[i].clone());
                i += 1;
            }
            (_, Some(b)) => {
                let v = T::from_i64(0).sub_mul(q, &src[j].1)?;
                out.push((b, v));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    Some(out)
}

/// Result of reducing one boundary matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub rank: usize,
    /// Nonzero invariant factors, in divisibility order.
    pub factors: Vec<BigInt>,
    /// For each row, whether it carries a unit pivot (usable for clearing
    /// the corresponding column one degree down).
    pub unit_pivot_rows: Vec<bool>,
}

/// Reduces `m`, skipping the columns flagged in `cleared` (known to reduce
/// to zero).
pub fn reduce(m: &SparseMatrix, cleared: Option<&[bool]>) -> Reduction {
    reduce_generic::<i64>(m, cleared).unwrap_or_else(|| {
        reduce_generic::<BigInt>(m, cleared).expect("bigint arithmetic cannot overflow")
    })
}

/// Walks the old and new row sets of a column and updates the row index.
fn reindex<T>(k: u32, old: &[(u32, T)], new: &[(u32, T)], row_count: &mut [u32], row_cols: &mut [Vec<u32>]) {
    let (mut a, mut b) = (0, 0);
    while a < old.len() || b < new.len() {
        let ra = old.get(a).map_or(u32::MAX, |e| e.0);
        let rb = new.get(b).map_or(u32::MAX, |e| e.0);
        if ra == rb {
            a += 1;
            b += 1;
        } else if ra < rb {
            row_count[ra as usize] -= 1;
            a += 1;
        } else {
            row_count[rb as usize] += 1;
            row_cols[rb as usize].push(k);
            b += 1;
        }
    }
}

/// Sparse elimination on unit pivots. The shortest live column is taken
/// first and pivots on its unit entry in the sparsest row; that row is then
/// cleared from every other column. Whatever has no unit entry left goes to
/// the dense elimination.
fn reduce_generic<T: Scalar>(m: &SparseMatrix, cleared: Option<&[bool]>) -> Option<Reduction> {
    let nrows = m.rows;
    let mut cols: Vec<Column<T>> = m
        .cols
        .iter()
        .enumerate()
        .map(|(j, c)| {
            if cleared.is_some_and(|cl| cl[j]) {
                Vec::new()
            } else {
                c.iter().map(|&(r, v)| (r, T::from_i64(v))).collect()
            }
        })
        .collect();
    let mut row_cols: Vec<Vec<u32>> = vec![Vec::new(); nrows];
    let mut row_count = vec![0u32; nrows];
    let mut heap = BinaryHeap::new();
    for (j, c) in cols.iter().enumerate() {
        for (r, _) in c {
            row_cols[*r as usize].push(j as u32);
            row_count[*r as usize] += 1;
        }
        if !c.is_empty() {
            heap.push(Reverse((c.len() as u32, j as u32)));
        }
    }
    let mut alive = vec![true; cols.len()];
    let mut unit_pivot_rows = vec![false; nrows];
    let mut pivots = 0usize;
    while let Some(Reverse((len, j))) = heap.pop() {
        let j = j as usize;
        if !alive[j] || cols[j].len() != len as usize {
            continue;
        }
        let Some(&(i, ref u)) = cols[j]
            .iter()
            .filter(|(_, v)| v.is_unit())
            .min_by_key(|(r, _)| row_count[*r as usize])
        else {
            continue;
        };
        let u = u.clone();
        let pcol = std::mem::take(&mut cols[j]);
        alive[j] = false;
        for (r, _) in &pcol {
            row_count[*r as usize] -= 1;
        }
        for k in std::mem::take(&mut row_cols[i as usize]) {
            let k = k as usize;
            if !alive[k] {
                continue;
            }
            let Ok(pos) = cols[k].binary_search_by_key(&i, |e| e.0) else {
                continue;
            };
            let q = cols[k][pos].1.times(&u)?;
            let new = sub_scaled(&cols[k], &q, &pcol)?;
            reindex(k as u32, &cols[k], &new, &mut row_count, &mut row_cols);
            cols[k] = new;
            if !cols[k].is_empty() {
                heap.push(Reverse((cols[k].len() as u32, k as u32)));
            }
        }
        unit_pivot_rows[i as usize] = true;
        pivots += 1;
    }

    let rest: Vec<&Column<T>> = cols
        .iter()
        .zip(&alive)
        .filter(|(c, &a)| a && !c.is_empty())
        .map(|(c, _)| c)
        .collect();
    let mut factors: Vec<BigInt> = vec![BigInt::one(); pivots];
    if !rest.is_empty() {
        let mut rows: Vec<u32> = rest.iter().flat_map(|c| c.iter().map(|e| e.0)).collect();
        rows.sort_unstable();
        rows.dedup();
        let mut dense = vec![vec![BigInt::zero(); rest.len()]; rows.len()];
        for (j, col) in rest.iter().enumerate() {
            for (r, v) in col.iter() {
                let i = rows.binary_search(r).unwrap();
                dense[i][j] = v.to_big();
            }
        }
        let snf = smith_normal_form_dense(&dense, rest.len(), false);
        factors.extend(snf.diagonal.into_iter().filter(|d| !Zero::is_zero(d)));
    }
    Some(Reduction {
        rank: factors.len(),
        factors,
        unit_pivot_rows,
    })
}

/// Unimodular `U` (rows) and `V` (columns) with `U·A·V = D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificates {
    pub left: Vec<Vec<BigInt>>,
    pub right: Vec<Vec<BigInt>>,
}

/// Diagonal of the Smith normal form (length `min(rows, cols)`, each entry
/// nonnegative and dividing the next), with optional certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub certificates: Option<Certificates>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !Zero::is_zero(*d)).count()
    }
}

/// Smith normal form of a sparse matrix.
pub fn smith_normal_form(m: &SparseMatrix) -> SnfResult {
    let red = reduce(m, None);
    let mut diagonal = red.factors;
    diagonal.resize(m.rows.min(m.ncols()), BigInt::zero());
    SnfResult {
        diagonal,
        certificates: None,
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Dense elimination: smallest-magnitude pivot, ties broken by the fewest
/// nonzeros in its row and column.
pub fn smith_normal_form_dense(a: &[Vec<BigInt>], ncols: usize, certify: bool) -> SnfResult {
    let m = a.len();
    let n = ncols;
    let mut a: Vec<Vec<BigInt>> = a.to_vec();
    let mut u = if certify { identity(m) } else { Vec::new() };
    let mut v = if certify { identity(n) } else { Vec::new() };
    let steps = m.min(n);
    'outer: for t in 0..steps {
        loop {
            let mut best: Option<(usize, usize, BigInt, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if Zero::is_zero(&a[i][j]) {
                        continue;
                    }
                    let mag = a[i][j].abs();
                    let better = match &best {
                        None => true,
                        Some((_, _, bm, _)) if mag < *bm => true,
                        Some((_, _, bm, bf)) if mag == *bm => {
                            let fill = (t..n).filter(|&k| !Zero::is_zero(&a[i][k])).count()
                                + (t..m).filter(|&k| !Zero::is_zero(&a[k][j])).count();
                            fill < *bf
                        }
                        _ => false,
                    };
                    if better {
                        let fill = (t..n).filter(|&k| !Zero::is_zero(&a[i][k])).count()
                            + (t..m).filter(|&k| !Zero::is_zero(&a[k][j])).count();
                        best = Some((i, j, mag, fill));
                    }
                }
            }
            let Some((pi, pj, _, _)) = best else {
                break 'outer;
            };
            a.swap(t, pi);
            if certify {
                u.swap(t, pi);
            }
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            if certify {
                for row in v.iter_mut() {
                    row.swap(t, pj);
                }
            }
            let mut clean = true;
            for i in t + 1..m {
                if Zero::is_zero(&a[i][t]) {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (top, rest) = a.split_at_mut(i);
                for (x, y) in rest[0].iter_mut().zip(&top[t]).skip(t) {
                    *x -= &q * y;
                }
                if certify {
                    let (top, rest) = u.split_at_mut(i);
                    for (x, y) in rest[0].iter_mut().zip(&top[t]) {
                        *x -= &q * y;
                    }
                }
                clean &= Zero::is_zero(&a[i][t]);
            }
            for j in t + 1..n {
                if Zero::is_zero(&a[t][j]) {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let y = row[t].clone();
                    row[j] -= &q * y;
                }
                if certify {
                    for row in v.iter_mut() {
                        let y = row[t].clone();
                        row[j] -= &q * y;
                    }
                }
                clean &= Zero::is_zero(&a[t][j]);
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !Zero::is_zero(&a[i][j].mod_floor(&a[t][t])))
            });
            if let Some(i) = bad {
                let (top, rest) = a.split_at_mut(i);
                for (x, y) in top[t].iter_mut().zip(&rest[0]) {
                    *x += y;
                }
                if certify {
                    let (top, rest) = u.split_at_mut(i);
                    for (x, y) in top[t].iter_mut().zip(&rest[0]) {
                        *x += y;
                    }
                }
                continue;
            }
            break;
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            if certify {
                for x in u[t].iter_mut() {
                    *x = -&*x;
                }
            }
        }
    }
    let diagonal = (0..steps).map(|t| a[t][t].clone()).collect();
    SnfResult {
        diagonal,
        certificates: certify.then_some(Certificates { left: u, right: v }),
    }
}

/// `U·A·V`, for checking certificates.
pub fn certificate_product(a: &[Vec<BigInt>], ncols: usize, c: &Certificates) -> Vec<Vec<BigInt>> {
    let m = a.len();
    let ua: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            (0..ncols)
                .map(|j| (0..m).map(|k| &c.left[i][k] * &a[k][j]).sum())
                .collect()
        })
        .collect();
    (0..m)
        .map(|i| {
            (0..ncols)
                .map(|j| (0..ncols).map(|k| &ua[i][k] * &c.right[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Converts an invariant factor to `u64`.
pub(crate) fn factor_to_u64(f: &BigInt) -> Option<u64> {
    f.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn diag(d: &[i64]) -> Vec<BigInt> {
        d.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn two_three_becomes_one_six() {
        let a = big(&[&[2, 0], &[0, 3]]);
        let r = smith_normal_form_dense(&a, 2, true);
        assert_eq!(r.diagonal, diag(&[1, 6]));
        let c = r.certificates.unwrap();
        assert_eq!(certificate_product(&a, 2, &c), big(&[&[1, 0], &[0, 6]]));
        let s = smith_normal_form(&SparseMatrix::from_dense(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal, diag(&[1, 6]));
    }

    #[test]
    fn zero_and_scalar_matrices() {
        let z = smith_normal_form(&SparseMatrix::zeros(3, 2));
        assert_eq!(z.diagonal, diag(&[0, 0]));
        let r = smith_normal_form_dense(&big(&[&[2, 0], &[0, 2]]), 2, false);
        assert_eq!(r.diagonal, diag(&[2, 2]));
    }

    #[test]
    fn large_entries() {
        let huge = i64::MAX / 2;
        let m = SparseMatrix::from_dense(&[vec![huge, 1], vec![huge, 3]]);
        let s = smith_normal_form(&m);
        // determinant is 2 * huge
        assert_eq!(s.diagonal, vec![BigInt::one(), BigInt::from(huge) * 2]);
    }
}
