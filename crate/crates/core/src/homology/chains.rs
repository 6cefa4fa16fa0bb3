//! Sparse integer matrices and normalized chain complexes.

use crate::error::{Error, Result};
use crate::sset::SimplicialSet;

/// Column-major sparse matrix; each column lists `(row, value)` with rows
/// strictly increasing and no zero values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let rows = dense.len();
        let ncols = dense.first().map_or(0, |r| r.len());
        let cols = (0..ncols)
            .map(|j| {
                (0..rows)
                    .filter(|&i| dense[i][j] != 0)
                    .map(|i| (i as u32, dense[i][j]))
                    .collect()
            })
            .collect();
        SparseMatrix { rows, cols }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.cols.len()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                out[i as usize][j] = v;
            }
        }
        out
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// `self * other`, or an error if an entry overflows.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.ncols() != other.rows {
            return Err(Error::InvalidParameter("matrix shapes do not compose".into()));
        }
        let mut acc = vec![0i64; self.rows];
        let mut touched = Vec::new();
        let mut cols = Vec::with_capacity(other.ncols());
        for col in &other.cols {
            for &(k, b) in col {
                for &(i, a) in &self.cols[k as usize] {
                    let slot = &mut acc[i as usize];
                    if *slot == 0 {
                        touched.push(i);
                    }
                    *slot = a
                        .checked_mul(b)
                        .and_then(|p| slot.checked_add(p))
                        .ok_or_else(|| Error::InvalidParameter("overflow in product".into()))?;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut out = Vec::new();
            for &i in &touched {
                let v = std::mem::take(&mut acc[i as usize]);
                if v != 0 {
                    out.push((i, v));
                }
            }
            touched.clear();
            cols.push(out);
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }
}

/// `boundary[d]` maps `d`-chains to `(d-1)`-chains; `boundary[0]` is the
/// zero map to the zero module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    pub ranks: Vec<usize>,
    pub boundary: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn top(&self) -> usize {
        self.ranks.len().saturating_sub(1)
    }

    pub fn rank(&self, d: usize) -> usize {
        self.ranks.get(d).copied().unwrap_or(0)
    }

    /// Verifies `∂_{d-1} ∂_d = 0` in every degree.
    pub fn check(&self) -> Result<()> {
        for d in 2..self.boundary.len() {
            if !self.boundary[d - 1].mul(&self.boundary[d])?.is_zero() {
                return Err(Error::Structure(format!("boundary squared is nonzero in degree {d}")));
            }
        }
        Ok(())
    }
}

/// The normalized chain complex of `x` in degrees `0..=max_degree` (default
/// all): faces landing on degenerate simplices are dropped.
pub fn normalized_chains(x: &SimplicialSet, max_degree: Option<usize>) -> ChainComplex {
    let top = max_degree.map_or(x.dim(), |m| m.min(x.dim()));
    let ranks: Vec<usize> = (0..=top).map(|d| x.count(d)).collect();
    let mut boundary = vec![SparseMatrix::zeros(0, x.count(0))];
    for d in 1..=top {
        let mut cols = Vec::with_capacity(x.count(d));
        for c in 0..x.count(d) as u32 {
            let mut col: Vec<(u32, i64)> = Vec::with_capacity(d + 1);
            for (i, f) in x.faces_of(d, c).iter().enumerate() {
                if f.is_degenerate() {
                    continue;
                }
                col.push((f.target, if i % 2 == 0 { 1 } else { -1 }));
            }
            col.sort_unstable_by_key(|e| e.0);
            let mut merged: Vec<(u32, i64)> = Vec::with_capacity(col.len());
            for (r, v) in col {
                match merged.last_mut() {
                    Some(last) if last.0 == r => last.1 += v,
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|e| e.1 != 0);
            cols.push(merged);
        }
        boundary.push(SparseMatrix {
            rows: x.count(d - 1),
            cols,
        });
    }
    ChainComplex { ranks, boundary }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{minimal_sphere, standard_simplex, torus};

    #[test]
    fn interval_boundary() {
        let c = normalized_chains(&standard_simplex(1), None);
        assert_eq!(c.boundary[1].to_dense(), vec![vec![-1], vec![1]]);
    }

    #[test]
    fn minimal_sphere_has_zero_boundaries() {
        let c = normalized_chains(&minimal_sphere(2).unwrap(), None);
        assert!(c.boundary.iter().all(SparseMatrix::is_zero));
    }

    #[test]
    fn boundary_squares_to_zero() {
        normalized_chains(&torus(), None).check().unwrap();
        normalized_chains(&standard_simplex(4), None).check().unwrap();
    }
}
