use serde::{Deserialize, Serialize};

use super::word::{compose, face_step, FaceStep, OperatorWord};
use crate::error::{Error, Result};

/// A simplex of a simplicial set written as `s_word target`, with `target` a
/// nondegenerate cell. The dimension of the target is implied by context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    pub word: OperatorWord,
    pub target: u32,
}

impl Face {
    pub fn nondegenerate(target: u32) -> Self {
        Face { word: OperatorWord::IDENTITY, target }
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_identity()
    }
}

/// Number of nondegenerate cells in each dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCensus {
    pub counts: Vec<usize>,
}

impl CellCensus {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn get(&self, d: usize) -> usize {
        self.counts.get(d).copied().unwrap_or(0)
    }
}

/// A finite simplicial set, stored by its nondegenerate cells.
///
/// The `j`-th face of the `i`-th nondegenerate `d`-cell is
/// `faces[d][i * (d + 1) + j]`, a degeneracy word applied to a nondegenerate
/// cell of dimension `d - 1 - |word|`. Dimension 0 carries no faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSet {
    counts: Vec<usize>,
    faces: Vec<Vec<Face>>,
    basepoint: u32,
    skeleton: bool,
}

impl SimplicialSet {
    /// Assembles a simplicial set from raw parts and validates it.
    pub fn new(counts: Vec<usize>, faces: Vec<Vec<Face>>, basepoint: u32) -> Result<Self> {
        let x = Self::from_parts_unchecked(counts, faces, basepoint);
        x.validate()?;
        Ok(x)
    }

    pub(crate) fn from_parts_unchecked(
        mut counts: Vec<usize>,
        mut faces: Vec<Vec<Face>>,
        basepoint: u32,
    ) -> Self {
        while counts.len() > 1 && *counts.last().unwrap() == 0 {
            counts.pop();
        }
        faces.truncate(counts.len());
        while faces.len() < counts.len() {
            faces.push(Vec::new());
        }
        SimplicialSet {
            counts,
            faces,
            basepoint,
            skeleton: false,
        }
    }

    /// Marks this set as a truncated skeleton: its top dimension is an
    /// artifact of truncation, so homology there is not meaningful.
    pub(crate) fn mark_skeleton(mut self, skeleton: bool) -> Self {
        self.skeleton = skeleton;
        self
    }

    pub fn is_skeleton(&self) -> bool {
        self.skeleton
    }

    /// Highest dimension with a nondegenerate cell.
    pub fn dim(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn count(&self, d: usize) -> usize {
        self.counts.get(d).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn basepoint(&self) -> u32 {
        self.basepoint
    }

    pub fn set_basepoint(&mut self, v: u32) -> Result<()> {
        if (v as usize) >= self.count(0) {
            return Err(Error::Structure(format!("basepoint {v} is not a vertex")));
        }
        self.basepoint = v;
        Ok(())
    }

    pub fn census(&self) -> CellCensus {
        CellCensus {
            counts: self.counts.clone(),
        }
    }

    pub fn total_cells(&self) -> usize {
        self.counts.iter().sum()
    }

    /// The `j`-th face of nondegenerate cell `cell` of dimension `d >= 1`.
    #[inline]
    pub fn face(&self, d: usize, cell: u32, j: usize) -> Face {
        self.faces[d][cell as usize * (d + 1) + j]
    }

    /// All `d + 1` faces of a nondegenerate `d`-cell.
    #[inline]
    pub fn faces_of(&self, d: usize, cell: u32) -> &[Face] {
        let start = cell as usize * (d + 1);
        &self.faces[d][start..start + d + 1]
    }

    pub(crate) fn raw_faces(&self, d: usize) -> &[Face] {
        &self.faces[d]
    }

    /// `d_i` applied to the `dim`-simplex `simplex`, which may be degenerate.
    #[inline]
    pub fn face_of(&self, dim: usize, simplex: Face, i: usize) -> Face {
        match face_step(simplex.word, dim, i) {
            FaceStep::Degenerate(word) => Face {
                word,
                target: simplex.target,
            },
            FaceStep::Through { word, k } => {
                let q = dim - simplex.word.len();
                let inner = self.face(q, simplex.target, k);
                Face {
                    word: compose(word, inner.word, dim - 1),
                    target: inner.target,
                }
            }
        }
    }

    /// Dimension of the nondegenerate target of a `dim`-simplex.
    #[inline]
    pub fn target_dim(dim: usize, simplex: Face) -> usize {
        dim - simplex.word.len()
    }

    /// Checks every invariant: face targets exist in the right dimension, the
    /// simplicial identities `d_i d_j = d_{j-1} d_i` hold for `i < j` on every
    /// cell, and the basepoint is a vertex.
    pub fn validate(&self) -> Result<()> {
        if self.counts.is_empty() || self.counts[0] == 0 {
            return Err(Error::Structure("no vertices".into()));
        }
        if self.basepoint as usize >= self.counts[0] {
            return Err(Error::Structure(format!(
                "basepoint {} out of range",
                self.basepoint
            )));
        }
        if !self.faces[0].is_empty() {
            return Err(Error::Structure("0-cells carry no faces".into()));
        }
        for d in 1..self.counts.len() {
            if self.faces[d].len() != self.counts[d] * (d + 1) {
                return Err(Error::Structure(format!(
                    "dimension {d}: expected {} faces, found {}",
                    self.counts[d] * (d + 1),
                    self.faces[d].len()
                )));
            }
            for (n, f) in self.faces[d].iter().enumerate() {
                let len = f.word.len();
                if len > d - 1 || (f.word.mask() >> (d - 1)) != 0 {
                    return Err(Error::Structure(format!(
                        "dimension {d} cell {}: face word {} does not act on a {}-simplex",
                        n / (d + 1),
                        f.word,
                        d - 1
                    )));
                }
                let td = d - 1 - len;
                if f.target as usize >= self.count(td) {
                    return Err(Error::Structure(format!(
                        "dimension {d} cell {}: face {} targets missing {td}-cell {}",
                        n / (d + 1),
                        n % (d + 1),
                        f.target
                    )));
                }
            }
        }
        for d in 2..self.counts.len() {
            for c in 0..self.counts[d] as u32 {
                for j in 1..=d {
                    for i in 0..j {
                        let lhs = self.face_of(d - 1, self.face(d, c, j), i);
                        let rhs = self.face_of(d - 1, self.face(d, c, i), j - 1);
                        if lhs != rhs {
                            return Err(Error::Structure(format!(
                                "dimension {d} cell {c}: d{i} d{j} != d{} d{i}",
                                j - 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Renumbers the vertices, edges, ... by the given per-dimension
    /// permutations (`perm[d][old] = new`).
    pub fn relabel(&self, perm: &[Vec<u32>]) -> Result<SimplicialSet> {
        if perm.len() != self.counts.len()
            || perm.iter().zip(&self.counts).any(|(p, &c)| p.len() != c)
        {
            return Err(Error::InvalidParameter("relabeling has wrong shape".into()));
        }
        let mut faces: Vec<Vec<Face>> = vec![Vec::new(); self.counts.len()];
        for d in 1..self.counts.len() {
            let mut out = vec![Face::nondegenerate(0); self.faces[d].len()];
            for c in 0..self.counts[d] {
                let nc = perm[d][c] as usize;
                for j in 0..=d {
                    let f = self.faces[d][c * (d + 1) + j];
                    let td = d - 1 - f.word.len();
                    out[nc * (d + 1) + j] = Face {
                        word: f.word,
                        target: perm[td][f.target as usize],
                    };
                }
            }
            faces[d] = out;
        }
        SimplicialSet::new(
            self.counts.clone(),
            faces,
            perm[0][self.basepoint as usize],
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SimplicialSetDocument = serde_json::from_str(text)?;
        Self::from_document(doc)
    }

    pub fn to_document(&self) -> SimplicialSetDocument {
        let faces = (0..self.counts.len())
            .map(|d| {
                (0..self.counts[d] as u32)
                    .map(|c| {
                        if d == 0 {
                            Vec::new()
                        } else {
                            self.faces_of(d, c)
                                .iter()
                                .map(|f| (f.word, f.target))
                                .collect()
                        }
                    })
                    .collect()
            })
            .collect();
        SimplicialSetDocument {
            dims: self.dim(),
            cells: self.counts.clone(),
            faces,
            basepoint: self.basepoint,
        }
    }

    pub fn from_document(doc: SimplicialSetDocument) -> Result<Self> {
        if doc.cells.len() != doc.dims + 1 || doc.faces.len() != doc.cells.len() {
            return Err(Error::Structure(
                "dims, cells and faces disagree in length".into(),
            ));
        }
        let mut faces = Vec::with_capacity(doc.cells.len());
        for (d, per_cell) in doc.faces.into_iter().enumerate() {
            if per_cell.len() != doc.cells[d] {
                return Err(Error::Structure(format!(
                    "dimension {d}: {} face lists for {} cells",
                    per_cell.len(),
                    doc.cells[d]
                )));
            }
            let mut flat = Vec::new();
            for list in per_cell {
                let expected = if d == 0 { 0 } else { d + 1 };
                if list.len() != expected {
                    return Err(Error::Structure(format!(
                        "dimension {d}: cell has {} faces",
                        list.len()
                    )));
                }
                flat.extend(list.into_iter().map(|(word, target)| Face { word, target }));
            }
            faces.push(flat);
        }
        let x = SimplicialSet {
            counts: doc.cells,
            faces,
            basepoint: doc.basepoint,
            skeleton: false,
        };
        x.validate()?;
        Ok(x)
    }
}

/// Serialized form: `{"dims", "cells", "faces", "basepoint"}` where
/// `faces[d][i][j] = [[degeneracy indices, decreasing], target]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimplicialSetDocument {
    pub dims: usize,
    pub cells: Vec<usize>,
    pub faces: Vec<Vec<Vec<(OperatorWord, u32)>>>,
    pub basepoint: u32,
}

/// Builder used by the constructions: cells are appended dimension by
/// dimension and given ids in insertion order.
#[derive(Clone, Debug, Default)]
pub(crate) struct Builder {
    counts: Vec<usize>,
    faces: Vec<Vec<Face>>,
}

impl Builder {
    pub fn new() -> Self {
        Builder::default()
    }

    fn ensure(&mut self, d: usize) {
        while self.counts.len() <= d {
            self.counts.push(0);
            self.faces.push(Vec::new());
        }
    }

    pub fn add_vertex(&mut self) -> u32 {
        self.ensure(0);
        self.counts[0] += 1;
        (self.counts[0] - 1) as u32
    }

    pub fn add_cell(&mut self, d: usize, faces: &[Face]) -> u32 {
        assert!(d >= 1 && faces.len() == d + 1);
        self.ensure(d);
        self.faces[d].extend_from_slice(faces);
        self.counts[d] += 1;
        (self.counts[d] - 1) as u32
    }

    pub fn finish(self, basepoint: u32) -> Result<SimplicialSet> {
        SimplicialSet::new(self.counts, self.faces, basepoint)
    }
}

/// A simplicial map recorded on nondegenerate cells: `images[d][c]` is the
/// image of cell `c` of dimension `d`, a (possibly degenerate) `d`-simplex of
/// the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    pub images: Vec<Vec<Face>>,
}

impl SimplicialMap {
    /// Image of an arbitrary `dim`-simplex of the source.
    #[inline]
    pub fn apply(&self, dim: usize, simplex: Face) -> Face {
        let td = dim - simplex.word.len();
        let img = self.images[td][simplex.target as usize];
        Face {
            word: compose(simplex.word, img.word, dim),
            target: img.target,
        }
    }

    pub fn identity(x: &SimplicialSet) -> Self {
        SimplicialMap {
            images: x
                .counts()
                .iter()
                .map(|&c| (0..c as u32).map(Face::nondegenerate).collect())
                .collect(),
        }
    }

    /// Checks `f(d_i c) = d_i f(c)` on every nondegenerate cell of `source`.
    pub fn check(&self, source: &SimplicialSet, target: &SimplicialSet) -> Result<()> {
        if self.images.len() != source.counts().len() {
            return Err(Error::Structure("map has wrong number of dimensions".into()));
        }
        for d in 0..source.counts().len() {
            if self.images[d].len() != source.count(d) {
                return Err(Error::Structure(format!("map incomplete in dimension {d}")));
            }
            for &img in &self.images[d] {
                if img.word.len() > d
                    || img.target as usize >= target.count(d - img.word.len())
                {
                    return Err(Error::Structure(format!(
                        "map sends a {d}-cell outside the target"
                    )));
                }
            }
        }
        for d in 1..source.counts().len() {
            for c in 0..source.count(d) as u32 {
                let img = self.images[d][c as usize];
                for i in 0..=d {
                    let a = self.apply(d - 1, source.face(d, c, i));
                    let b = target.face_of(d, img, i);
                    if a != b {
                        return Err(Error::Structure(format!(
                            "map does not commute with d{i} on {d}-cell {c}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}
