//! Quotients, pushouts along attaching maps, wedges and suspension.

use super::product::smash;
use super::simplicial_set::{Builder, Face, SimplicialMap, SimplicialSet};
use super::spaces::minimal_sphere;
use super::word::{compose, OperatorWord};
use crate::error::{Error, Result};

/// A cell reference `(dimension, id)`.
pub type Cell = (usize, u32);

/// Generators of an equivalence relation on the cells of a simplicial set.
///
/// `identify` glues two nondegenerate cells of the same dimension. Each
/// `collapse` group, together with all faces of its cells, is crushed to a
/// single new vertex; an empty group adds an isolated vertex.
#[derive(Clone, Debug, Default)]
pub struct Relation {
    identify: Vec<(Cell, Cell)>,
    collapse: Vec<Vec<Cell>>,
}

impl Relation {
    pub fn new() -> Self {
        Relation::default()
    }

    pub fn identify(mut self, a: Cell, b: Cell) -> Self {
        self.identify.push((a, b));
        self
    }

    pub fn collapse(mut self, group: Vec<Cell>) -> Self {
        self.collapse.push(group);
        self
    }

    pub fn is_trivial(&self) -> bool {
        self.identify.is_empty() && self.collapse.is_empty()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    /// Keeps the smaller root.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
}

/// Image of a `dim`-simplex under a partially built map.
fn apply(images: &[Vec<Face>], dim: usize, simplex: Face) -> Face {
    let img = images[dim - simplex.word.len()][simplex.target as usize];
    Face {
        word: compose(simplex.word, img.word, dim),
        target: img.target,
    }
}

fn check_cell(x: &SimplicialSet, (d, c): Cell) -> Result<()> {
    if c as usize >= x.count(d) {
        return Err(Error::InvalidParameter(format!("relation names missing {d}-cell {c}")));
    }
    Ok(())
}

/// The quotient `X / ~` and the quotient map.
pub fn quotient(x: &SimplicialSet, rel: &Relation) -> Result<(SimplicialSet, SimplicialMap)> {
    for &(a, b) in &rel.identify {
        if a.0 != b.0 {
            return Err(Error::DimensionMismatch(a.0, b.0));
        }
        check_cell(x, a)?;
        check_cell(x, b)?;
    }
    let dims = x.counts().len();
    let groups = rel.collapse.len();

    // close the collapse groups under faces; a cell in two groups merges them
    let mut group_of: Vec<Vec<Option<usize>>> = x.counts().iter().map(|&c| vec![None; c]).collect();
    let mut merge = UnionFind::new(groups);
    for (g, group) in rel.collapse.iter().enumerate() {
        let mut stack = Vec::new();
        for &cell in group {
            check_cell(x, cell)?;
            stack.push(cell);
        }
        while let Some((d, c)) = stack.pop() {
            match group_of[d][c as usize] {
                Some(h) if merge.find(h) == merge.find(g) => continue,
                Some(h) => merge.union(h, g),
                None => group_of[d][c as usize] = Some(g),
            }
            if d > 0 {
                for f in x.faces_of(d, c) {
                    stack.push((d - 1 - f.word.len(), f.target));
                }
            }
        }
    }

    let mut images: Vec<Vec<Face>> = Vec::with_capacity(dims);
    let mut b = Builder::new();
    let mut group_vertex = vec![0u32; groups];
    for d in 0..dims {
        let n = x.count(d);
        let extra = if d == 0 { groups } else { 0 };
        let mut uf = UnionFind::new(n + extra);
        for &((da, a), (_, bb)) in &rel.identify {
            if da == d {
                uf.union(a as usize, bb as usize);
            }
        }
        if d == 0 {
            for g in 0..groups {
                uf.union(n + g, n + merge.find(g));
            }
            for c in 0..n {
                if let Some(g) = group_of[0][c] {
                    uf.union(c, n + merge.find(g));
                }
            }
            let mut id = vec![u32::MAX; n + extra];
            for node in 0..n + extra {
                let r = uf.find(node);
                if id[r] == u32::MAX {
                    id[r] = b.add_vertex();
                }
                id[node] = id[r];
            }
            for g in 0..groups {
                group_vertex[g] = id[n + g];
            }
            images.push(id[..n].iter().map(|&v| Face::nondegenerate(v)).collect());
            continue;
        }

        // mapped faces of every cell, compared within each class
        let mapped = |c: u32, images: &[Vec<Face>]| -> Vec<Face> {
            x.faces_of(d, c).iter().map(|&f| apply(images, d - 1, f)).collect()
        };
        let mut class_image: Vec<Option<Face>> = vec![None; n];
        for c in 0..n {
            if let Some(g) = group_of[d][c] {
                let r = uf.find(c);
                let v = group_vertex[merge.find(g)];
                let img = Face {
                    word: OperatorWord::full(d),
                    target: v,
                };
                match class_image[r] {
                    Some(prev) if prev != img => {
                        return Err(Error::IncompatibleRelation(format!(
                            "{d}-cell {c} is collapsed to two different vertices"
                        )))
                    }
                    _ => class_image[r] = Some(img),
                }
            }
        }
        let mut class_faces: Vec<Option<Vec<Face>>> = vec![None; n];
        let mut row = vec![Face::nondegenerate(0); n];
        for c in 0..n {
            let r = uf.find(c);
            let faces = mapped(c as u32, &images);
            if let Some(img) = class_image[r] {
                let expected = Face {
                    word: OperatorWord::full(d - 1),
                    target: img.target,
                };
                if faces.iter().any(|f| *f != expected) {
                    return Err(Error::IncompatibleRelation(format!(
                        "{d}-cell {c} is glued to a collapsed cell but has uncollapsed faces"
                    )));
                }
                row[c] = img;
                continue;
            }
            match &class_faces[r] {
                Some(prev) => {
                    if *prev != faces {
                        return Err(Error::IncompatibleRelation(format!(
                            "identified {d}-cells {r} and {c} have different faces"
                        )));
                    }
                }
                None => {
                    let id = b.add_cell(d, &faces);
                    class_image[r] = Some(Face::nondegenerate(id));
                    class_faces[r] = Some(faces);
                }
            }
            row[c] = class_image[r].unwrap();
        }
        images.push(row);
    }
    let base = images[0][x.basepoint() as usize].target;
    let q = b.finish(base)?.mark_skeleton(x.is_skeleton());
    Ok((q, SimplicialMap { images }))
}

/// A simplicial map defined on a subcomplex `A ⊂ Y`: `images[d][c]` is the
/// image of cell `c` if it lies in `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMap {
    pub images: Vec<Vec<Option<Face>>>,
}

impl PartialMap {
    pub fn empty(y: &SimplicialSet) -> Self {
        PartialMap {
            images: y.counts().iter().map(|&c| vec![None; c]).collect(),
        }
    }

    pub fn set(&mut self, d: usize, cell: u32, image: Face) {
        self.images[d][cell as usize] = Some(image);
    }
}

/// The pushout `Z ∪_f Y` of `Z ← A → Y`, where `A` is the domain of `f`.
/// Cells of `Z` keep their ids; the cells of `Y \ A` follow in order. Returns
/// the pushout and the map `Y → Z ∪_f Y`.
pub fn attach(z: &SimplicialSet, y: &SimplicialSet, f: &PartialMap) -> Result<(SimplicialSet, SimplicialMap)> {
    let dims = y.counts().len().max(z.counts().len());
    if f.images.len() != y.counts().len()
        || f.images.iter().zip(y.counts()).any(|(r, &c)| r.len() != c)
    {
        return Err(Error::InvalidParameter("attaching map has wrong shape".into()));
    }
    let mut counts: Vec<usize> = (0..dims).map(|d| z.count(d)).collect();
    let mut faces: Vec<Vec<Face>> = (0..dims)
        .map(|d| if d < z.counts().len() { z.raw_faces(d).to_vec() } else { Vec::new() })
        .collect();
    let mut images: Vec<Vec<Face>> = Vec::with_capacity(y.counts().len());
    for d in 0..y.counts().len() {
        let mut row = Vec::with_capacity(y.count(d));
        for c in 0..y.count(d) as u32 {
            if let Some(img) = f.images[d][c as usize] {
                if img.word.len() > d || img.target as usize >= z.count(d - img.word.len()) {
                    return Err(Error::InvalidParameter(format!(
                        "attaching map sends {d}-cell {c} outside the target"
                    )));
                }
                row.push(img);
                continue;
            }
            if d > 0 {
                for &face in y.faces_of(d, c) {
                    faces[d].push(apply(&images, d - 1, face));
                }
            }
            row.push(Face::nondegenerate(counts[d] as u32));
            counts[d] += 1;
        }
        images.push(row);
    }
    // A must be a subcomplex and f must commute with faces on it
    for d in 1..y.counts().len() {
        for c in 0..y.count(d) as u32 {
            if f.images[d][c as usize].is_none() {
                continue;
            }
            for &face in y.faces_of(d, c) {
                let td = d - 1 - face.word.len();
                if f.images[td][face.target as usize].is_none() {
                    return Err(Error::InvalidParameter(format!(
                        "attaching domain is not a subcomplex at {d}-cell {c}"
                    )));
                }
            }
        }
    }
    let out = SimplicialSet::new(counts, faces, z.basepoint())?
        .mark_skeleton(z.is_skeleton() || y.is_skeleton());
    let map = SimplicialMap { images };
    map.check(y, &out).map_err(|e| Error::InvalidParameter(format!("attaching map: {e}")))?;
    Ok((out, map))
}

/// `X ⊔ Y`, with `X`'s basepoint; the cells of `Y` follow those of `X`.
pub fn disjoint_union(x: &SimplicialSet, y: &SimplicialSet) -> SimplicialSet {
    attach(x, y, &PartialMap::empty(y)).expect("disjoint union").0
}

/// `X ∨ Y`, glued at the basepoints.
pub fn wedge(x: &SimplicialSet, y: &SimplicialSet) -> SimplicialSet {
    let mut f = PartialMap::empty(y);
    f.set(0, y.basepoint(), Face::nondegenerate(x.basepoint()));
    attach(x, y, &f).expect("wedge").0
}

/// The reduced suspension `S^1 ∧ X`.
pub fn suspension(x: &SimplicialSet) -> SimplicialSet {
    smash(&minimal_sphere(1).expect("k = 1"), x)
}
