//! Finite permutation-group actions on simplicial sets and their orbit spaces.

use super::simplicial_set::{Face, SimplicialMap, SimplicialSet};
use crate::error::{Error, Result};

/// All permutations of `0..n` in lexicographic order; the identity comes
/// first. `p[i]` is the image of `i`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

/// `(g ∘ h)[i] = g[h[i]]`.
pub fn compose_perm(g: &[usize], h: &[usize]) -> Vec<usize> {
    h.iter().map(|&i| g[i]).collect()
}

/// A group of permutations of `n` letters acting on the cells of a simplicial
/// set. `tables[g][d][c]` is the image of the nondegenerate `d`-cell `c`
/// under the `g`-th element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    elements: Vec<Vec<usize>>,
    tables: Vec<Vec<Vec<u32>>>,
}

impl GroupAction {
    pub fn new(elements: Vec<Vec<usize>>, tables: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        if elements.is_empty() || elements.len() != tables.len() {
            return Err(Error::Action("element and table lists disagree".into()));
        }
        Ok(GroupAction { elements, tables })
    }

    /// The action of the trivial group.
    pub fn trivial(x: &SimplicialSet) -> Self {
        GroupAction {
            elements: vec![vec![0]],
            tables: vec![x.counts().iter().map(|&c| (0..c as u32).collect()).collect()],
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    #[inline]
    pub fn act(&self, g: usize, d: usize, cell: u32) -> u32 {
        self.tables[g][d][cell as usize]
    }

    /// Image of a possibly degenerate `dim`-simplex.
    #[inline]
    pub fn act_face(&self, g: usize, dim: usize, f: Face) -> Face {
        let td = SimplicialSet::target_dim(dim, f);
        Face {
            word: f.word,
            target: self.act(g, td, f.target),
        }
    }

    /// Checks that each element permutes the cells of every dimension, the
    /// first element is the identity and acts trivially, the tables respect
    /// composition, and every element commutes with all face maps.
    pub fn validate(&self, x: &SimplicialSet) -> Result<()> {
        let n = self.elements[0].len();
        if self.elements[0] != (0..n).collect::<Vec<_>>() {
            return Err(Error::Action("first element is not the identity".into()));
        }
        for (g, table) in self.tables.iter().enumerate() {
            if table.len() != x.counts().len() {
                return Err(Error::Action(format!("element {g}: wrong number of dimensions")));
            }
            for (d, row) in table.iter().enumerate() {
                if row.len() != x.count(d) {
                    return Err(Error::Action(format!("element {g}: wrong size in dimension {d}")));
                }
                let mut seen = vec![false; row.len()];
                for &c in row {
                    if c as usize >= row.len() || std::mem::replace(&mut seen[c as usize], true) {
                        return Err(Error::Action(format!(
                            "element {g} is not a bijection in dimension {d}"
                        )));
                    }
                }
                if g == 0 && row.iter().enumerate().any(|(i, &c)| i as u32 != c) {
                    return Err(Error::Action("identity acts nontrivially".into()));
                }
            }
        }
        for (g, pg) in self.elements.iter().enumerate() {
            for (h, ph) in self.elements.iter().enumerate() {
                let gh = compose_perm(pg, ph);
                let Some(k) = self.elements.iter().position(|e| *e == gh) else {
                    return Err(Error::Action("element set is not closed".into()));
                };
                for d in 0..x.counts().len() {
                    for c in 0..x.count(d) as u32 {
                        if self.act(k, d, c) != self.act(g, d, self.act(h, d, c)) {
                            return Err(Error::Action(format!(
                                "composition law fails on {d}-cell {c}"
                            )));
                        }
                    }
                }
            }
        }
        for g in 0..self.order() {
            for d in 1..x.counts().len() {
                for c in 0..x.count(d) as u32 {
                    let gc = self.act(g, d, c);
                    for i in 0..=d {
                        let lhs = self.act_face(g, d - 1, x.face(d, c, i));
                        if lhs != x.face(d, gc, i) {
                            return Err(Error::Action(format!(
                                "element {g} does not commute with d{i} on {d}-cell {c}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Pushes the action through a quotient map `q: X -> Y` whose cells are
    /// all hit nondegenerately or not at all. Cells without a preimage are
    /// taken to be fixed.
    pub fn descend(&self, q: &SimplicialMap, y: &SimplicialSet) -> Result<GroupAction> {
        let mut tables = Vec::with_capacity(self.order());
        for g in 0..self.order() {
            let mut table: Vec<Vec<Option<u32>>> =
                y.counts().iter().map(|&c| vec![None; c]).collect();
            for (d, images) in q.images.iter().enumerate() {
                for (c, img) in images.iter().enumerate() {
                    if img.is_degenerate() {
                        continue;
                    }
                    let moved = q.images[d][self.act(g, d, c as u32) as usize];
                    if moved.is_degenerate() {
                        return Err(Error::Action(format!(
                            "quotient does not respect the action on {d}-cell {c}"
                        )));
                    }
                    let slot = &mut table[d][img.target as usize];
                    match slot {
                        Some(t) if *t != moved.target => {
                            return Err(Error::Action(format!(
                                "action is not well defined on the quotient at {d}-cell {}",
                                img.target
                            )))
                        }
                        _ => *slot = Some(moved.target),
                    }
                }
            }
            tables.push(
                table
                    .into_iter()
                    .map(|row| {
                        row.into_iter()
                            .enumerate()
                            .map(|(i, t)| t.unwrap_or(i as u32))
                            .collect()
                    })
                    .collect(),
            );
        }
        let out = GroupAction {
            elements: self.elements.clone(),
            tables,
        };
        out.validate(y)?;
        Ok(out)
    }

    /// The subgroup generated by the listed elements, as an action in its own
    /// right (elements are re-indexed, identity first).
    pub fn subgroup(&self, generators: &[usize]) -> GroupAction {
        let mut members = vec![0usize];
        let mut frontier = vec![0usize];
        while let Some(a) = frontier.pop() {
            for &g in generators {
                let prod = compose_perm(&self.elements[g], &self.elements[a]);
                let k = self.elements.iter().position(|e| *e == prod).expect("closed");
                if !members.contains(&k) {
                    members.push(k);
                    frontier.push(k);
                }
            }
        }
        members[1..].sort_unstable();
        GroupAction {
            elements: members.iter().map(|&k| self.elements[k].clone()).collect(),
            tables: members.iter().map(|&k| self.tables[k].clone()).collect(),
        }
    }
}

/// The degreewise orbit space `X / G`. Its nondegenerate cells are the orbits
/// of nondegenerate cells of `X`; the returned map is the quotient map.
pub fn orbit_quotient(
    x: &SimplicialSet,
    action: &GroupAction,
) -> Result<(SimplicialSet, SimplicialMap)> {
    action.validate(x)?;
    let dims = x.counts().len();
    let mut images: Vec<Vec<Face>> = Vec::with_capacity(dims);
    let mut counts = Vec::with_capacity(dims);
    let mut faces: Vec<Vec<Face>> = Vec::with_capacity(dims);
    for d in 0..dims {
        let n = x.count(d);
        let mut id = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for c in 0..n as u32 {
            let rep = (0..action.order())
                .map(|g| action.act(g, d, c))
                .min()
                .unwrap();
            if rep == c {
                id[c as usize] = reps.len() as u32;
                reps.push(c);
            }
        }
        for c in 0..n as u32 {
            let rep = (0..action.order())
                .map(|g| action.act(g, d, c))
                .min()
                .unwrap();
            id[c as usize] = id[rep as usize];
        }
        let mut fs = Vec::new();
        if d > 0 {
            for &r in &reps {
                for f in x.faces_of(d, r) {
                    let td = d - 1 - f.word.len();
                    fs.push(Face {
                        word: f.word,
                        target: images[td][f.target as usize].target,
                    });
                }
            }
        }
        counts.push(reps.len());
        faces.push(fs);
        images.push(id.into_iter().map(Face::nondegenerate).collect());
    }
    let base = images[0][x.basepoint() as usize].target;
    let q = SimplicialSet::from_parts_unchecked(counts, faces, base).mark_skeleton(x.is_skeleton());
    q.validate()?;
    Ok((q, SimplicialMap { images }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_are_lexicographic() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], vec![0, 1, 2]);
        assert_eq!(p[5], vec![2, 1, 0]);
        assert_eq!(permutations(1), vec![vec![0]]);
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn trivial_group_quotient_is_identity() {
        let x = crate::sset::spaces::torus();
        let (q, map) = orbit_quotient(&x, &GroupAction::trivial(&x)).unwrap();
        assert_eq!(q, x);
        assert_eq!(map, SimplicialMap::identity(&x));
    }

    #[test]
    fn broken_action_is_rejected() {
        // swapping the two vertices of the interval does not commute with d0
        let x = crate::sset::spaces::standard_simplex(1);
        let bad = GroupAction::new(
            vec![vec![0, 1], vec![1, 0]],
            vec![vec![vec![0, 1], vec![0]], vec![vec![1, 0], vec![0]]],
        )
        .unwrap();
        assert!(matches!(bad.validate(&x), Err(Error::Action(_))));
        assert!(orbit_quotient(&x, &bad).is_err());
    }
}
