//! Barycentric subdivision, and the subdivided simplex with its symmetric
//! group action.

use std::collections::HashMap;

use super::action::{permutations, GroupAction};
use super::quotient::{quotient, Relation};
use super::simplicial_set::{Builder, Face, SimplicialSet};
use super::word::{low_bits, OperatorWord};
use crate::error::Result;

/// All strict chains `S_0 ⊊ ... ⊊ S_k = top` of nonempty subsets of `top`,
/// grouped by length `k + 1`.
fn chains_ending_at(top: u64) -> Vec<Vec<Vec<u64>>> {
    let mut out: Vec<Vec<Vec<u64>>> = vec![Vec::new(); top.count_ones() as usize];
    let mut chain = vec![top];
    fn grow(chain: &mut Vec<u64>, out: &mut Vec<Vec<Vec<u64>>>) {
        let mut c = chain.clone();
        c.reverse();
        out[c.len() - 1].push(c);
        let last = *chain.last().unwrap();
        // proper nonempty subsets of `last`
        let mut s = (last - 1) & last;
        while s != 0 {
            chain.push(s);
            grow(chain, out);
            chain.pop();
            s = (s - 1) & last;
        }
    }
    grow(&mut chain, &mut out);
    for level in &mut out {
        level.sort_unstable();
    }
    out
}

/// Re-indexes the bits of `s` by their rank among the bits of `within`.
fn rank_in(s: u64, within: u64) -> u64 {
    let mut out = 0u64;
    let mut rank = 0;
    let mut w = within;
    while w != 0 {
        let b = w.trailing_zeros();
        if s >> b & 1 == 1 {
            out |= 1 << rank;
        }
        rank += 1;
        w &= w - 1;
    }
    out
}

/// Image of a vertex subset of `Δ^q` under the codegeneracy collapsing the
/// repeat positions in `word`.
fn collapse_subset(s: u64, word: OperatorWord) -> u64 {
    let w = word.mask();
    let mut out = 0u64;
    let mut t = s;
    while t != 0 {
        let j = t.trailing_zeros() as usize;
        out |= 1 << (j - (w & low_bits(j)).count_ones() as usize);
        t &= t - 1;
    }
    out
}

/// The barycentric subdivision. A nondegenerate `k`-cell is a nondegenerate
/// cell `x` of some dimension `n` together with a strict chain of `k + 1`
/// vertex subsets of `Δ^n` ending at the full set.
pub fn barycentric_subdivision(x: &SimplicialSet) -> SimplicialSet {
    let top_dim = x.dim();
    let chains: Vec<Vec<Vec<Vec<u64>>>> = (0..=top_dim)
        .map(|n| chains_ending_at(low_bits(n + 1)))
        .collect();
    // cells of dimension k, in order: (n, x, chain index)
    let mut index: Vec<HashMap<(usize, u32, Vec<u64>), u32>> = vec![HashMap::new(); top_dim + 1];
    let mut b = Builder::new();
    let mut basepoint = 0;
    for k in 0..=top_dim {
        for n in k..=top_dim {
            for c in 0..x.count(n) as u32 {
                for chain in &chains[n][k] {
                    let id = if k == 0 {
                        b.add_vertex()
                    } else {
                        let faces: Vec<Face> = (0..=k)
                            .map(|i| subdivided_face(x, n, c, chain, i, &index))
                            .collect();
                        b.add_cell(k, &faces)
                    };
                    if k == 0 && n == 0 && c == x.basepoint() {
                        basepoint = id;
                    }
                    index[k].insert((n, c, chain.clone()), id);
                }
            }
        }
    }
    b.finish(basepoint)
        .expect("subdivision is valid")
        .mark_skeleton(x.is_skeleton())
}

fn subdivided_face(
    x: &SimplicialSet,
    n: usize,
    c: u32,
    chain: &[u64],
    i: usize,
    index: &[HashMap<(usize, u32, Vec<u64>), u32>],
) -> Face {
    let k = chain.len() - 1;
    if i < k {
        let mut rest = chain.to_vec();
        rest.remove(i);
        return Face::nondegenerate(index[k - 1][&(n, c, rest)]);
    }
    // restrict x to the face spanned by the new top subset
    let f = chain[k - 1];
    let mut simplex = Face::nondegenerate(c);
    let mut dim = n;
    for v in (0..=n).rev() {
        if f >> v & 1 == 0 {
            simplex = x.face_of(dim, simplex, v);
            dim -= 1;
        }
    }
    let target_dim = dim - simplex.word.len();
    let image: Vec<u64> = chain[..k]
        .iter()
        .map(|&s| collapse_subset(rank_in(s, f), simplex.word))
        .collect();
    let mut strict = Vec::with_capacity(k);
    let mut word = 0u64;
    for (j, &s) in image.iter().enumerate() {
        if j > 0 && image[j - 1] == s {
            word |= 1 << (j - 1);
        } else {
            strict.push(s);
        }
    }
    let target = index[strict.len() - 1][&(target_dim, simplex.target, strict)];
    Face {
        word: OperatorWord::from_mask(word),
        target,
    }
}

/// The subdivided `k`-simplex (the nerve of the poset of nonempty subsets of
/// `{0..k}`) with `S_{k+1}` permuting the vertices of `Δ^k`. Group elements
/// are listed in the order of [`permutations`]; `d`-cells are strict chains
/// of `d + 1` subsets in lexicographic order.
pub fn sd_simplex_with_action(k: usize) -> (SimplicialSet, GroupAction) {
    let n = k + 1;
    let levels = chain_levels(k);
    let find = |chain: &[u64]| -> u32 {
        levels[chain.len() - 1]
            .binary_search_by(|c| c.as_slice().cmp(chain))
            .expect("chain present") as u32
    };
    let mut b = Builder::new();
    for d in 0..n {
        for chain in &levels[d] {
            if d == 0 {
                b.add_vertex();
                continue;
            }
            let faces: Vec<Face> = (0..=d)
                .map(|i| {
                    let mut rest = chain.clone();
                    rest.remove(i);
                    Face::nondegenerate(find(&rest))
                })
                .collect();
            b.add_cell(d, &faces);
        }
    }
    let space = b.finish(0).expect("subdivided simplex is valid");
    let perms = permutations(n);
    let tables = perms
        .iter()
        .map(|p| {
            levels
                .iter()
                .map(|level| {
                    level
                        .iter()
                        .map(|chain| {
                            let moved: Vec<u64> = chain.iter().map(|&s| permute_subset(s, p)).collect();
                            find(&moved)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let action = GroupAction::new(perms, tables).expect("tables match elements");
    (space, action)
}

fn permute_subset(s: u64, p: &[usize]) -> u64 {
    let mut out = 0u64;
    let mut t = s;
    while t != 0 {
        let j = t.trailing_zeros() as usize;
        out |= 1 << p[j];
        t &= t - 1;
    }
    out
}

/// `Δ^{n-1} / ∂Δ^{n-1}` subdivided, with `S_n` permuting vertices; the
/// collapsed boundary is the basepoint. For `n = 1` this is `S^0`.
pub fn permutation_sphere(n: usize) -> Result<(SimplicialSet, GroupAction)> {
    if n == 0 {
        return Err(crate::error::Error::InvalidParameter("permutation sphere needs n >= 1".into()));
    }
    let levels = chain_levels(n - 1);
    let (sd, action) = sd_simplex_with_action(n - 1);
    let full = low_bits(n);
    let mut boundary = Vec::new();
    for (d, level) in levels.iter().enumerate() {
        for (i, chain) in level.iter().enumerate() {
            if *chain.last().unwrap() != full {
                boundary.push((d, i as u32));
            }
        }
    }
    let (mut sphere, q) = quotient(&sd, &Relation::new().collapse(boundary.clone()))?;
    let base = match boundary.first() {
        Some(&(_, v)) => q.images[0][v as usize].target,
        // nothing to collapse: the group vertex is the one added last
        None => sphere.count(0) as u32 - 1,
    };
    sphere.set_basepoint(base)?;
    let descended = action.descend(&q, &sphere)?;
    Ok((sphere, descended))
}

/// Strict chains of nonempty subsets of `{0..k}` by length, each level
/// sorted lexicographically.
fn chain_levels(k: usize) -> Vec<Vec<Vec<u64>>> {
    let n = k + 1;
    let mut levels: Vec<Vec<Vec<u64>>> = vec![Vec::new(); n];
    for top in 1u64..(1 << n) {
        for (len, list) in chains_ending_at(top).into_iter().enumerate() {
            levels[len].extend(list);
        }
    }
    for level in &mut levels {
        level.sort_unstable();
    }
    levels
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::spaces::{minimal_sphere, rp2, standard_simplex, torus};

    #[test]
    fn subdivided_interval() {
        let sd = barycentric_subdivision(&standard_simplex(1));
        assert_eq!(sd.counts(), &[3, 2]);
        let (s, a) = sd_simplex_with_action(1);
        assert_eq!(s.counts(), &[3, 2]);
        a.validate(&s).unwrap();
        // vertices {0}, {1}, {0,1} in lexicographic order
        assert_eq!(a.act(1, 0, 0), 1);
        assert_eq!(a.act(1, 0, 1), 0);
        assert_eq!(a.act(1, 0, 2), 2);
    }

    #[test]
    fn subdivided_simplex_matches_generic_subdivision() {
        for k in 0..4 {
            let generic = barycentric_subdivision(&standard_simplex(k));
            let (direct, action) = sd_simplex_with_action(k);
            assert_eq!(generic.counts(), direct.counts());
            action.validate(&direct).unwrap();
        }
    }

    #[test]
    fn subdivision_preserves_euler_characteristic() {
        for x in [torus(), rp2(), minimal_sphere(2).unwrap(), minimal_sphere(3).unwrap()] {
            let sd = barycentric_subdivision(&x);
            sd.validate().unwrap();
            assert_eq!(
                sd.census().euler_characteristic(),
                x.census().euler_characteristic()
            );
        }
    }

    #[test]
    fn permutation_spheres() {
        for n in 1..=4 {
            let (s, a) = permutation_sphere(n).unwrap();
            a.validate(&s).unwrap();
            let chi = s.census().euler_characteristic();
            assert_eq!(chi, 1 + if (n - 1) % 2 == 0 { 1 } else { -1 });
        }
    }
}
