//! The canonical small spaces every other construction starts from.

use super::simplicial_set::{Builder, Face, SimplicialSet};
use super::word::OperatorWord;
use crate::error::{Error, Result};

/// The one-point space.
pub fn point() -> SimplicialSet {
    let mut b = Builder::new();
    let v = b.add_vertex();
    b.finish(v).expect("point is valid")
}

/// Two points; the basepoint is vertex 0.
pub fn two_points() -> SimplicialSet {
    let mut b = Builder::new();
    let v = b.add_vertex();
    b.add_vertex();
    b.finish(v).expect("S^0 is valid")
}

/// The standard `k`-simplex. Nondegenerate `d`-cells are the `(d+1)`-element
/// vertex subsets, numbered in increasing order of their bitmask.
pub fn standard_simplex(k: usize) -> SimplicialSet {
    assert!(k < 24, "standard simplex of dimension {k} is too large");
    let n = k + 1;
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for s in 1u32..(1 << n) {
        by_size[s.count_ones() as usize].push(s);
    }
    let index = |s: u32| -> u32 {
        let list = &by_size[s.count_ones() as usize];
        list.binary_search(&s).expect("subset present") as u32
    };
    let mut b = Builder::new();
    for _ in 0..n {
        b.add_vertex();
    }
    for d in 1..=k {
        for &s in &by_size[d + 1] {
            let verts: Vec<u32> = (0..n as u32).filter(|v| s >> v & 1 == 1).collect();
            let faces: Vec<Face> = verts
                .iter()
                .map(|v| Face::nondegenerate(index(s & !(1 << v))))
                .collect();
            b.add_cell(d, &faces);
        }
    }
    b.finish(0).expect("standard simplex is valid")
}

/// `Δ^k / ∂Δ^k`: one vertex and one `k`-cell whose faces are all the
/// degenerate basepoint.
pub fn minimal_sphere(k: usize) -> Result<SimplicialSet> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "minimal_sphere needs k >= 1; use two_points() for S^0".into(),
        ));
    }
    let mut b = Builder::new();
    let v = b.add_vertex();
    let collapsed = Face {
        word: OperatorWord::full(k - 1),
        target: v,
    };
    b.add_cell(k, &vec![collapsed; k + 1]);
    b.finish(v)
}

/// A 2-cell glued to a single vertex along a polygon word. Each letter is a
/// generator index and an inversion flag. The polygon is cut into a fan of
/// triangles from its first corner.
fn polygon_surface(word: &[(usize, bool)], generators: usize) -> SimplicialSet {
    #[derive(Clone, Copy)]
    struct Signed {
        edge: u32,
        positive: bool,
    }
    let m = word.len();
    assert!(m >= 3);
    let mut b = Builder::new();
    let v = b.add_vertex();
    let loop_faces = [Face::nondegenerate(v), Face::nondegenerate(v)];
    for _ in 0..generators {
        b.add_cell(1, &loop_faces);
    }
    let letter = |j: usize| Signed {
        edge: word[j].0 as u32,
        positive: !word[j].1,
    };
    let degenerate_vertex = Face {
        word: OperatorWord::full(1),
        target: v,
    };

    // each triangle is recorded as (P, Q, R) meaning the path P then Q is R
    let mut triangles: Vec<[u32; 3]> = Vec::new();
    let inverse_of = |b: &mut Builder, e: u32, tris: &mut Vec<[u32; 3]>| -> u32 {
        let inv = b.add_cell(1, &loop_faces);
        // inv then e is the constant loop
        tris.push([inv, e, u32::MAX]);
        inv
    };

    let mut diag = letter(0);
    for j in 1..=m - 2 {
        let next = if j + 1 == m - 1 {
            let l = letter(m - 1);
            Signed {
                edge: l.edge,
                positive: !l.positive,
            }
        } else {
            Signed {
                edge: b.add_cell(1, &loop_faces),
                positive: true,
            }
        };
        let (mut u, w, mut vv) = (diag, letter(j), next);
        // patterns with no single-triangle form get an explicit inverse edge
        if !u.positive && !w.positive && vv.positive {
            u = Signed {
                edge: inverse_of(&mut b, u.edge, &mut triangles),
                positive: true,
            };
        }
        if u.positive && w.positive && !vv.positive {
            vv = Signed {
                edge: inverse_of(&mut b, vv.edge, &mut triangles),
                positive: true,
            };
        }
        let tri = match (u.positive, w.positive, vv.positive) {
            (true, true, true) => [u.edge, w.edge, vv.edge],
            (true, false, true) => [vv.edge, w.edge, u.edge],
            (false, true, true) => [u.edge, vv.edge, w.edge],
            (false, true, false) => [w.edge, vv.edge, u.edge],
            (true, false, false) => [vv.edge, u.edge, w.edge],
            (false, false, false) => [w.edge, u.edge, vv.edge],
            _ => unreachable!("sign pattern normalized above"),
        };
        triangles.push(tri);
        diag = next;
    }
    for [p, q, r] in triangles {
        let d1 = if r == u32::MAX {
            degenerate_vertex
        } else {
            Face::nondegenerate(r)
        };
        b.add_cell(2, &[Face::nondegenerate(q), d1, Face::nondegenerate(p)]);
    }
    b.finish(v).expect("polygon surface is valid")
}

/// The closed orientable surface of genus `g`, as a one-vertex simplicial set
/// (the 2-sphere for `g = 0`).
pub fn surface(g: usize) -> SimplicialSet {
    if g == 0 {
        return minimal_sphere(2).expect("k = 2");
    }
    let mut word = Vec::with_capacity(4 * g);
    for i in 0..g {
        let (a, b) = (2 * i, 2 * i + 1);
        word.extend_from_slice(&[(a, false), (b, false), (a, true), (b, true)]);
    }
    polygon_surface(&word, 2 * g)
}

/// The torus: one vertex, three edges, two triangles.
pub fn torus() -> SimplicialSet {
    surface(1)
}

/// The real projective plane: one vertex, one edge `a`, and one triangle with
/// faces `(a, s_0 v, a)` imposing `a·a = 1`.
pub fn rp2() -> SimplicialSet {
    let mut b = Builder::new();
    let v = b.add_vertex();
    let a = b.add_cell(1, &[Face::nondegenerate(v), Face::nondegenerate(v)]);
    b.add_cell(
        2,
        &[
            Face::nondegenerate(a),
            Face {
                word: OperatorWord::full(1),
                target: v,
            },
            Face::nondegenerate(a),
        ],
    );
    b.finish(v).expect("RP^2 is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_census() {
        assert_eq!(standard_simplex(0).counts(), &[1]);
        assert_eq!(standard_simplex(1).counts(), &[2, 1]);
        assert_eq!(standard_simplex(2).counts(), &[3, 3, 1]);
        assert_eq!(standard_simplex(4).counts(), &[5, 10, 10, 5, 1]);
    }

    #[test]
    fn minimal_sphere_census() {
        assert_eq!(minimal_sphere(1).unwrap().counts(), &[1, 1]);
        assert_eq!(minimal_sphere(2).unwrap().counts(), &[1, 0, 1]);
        assert_eq!(minimal_sphere(3).unwrap().census().euler_characteristic(), 0);
        assert!(minimal_sphere(0).is_err());
    }

    #[test]
    fn surfaces_have_expected_euler_characteristic() {
        for g in 0..5 {
            let s = surface(g);
            s.validate().unwrap();
            assert_eq!(s.census().euler_characteristic(), 2 - 2 * g as i64);
        }
        assert_eq!(torus().counts(), &[1, 3, 2]);
        assert_eq!(rp2().census().euler_characteristic(), 1);
    }
}
