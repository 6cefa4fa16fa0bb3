//! Ranks over the prime field `F_p`, computed independently of the integral
//! reduction.

use super::chains::SparseMatrix;

fn inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank of `m` over `F_p`, skipping columns flagged in `cleared`. Also
/// returns which rows became pivots.
pub fn rank_mod_p(m: &SparseMatrix, p: u64, cleared: Option<&[bool]>) -> (usize, Vec<bool>) {
    assert!((2..1 << 31).contains(&p), "prime out of range");
    let mut pivot_of: Vec<u32> = vec![u32::MAX; m.rows];
    let mut pivots: Vec<Vec<(u32, u64)>> = Vec::new();
    for (j, src) in m.cols.iter().enumerate() {
        if cleared.is_some_and(|c| c[j]) {
            continue;
        }
        let mut col: Vec<(u32, u64)> = src
            .iter()
            .map(|&(r, v)| (r, v.rem_euclid(p as i64) as u64))
            .filter(|e| e.1 != 0)
            .collect();
        while let Some(&(low, v)) = col.last() {
            let k = pivot_of[low as usize];
            if k == u32::MAX {
                let inv = inverse(v, p);
                for e in col.iter_mut() {
                    e.1 = e.1 * inv % p;
                }
                pivot_of[low as usize] = pivots.len() as u32;
                pivots.push(col);
                break;
            }
            // pivot columns are normalized to 1 at their low row
            let pcol = &pivots[k as usize];
            let mut out = Vec::with_capacity(col.len() + pcol.len());
            let (mut a, mut b) = (0, 0);
            while a < col.len() || b < pcol.len() {
                let ra = col.get(a).map_or(u32::MAX, |e| e.0);
                let rb = pcol.get(b).map_or(u32::MAX, |e| e.0);
                if ra == rb {
                    let x = (col[a].1 + p - v * pcol[b].1 % p) % p;
                    if x != 0 {
                        out.push((ra, x));
                    }
                    a += 1;
                    b += 1;
                } else if ra < rb {
                    out.push(col[a]);
                    a += 1;
                } else {
                    out.push((rb, (p - v * pcol[b].1 % p) % p));
                    b += 1;
                }
            }
            col = out;
        }
    }
    (pivots.len(), pivot_of.iter().map(|&k| k != u32::MAX).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_depends_on_characteristic() {
        let m = SparseMatrix::from_dense(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(rank_mod_p(&m, 2, None).0, 1);
        assert_eq!(rank_mod_p(&m, 3, None).0, 1);
        assert_eq!(rank_mod_p(&m, 5, None).0, 2);
    }

    #[test]
    fn inverses() {
        for p in [2u64, 3, 5, 7, 101] {
            for a in 1..p {
                assert_eq!(a * inverse(a, p) % p, 1);
            }
        }
    }
}
