//! Degeneracy operators in Eilenberg–Zilber normal form.
//!
//! A degenerate simplex `s_{i_1} s_{i_2} ... s_{i_r} x` with
//! `i_1 > i_2 > ... > i_r` is determined by the set `{i_1, ..., i_r}`: it is
//! exactly the set of positions `j` where the vertex sequence of the simplex
//! repeats (`v_j == v_{j+1}`). We store that set as a bitmask, which makes the
//! normal form unique by construction.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest simplex dimension an [`OperatorWord`] can address.
pub const MAX_DIM: usize = 63;

/// A composite of elementary degeneracies, stored as the set of indices of its
/// normal form. The empty word is the identity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OperatorWord(u64);

impl OperatorWord {
    pub const IDENTITY: OperatorWord = OperatorWord(0);

    pub fn from_mask(mask: u64) -> Self {
        OperatorWord(mask)
    }

    /// The word taking a vertex to its fully degenerate `dim`-simplex,
    /// `s_{dim-1} ... s_1 s_0`.
    pub fn full(dim: usize) -> Self {
        debug_assert!(dim <= MAX_DIM);
        OperatorWord(low_bits(dim))
    }

    /// Builds the normal form of a strictly decreasing index list.
    /// Returns `None` if the list is not strictly decreasing.
    pub fn from_normal_form(indices: &[usize]) -> Option<Self> {
        let mut mask = 0u64;
        for (k, &i) in indices.iter().enumerate() {
            if i >= MAX_DIM || (k > 0 && indices[k - 1] <= i) {
                return None;
            }
            mask |= 1 << i;
        }
        Some(OperatorWord(mask))
    }

    /// Normalizes an arbitrary composite `s_{j_1} s_{j_2} ... s_{j_m}` (the
    /// rightmost operator is applied first) acting on a simplex of dimension
    /// `base_dim`.
    pub fn from_composite(indices: &[usize], base_dim: usize) -> Self {
        let mut word = OperatorWord::IDENTITY;
        let mut dim = base_dim;
        for &j in indices.iter().rev() {
            assert!(j <= dim, "degeneracy s_{j} undefined on a {dim}-simplex");
            dim += 1;
            word = compose(OperatorWord(1 << j), word, dim);
        }
        word
    }

    #[inline]
    pub fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    /// Indices of the normal form, strictly decreasing.
    pub fn indices(self) -> Vec<usize> {
        let mut out: Vec<usize> = (0..64).filter(|&i| self.contains(i)).collect();
        out.reverse();
        out
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.indices().iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Serialize for OperatorWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.indices().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OperatorWord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let indices = Vec::<usize>::deserialize(deserializer)?;
        OperatorWord::from_normal_form(&indices).ok_or_else(|| {
            serde::de::Error::custom(format!(
                "degeneracy word {indices:?} is not strictly decreasing"
            ))
        })
    }
}

#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Deletes bit position `b` and shifts every higher bit down by one.
#[inline]
pub(crate) fn remove_bit(mask: u64, b: usize) -> u64 {
    let low = mask & low_bits(b);
    let high = if b + 1 >= 64 { 0 } else { (mask >> (b + 1)) << b };
    low | high
}

/// Deletes every position in `cut` from `mask` (which must contain `cut`).
#[inline]
pub(crate) fn compress(mut mask: u64, cut: u64) -> u64 {
    let mut c = cut;
    while c != 0 {
        let b = 63 - c.leading_zeros() as usize;
        mask = remove_bit(mask, b);
        c &= !(1u64 << b);
    }
    mask
}

/// `s_outer s_inner`: the normal form of applying `inner` first and then
/// `outer`, where the result is a simplex of dimension `dim`.
///
/// The repeat positions of the composite are those of `outer` together with
/// the non-repeat positions of `outer` whose image index repeats in `inner`.
#[inline]
pub fn compose(outer: OperatorWord, inner: OperatorWord, dim: usize) -> OperatorWord {
    if inner.0 == 0 {
        return outer;
    }
    let mut out = outer.0;
    let mut k = 0usize;
    for j in 0..dim {
        if outer.0 >> j & 1 == 1 {
            continue;
        }
        if inner.0 >> k & 1 == 1 {
            out |= 1 << j;
        }
        k += 1;
    }
    OperatorWord(out)
}

/// Outcome of applying the face operator `d_i` to `s_word x` where the
/// degenerate simplex has dimension `dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceStep {
    /// `d_i s_word x = s_word' x`.
    Degenerate(OperatorWord),
    /// `d_i s_word x = s_word' d_k x`.
    Through { word: OperatorWord, k: usize },
}

#[inline]
pub fn face_step(word: OperatorWord, dim: usize, i: usize) -> FaceStep {
    debug_assert!(i <= dim);
    let w = word.0;
    if i < dim && w >> i & 1 == 1 {
        return FaceStep::Degenerate(OperatorWord(remove_bit(w, i)));
    }
    if i > 0 && w >> (i - 1) & 1 == 1 {
        return FaceStep::Degenerate(OperatorWord(remove_bit(w, i - 1)));
    }
    let k = i - (w & low_bits(i)).count_ones() as usize;
    FaceStep::Through { word: OperatorWord(remove_bit(w, i)), k }
}
