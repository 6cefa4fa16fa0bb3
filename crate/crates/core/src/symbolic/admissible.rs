//! Admissible sequences of Steenrod squares and bigraded monomial counting.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::PoincareSeries;

/// `Sq^{i_1} ... Sq^{i_r}` applied to the fundamental class of degree `base`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AdmissibleWord {
    pub base: u32,
    pub indices: Vec<u32>,
}

impl AdmissibleWord {
    pub fn new(base: u32, indices: Vec<u32>) -> Self {
        AdmissibleWord { base, indices }
    }

    pub fn length(&self) -> usize {
        self.indices.len()
    }

    /// `|I| = i_1 + ... + i_r`.
    pub fn weight(&self) -> u32 {
        self.indices.iter().sum()
    }

    /// `base + |I|`
    pub fn degree(&self) -> u32 {
        self.base + self.weight()
    }

    /// `i_1 - i_2 - ... - i_r` (zero for the empty word).
    pub fn excess(&self) -> i64 {
        match self.indices.split_first() {
            None => 0,
            Some((first, rest)) => *first as i64 - rest.iter().map(|&i| i as i64).sum::<i64>(),
        }
    }

    /// `2^r`
    pub fn filtration(&self) -> u64 {
        1u64 << self.length()
    }

    /// Excess below the base degree, `i_k ≥ 2 i_{k+1}`, and last index
    /// above 1.
    pub fn is_admissible(&self) -> bool {
        let doubling = self.indices.windows(2).all(|w| w[0] >= 2 * w[1]);
        let last = self.indices.last().is_none_or(|&i| i > 1);
        let positive = self.indices.iter().all(|&i| i > 0);
        positive && doubling && last && self.excess() < self.base as i64
    }
}

impl fmt::Display for AdmissibleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.indices {
            write!(f, "Sq^{i} ")?;
        }
        write!(f, "ι_{}", self.base)
    }
}

/// Every admissible word on a class of degree `base` with total degree at
/// most `dmax`, the empty word included, ordered by degree and then
/// lexicographically.
pub fn admissible_sequences(base: u32, dmax: u32) -> Result<Vec<AdmissibleWord>> {
    if base < 2 {
        return Err(Error::InvalidParameter(format!(
            "admissible words need a base degree of at least 2, got {base}"
        )));
    }
    let mut out = Vec::new();
    if dmax < base {
        return Ok(out);
    }
    let mut stack = Vec::new();
    extend(base, dmax - base, u32::MAX, &mut stack, &mut out);
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.indices.cmp(&b.indices)));
    Ok(out)
}

/// Appends indices at most `cap` to `stack` while the weight fits in `room`.
fn extend(base: u32, room: u32, cap: u32, stack: &mut Vec<u32>, out: &mut Vec<AdmissibleWord>) {
    let word = AdmissibleWord::new(base, stack.clone());
    if word.is_admissible() {
        out.push(word);
    }
    for i in 2..=room.min(cap) {
        stack.push(i);
        extend(base, room - i, i / 2, stack, out);
        stack.pop();
    }
}

/// Where a generator comes from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Admissible(AdmissibleWord),
    Named(String),
}

/// An algebra generator with its homological degree and filtration.
/// Exterior generators square to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BigradedGenerator {
    pub degree: u32,
    pub filtration: u64,
    pub exterior: bool,
    pub provenance: Provenance,
}

impl BigradedGenerator {
    pub fn from_word(word: AdmissibleWord) -> Self {
        BigradedGenerator {
            degree: word.degree(),
            filtration: word.filtration(),
            exterior: false,
            provenance: Provenance::Admissible(word),
        }
    }

    pub fn named(name: &str, degree: u32, filtration: u64, exterior: bool) -> Self {
        BigradedGenerator {
            degree,
            filtration,
            exterior,
            provenance: Provenance::Named(name.to_string()),
        }
    }
}

impl fmt::Display for BigradedGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.provenance {
            Provenance::Admissible(w) => write!(f, "{w}")?,
            Provenance::Named(n) => write!(f, "{n}")?,
        }
        write!(f, " ({}, {})", self.degree, self.filtration)
    }
}

/// Which filtrations a monomial count keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filtration {
    Exactly(u64),
    AtMost(u64),
}

/// Dimensions, degree by degree, of the span of monomials in `gens` whose
/// filtration matches `filt` and whose degree is at most `dmax`. The empty
/// monomial (degree 0, filtration 0) is included when `filt` allows it.
pub fn count_monomials(gens: &[BigradedGenerator], filt: Filtration, dmax: usize, p: u64) -> PoincareSeries {
    let fmax = match filt {
        Filtration::Exactly(f) | Filtration::AtMost(f) => f as usize,
    };
    // table[f][d]: monomials of filtration f and degree d
    let mut table = vec![vec![0u64; dmax + 1]; fmax + 1];
    table[0][0] = 1;
    for g in gens {
        let (gd, gf) = (g.degree as usize, g.filtration as usize);
        if gd > dmax || gf > fmax || gf == 0 {
            continue;
        }
        if g.exterior {
            for f in (gf..=fmax).rev() {
                for d in (gd..=dmax).rev() {
                    table[f][d] += table[f - gf][d - gd];
                }
            }
        } else {
            for f in gf..=fmax {
                for d in gd..=dmax {
                    table[f][d] += table[f - gf][d - gd];
                }
            }
        }
    }
    let coeffs = match filt {
        Filtration::Exactly(f) => table[f as usize].clone(),
        Filtration::AtMost(_) => (0..=dmax).map(|d| table.iter().map(|row| row[d]).sum()).collect(),
    };
    PoincareSeries::from_coeffs(p, coeffs)
}
