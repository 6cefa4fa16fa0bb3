//! Truncated Poincaré series with exact integer coefficients.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Graded dimensions `coeffs[d]` for `d = 0..=dmax`, over the field `F_p`
/// (`p = 0` for rational ranks).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PoincareSeries {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

impl PoincareSeries {
    pub fn zero(p: u64, dmax: usize) -> Self {
        PoincareSeries {
            p,
            coeffs: vec![0; dmax + 1],
        }
    }

    /// The series `1` (a point).
    pub fn unit(p: u64, dmax: usize) -> Self {
        Self::monomial(p, dmax, 0, 1)
    }

    /// `c·t^d`, or zero if `d` is past the truncation.
    pub fn monomial(p: u64, dmax: usize, d: usize, c: u64) -> Self {
        let mut s = Self::zero(p, dmax);
        if d <= dmax {
            s.coeffs[d] = c;
        }
        s
    }

    pub fn from_coeffs(p: u64, coeffs: Vec<u64>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least degree 0");
        PoincareSeries { p, coeffs }
    }

    pub fn dmax(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn get(&self, d: usize) -> u64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Drops the degree-0 coefficient.
    pub fn reduced(&self) -> Self {
        let mut s = self.clone();
        s.coeffs[0] = 0;
        s
    }

    /// Same coefficients with a different truncation degree.
    pub fn truncate(&self, dmax: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(dmax + 1, 0);
        PoincareSeries { p: self.p, coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "characteristics differ");
        let dmax = self.dmax().min(other.dmax());
        PoincareSeries {
            p: self.p,
            coeffs: (0..=dmax).map(|d| self.coeffs[d] + other.coeffs[d]).collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        PoincareSeries {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&x| x * c).collect(),
        }
    }

    /// Cauchy product truncated to the smaller `dmax`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "characteristics differ");
        let dmax = self.dmax().min(other.dmax());
        let mut coeffs = vec![0u64; dmax + 1];
        for (i, &a) in self.coeffs.iter().enumerate().take(dmax + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(dmax + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        PoincareSeries { p: self.p, coeffs }
    }

    /// Multiplies by `t^k`; the truncation degree is kept.
    pub fn shift_up(&self, k: usize) -> Self {
        let dmax = self.dmax();
        let mut coeffs = vec![0u64; dmax + 1];
        for d in k..=dmax {
            coeffs[d] = self.coeffs[d - k];
        }
        PoincareSeries { p: self.p, coeffs }
    }

    /// Divides by `t^k`, discarding degrees below `k`; `dmax` drops by `k`.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(k <= self.dmax(), "shift past truncation");
        PoincareSeries {
            p: self.p,
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// Alternating sum of the coefficients.
    pub fn euler_characteristic(&self) -> i64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(d, &c)| match (d, c) {
                (0, c) => format!("{c}"),
                (d, 1) => format!("t^{d}"),
                (d, c) => format!("{c}t^{d}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_truncates() {
        let a = PoincareSeries::from_coeffs(2, vec![1, 1, 0, 0]);
        let sq = a.mul(&a);
        assert_eq!(sq.coeffs, vec![1, 2, 1, 0]);
        let cube = sq.mul(&a).mul(&a);
        assert_eq!(cube.coeffs, vec![1, 4, 6, 4]);
    }

    #[test]
    fn shifts() {
        let a = PoincareSeries::from_coeffs(2, vec![1, 0, 3, 4]);
        assert_eq!(a.shift_up(1).coeffs, vec![0, 1, 0, 3]);
        assert_eq!(a.shift_down(2).coeffs, vec![3, 4]);
        assert_eq!(a.reduced().coeffs, vec![0, 0, 3, 4]);
        assert_eq!(a.to_string(), "1 + 3t^2 + 4t^3");
    }

    #[test]
    fn json_shape() {
        let a = PoincareSeries::from_coeffs(3, vec![1, 0, 2]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"p":3,"coeffs":[1,0,2]}"#);
    }
}
