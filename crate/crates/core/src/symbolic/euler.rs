//! Euler characteristics of symmetric products and barycenter spaces from
//! `χ(X)` alone.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Coefficients `0..=n` of `(1 - t)^{-chi}`.
fn macdonald_coefficients(n: usize, chi: i64) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = BigInt::one();
    if chi >= 0 {
        // multiply by 1/(1-t): prefix sums
        for _ in 0..chi {
            for k in 1..=n {
                let prev = c[k - 1].clone();
                c[k] += prev;
            }
        }
    } else {
        // multiply by (1-t)
        for _ in 0..chi.unsigned_abs() {
            for k in (1..=n).rev() {
                let prev = c[k - 1].clone();
                c[k] -= prev;
            }
        }
    }
    c
}

/// `χ(SP^n X)`: the coefficient of `t^n` in `(1 - t)^{-χ(X)}`.
pub fn euler_sp(n: usize, chi: i64) -> BigInt {
    if chi.unsigned_abs() as u128 > 64 * (n as u128 + 1) {
        // closed form avoids `|chi|` passes over the series
        return generalized_binomial(chi, n);
    }
    macdonald_coefficients(n, chi).pop().unwrap()
}

/// `(-1)^n C(-chi, n) = chi (chi+1) ... (chi+n-1) / n!`.
fn generalized_binomial(chi: i64, n: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..n {
        num *= BigInt::from(chi) + BigInt::from(j);
        den *= BigInt::from(j + 1);
    }
    num / den
}

/// `χ(SP̄^n X) = 1 + χ(SP^n X) - χ(SP^{n-1} X)`, for `n ≥ 1`.
pub fn euler_rsp(n: usize, chi: i64) -> BigInt {
    assert!(n >= 1, "reduced symmetric products start at n = 1");
    BigInt::one() + euler_sp(n, chi) - euler_sp(n - 1, chi)
}

/// `χ(B_n X) = 1 - (1 - χ)(2 - χ)...(n - χ) / n!`, for `n ≥ 1`.
pub fn euler_barycenter(n: usize, chi: i64) -> BigInt {
    assert!(n >= 1, "barycenter spaces start at n = 1");
    let mut num = BigInt::one();
    let mut fact = BigInt::one();
    for j in 1..=n {
        num *= BigInt::from(j as i64) - BigInt::from(chi);
        fact *= BigInt::from(j);
    }
    let (q, r) = num.div_rem(&fact);
    assert!(r.is_zero(), "product of {n} consecutive integers not divisible by {n}!");
    BigInt::one() - q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn symmetric_products() {
        for n in 1..6 {
            assert_eq!(euler_sp(n, 0), b(0));
        }
        assert_eq!(euler_sp(2, 2), b(3));
        for chi in -4..5 {
            assert_eq!(euler_sp(0, chi), b(1));
        }
        // (1-t)^2 = 1 - 2t + t^2
        assert_eq!(euler_sp(1, -2), b(-2));
        assert_eq!(euler_sp(2, -2), b(1));
        assert_eq!(euler_sp(3, -2), b(0));
    }

    #[test]
    fn series_and_closed_form_agree() {
        for n in 0..8 {
            for chi in -10..10 {
                assert_eq!(euler_sp(n, chi), generalized_binomial(chi, n), "n={n} chi={chi}");
            }
        }
        assert_eq!(euler_sp(3, 10_000), generalized_binomial(10_000, 3));
    }

    #[test]
    fn reduced_and_barycenter() {
        for chi in -3..4 {
            assert_eq!(euler_rsp(1, chi), b(chi));
        }
        assert_eq!(euler_rsp(2, 2), b(2));
        assert_eq!(euler_rsp(2, 0), b(1));
        assert_eq!(euler_barycenter(2, 0), b(0));
        assert_eq!(euler_barycenter(2, 2), b(1));
        for n in 1..7 {
            assert_eq!(euler_barycenter(n, 1), b(1));
        }
    }

    #[test]
    fn suspension_identity() {
        for n in 1..8 {
            for chi in -6..7 {
                assert_eq!(euler_barycenter(n, chi), b(2) - euler_rsp(n, 2 - chi), "n={n} chi={chi}");
            }
        }
    }
}
