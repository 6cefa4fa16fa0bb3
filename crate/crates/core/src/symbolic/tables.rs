//! Mod-p Betti numbers of symmetric products of spheres and of barycenter
//! spaces of spheres, read off from filtered polynomial algebras.
//!
//! Every series here is unreduced: the coefficient in degree 0 is 1.

use crate::error::{Error, Result};
use crate::homology::is_prime;
use crate::series::PoincareSeries;

use super::admissible::{admissible_sequences, count_monomials, BigradedGenerator, Filtration};

/// Polynomial generators of `H^*(K(Z, k); F_2)` up to degree `dmax`, one per
/// admissible word on `ι_k`.
pub fn sphere_generators_mod2(k: u32, dmax: u32) -> Result<Vec<BigradedGenerator>> {
    Ok(admissible_sequences(k, dmax)?
        .into_iter()
        .map(BigradedGenerator::from_word)
        .collect())
}

fn need_weight(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    Ok(())
}

fn sphere_series(n: usize, k: u32, dmax: usize, filt: Filtration) -> Result<PoincareSeries> {
    need_weight(n)?;
    if k == 0 {
        return Err(Error::InvalidParameter("sphere dimension must be at least 1".into()));
    }
    if k == 1 {
        // exterior on one class of filtration 1
        let gens = [BigradedGenerator::named("ι_1", 1, 1, true)];
        return Ok(count_monomials(&gens, filt, dmax, 2));
    }
    let gens = sphere_generators_mod2(k, dmax as u32)?;
    Ok(count_monomials(&gens, filt, dmax, 2))
}

/// Betti numbers of `SP̄^n S^k` over `F_2` in degrees `0..=dmax`.
pub fn rsp_sphere_series_mod2(n: usize, k: u32, dmax: usize) -> Result<PoincareSeries> {
    let mut s = sphere_series(n, k, dmax, Filtration::Exactly(n as u64))?;
    s.coeffs[0] = 1;
    Ok(s)
}

/// Betti numbers of `SP^n S^k` over `F_2` in degrees `0..=dmax`.
pub fn sp_sphere_series_mod2(n: usize, k: u32, dmax: usize) -> Result<PoincareSeries> {
    sphere_series(n, k, dmax, Filtration::AtMost(n as u64))
}

/// Lowers every positive degree by one and puts 1 back in degree 0.
fn desuspend(s: &PoincareSeries) -> PoincareSeries {
    let mut out = s.reduced().shift_down(1);
    out.coeffs[0] += 1;
    out
}

/// Betti numbers of `B_n(S^k)` over `F_2` in degrees `0..=dmax`, from
/// `ΣB_n(S^k) = SP̄^n S^{k+1}`.
pub fn barycenter_sphere_series_mod2(n: usize, k: u32, dmax: usize) -> Result<PoincareSeries> {
    if k == 0 {
        return Err(Error::InvalidParameter("sphere dimension must be at least 1".into()));
    }
    Ok(desuspend(&rsp_sphere_series_mod2(n, k + 1, dmax + 1)?))
}

/// Generators for `S^3` at an odd prime: exterior `ι` and `h_i`,
/// polynomial `b_i`, with `h_i`, `b_i` in degrees `2p^i + 1`, `2p^i + 2` and
/// filtration `p^i`.
pub fn s3_generators_odd(p: u64, dmax: u32) -> Vec<BigradedGenerator> {
    let mut gens = vec![BigradedGenerator::named("ι", 3, 1, true)];
    let mut q = p;
    let mut i = 1;
    while 2 * q < dmax as u64 {
        gens.push(BigradedGenerator::named(&format!("h_{i}"), (2 * q + 1) as u32, q, true));
        gens.push(BigradedGenerator::named(&format!("b_{i}"), (2 * q + 2) as u32, q, false));
        q *= p;
        i += 1;
    }
    gens
}

fn need_odd_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::InvalidParameter("p = 2 is handled by the mod-2 tables".into()));
    }
    Ok(())
}

/// Betti numbers of `B_n(S^2)` over `F_p`, `p` an odd prime.
pub fn barycenter_s2_series_modp(n: usize, p: u64, dmax: usize) -> Result<PoincareSeries> {
    need_weight(n)?;
    need_odd_prime(p)?;
    let gens = s3_generators_odd(p, dmax as u32 + 1);
    let s = count_monomials(&gens, Filtration::Exactly(n as u64), dmax + 1, p);
    Ok(desuspend(&s))
}

/// Betti numbers of `B_n(S^k)` over `F_p` for `p > n > 1`: one class in
/// degree `n(k+1) - 1` when `k` is odd, none when `k` is even. The series
/// runs up to that degree.
pub fn barycenter_sphere_large_p(n: usize, k: u32, p: u64) -> Result<PoincareSeries> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n < 2 || p as usize <= n {
        return Err(Error::InvalidParameter(format!("need p > n > 1, got p = {p}, n = {n}")));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("sphere dimension must be at least 1".into()));
    }
    let top = n * (k as usize + 1) - 1;
    let mut s = PoincareSeries::unit(p, top);
    if k % 2 == 1 {
        s.coeffs[top] = 1;
    }
    Ok(s)
}

/// Reduced Betti numbers of `SP̄^r X` for `r = 0..`, with `reduced[0]` the
/// unit (the `S^0` of the smash product).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RspFamily {
    pub label: String,
    pub reduced: Vec<PoincareSeries>,
}

impl RspFamily {
    /// `SP̄^r S^k` over `F_2` for `r = 0..=n`.
    pub fn sphere_mod2(k: u32, n: usize, dmax: usize) -> Result<Self> {
        let mut reduced = vec![PoincareSeries::unit(2, dmax)];
        for r in 1..=n {
            reduced.push(rsp_sphere_series_mod2(r, k, dmax)?.reduced());
        }
        Ok(RspFamily {
            label: format!("S^{k}"),
            reduced,
        })
    }

    /// A space `X` with `SP̄^r X` known to be acyclic for `r ≥ 2`, such as a
    /// circle; `reduced` is `H̃(X)`.
    pub fn concentrated(label: &str, reduced: PoincareSeries, n: usize) -> Self {
        let (p, dmax) = (reduced.p, reduced.dmax());
        let mut all = vec![PoincareSeries::unit(p, dmax), reduced];
        all.extend((2..=n).map(|_| PoincareSeries::zero(p, dmax)));
        RspFamily {
            label: label.to_string(),
            reduced: all,
        }
    }
}

/// Betti numbers of `SP̄^n(X_1 ∨ ... ∨ X_m)` as the sum over `r_1 + ... +
/// r_m = n` of `H̃(SP̄^{r_1} X_1) ⊗ ... ⊗ H̃(SP̄^{r_m} X_m)`.
pub fn rsp_wedge_series(n: usize, parts: &[RspFamily]) -> Result<PoincareSeries> {
    let first = parts
        .first()
        .and_then(|f| f.reduced.first())
        .ok_or_else(|| Error::MissingSeries("no wedge summands".into()))?;
    let (p, dmax) = (first.p, first.dmax());
    for part in parts {
        if part.reduced.len() <= n {
            return Err(Error::MissingSeries(format!(
                "{}: SP̄^r known for r < {}, need r ≤ {n}",
                part.label,
                part.reduced.len()
            )));
        }
        if part.reduced.iter().any(|s| s.p != p) {
            return Err(Error::InvalidParameter(format!("{}: characteristics differ", part.label)));
        }
    }
    // acc[r]: the wedge of the parts seen so far, weight r
    let mut acc: Vec<PoincareSeries> = (0..=n)
        .map(|r| if r == 0 { PoincareSeries::unit(p, dmax) } else { PoincareSeries::zero(p, dmax) })
        .collect();
    for part in parts {
        let mut next = vec![PoincareSeries::zero(p, dmax); n + 1];
        for (r, a) in acc.iter().enumerate() {
            for s in 0..=n - r {
                next[r + s] = next[r + s].add(&a.mul(&part.reduced[s]));
            }
        }
        acc = next;
    }
    let mut total = acc.swap_remove(n);
    if n > 0 {
        total.coeffs[0] += 1;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(s: &PoincareSeries) -> Vec<u64> {
        s.coeffs.clone()
    }

    #[test]
    fn reduced_square_of_three_sphere() {
        let s = rsp_sphere_series_mod2(2, 3, 8).unwrap();
        assert_eq!(coeffs(&s), vec![1, 0, 0, 0, 0, 1, 1, 0, 0]);
    }

    #[test]
    fn weight_one_is_the_sphere() {
        for k in 1..6 {
            let s = rsp_sphere_series_mod2(1, k, 10).unwrap();
            let mut want = vec![0u64; 11];
            want[0] = 1;
            want[k as usize] = 1;
            assert_eq!(coeffs(&s), want);
        }
    }

    #[test]
    fn symmetric_products_of_two_sphere() {
        for n in 1..5 {
            let s = sp_sphere_series_mod2(n, 2, 12).unwrap();
            let want: Vec<u64> = (0..=12).map(|d| u64::from(d % 2 == 0 && d <= 2 * n)).collect();
            assert_eq!(coeffs(&s), want);
        }
    }

    #[test]
    fn circle_is_exterior() {
        for n in 2..5 {
            assert!(rsp_sphere_series_mod2(n, 1, 10).unwrap().reduced().is_zero());
            assert_eq!(sp_sphere_series_mod2(n, 1, 10).unwrap().coeffs[..3], [1, 1, 0]);
        }
    }

    #[test]
    fn barycenter_tables_mod2() {
        let s = barycenter_sphere_series_mod2(2, 2, 8).unwrap();
        assert_eq!(coeffs(&s), vec![1, 0, 0, 0, 1, 1, 0, 0, 0]);
        let s = barycenter_sphere_series_mod2(3, 2, 10).unwrap();
        assert_eq!(coeffs(&s), vec![1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0]);
        for k in 1..5 {
            let s = barycenter_sphere_series_mod2(1, k, 8).unwrap();
            assert_eq!(s.reduced().total(), 1);
            assert_eq!(s.get(k as usize), 1);
        }
        // B_n(S^1) = S^{2n-1}
        for n in 2..5 {
            let s = barycenter_sphere_series_mod2(n, 1, 12).unwrap();
            assert_eq!(s.reduced().total(), 1);
            assert_eq!(s.get(2 * n - 1), 1);
        }
    }

    #[test]
    fn barycenter_tables_odd() {
        assert!(barycenter_s2_series_modp(2, 3, 10).unwrap().reduced().is_zero());
        let s = barycenter_s2_series_modp(1, 5, 6).unwrap();
        assert_eq!(coeffs(&s), vec![1, 0, 1, 0, 0, 0, 0]);
        let s = barycenter_s2_series_modp(3, 3, 10).unwrap();
        assert_eq!(coeffs(&s), vec![1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0]);
        assert!(barycenter_s2_series_modp(2, 2, 10).is_err());
        assert!(matches!(barycenter_s2_series_modp(2, 9, 10), Err(Error::NotPrime(9))));
    }

    #[test]
    fn large_primes() {
        let s = barycenter_sphere_large_p(2, 1, 3).unwrap();
        assert_eq!(coeffs(&s), vec![1, 0, 0, 1]);
        assert!(barycenter_sphere_large_p(2, 2, 5).unwrap().reduced().is_zero());
        let s = barycenter_sphere_large_p(3, 3, 5).unwrap();
        assert_eq!(s.dmax(), 11);
        assert_eq!(s.get(11), 1);
        assert!(barycenter_sphere_large_p(3, 1, 3).is_err());
        assert!(barycenter_sphere_large_p(1, 1, 3).is_err());
    }

    #[test]
    fn wedges() {
        let circle = PoincareSeries::monomial(2, 8, 1, 1);
        let c = RspFamily::concentrated("S^1", circle, 2);
        let s = rsp_wedge_series(2, &[c.clone(), c.clone()]).unwrap();
        assert_eq!(coeffs(&s), vec![1, 0, 1, 0, 0, 0, 0, 0, 0]);
        let s = rsp_wedge_series(1, &[c.clone(), c]).unwrap();
        assert_eq!(coeffs(&s), vec![1, 2, 0, 0, 0, 0, 0, 0, 0]);
        let a = RspFamily::sphere_mod2(2, 2, 8).unwrap();
        let b = RspFamily::sphere_mod2(3, 2, 8).unwrap();
        let s = rsp_wedge_series(2, &[a.clone(), b]).unwrap();
        assert_eq!(coeffs(&s), vec![1, 0, 0, 0, 1, 2, 1, 0, 0]);
        let short = RspFamily::sphere_mod2(2, 1, 8).unwrap();
        assert!(matches!(rsp_wedge_series(2, &[a, short]), Err(Error::MissingSeries(_))));
    }
}
