//! Exact Euler and Bernoulli numbers, built once on first use.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Result};

/// Largest even index served from the exact tables.
pub const MAX_TABLE_INDEX: usize = 60;

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

fn euler_table() -> &'static [BigInt] {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // E_{2n} = −Σ_{k<n} C(2n, 2k) E_{2k}
        let mut e: Vec<BigInt> = vec![BigInt::one()];
        for n in 1..=MAX_TABLE_INDEX / 2 {
            let row = binomial_row(2 * n);
            let mut acc = BigInt::zero();
            for (k, ek) in e.iter().enumerate() {
                acc += &row[2 * k] * ek;
            }
            e.push(-acc);
        }
        e
    })
}

fn bernoulli_table() -> &'static [BigRational] {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Σ_{k=0}^{m} C(m+1, k) B_k = 0
        let mut b: Vec<BigRational> = vec![BigRational::one()];
        for m in 1..=MAX_TABLE_INDEX {
            let row = binomial_row(m + 1);
            let mut acc = BigRational::zero();
            for (k, bk) in b.iter().enumerate() {
                acc += BigRational::from_integer(row[k].clone()) * bk;
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        b
    })
}

/// Euler number `E_n` (zero for odd `n`), `n ≤ 60`.
pub fn euler_number(n: usize) -> Result<BigInt> {
    if n > MAX_TABLE_INDEX {
        return Err(domain("euler_number", format!("index {n} > {MAX_TABLE_INDEX}")));
    }
    if n % 2 == 1 {
        return Ok(BigInt::zero());
    }
    Ok(euler_table()[n / 2].clone())
}

/// Bernoulli number `B_n` with `B_1 = −1/2`, `n ≤ 60`.
pub fn bernoulli(n: usize) -> Result<BigRational> {
    if n > MAX_TABLE_INDEX {
        return Err(domain("bernoulli", format!("index {n} > {MAX_TABLE_INDEX}")));
    }
    Ok(bernoulli_table()[n].clone())
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    // numerator and denominator can exceed f64 range separately only far
    // beyond index 60, so a direct conversion is exact enough
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// `B_{2j}` rounded to `f64`, for `2j ≤ 60`.
pub fn bernoulli_f64(n: usize) -> Result<f64> {
    bernoulli(n).map(|b| ratio_to_f64(&b))
}

/// `B_{2j}/(2j)!` for `j = 1..=jmax` as `f64` (exact rational first).
pub(crate) fn bernoulli_over_factorial(jmax: usize) -> Vec<f64> {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let t = TABLE.get_or_init(|| {
        let mut fact = BigInt::one();
        let mut out = Vec::new();
        for n in 1..=MAX_TABLE_INDEX {
            fact *= BigInt::from(n);
            if n % 2 == 0 {
                let r = &bernoulli_table()[n] / BigRational::from_integer(fact.clone());
                out.push(ratio_to_f64(&r));
            }
        }
        out
    });
    t[..jmax.min(t.len())].to_vec()
}

/// Taylor coefficient `E_{2k}/(2k)!` of `sech x`, for any `k`.
///
/// Exact for `2k ≤ 60`; beyond that from
/// `|E_{2k}|/(2k)! = 4^{k+1} β(2k+1)/π^{2k+1}`, where the Dirichlet beta
/// value is within `3^{-61}` of 1.
pub fn sech_coefficient(k: usize) -> f64 {
    if 2 * k <= MAX_TABLE_INDEX {
        let mut fact = BigInt::one();
        for n in 1..=2 * k {
            fact *= BigInt::from(n);
        }
        let r = BigRational::new(euler_table()[k].clone(), fact);
        return ratio_to_f64(&r);
    }
    let s = (2 * k + 1) as i32;
    let beta: f64 = 1.0 - 3f64.powi(-s) + 5f64.powi(-s) - 7f64.powi(-s);
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let scale = (4.0 / (std::f64::consts::PI * std::f64::consts::PI)).powi(k as i32);
    sign * 4.0 / std::f64::consts::PI * scale * beta
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_initial_values() {
        let want = [1i64, -1, 5, -61, 1385, -50521];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(euler_number(2 * k).unwrap(), BigInt::from(*w));
        }
        assert_eq!(euler_number(7).unwrap(), BigInt::zero());
        assert!(euler_number(62).is_err());
        let e = euler_table();
        for k in 0..e.len() {
            let positive = e[k] > BigInt::zero();
            assert_eq!(positive, k % 2 == 0);
        }
    }

    #[test]
    fn bernoulli_values() {
        let r = |p: i64, q: i64| BigRational::new(BigInt::from(p), BigInt::from(q));
        assert_eq!(bernoulli(0).unwrap(), r(1, 1));
        assert_eq!(bernoulli(1).unwrap(), r(-1, 2));
        assert_eq!(bernoulli(2).unwrap(), r(1, 6));
        assert_eq!(bernoulli(12).unwrap(), r(-691, 2730));
        for j in 1..30 {
            assert!(bernoulli(2 * j + 1).unwrap().is_zero());
        }
    }

    #[test]
    fn sech_generating_function() {
        // the radius is π/2, so terms shrink like (2/π)^{2k}: fifteen terms
        // leave ~5e-7 at x = 1, forty reach rounding level
        let partial = |kmax: usize| 1.0 + (1..=kmax).map(sech_coefficient).sum::<f64>();
        let sech1 = 1.0 / 1f64.cosh();
        assert!((partial(15) - sech1 + 4.800_757e-7).abs() < 1e-12);
        assert!((partial(40) - sech1).abs() < 1e-12);
    }

    #[test]
    fn sech_asymptotic_continues_table() {
        // the asymptotic form already agrees with the table at 2k = 60
        let k = 30usize;
        let s = (2 * k + 1) as i32;
        let beta = 1.0 - 3f64.powi(-s);
        let approx = 4.0 / std::f64::consts::PI
            * (4.0 / (std::f64::consts::PI * std::f64::consts::PI)).powi(k as i32)
            * beta;
        let exact = sech_coefficient(k);
        assert!(((exact - approx) / exact).abs() < 1e-14);
        assert!(sech_coefficient(31) < 0.0 && sech_coefficient(32) > 0.0);
    }
}
