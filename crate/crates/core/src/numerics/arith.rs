//! Small arithmetic functions on machine integers.

use crate::error::{domain, Result};

/// Positive divisors of `n` in ascending order. `n = 0` is rejected.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(domain("divisors", "n must be positive"));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// `σ_α(n) = Σ_{d | n} d^α`; `α` may be negative.
pub fn divisor_sigma(alpha: i32, n: u64) -> Result<f64> {
    let ds = divisors(n)?;
    // ascending magnitude of terms keeps the sum tight for α < 0
    let terms: Vec<f64> = if alpha < 0 {
        ds.iter().rev().map(|&d| (d as f64).powi(alpha)).collect()
    } else {
        ds.iter().map(|&d| (d as f64).powi(alpha)).collect()
    };
    Ok(super::compensated_sum(terms))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin, exact for every `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn is_squarefree(mut n: u64) -> bool {
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        while n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    true
}

/// True when `d` is the discriminant of a quadratic field: `d ≡ 1 (mod 4)`
/// squarefree, or `d = 4m` with `m ≡ 2, 3 (mod 4)` squarefree. `d = 1` is
/// excluded.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    let r = d.rem_euclid(4);
    if r == 1 {
        return is_squarefree(d.unsigned_abs());
    }
    if r == 0 {
        let m = d / 4;
        let mr = m.rem_euclid(4);
        return (mr == 2 || mr == 3) && is_squarefree(m.unsigned_abs());
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_examples() {
        assert_eq!(divisor_sigma(1, 6).unwrap(), 12.0);
        assert_eq!(divisor_sigma(-3, 1).unwrap(), 1.0);
        assert_eq!(divisor_sigma(-3, 4).unwrap(), 73.0 / 64.0);
        assert!(divisor_sigma(1, 0).is_err());
    }

    #[test]
    fn sigma_duality() {
        for s in 1..=3i32 {
            for n in 1..=10_000u64 {
                let lhs = divisor_sigma(-s, n).unwrap() * (n as f64).powi(s);
                let rhs = divisor_sigma(s, n).unwrap();
                assert!((lhs - rhs).abs() <= 1e-12 * rhs, "s={s} n={n}");
            }
        }
    }

    #[test]
    fn divisors_sorted() {
        assert_eq!(divisors(36).unwrap(), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
    }

    #[test]
    fn miller_rabin_against_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..20_000u64 {
            assert_eq!(is_prime_u64(n), trial(n), "{n}");
        }
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn fundamental_discriminants() {
        let yes = [-3, -4, -7, -8, -11, -15, -20, -23, -24, 5, 8, 12, 13, 17, 21, 24, 28];
        let no = [-1, -2, -12, -16, 0, 1, 2, 3, 4, 9, 16, 20 * 4, 25, 45];
        for d in yes {
            assert!(is_fundamental_discriminant(d), "{d}");
        }
        for d in no {
            assert!(!is_fundamental_discriminant(d), "{d}");
        }
    }
}
