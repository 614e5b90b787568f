//! Gamma, digamma and polygamma on the positive real axis.

use std::f64::consts::PI;

use crate::error::{domain, Result};

use super::numbers::bernoulli_over_factorial;

const SHIFT: f64 = 10.0;
const POLY_SHIFT: f64 = 20.0;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

fn check_positive(op: &'static str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(domain(op, format!("x = {x} must be positive and finite")))
    }
}

/// `ln x − ψ(x)` for `x ≥ SHIFT` from the asymptotic series.
fn log_minus_digamma_asymptotic(x: f64) -> f64 {
    // ln x − ψ(x) = 1/(2x) + Σ B_{2k}/(2k x^{2k})
    let bf = bernoulli_over_factorial(12);
    let x2 = 1.0 / (x * x);
    let mut p = 1.0;
    let mut fact = 1.0; // (2k)!
    let mut acc = 0.0;
    for (k, b) in bf.iter().enumerate() {
        let n = 2 * (k + 1);
        fact *= ((n - 1) * n) as f64;
        p *= x2;
        acc += b * fact / n as f64 * p;
    }
    0.5 / x + acc
}

/// Digamma ψ(x) for `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    check_positive("digamma", x)?;
    let mut shift = 0.0;
    let mut y = x;
    while y < SHIFT {
        shift += 1.0 / y;
        y += 1.0;
    }
    Ok(y.ln() - log_minus_digamma_asymptotic(y) - shift)
}

/// `ln x − ψ(x)` without cancellation at large `x`.
pub fn log_minus_digamma(x: f64) -> Result<f64> {
    check_positive("log_minus_digamma", x)?;
    if x >= SHIFT {
        Ok(log_minus_digamma_asymptotic(x))
    } else {
        Ok(x.ln() - digamma(x)?)
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Polygamma `ψ^{(m)}(x)` for `1 ≤ m ≤ 6`, `x > 0`.
pub fn polygamma(m: u32, x: f64) -> Result<f64> {
    if !(1..=6).contains(&m) {
        return Err(domain("polygamma", format!("order {m} outside 1..=6")));
    }
    check_positive("polygamma", x)?;
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    let mf = factorial(m);
    // ψ^{(m)}(x) = ψ^{(m)}(x+1) + (−1)^{m+1} m!/x^{m+1}
    let mut shift = 0.0;
    let mut y = x;
    while y < POLY_SHIFT {
        shift += y.powi(-(m as i32) - 1);
        y += 1.0;
    }
    // (−1)^{m+1}[(m−1)!/y^m + m!/(2y^{m+1}) + Σ B_{2k} (2k+m−1)!/((2k)! y^{2k+m})]
    let bf = bernoulli_over_factorial(12);
    let inv = 1.0 / y;
    let mut series = factorial(m - 1) * inv.powi(m as i32) + 0.5 * mf * inv.powi(m as i32 + 1);
    let mut fact = 1.0; // (2k−1)!
    for (k, b) in bf.iter().enumerate() {
        let n = 2 * (k as u32 + 1);
        fact *= f64::from((n - 2).max(1) * (n - 1));
        let rising: f64 = (n..n + m).map(f64::from).product(); // (n+m−1)!/(n−1)!
        series += b * fact * rising * inv.powi((n + m) as i32);
    }
    Ok(sign * (series + mf * shift))
}

/// `ln Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    check_positive("log_gamma", x)?;
    let mut y = x;
    let mut shift = 0.0;
    while y < SHIFT {
        shift += y.ln();
        y += 1.0;
    }
    let bf = bernoulli_over_factorial(12);
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut p = inv;
    let mut fact = 1.0;
    let mut series = 0.0;
    for (k, b) in bf.iter().enumerate() {
        let n = 2 * (k + 1);
        fact *= ((n - 1) * n) as f64;
        // B_{2k}/(2k(2k−1) y^{2k−1}) = [B_{2k}/(2k)!]·(2k−2)!/y^{2k−1}
        series += b * fact / ((n * (n - 1)) as f64) * p;
        p *= inv2;
    }
    Ok((y - 0.5) * y.ln() - y + LN_SQRT_2PI + series - shift)
}

/// Γ(x) for real `x` away from the poles `0, −1, −2, …`.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || (x <= 0.0 && x == x.floor()) {
        return Err(domain("gamma", format!("x = {x} is a pole or not finite")));
    }
    if x > 0.0 {
        return Ok(log_gamma(x)?.exp());
    }
    // Γ(x)Γ(1−x) = π/sin(πx)
    let s = (PI * x).sin();
    Ok(PI / (s * log_gamma(1.0 - x)?.exp()))
}

/// `∫₀^∞ dt / ((1+t)^a t^b) = Γ(1−b)Γ(a+b−1)/Γ(a)` for `b < 1 < a + b`.
pub fn beta_integral(a: f64, b: f64) -> Result<f64> {
    if !(b < 1.0 && a + b > 1.0) {
        return Err(domain("beta_integral", format!("need b < 1 < a + b, got a = {a}, b = {b}")));
    }
    Ok((log_gamma(1.0 - b)? + log_gamma(a + b - 1.0)? - log_gamma(a)?).exp())
}
