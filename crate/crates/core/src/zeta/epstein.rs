//! Epstein zeta functions of positive-definite binary quadratic forms.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::numerics::{divisor_sigma, CompensatedSum};
use crate::zeta::hurwitz_zeta;

/// `A x² + B x y + C y²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    /// Positive-definite forms only: `A > 0` and `B² − 4AC < 0`.
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        let f = QuadForm { a, b, c };
        if a <= 0 || f.discriminant() >= 0 {
            return Err(domain("QuadForm", format!("({a}, {b}, {c}) is not positive definite")));
        }
        Ok(f)
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn eval(&self, m: i64, n: i64) -> i64 {
        self.a * m * m + self.b * m * n + self.c * n * n
    }

    /// Smallest eigenvalue of the Gram matrix `[[A, B/2], [B/2, C]]`.
    pub fn lambda_min(&self) -> f64 {
        let (a, b, c) = (self.a as f64, self.b as f64, self.c as f64);
        0.5 * (a + c) - (0.25 * (a - c) * (a - c) + 0.25 * b * b).sqrt()
    }

    /// Upper half-plane root `(−B + i√|d|)/(2A)` as `(re, im)`.
    pub fn root(&self) -> (f64, f64) {
        let two_a = 2.0 * self.a as f64;
        (-(self.b as f64) / two_a, (self.discriminant().unsigned_abs() as f64).sqrt() / two_a)
    }
}

/// Half-weighted lattice sum `½ Σ' Q(m, n)^{−s}` over `0 < max(|m|, |n|) ≤ R`.
///
/// Returns the value and a bound on the omitted tail,
/// `½ · 2π ∫_{R−1}^∞ r (λ_min r²)^{−s} dr`. Rows are accumulated in a fixed
/// order with compensated summation.
pub fn epstein_partial_zeta(form: QuadForm, s: f64, radius: u32) -> Result<(f64, f64)> {
    let form = QuadForm::new(form.a, form.b, form.c)?;
    if !(s > 1.0) {
        return Err(domain("epstein_partial_zeta", format!("s = {s} must exceed 1")));
    }
    if radius < 2 {
        return Err(domain("epstein_partial_zeta", "radius must be at least 2"));
    }
    let r = i64::from(radius);
    let mut total = CompensatedSum::new();
    for m in -r..=r {
        let mut row = CompensatedSum::new();
        for n in -r..=r {
            if m == 0 && n == 0 {
                continue;
            }
            row.add((form.eval(m, n) as f64).powf(-s));
        }
        total.add(row.value());
    }
    let rr = f64::from(radius) - 1.0;
    let tail = 0.5 * 2.0 * PI * form.lambda_min().powf(-s) * rr.powf(2.0 - 2.0 * s) / (2.0 * s - 2.0);
    Ok((0.5 * total.value(), tail))
}

/// `Σ'_{(m,n)} Q(m, n)^{−2}` (full weight) by the Chowla–Selberg expansion at
/// `s = 2`. With `y = √|d|/(2A)` and `x = B/(2A)`:
/// `A^{−2}[2ζ(4) + (π/y³)(ζ(3) + 2Σ_N σ_{−3}(N) cos(2πNx) e^{−2πNy}(1 + 2πNy))]`.
pub fn epstein_zeta_2_series(form: QuadForm) -> Result<f64> {
    let form = QuadForm::new(form.a, form.b, form.c)?;
    let a = form.a as f64;
    let y = (form.discriminant().unsigned_abs() as f64).sqrt() / (2.0 * a);
    let x = form.b as f64 / (2.0 * a);
    let mut acc = CompensatedSum::new();
    for n in 1..=400u64 {
        let t = 2.0 * PI * n as f64 * y;
        let term = divisor_sigma(-3, n)? * (2.0 * PI * n as f64 * x).cos() * (-t).exp() * (1.0 + t);
        acc.add(term);
        if (-t).exp() * (1.0 + t) < 1e-18 {
            break;
        }
    }
    let z3 = hurwitz_zeta(3.0, 1.0)?;
    let z4 = hurwitz_zeta(4.0, 1.0)?;
    Ok((2.0 * z4 + PI / (y * y * y) * (z3 + 2.0 * acc.value())) / (a * a))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CATALAN: f64 = 0.915_965_594_177_219;

    #[test]
    fn form_basics() {
        assert_eq!(QuadForm::new(1, 1, 6).unwrap().discriminant(), -23);
        assert!(QuadForm::new(1, 3, 1).is_err());
        assert!(QuadForm::new(-1, 0, -1).is_err());
        let f = QuadForm::new(1, 0, 1).unwrap();
        assert!((f.lambda_min() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sum_of_two_squares() {
        // Σ'(m²+n²)^{−2} = 4ζ(2)β(2); the routine halves it
        let (v, tail) = epstein_partial_zeta(QuadForm::new(1, 0, 1).unwrap(), 2.0, 400).unwrap();
        let want = 0.5 * 4.0 * PI * PI / 6.0 * CATALAN;
        assert!((v - want).abs() <= tail, "{} > {}", (v - want).abs(), tail);
        assert!(tail < 1e-4);
    }

    #[test]
    fn series_matches_lattice() {
        for (a, b, c) in [(1, 0, 1), (1, 1, 6), (2, 1, 3), (1, 1, 1), (3, 2, 5)] {
            let f = QuadForm::new(a, b, c).unwrap();
            let (lat, tail) = epstein_partial_zeta(f, 2.0, 300).unwrap();
            let ser = 0.5 * epstein_zeta_2_series(f).unwrap();
            assert!((lat - ser).abs() <= tail, "({a},{b},{c})");
        }
    }

    #[test]
    fn fold_symmetry() {
        let f = QuadForm::new(2, 1, 3).unwrap();
        let r = 60i64;
        let (full, _) = epstein_partial_zeta(f, 2.0, r as u32).unwrap();
        // half-plane: m > 0, or m = 0 and n > 0, counted twice
        let mut acc = CompensatedSum::new();
        for m in 0..=r {
            let mut row = CompensatedSum::new();
            for n in -r..=r {
                if m > 0 || n > 0 {
                    row.add((f.eval(m, n) as f64).powf(-2.0));
                }
            }
            acc.add(row.value());
        }
        assert!((full - acc.value()).abs() < 1e-15);
    }
}
