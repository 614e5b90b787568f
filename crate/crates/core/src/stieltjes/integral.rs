//! `γ_k(a)` from the integral representation
//!
//! `γ_k(a) = ln^k(a)/(2a) − ln^{k+1}(a)/(k+1)
//!          + (2/a) ∫₀^∞ [(y/a) Re w_k + Im w_k] / ((1 + y²/a²)(e^{2πy} − 1)) dy`,
//!
//! with `w_k = ln^k(a − iy)` on the principal branch. All orders up to `k_max`
//! share one vector quadrature.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::numerics::{de_quadrature_vec, Domain, DEFAULT_MAX_LEVEL};
use crate::Rational;

/// Highest order accepted. Partial sums of the Laurent series at `|x|` up
/// to 8 need about 60 terms.
pub const MAX_ORDER: usize = 100;
const Y_CUT: f64 = 10.0;
const ABS_TOL: f64 = 1e-15;
const REL_TOL: f64 = 1e-14;

/// `γ_0(a) … γ_N(a)` with per-entry error estimates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LaurentCoefficients {
    pub a: Rational,
    /// `(k, γ_k(a), error estimate)`.
    pub gammas: Vec<(usize, f64, f64)>,
}

impl LaurentCoefficients {
    pub fn value(&self, k: usize) -> Option<f64> {
        self.gammas.get(k).map(|g| g.1)
    }
}

fn check(k_max: usize, a: f64) -> Result<()> {
    if k_max > MAX_ORDER {
        return Err(domain("stieltjes_gamma", format!("order {k_max} > {MAX_ORDER}")));
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(domain("stieltjes_gamma", format!("a = {a} must be positive")));
    }
    Ok(())
}

/// Bound on the part of the integral beyond `y_cut`, for order `k`.
///
/// For `y ≥ Y`, `|(y/a − i)|/(1 + y²/a²) ≤ a/y` and
/// `|ln(a − iy)| ≤ ln(y + a) + π/2 =: m(y)`, so the integrand is below
/// `g(y) = (a/y) m(y)^k e^{−2πy}/(1 − e^{−2πY})`, and `g` decays at least like
/// `e^{−c(y−Y)}` with `c = 2π − k/((Y + a) m(Y))`.
fn tail_bound(k: usize, a: f64, y_cut: f64) -> f64 {
    let m = (y_cut + a).ln() + PI / 2.0;
    let c = 2.0 * PI - k as f64 / ((y_cut + a) * m);
    if c <= 0.0 {
        return f64::INFINITY;
    }
    let g = (a / y_cut) * m.powi(k as i32) * (-2.0 * PI * y_cut).exp() / (-(-2.0 * PI * y_cut).exp_m1());
    (2.0 / a) * g / c
}

/// Batch `γ_0(a) … γ_{k_max}(a)` as `(value, error)` pairs.
pub fn stieltjes_gamma_batch(k_max: usize, a: f64) -> Result<Vec<(f64, f64)>> {
    check(k_max, a)?;
    // the default cut makes the tail negligible for small k; large k push the
    // integrand mass outwards, so extend the interval until the bound is tiny
    let mut y_cut = Y_CUT;
    while tail_bound(k_max, a, y_cut) > 1e-16 && y_cut < 80.0 {
        y_cut += 2.0;
    }
    let dim = k_max + 1;
    let integrand = |y: f64, out: &mut [f64]| {
        let z = Complex64::new(a, -y);
        // principal branch: a − iy must stay in the right half-plane
        if z.re <= 0.0 {
            out.iter_mut().for_each(|o| *o = f64::NAN);
            return;
        }
        let l = z.ln();
        let ya = y / a;
        let denom = (1.0 + ya * ya) * (2.0 * PI * y).exp_m1();
        let mut w = Complex64::new(1.0, 0.0);
        for o in out.iter_mut() {
            *o = (ya * w.re + w.im) / denom;
            w *= l;
        }
    };
    let q = de_quadrature_vec(integrand, dim, Domain::Finite(0.0, y_cut), ABS_TOL, REL_TOL, DEFAULT_MAX_LEVEL)?;
    if !q.converged {
        let worst = q.errors.iter().cloned().fold(0.0, f64::max);
        if worst > 1e-8 {
            return Err(Error::NoConvergence {
                estimate: q.values[0],
                error: worst,
            });
        }
    }
    let la = a.ln();
    let mut out = Vec::with_capacity(dim);
    let mut lk = 1.0; // ln^k a
    for k in 0..dim {
        let head = lk / (2.0 * a) - lk * la / (k as f64 + 1.0);
        let value = head + 2.0 / a * q.values[k];
        let err = 2.0 / a * q.errors[k] + tail_bound(k, a, y_cut) + 4.0 * f64::EPSILON * head.abs();
        out.push((value, err));
        lk *= la;
    }
    Ok(out)
}

/// `γ_k(a)` with an error estimate.
pub fn stieltjes_gamma(k: usize, a: f64) -> Result<(f64, f64)> {
    Ok(stieltjes_gamma_batch(k, a)?[k])
}

/// Laurent coefficients at a rational shift.
pub fn stieltjes_laurent(k_max: usize, a: Rational) -> Result<LaurentCoefficients> {
    let v = stieltjes_gamma_batch(k_max, a.to_f64())?;
    Ok(LaurentCoefficients {
        a,
        gammas: v.into_iter().enumerate().map(|(k, (g, e))| (k, g, e)).collect(),
    })
}
