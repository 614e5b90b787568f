//! Riemann zeta on `0 < s < 1` from the de Bruijn integral
//! `ζ(s) = 1/(s−1) + (sin πs/π) ∫₀^∞ [ln(1+t) − ψ(1+t)] t^{−s} dt`,
//! and the bracketing of that integral by elementary majorants.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::numerics::{de_quadrature, Domain};
use crate::special::{beta_integral, log_minus_digamma};

const TARGET: f64 = 1e-13;

fn check_strip(op: &'static str, s: f64) -> Result<()> {
    if s > 0.0 && s < 1.0 {
        Ok(())
    } else {
        Err(domain(op, format!("s = {s} outside (0, 1)")))
    }
}

fn de_bruijn_kernel(t: f64) -> f64 {
    // ln x − ψ(x) at x = 1 + t; finite and positive for t ≥ 0
    log_minus_digamma(1.0 + t).unwrap_or(f64::NAN)
}

/// `∫₀^∞ [ln(1+t) − ψ(1+t)] t^{−s} (ln t)^p dt` for `p ∈ {0, 1}`.
fn de_bruijn_integral(s: f64, log_power: i32) -> Result<(f64, f64)> {
    let f = |t: f64| de_bruijn_kernel(t) * t.powf(-s) * t.ln().powi(log_power);
    // split at 1 so both endpoint behaviours get their own transform
    let a = de_quadrature(f, Domain::Finite(0.0, 1.0), TARGET)?;
    let b = de_quadrature(f, Domain::SemiInfinite(1.0), TARGET)?;
    Ok((a.value + b.value, a.error_estimate + b.error_estimate))
}

/// `ζ(s)` for `0 < s < 1` with an absolute error estimate.
pub fn zeta_crit_strip_with_error(s: f64) -> Result<(f64, f64)> {
    check_strip("zeta_crit_strip", s)?;
    let (i, e) = de_bruijn_integral(s, 0)?;
    let w = (PI * s).sin() / PI;
    Ok((1.0 / (s - 1.0) + w * i, w * e))
}

/// `ζ(s)` for `0 < s < 1`.
pub fn zeta_crit_strip(s: f64) -> Result<f64> {
    zeta_crit_strip_with_error(s).map(|v| v.0)
}

/// `(1/π) ∫₀^∞ [ln(1+t) − ψ(1+t)] ln t · t^{−s} dt`, the log-weighted de
/// Bruijn integral that enters `ζ'(s)`.
pub fn de_bruijn_log_integral(s: f64) -> Result<f64> {
    check_strip("de_bruijn_log_integral", s)?;
    Ok(de_bruijn_integral(s, 1)?.0 / PI)
}

/// `ζ'(s)` for `0 < s < 1` by differentiating the de Bruijn form.
pub fn zeta_crit_strip_ds(s: f64) -> Result<f64> {
    check_strip("zeta_crit_strip_ds", s)?;
    let (i0, _) = de_bruijn_integral(s, 0)?;
    let (i1, _) = de_bruijn_integral(s, 1)?;
    let u = s - 1.0;
    Ok(-1.0 / (u * u) + (PI * s).cos() * i0 - (PI * s).sin() / PI * i1)
}

/// Brackets for `I(s) = (sin πs/π) ∫ [ln(1+t) − ψ(1+t)] t^{−s} dt` and the
/// implied brackets for `ζ(s) = 1/(s−1) + I(s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZetaBounds {
    pub s: f64,
    /// de Bruijn value of ζ(s).
    pub value: f64,
    pub value_error: f64,
    /// `I(s)` itself.
    pub integral: f64,
    /// From `1/(2x) < ln x − ψ(x) < 1/x`: `1/2 < I(s) < 1`.
    pub crude: (f64, f64),
    /// From `1/(2x) + 1/(12(x+1/4)²) < ln x − ψ(x) < 1/(2x) + 1/(12x²)`,
    /// evaluated in closed form through Beta integrals.
    pub refined: (f64, f64),
    /// The same refined bracket, by direct quadrature of the majorants.
    pub refined_quadrature: (f64, f64),
    /// `ζ(s)` bracket implied by `refined`.
    pub zeta_bracket: (f64, f64),
}

/// Evaluate the de Bruijn value and its elementary brackets at `s ∈ (0, 1)`.
pub fn zeta_bounds(s: f64) -> Result<ZetaBounds> {
    check_strip("zeta_bounds", s)?;
    let (value, value_error) = zeta_crit_strip_with_error(s)?;
    let w = (PI * s).sin() / PI;
    let b1 = beta_integral(1.0, s)?;
    let b2 = beta_integral(2.0, s)?;
    // ∫ t^{−s}(t + c)^{−2} dt = c^{−1−s} B(2, s)
    let lower = w * 0.5 * (b1 + b2 * 1.25f64.powf(-1.0 - s) / 6.0);
    let upper = w * 0.5 * (b1 + b2 / 6.0);

    let lo_f = |t: f64| t.powf(-s) * 0.5 * (1.0 / (1.0 + t) + 1.0 / (6.0 * (t + 1.25) * (t + 1.25)));
    let hi_f = |t: f64| t.powf(-s) * 0.5 * (1.0 / (1.0 + t) + 1.0 / (6.0 * (t + 1.0) * (t + 1.0)));
    let quad = |f: &dyn Fn(f64) -> f64| -> Result<f64> {
        Ok(de_quadrature(f, Domain::Finite(0.0, 1.0), TARGET)?.value
            + de_quadrature(f, Domain::SemiInfinite(1.0), TARGET)?.value)
    };
    let refined_quadrature = (w * quad(&lo_f)?, w * quad(&hi_f)?);
    let pole = 1.0 / (s - 1.0);
    Ok(ZetaBounds {
        s,
        value,
        value_error,
        integral: value - pole,
        crude: (w * 0.5 * b1, w * b1),
        refined: (lower, upper),
        refined_quadrature,
        zeta_bracket: (pole + lower, pole + upper),
    })
}
