//! Modified Bessel function `K_0` on the positive axis.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::EULER_GAMMA;

/// `K_0(x)` for `x > 0`.
///
/// Power series for `x ≤ 2`; above that Steed's evaluation of Temme's
/// continued fraction, which stays at full precision where the plain
/// asymptotic expansion does not.
pub fn bessel_k0(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("bessel_k0", format!("x = {x} must be positive and finite")));
    }
    if x <= 2.0 {
        Ok(series(x))
    } else {
        Ok(continued_fraction(x))
    }
}

fn series(x: f64) -> f64 {
    // K0 = −(ln(x/2) + γ) I0 + Σ_{k≥1} (x²/4)^k H_k/(k!)²
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut i0 = 1.0;
    let mut harmonic = 0.0;
    let mut rest = 0.0;
    for k in 1..60 {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0 += term;
        rest += term * harmonic;
        if term * harmonic < 1e-18 * rest {
            break;
        }
    }
    -((0.5 * x).ln() + EULER_GAMMA) * i0 + rest
}

fn continued_fraction(x: f64) -> f64 {
    // Temme's CF2 at order 0 (Numerical Recipes §6.7, bessik)
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..10_000 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            break;
        }
    }
    (PI / (2.0 * x)).sqrt() * (-x).exp() / s
}
