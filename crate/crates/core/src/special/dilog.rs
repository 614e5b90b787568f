//! Complex dilogarithm, Clausen `Cl_2` and the Bloch–Wigner function.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{domain, Result};

use super::numbers::bernoulli_over_factorial;

const ZETA2: f64 = PI * PI / 6.0;

/// `B_{2k}/(2k+1)!` for `k ≥ 1`.
fn series_coefficients() -> &'static [f64] {
    static C: OnceLock<Vec<f64>> = OnceLock::new();
    C.get_or_init(|| {
        bernoulli_over_factorial(30)
            .iter()
            .enumerate()
            .map(|(k, b)| b / (2 * k + 3) as f64)
            .collect()
    })
}

/// `Li_2(w)` for `|w| ≤ 1`, `Re w ≤ 1/2`, via the Bernoulli series in
/// `u = −ln(1 − w)`; here `|u| < 1.8`, well inside the radius `2π`.
fn li2_core(w: Complex64) -> Complex64 {
    let u = -(Complex64::new(1.0, 0.0) - w).ln();
    let u2 = u * u;
    let mut acc = u - 0.25 * u2;
    let mut p = u * u2;
    for c in series_coefficients() {
        let t = p * *c;
        acc += t;
        if t.norm() < 1e-18 * acc.norm() {
            break;
        }
        p *= u2;
    }
    acc
}

/// Principal branch of `Li_2(z)`.
pub fn dilog(z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    if z == Complex64::new(0.0, 0.0) {
        return z;
    }
    if z == one {
        return Complex64::new(ZETA2, 0.0);
    }
    if z.norm() > 1.0 {
        // Li2(z) = −ζ(2) − ln²(−z)/2 − Li2(1/z)
        let l = (-z).ln();
        return -ZETA2 - 0.5 * l * l - dilog(one / z);
    }
    if z.re > 0.5 {
        // Li2(z) = ζ(2) − ln z ln(1−z) − Li2(1−z); |1−z| < 1 here
        return ZETA2 - z.ln() * (one - z).ln() - li2_core(one - z);
    }
    li2_core(z)
}

/// Clausen function `Cl_2(θ) = Σ sin(nθ)/n² = Im Li_2(e^{iθ})`.
pub fn clausen2(theta: f64) -> f64 {
    let t = theta.rem_euclid(2.0 * PI);
    if t == 0.0 {
        return 0.0;
    }
    dilog(Complex64::from_polar(1.0, t)).im
}

/// Bloch–Wigner dilogarithm `D(z) = Im Li_2(z) + arg(1 − z) ln|z|`.
pub fn bloch_wigner(z: Complex64) -> Result<f64> {
    if z == Complex64::new(0.0, 0.0) || z == Complex64::new(1.0, 0.0) {
        return Err(domain("bloch_wigner", "z must avoid 0 and 1"));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(domain("bloch_wigner", "z must be finite"));
    }
    if z.im == 0.0 {
        return Ok(0.0);
    }
    let one = Complex64::new(1.0, 0.0);
    Ok(dilog(z).im + (one - z).arg() * z.norm().ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    const CATALAN: f64 = 0.915_965_594_177_219;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn dilog_series_oracle_inside_disk() {
        for z in [c(0.3, 0.2), c(-0.4, 0.1), c(0.0, 0.6), c(0.45, -0.3), c(-0.7, -0.5)] {
            let mut acc = c(0.0, 0.0);
            let mut p = z;
            for n in 1..4000 {
                acc += p / (n * n) as f64;
                p *= z;
            }
            assert!((dilog(z) - acc).norm() < 1e-13, "{z}");
        }
    }

    #[test]
    fn dilog_special_values() {
        assert!((dilog(c(-1.0, 0.0)).re + PI * PI / 12.0).abs() < 1e-14);
        let ln2 = 2f64.ln();
        assert!((dilog(c(0.5, 0.0)).re - (PI * PI / 12.0 - 0.5 * ln2 * ln2)).abs() < 1e-14);
        assert!((dilog(c(0.0, 1.0)).im - CATALAN).abs() < 1e-14);
    }

    #[test]
    fn clausen_values() {
        assert_eq!(clausen2(0.0), 0.0);
        assert!(clausen2(PI).abs() < 1e-14);
        assert!((clausen2(PI / 2.0) - CATALAN).abs() < 1e-13);
        assert!((clausen2(PI / 2.0 + 2.0 * PI) - CATALAN).abs() < 1e-12);
    }

    #[test]
    fn clausen_duplication() {
        for j in 1..20 {
            let t = j as f64 * PI / 40.0;
            let r = clausen2(2.0 * t) - 2.0 * clausen2(t) + 2.0 * clausen2(PI - t);
            assert!(r.abs() < 1e-11, "{t}: {r}");
        }
    }

    #[test]
    fn bloch_wigner_basic() {
        assert_eq!(bloch_wigner(c(0.5, 0.0)).unwrap(), 0.0);
        let z1 = c(0.5, 23f64.sqrt() / 2.0);
        let d = bloch_wigner(z1).unwrap();
        assert!((bloch_wigner(z1.conj()).unwrap() + d).abs() < 1e-13);
        assert!((bloch_wigner(c(0.0, 1.0)).unwrap() - CATALAN).abs() < 1e-13);
        assert!(bloch_wigner(c(0.0, 0.0)).is_err() && bloch_wigner(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn bloch_wigner_symmetries() {
        let one = c(1.0, 0.0);
        for z in [c(0.3, 0.8), c(2.0, 1.5), c(-1.2, 0.4), c(0.5, 2.3979)] {
            let d = bloch_wigner(z).unwrap();
            assert!((bloch_wigner(one / z).unwrap() + d).abs() < 1e-12);
            assert!((bloch_wigner(one - z).unwrap() + d).abs() < 1e-12);
        }
    }

    #[test]
    fn five_term_relation() {
        let one = c(1.0, 0.0);
        for (x, y) in [(c(0.3, 0.4), c(-0.2, 0.7)), (c(1.5, -0.5), c(0.25, 0.1)), (c(-2.0, 3.0), c(0.6, -1.1))] {
            let xy = x * y;
            let s = bloch_wigner(x).unwrap()
                + bloch_wigner(y).unwrap()
                + bloch_wigner((one - x) / (one - xy)).unwrap()
                + bloch_wigner(one - xy).unwrap()
                + bloch_wigner((one - y) / (one - xy)).unwrap();
            assert!(s.abs() < 1e-9, "{x} {y}: {s}");
        }
    }
}
