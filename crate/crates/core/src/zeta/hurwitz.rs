//! Hurwitz zeta `ζ(s, a)` and its `s`-derivative by Euler–Maclaurin summation.

use crate::error::{domain, Result};
use crate::numerics::CompensatedSum;
use crate::special::bernoulli_over_factorial;

const DEFAULT_J: usize = 8;
const MAX_DOUBLINGS: u32 = 20;
const REL_TARGET: f64 = 1e-14;

/// Euler–Maclaurin parameters: cutoff `n` and order `j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurwitzParams {
    pub s: f64,
    pub a: f64,
    pub n: u64,
    pub j: usize,
}

fn validate(op: &'static str, s: f64, a: f64) -> Result<()> {
    if !s.is_finite() || s == 1.0 {
        return Err(domain(op, format!("s = {s} (s = 1 is the pole)")));
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(domain(op, format!("a = {a} must be positive")));
    }
    Ok(())
}

fn negative_integer_order(s: f64) -> Option<u64> {
    (s <= 0.0 && s == s.floor() && s > -60.0).then(|| (-s) as u64)
}

/// Cutoff and order chosen before any remainder-driven doubling.
pub fn initial_params(s: f64, a: f64) -> HurwitzParams {
    if let Some(m) = negative_integer_order(s) {
        // (s)_{2j−1} vanishes for 2j − 2 ≥ m: N = 0 is exact
        return HurwitzParams {
            s,
            a,
            n: 0,
            j: (m as usize / 2 + 2).max(DEFAULT_J).min(29),
        };
    }
    if s < 0.0 {
        // starting point of the (N, J) search in `hurwitz_zeta_with_error`
        return HurwitzParams {
            s,
            a,
            n: s.abs().ceil() as u64 + 2,
            j: DEFAULT_J,
        };
    }
    HurwitzParams { s, a, n: default_cutoff(s, a), j: DEFAULT_J }
}

/// `max(⌈|s|⌉ + 10, ⌈10/a⌉)` for `s > 0`. For `s < 0` the `10/a` term is
/// dropped: the head terms then grow like `N^{|s|}` and a large cutoff only
/// adds cancellation, while the remainder depends on `N + a`, not on `a`.
fn default_cutoff(s: f64, a: f64) -> u64 {
    let base = s.abs().ceil() + 10.0;
    if s > 0.0 {
        base.max((10.0 / a).ceil()) as u64
    } else {
        base as u64
    }
}

/// `(s)_m` and its `s`-derivative.
fn rising_and_derivative(s: f64, m: usize) -> (f64, f64) {
    let mut p = 1.0;
    let mut dp = 0.0;
    for i in 0..m {
        let f = s + i as f64;
        dp = dp * f + p;
        p *= f;
    }
    (p, dp)
}

/// Raw Euler–Maclaurin evaluation. Returns the value, an error estimate and
/// the remainder alone. The estimate is the larger of the first omitted
/// correction and the rounding floor of the head terms, which dominates when
/// `s < 0` makes them grow like `N^{|s|}`.
pub fn hurwitz_em(p: HurwitzParams) -> (f64, f64, f64) {
    let HurwitzParams { s, a, n, j } = p;
    let mut acc = CompensatedSum::new();
    let mut magnitude = 0.0;
    for k in (0..n).rev() {
        let t = (k as f64 + a).powf(-s);
        magnitude += t;
        acc.add(t);
    }
    let x = n as f64 + a;
    let xs = x.powf(-s);
    magnitude += (x * xs / (s - 1.0)).abs();
    acc.add(x * xs / (s - 1.0));
    acc.add(0.5 * xs);
    let bf = bernoulli_over_factorial(j + 1);
    let inv2 = 1.0 / (x * x);
    let mut xp = xs / x; // X^{−s−2i+1} at i = 1
    let mut next = 0.0;
    for (i, b) in bf.iter().enumerate() {
        let (r, _) = rising_and_derivative(s, 2 * i + 1);
        let term = b * r * xp;
        if i < j {
            acc.add(term);
        } else {
            next = term.abs();
        }
        xp *= inv2;
    }
    (acc.value(), next.max(2.0 * f64::EPSILON * magnitude), next)
}

/// `ζ(s, a)` for real `s ≠ 1`, `a > 0`, with the remainder estimate.
pub fn hurwitz_zeta_with_error(s: f64, a: f64) -> Result<(f64, f64)> {
    validate("hurwitz_zeta", s, a)?;
    let mut p = initial_params(s, a);
    if p.n == 0 {
        return Ok((hurwitz_em(p).0, 0.0));
    }
    if s < 0.0 {
        // doubling N would only raise the rounding floor; instead balance the
        // remainder against it over a small (N, J) grid
        let mut best = hurwitz_em(p);
        for n in p.n..p.n + 30 {
            for j in [8, 12, 16, 20, 24, 28] {
                let out = hurwitz_em(HurwitzParams { n, j, ..p });
                if out.1 < best.1 {
                    best = out;
                }
            }
        }
        return Ok((best.0, best.1));
    }
    let mut out = hurwitz_em(p);
    for _ in 0..MAX_DOUBLINGS {
        if out.2 <= REL_TARGET * out.0.abs().max(f64::MIN_POSITIVE) {
            break;
        }
        p.n *= 2;
        out = hurwitz_em(p);
    }
    Ok((out.0, out.1))
}

/// Hurwitz zeta `ζ(s, a) = Σ_{n≥0} (n + a)^{−s}`, analytically continued.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    hurwitz_zeta_with_error(s, a).map(|v| v.0)
}

/// `[1 − e^{−t}(1 + t)]/t²` without cancellation.
fn pole_kernel(t: f64) -> f64 {
    if t.abs() < 0.5 {
        // Σ_{n≥2} (−1)^n (n−1)/n! t^{n−2}
        let mut acc = 0.0;
        let mut c = 0.5; // 1/n! at n = 2
        let mut tp = 1.0;
        for n in 2..40u32 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * f64::from(n - 1) * c * tp;
            c /= f64::from(n + 1);
            tp *= t;
        }
        acc
    } else {
        (1.0 - (-t).exp() * (1.0 + t)) / (t * t)
    }
}

fn regularized_derivative(p: HurwitzParams) -> (f64, f64) {
    let HurwitzParams { s, a, n, j } = p;
    let mut acc = CompensatedSum::new();
    for k in (0..n).rev() {
        let y = k as f64 + a;
        acc.add(-y.ln() * y.powf(-s));
    }
    let x = n as f64 + a;
    let lx = x.ln();
    let xs = x.powf(-s);
    // d/ds[X^{1−s}/(s−1)] + 1/(s−1)² = ln²X · kernel((s−1) ln X)
    acc.add(lx * lx * pole_kernel((s - 1.0) * lx));
    acc.add(-0.5 * lx * xs);
    let bf = bernoulli_over_factorial(j + 1);
    let inv2 = 1.0 / (x * x);
    let mut xp = xs / x;
    let mut next = 0.0;
    for (i, b) in bf.iter().enumerate() {
        let (r, dr) = rising_and_derivative(s, 2 * i + 1);
        let term = b * (dr - lx * r) * xp;
        if i < j {
            acc.add(term);
        } else {
            next = term.abs();
        }
        xp *= inv2;
    }
    (acc.value(), next)
}

/// `∂ζ(s, a)/∂s + 1/(s − 1)²`, finite at `s = 1`, where it equals `−γ_1(a)`.
pub fn hurwitz_zeta_ds_regularized(s: f64, a: f64) -> Result<f64> {
    if !s.is_finite() {
        return Err(domain("hurwitz_zeta_ds", format!("s = {s}")));
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(domain("hurwitz_zeta_ds", format!("a = {a} must be positive")));
    }
    // derivatives need the full sum even at negative integers
    let mut p = HurwitzParams {
        s,
        a,
        n: default_cutoff(s, a),
        j: DEFAULT_J,
    };
    let mut out = regularized_derivative(p);
    for _ in 0..MAX_DOUBLINGS {
        if out.1 <= REL_TARGET * out.0.abs().max(1e-300) {
            break;
        }
        p.n *= 2;
        out = regularized_derivative(p);
    }
    Ok(out.0)
}

/// `∂ζ(s, a)/∂s` from term-wise differentiated Euler–Maclaurin.
pub fn hurwitz_zeta_ds(s: f64, a: f64) -> Result<f64> {
    validate("hurwitz_zeta_ds", s, a)?;
    let u = s - 1.0;
    Ok(hurwitz_zeta_ds_regularized(s, a)? - 1.0 / (u * u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{digamma, log_gamma, polygamma};
    use std::f64::consts::PI;

    const CATALAN: f64 = 0.915_965_594_177_219;

    #[test]
    fn basic_values() {
        assert!((hurwitz_zeta(2.0, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
        let d0 = hurwitz_zeta(0.0, 1.0 / 3.0).unwrap() - hurwitz_zeta(0.0, 2.0 / 3.0).unwrap();
        assert!((d0 - 1.0 / 3.0).abs() < 1e-15);
        let d2 = hurwitz_zeta(2.0, 0.25).unwrap() - hurwitz_zeta(2.0, 0.75).unwrap();
        assert!((d2 - 16.0 * CATALAN).abs() < 1e-12);
        assert!(hurwitz_zeta(1.0, 0.5).is_err());
        assert!(hurwitz_zeta(2.0, 0.0).is_err());
    }

    #[test]
    fn riemann_values() {
        assert!((hurwitz_zeta(0.5, 1.0).unwrap() + 1.460_354_508_809_586_8).abs() < 1e-13);
        assert!((hurwitz_zeta(0.25, 1.0).unwrap() + 0.813_278_405_261_891_7).abs() < 1e-13);
        assert!((hurwitz_zeta(-1.0, 1.0).unwrap() + 1.0 / 12.0).abs() < 1e-15);
        assert!((hurwitz_zeta(4.0, 1.0).unwrap() - PI.powi(4) / 90.0).abs() < 1e-14);
        assert!((hurwitz_zeta(-7.0, 1.0).unwrap() - 1.0 / 240.0).abs() < 1e-14);
    }

    #[test]
    fn reference_values() {
        // 30-digit reference values
        let cases = [
            (-3.5, 0.01, 0.004_727_595_315_469_322_7),
            (-7.5, 0.3, 0.002_080_382_876_531_802_4),
            (-0.5, 1.0, -0.207_886_224_977_354_566),
            (-5.25, 2.5, -8.426_680_307_762_988),
            (0.5, 0.01, 8.526_633_570_973_761),
        ];
        for (s, a, want) in cases {
            let (got, err) = hurwitz_zeta_with_error(s, a).unwrap();
            // below s ≈ −4 the head cancellation, not the remainder, limits accuracy
            let tol = if s < -4.0 { 1e-8 } else { 1e-12 };
            assert!((got - want).abs() < tol, "s={s} a={a}: {got}");
            assert!((got - want).abs() <= 4.0 * err + 1e-15, "s={s} a={a}: err {err}");
        }
        let big = hurwitz_zeta(7.5, 0.01).unwrap();
        assert!((big - 1.000_000_000_000_000_8e15).abs() < 1.0);
    }

    #[test]
    fn bernoulli_polynomial_at_minus_one() {
        for &a in &[0.01, 0.25, 1.0 / 3.0, 1.0, 2.7, 9.0] {
            let want = -(a * a - a + 1.0 / 6.0) / 2.0;
            assert!((hurwitz_zeta(-1.0, a).unwrap() - want).abs() < 1e-12, "{a}");
        }
    }

    #[test]
    fn ladder() {
        for &s in &[-3.5, -2.0, -0.5, 0.0, 0.3, 0.75, 1.5, 2.0, 3.0, 6.5, 8.0] {
            for &a in &[0.01, 0.2, 0.5, 1.0, 1.75, 4.0] {
                let lhs = hurwitz_zeta(s, a).unwrap();
                let rhs = hurwitz_zeta(s, a + 1.0).unwrap() + a.powf(-s);
                assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0), "s={s} a={a}: {lhs} {rhs}");
            }
        }
    }

    #[test]
    fn polygamma_bridge() {
        for m in 1..=3u32 {
            for &a in &[0.125, 0.5, 2.0 / 3.0, 1.0, 3.3] {
                let fact: f64 = (1..=m).map(f64::from).product();
                let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
                let z = sign * fact * hurwitz_zeta(f64::from(m) + 1.0, a).unwrap();
                let p = polygamma(m, a).unwrap();
                assert!((z - p).abs() <= 1e-12 * p.abs(), "m={m} a={a}");
            }
        }
    }

    #[test]
    fn pole_residue() {
        for &a in &[0.25, 1.0 / 3.0, 1.0] {
            for j in 2..=5 {
                let eps = 10f64.powi(-j);
                for s in [1.0 + eps, 1.0 - eps] {
                    let r = (s - 1.0) * hurwitz_zeta(s, a).unwrap();
                    // (s−1)ζ(s,a) = 1 − ψ(a)(s−1) + O((s−1)²)
                    assert!((r - 1.0).abs() < 2.0 * eps * digamma(a).unwrap().abs().max(1.0), "a={a} s={s}");
                }
            }
        }
    }

    #[test]
    fn derivative_values() {
        let v = hurwitz_zeta_ds(0.0, 1.0).unwrap();
        assert!((v + 0.5 * (2.0 * PI).ln()).abs() < 1e-12);
        for &a in &[0.25, 0.5, 1.5] {
            let v = hurwitz_zeta_ds(0.0, a).unwrap();
            assert!((v - (log_gamma(a).unwrap() - 0.5 * (2.0 * PI).ln())).abs() < 1e-12, "{a}");
        }
        let h = 1e-5;
        let fd = (hurwitz_zeta(2.0 + h, 1.0).unwrap() - hurwitz_zeta(2.0 - h, 1.0).unwrap()) / (2.0 * h);
        let d = hurwitz_zeta_ds(2.0, 1.0).unwrap();
        assert!((d - fd).abs() < 1e-8, "{d} vs {fd}");
        // ζ'(2) = −0.93754825431584375
        assert!((hurwitz_zeta_ds(2.0, 1.0).unwrap() + 0.937_548_254_315_843_8).abs() < 1e-13);
    }

    #[test]
    fn regularized_derivative_at_pole() {
        let g1 = -0.072_815_845_483_676_7;
        let v = hurwitz_zeta_ds_regularized(1.0, 1.0).unwrap();
        assert!((v + g1).abs() < 1e-13);
        // continuity across s = 1
        for eps in [1e-6, 1e-3] {
            let l = hurwitz_zeta_ds_regularized(1.0 - eps, 1.0).unwrap();
            let r = hurwitz_zeta_ds_regularized(1.0 + eps, 1.0).unwrap();
            assert!((0.5 * (l + r) - v).abs() < 10.0 * eps * eps + 1e-13);
        }
    }

    #[test]
    fn pole_kernel_branches_agree() {
        for t in [0.49, 0.499_999, -0.49] {
            let direct = (1.0 - (-t as f64).exp() * (1.0 + t)) / (t * t);
            assert!((pole_kernel(t) - direct).abs() < 1e-13);
        }
        assert!((pole_kernel(0.0) - 0.5).abs() < 1e-16);
    }
}
