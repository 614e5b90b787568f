//! Quadratic Dirichlet L-functions `L_D(s) = Σ (D/n) n^{−s}`.
//!
//! Three routes: Hurwitz combinations `|D|^{−s} Σ_m χ(m) ζ(s, m/|D|)`,
//! truncated Euler products, and the functional equation. Derived
//! quantities: `L'(1)`, Euler–Kronecker constants, `L_{−4}` at odd
//! integers, the Selberg–Chowla half-line formula and the Madelung constant.

use std::f64::consts::PI;

use serde::Serialize;

use crate::characters::{character_table, CharacterTable};
use crate::error::{domain, Result};
use crate::numerics::{divisor_sigma, par_map_segments, CompensatedSum, DEFAULT_SEGMENT_SIZE};
use crate::special::{bessel_k0, digamma, euler_number, gamma, log_gamma};
use crate::stieltjes::stieltjes_gamma;
use crate::zeta::{hurwitz_zeta_with_error, zeta_crit_strip_with_error};
use crate::EULER_GAMMA;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Hurwitz,
    EulerProduct,
    FunctionalEq,
    ClosedForm,
}

/// One value of `L_D(s)` with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LValue {
    pub d: i64,
    pub s: f64,
    pub value: f64,
    pub route: Route,
    pub err_estimate: f64,
}

/// `L_D(s)` by the Hurwitz route. `D = 1` gives `ζ(s)`. At `s = 1`
/// (`D ≠ 1`) the value is `−|D|^{−1} Σ χ(m) ψ(m/|D|)`.
pub fn l_value(d: i64, s: f64) -> Result<LValue> {
    let t = character_table(d)?;
    l_value_table(&t, s)
}

pub(crate) fn l_value_table(t: &CharacterTable, s: f64) -> Result<LValue> {
    let k = t.modulus as f64;
    if t.d == 1 {
        let (v, e) = hurwitz_zeta_with_error(s, 1.0)?;
        return Ok(LValue {
            d: 1,
            s,
            value: v,
            route: Route::Hurwitz,
            err_estimate: e,
        });
    }
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    if s == 1.0 {
        for (m, c) in t.support() {
            acc.add(-f64::from(c) * digamma(m as f64 / k)?);
        }
        let v = acc.value() / k;
        return Ok(LValue {
            d: t.d,
            s,
            value: v,
            route: Route::Hurwitz,
            err_estimate: 1e-15 * k,
        });
    }
    for (m, c) in t.support() {
        let (z, e) = hurwitz_zeta_with_error(s, m as f64 / k)?;
        acc.add(f64::from(c) * z);
        err += e;
    }
    let scale = k.powf(-s);
    Ok(LValue {
        d: t.d,
        s,
        value: scale * acc.value(),
        route: Route::Hurwitz,
        err_estimate: scale * (err + 4.0 * f64::EPSILON * acc.value().abs()),
    })
}

/// Upper bound for `Σ_{p ≥ L} |ln(1 ∓ p^{−s})|`.
pub fn euler_tail_bound(s: f64, limit: u64) -> f64 {
    crate::primeprod::prime_zeta_tail(s, limit) / (1.0 - (limit as f64).powf(-s))
}

/// `ln Π_{p < limit} (1 − χ(p) p^{−s})^{−1}`, summed per sieve segment in
/// parallel and reduced in segment order.
fn log_euler_product(t: &CharacterTable, s: f64, limit: u64) -> Result<f64> {
    let parts = par_map_segments(limit, DEFAULT_SEGMENT_SIZE, |seg| {
        let mut acc = CompensatedSum::new();
        for &p in &seg.primes {
            let c = t.chi(p);
            if c != 0 {
                acc.add(-(-f64::from(c) * (p as f64).powf(-s)).ln_1p());
            }
        }
        acc.value()
    })?;
    Ok(crate::numerics::compensated_sum(parts))
}

/// `L_D(s)` as a truncated Euler product over `p < prime_limit`. The error
/// estimate is the multiplicative tail bound converted to an absolute one.
pub fn l_value_euler(d: i64, s: f64, prime_limit: u64) -> Result<LValue> {
    if !(s > 1.0) {
        return Err(domain("l_value_euler", format!("s = {s} must exceed 1")));
    }
    if prime_limit < 100 {
        return Err(domain("l_value_euler", "prime limit must be at least 100"));
    }
    let t = character_table(d)?;
    let log_v = log_euler_product(&t, s, prime_limit)?;
    let v = log_v.exp();
    let tail = euler_tail_bound(s, prime_limit);
    Ok(LValue {
        d,
        s,
        value: v,
        route: Route::EulerProduct,
        err_estimate: v * tail.exp_m1() + 1e-15 * v,
    })
}

/// The factor `F(s)` in `L(1 − s) = F(s) L(s)`:
/// `2(2π)^{−s} k^{s−1/2} Γ(s) · {sin(πs/2) for D < 0, cos(πs/2) for D > 0}`,
/// with the removable singularities at the poles of `Γ` filled in.
pub fn functional_factor(d: i64, s: f64) -> Result<f64> {
    let k = d.unsigned_abs() as f64;
    let odd = d < 0;
    let pre = 2.0 * (2.0 * PI).powf(-s) * k.powf(s - 0.5);
    if s <= 0.0 && s == s.floor() {
        let n = (-s) as i64;
        // Γ(s) ~ (−1)^n/(n!(s + n)); the trig factor must vanish at s = −n
        let (vanishes, slope) = if odd {
            (n % 2 == 0, 0.5 * PI * (0.5 * PI * s).cos())
        } else {
            (n % 2 == 1, -0.5 * PI * (0.5 * PI * s).sin())
        };
        if !vanishes {
            return Err(domain(
                "l_value_via_fe",
                format!("Γ has a pole at s = {s} that the trigonometric factor does not cancel"),
            ));
        }
        let fact: f64 = (1..=n).map(|i| i as f64).product();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(pre * slope * sign / fact);
    }
    let trig = if odd { (0.5 * PI * s).sin() } else { (0.5 * PI * s).cos() };
    Ok(pre * trig * gamma(s)?)
}

/// `L_D(1 − s)` from `L_D(s)` through the functional equation.
pub fn l_value_via_fe(d: i64, s: f64) -> Result<LValue> {
    let f = functional_factor(d, s)?;
    let l = l_value(d, s)?;
    Ok(LValue {
        d,
        s: 1.0 - s,
        value: f * l.value,
        route: Route::FunctionalEq,
        err_estimate: f.abs() * l.err_estimate + 4.0 * f64::EPSILON * (f * l.value).abs(),
    })
}

/// Class-number closed form of `L_D(1)`:
/// `π/(3√3)`, `π/4`, `πh/√|D|` (D < −4) or `2h ln ε/√D` (D > 0).
pub fn l_at_1_closed(d: i64, h: u64) -> Result<f64> {
    let k = d.unsigned_abs() as f64;
    let h = h as f64;
    match d {
        -3 => Ok(PI / (3.0 * 3f64.sqrt())),
        -4 => Ok(PI / 4.0),
        d if d < 0 => Ok(PI * h / k.sqrt()),
        d => {
            let unit = crate::numerics::pell_fundamental(d)?;
            Ok(2.0 * h * unit.regulator() / k.sqrt())
        }
    }
}

/// `L_D'(1) = −ln|D| L(1) − |D|^{−1} Σ_m χ(m) γ_1(m/|D|)`.
pub fn l_prime_1(d: i64) -> Result<f64> {
    if d == 1 {
        return Err(domain("l_prime_1", "D = 1 has a pole at s = 1"));
    }
    let t = character_table(d)?;
    let k = t.modulus as f64;
    let l1 = l_value_table(&t, 1.0)?.value;
    let mut acc = CompensatedSum::new();
    for (m, c) in t.support() {
        acc.add(f64::from(c) * stieltjes_gamma(1, m as f64 / k)?.0);
    }
    Ok(-k.ln() * l1 - acc.value() / k)
}

/// Euler–Kronecker constant `γ_D = γ + L_D'(1)/L_D(1)` of `Q(√D)`.
pub fn euler_kronecker(d: i64) -> Result<f64> {
    let l1 = l_value(d, 1.0)?.value;
    Ok(EULER_GAMMA + l_prime_1(d)? / l1)
}

/// Closed forms of `γ_D` for `D = −3, −4`:
/// `ln[2π e^{2γ} Γ^{w/2}(1 − 1/q)/Γ^{w/2}(1/q)]`, `(q, w/2) = (3, 3), (4, 2)`.
pub fn euler_kronecker_closed(d: i64) -> Option<f64> {
    let (q, pow) = match d {
        -3 => (3.0, 3.0),
        -4 => (4.0, 2.0),
        _ => return None,
    };
    let lg = |x: f64| log_gamma(x).ok();
    Some((2.0 * PI).ln() + 2.0 * EULER_GAMMA + pow * (lg(1.0 - 1.0 / q)? - lg(1.0 / q)?))
}

/// `L_{−4}(2k+1) = (−1)^k E_{2k} (π/2)^{2k+1} / (2 (2k)!)` for `k ≤ 10`.
pub fn beta_odd(k: usize) -> Result<f64> {
    if k > 10 {
        return Err(domain("beta_odd", format!("k = {k} > 10")));
    }
    let e = euler_number(2 * k)?;
    let e: f64 = num_traits::ToPrimitive::to_f64(&e).unwrap_or(f64::NAN);
    let fact: f64 = (1..=2 * k).map(|i| i as f64).product();
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * e * (PI / 2.0).powi(2 * k as i32 + 1) / (2.0 * fact))
}

/// Divisor weight in the Selberg–Chowla Bessel series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DivisorWeight {
    /// `σ_1(n)`, as printed in the proposition.
    Sigma1,
    /// `σ_0(n)`, the number of divisors.
    Sigma0,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelbergChowla {
    pub p: u64,
    pub weight: DivisorWeight,
    /// `ζ(1/2) L_{−p}(1/2)`.
    pub lhs: f64,
    pub lhs_error: f64,
    /// `γ + ln(√p/(8π)) + 4 Σ (−1)^n σ(n) K_0(√p n π)`.
    pub rhs: f64,
    /// Bessel terms used before they fell below `1e−16`.
    pub terms_used: usize,
    /// Set for `p` outside the class-number-one list `{11, 19, 43, 67}`.
    pub warning: Option<String>,
}

/// Both sides of the Selberg–Chowla formula at `s = 1/2`.
pub fn selberg_chowla_half(p: u64, weight: DivisorWeight) -> Result<SelbergChowla> {
    let warning = (![11, 19, 43, 67].contains(&p))
        .then(|| format!("p = {p} is outside the class-number-one list; computed anyway"));
    let d = -(p as i64);
    let (z, ze) = zeta_crit_strip_with_error(0.5)?;
    let l = l_value(d, 0.5)?;
    let lhs = z * l.value;
    let lhs_error = ze * l.value.abs() + z.abs() * l.err_estimate;
    let pf = p as f64;
    let alpha = match weight {
        DivisorWeight::Sigma1 => 1,
        DivisorWeight::Sigma0 => 0,
    };
    let mut series = CompensatedSum::new();
    let mut terms_used = 0;
    for n in 1..=64u64 {
        let w = divisor_sigma(alpha, n)?;
        let term = 4.0 * w * bessel_k0(pf.sqrt() * n as f64 * PI)?;
        if term < 1e-16 {
            break;
        }
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        series.add(sign * term);
        terms_used += 1;
    }
    let rhs = EULER_GAMMA + (pf.sqrt() / (8.0 * PI)).ln() + series.value();
    Ok(SelbergChowla {
        p,
        weight,
        lhs,
        lhs_error,
        rhs,
        terms_used,
        warning,
    })
}

/// Catalan's constant from `Σ (−1)^n/(2n+1)²`, accelerated by the
/// Cohen–Rodriguez Villegas–Zagier weights (30 terms).
pub fn catalan_series() -> f64 {
    let n = 30;
    let mut d = (3.0 + 8f64.sqrt()).powi(n);
    d = 0.5 * (d + 1.0 / d);
    let (mut b, mut c, mut s) = (-1.0, -d, 0.0);
    for k in 0..n {
        c = b - c;
        let a = 1.0 / ((2 * k + 1) as f64).powi(2);
        s += c * a;
        let (kf, nf) = (k as f64, n as f64);
        b = (kf + nf) * (kf - nf) * b / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// Madelung constant `M_2 = 4(√2 − 1) ζ(1/2) L_{−4}(1/2)`.
pub fn madelung_m2() -> Result<f64> {
    let z = zeta_crit_strip_with_error(0.5)?.0;
    let l = l_value(-4, 0.5)?.value;
    Ok(4.0 * (2f64.sqrt() - 1.0) * z * l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::class_number;

    const CATALAN: f64 = 0.915_965_594_177_219;

    #[test]
    fn hurwitz_route_values() {
        assert!((l_value(-4, 2.0).unwrap().value - CATALAN).abs() < 1e-13);
        let want = 4.0 * PI * PI / (25.0 * 5f64.sqrt());
        assert!((l_value(5, 2.0).unwrap().value - want).abs() < 1e-13);
        assert!((l_value(-3, 1.0).unwrap().value - PI / (3.0 * 3f64.sqrt())).abs() < 1e-13);
        assert!((l_value(1, 2.0).unwrap().value - PI * PI / 6.0).abs() < 1e-14);
        assert!(l_value(-12, 2.0).is_err());
    }

    #[test]
    fn half_line_values() {
        assert!((l_value(-11, 0.5).unwrap().value - 0.991_577_003_581_617_5).abs() < 1e-12);
        assert!((l_value(-4, 0.5).unwrap().value - 0.667_691_457_189_609_2).abs() < 1e-12);
    }

    #[test]
    fn euler_route() {
        let e = l_value_euler(-4, 2.0, 10_000_000).unwrap();
        assert!((e.value - CATALAN).abs() <= e.err_estimate + 1e-10);
        let e = l_value_euler(1, 2.0, 10_000_000).unwrap();
        assert!((e.value - PI * PI / 6.0).abs() <= e.err_estimate + 1e-10);
        let e = l_value_euler(-3, 3.0, 100_000).unwrap();
        let want = 4.0 * PI.powi(3) / (81.0 * 3f64.sqrt());
        assert!((e.value - want).abs() <= e.err_estimate);
        assert!(l_value_euler(-4, 1.0, 1000).is_err());
    }

    #[test]
    fn route_agreement_grid() {
        for d in [-3, -4, 5, -7, 8, -8, 12, -11, -23] {
            for s in [2.0, 3.0, 4.0] {
                let h = l_value(d, s).unwrap();
                let e = l_value_euler(d, s, 1_000_000).unwrap();
                assert!((h.value - e.value).abs() < e.err_estimate + 1e-10, "D={d} s={s}");
            }
        }
    }

    #[test]
    fn functional_equation() {
        assert!((functional_factor(-4, 0.5).unwrap() - 1.0).abs() < 1e-14);
        for d in [-3, -4, 5, -7, 8, -8, 12] {
            for s in [0.25, 0.75, 2.0, 3.0] {
                let fe = l_value_via_fe(d, s).unwrap();
                let direct = l_value(d, 1.0 - s).unwrap();
                assert!((fe.value - direct.value).abs() < 1e-9, "D={d} s={s}: {} {}", fe.value, direct.value);
            }
        }
        // s = 0 for odd characters: Γ pole cancelled by sin(πs/2)
        let fe = l_value_via_fe(-4, 0.0).unwrap();
        assert!((fe.value - l_value(-4, 1.0).unwrap().value).abs() < 1e-12);
        assert!(l_value_via_fe(5, 0.0).is_err());
    }

    #[test]
    fn prop1b_closed_forms() {
        for d in [-3, -4, -7, -8, -11, -23] {
            let h = class_number(d).unwrap().h;
            let c = l_at_1_closed(d, h).unwrap();
            assert!((c - l_value(d, 1.0).unwrap().value).abs() < 1e-10, "D={d}");
        }
        for d in [5, 8, 12] {
            let c = l_at_1_closed(d, 1).unwrap();
            assert!((c - l_value(d, 1.0).unwrap().value).abs() < 1e-10, "D={d}");
        }
    }

    #[test]
    fn derivative_at_one() {
        for d in [-4, -3, 5] {
            let h = 1e-4;
            let fd = (l_value(d, 1.0 + h).unwrap().value - l_value(d, 1.0 - h).unwrap().value) / (2.0 * h);
            assert!((l_prime_1(d).unwrap() - fd).abs() < 1e-7, "D={d}");
        }
    }

    #[test]
    fn euler_kronecker_constants() {
        let s = euler_kronecker(-4).unwrap();
        assert!((s - 0.822_825_249_678_847).abs() < 1e-12);
        for d in [-3, -4] {
            let c = euler_kronecker_closed(d).unwrap();
            assert!((c - euler_kronecker(d).unwrap()).abs() < 1e-9, "D={d}");
        }
        assert!(euler_kronecker_closed(-7).is_none());
    }

    #[test]
    fn beta_at_odd_integers() {
        assert!((beta_odd(0).unwrap() - PI / 4.0).abs() < 1e-15);
        assert!((beta_odd(1).unwrap() - PI.powi(3) / 32.0).abs() < 1e-15);
        assert!((beta_odd(2).unwrap() - 5.0 * PI.powi(5) / 1536.0).abs() < 1e-14);
        for k in 0..=4usize {
            let h = l_value(-4, (2 * k + 1) as f64).unwrap().value;
            assert!((beta_odd(k).unwrap() - h).abs() < 1e-12, "k={k}");
        }
        assert!(beta_odd(11).is_err());
    }

    #[test]
    fn selberg_chowla() {
        for p in [11, 19, 43, 67] {
            let r = selberg_chowla_half(p, DivisorWeight::Sigma0).unwrap();
            assert!((r.lhs - r.rhs).abs() < 1e-12, "p={p}: {}", r.lhs - r.rhs);
            assert!(r.terms_used <= 5 && r.warning.is_none());
        }
        let r = selberg_chowla_half(11, DivisorWeight::Sigma1).unwrap();
        // rhs(σ_1) − rhs(σ_0) = 4 Σ (−1)^n (σ_1(n) − σ_0(n)) K_0(√11 nπ)
        let gap: f64 = (2..8u64)
            .map(|n| {
                let w = divisor_sigma(1, n).unwrap() - divisor_sigma(0, n).unwrap();
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                4.0 * sign * w * bessel_k0(11f64.sqrt() * n as f64 * PI).unwrap()
            })
            .sum();
        assert!(((r.lhs - r.rhs) + gap).abs() < 1e-13);
        assert!((r.lhs - r.rhs + 9.7245e-10).abs() < 1e-13);
        assert!(selberg_chowla_half(7, DivisorWeight::Sigma0).unwrap().warning.is_some());
    }

    #[test]
    fn catalan() {
        assert!((catalan_series() - CATALAN).abs() < 1e-15);
        assert!((catalan_series() - l_value(-4, 2.0).unwrap().value).abs() < 1e-13);
    }

    #[test]
    fn madelung() {
        let m = madelung_m2().unwrap();
        assert!((m + 1.615_542_626_712_824_7).abs() < 1e-10);
    }
}
