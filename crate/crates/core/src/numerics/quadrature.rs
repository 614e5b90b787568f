//! Double-exponential quadrature: tanh-sinh on finite intervals and exp-sinh on
//! `[a, ∞)`. The step is halved level by level; each level reuses all earlier
//! abscissae, so the cost of a converged level is roughly twice that of the
//! previous one.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Highest refinement level (step `2^-12`).
pub const DEFAULT_MAX_LEVEL: u32 = 12;
const MIN_LEVEL: u32 = 3;
const T_MAX: f64 = 6.8;
const TINY: f64 = 1e-300;
const HUGE: f64 = 1e300;

/// Integration domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    /// `[a, b]` with `a < b`.
    Finite(f64, f64),
    /// `[a, ∞)`.
    SemiInfinite(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Absolute, conservative: the last inter-level difference (never below
    /// the accumulated rounding floor).
    pub error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VecQuadratureResult {
    pub values: Vec<f64>,
    pub errors: Vec<f64>,
    pub evaluations: usize,
    pub converged: bool,
}

/// One abscissa with its weight (the step factor `h` excluded).
#[derive(Clone, Copy)]
struct Node {
    x: f64,
    w: f64,
}

/// Calls `emit` for every node of the transformed trapezoid rule that is new
/// at `level`. Returns early on the first integrand error.
fn for_each_node<E: FnMut(Node) -> Result<()>>(domain: Domain, level: u32, mut emit: E) -> Result<()> {
    let h = 0.5f64.powi(level as i32);
    // level 0 uses every integer t; finer levels only the odd multiples of h
    let (first, stride) = if level == 0 { (0.0, 1.0) } else { (h, 2.0 * h) };
    match domain {
        Domain::Finite(a, b) => {
            let c = 0.5 * (a + b);
            let d = 0.5 * (b - a);
            if level == 0 {
                emit(Node { x: c, w: d * FRAC_PI_2 })?;
            }
            let mut t = if level == 0 { 1.0 } else { first };
            while t <= T_MAX {
                let u = FRAC_PI_2 * t.sinh();
                let e = (-2.0 * u).exp();
                let rho = 2.0 * e / (1.0 + e);
                let delta = d * rho;
                let w = d * FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
                if delta < TINY || w == 0.0 {
                    break;
                }
                let xl = a + delta;
                let xr = b - delta;
                let left_ok = xl > a;
                let right_ok = xr < b;
                if !left_ok && !right_ok {
                    break;
                }
                if left_ok {
                    emit(Node { x: xl, w })?;
                }
                if right_ok {
                    emit(Node { x: xr, w })?;
                }
                t += stride;
            }
        }
        Domain::SemiInfinite(a) => {
            if level == 0 {
                emit(Node { x: a + 1.0, w: FRAC_PI_2 })?;
            }
            for sign in [1.0f64, -1.0] {
                let mut t = if level == 0 { 1.0 } else { first };
                while t <= T_MAX {
                    let st = sign * t;
                    let e = (FRAC_PI_2 * st.sinh()).exp();
                    if !(TINY..=HUGE).contains(&e) {
                        break;
                    }
                    let x = a + e;
                    if x == a {
                        break;
                    }
                    let w = FRAC_PI_2 * st.cosh() * e;
                    emit(Node { x, w })?;
                    t += stride;
                }
            }
        }
    }
    Ok(())
}

fn validate(domain: Domain) -> Result<()> {
    match domain {
        Domain::Finite(a, b) if a.is_finite() && b.is_finite() && a < b => Ok(()),
        Domain::SemiInfinite(a) if a.is_finite() => Ok(()),
        _ => Err(crate::error::domain("de_quadrature", format!("invalid domain {domain:?}"))),
    }
}

/// Integrate a vector-valued integrand. `f(x, out)` writes `dim` components.
/// Component `i` is converged once its inter-level difference is at most
/// `max(abs_tol, rel_tol * |I_i|)`; the routine stops when all components
/// are converged or `max_level` is reached. It never fails on
/// non-convergence; inspect `converged`.
pub fn de_quadrature_vec<F>(
    mut f: F,
    dim: usize,
    domain: Domain,
    abs_tol: f64,
    rel_tol: f64,
    max_level: u32,
) -> Result<VecQuadratureResult>
where
    F: FnMut(f64, &mut [f64]),
{
    validate(domain)?;
    let mut sums = vec![0.0f64; dim];
    let mut abs_sums = vec![0.0f64; dim];
    let mut buf = vec![0.0f64; dim];
    let mut prev: Option<Vec<f64>> = None;
    let mut errors = vec![f64::INFINITY; dim];
    let mut values = vec![0.0f64; dim];
    let mut evaluations = 0usize;
    let mut converged = false;

    for level in 0..=max_level {
        for_each_node(domain, level, |node| {
            f(node.x, &mut buf);
            evaluations += 1;
            for i in 0..dim {
                let v = buf[i];
                if !v.is_finite() {
                    return Err(Error::NonFinite { x: node.x, value: v });
                }
                let wv = node.w * v;
                sums[i] += wv;
                abs_sums[i] += wv.abs();
            }
            Ok(())
        })?;
        let h = 0.5f64.powi(level as i32);
        for i in 0..dim {
            values[i] = h * sums[i];
        }
        if let Some(p) = &prev {
            let mut all = true;
            for i in 0..dim {
                let floor = 64.0 * f64::EPSILON * h * abs_sums[i];
                errors[i] = (values[i] - p[i]).abs().max(floor);
                let target = abs_tol.max(rel_tol * values[i].abs()).max(floor);
                if errors[i] > target {
                    all = false;
                }
            }
            if all && level >= MIN_LEVEL {
                converged = true;
                break;
            }
        }
        prev = Some(values.clone());
    }
    Ok(VecQuadratureResult {
        values,
        errors,
        evaluations,
        converged,
    })
}

/// Integrate a scalar integrand to an absolute target.
///
/// Integrable algebraic or logarithmic endpoint singularities are allowed;
/// abscissae that round onto an endpoint are skipped. A non-finite integrand
/// value aborts with [`Error::NonFinite`] naming the abscissa.
pub fn de_quadrature<F>(f: F, domain: Domain, target_abs_err: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    let r = de_quadrature_vec(
        |x, out: &mut [f64]| out[0] = f(x),
        1,
        domain,
        target_abs_err,
        0.0,
        DEFAULT_MAX_LEVEL,
    )?;
    if !r.converged {
        return Err(Error::NoConvergence {
            estimate: r.values[0],
            error: r.errors[0],
        });
    }
    Ok(QuadratureResult {
        value: r.values[0],
        error_estimate: r.errors[0],
        evaluations: r.evaluations,
    })
}
