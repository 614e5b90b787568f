use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::config::{AuditConfig, Mode};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "MISMATCH_CONST_FACTOR")]
    MismatchConstFactor,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::MismatchConstFactor => "MISMATCH_CONST_FACTOR",
        }
    }
}

/// One evaluation route of a check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RouteValue {
    pub name: String,
    pub value: f64,
    pub err: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioDiagnostic {
    /// Value of the most distant route divided by the first route.
    pub measured_ratio: f64,
    pub nearest_simple_factor: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub mode: Mode,
    pub description: String,
    pub paper_location: String,
    pub routes: Vec<RouteValue>,
    /// `None` when a route failed to evaluate.
    pub max_pairwise_diff: Option<f64>,
    pub tolerance: f64,
    pub status: Status,
    pub ratio_diagnostic: Option<RatioDiagnostic>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub mismatch: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    /// `literal`, `audited` or `both`.
    pub mode: String,
    pub config: AuditConfig,
    pub timestamp: Option<String>,
    pub versions: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub meta: Meta,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Summary {
    pub fn of(checks: &[CheckResult]) -> Summary {
        let mut s = Summary::default();
        for c in checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::MismatchConstFactor => s.mismatch += 1,
            }
        }
        s
    }
}

impl Report {
    pub(crate) fn new(mode: String, config: &AuditConfig, checks: Vec<CheckResult>) -> Report {
        let mut versions = BTreeMap::new();
        versions.insert("stieltjes".to_string(), env!("CARGO_PKG_VERSION").to_string());
        Report {
            meta: Meta {
                mode,
                config: config.clone(),
                timestamp: config.timestamp.clone(),
                versions,
            },
            summary: Summary::of(&checks),
            checks,
        }
    }

    /// Failures in audited mode.
    pub fn audited_failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.mode == Mode::Audited && c.status == Status::Fail)
            .count()
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Output(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            token: "report".into(),
            msg: e.to_string(),
        })
    }

    /// One row per route per check.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let out = |e: csv::Error| Error::Output(e.to_string());
        w.write_record([
            "id",
            "mode",
            "status",
            "route",
            "value",
            "err",
            "max_pairwise_diff",
            "tolerance",
            "measured_ratio",
            "nearest_simple_factor",
        ])
        .map_err(out)?;
        for c in &self.checks {
            let diff = c.max_pairwise_diff.map(|d| d.to_string()).unwrap_or_default();
            let (ratio, factor) = match &c.ratio_diagnostic {
                Some(r) => (r.measured_ratio.to_string(), r.nearest_simple_factor.clone().unwrap_or_default()),
                None => (String::new(), String::new()),
            };
            let mode = c.mode.to_string();
            let tol = c.tolerance.to_string();
            for r in &c.routes {
                w.write_record([
                    c.id.as_str(),
                    &mode,
                    c.status.as_str(),
                    &r.name,
                    &r.value.to_string(),
                    &r.err.to_string(),
                    &diff,
                    &tol,
                    &ratio,
                    &factor,
                ])
                .map_err(out)?;
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::Output(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Output(e.to_string()))
    }

    /// Human-readable listing with 15 significant digits.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let diff = c.max_pairwise_diff.map_or("n/a".to_string(), |d| format!("{d:.3e}"));
            let _ = writeln!(
                s,
                "{:<22} {:<8} {:<22} diff {} tol {:.1e}  {}",
                c.id,
                c.mode,
                c.status.as_str(),
                diff,
                c.tolerance,
                c.description
            );
            for r in &c.routes {
                let _ = writeln!(s, "    {:<28} {:>24} ± {:.1e}", r.name, format_sig(r.value), r.err);
            }
            if let Some(r) = &c.ratio_diagnostic {
                let f = r.nearest_simple_factor.as_deref().unwrap_or("none");
                let _ = writeln!(s, "    ratio {} (factor {f})", format_sig(r.measured_ratio));
            }
            for n in &c.notes {
                let _ = writeln!(s, "    note: {n}");
            }
        }
        let _ = writeln!(
            s,
            "summary: {} pass, {} fail, {} mismatch",
            self.summary.pass, self.summary.fail, self.summary.mismatch
        );
        s
    }
}

/// `x` with 15 significant digits.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let e = x.abs().log10().floor() as i32;
    if (-5..15).contains(&e) {
        let decimals = (14 - e).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.14e}")
    }
}

/// Relative tolerance of a dictionary match.
pub const RATIO_RTOL: f64 = 1e-6;

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn pi_rational_table() -> &'static [(String, f64)] {
    static TABLE: OnceLock<Vec<(String, f64)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::new();
        for j in (-4i32..=4).filter(|&j| j != 0) {
            for p in 1..=64u32 {
                for q in 1..=64u32 {
                    if gcd(p, q) == 1 {
                        let label = match q {
                            1 => format!("{p}*pi^{j}"),
                            _ => format!("{p}/{q}*pi^{j}"),
                        };
                        t.push((label, f64::from(p) / f64::from(q) * PI.powi(j)));
                    }
                }
            }
        }
        t
    })
}

/// Name of the unique simple factor `f` with `x/y ≈ f` (relative `1e−6`).
/// Candidates: `±1`, `±2^j` (`1 ≤ |j| ≤ 8`), `±|D|^j` (`1 ≤ |j| ≤ 12`, when a
/// modulus is given) and `±(p/q)π^j` (`1 ≤ |j| ≤ 4`, `p, q ≤ 64`). Hits
/// with the same numerical value count as one.
pub fn ratio_diagnose(x: f64, y: f64, modulus: Option<u64>) -> Option<String> {
    diagnose(x, y, modulus).map(|(label, _)| label)
}

/// Label and signed value of the matched factor.
pub(crate) fn diagnose(x: f64, y: f64, modulus: Option<u64>) -> Option<(String, f64)> {
    if !(x.is_finite() && y.is_finite()) || x == 0.0 || y == 0.0 {
        return None;
    }
    let r = x / y;
    let (sign, mag) = if r < 0.0 { ("-", -r) } else { ("", r) };
    let sgn = r.signum();
    let mut hits: Vec<(String, f64)> = Vec::new();
    let mut consider = |label: String, v: f64| {
        if ((mag / v) - 1.0).abs() <= RATIO_RTOL {
            hits.push((format!("{sign}{label}"), sgn * v));
        }
    };
    consider("1".into(), 1.0);
    if let Some(m) = modulus.filter(|&m| m > 1) {
        for j in (-12i32..=12).filter(|&j| j != 0) {
            consider(format!("|D|^{j}"), (m as f64).powi(j));
        }
    }
    for j in (-8i32..=8).filter(|&j| j != 0) {
        consider(format!("2^{j}"), 2f64.powi(j));
    }
    for (label, v) in pi_rational_table() {
        consider(label.clone(), *v);
    }
    let first = hits.first()?;
    hits.iter()
        .all(|(_, v)| ((v / first.1) - 1.0).abs() < 1e-12)
        .then(|| first.clone())
}
