//! Identity audit: every catalogued identity is evaluated by all of its
//! routes, compared, and classified as PASS, FAIL or a constant-factor
//! mismatch.

mod catalog;
pub mod config;
pub mod report;

use rayon::prelude::*;

pub use catalog::LOCATIONS;
pub use config::{AuditConfig, Mode, DEFAULT_QUAD_TARGET, DEFAULT_SIEVE_LIMIT};
pub use report::{
    format_sig, ratio_diagnose, CheckResult, Meta, RatioDiagnostic, Report, RouteValue, Status,
    Summary, RATIO_RTOL,
};

use crate::error::{Error, Result};
use catalog::{catalogue, CheckDef, Ctx, Eval, Kind};

/// All check ids in catalogue order.
pub fn catalogue_ids() -> Vec<String> {
    catalogue().into_iter().map(|c| c.id).collect()
}

/// `(id, location)` for every check.
pub fn catalogue_locations() -> Vec<(String, &'static str)> {
    catalogue().into_iter().map(|c| (c.id, c.location)).collect()
}

/// Runs a single check in `config.mode`.
pub fn run_one(id: &str, config: &AuditConfig) -> Result<CheckResult> {
    config.validate()?;
    let cat = catalogue();
    let def = cat
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
    Ok(evaluate(def, &Ctx::new(config), config.mode))
}

/// Runs every check selected by the filter in `config.mode`.
pub fn run_all(config: &AuditConfig) -> Result<Report> {
    let report = run_modes(config, &[config.mode])?;
    Ok(report)
}

/// Runs the selected checks once per mode. The report mode reads `both`
/// when more than one mode is given.
pub fn run_modes(config: &AuditConfig, modes: &[Mode]) -> Result<Report> {
    config.validate()?;
    let pattern = match &config.filter {
        Some(f) => Some(glob::Pattern::new(f).map_err(|e| Error::Parse {
            token: f.clone(),
            msg: e.to_string(),
        })?),
        None => None,
    };
    let cat: Vec<CheckDef> = catalogue()
        .into_iter()
        .filter(|c| pattern.as_ref().is_none_or(|p| p.matches(&c.id)))
        .collect();
    let ctx = Ctx::new(config);
    let jobs: Vec<(&CheckDef, Mode)> = modes
        .iter()
        .flat_map(|&m| cat.iter().map(move |c| (c, m)))
        .collect();
    let mut checks: Vec<CheckResult> = jobs
        .par_iter()
        .map(|(c, m)| evaluate(c, &ctx, *m))
        .collect();
    checks.sort_by(|a, b| (&a.id, a.mode as u8).cmp(&(&b.id, b.mode as u8)));
    let mode = match modes {
        [m] => m.to_string(),
        _ => "both".to_string(),
    };
    Ok(Report::new(mode, config, checks))
}

fn evaluate(def: &CheckDef, ctx: &Ctx, mode: Mode) -> CheckResult {
    let mut result = CheckResult {
        id: def.id.clone(),
        mode,
        description: def.description.clone(),
        paper_location: def.location.to_string(),
        routes: Vec::new(),
        max_pairwise_diff: None,
        tolerance: catalog::DEFAULT_TOL,
        status: Status::Fail,
        ratio_diagnostic: None,
        notes: Vec::new(),
    };
    let ev = match (def.eval)(ctx, mode) {
        Ok(ev) => ev,
        Err(e) => {
            result.notes.push(format!("evaluation error: {e}"));
            return result;
        }
    };
    classify(&mut result, ev, def.modulus);
    result
}

fn max_diff(values: &[f64]) -> f64 {
    let mut m: f64 = 0.0;
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            m = m.max((a - b).abs());
        }
    }
    m
}

fn classify(result: &mut CheckResult, ev: Eval, modulus: Option<u64>) {
    let Eval {
        routes,
        tolerance,
        kind,
        flipped,
        notes,
    } = ev;
    result.tolerance = tolerance;
    result.notes = notes;
    let (finite, bad): (Vec<RouteValue>, Vec<RouteValue>) =
        routes.into_iter().partition(|r| r.value.is_finite() && r.err.is_finite());
    for r in &bad {
        result.notes.push(format!("route {} not finite: {} ± {}", r.name, r.value, r.err));
    }
    result.routes = finite;
    if !bad.is_empty() || result.routes.is_empty() {
        return;
    }
    let values: Vec<f64> = result.routes.iter().map(|r| r.value).collect();

    if kind == Kind::Bracket {
        let (v, lo, hi) = (values[0], values[1], values[2]);
        let d = if lo < v && v < hi {
            0.0
        } else {
            (lo - v).max(v - hi).max(f64::MIN_POSITIVE)
        };
        result.max_pairwise_diff = Some(d);
        result.status = if d <= tolerance { Status::Pass } else { Status::Fail };
        return;
    }

    let diff = max_diff(&values);
    result.max_pairwise_diff = Some(diff);
    if values.len() >= 2 {
        let far = (1..values.len())
            .max_by(|&i, &j| {
                let di = (values[i] - values[0]).abs();
                let dj = (values[j] - values[0]).abs();
                di.total_cmp(&dj)
            })
            .unwrap_or(1);
        result.ratio_diagnostic = Some(RatioDiagnostic {
            measured_ratio: values[far] / values[0],
            nearest_simple_factor: report::ratio_diagnose(values[far], values[0], modulus),
        });
    }
    if diff <= tolerance {
        result.status = Status::Pass;
        return;
    }

    if let Some((i, v)) = flipped {
        let mut alt = values.clone();
        alt[i] = v;
        if max_diff(&alt) <= tolerance {
            result.status = Status::MismatchConstFactor;
            if let Some(rd) = result.ratio_diagnostic.as_mut() {
                rd.nearest_simple_factor = Some("(-1)^k-convention".to_string());
            }
            result
                .notes
                .push(format!("route {} agrees under the opposite sign convention", result.routes[i].name));
            return;
        }
    }

    // a single route rescaled by a dictionary factor
    for i in 0..values.len() {
        let others: Vec<usize> = (0..values.len()).filter(|&j| j != i).collect();
        let Some(&j) = others.first() else { continue };
        let Some((label, f)) = report::diagnose(values[i], values[j], modulus) else {
            continue;
        };
        if label == "1" {
            continue;
        }
        let mut alt = values.clone();
        alt[i] /= f;
        if max_diff(&alt) <= tolerance {
            result.status = Status::MismatchConstFactor;
            result.ratio_diagnostic = Some(RatioDiagnostic {
                measured_ratio: values[i] / values[j],
                nearest_simple_factor: Some(label.clone()),
            });
            result.notes.push(format!(
                "route {} agrees after division by {label}",
                result.routes[i].name
            ));
            return;
        }
    }
    result.status = Status::Fail;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> AuditConfig {
        AuditConfig {
            sieve_limit: 1_000_000,
            ..AuditConfig::default()
        }
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(run_one("P99", &cfg()), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn ids_unique() {
        let mut ids = catalogue_ids();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn filter_selects_prefix() {
        let r = run_all(&cfg().with_filter("P7*")).unwrap();
        assert!(!r.checks.is_empty());
        assert!(r.checks.iter().all(|c| c.id.starts_with("P7")));
        let expected = catalogue_ids().iter().filter(|i| i.starts_with("P7")).count();
        assert_eq!(r.checks.len(), expected);
    }

    #[test]
    fn empty_filter_match() {
        let r = run_all(&cfg().with_filter("nothing*")).unwrap();
        assert!(r.checks.is_empty());
        assert_eq!((r.summary.pass, r.summary.fail, r.summary.mismatch), (0, 0, 0));
    }

    #[test]
    fn representative_checks() {
        let p6a = run_one("P6a", &cfg()).unwrap();
        assert_eq!(p6a.status, Status::Pass);
        assert!(p6a.max_pairwise_diff.unwrap() < 1e-9);
        let p11 = run_one("P11", &cfg()).unwrap();
        assert_eq!(p11.status, Status::Pass);
        let lit = run_one("E14b", &cfg().with_mode(Mode::Literal)).unwrap();
        assert_eq!(lit.status, Status::MismatchConstFactor);
        let aud = run_one("E14b", &cfg()).unwrap();
        assert_eq!(aud.status, Status::Pass);
    }

    #[test]
    fn bracket_failure_is_detected() {
        let mut r = CheckResult {
            id: "x".into(),
            mode: Mode::Audited,
            description: String::new(),
            paper_location: String::new(),
            routes: Vec::new(),
            max_pairwise_diff: None,
            tolerance: 0.0,
            status: Status::Pass,
            ratio_diagnostic: None,
            notes: Vec::new(),
        };
        let ev = Eval {
            routes: vec![
                RouteValue { name: "v".into(), value: 2.0, err: 0.0 },
                RouteValue { name: "lo".into(), value: 0.0, err: 0.0 },
                RouteValue { name: "hi".into(), value: 1.0, err: 0.0 },
            ],
            tolerance: 0.0,
            kind: Kind::Bracket,
            flipped: None,
            notes: Vec::new(),
        };
        classify(&mut r, ev, None);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.max_pairwise_diff, Some(1.0));
    }
}
