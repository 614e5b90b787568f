//! Acceptance suite: one PASS/FAIL line per criterion.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use stieltjes::audit::{run_one, AuditConfig, CheckResult, Mode, Report, Status};
use stieltjes::lfunctions::{
    beta_odd, catalan_series, l_value, l_value_euler, l_value_via_fe, selberg_chowla_half,
    DivisorWeight,
};
use stieltjes::primeprod::{residue_product, ResidueProductSpec};
use stieltjes::special::digamma;
use stieltjes::stieltjes::{stieltjes_gamma, stieltjes_oracle, summatory_eval, SummatorySpec};
use stieltjes::zeta::{hurwitz_zeta_with_error, zeta_bounds, zeta_crit_strip_with_error};
use stieltjes::Rational;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg)
    }
}

fn err(e: stieltjes::Error) -> String {
    e.to_string()
}

fn check(id: &str, mode: Mode) -> Result<CheckResult, String> {
    run_one(id, &AuditConfig::default().with_mode(mode)).map_err(err)
}

fn passes(id: &str) -> Result<CheckResult, String> {
    let c = check(id, Mode::Audited)?;
    ensure(
        c.status == Status::Pass,
        format!("{id}: {} diff {:?} tol {:e}", c.status.as_str(), c.max_pairwise_diff, c.tolerance),
    )?;
    Ok(c)
}

fn route(c: &CheckResult, name: &str) -> Result<f64, String> {
    c.routes
        .iter()
        .find(|r| r.name == name)
        .map(|r| r.value)
        .ok_or_else(|| format!("{}: no route {name}", c.id))
}

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p, q).unwrap()
}

fn c1() -> Outcome {
    let mut worst = Duration::ZERO;
    for (s, want) in [(2.0, PI * PI / 6.0), (4.0, PI.powi(4) / 90.0)] {
        let (v, _) = hurwitz_zeta_with_error(s, 1.0).map_err(err)?;
        ensure((v - want).abs() < 1e-12, format!("zeta({s}) off by {:e}", v - want))?;
        let mut best = Duration::MAX;
        for _ in 0..20 {
            let t = Instant::now();
            std::hint::black_box(hurwitz_zeta_with_error(std::hint::black_box(s), 1.0).map_err(err)?);
            best = best.min(t.elapsed());
        }
        worst = worst.max(best);
    }
    ensure(worst < Duration::from_millis(1), format!("slowest call {worst:?}"))?;
    Ok(format!("zeta(2), zeta(4) within 1e-12, slowest {worst:?}"))
}

fn c2() -> Outcome {
    let mut max: f64 = 0.0;
    for q in 1..=8 {
        let a = f64::from(q) / 8.0;
        let (g, _) = stieltjes_gamma(0, a).map_err(err)?;
        max = max.max((g + digamma(a).map_err(err)?).abs());
    }
    ensure(max < 1e-10, format!("max |γ0 + ψ| = {max:e}"))?;
    Ok(format!("max |γ0(a) + ψ(a)| = {max:.1e}"))
}

fn c3() -> Outcome {
    let t = Instant::now();
    let mut max: f64 = 0.0;
    for k in 0..=8 {
        let (g, _) = stieltjes_gamma(k, 1.0).map_err(err)?;
        let (o, _) = stieltjes_oracle(k, 1.0).map_err(err)?;
        max = max.max((g - o).abs());
    }
    let el = t.elapsed();
    ensure(max < 1e-8, format!("max diff {max:e}"))?;
    ensure(el < Duration::from_secs(5), format!("took {el:?}"))?;
    Ok(format!("k <= 8 max diff {max:.1e} in {el:?}"))
}

fn c4() -> Outcome {
    let spec = SummatorySpec::new(vec![(rat(1, 1), rat(1, 3)), (rat(-1, 1), rat(2, 3))], -1.0)
        .with_n_max(30);
    let r = summatory_eval(&spec).map_err(err)?;
    let dc = (r.closed_form - 1.0 / 3.0).abs();
    let dp = (r.partial_sums[30] - 1.0 / 3.0).abs();
    ensure(dc < 1e-12, format!("closed form off by {dc:e}"))?;
    ensure(dp < 1e-8, format!("S_30 off by {dp:e}"))?;
    Ok(format!("closed form diff {dc:.1e}, S_30 diff {dp:.1e}"))
}

fn c5() -> Outcome {
    let g = catalan_series();
    let h = l_value(-4, 2.0).map_err(err)?;
    ensure((h.value - g).abs() < 1e-10, format!("Hurwitz vs G {:e}", h.value - g))?;
    let e = l_value_euler(-4, 2.0, 10_000_000).map_err(err)?;
    ensure(
        (e.value - h.value).abs() <= e.err_estimate,
        format!("Euler product diff {:e} > bound {:e}", e.value - h.value, e.err_estimate),
    )?;
    // L(2) -> L(-1) and L(0.3) -> L(0.7) -> L(0.3)
    let fe = l_value_via_fe(-4, 2.0).map_err(err)?;
    let direct = l_value(-4, -1.0).map_err(err)?;
    ensure((fe.value - direct.value).abs() < 1e-10, format!("FE at -1 {:e}", fe.value - direct.value))?;
    let there = l_value_via_fe(-4, 0.3).map_err(err)?;
    let direct7 = l_value(-4, 0.7).map_err(err)?;
    let back = lfe_from_value(-4, 0.7, there.value)?;
    let l3 = l_value(-4, 0.3).map_err(err)?.value;
    ensure((there.value - direct7.value).abs() < 1e-10, "FE 0.3 -> 0.7".into())?;
    ensure((back - l3).abs() < 1e-10, format!("FE round trip {:e}", back - l3))?;
    Ok(format!(
        "Hurwitz - G {:.1e}, Euler diff {:.1e} (bound {:.1e}), FE round trip {:.1e}",
        h.value - g,
        e.value - h.value,
        e.err_estimate,
        back - l3
    ))
}

fn lfe_from_value(d: i64, s: f64, value: f64) -> Result<f64, String> {
    let f = stieltjes::lfunctions::functional_factor(d, s).map_err(err)?;
    Ok(f * value)
}

fn series_terms(c: &CheckResult) -> Result<usize, String> {
    c.notes
        .iter()
        .find_map(|n| n.strip_suffix(" series terms above 1e-16"))
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| format!("{}: term count missing", c.id))
}

fn c6() -> Outcome {
    let mut parts = Vec::new();
    for id in ["P6a", "P6b"] {
        let c = passes(id)?;
        let n = series_terms(&c)?;
        ensure(n <= 10, format!("{id} used {n} terms"))?;
        parts.push(format!("{id} diff {:.1e} ({n} terms)", c.max_pairwise_diff.unwrap()));
    }
    Ok(parts.join(", "))
}

fn c7() -> Outcome {
    let c = passes("P9")?;
    let s = route(&c, "log_gamma_closed")?;
    ensure((s - 0.822_825_249_6).abs() < 1e-9, format!("S = {s}"))?;
    for r in ["gamma1_difference", "j2_quadrature"] {
        let v = route(&c, r)?;
        ensure((v - 0.822_825_249_6).abs() < 1e-9, format!("{r} = {v}"))?;
    }
    let mut j2 = Vec::new();
    for b in ["0.3", "0.7", "1.0", "1.4"] {
        let c = passes(&format!("P9-b{b}"))?;
        j2.push(route(&c, "euler_series")?);
    }
    let spread = j2.iter().cloned().fold(f64::MIN, f64::max) - j2.iter().cloned().fold(f64::MAX, f64::min);
    ensure(spread < 1e-9, format!("J2 spread over b {spread:e}"))?;
    Ok(format!("S = {s:.12}, J2 spread over b {spread:.1e}"))
}

fn c8() -> Outcome {
    let t = Instant::now();
    let mut parts = Vec::new();
    for p in [11, 19] {
        for w in [DivisorWeight::Sigma1, DivisorWeight::Sigma0] {
            let r = selberg_chowla_half(p, w).map_err(err)?;
            let d = (r.lhs - r.rhs).abs();
            ensure(d < 1e-9, format!("p = {p} {w:?}: {d:e}"))?;
            ensure(r.terms_used <= 5, format!("p = {p}: {} terms", r.terms_used))?;
            parts.push(format!("p={p} {w:?} {d:.1e}"));
        }
    }
    let el = t.elapsed();
    ensure(el < Duration::from_secs(2), format!("took {el:?}"))?;
    Ok(format!("{} in {el:?}", parts.join(", ")))
}

fn c9() -> Outcome {
    let (z, _) = zeta_crit_strip_with_error(0.5).map_err(err)?;
    let lo = -1.5 + 1.0 / (15.0 * 5f64.sqrt());
    ensure(lo < z && z < -35.0 / 24.0, format!("zeta(1/2) = {z}"))?;
    let b = zeta_bounds(0.5).map_err(err)?;
    let want_lo = 0.5 * (1.0 + 2.0 / (15.0 * 5f64.sqrt()));
    ensure((b.refined_quadrature.0 - want_lo).abs() < 1e-10, "lower integral".into())?;
    ensure((b.refined_quadrature.1 - 13.0 / 24.0).abs() < 1e-10, "upper integral".into())?;
    for id in ["P11", "P11-int-lo", "P11-int-hi", "P11-quarter"] {
        passes(id)?;
    }
    Ok(format!("zeta(1/2) = {z:.12} inside ({lo:.6}, {:.6}); integrals and zeta(1/4) bracket hold", -35.0 / 24.0))
}

fn c10() -> Outcome {
    let g = catalan_series();
    let mut parts = Vec::new();
    for (minus, plus, want, name) in [
        (vec![3u64], vec![], 8.0 * g / (PI * PI), "p=3 (4)"),
        (vec![], vec![1u64], 12.0 * g / (PI * PI), "p=1 (4)"),
    ] {
        let spec = ResidueProductSpec::new(4, &minus, &plus, 2.0, 100_000_000);
        let t = Instant::now();
        let (v, log_tail) = residue_product(&spec).map_err(err)?;
        let el = t.elapsed();
        let tail = v * log_tail.exp_m1();
        let d = (v - want).abs();
        ensure(tail < 2e-9, format!("{name}: tail bound {tail:e}"))?;
        ensure(d <= tail + 1e-10, format!("{name}: diff {d:e} > {tail:e} + 1e-10"))?;
        ensure(el < Duration::from_secs(90), format!("{name}: took {el:?}"))?;
        parts.push(format!("{name} diff {d:.1e} tail {tail:.1e} in {el:.1?}"));
    }
    Ok(parts.join(", "))
}

fn c11() -> Outcome {
    let c = passes("P2-I7")?;
    Ok(format!("quadrature vs L(-7, 2) diff {:.1e}", c.max_pairwise_diff.unwrap()))
}

fn c12() -> Outcome {
    let e = passes("P3-epstein")?;
    ensure(e.tolerance <= 1e-6, "Epstein tolerance".into())?;
    let s = passes("P3-sigma")?;
    ensure(s.tolerance <= 1e-9, "sigma tolerance".into())?;
    let v = check("P3-volume", Mode::Audited)?;
    let ratio = v
        .ratio_diagnostic
        .as_ref()
        .map(|r| r.measured_ratio)
        .ok_or("volume ratio not reported")?;
    Ok(format!(
        "Epstein diff {:.1e}, sigma series diff {:.1e}, volume ratio {ratio:.15}",
        e.max_pairwise_diff.unwrap(),
        s.max_pairwise_diff.unwrap()
    ))
}

fn c13() -> Outcome {
    let mut ratios = Vec::new();
    for k in 0..=4usize {
        let id = format!("P8_k{k}");
        let c = passes(&id)?;
        let series = route(&c, "stieltjes_series")?;
        let want = 4f64.powi(2 * k as i32 + 1) * beta_odd(k).map_err(err)?;
        ensure((series - want).abs() < 1e-8, format!("{id}: {:e}", series - want))?;
        let lit = check(&id, Mode::Literal)?;
        let r = lit.ratio_diagnostic.ok_or(format!("{id}: literal ratio missing"))?;
        ratios.push(format!("{:.6e}", r.measured_ratio));
    }
    Ok(format!("audited within 1e-8; literal ratios {}", ratios.join(", ")))
}

fn c14() -> Outcome {
    let mut max: f64 = 0.0;
    for d in [-3, -4, 5, -7, 8, -8, 12] {
        for s in [0.25, 0.75, 2.0, 3.0] {
            let fe = l_value_via_fe(d, s).map_err(err)?;
            let direct = l_value(d, 1.0 - s).map_err(err)?;
            max = max.max((fe.value - direct.value).abs());
        }
    }
    ensure(max < 1e-9, format!("max residual {max:e}"))?;
    Ok(format!("max residual {max:.1e}"))
}

fn c15() -> Outcome {
    let dir = std::env::temp_dir();
    let t = Instant::now();
    let mut outputs = Vec::new();
    for i in 0..2 {
        let path = dir.join(format!("stieltjes-acceptance-{}-{i}.json", std::process::id()));
        let status = Command::new(env!("CARGO_BIN_EXE_stieltjes"))
            .args(["audit", "--mode", "both", "--format", "json", "--timestamp", "2026-01-01T00:00:00Z", "--out"])
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        ensure(matches!(status.code(), Some(0 | 1)), format!("exit status {status}"))?;
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
        let _ = std::fs::remove_file(&path);
    }
    let el = t.elapsed();
    ensure(el < Duration::from_secs(300), format!("two runs took {el:?}"))?;
    ensure(outputs[0] == outputs[1], "reports differ".into())?;
    let report = Report::from_json(&String::from_utf8_lossy(&outputs[0])).map_err(err)?;
    let fails = report.audited_failures();
    ensure(fails == 0, format!("{fails} audited FAILs"))?;
    let s = &report.summary;
    Ok(format!(
        "{} checks, {} pass / {} fail / {} mismatch, audited FAIL 0, identical bytes, {el:.1?} for two runs",
        report.checks.len(),
        s.pass,
        s.fail,
        s.mismatch
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 15] = [
        ("zeta(2), zeta(4) by Euler-Maclaurin", c1),
        ("gamma_0(a) = -psi(a)", c2),
        ("integral vs limit-definition gamma_k(1)", c3),
        ("thirds sum equals 1/3", c4),
        ("L_-4(2) = G by three routes", c5),
        ("gamma_1 differences by Kronecker series", c6),
        ("Sierpinski constant three ways, J2 b-independence", c7),
        ("Selberg-Chowla at p = 11, 19", c8),
        ("zeta(1/2) and zeta(1/4) brackets", c9),
        ("mod 4 prime products at 10^8", c10),
        ("I_-7 quadrature", c11),
        ("Dedekind zeta of Q(sqrt -23) routes", c12),
        ("L_-4(2k+1) summatory values", c13),
        ("functional-equation residuals", c14),
        ("full audit in both modes, reproducible", c15),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {:>2}: {name}: {detail}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {e}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
