use std::f64::consts::PI;

use stieltjes::lfunctions::{catalan_series, l_value, l_value_euler, l_value_via_fe};
use stieltjes::primeprod::{euler_product_ratio, inert_product_spec, residue_product};
use stieltjes::stieltjes::{stieltjes_gamma, stieltjes_oracle};
use stieltjes::special::digamma;

#[test]
fn gamma0_is_minus_digamma() {
    for q in 1..=8 {
        let a = f64::from(q) / 8.0;
        let (g, _) = stieltjes_gamma(0, a).unwrap();
        assert!((g + digamma(a).unwrap()).abs() < 1e-12, "a = {a}");
    }
}

#[test]
fn integral_and_limit_definitions_agree() {
    for a in [0.25, 0.5, 1.0] {
        for k in 0..=5 {
            let (g, _) = stieltjes_gamma(k, a).unwrap();
            let (o, _) = stieltjes_oracle(k, a).unwrap();
            assert!((g - o).abs() < 1e-8 * g.abs().max(1.0), "k = {k}, a = {a}");
        }
    }
}

#[test]
fn three_l_routes() {
    let g = catalan_series();
    let h = l_value(-4, 2.0).unwrap();
    assert!((h.value - g).abs() < 1e-14);
    let e = l_value_euler(-4, 2.0, 1_000_000).unwrap();
    assert!((e.value - g).abs() <= e.err_estimate);
    let fe = l_value_via_fe(-4, 2.0).unwrap();
    let direct = l_value(-4, -1.0).unwrap();
    assert!((fe.value - direct.value).abs() < 1e-12);
}

#[test]
fn inert_product_matches_l_ratio() {
    for d in [-3, -4, 5, 8, -7] {
        let spec = inert_product_spec(d, 2.0, 1_000_000).unwrap();
        let (v, tail) = residue_product(&spec).unwrap();
        let want = euler_product_ratio(d, 2.0).unwrap();
        assert!((v - want).abs() <= v * tail.exp_m1() + 1e-12, "D = {d}");
    }
    let spec = inert_product_spec(-4, 2.0, 1_000_000).unwrap();
    let (v, _) = residue_product(&spec).unwrap();
    assert!((v - 8.0 * catalan_series() / (PI * PI)).abs() < 1e-6);
}
