use std::sync::Arc;

use symkern::catalog::{self, expectation, expectation_quadrature, transform_lhs};
use symkern::riccati::{DiffusionSpec, PotentialSpec};
use symkern::verify::*;
use symkern::Error;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

fn besq3() -> Arc<dyn catalog::Model> {
    catalog::entry("besq").unwrap().with(&[("n", 3.0)]).unwrap()
}

#[test]
fn semi_infinite_quadrature() {
    let spec = QuadratureSpec::default();
    let one = integrate_semi_infinite(|y| (-y).exp(), &spec).unwrap();
    assert!(rel(one, 1.0) < 1e-12);
    let h = Hints::at(&[1.0]).singular(-0.5);
    let g = integrate_semi_infinite_hinted(|y: f64| y.powf(-0.5) * (-y).exp(), &h, &spec).unwrap();
    assert!(rel(g, std::f64::consts::PI.sqrt()) < 1e-10, "{g}");
    let m = besq3();
    let lhs = transform_lhs(m.as_ref(), 1.0, 1.0, 1.0, &spec).unwrap();
    assert!((lhs - 0.137896).abs() < 1e-6, "{lhs}");
}

#[test]
fn divergent_tail_is_an_error() {
    let r = integrate_semi_infinite(|y: f64| 1.0 / (1.0 + y), &QuadratureSpec::default());
    assert!(matches!(r, Err(Error::Convergence(_))), "{r:?}");
}

#[test]
fn gaver_stehfest_textbook_pairs() {
    let e = laplace_invert(|l| 1.0 / (l + 1.0), 1.0, DEFAULT_ORDER).unwrap();
    assert!(rel(e.value, (-1.0f64).exp()) < 1e-5, "{}", e.value);
    for y in [0.3, 1.0, 7.0] {
        let h = laplace_invert(|l| 1.0 / l, y, DEFAULT_ORDER).unwrap();
        assert!((h.value - 1.0).abs() < 1e-8, "{}", h.value);
    }
    assert!(laplace_invert(|l| 1.0 / l, -1.0, DEFAULT_ORDER).is_err());
    assert!(laplace_invert(|l| 1.0 / l, 1.0, 13).is_err());
}

#[test]
fn gaver_stehfest_recovers_a_density() {
    let m = besq3();
    let v = laplace_invert(|l| expectation(m.as_ref(), l, 1.0, 1.0).unwrap(), 1.0, DEFAULT_ORDER).unwrap();
    assert!((v.value - 0.172477).abs() < 2e-5, "{}", v.value);
    assert!(rel(v.value, m.density(1.0, 1.0, 1.0).unwrap()) < 1e-4);
    assert_eq!(
        gaver_stehfest(|l| 1.0 / l, 2.0, DEFAULT_ORDER).unwrap(),
        laplace_invert(|l| 1.0 / l, 2.0, DEFAULT_ORDER).unwrap().value
    );
}

#[test]
fn stehfest_detects_a_jump() {
    // unit step at y = 1 has transform e^{-lambda}/lambda
    let r = laplace_invert(|l| (-l).exp() / l, 1.0, DEFAULT_ORDER);
    assert!(matches!(r, Err(Error::Instability(_))), "{r:?}");
    assert!(order_spread(|l| (-l).exp() / l, 1.0) > CHECK_TOL);
}

#[test]
fn whittaker_of_zero_is_zero() {
    let v = whittaker_forward(&|_| 0.0, 0.3, 0.7, 1.5, &Hints::default(), &QuadratureSpec::default()).unwrap();
    assert_eq!(v, 0.0);
    assert!(whittaker_forward(&|_| 1.0, 0.3, 0.7, 0.0, &Hints::default(), &QuadratureSpec::default()).is_err());
}

#[test]
fn whittaker_with_equal_indices_is_a_laplace_transform() {
    // W_{nu+1/2, nu}(z) = z^{nu+1/2} e^{-z/2}
    let spec = QuadratureSpec::default();
    let phi = |y: f64| y.sqrt() * (-0.3 * y).exp() / (1.0 + y);
    let hints = Hints::at(&[1.0, 5.0]).singular(0.5);
    for (nu, lam) in [(0.25, 0.5), (1.3, 2.0), (2.0, 1.0)] {
        let w = whittaker_forward(&phi, nu, nu, lam, &hints, &spec).unwrap();
        let l = integrate_semi_infinite_hinted(|y| (-lam * y).exp() * phi(y), &hints, &spec).unwrap();
        assert!(rel(w, l) < 1e-9, "nu={nu} lambda={lam}: {w} vs {l}");
    }
}

#[test]
fn whittaker_identity_needs_a_polynomial_tricomi_factor() {
    let lambdas = [0.5, 2.0, 8.0];
    for kappa in [0.0, -3.0 / 16.0] {
        let r = check_whittaker(2.0, 1.0, 1.0, 0.0, kappa, 0.5, 1.0, &lambdas).unwrap();
        assert!(r.pass, "{}", r.summary());
    }
    // with 1/x killing alpha is not an integer and the Tricomi solution is not propagated by the kernel
    let r = check_whittaker(2.0, 1.0, 1.0, 0.3, 0.0, 0.5, 1.0, &lambdas).unwrap();
    assert!(!r.pass && r.max_rel_err > 0.05, "{}", r.summary());
}

#[test]
fn monte_carlo_without_killing_or_test_function_is_one() {
    let d = DiffusionSpec::new("besq3", 1.0, 2.0, |_| 3.0, |x: f64| 3.0 * x.ln());
    let spec = McSpec { n_paths: 2000, n_steps: 50, ..McSpec::default() };
    let e = mc_expectation(&d, &PotentialSpec::zero(), 0.0, 1.0, 1.0, 1.0, &spec).unwrap();
    assert_eq!(e.estimate, 1.0);
    assert_eq!(e.standard_error, 0.0);
    assert_eq!(e.samples, 2000);
}

#[test]
fn monte_carlo_is_reproducible() {
    let m = catalog::entry("cir").unwrap().with(&[("mu", 0.3)]).unwrap();
    let spec = McSpec { n_paths: 3000, n_steps: 100, seed: 11, ..McSpec::default() };
    let a = mc_expectation(&m.diffusion(), &m.potential(), 0.5, 1.0, 0.5, 1.0, &spec).unwrap();
    let b = mc_expectation(&m.diffusion(), &m.potential(), 0.5, 1.0, 0.5, 1.0, &spec).unwrap();
    assert_eq!(a.estimate.to_bits(), b.estimate.to_bits());
    assert_eq!(a.standard_error.to_bits(), b.standard_error.to_bits());
    let c = mc_expectation(&m.diffusion(), &m.potential(), 0.5, 1.0, 0.5, 1.0, &McSpec { seed: 12, ..spec }).unwrap();
    assert_ne!(a.estimate, c.estimate);
}

#[test]
fn monte_carlo_rejects_bad_specs() {
    let m = catalog::entry("cir").unwrap().with(&[]).unwrap();
    let (d, p) = (m.diffusion(), m.potential());
    let small = McSpec { n_paths: 10, ..McSpec::default() };
    assert!(mc_expectation(&d, &p, 0.5, 1.0, 0.5, 1.0, &small).is_err());
    let exact = McSpec { n_paths: 1000, n_steps: 10, scheme: Scheme::ExactBesq, ..McSpec::default() };
    assert!(matches!(mc_expectation(&d, &p, 0.5, 1.0, 0.5, 1.0, &exact), Err(Error::Capability(_))));
    assert!(mc_expectation(&d, &p, -1.0, 1.0, 0.5, 1.0, &exact).is_err());
}

#[test]
fn monte_carlo_matches_besq_with_linear_killing() {
    let e = catalog::entry("besq").unwrap();
    let p = e.params(&[("n", 2.0), ("b", 1.0)]).unwrap();
    let spec = McSpec { n_paths: 20_000, n_steps: 200, scheme: Scheme::ExactBesq, seed: 3, antithetic: false };
    let r = check_mc(&e, &p, 0.0, 1.0, 1.0, &spec, 3.0).unwrap();
    let want = (-0.5 * 1.0f64.tanh()).exp() / 1.0f64.cosh();
    assert!(rel(r.rows[0].reference, want) < 1e-12, "{}", r.rows[0].reference);
    assert!(r.pass, "{}", r.summary());
}

#[test]
fn monte_carlo_matches_cir_quadrature() {
    let e = catalog::entry("cir").unwrap();
    let p = e.params(&[("a", 2.0), ("b", 1.0), ("sigma", 1.0), ("mu", 0.0)]).unwrap();
    let m = e.instantiate(&p).unwrap();
    let q = expectation_quadrature(m.as_ref(), 1.0, 0.5, 1.0, &QuadratureSpec::default()).unwrap();
    let spec = McSpec { n_paths: 20_000, n_steps: 200, seed: 5, antithetic: true, ..McSpec::default() };
    let est = mc_expectation(&m.diffusion(), &m.potential(), 1.0, m.test_power(), 0.5, 1.0, &spec).unwrap();
    assert!((est.estimate - q).abs() < 3.0 * est.standard_error, "{} +- {} vs {q}", est.estimate, est.standard_error);
}

#[test]
fn monte_carlo_error_shrinks_like_root_n() {
    let e = catalog::entry("cir").unwrap();
    let spec = McSpec { n_steps: 20, seed: 1, ..McSpec::default() };
    let r = check_mc_rate(&e, &e.defaults(), 0.5, 0.5, 1.0, &spec, &[1_000, 10_000, 100_000]).unwrap();
    assert!(r.pass, "{}", r.summary());
}

#[test]
fn pairwise_sum_is_exact_on_small_integers() {
    let v: Vec<f64> = (1..=1000).map(|i| i as f64).collect();
    assert_eq!(pairwise_sum(&v), 500500.0);
    assert_eq!(pairwise_sum(&[]), 0.0);
    let tiny = vec![0.1; 1 << 16];
    assert!((pairwise_sum(&tiny) - 6553.6).abs() < 1e-9);
}

#[test]
fn neville_extrapolates_polynomials_exactly() {
    let h = [0.1, 0.05, 0.025];
    let v: Vec<f64> = h.iter().map(|x| 2.0 + 3.0 * x - x * x).collect();
    assert!((neville_at_zero(&h, &v) - 2.0).abs() < 1e-13);
}

#[test]
fn report_pass_flag_follows_tolerance() {
    let mut r = VerificationReport::new("demo", "exact", 1e-6);
    r.relative("x=1", 2.0, 2.0 + 1e-7);
    assert!(r.pass);
    r.relative("x=2", 1.0, 1.1);
    assert!(!r.pass);
    assert_eq!(r.passed_rows(), 1);
    assert!((r.max_rel_err - 0.1).abs() < 1e-12);
    assert!(r.summary().starts_with("FAIL demo"));

    let mut z = VerificationReport::new("zero", "exact", 1e-9);
    z.relative("x=0", 0.0, 1e-10);
    assert!(z.pass);
    let mut s = VerificationReport::new("mc", "closed form", 3.0);
    s.within_standard_errors("seed=0", 1.0, 1.02, 0.01);
    assert!(s.pass);
    s.within_standard_errors("seed=1", 1.0, 1.04, 0.01);
    assert!(!s.pass);
}

#[test]
fn report_serializes() {
    let mut r = VerificationReport::new("demo", "exact", 1e-6);
    r.relative("x=1", 0.1, 0.1);
    let j = serde_json::to_value(&r).unwrap();
    assert_eq!(j["identity"], "demo");
    assert_eq!(j["rows"][0]["pass"], true);
    assert!(j["rows"][0].get("standard_error").is_none());
    let mut buf = Vec::new();
    write_csv(&[r], &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "identity,grid_point,reference,computed,abs_err,rel_err,pass");
    assert_eq!(lines.next().unwrap(), "demo,x=1,0.1,0.1,0,0,true");
}

#[test]
fn fifteen_significant_digits() {
    assert_eq!(fmt15(0.1), "0.1");
    assert_eq!(fmt15(1.0 / 3.0), "0.333333333333333");
    assert_eq!(fmt15(0.0), "0");
    assert_eq!(fmt15(-2.5), "-2.5");
    assert_eq!(fmt15(123456.789), "123456.789");
    assert!(fmt15(1e-9).contains('e'));
    assert_eq!(fmt15(1e-9).parse::<f64>().unwrap(), 1e-9);
}

#[test]
fn alt_representation_agrees_with_confluent_form() {
    let r = check_alt_representation(1.0, 1.0, 0.5, 1.0, 1.0).unwrap();
    assert!(r.pass, "{}", r.summary());
    // mu = 0 removes the killing
    let r0 = check_alt_representation(1.0, 0.0, 0.5, 1.0, 1.0).unwrap();
    assert!(r0.pass);
    assert!((r0.rows[0].reference - 2.0f64.powf(-2.0) * (-0.25f64).exp()).abs() < 1e-12);
}

#[test]
fn limit_reduction_flags_nothing_on_a_clean_limit() {
    let e = catalog::entry("besq").unwrap();
    let target = e.with(&[("n", 3.0), ("mu", 0.3)]).unwrap();
    let r = check_limit_reduction(
        &e,
        &e.params(&[("n", 3.0), ("b", 0.1), ("mu", 0.3)]).unwrap(),
        "b",
        &[0.1, 0.01, 0.001],
        LimitVariable::Linear,
        target.as_ref(),
        1.0,
        1.0,
        &[0.5, 1.0, 2.0],
    )
    .unwrap();
    assert!(r.pass && !r.inconclusive, "{}", r.summary());
}

#[test]
fn report_can_be_rejudged() {
    let mut r = VerificationReport::new("demo", "exact", 1e-6);
    r.relative("x=1", 1.0, 1.0 + 1e-5);
    r.record("x=2", 1.0, 3.0, true);
    assert!(!r.pass);
    let loose = r.clone().with_tolerance(1e-4);
    assert!(loose.pass && loose.rows[1].pass);
    assert!(!loose.with_tolerance(1e-7).pass);
}
