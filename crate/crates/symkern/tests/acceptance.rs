// Acceptance suite. Runs without the libtest harness so every criterion prints one
// PASS/FAIL line; the process exits non-zero if any criterion fails.
// SYMKERN_SKIP_SLOW=1 skips the Monte Carlo criterion.

use std::time::Instant;

use symkern::catalog::{self, expectation, CatalogEntry, Params};
use symkern::riccati::{DiffusionSpec, PotentialSpec};
use symkern::symmetry::{
    exponential_symmetry, laplace_symmetry, log_gaussian_symmetry, stationary_solution, tricomi_symmetry, Branch,
    StationarySolution,
};
use symkern::verify::*;
use symkern::Result;

fn entry(name: &str) -> CatalogEntry {
    catalog::entry(name).unwrap()
}

fn params(name: &str, o: &[(&str, f64)]) -> Params {
    entry(name).params(o).unwrap()
}

struct Outcome {
    reports: Vec<VerificationReport>,
    errors: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { reports: Vec::new(), errors: Vec::new() }
    }

    fn push(&mut self, r: Result<VerificationReport>) {
        match r {
            Ok(r) => self.reports.push(r),
            Err(e) => self.errors.push(e.to_string()),
        }
    }

    fn pass(&self) -> bool {
        self.errors.is_empty() && !self.reports.is_empty() && self.reports.iter().all(|r| r.pass)
    }

    fn rows(&self) -> usize {
        self.reports.iter().map(|r| r.rows.len()).sum()
    }

    fn worst_rel(&self) -> f64 {
        self.reports.iter().map(|r| r.max_rel_err).fold(0.0, f64::max)
    }
}

fn riccati_suite() -> Outcome {
    let mut o = Outcome::new();
    for e in catalog::catalog() {
        o.push(check_riccati(&e, &e.defaults()));
    }
    for (n, p) in [
        ("besq", vec![("n", 3.0), ("b", 0.5), ("mu", 0.5)]),
        ("cir", vec![("mu", 0.3), ("kappa", 0.4)]),
        ("pitman-yor", vec![("mu", 0.5), ("a", 1.0), ("b", 1.0)]),
        ("radial-ou", vec![("mu", 0.3)]),
        ("tanh-drift", vec![("mu", 0.5)]),
    ] {
        o.push(check_riccati(&entry(n), &params(n, &p)));
    }
    o
}

fn transform_suite() -> Outcome {
    let lambdas = [0.1, 0.5, 1.0, 2.0, 5.0];
    let sets: Vec<(&str, Vec<(&str, f64)>)> = vec![
        ("besq", vec![("n", 3.0)]),
        ("besq", vec![("n", 2.0), ("mu", 0.4)]),
        ("bessel", vec![("a", 1.0), ("mu", 1.0)]),
        ("pitman-yor", vec![("mu", 0.5), ("a", 1.0), ("b", 1.0)]),
        ("rational-drift", vec![("mu", 0.5)]),
        ("rational-drift", vec![]),
        ("showcase", vec![]),
        ("sqrt-drift", vec![]),
        ("generic-a0", vec![]),
    ];
    let mut o = Outcome::new();
    for (n, p) in sets {
        for t in [0.25, 1.0] {
            for x in [0.5, 1.0, 2.0] {
                o.push(check_transform_identity(&entry(n), &params(n, &p), &lambdas, t, x));
            }
        }
    }
    o
}

fn mass_suite() -> Outcome {
    let tx = [(0.25, 0.5), (1.0, 1.0), (2.5, 3.0)];
    let mut o = Outcome::new();
    for e in catalog::catalog() {
        let mut p = e.defaults();
        for k in ["mu", "kappa"] {
            if let Some(v) = p.get_mut(k) {
                *v = 0.0;
            }
        }
        match e.instantiate(&p) {
            Ok(m) if m.conserves_mass() => o.push(check_mass(&e, &p, &tx)),
            _ => {}
        }
    }
    o.push(check_cosh_mass(&tx));
    o.push(check_showcase_mass(1.0, 2.0, &tx));
    o.push(check_showcase_mass(0.5, 0.3, &tx));
    o
}

fn inversion_suite() -> Outcome {
    let ys = [0.2, 0.35, 0.5, 0.75, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0];
    let mut o = Outcome::new();
    o.push(check_laplace_inversion(&entry("besq"), &params("besq", &[("n", 3.0)]), 1.0, 1.0, &ys));
    o
}

fn pde_suite() -> Outcome {
    let pts = [(0.5, 1.0, 1.3), (1.0, 0.7, 2.0)];
    let mut o = Outcome::new();
    let mut models = Vec::new();
    for e in catalog::catalog() {
        models.push((e.clone(), e.defaults()));
    }
    models.push((entry("rational-drift"), params("rational-drift", &[("mu", 0.5)])));
    models.push((entry("cir"), params("cir", &[("mu", 0.3), ("kappa", 0.4)])));
    models.push((entry("tanh-drift"), params("tanh-drift", &[("mu", 0.5)])));
    for (e, p) in &models {
        o.push(check_density_pde(e, p, &pts));
        // the expectation as a function of the backward variables at fixed lambda
        let m = e.instantiate(p).unwrap();
        if m.expectation_closed(0.5, 1.0, 1.0).is_some() {
            let u = |x: f64, t: f64| expectation(m.as_ref(), 0.5, t, x).unwrap_or(f64::NAN);
            o.push(check_pde_order(
                format!("pde:expectation:{}", e.name),
                &u,
                &m.diffusion(),
                &m.potential(),
                &[(1.0, 0.7), (2.0, 0.4)],
            ));
        }
    }

    let besq3 = DiffusionSpec::new("besq3", 1.0, 2.0, |_| 3.0, |x: f64| 3.0 * x.ln()).with_derivative(|_| 0.0);
    let sym = laplace_symmetry(&besq3, &StationarySolution::constant_one(), 0.0).unwrap();
    let u = sym.at(0.3);
    o.push(check_pde_order(
        "pde:laplace-symmetry:besq3",
        &u,
        &besq3,
        &PotentialSpec::zero(),
        &[(1.0, 0.5), (2.0, 1.0)],
    ));

    let b = entry("bessel").with(&[("a", 1.0), ("mu", 1.0)]).unwrap();
    let u0 = stationary_solution(&b.diffusion(), &b.potential(), Branch::Default).unwrap();
    let sym = laplace_symmetry(&b.diffusion(), &u0, 0.0).unwrap();
    let u = sym.at(0.3);
    o.push(check_pde_order(
        "pde:laplace-symmetry:bessel",
        &u,
        &b.diffusion(),
        &b.potential(),
        &[(1.0, 0.5), (2.0, 1.0)],
    ));

    let flat = DiffusionSpec::new("flat", 2.0, 1.0, |_| 0.0, |_| 0.0).with_derivative(|_| 0.0);
    let sym = log_gaussian_symmetry(&flat, &StationarySolution::constant_one(), 0.0).unwrap();
    let u = sym.at(0.5);
    o.push(check_pde_order("pde:log-gaussian-symmetry", &u, &flat, &PotentialSpec::zero(), &[(2.0, 0.3), (0.5, 1.0)]));

    let r = entry("rational-drift").with(&[("a", 2.0), ("mu", 0.5)]).unwrap();
    let u0 = stationary_solution(&r.diffusion(), &r.potential(), Branch::Second).unwrap();
    let sym = exponential_symmetry(&r.diffusion(), &u0, &r.riccati()).unwrap();
    let u = sym.at(0.4);
    o.push(check_pde_order("pde:exponential-symmetry", &u, &r.diffusion(), &r.potential(), &[(1.0, 0.7), (0.5, 1.5)]));

    let c = entry("cir").with(&[("a", 2.0), ("b", 1.0), ("sigma", 1.0), ("kappa", 0.3)]).unwrap();
    let sym = tricomi_symmetry(&c.diffusion(), &c.riccati()).unwrap();
    for eps in [0.5, -1.0] {
        let u = sym.at(eps);
        o.push(check_pde_order(
            format!("pde:tricomi-symmetry:eps={eps}"),
            &u,
            &c.diffusion(),
            &c.potential(),
            &[(1.0, 0.5), (2.0, 1.0)],
        ));
    }
    o
}

fn expectation_suite() -> Outcome {
    let mut grid = Vec::new();
    for l in [0.1, 1.0, 3.0] {
        for t in [0.25, 0.5, 1.0] {
            for x in [0.5, 1.0, 2.0] {
                grid.push((l, t, x));
            }
        }
    }
    let mut o = Outcome::new();
    for (n, p) in [
        ("bessel", vec![("a", 1.0), ("mu", 1.0)]),
        ("besq", vec![("n", 2.0), ("b", 1.0)]),
        ("besq", vec![("n", 3.0), ("b", 0.5), ("mu", 0.5)]),
        ("cir", vec![("mu", 0.3)]),
        ("cir", vec![("mu", 0.3), ("kappa", 0.4)]),
        ("rational-drift", vec![("mu", 0.5)]),
        ("radial-ou", vec![("mu", 0.3)]),
        ("tanh-drift", vec![("mu", 0.5)]),
        ("sqrt-drift", vec![]),
    ] {
        o.push(check_expectation(&entry(n), &params(n, &p), &grid));
    }
    o
}

fn monte_carlo_suite() -> Outcome {
    let cases: [(&str, Vec<(&str, f64)>, Scheme, f64); 4] = [
        ("besq", vec![("n", 2.0), ("b", 1.0)], Scheme::ExactBesq, 0.0),
        ("cir", vec![("mu", 0.3)], Scheme::EulerFullTruncation, 0.5),
        ("bessel", vec![("a", 1.0), ("mu", 1.0)], Scheme::EulerFullTruncation, 0.5),
        ("radial-ou", vec![("mu", 0.3)], Scheme::EulerFullTruncation, 0.5),
    ];
    let mut o = Outcome::new();
    for (n, p, scheme, lambda) in cases {
        let e = entry(n);
        let p = params(n, &p);
        let mut within = 0;
        let seeds = 20;
        let mut summary = VerificationReport::new(format!("mc:{n}"), "closed form", 0.95);
        for seed in 0..seeds {
            let spec = McSpec { n_paths: 100_000, n_steps: 2000, scheme, seed, antithetic: false };
            match check_mc(&e, &p, lambda, 1.0, 1.0, &spec, 3.0) {
                Ok(r) => {
                    if r.pass {
                        within += 1;
                    }
                }
                Err(err) => o.errors.push(err.to_string()),
            }
        }
        summary.record(
            "fraction of seeds within 3 SE",
            1.0,
            within as f64 / seeds as f64,
            within * 100 >= 95 * seeds as usize,
        );
        o.reports.push(summary);
    }
    o
}

fn limit_suite() -> Outcome {
    let ys = [0.3, 1.0, 2.5];
    let mut o = Outcome::new();
    let target = |n: &str, p: &[(&str, f64)]| entry(n).with(p).unwrap();
    let cases: Vec<(&str, Vec<(&str, f64)>, &str, &[f64], LimitVariable, std::sync::Arc<dyn catalog::Model>)> = vec![
        ("bessel", vec![("mu", 0.1)], "mu", &LIMIT_SEQUENCE, LimitVariable::Linear, target("bessel", &[("mu", 0.0)])),
        (
            "pitman-yor",
            vec![("a", 0.5)],
            "b",
            &LIMIT_SEQUENCE,
            LimitVariable::Linear,
            target("bessel", &[("a", 1.0), ("mu", 0.0)]),
        ),
        (
            "rational-drift",
            vec![("nu", 0.1)],
            "nu",
            &LIMIT_SEQUENCE,
            LimitVariable::Linear,
            target("rational-drift", &[]),
        ),
        (
            "rational-drift",
            vec![("mu", 0.1)],
            "mu",
            &[1e-2, 1e-3, 1e-4, 1e-5, 1e-6],
            LimitVariable::Sqrt,
            target("rational-drift", &[]),
        ),
        ("tanh-drift", vec![("mu", 0.1)], "mu", &LIMIT_SEQUENCE, LimitVariable::Linear, target("tanh-drift", &[])),
        ("radial-ou", vec![("mu", 0.1)], "mu", &LIMIT_SEQUENCE, LimitVariable::Linear, target("radial-ou", &[])),
        (
            "besq",
            vec![("b", 0.1), ("mu", 0.3)],
            "b",
            &LIMIT_SEQUENCE,
            LimitVariable::Linear,
            target("besq", &[("mu", 0.3)]),
        ),
    ];
    for (n, p, name, seq, var, tgt) in cases {
        o.push(check_limit_reduction(&entry(n), &params(n, &p), name, seq, var, tgt.as_ref(), 1.0, 1.0, &ys));
    }
    o
}

fn chapman_suite() -> Outcome {
    let st = [(0.5, 0.5), (0.25, 1.0)];
    let xs = [0.5, 1.0, 2.0];
    let mut o = Outcome::new();
    for n in ["besq", "bessel", "pitman-yor", "cir", "radial-ou"] {
        let e = entry(n);
        o.push(check_chapman_kolmogorov(&e, &e.defaults(), &st, &xs, &xs));
    }
    o
}

fn whittaker_suite() -> Outcome {
    let mut o = Outcome::new();
    let lambdas = [0.5, 1.0, 2.0, 4.0, 8.0];
    // CIR proper, where the Whittaker kernel reduces to e^{-lambda y}
    o.push(check_whittaker(2.0, 1.0, 1.0, 0.0, 0.0, 0.5, 1.0, &lambdas));
    // negative linear rates make the Tricomi factor a degree 1 and degree 2 polynomial, k = nu + 1, nu + 2
    o.push(check_whittaker(2.0, 1.0, 1.0, 0.0, -3.0 / 16.0, 0.5, 1.0, &lambdas));
    o.push(check_whittaker(2.0, 1.0, 1.0, 0.0, -2.0 / 9.0, 0.4, 1.5, &lambdas));
    o
}

fn hartman_watson_suite() -> Outcome {
    let mut o = Outcome::new();
    o.push(check_hartman_watson(3.0, 0.7, &[(1.0, 1.0, 1.0), (0.5, 2.0, 0.3), (2.0, 0.4, 3.0), (0.25, 1.5, 1.5)]));
    o.push(check_hartman_watson(2.5, 2.0, &[(1.0, 1.0, 1.0), (0.3, 0.7, 2.2)]));
    o
}

fn main() {
    let skip_slow = std::env::var("SYMKERN_SKIP_SLOW").is_ok_and(|v| v == "1");
    let criteria: Vec<(u32, &str, bool, fn() -> Outcome)> = vec![
        (1, "Riccati residual < 1e-10 and fitted constants within 1e-6", false, riccati_suite),
        (2, "transform identities by quadrature, rel err < 1e-8", false, transform_suite),
        (3, "mass, cosh mass and showcase defect within 1e-8", false, mass_suite),
        (4, "Gaver-Stehfest round trip within 1e-4 on y in [0.2, 5]", false, inversion_suite),
        (5, "finite-difference residual order 2.0 +- 0.2", false, pde_suite),
        (6, "closed-form expectations against quadrature, rel err < 1e-8", false, expectation_suite),
        (7, "Monte Carlo within 3 SE in >= 95% of 20 seeds (slow)", true, monte_carlo_suite),
        (8, "limit reductions, extrapolated error < 1e-6", false, limit_suite),
        (9, "Chapman-Kolmogorov within 1e-6", false, chapman_suite),
        (10, "Whittaker transform of the CIR-family kernel within 1e-4", false, whittaker_suite),
        (11, "Hartman-Watson ratio within 1e-10", false, hartman_watson_suite),
    ];
    let mut failed = 0;
    for (k, what, slow, run) in criteria {
        if slow && skip_slow {
            println!("SKIP criterion {k:>2}: {what}");
            continue;
        }
        let start = Instant::now();
        let o = run();
        let status = if o.pass() { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {k:>2}: {what} ({} checks, {} rows, max rel err {:.2e}, {:.1}s)",
            o.reports.len(),
            o.rows(),
            o.worst_rel(),
            start.elapsed().as_secs_f64()
        );
        if !o.pass() {
            failed += 1;
            for r in o.reports.iter().filter(|r| !r.pass) {
                println!("    {}", r.summary());
            }
            for e in &o.errors {
                println!("    error: {e}");
            }
        }
        for r in o.reports.iter().filter(|r| r.inconclusive) {
            println!("    inconclusive: {}", r.summary());
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
