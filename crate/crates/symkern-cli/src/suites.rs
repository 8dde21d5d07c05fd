use clap::ValueEnum;
use symkern::catalog::{self, expectation, CatalogEntry, Params};
use symkern::riccati::{DiffusionSpec, PotentialSpec};
use symkern::symmetry::{
    exponential_symmetry, laplace_symmetry, log_gaussian_symmetry, stationary_solution, tricomi_symmetry, Branch,
    StationarySolution,
};
use symkern::verify::*;
use symkern::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Riccati,
    Transform,
    Pde,
    Limits,
    Mc,
    Chapman,
    Whittaker,
    Altrep,
    All,
}

const SUITES: [Suite; 8] = [
    Suite::Riccati,
    Suite::Transform,
    Suite::Pde,
    Suite::Limits,
    Suite::Mc,
    Suite::Chapman,
    Suite::Whittaker,
    Suite::Altrep,
];

type Check = Box<dyn Fn(&CatalogEntry, &Params) -> Result<VerificationReport>>;
type Free = Box<dyn Fn() -> Result<VerificationReport>>;

// A check on one catalog entry with the suite's own parameter choice, which
// command-line parameters override.
struct Case {
    entry: &'static str,
    base: Vec<(&'static str, f64)>,
    check: Check,
}

fn case(
    entry: &'static str,
    base: &[(&'static str, f64)],
    check: impl Fn(&CatalogEntry, &Params) -> Result<VerificationReport> + 'static,
) -> Case {
    Case { entry, base: base.to_vec(), check: Box::new(check) }
}

pub struct Selection {
    pub entry: Option<CatalogEntry>,
    pub params: Vec<(String, f64)>,
    pub mc: McSpec,
}

/// Runs the suite; with an entry selected only that entry's cases run, and an
/// empty selection is an error.
pub fn run(suite: Suite, sel: &Selection) -> Result<Vec<Result<VerificationReport>>> {
    let suites: &[Suite] = if suite == Suite::All { &SUITES } else { std::slice::from_ref(&suite) };
    let mut out = Vec::new();
    for s in suites {
        let (cases, free) = build(*s, sel.mc);
        for c in cases {
            if sel.entry.as_ref().is_some_and(|e| e.name != c.entry) {
                continue;
            }
            out.push((|| {
                let e = catalog::entry(c.entry)?;
                let mut p = e.params(&c.base)?;
                p.extend(sel.params.iter().cloned());
                (c.check)(&e, &p)
            })());
        }
        if sel.entry.is_none() {
            out.extend(free.iter().map(|f| f()));
        }
    }
    if out.is_empty() {
        let name = sel.entry.as_ref().map_or("", |e| e.name);
        return Err(Error::Capability(format!("suite {suite:?} has no checks for entry '{name}'").to_lowercase()));
    }
    Ok(out)
}

fn build(suite: Suite, mc: McSpec) -> (Vec<Case>, Vec<Free>) {
    let mut cases = Vec::new();
    let mut free: Vec<Free> = Vec::new();
    match suite {
        Suite::Riccati => {
            for e in catalog::catalog() {
                cases.push(case(e.name, &[], check_riccati));
            }
        }
        Suite::Transform => transform(&mut cases, &mut free),
        Suite::Pde => pde(&mut cases, &mut free),
        Suite::Limits => {
            let ys = [0.3, 1.0, 2.5];
            let fine = [1e-2, 1e-3, 1e-4, 1e-5, 1e-6];
            let lin = LimitVariable::Linear;
            let limits: [(&str, &[(&str, f64)], &str, &[f64], LimitVariable, &str, &[(&str, f64)]); 7] = [
                ("bessel", &[("mu", 0.1)], "mu", &LIMIT_SEQUENCE, lin, "bessel", &[("mu", 0.0)]),
                ("pitman-yor", &[("a", 0.5)], "b", &LIMIT_SEQUENCE, lin, "bessel", &[("a", 1.0), ("mu", 0.0)]),
                ("rational-drift", &[("nu", 0.1)], "nu", &LIMIT_SEQUENCE, lin, "rational-drift", &[]),
                ("rational-drift", &[("mu", 0.1)], "mu", &fine, LimitVariable::Sqrt, "rational-drift", &[]),
                ("tanh-drift", &[("mu", 0.1)], "mu", &LIMIT_SEQUENCE, lin, "tanh-drift", &[]),
                ("radial-ou", &[("mu", 0.1)], "mu", &LIMIT_SEQUENCE, lin, "radial-ou", &[]),
                ("besq", &[("b", 0.1), ("mu", 0.3)], "b", &LIMIT_SEQUENCE, lin, "besq", &[("mu", 0.3)]),
            ];
            for (n, base, param, seq, var, target, tp) in limits {
                let seq = seq.to_vec();
                let tp: Vec<(&'static str, f64)> = tp.to_vec();
                cases.push(case(n, base, move |e, p| {
                    let tgt = catalog::entry(target)?.with(&tp)?;
                    check_limit_reduction(e, p, param, &seq, var, tgt.as_ref(), 1.0, 1.0, &ys)
                }));
            }
        }
        Suite::Mc => {
            let runs: [(&str, &[(&str, f64)], Scheme, f64); 4] = [
                ("besq", &[("n", 2.0), ("b", 1.0)], Scheme::ExactBesq, 0.0),
                ("cir", &[("mu", 0.3)], Scheme::EulerFullTruncation, 0.5),
                ("bessel", &[("a", 1.0), ("mu", 1.0)], Scheme::EulerFullTruncation, 0.5),
                ("radial-ou", &[("mu", 0.3)], Scheme::EulerFullTruncation, 0.5),
            ];
            for (n, base, scheme, lambda) in runs {
                let spec = McSpec { scheme, ..mc };
                cases.push(case(n, base, move |e, p| check_mc(e, p, lambda, 1.0, 1.0, &spec, 3.0)));
            }
        }
        Suite::Chapman => {
            for n in ["besq", "bessel", "pitman-yor", "cir", "radial-ou"] {
                cases.push(case(n, &[], |e, p| {
                    let xs = [0.5, 1.0, 2.0];
                    check_chapman_kolmogorov(e, p, &[(0.5, 0.5), (0.25, 1.0)], &xs, &xs)
                }));
            }
        }
        Suite::Whittaker => {
            for (kappa, t, x) in [(0.0, 0.5, 1.0), (-3.0 / 16.0, 0.5, 1.0), (-2.0 / 9.0, 0.4, 1.5)] {
                cases.push(case("generic-apos", &[("kappa", kappa)], move |_, p| {
                    let g = |k: &str| p[k];
                    check_whittaker(g("a"), g("b"), g("sigma"), g("mu"), g("kappa"), t, x, &[0.5, 1.0, 2.0, 4.0, 8.0])
                }));
            }
        }
        Suite::Altrep => {
            free.push(Box::new(|| check_alt_representation(1.0, 1.0, 0.5, 1.0, 1.0)));
            free.push(Box::new(|| check_alt_representation(0.5, 2.0, 0.2, 0.5, 1.5)));
            free.push(Box::new(|| {
                check_hartman_watson(3.0, 0.7, &[(1.0, 1.0, 1.0), (0.5, 2.0, 0.3), (2.0, 0.4, 3.0)])
            }));
            free.push(Box::new(|| check_hartman_watson(2.5, 2.0, &[(1.0, 1.0, 1.0), (0.3, 0.7, 2.2)])));
        }
        Suite::All => unreachable!(),
    }
    (cases, free)
}

// Transform identities, expectations, mass and Laplace inversion.
fn transform(cases: &mut Vec<Case>, free: &mut Vec<Free>) {
    let sets: [(&str, &[(&str, f64)]); 8] = [
        ("besq", &[("n", 3.0)]),
        ("besq", &[("n", 2.0), ("mu", 0.4)]),
        ("bessel", &[("a", 1.0), ("mu", 1.0)]),
        ("pitman-yor", &[("mu", 0.5), ("a", 1.0), ("b", 1.0)]),
        ("rational-drift", &[("mu", 0.5)]),
        ("showcase", &[]),
        ("sqrt-drift", &[]),
        ("generic-a0", &[]),
    ];
    for (n, base) in sets {
        for t in [0.25, 1.0] {
            for x in [0.5, 1.0, 2.0] {
                cases.push(case(n, base, move |e, p| check_transform_identity(e, p, &[0.1, 0.5, 1.0, 2.0, 5.0], t, x)));
            }
        }
    }

    let expect: [(&str, &[(&str, f64)]); 8] = [
        ("bessel", &[("a", 1.0), ("mu", 1.0)]),
        ("besq", &[("n", 2.0), ("b", 1.0)]),
        ("besq", &[("n", 3.0), ("b", 0.5), ("mu", 0.5)]),
        ("cir", &[("mu", 0.3), ("kappa", 0.4)]),
        ("rational-drift", &[("mu", 0.5)]),
        ("radial-ou", &[("mu", 0.3)]),
        ("tanh-drift", &[("mu", 0.5)]),
        ("sqrt-drift", &[]),
    ];
    for (n, base) in expect {
        cases.push(case(n, base, |e, p| {
            let mut grid = Vec::new();
            for l in [0.1, 1.0, 3.0] {
                for t in [0.25, 0.5, 1.0] {
                    for x in [0.5, 1.0, 2.0] {
                        grid.push((l, t, x));
                    }
                }
            }
            check_expectation(e, p, &grid)
        }));
    }

    let tx = [(0.25, 0.5), (1.0, 1.0), (2.5, 3.0)];
    for e in catalog::catalog() {
        let base: Vec<(&str, f64)> =
            ["mu", "kappa"].into_iter().filter(|k| e.has_parameter(k)).map(|k| (k, 0.0)).collect();
        let conserves = e.with(&base).is_ok_and(|m| m.conserves_mass());
        if conserves {
            cases.push(case(e.name, &base, move |e, p| check_mass(e, p, &tx)));
        }
    }
    free.push(Box::new(move || check_cosh_mass(&tx)));
    free.push(Box::new(move || check_showcase_mass(1.0, 2.0, &tx)));

    cases.push(case("besq", &[("n", 3.0)], |e, p| {
        check_laplace_inversion(e, p, 1.0, 1.0, &[0.2, 0.5, 1.0, 2.0, 3.5, 5.0])
    }));
}

fn pde(cases: &mut Vec<Case>, free: &mut Vec<Free>) {
    let mut sets: Vec<(&'static str, Vec<(&'static str, f64)>)> =
        catalog::catalog().into_iter().map(|e| (e.name, vec![])).collect();
    sets.push(("rational-drift", vec![("mu", 0.5)]));
    sets.push(("cir", vec![("mu", 0.3), ("kappa", 0.4)]));
    sets.push(("tanh-drift", vec![("mu", 0.5)]));
    for (n, base) in sets {
        cases.push(case(n, &base, |e, p| check_density_pde(e, p, &[(0.5, 1.0, 1.3), (1.0, 0.7, 2.0)])));
        let closed =
            catalog::entry(n).and_then(|e| e.with(&base)).is_ok_and(|m| m.expectation_closed(0.5, 1.0, 1.0).is_some());
        if closed {
            cases.push(case(n, &base, |e, p| {
                let m = e.instantiate(p)?;
                let u = |x: f64, t: f64| expectation(m.as_ref(), 0.5, t, x).unwrap_or(f64::NAN);
                check_pde_order(
                    format!("pde:expectation:{}", e.name),
                    &u,
                    &m.diffusion(),
                    &m.potential(),
                    &[(1.0, 0.7), (2.0, 0.4)],
                )
            }));
        }
    }

    free.push(Box::new(|| {
        let besq3 = DiffusionSpec::new("besq3", 1.0, 2.0, |_| 3.0, |x: f64| 3.0 * x.ln()).with_derivative(|_| 0.0);
        let sym = laplace_symmetry(&besq3, &StationarySolution::constant_one(), 0.0)?;
        let u = sym.at(0.3);
        check_pde_order("pde:laplace-symmetry:besq3", &u, &besq3, &PotentialSpec::zero(), &[(1.0, 0.5), (2.0, 1.0)])
    }));
    free.push(Box::new(|| {
        let b = catalog::entry("bessel")?.with(&[("a", 1.0), ("mu", 1.0)])?;
        let u0 = stationary_solution(&b.diffusion(), &b.potential(), Branch::Default)?;
        let sym = laplace_symmetry(&b.diffusion(), &u0, 0.0)?;
        let u = sym.at(0.3);
        check_pde_order("pde:laplace-symmetry:bessel", &u, &b.diffusion(), &b.potential(), &[(1.0, 0.5), (2.0, 1.0)])
    }));
    free.push(Box::new(|| {
        let flat = DiffusionSpec::new("flat", 2.0, 1.0, |_| 0.0, |_| 0.0).with_derivative(|_| 0.0);
        let sym = log_gaussian_symmetry(&flat, &StationarySolution::constant_one(), 0.0)?;
        let u = sym.at(0.5);
        check_pde_order("pde:log-gaussian-symmetry", &u, &flat, &PotentialSpec::zero(), &[(2.0, 0.3), (0.5, 1.0)])
    }));
    free.push(Box::new(|| {
        let r = catalog::entry("rational-drift")?.with(&[("a", 2.0), ("mu", 0.5)])?;
        let u0 = stationary_solution(&r.diffusion(), &r.potential(), Branch::Second)?;
        let sym = exponential_symmetry(&r.diffusion(), &u0, &r.riccati())?;
        let u = sym.at(0.4);
        check_pde_order("pde:exponential-symmetry", &u, &r.diffusion(), &r.potential(), &[(1.0, 0.7), (0.5, 1.5)])
    }));
    for eps in [0.5, -1.0] {
        free.push(Box::new(move || {
            let c = catalog::entry("cir")?.with(&[("a", 2.0), ("b", 1.0), ("sigma", 1.0), ("kappa", 0.3)])?;
            let sym = tricomi_symmetry(&c.diffusion(), &c.riccati())?;
            let u = sym.at(eps);
            check_pde_order(
                format!("pde:tricomi-symmetry:eps={eps}"),
                &u,
                &c.diffusion(),
                &c.potential(),
                &[(1.0, 0.5), (2.0, 1.0)],
            )
        }));
    }
}
