mod grid;
mod suites;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use symkern::catalog::{self, CatalogEntry, Params};
use symkern::verify::{fmt15, write_csv, McSpec, QuadratureSpec, Scheme};

use grid::Grid;
use suites::{Selection, Suite};

/// Transition densities and Feynman-Kac expectations for the symkern catalog.
///
/// Entry parameters are passed as `--<name> <value>` after `--entry`, e.g.
/// `symkern density --entry besq --n 3 --t 1 --x 1 --y 1`.
#[derive(Parser)]
#[command(name = "symkern", version)]
struct Cli {
    /// Print the catalog manifest as JSON and exit.
    #[arg(long)]
    manifest: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Kernel p(t, x, y) on a grid, with the boundary atoms in a trailer.
    Density {
        #[arg(long)]
        entry: String,
        #[arg(long)]
        t: Grid,
        #[arg(long)]
        x: Grid,
        #[arg(long, alias = "y-grid")]
        y: Grid,
        /// Also report the total mass (continuous part plus point masses) at each (t, x).
        #[arg(long)]
        check_mass: bool,
    },
    /// E_x[exp(-lambda X_t^p - int g)] on a grid.
    Expect {
        #[arg(long)]
        entry: String,
        #[arg(long)]
        t: Grid,
        #[arg(long)]
        x: Grid,
        #[arg(long, default_value = "0")]
        lambda: Grid,
        /// Sweep the killing coefficient mu instead of using --mu.
        #[arg(long)]
        mu_grid: Option<Grid>,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        entry: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        paths: usize,
        #[arg(long, default_value_t = 2000)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Replaces every report's own tolerance.
        #[arg(long, env = "SYMKERN_TOL")]
        tol: Option<f64>,
    },
}

enum Failure {
    Usage(anyhow::Error),
    Lib(symkern::Error),
}

impl From<symkern::Error> for Failure {
    fn from(e: symkern::Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.into())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.into())
    }
}

fn main() -> ExitCode {
    let raw: Vec<String> = std::env::args().collect();
    let (args, entry, params) = match split_entry_params(raw) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli, entry, params) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numerical() { 3 } else { 2 })
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

// Pulls `--<param> <value>` pairs for the selected entry out of argv, since
// the flags depend on the entry.
type Split = (Vec<String>, Option<CatalogEntry>, Vec<(String, f64)>);

fn split_entry_params(raw: Vec<String>) -> anyhow::Result<Split> {
    let mut name = None;
    for (i, a) in raw.iter().enumerate() {
        if a == "--entry" {
            name = raw.get(i + 1).cloned();
        } else if let Some(v) = a.strip_prefix("--entry=") {
            name = Some(v.to_string());
        }
    }
    let Some(name) = name else { return Ok((raw, None, Vec::new())) };
    let entry = catalog::entry(&name)?;
    let mut args = Vec::new();
    let mut params = Vec::new();
    let mut it = raw.into_iter();
    while let Some(a) = it.next() {
        let flag = a.strip_prefix("--").unwrap_or("");
        let (key, inline) = match flag.split_once('=') {
            Some((k, v)) => (k, Some(v.to_string())),
            None => (flag, None),
        };
        if !key.is_empty() && entry.has_parameter(key) {
            let v = match inline {
                Some(v) => v,
                None => it.next().with_context(|| format!("--{key} needs a value"))?,
            };
            let v: f64 = v.parse().with_context(|| format!("--{key}: '{v}' is not a number"))?;
            params.push((key.to_string(), v));
        } else {
            args.push(a);
        }
    }
    Ok((args, Some(entry), params))
}

fn entry_params(entry: &CatalogEntry, params: &[(String, f64)]) -> symkern::Result<Params> {
    let o: Vec<(&str, f64)> = params.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    entry.params(&o)
}

fn run(cli: Cli, entry: Option<CatalogEntry>, params: Vec<(String, f64)>) -> Result<u8, Failure> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if cli.manifest {
        serde_json::to_writer_pretty(&mut out, &catalog::manifest()).context("writing manifest")?;
        writeln!(out)?;
        return Ok(0);
    }
    let Some(command) = cli.command else {
        return Err(Failure::Usage(anyhow::anyhow!("no subcommand given; try --help")));
    };
    match command {
        Command::Density { t, x, y, check_mass, .. } => {
            let entry = entry.expect("--entry is required");
            let m = entry.instantiate(&entry_params(&entry, &params)?)?;
            let mut rows = Vec::new();
            let mut atoms = Vec::new();
            let mut masses = Vec::new();
            for &t in &t.0 {
                for &x in &x.0 {
                    // the density lives on y > 0; the boundary carries the atoms
                    for &y in y.0.iter().filter(|y| **y > 0.0) {
                        rows.push([t, x, y, m.density(t, x, y)?, m.log_density(t, x, y)?]);
                    }
                    for a in m.atoms(t, x)? {
                        atoms.push((t, x, a));
                    }
                    if check_mass {
                        masses.push([t, x, catalog::total_mass(m.as_ref(), t, x, &QuadratureSpec::default())?]);
                    }
                }
            }
            match cli.format {
                Format::Csv => {
                    table(&mut out, &["t", "x", "y", "density", "log_density"], &rows)?;
                    if !atoms.is_empty() {
                        writeln!(out, "\n# atoms")?;
                        let a: Vec<[f64; 5]> =
                            atoms.iter().map(|(t, x, a)| [*t, *x, a.location, a.order as f64, a.weight]).collect();
                        table(&mut out, &["t", "x", "location", "order", "weight"], &a)?;
                    }
                    if check_mass {
                        writeln!(out, "\n# mass")?;
                        table(&mut out, &["t", "x", "mass"], &masses)?;
                    }
                }
                Format::Json => {
                    let mut doc = json!({
                        "entry": entry.name,
                        "params": entry_params(&entry, &params)?,
                        "rows": rows.iter().map(|r| json!({"t": r[0], "x": r[1], "y": r[2], "density": r[3], "log_density": r[4]})).collect::<Vec<_>>(),
                        "atoms": atoms.iter().map(|(t, x, a)| json!({"t": t, "x": x, "location": a.location, "order": a.order, "weight": a.weight})).collect::<Vec<_>>(),
                    });
                    if check_mass {
                        doc["mass"] = masses.iter().map(|r| json!({"t": r[0], "x": r[1], "mass": r[2]})).collect();
                    }
                    json_out(&mut out, &doc)?;
                }
            }
            Ok(0)
        }
        Command::Expect { t, x, lambda, mu_grid, .. } => {
            let entry = entry.expect("--entry is required");
            let p = entry_params(&entry, &params)?;
            let mut rows = Vec::new();
            for &t in &t.0 {
                for &x in &x.0 {
                    for &l in &lambda.0 {
                        match &mu_grid {
                            Some(g) => {
                                for (mu, v) in catalog::joint_laplace_in_mu(&entry, &p, l, t, x, &g.0)? {
                                    rows.push([t, x, l, mu, v]);
                                }
                            }
                            None => {
                                let m = entry.instantiate(&p)?;
                                let mu = p.get("mu").copied().unwrap_or(f64::NAN);
                                rows.push([t, x, l, mu, catalog::expectation(m.as_ref(), l, t, x)?]);
                            }
                        }
                    }
                }
            }
            let cols = ["t", "x", "lambda", "mu", "expectation"];
            match cli.format {
                Format::Csv => table(&mut out, &cols, &rows)?,
                Format::Json => json_out(
                    &mut out,
                    &json!({
                        "entry": entry.name,
                        "params": entry_params(&entry, &params)?,
                        "rows": rows.iter().map(|r| json!({"t": r[0], "x": r[1], "lambda": r[2], "mu": null_nan(r[3]), "expectation": r[4]})).collect::<Vec<_>>(),
                    }),
                )?,
            }
            Ok(0)
        }
        Command::Verify { suite, paths, steps, seed, tol, .. } => {
            if let Some(e) = &entry {
                // rejects bad names before anything runs
                e.instantiate(&entry_params(e, &params)?)?;
            }
            if tol.is_some_and(|t| !(t > 0.0)) {
                return Err(Failure::Usage(anyhow::anyhow!("--tol must be positive")));
            }
            let sel = Selection {
                entry,
                params,
                mc: McSpec {
                    n_paths: paths,
                    n_steps: steps,
                    scheme: Scheme::EulerFullTruncation,
                    seed,
                    antithetic: false,
                },
            };
            let mut reports = Vec::new();
            let mut first_err: Option<symkern::Error> = None;
            for r in suites::run(suite, &sel)? {
                match r {
                    Ok(r) => reports.push(match tol {
                        Some(t) => r.with_tolerance(t),
                        None => r,
                    }),
                    Err(e) => {
                        eprintln!("error: {e}");
                        // a numerical failure outranks any other
                        if first_err.as_ref().is_none_or(|f| !f.is_numerical() && e.is_numerical()) {
                            first_err = Some(e);
                        }
                    }
                }
            }
            reports.sort_by(|a, b| a.identity.cmp(&b.identity));
            for r in &mut reports {
                r.rows.sort_by(|a, b| a.grid_point.cmp(&b.grid_point));
            }
            let passed = reports.iter().filter(|r| r.pass).count();
            let failed = reports.len() - passed;
            match cli.format {
                Format::Csv => write_csv(&reports, &mut out)?,
                Format::Json => json_out(&mut out, &json!({"reports": reports, "passed": passed, "failed": failed}))?,
            }
            for r in &reports {
                eprintln!("{}", r.summary());
            }
            eprintln!("{passed} passed, {failed} failed");
            Ok(match first_err {
                Some(e) if e.is_numerical() => 3,
                Some(_) => 2,
                None if failed > 0 => 1,
                None => 0,
            })
        }
    }
}

fn null_nan(v: f64) -> serde_json::Value {
    if v.is_nan() {
        serde_json::Value::Null
    } else {
        json!(v)
    }
}

fn table<W: Write, const N: usize>(w: &mut W, header: &[&str; N], rows: &[[f64; N]]) -> Result<(), Failure> {
    let mut c = csv::Writer::from_writer(&mut *w);
    c.write_record(header)?;
    for r in rows {
        c.write_record(r.iter().map(|v| fmt15(*v)))?;
    }
    c.flush()?;
    Ok(())
}

fn json_out<W: Write>(w: &mut W, v: &serde_json::Value) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *w, v).context("writing json")?;
    writeln!(w)?;
    Ok(())
}
