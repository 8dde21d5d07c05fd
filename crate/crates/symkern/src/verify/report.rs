use std::io::Write;

use serde::Serialize;

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub grid_point: String,
    pub reference: f64,
    pub computed: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub standard_error: Option<f64>,
    pub pass: bool,
    #[serde(skip)]
    rule: Rule,
}

// How a row's pass flag depends on the report tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Rule {
    Relative,
    Absolute,
    StandardErrors,
    Fixed,
}

/// Outcome of one identity check over a grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    /// What the reference column is computed from.
    pub oracle: String,
    pub tolerance: f64,
    pub rows: Vec<ReportRow>,
    pub max_abs_err: f64,
    pub max_rel_err: f64,
    pub pass: bool,
    /// Set when the evidence neither confirms nor refutes the identity.
    pub inconclusive: bool,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>, oracle: impl Into<String>, tolerance: f64) -> Self {
        VerificationReport {
            identity: identity.into(),
            oracle: oracle.into(),
            tolerance,
            rows: Vec::new(),
            max_abs_err: 0.0,
            max_rel_err: 0.0,
            pass: false,
            inconclusive: false,
            notes: Vec::new(),
        }
    }

    /// Row passing iff the relative error is within the tolerance.
    pub fn relative(&mut self, point: impl Into<String>, reference: f64, computed: f64) {
        let rel = rel_err(reference, computed);
        self.push(point.into(), reference, computed, None, rel <= self.tolerance, Rule::Relative);
    }

    /// Row passing iff |computed - reference| <= tolerance.
    pub fn absolute(&mut self, point: impl Into<String>, reference: f64, computed: f64) {
        let ok = (computed - reference).abs() <= self.tolerance;
        self.push(point.into(), reference, computed, None, ok, Rule::Absolute);
    }

    /// Monte Carlo row: passes iff the estimate is within `tolerance` standard errors.
    pub fn within_standard_errors(&mut self, point: impl Into<String>, reference: f64, estimate: f64, se: f64) {
        let ok = (estimate - reference).abs() <= self.tolerance * se;
        self.push(point.into(), reference, estimate, Some(se), ok, Rule::StandardErrors);
    }

    /// Row with an externally decided pass flag.
    pub fn record(&mut self, point: impl Into<String>, reference: f64, computed: f64, pass: bool) {
        self.push(point.into(), reference, computed, None, pass, Rule::Fixed);
    }

    /// A grid point whose computation failed.
    pub fn failure(&mut self, point: impl Into<String>, reference: f64, err: &Error) {
        let point = point.into();
        self.notes.push(format!("{point}: {err}"));
        self.push(point, reference, f64::NAN, None, false, Rule::Fixed);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// The same rows judged against another tolerance; externally decided rows keep their flag.
    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        for row in &mut self.rows {
            row.pass = match row.rule {
                Rule::Relative => row.rel_err <= tolerance,
                Rule::Absolute => row.abs_err <= tolerance,
                Rule::StandardErrors => row.abs_err <= tolerance * row.standard_error.unwrap_or(0.0),
                Rule::Fixed => row.pass,
            };
        }
        self.pass = !self.rows.is_empty() && self.rows.iter().all(|r| r.pass);
        self
    }

    fn push(
        &mut self,
        grid_point: String,
        reference: f64,
        computed: f64,
        standard_error: Option<f64>,
        pass: bool,
        rule: Rule,
    ) {
        let abs_err = (computed - reference).abs();
        let rel = rel_err(reference, computed);
        self.max_abs_err = self.max_abs_err.max(abs_err);
        self.max_rel_err = self.max_rel_err.max(rel);
        if abs_err.is_nan() {
            self.max_abs_err = f64::NAN;
            self.max_rel_err = f64::NAN;
        }
        self.pass = if self.rows.is_empty() { pass } else { self.pass && pass };
        self.rows.push(ReportRow {
            grid_point,
            reference,
            computed,
            abs_err,
            rel_err: rel,
            standard_error,
            pass,
            rule,
        });
    }

    pub fn passed_rows(&self) -> usize {
        self.rows.iter().filter(|r| r.pass).count()
    }

    /// One line: identity, verdict and worst errors.
    pub fn summary(&self) -> String {
        let verdict = match (self.pass, self.inconclusive) {
            (true, _) => "PASS",
            (false, true) => "INCONCLUSIVE",
            (false, false) => "FAIL",
        };
        format!(
            "{verdict} {} ({}/{} rows, max rel err {}, tol {})",
            self.identity,
            self.passed_rows(),
            self.rows.len(),
            fmt15(self.max_rel_err),
            fmt15(self.tolerance)
        )
    }
}

fn rel_err(reference: f64, computed: f64) -> f64 {
    let d = (computed - reference).abs();
    if reference == 0.0 {
        d
    } else {
        d / reference.abs()
    }
}

/// Shortest decimal form with at most 15 significant digits.
pub fn fmt15(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    if v == 0.0 {
        return "0".into();
    }
    let s = format!("{v:.14e}");
    let (mant, exp) = s.split_once('e').unwrap_or((&s, "0"));
    let exp: i32 = exp.parse().unwrap_or(0);
    let mant = mant.trim_end_matches('0').trim_end_matches('.');
    if (-5..15).contains(&exp) {
        // reparse the rounded value so fixed notation carries the same 15 digits
        let r: f64 = format!("{mant}e{exp}").parse().unwrap_or(v);
        let decimals = (14 - exp).max(0) as usize;
        let f = format!("{r:.decimals$}");
        if f.contains('.') {
            f.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            f
        }
    } else {
        format!("{mant}e{exp}")
    }
}

/// CSV with columns identity, grid_point, reference, computed, abs_err, rel_err, pass.
pub fn write_csv<W: Write>(reports: &[VerificationReport], w: W) -> std::result::Result<(), csv::Error> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["identity", "grid_point", "reference", "computed", "abs_err", "rel_err", "pass"])?;
    for r in reports {
        for row in &r.rows {
            out.write_record([
                r.identity.as_str(),
                row.grid_point.as_str(),
                &fmt15(row.reference),
                &fmt15(row.computed),
                &fmt15(row.abs_err),
                &fmt15(row.rel_err),
                if row.pass { "true" } else { "false" },
            ])?;
        }
    }
    out.flush()?;
    Ok(())
}
