//! Numerical checks of the invariants of discrete confocal nets.
//!
//! Every check returns a [`CheckReport`] (never panics on odd input): the
//! largest normalized residual, where it occurred, how many relations were
//! evaluated and how many were skipped (absent points, zero-length edges,
//! poles). `passed` is `max_residual ≤ tolerance`.

mod circles;
mod core_checks;
mod ic;

pub use circles::check_circle_relations;
pub use core_checks::{
    check_continuous_orthogonality, check_epd, check_factorization, check_orthogonality,
    check_planarity, check_polarity,
};
pub use ic::{check_diagonal_lines, check_incircles, check_tangency, diagonal_lines, Diagonal, LineFit};

use crate::error::{Error, Result};
use crate::family::ConfocalFamily;
use crate::lattice::{DiscreteNet, NetIndex, USequences};
use crate::param::Model;
use serde::{Deserialize, Serialize};

/// Default relative tolerance of the command-line driver.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub max_residual: f64,
    pub worst_site: Option<NetIndex>,
    pub count: usize,
    pub skipped: usize,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckReport {
    /// One-line text summary.
    pub fn line(&self) -> String {
        let worst = self
            .worst_site
            .as_ref()
            .map(|w| format!(" at {w}"))
            .unwrap_or_default();
        format!(
            "{} {:<22} max {:.3e} (tol {:.0e}){worst}, {} checked, {} skipped",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.max_residual,
            self.tolerance,
            self.count,
            self.skipped
        )
    }
}

/// Text summary of several reports, one line each.
pub fn summary(reports: &[CheckReport]) -> String {
    reports.iter().map(|r| r.line() + "\n").collect()
}

/// Machine-readable form: a JSON array with one object per check.
pub fn reports_to_json(reports: &[CheckReport]) -> String {
    // non-finite residuals become null
    serde_json::to_string_pretty(reports).unwrap_or_else(|_| "[]".into())
}

/// Max-reduction of residuals with the site of the worst one.
#[derive(Debug)]
pub(crate) struct Acc {
    name: String,
    max: f64,
    worst: Option<NetIndex>,
    count: usize,
    skipped: usize,
}

impl Acc {
    pub(crate) fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            max: 0.0,
            worst: None,
            count: 0,
            skipped: 0,
        }
    }

    pub(crate) fn add(&mut self, r: f64, site: &NetIndex) {
        let r = if r.is_nan() { f64::INFINITY } else { r.abs() };
        self.count += 1;
        if r > self.max || self.worst.is_none() {
            self.max = r;
            self.worst = Some(site.clone());
        }
    }

    pub(crate) fn skip(&mut self) {
        self.skipped += 1;
    }

    pub(crate) fn finish(self, tol: f64) -> CheckReport {
        CheckReport {
            passed: self.max <= tol,
            name: self.name,
            max_residual: self.max,
            worst_site: self.worst,
            count: self.count,
            skipped: self.skipped,
            tolerance: tol,
        }
    }
}

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Names accepted by [`run_check`].
pub const CHECK_NAMES: [&str; 9] = [
    "orthogonality",
    "planarity",
    "polarity",
    "factorization",
    "epd",
    "diagonals",
    "tangency",
    "incircles",
    "circles",
];

/// The checks meaningful for a net of the given model (all kinds share the
/// first five; the geometric extras depend on the kind).
pub fn applicable_checks(model: Option<&Model>, dim: usize) -> Vec<&'static str> {
    let mut v = vec!["orthogonality"];
    if dim >= 3 {
        v.push("planarity");
    }
    v.extend(["polarity", "factorization", "epd"]);
    match model {
        Some(Model::EllipticIc(_)) | Some(Model::HyperbolicIc(_)) => {
            v.extend(["diagonals", "tangency", "incircles"])
        }
        Some(Model::Pencil(_)) | Some(Model::Concentric(_)) => v.push("circles"),
        _ => {}
    }
    v
}

/// Everything a check may need.
pub struct CheckInput<'a> {
    pub net: &'a DiscreteNet,
    pub family: &'a ConfocalFamily,
    pub useqs: &'a USequences,
    pub model: Option<&'a Model>,
}

/// Run one named check; some names expand to several reports.
pub fn run_check(name: &str, input: &CheckInput, tol: f64) -> Result<Vec<CheckReport>> {
    let CheckInput {
        net,
        family,
        useqs,
        model,
    } = *input;
    let need_model = || {
        model.ok_or_else(|| Error::Usage(format!("check '{name}' needs the parametrization kind")))
    };
    Ok(match name {
        "orthogonality" => vec![check_orthogonality(net, tol)],
        "planarity" => vec![check_planarity(net, tol)],
        "polarity" => vec![check_polarity(net, family, useqs, tol)],
        "factorization" => vec![check_factorization(net, tol)],
        "epd" => vec![check_epd(net, useqs, tol)],
        "diagonals" => vec![
            check_diagonal_lines(net, Diagonal::Sum, tol),
            check_diagonal_lines(net, Diagonal::Difference, tol),
        ],
        "tangency" => {
            let conic = match need_model()? {
                Model::EllipticIc(p) => p.tangent_conic(),
                Model::HyperbolicIc(p) => p.tangent_conic(),
                _ => return Err(Error::Usage("tangency needs an IC-type net".into())),
            };
            vec![check_tangency(net, &conic, tol)]
        }
        "incircles" => {
            let map = match need_model()? {
                Model::EllipticIc(p) => p.affine_map(),
                Model::HyperbolicIc(p) => p.affine_map(),
                _ => return Err(Error::Usage("incircles needs an IC-type net".into())),
            };
            let (a, b) = check_incircles(net, map, tol);
            vec![a, b]
        }
        "circles" => check_circle_relations(net, family, useqs, need_model()?, tol)?,
        other => {
            return Err(Error::Usage(format!(
                "unknown check '{other}' (known: {})",
                CHECK_NAMES.join(", ")
            )))
        }
    })
}
