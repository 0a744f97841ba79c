//! Sweep and audit drivers behind the command-line interface: parameter
//! sweeps over the worked example families written as CSV (with a JSON
//! manifest sidecar), and random-ensemble validity audits written as JSON.
//!
//! All file output is byte-stable for identical inputs: fixed column order,
//! fixed 12-significant-digit float formatting and no timestamps.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{lb1, PERM_MAX};
use crate::catalog::{random_instance, ExampleFamily, ExampleSpec};
use crate::error::{Error, Result};
use crate::optimize::{compare_report, GridSpec};

/// A bound may exceed the variance sum by at most this much before it is
/// counted as a violation.
pub const VALIDITY_SLACK: f64 = 1e-9;

/// Formats a float with 12 significant digits, locale-independent.
pub fn format_sig12(value: f64) -> String {
    format!("{value:.11e}")
}

/// One sweep sample: state parameters plus every reported bound value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub theta: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<f64>,
    pub sum: f64,
    pub song: f64,
    pub zhang: f64,
    pub lb1_opt: f64,
    pub lb1_alpha: f64,
    pub lb2_opt: f64,
    pub lb2_t: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lb1_fixed: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lb1_pi_opt: Option<f64>,
}

/// Sweep request: which family, which θ samples, and which extras to report.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub family: ExampleFamily,
    pub theta_min: f64,
    pub theta_max: f64,
    pub steps: usize,
    /// Second angle for the spin-1 family (default π/2).
    pub phi: Option<f64>,
    /// Also report the one-parameter bound at this fixed weight.
    pub alpha_fixed: Option<f64>,
    pub include_permutations: bool,
}

impl SweepSpec {
    /// Sweep over the family's conventional θ range.
    pub fn over_default_range(family: ExampleFamily, steps: usize) -> Self {
        let (theta_min, theta_max) = family.default_theta_range();
        Self {
            family,
            theta_min,
            theta_max,
            steps,
            phi: None,
            alpha_fixed: None,
            include_permutations: false,
        }
    }
}

/// The computed sweep table.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub spec: SweepSpec,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    /// CSV header matching [`SweepResult::csv_rows`].
    pub fn csv_header(&self) -> String {
        let mut columns = vec!["theta"];
        if self.spec.family.uses_phi() {
            columns.push("phi");
        }
        columns.extend([
            "sum",
            "song",
            "zhang",
            "lb1_opt",
            "lb1_alpha",
            "lb2_opt",
            "lb2_t",
        ]);
        if self.spec.alpha_fixed.is_some() {
            columns.push("lb1_fixed");
        }
        if self.spec.include_permutations {
            columns.push("lb1_pi_opt");
        }
        columns.join(",")
    }

    fn csv_row(&self, row: &SweepRow) -> String {
        let mut fields = vec![format_sig12(row.theta)];
        if let Some(phi) = row.phi {
            fields.push(format_sig12(phi));
        }
        fields.extend(
            [
                row.sum,
                row.song,
                row.zhang,
                row.lb1_opt,
                row.lb1_alpha,
                row.lb2_opt,
                row.lb2_t,
            ]
            .map(format_sig12),
        );
        if let Some(v) = row.lb1_fixed {
            fields.push(format_sig12(v));
        }
        if let Some(v) = row.lb1_pi_opt {
            fields.push(format_sig12(v));
        }
        fields.join(",")
    }
}

/// Sidecar manifest describing how a sweep CSV was produced.
#[derive(Debug, Clone, Serialize)]
struct SweepManifest {
    example: u8,
    theta_min: f64,
    theta_max: f64,
    steps: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    phi: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha_fixed: Option<f64>,
    include_permutations: bool,
    grid_min_exponent: i32,
    grid_max_exponent: i32,
    grid_points_per_octave: u32,
    grid_refine: bool,
    version: &'static str,
}

/// Path of the manifest written next to a sweep CSV.
pub fn manifest_path(output: &Path) -> PathBuf {
    PathBuf::from(format!("{}.manifest.json", output.display()))
}

/// Runs a sweep and writes the CSV plus its JSON manifest.
///
/// Rows are emitted in parameter order regardless of evaluation order.
pub fn run_sweep(spec: &SweepSpec, grid: &GridSpec, output: &Path) -> Result<SweepResult> {
    if spec.steps < 2 {
        return Err(Error::InvalidGrid {
            reason: "sweep needs at least 2 steps",
        });
    }
    grid.validate()?;
    let set = ExampleSpec {
        family: spec.family,
        theta: spec.theta_min,
        phi: spec.phi,
    }
    .observables();
    let phi = spec
        .family
        .uses_phi()
        .then(|| spec.phi.unwrap_or(std::f64::consts::FRAC_PI_2));

    let step = (spec.theta_max - spec.theta_min) / (spec.steps - 1) as f64;
    let rows: Vec<SweepRow> = (0..spec.steps)
        .into_par_iter()
        .map(|i| -> Result<SweepRow> {
            let theta = spec.theta_min + step * i as f64;
            let point = ExampleSpec {
                family: spec.family,
                theta,
                phi,
            };
            let rho = point.state()?;
            let report = compare_report(&rho, &set, grid, spec.include_permutations)?;
            let lb1_fixed = match spec.alpha_fixed {
                Some(alpha) => Some(lb1(&rho, &set, alpha)?.value),
                None => None,
            };
            Ok(SweepRow {
                theta,
                phi,
                sum: report[0].value,
                song: report[1].value,
                zhang: report[2].value,
                lb1_opt: report[3].value,
                lb1_alpha: report[3].alpha.expect("optimized bound records alpha"),
                lb2_opt: report[4].value,
                lb2_t: report[4].alpha.expect("optimized bound records ratio"),
                lb1_fixed,
                lb1_pi_opt: report.get(5).map(|e| e.value),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let result = SweepResult {
        spec: spec.clone(),
        rows,
    };

    let mut csv = BufWriter::new(File::create(output)?);
    writeln!(csv, "{}", result.csv_header())?;
    for row in &result.rows {
        writeln!(csv, "{}", result.csv_row(row))?;
    }
    csv.flush()?;

    let manifest = SweepManifest {
        example: spec.family.id(),
        theta_min: spec.theta_min,
        theta_max: spec.theta_max,
        steps: spec.steps,
        phi,
        alpha_fixed: spec.alpha_fixed,
        include_permutations: spec.include_permutations,
        grid_min_exponent: grid.min_exponent,
        grid_max_exponent: grid.max_exponent,
        grid_points_per_octave: grid.points_per_octave,
        grid_refine: grid.refine,
        version: env!("CARGO_PKG_VERSION"),
    };
    let mut out = BufWriter::new(File::create(manifest_path(output))?);
    serde_json::to_writer_pretty(&mut out, &manifest).map_err(std::io::Error::from)?;
    writeln!(out)?;
    out.flush()?;

    Ok(result)
}

/// Audit request over seeded random instances.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditConfig {
    pub dims: Vec<usize>,
    pub n_obs: Vec<usize>,
    pub trials: u64,
    pub seed: u64,
    pub grid: GridSpec,
}

/// Outcome of a validity audit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub trials: u64,
    /// Trials in which some bound exceeded the variance sum by more than
    /// [`VALIDITY_SLACK`].
    pub violations: u64,
    /// Minimum of `sum − bound` across all trials and families.
    pub worst_margin: f64,
    pub seed: u64,
}

/// Draws `trials` random instances, evaluates every bound family on each,
/// and records violations of `bound ≤ sum + slack`. The report is also
/// written to `output` as JSON.
///
/// Trial `t` uses instance seed `seed + t` and cycles deterministically
/// through the (dim, n_obs) grid.
pub fn run_audit(config: &AuditConfig, output: &Path) -> Result<AuditReport> {
    config.grid.validate()?;
    if config.dims.is_empty() || config.n_obs.is_empty() || config.trials == 0 {
        return Err(Error::InvalidGrid {
            reason: "audit needs at least one dim, one n_obs and one trial",
        });
    }

    let outcomes: Vec<(bool, f64)> = (0..config.trials)
        .into_par_iter()
        .map(|t| -> Result<(bool, f64)> {
            let combo = (t as usize) % (config.dims.len() * config.n_obs.len());
            let dim = config.dims[combo % config.dims.len()];
            let n = config.n_obs[combo / config.dims.len()];
            let (rho, set) = random_instance(dim, n, config.seed.wrapping_add(t))?;
            let report = compare_report(&rho, &set, &config.grid, n <= PERM_MAX)?;
            let sum = report[0].value;
            let mut margin = f64::INFINITY;
            for eval in &report[1..] {
                margin = margin.min(sum - eval.value);
            }
            Ok((margin < -VALIDITY_SLACK, margin))
        })
        .collect::<Result<Vec<_>>>()?;

    let violations = outcomes.iter().filter(|(bad, _)| *bad).count() as u64;
    let worst_margin = outcomes
        .iter()
        .map(|&(_, m)| m)
        .fold(f64::INFINITY, f64::min);
    let report = AuditReport {
        trials: config.trials,
        violations,
        worst_margin,
        seed: config.seed,
    };

    let mut out = BufWriter::new(File::create(output)?);
    serde_json::to_writer_pretty(&mut out, &report).map_err(std::io::Error::from)?;
    writeln!(out)?;
    out.flush()?;

    Ok(report)
}
