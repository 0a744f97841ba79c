//! Parameter search for the bound families: a log-uniform grid pass with an
//! optional golden-section refinement around the best grid point.
//!
//! The one-parameter family is swept in `α`; the two-parameter family is
//! degree-0 homogeneous in `(α, β)`, so it is swept in the single ratio
//! `t = α/β` with `β` pinned to 1. The point `α = 1` (resp. `t = 1`) is
//! always evaluated, which makes the optimized bounds dominate the
//! equal-weight specialization by construction.

use serde::Serialize;

use crate::bounds::{lb1, lb1_permuted, lb2, song_bound, sum_variances, zhang_bound};
use crate::bounds::{BoundEvaluation, BoundFamily};
use crate::error::{Error, Result};
use crate::linalg::{DensityMatrix, ObservableSet};

/// Width of the golden-section bracket, in log2 parameter space, at which
/// refinement stops.
const REFINE_TOL: f64 = 1e-4;

/// Log-uniform search grid over base-2 exponents.
///
/// Grid points are `2^(min_exponent + j/points_per_octave)`. Refinement is a
/// golden-section pass in log-space around the best grid point; it assumes
/// local unimodality, so it is a heuristic improvement, not an optimality
/// guarantee — the grid pass protects against distant maxima.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GridSpec {
    pub min_exponent: i32,
    pub max_exponent: i32,
    pub points_per_octave: u32,
    pub refine: bool,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            min_exponent: -6,
            max_exponent: 6,
            points_per_octave: 20,
            refine: false,
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.min_exponent >= self.max_exponent {
            return Err(Error::InvalidGrid {
                reason: "min_exponent must be below max_exponent",
            });
        }
        if self.points_per_octave < 1 {
            return Err(Error::InvalidGrid {
                reason: "points_per_octave must be at least 1",
            });
        }
        Ok(())
    }

    /// Grid points in ascending order.
    pub fn points(&self) -> Vec<f64> {
        let ppo = self.points_per_octave as i64;
        let lo = self.min_exponent as i64 * ppo;
        let hi = self.max_exponent as i64 * ppo;
        (lo..=hi).map(|j| (j as f64 / ppo as f64).exp2()).collect()
    }
}

/// Outcome of a grid (plus optional refinement) search.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimizationResult {
    pub best: BoundEvaluation,
    pub evaluations: usize,
    pub grid: GridSpec,
}

/// Grid-then-golden-section maximization of `eval_at` over the parameter.
/// Ties break toward the smaller parameter value.
fn optimize_scalar<F>(grid: &GridSpec, eval_at: F) -> Result<OptimizationResult>
where
    F: Fn(f64) -> Result<BoundEvaluation>,
{
    grid.validate()?;
    let mut points = grid.points();
    if !points.contains(&1.0) {
        let pos = points.partition_point(|&p| p < 1.0);
        points.insert(pos, 1.0);
    }

    let mut evaluations = 0usize;
    let mut best: Option<(f64, BoundEvaluation)> = None;
    let mut best_index = 0usize;
    for (idx, &p) in points.iter().enumerate() {
        let eval = eval_at(p)?;
        evaluations += 1;
        if best.as_ref().is_none_or(|(b, _)| eval.value > *b) {
            best = Some((eval.value, eval));
            best_index = idx;
        }
    }
    let (mut best_value, mut best_eval) = best.expect("grid is non-empty");

    if grid.refine {
        let mut lo = points[best_index.saturating_sub(1)].log2();
        let mut hi = points[(best_index + 1).min(points.len() - 1)].log2();
        let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
        let mut c = hi - inv_phi * (hi - lo);
        let mut d = lo + inv_phi * (hi - lo);
        let mut consider = |e: f64, evaluations: &mut usize| -> Result<f64> {
            let eval = eval_at(e.exp2())?;
            *evaluations += 1;
            if eval.value > best_value {
                best_value = eval.value;
                best_eval = eval.clone();
            }
            Ok(eval.value)
        };
        let mut fc = consider(c, &mut evaluations)?;
        let mut fd = consider(d, &mut evaluations)?;
        while hi - lo > REFINE_TOL {
            if fc > fd {
                hi = d;
                d = c;
                fd = fc;
                c = hi - inv_phi * (hi - lo);
                fc = consider(c, &mut evaluations)?;
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + inv_phi * (hi - lo);
                fd = consider(d, &mut evaluations)?;
            }
        }
    }

    Ok(OptimizationResult {
        best: best_eval,
        evaluations,
        grid: *grid,
    })
}

/// Maximizes the one-parameter bound over `α` on the grid.
pub fn optimize_lb1(
    rho: &DensityMatrix,
    set: &ObservableSet,
    grid: &GridSpec,
) -> Result<OptimizationResult> {
    optimize_scalar(grid, |alpha| lb1(rho, set, alpha))
}

/// Maximizes the permutation-maximized one-parameter bound over `α`.
pub fn optimize_lb1_permuted(
    rho: &DensityMatrix,
    set: &ObservableSet,
    grid: &GridSpec,
) -> Result<OptimizationResult> {
    optimize_scalar(grid, |alpha| lb1_permuted(rho, set, alpha))
}

/// Maximizes the two-parameter bound over the ratio `t = α/β` with `β = 1`.
/// This reduction is exact: `X`, `Y`, `Z` are invariant under
/// `(α, β) → (cα, cβ)`.
pub fn optimize_lb2(
    rho: &DensityMatrix,
    set: &ObservableSet,
    grid: &GridSpec,
) -> Result<OptimizationResult> {
    optimize_scalar(grid, |t| lb2(rho, set, t, 1.0))
}

/// Evaluates every bound family on one (state, observable set) instance.
///
/// Output order is fixed: variance sum, Song, Zhang, optimized one-parameter
/// bound, optimized two-parameter bound, and optionally the optimized
/// permutation bound.
pub fn compare_report(
    rho: &DensityMatrix,
    set: &ObservableSet,
    grid: &GridSpec,
    include_permutations: bool,
) -> Result<Vec<BoundEvaluation>> {
    let sum = BoundEvaluation::new(BoundFamily::VarianceSum, sum_variances(rho, set)?);
    let mut report = vec![
        sum,
        song_bound(rho, set)?,
        zhang_bound(rho, set)?,
        optimize_lb1(rho, set, grid)?.best,
        optimize_lb2(rho, set, grid)?.best,
    ];
    if include_permutations {
        report.push(optimize_lb1_permuted(rho, set, grid)?.best);
    }
    Ok(report)
}
