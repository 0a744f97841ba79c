//! Evaluators for the variance-based sum uncertainty lower bounds.
//!
//! Every family bounds `Σ_i Δ²_ρ(A_i)` from below:
//!
//! * [`song_bound`] — `(1/N)·Δ²(ΣA_i) + (2/(N²(N−1)))·[Σ_{i<j} Δ(A_i − A_j)]²`.
//! * [`zhang_bound`] — max over a sign index `x` of a squared-sum /
//!   sum-of-squares split on the pair combinations `A_i ± A_j`.
//! * [`lb1`] — one-parameter family: max over branches `(x, y) ∈ {0,1}²` of
//!   `{ (2/(N(N−1)))·[Σ_{i<j} Δ(α^{1−x}A_i + (−1)^y α^x A_j)]²
//!      + Σ_{i<j} Δ²(α^x A_i + (−1)^{1−y} α^{1−x} A_j) } / ((1+α²)(N−1))`
//!   for a weight `α ≥ 0`; `α = 1` reduces to [`zhang_bound`].
//! * [`lb1_permuted`] — [`lb1`] further maximized over all orderings of the
//!   observable tuple.
//! * [`thm2_bounds`] / [`lb2`] — two-parameter family `X`, `Y`, `Z` with
//!   weights `α, β > 0` (`Z` only for `β > α`), and their maximum.
//!
//! Pair combinations are always materialized as matrices before their
//! variance is taken; no polarization identities are used.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{DensityMatrix, ObservableSet};
use crate::variance::{combo_matrix, pair_combo, variance, variance_of_matrix};

/// Exhaustive permutation search is limited to `N ≤ PERM_MAX` (7! = 5040).
pub const PERM_MAX: usize = 7;

/// Identifies a bound family (or the variance-sum reference entry).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundFamily {
    /// `Σ_i Δ²_ρ(A_i)` itself, reported alongside the bounds for reference.
    VarianceSum,
    Song,
    Zhang,
    Lb1,
    Lb1Pi,
    Thm2X,
    Thm2Y,
    Thm2Z,
    Lb2,
}

/// Sign/exponent branch of the one-parameter family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BranchChoice {
    pub x: u8,
    pub y: u8,
}

/// Which member of the two-parameter family realized `LB2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Thm2Member {
    X,
    Y,
    Z,
}

/// One evaluated bound with the parameter choices that achieved it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEvaluation {
    pub family: BoundFamily,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<BranchChoice>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub member: Option<Thm2Member>,
}

impl BoundEvaluation {
    pub(crate) fn new(family: BoundFamily, value: f64) -> Self {
        Self {
            family,
            value,
            alpha: None,
            beta: None,
            branch: None,
            permutation: None,
            member: None,
        }
    }
}

fn check_dims(rho: &DensityMatrix, set: &ObservableSet) -> Result<()> {
    if rho.dim() != set.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            actual: set.dim(),
        });
    }
    Ok(())
}

/// `Σ_i Δ²_ρ(A_i)`, the quantity all families bound from below.
pub fn sum_variances(rho: &DensityMatrix, set: &ObservableSet) -> Result<f64> {
    check_dims(rho, set)?;
    let mut total = 0.0;
    for obs in set.members() {
        total += variance(rho, obs)?.value();
    }
    Ok(total)
}

/// `(1/N)·Δ²(Σ A_i) + (2/(N²(N−1)))·[Σ_{i<j} Δ(A_i − A_j)]²`.
pub fn song_bound(rho: &DensityMatrix, set: &ObservableSet) -> Result<BoundEvaluation> {
    check_dims(rho, set)?;
    let n = set.len();
    let nf = n as f64;
    let all: Vec<usize> = (0..n).collect();
    let ones = vec![1.0; n];
    let total = combo_matrix(&ones, set, &all)?;
    let var_total = variance_of_matrix(rho, &total)?;

    let mut sd_diff_sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let m = pair_combo(1.0, set.get(i)?, -1.0, set.get(j)?);
            sd_diff_sum += variance_of_matrix(rho, &m)?.sqrt();
        }
    }
    let value = var_total / nf + 2.0 / (nf * nf * (nf - 1.0)) * sd_diff_sum * sd_diff_sum;
    Ok(BoundEvaluation::new(BoundFamily::Song, value.max(0.0)))
}

/// Max over the sign index `x ∈ {0, 1}` of
/// `{ (2/(N(N−1)))·[Σ_{i<j} Δ(A_i + (−1)^x A_j)]²
///    + Σ_{i<j} Δ²(A_i + (−1)^{x+1} A_j) } / (2N−2)`.
///
/// The winning index is recorded in both components of `branch`, since this
/// family has a single sign index.
pub fn zhang_bound(rho: &DensityMatrix, set: &ObservableSet) -> Result<BoundEvaluation> {
    check_dims(rho, set)?;
    let n = set.len();
    let nf = n as f64;
    let cs_weight = 2.0 / (nf * (nf - 1.0));
    let denom = (1.0 + 1.0) * (nf - 1.0);

    let mut best: Option<(f64, u8)> = None;
    for x in 0..2u8 {
        let sign_first = if x == 0 { 1.0 } else { -1.0 };
        let mut first = 0.0;
        let mut second = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                let a = set.get(i)?;
                let b = set.get(j)?;
                first += variance_of_matrix(rho, &pair_combo(1.0, a, sign_first, b))?.sqrt();
                second += variance_of_matrix(rho, &pair_combo(1.0, a, -sign_first, b))?;
            }
        }
        let value = (cs_weight * first * first + second) / denom;
        if best.is_none_or(|(b, _)| value > b) {
            best = Some((value, x));
        }
    }
    let (value, x) = best.expect("two branches evaluated");
    let mut eval = BoundEvaluation::new(BoundFamily::Zhang, value.max(0.0));
    eval.branch = Some(BranchChoice { x, y: x });
    Ok(eval)
}

/// Variances (and their square roots) of the weighted pair combinations
/// `α^{1−x} A_i + (−1)^y α^x A_j` for ordered pairs `(i, j)` and all four
/// branches. The second term of branch `(x, y)` is the entry of the
/// mirrored branch `(1−x, 1−y)`.
struct PairBranchTable {
    n: usize,
    var: Vec<f64>,
    sd: Vec<f64>,
}

impl PairBranchTable {
    fn build(
        rho: &DensityMatrix,
        set: &ObservableSet,
        alpha: f64,
        all_ordered: bool,
    ) -> Result<Self> {
        let n = set.len();
        let mut var = vec![0.0; n * n * 4];
        let mut sd = vec![0.0; n * n * 4];
        for i in 0..n {
            let j_start = if all_ordered { 0 } else { i + 1 };
            for j in j_start..n {
                if i == j {
                    continue;
                }
                let a = set.get(i)?;
                let b = set.get(j)?;
                for x in 0..2usize {
                    // α^{1−x} and α^x with the 0⁰ = 1 convention
                    let weight_i = if x == 0 { alpha } else { 1.0 };
                    let weight_j = if x == 0 { 1.0 } else { alpha };
                    for y in 0..2usize {
                        let sign = if y == 0 { 1.0 } else { -1.0 };
                        let m = pair_combo(weight_i, a, sign * weight_j, b);
                        let v = variance_of_matrix(rho, &m)?;
                        let idx = Self::index(n, i, j, x, y);
                        var[idx] = v;
                        sd[idx] = v.sqrt();
                    }
                }
            }
        }
        Ok(Self { n, var, sd })
    }

    #[inline]
    fn index(n: usize, i: usize, j: usize, x: usize, y: usize) -> usize {
        ((i * n + j) * 2 + x) * 2 + y
    }

    /// Evaluates the four branches for the given ordering; ties break toward
    /// the lexicographically smaller `(x, y)`.
    fn evaluate(&self, alpha: f64, perm: &[usize]) -> (f64, BranchChoice) {
        let nf = self.n as f64;
        let cs_weight = 2.0 / (nf * (nf - 1.0));
        let denom = (1.0 + alpha * alpha) * (nf - 1.0);
        let mut best: Option<(f64, BranchChoice)> = None;
        for x in 0..2usize {
            for y in 0..2usize {
                let mut first = 0.0;
                let mut second = 0.0;
                for i in 0..self.n {
                    for j in (i + 1)..self.n {
                        let (pi, pj) = (perm[i], perm[j]);
                        first += self.sd[Self::index(self.n, pi, pj, x, y)];
                        second += self.var[Self::index(self.n, pi, pj, 1 - x, 1 - y)];
                    }
                }
                let value = (cs_weight * first * first + second) / denom;
                if best.is_none_or(|(b, _)| value > b) {
                    best = Some((
                        value,
                        BranchChoice {
                            x: x as u8,
                            y: y as u8,
                        },
                    ));
                }
            }
        }
        best.expect("four branches evaluated")
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() || alpha < 0.0 {
        return Err(Error::NegativeAlpha(alpha));
    }
    Ok(())
}

/// One-parameter lower bound at weight `α ≥ 0`, maximized over the four
/// `(x, y)` branches.
pub fn lb1(rho: &DensityMatrix, set: &ObservableSet, alpha: f64) -> Result<BoundEvaluation> {
    check_alpha(alpha)?;
    check_dims(rho, set)?;
    let table = PairBranchTable::build(rho, set, alpha, false)?;
    let identity: Vec<usize> = (0..set.len()).collect();
    let (value, branch) = table.evaluate(alpha, &identity);
    let mut eval = BoundEvaluation::new(BoundFamily::Lb1, value.max(0.0));
    eval.alpha = Some(alpha);
    eval.branch = Some(branch);
    Ok(eval)
}

/// Calls `f` with every permutation of `0..n` in lexicographic order.
fn for_each_permutation<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        f(&perm);
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| perm[i] < perm[i + 1])
        else {
            return;
        };
        let j = ((i + 1)..n)
            .rev()
            .find(|&j| perm[j] > perm[i])
            .expect("successor exists");
        perm.swap(i, j);
        perm[(i + 1)..].reverse();
    }
}

/// [`lb1`] maximized over every ordering of the observable tuple.
///
/// The winner never falls below the unpermuted bound since the identity
/// ordering is part of the search. Ties break toward the lexicographically
/// smaller permutation.
pub fn lb1_permuted(
    rho: &DensityMatrix,
    set: &ObservableSet,
    alpha: f64,
) -> Result<BoundEvaluation> {
    check_alpha(alpha)?;
    check_dims(rho, set)?;
    let n = set.len();
    if n > PERM_MAX {
        return Err(Error::TooManyObservables { n, max: PERM_MAX });
    }
    let table = PairBranchTable::build(rho, set, alpha, true)?;
    let mut best: Option<(f64, BranchChoice, Vec<usize>)> = None;
    for_each_permutation(n, |perm| {
        let (value, branch) = table.evaluate(alpha, perm);
        if best.as_ref().is_none_or(|(b, _, _)| value > *b) {
            best = Some((value, branch, perm.to_vec()));
        }
    });
    let (value, branch, permutation) = best.expect("at least the identity ordering");
    let mut eval = BoundEvaluation::new(BoundFamily::Lb1Pi, value.max(0.0));
    eval.alpha = Some(alpha);
    eval.branch = Some(branch);
    eval.permutation = Some(permutation);
    Ok(eval)
}

/// The `X`, `Y` and optional `Z` evaluations of the two-parameter family.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Thm2Evaluation {
    pub x: BoundEvaluation,
    pub y: BoundEvaluation,
    /// Present only for `β > α`, where the `Z` expression is a valid bound.
    pub z: Option<BoundEvaluation>,
}

/// Two-parameter bounds at weights `α, β > 0`:
///
/// * `X = { (2β/(N(N−1)))·[Σ Δ(A_i+A_j)]² + α·Σ Δ²(A_i−A_j)
///          + (α−β)·Δ²(ΣA_i) } / (αN + (N−2)β)`
/// * `Y` — the same with the roles of the `+`/`−` combinations swapped,
/// * `Z = { β·Σ Δ²(A_i+A_j) + α·Σ Δ²(A_i−A_j)
///          + ((α−β)/(N−1)²)·[Σ Δ(A_i+A_j)]² } / (αN + (N−2)β)`,
///   returned only when `β > α`.
pub fn thm2_bounds(
    rho: &DensityMatrix,
    set: &ObservableSet,
    alpha: f64,
    beta: f64,
) -> Result<Thm2Evaluation> {
    if !alpha.is_finite() || !beta.is_finite() || alpha <= 0.0 || beta <= 0.0 {
        return Err(Error::NonPositiveParameter { alpha, beta });
    }
    check_dims(rho, set)?;
    let n = set.len();
    let nf = n as f64;

    let mut sd_plus = 0.0;
    let mut sd_minus = 0.0;
    let mut var_plus = 0.0;
    let mut var_minus = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let a = set.get(i)?;
            let b = set.get(j)?;
            let vp = variance_of_matrix(rho, &pair_combo(1.0, a, 1.0, b))?;
            let vm = variance_of_matrix(rho, &pair_combo(1.0, a, -1.0, b))?;
            var_plus += vp;
            var_minus += vm;
            sd_plus += vp.sqrt();
            sd_minus += vm.sqrt();
        }
    }
    let all: Vec<usize> = (0..n).collect();
    let ones = vec![1.0; n];
    let var_total = variance_of_matrix(rho, &combo_matrix(&ones, set, &all)?)?;

    let denom = alpha * nf + (nf - 2.0) * beta;
    let x_val = (2.0 * beta / (nf * (nf - 1.0)) * sd_plus * sd_plus
        + alpha * var_minus
        + (alpha - beta) * var_total)
        / denom;
    let y_val = (2.0 * alpha / (nf * (nf - 1.0)) * sd_minus * sd_minus
        + beta * var_plus
        + (alpha - beta) * var_total)
        / denom;

    let wrap = |family, value: f64| {
        let mut eval = BoundEvaluation::new(family, value.max(0.0));
        eval.alpha = Some(alpha);
        eval.beta = Some(beta);
        eval
    };
    let z = if beta > alpha {
        let z_val = (beta * var_plus
            + alpha * var_minus
            + (alpha - beta) / ((nf - 1.0) * (nf - 1.0)) * sd_plus * sd_plus)
            / denom;
        Some(wrap(BoundFamily::Thm2Z, z_val))
    } else {
        None
    };
    Ok(Thm2Evaluation {
        x: wrap(BoundFamily::Thm2X, x_val),
        y: wrap(BoundFamily::Thm2Y, y_val),
        z,
    })
}

/// `max{X, Y, Z}` of the two-parameter family; `Z` participates only when
/// `β > α`. Ties break toward `X`, then `Y`.
pub fn lb2(
    rho: &DensityMatrix,
    set: &ObservableSet,
    alpha: f64,
    beta: f64,
) -> Result<BoundEvaluation> {
    let parts = thm2_bounds(rho, set, alpha, beta)?;
    let mut value = parts.x.value;
    let mut member = Thm2Member::X;
    if parts.y.value > value {
        value = parts.y.value;
        member = Thm2Member::Y;
    }
    if let Some(z) = &parts.z {
        if z.value > value {
            value = z.value;
            member = Thm2Member::Z;
        }
    }
    let mut eval = BoundEvaluation::new(BoundFamily::Lb2, value);
    eval.alpha = Some(alpha);
    eval.beta = Some(beta);
    eval.member = Some(member);
    Ok(eval)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{bloch_state, example_set, pauli, random_instance, Axis, ExampleFamily};
    use crate::linalg::{CMatrix, CVector, DensityMatrix, Observable};
    use nalgebra::DVector;
    use num_complex::Complex64 as C;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    fn example1_state(theta: f64) -> DensityMatrix {
        let r = 3f64.sqrt() / 2.0;
        bloch_state([r * theta.cos(), r * theta.sin(), 0.0]).unwrap()
    }

    /// Commuting diagonal observables with common eigenvector e_2.
    fn commuting_fixture() -> (DensityMatrix, ObservableSet) {
        let diag = |entries: [f64; 3], label: &str| {
            Observable::new(
                CMatrix::from_diagonal(&DVector::from_iterator(
                    3,
                    entries.iter().map(|&v| c(v, 0.)),
                )),
                label,
            )
            .unwrap()
        };
        let set = ObservableSet::new(vec![
            diag([1., 2., 3.], "D1"),
            diag([4., 5., 6.], "D2"),
            diag([1., 1., 2.], "D3"),
        ])
        .unwrap();
        let mut proj = CMatrix::zeros(3, 3);
        proj[(1, 1)] = c(1., 0.);
        (DensityMatrix::new(proj).unwrap(), set)
    }

    fn plus_state() -> DensityMatrix {
        DensityMatrix::new(CMatrix::from_row_slice(
            2,
            2,
            &[c(0.5, 0.), c(0.5, 0.), c(0.5, 0.), c(0.5, 0.)],
        ))
        .unwrap()
    }

    /// Independently derived closed forms for the worked qubit example at
    /// θ = 0 (pairwise deviations √21/2, √17/2 and 1; Δ²(ΣA) = 9/4).
    fn song_oracle_theta0() -> f64 {
        0.75 + ((21f64.sqrt() + 17f64.sqrt()) / 2.0 + 1.0).powi(2) / 9.0
    }

    fn zhang_oracle_theta0() -> (f64, f64) {
        let diff = (21f64.sqrt() + 17f64.sqrt()) / 2.0 + 1.0;
        let x1 = (diff * diff / 3.0 + 6.5) / 4.0;
        let sums = 1.25f64.sqrt() + 0.5 + 5f64.sqrt();
        let x0 = (sums * sums / 3.0 + 10.5) / 4.0;
        (x0, x1)
    }

    #[test]
    fn sum_variances_fixtures() {
        let (rho, set) = commuting_fixture();
        assert!(sum_variances(&rho, &set).unwrap() <= 1e-12);

        let mixed = DensityMatrix::new(CMatrix::identity(2, 2) / c(2., 0.)).unwrap();
        let paulis =
            ObservableSet::new(vec![pauli(Axis::X), pauli(Axis::Y), pauli(Axis::Z)]).unwrap();
        assert!((sum_variances(&mixed, &paulis).unwrap() - 3.0).abs() < 1e-12);

        let set1 = example_set(ExampleFamily::Qubit);
        let sum = sum_variances(&example1_state(0.0), &set1).unwrap();
        assert!((sum - 4.25).abs() < 1e-12);
    }

    #[test]
    fn song_fixtures() {
        let (rho, set) = commuting_fixture();
        assert!(song_bound(&rho, &set).unwrap().value <= 1e-12);

        let set1 = example_set(ExampleFamily::Qubit);
        let song = song_bound(&example1_state(0.0), &set1).unwrap().value;
        assert!((song - song_oracle_theta0()).abs() < 1e-12);
        assert!((song - 3.9337).abs() < 1e-3);

        // N = 2 with A_1 = A_2 = σ_z on |+⟩⟨+|: ½Δ²(2σ_z) + ½Δ²(0) = 2
        let sz = pauli(Axis::Z);
        let pair = ObservableSet::new(vec![sz.clone(), sz]).unwrap();
        let song2 = song_bound(&plus_state(), &pair).unwrap().value;
        assert!((song2 - 2.0).abs() < 1e-12);
    }

    #[test]
    fn zhang_fixtures() {
        let set1 = example_set(ExampleFamily::Qubit);
        let eval = zhang_bound(&example1_state(0.0), &set1).unwrap();
        let (x0, x1) = zhang_oracle_theta0();
        assert!(x1 > x0);
        assert!((eval.value - x1).abs() < 1e-12);
        assert!((eval.value - 4.0127).abs() < 1e-3);
        assert_eq!(eval.branch.unwrap().x, 1);

        let (rho, set) = commuting_fixture();
        assert!(zhang_bound(&rho, &set).unwrap().value <= 1e-12);
    }

    #[test]
    fn zhang_is_lb1_at_alpha_one() {
        for seed in 0..50u64 {
            let dim = 2 + (seed as usize) % 3;
            let n = 2 + (seed as usize) % 3;
            let (rho, set) = random_instance(dim, n, 9000 + seed).unwrap();
            let z = zhang_bound(&rho, &set).unwrap().value;
            let l = lb1(&rho, &set, 1.0).unwrap().value;
            assert!((z - l).abs() <= 1e-12, "seed {seed}: {z} vs {l}");
        }
    }

    #[test]
    fn lb1_fixtures() {
        let (rho, set) = commuting_fixture();
        for alpha in [0.0, 0.5, 1.0, 2.0, 5.0] {
            assert!(lb1(&rho, &set, alpha).unwrap().value <= 1e-12);
        }

        let set1 = example_set(ExampleFamily::Qubit);
        let rho1 = example1_state(0.0);
        let half = lb1(&rho1, &set1, 0.5).unwrap().value;
        let two = lb1(&rho1, &set1, 2.0).unwrap().value;
        assert!((half - two).abs() <= 1e-10 * (1.0 + half.abs()));
        assert!(half <= 4.25 + 1e-9);
    }

    #[test]
    fn lb1_rejects_negative_alpha() {
        let set1 = example_set(ExampleFamily::Qubit);
        assert!(matches!(
            lb1(&example1_state(0.0), &set1, -0.5),
            Err(Error::NegativeAlpha(_))
        ));
    }

    #[test]
    fn lb1_inversion_symmetry() {
        for seed in 0..20u64 {
            let (rho, set) = random_instance(2, 3, 4000 + seed).unwrap();
            for alpha in [0.125, 1.0 / 3.0, 0.5, 2.0, 3.0, 8.0] {
                let a = lb1(&rho, &set, alpha).unwrap().value;
                let b = lb1(&rho, &set, 1.0 / alpha).unwrap().value;
                assert!(
                    (a - b).abs() <= 1e-10 * (1.0 + a.abs()),
                    "seed {seed} alpha {alpha}: {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn lb1_permuted_matches_external_enumeration() {
        for seed in 0..20u64 {
            let (rho, set) = random_instance(2, 3, 7000 + seed).unwrap();
            let alpha = 0.5 + (seed as f64) * 0.1;
            let fast = lb1_permuted(&rho, &set, alpha).unwrap();
            // independent route: permute the set itself and rerun plain lb1
            let mut brute = f64::NEG_INFINITY;
            for perm in [
                [0, 1, 2],
                [0, 2, 1],
                [1, 0, 2],
                [1, 2, 0],
                [2, 0, 1],
                [2, 1, 0],
            ] {
                let permuted = set.permuted(&perm).unwrap();
                brute = brute.max(lb1(&rho, &permuted, alpha).unwrap().value);
            }
            assert!((fast.value - brute).abs() <= 1e-12, "seed {seed}");
            assert!(fast.value >= lb1(&rho, &set, alpha).unwrap().value - 1e-12);
        }
    }

    #[test]
    fn lb1_permuted_degenerate_cases() {
        // N = 2: both orderings give identical branch sets
        let (rho, set) = random_instance(3, 2, 42).unwrap();
        for alpha in [0.0, 0.7, 2.5] {
            let plain = lb1(&rho, &set, alpha).unwrap().value;
            let permuted = lb1_permuted(&rho, &set, alpha).unwrap().value;
            assert!((plain - permuted).abs() <= 1e-12);
        }

        // identical observables: any ordering is equivalent
        let sx = pauli(Axis::X);
        let same = ObservableSet::new(vec![sx.clone(), sx.clone(), sx]).unwrap();
        let rho = plus_state();
        let plain = lb1(&rho, &same, 1.7).unwrap().value;
        let permuted = lb1_permuted(&rho, &same, 1.7).unwrap().value;
        assert!((plain - permuted).abs() <= 1e-12);
    }

    #[test]
    fn lb1_permuted_rejects_large_sets() {
        let sx = pauli(Axis::X);
        let many = ObservableSet::new(vec![sx; 8]).unwrap();
        match lb1_permuted(&plus_state(), &many, 1.0) {
            Err(Error::TooManyObservables { n: 8, max: 7 }) => {}
            other => panic!("expected TooManyObservables, got {other:?}"),
        }
    }

    /// Closed form of the two-parameter `X` at (α, β) = (2, 1).
    fn x_reduced(rho: &DensityMatrix, set: &ObservableSet) -> f64 {
        let n = set.len() as f64;
        let (sp, _sm, _vp, vm, vt) = pair_stats(rho, set);
        (2.0 / (n * (n - 1.0)) * sp * sp + 2.0 * vm + vt) / (3.0 * n - 2.0)
    }

    /// Closed form of `Y` at (α, β) = (1, 2).
    fn y_reduced(rho: &DensityMatrix, set: &ObservableSet) -> f64 {
        let n = set.len() as f64;
        let (_sp, sm, vp, _vm, vt) = pair_stats(rho, set);
        (2.0 / (n * (n - 1.0)) * sm * sm + 2.0 * vp - vt) / (3.0 * n - 4.0)
    }

    /// Closed form of `Z` at (α, β) = (1, 2).
    fn z_reduced(rho: &DensityMatrix, set: &ObservableSet) -> f64 {
        let n = set.len() as f64;
        let (sp, _sm, vp, vm, _vt) = pair_stats(rho, set);
        (2.0 * vp + vm - 1.0 / ((n - 1.0) * (n - 1.0)) * sp * sp) / (3.0 * n - 4.0)
    }

    fn pair_stats(rho: &DensityMatrix, set: &ObservableSet) -> (f64, f64, f64, f64, f64) {
        let n = set.len();
        let (mut sp, mut sm, mut vp, mut vm) = (0.0, 0.0, 0.0, 0.0);
        for i in 0..n {
            for j in (i + 1)..n {
                let a = set.get(i).unwrap();
                let b = set.get(j).unwrap();
                let p = variance_of_matrix(rho, &pair_combo(1.0, a, 1.0, b)).unwrap();
                let m = variance_of_matrix(rho, &pair_combo(1.0, a, -1.0, b)).unwrap();
                vp += p;
                vm += m;
                sp += p.sqrt();
                sm += m.sqrt();
            }
        }
        let all: Vec<usize> = (0..n).collect();
        let vt = variance_of_matrix(rho, &combo_matrix(&vec![1.0; n], set, &all).unwrap()).unwrap();
        (sp, sm, vp, vm, vt)
    }

    #[test]
    fn thm2_matches_reduced_closed_forms() {
        let set1 = example_set(ExampleFamily::Qubit);
        for theta in [0.0, 0.7, 2.1] {
            let rho = example1_state(theta);
            let at21 = thm2_bounds(&rho, &set1, 2.0, 1.0).unwrap();
            assert!((at21.x.value - x_reduced(&rho, &set1)).abs() <= 1e-12);
            assert!(at21.z.is_none());

            let at12 = thm2_bounds(&rho, &set1, 1.0, 2.0).unwrap();
            assert!((at12.y.value - y_reduced(&rho, &set1)).abs() <= 1e-12);
            let z = at12.z.expect("beta > alpha active");
            assert!((z.value - z_reduced(&rho, &set1)).abs() <= 1e-12);
        }
    }

    #[test]
    fn thm2_coincides_with_zhang_at_equal_weights() {
        for seed in 0..50u64 {
            let dim = 2 + (seed as usize) % 3;
            let n = 2 + (seed as usize) % 3;
            let (rho, set) = random_instance(dim, n, 5000 + seed).unwrap();
            let alpha = 0.3 + (seed as f64) * 0.05;
            let parts = thm2_bounds(&rho, &set, alpha, alpha).unwrap();
            assert!(parts.z.is_none());
            let z = zhang_bound(&rho, &set).unwrap().value;
            let m = parts.x.value.max(parts.y.value);
            assert!((m - z).abs() <= 1e-12, "seed {seed}: {m} vs {z}");
        }
    }

    #[test]
    fn thm2_scale_invariance() {
        let (rho, set) = random_instance(3, 3, 77).unwrap();
        for scale in [0.1, 7.0] {
            let base = thm2_bounds(&rho, &set, 1.4, 2.9).unwrap();
            let scaled = thm2_bounds(&rho, &set, 1.4 * scale, 2.9 * scale).unwrap();
            for (a, b) in [
                (&base.x, &scaled.x),
                (&base.y, &scaled.y),
                (base.z.as_ref().unwrap(), scaled.z.as_ref().unwrap()),
            ] {
                assert!((a.value - b.value).abs() <= 1e-10 * (1.0 + a.value.abs()));
            }
        }
    }

    #[test]
    fn thm2_rejects_nonpositive_weights() {
        let set1 = example_set(ExampleFamily::Qubit);
        let rho = example1_state(0.0);
        for (a, b) in [(0.0, 1.0), (1.0, 0.0), (-1.0, 2.0), (1.0, -2.0)] {
            assert!(matches!(
                thm2_bounds(&rho, &set1, a, b),
                Err(Error::NonPositiveParameter { .. })
            ));
        }
    }

    #[test]
    fn lb2_fixtures() {
        let (rho, set) = commuting_fixture();
        for (a, b) in [(1.0, 1.0), (2.0, 1.0), (1.0, 2.0), (0.5, 3.0)] {
            assert!(lb2(&rho, &set, a, b).unwrap().value <= 1e-12);
        }

        let set1 = example_set(ExampleFamily::Qubit);
        let rho1 = example1_state(0.0);
        let z = zhang_bound(&rho1, &set1).unwrap().value;
        let l = lb2(&rho1, &set1, 1.0, 1.0).unwrap().value;
        assert!((z - l).abs() <= 1e-12);

        for seed in 0..50u64 {
            let (rho, set) = random_instance(2, 3, 6000 + seed).unwrap();
            let sum = sum_variances(&rho, &set).unwrap();
            let eval = lb2(&rho, &set, 1.0, 2.0).unwrap();
            assert!(eval.value <= sum + 1e-9, "seed {seed}");
        }
    }

    #[test]
    fn all_families_valid_on_random_ensemble() {
        let mut checked = 0u32;
        for seed in 0..1000u64 {
            let dim = 2 + (seed as usize) % 3;
            let n = 2 + (seed as usize) % 3;
            let (rho, set) = random_instance(dim, n, 20_000 + seed).unwrap();
            let sum = sum_variances(&rho, &set).unwrap();
            let slack = sum + 1e-9;
            assert!(song_bound(&rho, &set).unwrap().value <= slack);
            assert!(zhang_bound(&rho, &set).unwrap().value <= slack);
            let alpha = [0.0, 0.25, 1.0, 3.0][(seed % 4) as usize];
            assert!(lb1(&rho, &set, alpha).unwrap().value <= slack);
            assert!(lb1_permuted(&rho, &set, alpha).unwrap().value <= slack);
            let (a, b) = [(1.0, 2.0), (2.0, 1.0), (0.4, 0.9)][(seed % 3) as usize];
            let parts = thm2_bounds(&rho, &set, a, b).unwrap();
            assert!(parts.x.value <= slack);
            assert!(parts.y.value <= slack);
            if let Some(z) = parts.z {
                assert!(z.value <= slack);
            }
            assert!(lb2(&rho, &set, a, b).unwrap().value <= slack);
            checked += 1;
        }
        assert_eq!(checked, 1000);
    }

    #[test]
    fn zero_law_on_pure_states() {
        let (rho, set) = commuting_fixture();
        let e2 = CVector::from_vec(vec![c(0., 0.), c(1., 0.), c(0., 0.)]);
        assert!(crate::linalg::is_common_eigenvector(&set, &e2).unwrap());
        assert!(sum_variances(&rho, &set).unwrap() <= 1e-10);
        assert!(song_bound(&rho, &set).unwrap().value <= 1e-10);
        assert!(zhang_bound(&rho, &set).unwrap().value <= 1e-10);
        assert!(lb2(&rho, &set, 1.0, 2.0).unwrap().value <= 1e-10);

        // non-commuting set: some grid alpha must give a clearly nonzero bound
        let set1 = example_set(ExampleFamily::Qubit);
        let rho1 = example1_state(std::f64::consts::FRAC_PI_4);
        let best = [0.25, 0.5, 1.0, 2.0, 4.0]
            .iter()
            .map(|&a| lb1(&rho1, &set1, a).unwrap().value)
            .fold(0.0f64, f64::max);
        assert!(best >= 1e-8);
    }
}
