//! Quantum variance of observables and of real linear combinations, plus the
//! vectorization-based cross-check route.
//!
//! The primary route is the trace formula `Δ²(A) = Tr(ρA²) − (Tr ρA)²`. The
//! cross-check route rewrites the same quantity as `‖(I ⊗ δA)·vec(√ρ)‖²`
//! with `δA = A − Tr(ρA)·I`, and is kept deliberately independent so the two
//! can audit each other.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    kron, matrix_sqrt_psd, trace_product, vectorize, CMatrix, DensityMatrix, Observable,
    ObservableSet,
};

/// Rounding residue allowed below zero before a variance is deemed
/// inconsistent rather than noisy.
pub const VARIANCE_RESIDUE_TOL: f64 = 1e-12;

/// A non-negative variance (clamped at zero after the residue check).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct VarianceValue(f64);

impl VarianceValue {
    /// Clamps values in `[-1e-12, 0)` to zero; values below that raise
    /// [`Error::NegativeVariance`].
    pub(crate) fn from_raw(raw: f64) -> Result<Self> {
        if raw < -VARIANCE_RESIDUE_TOL {
            return Err(Error::NegativeVariance(raw));
        }
        Ok(Self(raw.max(0.0)))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<VarianceValue> for f64 {
    fn from(v: VarianceValue) -> f64 {
        v.0
    }
}

fn check_dims(rho: &DensityMatrix, dim: usize) -> Result<()> {
    if rho.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            actual: dim,
        });
    }
    Ok(())
}

/// `Re Tr(ρ·M)` for a Hermitian `M`; the imaginary part is rounding noise.
pub(crate) fn mean_of_matrix(rho: &DensityMatrix, m: &CMatrix) -> Result<f64> {
    check_dims(rho, m.nrows())?;
    let tr = trace_product(rho.matrix(), m);
    debug_assert!(
        tr.im.abs() <= 1e-10 * (1.0 + tr.re.abs()),
        "Tr(rho*M) has imaginary part {:.3e}",
        tr.im
    );
    Ok(tr.re)
}

/// `Tr(ρM²) − (Tr ρM)²`, clamped to be non-negative.
pub(crate) fn variance_of_matrix(rho: &DensityMatrix, m: &CMatrix) -> Result<f64> {
    let mean = mean_of_matrix(rho, m)?;
    let m2 = m * m;
    let second = trace_product(rho.matrix(), &m2).re;
    Ok(VarianceValue::from_raw(second - mean * mean)?.value())
}

/// Expectation value `Tr(ρA)`.
pub fn mean_value(rho: &DensityMatrix, a: &Observable) -> Result<f64> {
    mean_of_matrix(rho, a.matrix())
}

/// Quantum variance `Δ²_ρ(A) = Tr(ρA²) − (Tr ρA)²`.
pub fn variance(rho: &DensityMatrix, a: &Observable) -> Result<VarianceValue> {
    VarianceValue::from_raw(variance_of_matrix(rho, a.matrix())?)
}

/// Standard deviation `Δ_ρ(A)`.
pub fn stddev(rho: &DensityMatrix, a: &Observable) -> Result<f64> {
    Ok(variance(rho, a)?.value().sqrt())
}

/// Materializes `Σ_k coeffs[k] · A_{subset[k]}` as a plain matrix.
pub(crate) fn combo_matrix(
    coeffs: &[f64],
    set: &ObservableSet,
    subset: &[usize],
) -> Result<CMatrix> {
    if coeffs.len() != subset.len() {
        return Err(Error::LengthMismatch {
            coeffs: coeffs.len(),
            indices: subset.len(),
        });
    }
    let dim = set.dim();
    let mut acc = CMatrix::zeros(dim, dim);
    for (&c, &idx) in coeffs.iter().zip(subset) {
        let obs = set.get(idx)?;
        acc.zip_apply(obs.matrix(), |a, b| *a += b * c);
    }
    Ok(acc)
}

/// Weighted pair `c1·A_i + c2·A_j`, the building block of every bound family.
pub(crate) fn pair_combo(c1: f64, a: &Observable, c2: f64, b: &Observable) -> CMatrix {
    let mut acc = a.matrix() * Complex64::new(c1, 0.0);
    acc.zip_apply(b.matrix(), |x, y| *x += y * c2);
    acc
}

/// Observable `Σ_k c_k A_{i_k}`; Hermitian by construction for real
/// coefficients.
pub fn linear_combo(coeffs: &[f64], set: &ObservableSet, subset: &[usize]) -> Result<Observable> {
    let matrix = combo_matrix(coeffs, set, subset)?;
    let label = coeffs
        .iter()
        .zip(subset)
        .map(|(c, idx)| format!("{c}*[{idx}]"))
        .collect::<Vec<_>>()
        .join(" + ");
    Ok(Observable::from_hermitian_unchecked(matrix, label))
}

/// Variance through the vectorization chain:
/// `‖(I ⊗ δA)·vec(√ρ)‖²` with `δA = A − Tr(ρA)·I`.
///
/// Independent oracle for [`variance`].
pub fn variance_via_vectorization(rho: &DensityMatrix, a: &Observable) -> Result<VarianceValue> {
    let mean = mean_value(rho, a)?;
    let dim = rho.dim();
    let mut delta = a.matrix().clone();
    for i in 0..dim {
        delta[(i, i)] -= Complex64::new(mean, 0.0);
    }
    let sqrt_rho = matrix_sqrt_psd(rho)?;
    let lifted = kron(&CMatrix::identity(dim, dim), &delta);
    let image = lifted * vectorize(&sqrt_rho);
    VarianceValue::from_raw(image.norm_squared())
}
