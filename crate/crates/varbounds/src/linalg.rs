//! Dense complex matrix primitives: validated Hermitian observables and
//! density matrices, Hermitian eigendecomposition, PSD square roots,
//! Kronecker products and column-stacking vectorization.
//!
//! Matrices are `nalgebra` dynamic matrices over `Complex<f64>`; storage is
//! column-major, which makes [`vectorize`] a plain copy of the storage.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense complex matrix.
pub type CMatrix = DMatrix<Complex64>;
/// Dense complex column vector.
pub type CVector = DVector<Complex64>;

/// Hermiticity tolerance, relative to the matrix max-abs entry.
pub const HERM_TOL: f64 = 1e-10;
/// Absolute tolerance on `|Tr ρ − 1|`.
pub const TRACE_TOL: f64 = 1e-10;
/// Eigenvalues of a density matrix may undershoot zero by this much.
pub const PSD_TOL: f64 = 1e-10;
/// Residual tolerance for eigenpairs and reconstruction.
pub const EIG_TOL: f64 = 1e-9;
/// Entrywise tolerance on `S·S = ρ` for the PSD square root.
pub const SQRT_TOL: f64 = 1e-9;
/// Residual tolerance for eigenvector membership tests.
pub const EIGVEC_TOL: f64 = 1e-9;

/// Largest entry modulus of a matrix.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest entry modulus of `M − M†`.
pub fn hermiticity_deviation(m: &CMatrix) -> f64 {
    let mut dev = 0.0f64;
    for i in 0..m.nrows() {
        for j in i..m.ncols() {
            let d = (m[(i, j)] - m[(j, i)].conj()).norm();
            dev = dev.max(d);
        }
    }
    dev
}

fn check_hermitian(m: &CMatrix) -> Result<()> {
    let dev = hermiticity_deviation(m);
    if dev > HERM_TOL * max_abs(m) {
        return Err(Error::NotHermitian { max_dev: dev });
    }
    Ok(())
}

/// `(M + M†)/2`. The result satisfies `s[i][j] == conj(s[j][i])` exactly.
pub fn hermitize(m: &CMatrix) -> CMatrix {
    let n = m.nrows();
    let mut s = m.clone();
    for i in 0..n {
        s[(i, i)] = Complex64::new(m[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let v = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
            s[(i, j)] = v;
            s[(j, i)] = v.conj();
        }
    }
    s
}

/// `Tr(A·B)` without forming the product: `Σ_{ij} A[i,j]·B[j,i]`.
pub fn trace_product(a: &CMatrix, b: &CMatrix) -> Complex64 {
    debug_assert_eq!(a.ncols(), b.nrows());
    debug_assert_eq!(a.nrows(), b.ncols());
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            acc += a[(i, j)] * b[(j, i)];
        }
    }
    acc
}

/// A validated Hermitian observable with a human-readable label.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable {
    matrix: CMatrix,
    label: String,
}

impl Observable {
    /// Validates Hermiticity and stores the symmetrized matrix `(M + M†)/2`.
    pub fn new(matrix: CMatrix, label: impl Into<String>) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::DimensionMismatch {
                expected: matrix.nrows(),
                actual: matrix.ncols(),
            });
        }
        check_hermitian(&matrix)?;
        Ok(Self {
            matrix: hermitize(&matrix),
            label: label.into(),
        })
    }

    /// Wraps a matrix that is Hermitian by construction (real linear
    /// combinations of already-validated observables).
    pub(crate) fn from_hermitian_unchecked(matrix: CMatrix, label: String) -> Self {
        debug_assert!(hermiticity_deviation(&matrix) <= HERM_TOL * max_abs(&matrix).max(1.0));
        Self { matrix, label }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// Validates that a square complex matrix is Hermitian within tolerance.
///
/// Alias for [`Observable::new`].
pub fn validate_observable(matrix: CMatrix, label: impl Into<String>) -> Result<Observable> {
    Observable::new(matrix, label)
}

/// A validated quantum state: Hermitian, positive semidefinite, unit trace.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: CMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positive semidefiniteness.
    ///
    /// Eigenvalues in `[-PSD_TOL, 0)` are clipped to zero and the matrix is
    /// reconstituted from its eigendecomposition, so downstream square roots
    /// never see negative spectra.
    pub fn new(matrix: CMatrix) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::DimensionMismatch {
                expected: matrix.nrows(),
                actual: matrix.ncols(),
            });
        }
        check_hermitian(&matrix)?;
        let sym = hermitize(&matrix);
        let trace = sym.trace();
        if (trace.re - 1.0).abs() > TRACE_TOL {
            return Err(Error::NotUnitTrace { trace: trace.re });
        }
        let (eigenvalues, eigenvectors) = eig_hermitian(&sym)?;
        let min_eig = eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
        if min_eig < -PSD_TOL {
            return Err(Error::NotPsd {
                min_eigenvalue: min_eig,
            });
        }
        let matrix = if min_eig < 0.0 {
            let clipped = DVector::from_iterator(
                eigenvalues.len(),
                eigenvalues.iter().map(|&l| Complex64::new(l.max(0.0), 0.0)),
            );
            hermitize(&(&eigenvectors * CMatrix::from_diagonal(&clipped) * eigenvectors.adjoint()))
        } else {
            sym
        };
        Ok(Self { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }
}

/// Validates a square complex matrix as a quantum state.
///
/// Alias for [`DensityMatrix::new`].
pub fn validate_density(matrix: CMatrix) -> Result<DensityMatrix> {
    DensityMatrix::new(matrix)
}

/// An ordered tuple of observables sharing one dimension, length ≥ 2.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservableSet {
    dim: usize,
    members: Vec<Observable>,
}

impl ObservableSet {
    pub fn new(members: Vec<Observable>) -> Result<Self> {
        if members.len() < 2 {
            return Err(Error::TooFewObservables { n: members.len() });
        }
        let dim = members[0].dim();
        for obs in &members[1..] {
            if obs.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: obs.dim(),
                });
            }
        }
        Ok(Self { dim, members })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Observable] {
        &self.members
    }

    pub fn get(&self, index: usize) -> Result<&Observable> {
        self.members.get(index).ok_or(Error::IndexOutOfRange {
            index,
            len: self.members.len(),
        })
    }

    /// Reorders the members; `perm` must be a permutation of `0..len`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.members.len() {
            return Err(Error::LengthMismatch {
                coeffs: perm.len(),
                indices: self.members.len(),
            });
        }
        let members = perm
            .iter()
            .map(|&i| self.get(i).cloned())
            .collect::<Result<Vec<_>>>()?;
        ObservableSet::new(members)
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Returns eigenvalues in ascending order with matching orthonormal
/// eigenvector columns. No ordering is guaranteed among eigenvectors of
/// equal eigenvalues.
pub fn eig_hermitian(m: &CMatrix) -> Result<(Vec<f64>, CMatrix)> {
    check_hermitian(m)?;
    let eig: SymmetricEigen<Complex64, nalgebra::Dyn> =
        SymmetricEigen::try_new(hermitize(m), f64::EPSILON, 0).ok_or(Error::ConvergenceFailure)?;
    let n = eig.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut vectors = CMatrix::zeros(n, n);
    for (col, &k) in order.iter().enumerate() {
        vectors.set_column(col, &eig.eigenvectors.column(k));
    }
    Ok((eigenvalues, vectors))
}

/// Hermitian PSD square root `S` of a density matrix, with `S·S = ρ`.
pub fn matrix_sqrt_psd(rho: &DensityMatrix) -> Result<CMatrix> {
    let (eigenvalues, vectors) = eig_hermitian(rho.matrix())?;
    let roots = DVector::from_iterator(
        eigenvalues.len(),
        eigenvalues
            .iter()
            .map(|&l| Complex64::new(l.max(0.0).sqrt(), 0.0)),
    );
    let s = &vectors * CMatrix::from_diagonal(&roots) * vectors.adjoint();
    Ok(hermitize(&s))
}

/// Kronecker product `A ⊗ B`; block `(i, j)` is `a[i][j]·B`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Column-stacking vectorization `|G⟩ = (g_11, …, g_l1, g_12, …, g_lp)ᵗ`.
///
/// Satisfies `vectorize(G·T) = (I ⊗ G)·vectorize(T)` for conforming `T`.
pub fn vectorize(g: &CMatrix) -> CVector {
    CVector::from_column_slice(g.as_slice())
}

/// Whether `ψ` is simultaneously an eigenvector of every member of the set,
/// i.e. `‖A_i ψ − ⟨ψ|A_i|ψ⟩ ψ‖ ≤ EIGVEC_TOL` for all `i`.
pub fn is_common_eigenvector(set: &ObservableSet, psi: &CVector) -> Result<bool> {
    let norm = psi.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::NotNormalized { norm });
    }
    if psi.len() != set.dim() {
        return Err(Error::DimensionMismatch {
            expected: set.dim(),
            actual: psi.len(),
        });
    }
    for obs in set.members() {
        let image = obs.matrix() * psi;
        let mean = psi.dotc(&image);
        let residual = &image - psi * mean;
        if residual.norm() > EIGVEC_TOL {
            return Ok(false);
        }
    }
    Ok(true)
}
