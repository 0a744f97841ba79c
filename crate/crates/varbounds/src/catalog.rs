//! Constructors for the states and observables of the three worked example
//! families, plus seeded random ensembles for validity audits.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{hermitize, kron, CMatrix, CVector, DensityMatrix, Observable, ObservableSet};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Cartesian axis for Pauli and angular-momentum operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// The standard 2×2 Pauli matrix along the given axis.
pub fn pauli(axis: Axis) -> Observable {
    let (matrix, label) = match axis {
        Axis::X => (
            CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]),
            "sigma_x",
        ),
        Axis::Y => (
            CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)]),
            "sigma_y",
        ),
        Axis::Z => (
            CMatrix::from_row_slice(2, 2, &[c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)]),
            "sigma_z",
        ),
    };
    Observable::new(matrix, label).expect("Pauli matrices are Hermitian")
}

/// Spin-1 angular momentum operator (ħ = 1) along the given axis, in the
/// basis (|1⟩, |0⟩, |−1⟩).
pub fn angular_momentum(axis: Axis) -> Observable {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let (matrix, label) = match axis {
        Axis::X => (
            CMatrix::from_row_slice(
                3,
                3,
                &[
                    c(0., 0.),
                    c(s, 0.),
                    c(0., 0.),
                    c(s, 0.),
                    c(0., 0.),
                    c(s, 0.),
                    c(0., 0.),
                    c(s, 0.),
                    c(0., 0.),
                ],
            ),
            "L_x",
        ),
        Axis::Y => (
            CMatrix::from_row_slice(
                3,
                3,
                &[
                    c(0., 0.),
                    c(0., -s),
                    c(0., 0.),
                    c(0., s),
                    c(0., 0.),
                    c(0., -s),
                    c(0., 0.),
                    c(0., s),
                    c(0., 0.),
                ],
            ),
            "L_y",
        ),
        Axis::Z => (
            CMatrix::from_row_slice(
                3,
                3,
                &[
                    c(1., 0.),
                    c(0., 0.),
                    c(0., 0.),
                    c(0., 0.),
                    c(0., 0.),
                    c(0., 0.),
                    c(0., 0.),
                    c(0., 0.),
                    c(-1., 0.),
                ],
            ),
            "L_z",
        ),
    };
    Observable::new(matrix, label).expect("angular momentum operators are Hermitian")
}

/// Qubit state `½(I + r·σ)` for a Bloch vector with `‖r‖ ≤ 1`.
pub fn bloch_state(r: [f64; 3]) -> Result<DensityMatrix> {
    let norm = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
    if norm > 1.0 + 1e-12 {
        return Err(Error::BlochVectorTooLong { norm });
    }
    let m = CMatrix::from_row_slice(
        2,
        2,
        &[
            c(0.5 * (1.0 + r[2]), 0.0),
            c(0.5 * r[0], -0.5 * r[1]),
            c(0.5 * r[0], 0.5 * r[1]),
            c(0.5 * (1.0 - r[2]), 0.0),
        ],
    );
    DensityMatrix::new(m)
}

/// Convex mixture of the maximally entangled state and the maximally mixed
/// state on `d ⊗ d`:
/// `ρ_θ = ((1−θ)/(d²−1))·(I − P) + θ·P` with `P = |Ψ⁺⟩⟨Ψ⁺|`,
/// `|Ψ⁺⟩ = (1/√d)·Σ|ii⟩`.
pub fn isotropic_state(d: usize, theta: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&theta) {
        return Err(Error::InvalidTheta(theta));
    }
    let dim = d * d;
    let mut psi = CVector::zeros(dim);
    let amp = 1.0 / (d as f64).sqrt();
    for i in 0..d {
        psi[i * d + i] = c(amp, 0.0);
    }
    let projector = &psi * psi.adjoint();
    let off = (1.0 - theta) / ((dim - 1) as f64);
    let m = (CMatrix::identity(dim, dim) - &projector) * c(off, 0.0) + projector * c(theta, 0.0);
    DensityMatrix::new(m)
}

/// Pure spin-1 state
/// `|ψ⟩ = sinθcosφ|1⟩ + sinθsinφ|0⟩ + cosθ|−1⟩` as a rank-1 density matrix,
/// in the basis (|1⟩, |0⟩, |−1⟩).
pub fn spin1_pure(theta: f64, phi: f64) -> DensityMatrix {
    let psi = CVector::from_vec(vec![
        c(theta.sin() * phi.cos(), 0.0),
        c(theta.sin() * phi.sin(), 0.0),
        c(theta.cos(), 0.0),
    ]);
    let m = &psi * psi.adjoint();
    DensityMatrix::new(m).expect("unit vector gives a valid pure state")
}

/// The three worked example families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleFamily {
    /// Qubit Bloch-circle family with observables built from Pauli matrices.
    Qubit,
    /// Two-qubit isotropic family with two-qubit Pauli observables.
    Isotropic,
    /// Spin-1 pure-state family with angular-momentum observables.
    SpinOne,
}

impl ExampleFamily {
    /// Numeric ids 1–3 as used by the command-line interface.
    pub fn from_id(id: u8) -> Result<Self> {
        match id {
            1 => Ok(Self::Qubit),
            2 => Ok(Self::Isotropic),
            3 => Ok(Self::SpinOne),
            other => Err(Error::UnknownExample(other)),
        }
    }

    pub fn id(self) -> u8 {
        match self {
            Self::Qubit => 1,
            Self::Isotropic => 2,
            Self::SpinOne => 3,
        }
    }

    /// Conventional sweep range for the family's θ parameter.
    pub fn default_theta_range(self) -> (f64, f64) {
        match self {
            Self::Qubit => (0.0, 2.0 * std::f64::consts::PI),
            Self::Isotropic => (0.0, 1.0),
            Self::SpinOne => (0.0, std::f64::consts::PI),
        }
    }

    /// Whether the family has a second angle φ.
    pub fn uses_phi(self) -> bool {
        matches!(self, Self::SpinOne)
    }
}

/// The observable triple of a worked example family:
///
/// * qubit: `σ_x − σ_z`, `σ_y + σ_z`, `σ_z`;
/// * isotropic: `σ_z⊗σ_x + σ_z⊗σ_y`, `σ_z⊗σ_y`, `σ_z⊗σ_z − σ_z⊗σ_y`;
/// * spin-1: `L_x − L_y`, `L_y`, `L_z + L_y`.
pub fn example_set(family: ExampleFamily) -> ObservableSet {
    let members = match family {
        ExampleFamily::Qubit => {
            let sx = pauli(Axis::X);
            let sy = pauli(Axis::Y);
            let sz = pauli(Axis::Z);
            vec![
                Observable::new(sx.matrix() - sz.matrix(), "sigma_x - sigma_z").unwrap(),
                Observable::new(sy.matrix() + sz.matrix(), "sigma_y + sigma_z").unwrap(),
                sz,
            ]
        }
        ExampleFamily::Isotropic => {
            let sx = pauli(Axis::X);
            let sy = pauli(Axis::Y);
            let sz = pauli(Axis::Z);
            let zx = kron(sz.matrix(), sx.matrix());
            let zy = kron(sz.matrix(), sy.matrix());
            let zz = kron(sz.matrix(), sz.matrix());
            vec![
                Observable::new(&zx + &zy, "sz⊗sx + sz⊗sy").unwrap(),
                Observable::new(zy.clone(), "sz⊗sy").unwrap(),
                Observable::new(&zz - &zy, "sz⊗sz - sz⊗sy").unwrap(),
            ]
        }
        ExampleFamily::SpinOne => {
            let lx = angular_momentum(Axis::X);
            let ly = angular_momentum(Axis::Y);
            let lz = angular_momentum(Axis::Z);
            vec![
                Observable::new(lx.matrix() - ly.matrix(), "L_x - L_y").unwrap(),
                ly.clone(),
                Observable::new(lz.matrix() + ly.matrix(), "L_z + L_y").unwrap(),
            ]
        }
    };
    ObservableSet::new(members).expect("example sets have three members")
}

/// A single evaluation point of a worked example family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExampleSpec {
    pub family: ExampleFamily,
    pub theta: f64,
    /// Second angle for the spin-1 family; defaults to π/2 when absent.
    pub phi: Option<f64>,
}

impl ExampleSpec {
    pub fn state(&self) -> Result<DensityMatrix> {
        match self.family {
            ExampleFamily::Qubit => {
                let r = 3f64.sqrt() / 2.0;
                bloch_state([r * self.theta.cos(), r * self.theta.sin(), 0.0])
            }
            ExampleFamily::Isotropic => isotropic_state(2, self.theta),
            ExampleFamily::SpinOne => {
                let phi = self.phi.unwrap_or(std::f64::consts::FRAC_PI_2);
                Ok(spin1_pure(self.theta, phi))
            }
        }
    }

    pub fn observables(&self) -> ObservableSet {
        example_set(self.family)
    }
}

fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Matrix with independent standard complex Gaussian entries, filled
/// column by column.
fn gaussian_matrix(rng: &mut ChaCha8Rng, dim: usize) -> CMatrix {
    let mut m = CMatrix::zeros(dim, dim);
    for j in 0..dim {
        for i in 0..dim {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            m[(i, j)] = c(re, im);
        }
    }
    m
}

/// Seeded random (state, observable set) instance for audits.
///
/// The state is `GG†/Tr(GG†)` and each observable is `(H + H†)/2`, with `G`
/// and `H` standard complex Gaussian. All randomness derives from `seed`
/// via per-object streams in a fixed order: the state uses stream 0 and the
/// k-th observable uses stream k.
pub fn random_instance(
    dim: usize,
    n_obs: usize,
    seed: u64,
) -> Result<(DensityMatrix, ObservableSet)> {
    if !(2..=8).contains(&dim) || !(2..=6).contains(&n_obs) {
        return Err(Error::OutOfSupportedRange { dim, n_obs });
    }
    let g = gaussian_matrix(&mut stream_rng(seed, 0), dim);
    let w = &g * g.adjoint();
    let rho = DensityMatrix::new(&w / w.trace())?;

    let mut members = Vec::with_capacity(n_obs);
    for k in 1..=n_obs {
        let h = gaussian_matrix(&mut stream_rng(seed, k as u64), dim);
        members.push(Observable::new(hermitize(&h), format!("A{k}"))?);
    }
    Ok((rho, ObservableSet::new(members)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{eig_hermitian, max_abs, PSD_TOL};

    #[test]
    fn pauli_matrices_are_standard() {
        let sx = pauli(Axis::X);
        assert_eq!(sx.matrix()[(0, 1)], c(1., 0.));
        assert_eq!(sx.matrix()[(0, 0)], c(0., 0.));
        let sz = pauli(Axis::Z);
        assert_eq!(sz.matrix()[(0, 0)], c(1., 0.));
        assert_eq!(sz.matrix()[(1, 1)], c(-1., 0.));
        for axis in [Axis::X, Axis::Y, Axis::Z] {
            let s = pauli(axis);
            let sq = s.matrix() * s.matrix();
            assert!(max_abs(&(sq - CMatrix::identity(2, 2))) < 1e-15);
        }
    }

    #[test]
    fn angular_momentum_fixtures() {
        let lz = angular_momentum(Axis::Z);
        assert_eq!(lz.matrix()[(0, 0)], c(1., 0.));
        assert_eq!(lz.matrix()[(1, 1)], c(0., 0.));
        assert_eq!(lz.matrix()[(2, 2)], c(-1., 0.));

        let (eigs, _) = eig_hermitian(angular_momentum(Axis::X).matrix()).unwrap();
        assert!((eigs[0] + 1.0).abs() < 1e-12);
        assert!(eigs[1].abs() < 1e-12);
        assert!((eigs[2] - 1.0).abs() < 1e-12);

        // [L_x, L_y] = i L_z
        let lx = angular_momentum(Axis::X);
        let ly = angular_momentum(Axis::Y);
        let comm = lx.matrix() * ly.matrix() - ly.matrix() * lx.matrix();
        let expected = lz.matrix() * c(0., 1.);
        assert!(max_abs(&(comm - expected)) < 1e-12);
    }

    #[test]
    fn bloch_state_fixtures() {
        let mixed = bloch_state([0.0, 0.0, 0.0]).unwrap();
        assert!((mixed.matrix()[(0, 0)].re - 0.5).abs() < 1e-15);
        assert_eq!(mixed.matrix()[(0, 1)], c(0., 0.));

        let ground = bloch_state([0.0, 0.0, 1.0]).unwrap();
        assert!((ground.matrix()[(0, 0)].re - 1.0).abs() < 1e-15);
        assert!(ground.matrix()[(1, 1)].re.abs() < 1e-15);

        let r = 3f64.sqrt() / 2.0;
        let rho = bloch_state([r, 0.0, 0.0]).unwrap();
        let (eigs, _) = eig_hermitian(rho.matrix()).unwrap();
        assert!((eigs[0] - (2.0 - 3f64.sqrt()) / 4.0).abs() < 1e-12);
        assert!((eigs[1] - (2.0 + 3f64.sqrt()) / 4.0).abs() < 1e-12);

        assert!(matches!(
            bloch_state([1.0, 0.5, 0.0]),
            Err(Error::BlochVectorTooLong { .. })
        ));
    }

    #[test]
    fn isotropic_state_fixtures() {
        // θ = 1 is the pure maximally entangled state
        let pure = isotropic_state(2, 1.0).unwrap();
        let purity = (pure.matrix() * pure.matrix()).trace().re;
        assert!((purity - 1.0).abs() < 1e-12);

        // coefficients coincide at θ = 1/4, d = 2
        let flat = isotropic_state(2, 0.25).unwrap();
        assert!(max_abs(&(flat.matrix() - CMatrix::identity(4, 4) / c(4., 0.))) < 1e-14);

        // θ = 0: eigenvalues {1/3, 1/3, 1/3, 0}
        let ortho = isotropic_state(2, 0.0).unwrap();
        let (eigs, _) = eig_hermitian(ortho.matrix()).unwrap();
        assert!(eigs[0].abs() < 1e-12);
        for l in &eigs[1..] {
            assert!((l - 1.0 / 3.0).abs() < 1e-12);
        }
        assert!((ortho.matrix().trace().re - 1.0).abs() < 1e-12);

        assert!(matches!(
            isotropic_state(2, 1.5),
            Err(Error::InvalidTheta(_))
        ));
    }

    #[test]
    fn isotropic_spectrum_structure() {
        for d in [2usize, 3] {
            for theta in [0.0, 0.3, 0.8, 1.0] {
                let rho = isotropic_state(d, theta).unwrap();
                let (eigs, _) = eig_hermitian(rho.matrix()).unwrap();
                let bulk = (1.0 - theta) / ((d * d - 1) as f64);
                let mut expected: Vec<f64> = vec![bulk; d * d - 1];
                expected.push(theta);
                expected.sort_by(f64::total_cmp);
                for (got, want) in eigs.iter().zip(&expected) {
                    assert!((got - want).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn spin1_pure_fixtures() {
        let down = spin1_pure(0.0, 0.0);
        assert!((down.matrix()[(2, 2)].re - 1.0).abs() < 1e-15);

        let up = spin1_pure(std::f64::consts::FRAC_PI_2, 0.0);
        assert!((up.matrix()[(0, 0)].re - 1.0).abs() < 1e-15);

        for (theta, phi) in [(0.3, 1.1), (2.0, 4.4), (1.0, 0.0)] {
            let rho = spin1_pure(theta, phi);
            assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
            let purity = (rho.matrix() * rho.matrix()).trace().re;
            assert!((purity - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn example_sets_have_expected_shape() {
        let q = example_set(ExampleFamily::Qubit);
        assert_eq!((q.dim(), q.len()), (2, 3));
        let iso = example_set(ExampleFamily::Isotropic);
        assert_eq!((iso.dim(), iso.len()), (4, 3));
        let spin = example_set(ExampleFamily::SpinOne);
        assert_eq!((spin.dim(), spin.len()), (3, 3));
    }

    #[test]
    fn isotropic_family_commutators_are_stable() {
        // pin nothing about the physics; just require the construction to be
        // reproducible between two independent builds
        let first = example_set(ExampleFamily::Isotropic);
        let second = example_set(ExampleFamily::Isotropic);
        for i in 0..3 {
            for j in (i + 1)..3 {
                let comm = |set: &ObservableSet| {
                    let a = set.get(i).unwrap().matrix();
                    let b = set.get(j).unwrap().matrix();
                    max_abs(&(a * b - b * a))
                };
                assert_eq!(comm(&first), comm(&second));
            }
        }
    }

    #[test]
    fn example_ids_round_trip() {
        for id in 1..=3u8 {
            assert_eq!(ExampleFamily::from_id(id).unwrap().id(), id);
        }
        assert!(matches!(
            ExampleFamily::from_id(4),
            Err(Error::UnknownExample(4))
        ));
    }

    #[test]
    fn random_instance_is_deterministic() {
        let (rho_a, set_a) = random_instance(3, 3, 12345).unwrap();
        let (rho_b, set_b) = random_instance(3, 3, 12345).unwrap();
        assert_eq!(rho_a.matrix(), rho_b.matrix());
        for (a, b) in set_a.members().iter().zip(set_b.members()) {
            assert_eq!(a.matrix(), b.matrix());
        }
        let (rho_c, _) = random_instance(3, 3, 54321).unwrap();
        assert_ne!(rho_a.matrix(), rho_c.matrix());
    }

    #[test]
    fn random_states_are_positive() {
        for seed in 0..1000u64 {
            let (rho, _) = random_instance(3, 2, seed).unwrap();
            let (eigs, _) = eig_hermitian(rho.matrix()).unwrap();
            assert!(eigs[0] >= -PSD_TOL);
            assert!(eigs[0] >= 0.0, "validation clips residual negatives");
        }
    }

    #[test]
    fn random_instance_range_checks() {
        assert!(matches!(
            random_instance(1, 3, 0),
            Err(Error::OutOfSupportedRange { .. })
        ));
        assert!(matches!(
            random_instance(9, 3, 0),
            Err(Error::OutOfSupportedRange { .. })
        ));
        assert!(matches!(
            random_instance(3, 1, 0),
            Err(Error::OutOfSupportedRange { .. })
        ));
        assert!(matches!(
            random_instance(3, 7, 0),
            Err(Error::OutOfSupportedRange { .. })
        ));
    }
}
