//! Variance-based sum uncertainty lower bounds for `N` observables on
//! finite-dimensional quantum states.
//!
//! The crate evaluates, optimizes and cross-checks a family of lower bounds
//! on `Σ_i Δ²_ρ(A_i)` for arbitrary Hermitian observables `A_i` and density
//! matrices `ρ`:
//!
//! * the squared-sum bound of [`bounds::song_bound`],
//! * the sign-branch bound of [`bounds::zhang_bound`],
//! * a one-parameter family [`bounds::lb1`] with weight `α ≥ 0`, optionally
//!   maximized over observable orderings ([`bounds::lb1_permuted`]),
//! * a two-parameter family [`bounds::thm2_bounds`] / [`bounds::lb2`] with
//!   weights `α, β > 0`.
//!
//! [`optimize`] searches the free weights on a log grid (optionally refined
//! by golden section), [`catalog`] builds the worked example states and
//! seeded random ensembles, and [`runner`] drives CSV parameter sweeps and
//! JSON validity audits — the same entry points the `varbounds` binary uses.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --release --example evaluate_bounds      # all bounds, one instance
//! cargo run --release --example optimize_weight      # grid + refinement search
//! cargo run --release --example permutation_search   # ordering-maximized bound
//! cargo run --release --example variance_cross_check # trace vs vectorization
//! cargo run --release --example qubit_family_sweep   # Bloch-circle sweep CSV
//! cargo run --release --example isotropic_family_sweep
//! cargo run --release --example spin1_family_sweep
//! cargo run --release --example validity_audit       # random-ensemble audit
//! ```
//!
//! Evaluating every bound on one instance:
//!
//! ```
//! use varbounds::catalog::{example_set, ExampleFamily, ExampleSpec};
//! use varbounds::optimize::{compare_report, GridSpec};
//!
//! let point = ExampleSpec { family: ExampleFamily::Qubit, theta: 0.0, phi: None };
//! let rho = point.state()?;
//! let set = example_set(ExampleFamily::Qubit);
//! let report = compare_report(&rho, &set, &GridSpec::default(), false)?;
//! assert!((report[0].value - 4.25).abs() < 1e-12); // Σ Δ²(A_i)
//! # Ok::<(), varbounds::Error>(())
//! ```

pub mod bounds;
pub mod catalog;
pub mod error;
pub mod linalg;
pub mod optimize;
pub mod runner;
pub mod variance;

pub use bounds::{BoundEvaluation, BoundFamily, BranchChoice, Thm2Member};
pub use error::{Error, Result};
pub use linalg::{CMatrix, CVector, DensityMatrix, Observable, ObservableSet};
pub use optimize::{GridSpec, OptimizationResult};
pub use variance::VarianceValue;
