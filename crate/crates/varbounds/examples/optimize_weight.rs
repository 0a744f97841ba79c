//! Search the free weight of the one-parameter bound on a log grid, then
//! refine by golden section, and show the α ↔ 1/α symmetry of the optimum.
//!
//! ```bash
//! cargo run --release --example optimize_weight
//! ```

use varbounds::bounds::{lb1, zhang_bound};
use varbounds::catalog::{ExampleFamily, ExampleSpec};
use varbounds::optimize::{optimize_lb1, GridSpec};

fn main() -> varbounds::Result<()> {
    let point = ExampleSpec {
        family: ExampleFamily::Qubit,
        theta: std::f64::consts::FRAC_PI_4,
        phi: None,
    };
    let rho = point.state()?;
    let set = point.observables();

    let coarse = GridSpec {
        min_exponent: -6,
        max_exponent: 6,
        points_per_octave: 4,
        refine: false,
    };
    let refined = GridSpec {
        refine: true,
        ..coarse
    };

    let base = optimize_lb1(&rho, &set, &coarse)?;
    let best = optimize_lb1(&rho, &set, &refined)?;
    let zhang = zhang_bound(&rho, &set)?.value;

    println!(
        "coarse grid : value {:.12} after {} evaluations",
        base.best.value, base.evaluations
    );
    println!(
        "refined     : value {:.12} after {} evaluations",
        best.best.value, best.evaluations
    );
    println!("equal-weight reference (always on the grid): {zhang:.12}");

    let alpha = best.best.alpha.expect("optimizer records alpha");
    let mirrored = lb1(&rho, &set, 1.0 / alpha)?.value;
    println!("best alpha  : {alpha:.8}");
    println!("at 1/alpha  : {mirrored:.12} (inversion symmetry)");
    Ok(())
}
