//! Evaluate every bound family on a single (state, observable set) instance
//! and print them next to the variance sum they bound.
//!
//! ```bash
//! cargo run --release --example evaluate_bounds
//! ```

use varbounds::catalog::{ExampleFamily, ExampleSpec};
use varbounds::optimize::{compare_report, GridSpec};

fn main() -> varbounds::Result<()> {
    let point = ExampleSpec {
        family: ExampleFamily::Qubit,
        theta: std::f64::consts::FRAC_PI_4,
        phi: None,
    };
    let rho = point.state()?;
    let set = point.observables();

    println!("qubit family at theta = π/4, observables:");
    for obs in set.members() {
        println!("  {}", obs.label());
    }
    println!();

    let grid = GridSpec {
        refine: true,
        ..GridSpec::default()
    };
    let report = compare_report(&rho, &set, &grid, true)?;
    println!("{:<14} {:>14}  parameters", "family", "value");
    for eval in &report {
        let mut params = String::new();
        if let Some(alpha) = eval.alpha {
            params.push_str(&format!("alpha = {alpha:.6} "));
        }
        if let Some(beta) = eval.beta {
            params.push_str(&format!("beta = {beta} "));
        }
        if let Some(branch) = eval.branch {
            params.push_str(&format!("branch = ({}, {}) ", branch.x, branch.y));
        }
        if let Some(perm) = &eval.permutation {
            params.push_str(&format!("ordering = {perm:?}"));
        }
        println!(
            "{:<14} {:>14.10}  {params}",
            format!("{:?}", eval.family),
            eval.value
        );
    }
    Ok(())
}
