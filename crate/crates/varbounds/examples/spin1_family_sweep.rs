//! Sweep the spin-1 pure-state family over θ ∈ [0, π] at fixed φ = π/2,
//! with the permutation-maximized bound included.
//!
//! ```bash
//! cargo run --release --example spin1_family_sweep
//! ```

use varbounds::catalog::ExampleFamily;
use varbounds::optimize::GridSpec;
use varbounds::runner::{run_sweep, SweepSpec};

fn main() -> varbounds::Result<()> {
    let mut spec = SweepSpec::over_default_range(ExampleFamily::SpinOne, 61);
    spec.phi = Some(std::f64::consts::FRAC_PI_2);
    spec.include_permutations = true;
    let output = std::env::temp_dir().join("spin1_family_sweep.csv");
    let result = run_sweep(&spec, &GridSpec::default(), &output)?;
    println!("wrote {} rows to {}", result.rows.len(), output.display());

    println!(
        "\n{:>6} {:>12} {:>12} {:>12} {:>12}",
        "theta", "sum", "lb1_opt", "lb1_pi_opt", "lb2_opt"
    );
    for row in result.rows.iter().step_by(10) {
        println!(
            "{:>6.3} {:>12.8} {:>12.8} {:>12.8} {:>12.8}",
            row.theta,
            row.sum,
            row.lb1_opt,
            row.lb1_pi_opt.unwrap(),
            row.lb2_opt,
        );
    }
    Ok(())
}
