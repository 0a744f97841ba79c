//! Sweep the two-qubit isotropic family over the mixing parameter
//! θ ∈ [0, 1], reporting the fixed-weight bound at α = 5 alongside the
//! optimized ones.
//!
//! ```bash
//! cargo run --release --example isotropic_family_sweep
//! ```

use varbounds::catalog::ExampleFamily;
use varbounds::optimize::GridSpec;
use varbounds::runner::{run_sweep, SweepSpec};

fn main() -> varbounds::Result<()> {
    let mut spec = SweepSpec::over_default_range(ExampleFamily::Isotropic, 101);
    spec.alpha_fixed = Some(5.0);
    let output = std::env::temp_dir().join("isotropic_family_sweep.csv");
    let result = run_sweep(&spec, &GridSpec::default(), &output)?;
    println!("wrote {} rows to {}", result.rows.len(), output.display());

    println!(
        "\n{:>6} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "theta", "sum", "song", "zhang", "lb1_opt", "lb1(5)"
    );
    for row in result.rows.iter().step_by(20) {
        println!(
            "{:>6.2} {:>12.8} {:>12.8} {:>12.8} {:>12.8} {:>12.8}",
            row.theta,
            row.sum,
            row.song,
            row.zhang,
            row.lb1_opt,
            row.lb1_fixed.unwrap()
        );
    }
    Ok(())
}
