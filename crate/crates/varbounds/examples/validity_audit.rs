//! Audit every bound family against the variance sum on a seeded random
//! ensemble of (state, observable set) instances.
//!
//! ```bash
//! cargo run --release --example validity_audit
//! ```

use varbounds::optimize::GridSpec;
use varbounds::runner::{run_audit, AuditConfig};

fn main() -> varbounds::Result<()> {
    let config = AuditConfig {
        dims: vec![2, 3, 4],
        n_obs: vec![2, 3, 4],
        trials: 200,
        seed: 20240901,
        grid: GridSpec::default(),
    };
    let output = std::env::temp_dir().join("validity_audit.json");
    let report = run_audit(&config, &output)?;

    println!("trials       : {}", report.trials);
    println!("violations   : {}", report.violations);
    println!(
        "worst margin : {:.3e} (min of sum − bound)",
        report.worst_margin
    );
    println!("report       : {}", output.display());
    assert_eq!(report.violations, 0);
    Ok(())
}
