//! Cross-check the two variance routes on random instances: the trace
//! formula `Tr(ρA²) − (Tr ρA)²` against the vectorization route
//! `‖(I ⊗ δA)·vec(√ρ)‖²`.
//!
//! ```bash
//! cargo run --release --example variance_cross_check
//! ```

use varbounds::catalog::random_instance;
use varbounds::variance::{variance, variance_via_vectorization};

fn main() -> varbounds::Result<()> {
    let mut worst: f64 = 0.0;
    let mut checked = 0u32;
    for trial in 0..200u64 {
        let dim = 2 + (trial as usize) % 3;
        let (rho, set) = random_instance(dim, 3, trial)?;
        for obs in set.members() {
            let direct = variance(&rho, obs)?.value();
            let via_vec = variance_via_vectorization(&rho, obs)?.value();
            worst = worst.max((direct - via_vec).abs());
            checked += 1;
        }
    }
    println!("compared {checked} variances across 200 random instances");
    println!("worst |trace route − vectorization route| = {worst:.3e}");
    assert!(worst <= 1e-9);
    println!("routes agree within 1e-9");
    Ok(())
}
