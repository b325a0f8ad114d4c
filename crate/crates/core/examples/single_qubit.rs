//! Quantise a Bloch-sphere direction onto the rational grid and watch it
//! coarsen towards the classical limit.

use std::f64::consts::PI;

use discrete_hilbert::{coarsen, phi_of, quantise, theta_of};

fn main() -> discrete_hilbert::Result<()> {
    let (theta, phi) = (PI / 3.0, 1.0);
    let mut q = quantise(theta, phi, 1 << 12)?;
    println!("θ = {theta:.6}, φ = {phi:.6}");
    for l in [4096, 256, 16, 4, 2, 1] {
        q = coarsen(&q, l)?;
        println!("{:<22} θ ≈ {:.6}  φ ≈ {:.6}", q.to_string(), theta_of(&q), phi_of(&q));
    }
    Ok(())
}
