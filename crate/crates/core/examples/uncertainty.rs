use discrete_hilbert::{uncertainty_check, Direction};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut tightest = f64::INFINITY;
    for _ in 0..100_000 {
        let c = uncertainty_check(&Direction::sample(&mut rng));
        assert!(c.ok);
        tightest = tightest.min(c.lhs - c.rhs);
    }
    println!("100000 random directions satisfy σ′σ″ ≥ |μ|; smallest margin {tightest:.3e}");
    for d in [(0.0, 0.0, 1.0), (1.0, 0.0, 0.0), (0.6, 0.0, 0.8)] {
        let dir = Direction::new(d.0, d.1, d.2).unwrap();
        let c = uncertainty_check(&dir);
        println!("{d:?}: σ′σ″ = {:.4}, |μ| = {:.4}", c.lhs, c.rhs);
    }
}
