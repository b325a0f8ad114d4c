//! Fidelity of nested encodings at L = 1024 as the qubit count grows past capacity.
//!
//! Usage: `cargo run --release --example saturation [samples] [seed]`

use discrete_hilbert::saturation::to_csv;
use discrete_hilbert::{n_max, saturation_experiment};
use num_bigint::BigUint;

fn main() -> discrete_hilbert::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let samples = args.next().unwrap_or(200) as usize;
    let seed = args.next().unwrap_or(7);
    let l = 1024;
    eprintln!("L = {l}, capacity n_max = {}", n_max(&BigUint::from(l)));
    print!("{}", to_csv(&saturation_experiment(l, 1, 14, samples, seed)?));
    Ok(())
}
