use discrete_hilbert::capacity::floor_log2;
use discrete_hilbert::{capacity_deficient, dof_count, n_max};
use num_bigint::BigUint;

fn main() {
    let sixteen = BigUint::from(16u32);
    println!(" N  2^(N+1)-2  16N  fits");
    for n in 1..=7 {
        println!("{n:>2} {:>10} {:>4}  {}", dof_count(n), 16 * n, !capacity_deficient(n, &sixteen));
    }
    println!();
    println!("{:>8} {:>12} {:>6}", "L", "floor log2 L", "n_max");
    for e in [1u64, 4, 10, 20, 64, 100, 640] {
        let l = BigUint::from(1u32) << e;
        println!("{:>8} {:>12} {:>6}", format!("2^{e}"), floor_log2(&l), n_max(&l));
    }
}
