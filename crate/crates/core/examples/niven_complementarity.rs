use discrete_hilbert::rational::ratio;
use discrete_hilbert::{complementarity_conflict, niven_admissible, DiscretisedQubit};

fn main() -> discrete_hilbert::Result<()> {
    for (p, q) in [(0, 1), (1, 2), (-1, 2), (1, 3), (3, 4), (-1, 1)] {
        println!("cos θ = {p}/{q}: rational angle possible = {}", niven_admissible(&ratio(p, q))?);
    }
    // States whose x-basis description would need an irrational angle.
    let l = 8;
    let conflicted: Vec<u64> =
        (0..=l).filter(|&m| complementarity_conflict(&DiscretisedQubit::new(m, 0, l).unwrap())).collect();
    println!("L = {l}: m values in conflict with a complementary basis: {conflicted:?}");
    Ok(())
}
