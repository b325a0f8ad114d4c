//! Quaternions and Pauli operators as signed permutations of bit strings.

use discrete_hilbert::signed_perm::{
    make_j, make_pauli_x, make_pauli_y, make_pauli_z, self_similar_split, verify_quaternion,
    verify_spin_identities,
};
use discrete_hilbert::{iota, SignedPermutation};

fn show(name: &str, m: &SignedPermutation) {
    println!("{name}:");
    for row in m.dense() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
        println!("  [{}]", cells.join(" "));
    }
}

fn main() -> discrete_hilbert::Result<()> {
    let j = make_j(4)?;
    show("J_4", &j);
    show("J_4²", &j.compose(&j)?);

    let equator = iota(8, 4)?;
    for (name, op) in [("σx", make_pauli_x(8)?), ("σy", make_pauli_y(8)?), ("σz", make_pauli_z(8)?)] {
        println!("{name} {equator} = {}", op.apply(&equator)?);
    }

    for l in [8, 64, 1024] {
        let spin = verify_spin_identities(l)?;
        println!(
            "L = {l:>4}: quaternion {}, spin {:?}, split {}",
            verify_quaternion(l)?,
            spin.checks.iter().map(|c| (c.name, c.exact, c.mod_xi)).collect::<Vec<_>>(),
            self_similar_split(l)?.exact
        );
    }
    Ok(())
}
