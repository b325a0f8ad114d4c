//! Discretisation scale of an electron-spin qubit and of composites of it.

use discrete_hilbert::gravity::{scenario_report, PhysicalConstants, Scenario};

fn main() -> discrete_hilbert::Result<()> {
    let constants = PhysicalConstants::codata();
    for k in [1, 640, 1_000_000] {
        let report = scenario_report(&Scenario::electron_qubit().with_multiplier(k)?, &constants)?;
        println!("== {k} electron mass(es) ==\n{}\n", report.to_text(4));
    }
    Ok(())
}
