//! A discretised complex Hilbert space for qubits.
//!
//! Qubit states are restricted to the rational grid `cos²(θ/2) = m/L`,
//! `φ = 2πn/L` for a positive integer granularity `L`. At that resolution a
//! state is exactly a length-`L` string of ±1 entries, complex structure and
//! the Pauli operators become signed permutations of those strings, and an
//! `N`-qubit state is `N` correlated strings. Since `N` strings hold only
//! `N·L` bits while the state needs `2^(N+1) − 2` real degrees of freedom,
//! there is a largest qubit count [`n_max`] that can be represented.
//!
//! The [`gravity`] module estimates `L` for a physical qubit from its
//! gravitational self-energy, and [`saturation`] measures how quickly
//! fidelity degrades as `N` approaches the capacity at desk-scale `L`.
//!
//! The crate's `examples/` directory has one runnable program per capability;
//! the `discrete-hilbert` binary wraps everything behind subcommands.

pub mod bitstring;
pub mod capacity;
pub mod cli;
pub mod discretisation;
mod error;
pub mod gravity;
pub mod nested;
pub mod rational;
pub mod saturation;
pub mod signed_perm;

pub use bitstring::{born_frequency, cyc, decode, encode, equivalent_mod_xi, iota, mean_std};
pub use bitstring::{BitString, Decoded, Permutation};
pub use capacity::{capacity_deficient, dof_count, n_max};
pub use discretisation::{
    coarsen, complementarity_conflict, niven_admissible, phi_of, quantise, theta_of,
    uncertainty_check, Direction, DiscretisedQubit, UncertaintyCheck,
};
pub use error::{Error, Result};
pub use nested::{amplitudes, decode_nested, encode_nested, fidelity};
pub use nested::{AngleTree, NestedDecoded, NestedState, NodeState, StateVector};
pub use rational::Rational;
pub use saturation::{saturation_experiment, SaturationRow};
pub use signed_perm::SignedPermutation;
