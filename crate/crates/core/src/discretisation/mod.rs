//! Single discretised qubits: the `(m, n, L)` grid, conversions to and from
//! Bloch angles, coarsening towards the classical limit, and the
//! number-theoretic checks built on top of the grid.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{Error, Result};

mod niven;
mod uncertainty;

pub use niven::{complementarity_conflict, niven_admissible, NIVEN_COSINES};
pub use uncertainty::{uncertainty_check, Direction, UncertaintyCheck, UNCERTAINTY_SLACK};

/// Half-integer ties are detected within this relative window in [`quantise`].
pub const TIE_WINDOW: f64 = 1e-9;

/// A qubit state on the rational grid `cos²(θ/2) = m/L`, `φ = 2πn/L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DiscretisedQubit {
    m: u64,
    n: u64,
    #[serde(rename = "L")]
    l: u64,
}

impl DiscretisedQubit {
    /// Builds a qubit, folding `n = L` onto `n = 0` (`φ = 2π` is `φ = 0`).
    pub fn new(m: u64, n: u64, l: u64) -> Result<Self> {
        if l == 0 {
            return Err(Error::ZeroGranularity);
        }
        if m > l {
            return Err(Error::InvalidQubit(format!("m = {m} exceeds L = {l}")));
        }
        if n > l {
            return Err(Error::InvalidQubit(format!("n = {n} exceeds L = {l}")));
        }
        Ok(Self { m, n: n % l, l })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Granularity `L`.
    pub fn granularity(&self) -> u64 {
        self.l
    }

    /// True for the two measurement eigenstates `m ∈ {0, L}`.
    pub fn is_eigenstate(&self) -> bool {
        self.m == 0 || self.m == self.l
    }
}

impl std::fmt::Display for DiscretisedQubit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "m={} n={} L={}", self.m, self.n, self.l)
    }
}

/// Polar angle `θ = 2·arccos(√(m/L))`, in `[0, π]`.
pub fn theta_of(q: &DiscretisedQubit) -> f64 {
    let weight = q.m as f64 / q.l as f64;
    2.0 * weight.sqrt().clamp(0.0, 1.0).acos()
}

/// Azimuth `φ = 2πn/L`, in `[0, 2π)`.
pub fn phi_of(q: &DiscretisedQubit) -> f64 {
    TAU * q.n as f64 / q.l as f64
}

/// Nearest integer with exact halves going down. Values within
/// [`TIE_WINDOW`] of a half-integer count as halves.
fn round_half_down(x: f64) -> f64 {
    let lower = x.floor();
    let frac = x - lower;
    let window = TIE_WINDOW * x.abs().max(1.0);
    if (frac - 0.5).abs() <= window || frac < 0.5 {
        lower
    } else {
        lower + 1.0
    }
}

/// `round_half_down(num / den)` in exact integer arithmetic.
fn div_round_half_down(num: u128, den: u128) -> u128 {
    let (q, r) = (num / den, num % den);
    if 2 * r > den {
        q + 1
    } else {
        q
    }
}

/// Snaps continuum angles onto the grid of granularity `l`.
///
/// `θ` is expected in `[0, π]`; `φ` is taken modulo `2π`.
pub fn quantise(theta: f64, phi: f64, l: u64) -> Result<DiscretisedQubit> {
    if l == 0 {
        return Err(Error::ZeroGranularity);
    }
    let lf = l as f64;
    let weight = (theta / 2.0).cos().powi(2);
    let m = round_half_down(lf * weight).clamp(0.0, lf) as u64;
    let turns = phi.rem_euclid(TAU) / TAU;
    let n = (round_half_down(lf * turns) as u64) % l;
    Ok(DiscretisedQubit { m, n, l })
}

/// State reduction: re-quantises `q` onto the coarser grid `l_new ≤ L`.
///
/// Equivalent to `quantise(theta_of(q), phi_of(q), l_new)`, evaluated on
/// the exact fractions `m/L` and `n/L` so that ties follow the
/// round-half-down rule without float noise. At `l_new = 1` the result is
/// one of the two measurement eigenstates.
pub fn coarsen(q: &DiscretisedQubit, l_new: u64) -> Result<DiscretisedQubit> {
    if l_new == 0 {
        return Err(Error::ZeroGranularity);
    }
    if l_new > q.l {
        return Err(Error::CoarsenUp { from: q.l, to: l_new });
    }
    let (l, target) = (q.l as u128, l_new as u128);
    let m = div_round_half_down(target * q.m as u128, l) as u64;
    let n = (div_round_half_down(target * q.n as u128, l) % target) as u64;
    Ok(DiscretisedQubit { m, n, l: l_new })
}
