use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::DiscretisedQubit;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// The only rational values of `cos(rπ)` with `r` rational.
pub const NIVEN_COSINES: [(i64, i64); 5] = [(-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1)];

/// Whether the rational cosine `c` belongs to an angle that is a rational
/// multiple of `π`. By Niven's theorem this happens only for `c ∈ {0, ±1/2, ±1}`.
pub fn niven_admissible(c: &Rational) -> Result<bool> {
    if c.abs() > Rational::one() {
        return Err(Error::CosineOutOfRange(c.to_string()));
    }
    if c.is_zero() {
        return Ok(true);
    }
    let den = c.denom();
    Ok(*den == 1.into() || *den == 2.into())
}

/// Whether the wave-like reading of `q` (`cos φ = 2m/L − 1`) leaves the
/// which-way basis undefined, i.e. `φ` cannot also be a rational multiple of `π`.
pub fn complementarity_conflict(q: &DiscretisedQubit) -> bool {
    let l = BigInt::from(q.granularity());
    let cos_phi = Rational::new(BigInt::from(q.m()) * 2 - &l, l);
    // |2m/L - 1| <= 1 always holds for a valid qubit.
    !niven_admissible(&cos_phi).expect("cosine within [-1, 1]")
}
