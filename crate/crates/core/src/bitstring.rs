//! Length-`L` strings of ±1 entries and the codec between them and
//! discretised qubits.
//!
//! A qubit `(m, n, L)` is the block string `𝓘_L(m)` (first `m` entries `+1`,
//! the rest `−1`) cyclically shifted by `L/2 + n`. The Born weight is the
//! fraction of `+1` entries and the phase is the cyclic offset. Any global
//! permutation ξ of positions leaves the physical content unchanged; the
//! codec fixes ξ to the identity and [`equivalent_mod_xi`] compares families
//! of strings up to a shared ξ.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::discretisation::DiscretisedQubit;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A non-empty sequence of `+1`/`−1` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitString(Vec<i8>);

impl BitString {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyBitString);
        }
        if let Some(&bad) = entries.iter().find(|&&e| e != 1 && e != -1) {
            return Err(Error::InvalidEntry(bad.into()));
        }
        Ok(Self(entries))
    }

    /// Caller guarantees every entry is ±1 and the vector is non-empty.
    pub(crate) fn from_entries_unchecked(entries: Vec<i8>) -> Self {
        debug_assert!(!entries.is_empty() && entries.iter().all(|&e| e == 1 || e == -1));
        Self(entries)
    }

    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        assert!(len > 0);
        Self((0..len).map(|_| if rng.random::<bool>() { 1 } else { -1 }).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&e| e == 1).count()
    }

    /// Entry-wise negation, `−{a₁, …, a_L}`.
    pub fn negate(&self) -> Self {
        Self(self.0.iter().map(|&e| -e).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut entries = self.0.clone();
        entries.extend_from_slice(&other.0);
        Self(entries)
    }

    /// Text form with a length header, e.g. `4:--++`.
    pub fn to_text(&self) -> String {
        format!("{}:{}", self.len(), self)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&e| if e == 1 { '+' } else { '-' }).collect();
        f.write_str(&s)
    }
}

/// Accepts `--++` or the headed form `4:--++`.
impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (declared, body) = match s.split_once(':') {
            Some((len, body)) => {
                let len: usize = len.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
                (Some(len), body)
            }
            None => (None, s),
        };
        let entries = body
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(Error::Parse(s.to_string())),
            })
            .collect::<Result<Vec<i8>>>()?;
        if let Some(len) = declared {
            if len != entries.len() {
                return Err(Error::LengthMismatch { left: len, right: entries.len() });
            }
        }
        BitString::new(entries)
    }
}

impl Serialize for BitString {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A bijection on positions `0..L`; applying it gathers `out[i] = s[map[i]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; map.len()];
        for &j in &map {
            if j >= map.len() || seen[j] {
                return Err(Error::NotBijective(format!("index {j} repeated or out of range")));
            }
            seen[j] = true;
        }
        Ok(Self { map })
    }

    pub fn identity(len: usize) -> Self {
        Self { map: (0..len).collect() }
    }

    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        let mut map: Vec<usize> = (0..len).collect();
        map.shuffle(rng);
        Self { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, s: &BitString) -> Result<BitString> {
        if s.len() != self.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: s.len() });
        }
        Ok(BitString(self.map.iter().map(|&j| s.0[j]).collect()))
    }
}

/// `𝓘_L(m)`: `m` leading `+1` entries followed by `L − m` entries `−1`.
pub fn iota(l: usize, m: usize) -> Result<BitString> {
    if l == 0 {
        return Err(Error::EmptyBitString);
    }
    if m > l {
        return Err(Error::WeightOutOfRange { m: m as u64, l: l as u64 });
    }
    let mut entries = vec![-1i8; l];
    entries[..m].fill(1);
    Ok(BitString(entries))
}

/// `ζ^k`, where `ζ{a₁, a₂, …, a_L} = {a₂, …, a_L, a₁}`; `k` is taken mod `L`.
pub fn cyc(s: &BitString, k: i64) -> BitString {
    let shift = k.rem_euclid(s.len() as i64) as usize;
    let mut entries = s.0.clone();
    entries.rotate_left(shift);
    BitString(entries)
}

/// The codeword `ζ^(L/2 + n) 𝓘_L(m)` under the canonical ξ = identity.
pub fn encode(q: &DiscretisedQubit) -> Result<BitString> {
    let l = usize::try_from(q.granularity()).map_err(|_| Error::InvalidQubit(q.to_string()))?;
    if l % 2 != 0 {
        return Err(Error::OddLength(l));
    }
    let block = iota(l, q.m() as usize)?;
    Ok(cyc(&block, (l / 2) as i64 + q.n() as i64))
}

/// Result of [`decode`]. `degenerate` marks the eigenstates `m ∈ {0, L}`,
/// whose phase cannot be read off the string and is reported as `n = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Decoded {
    pub qubit: DiscretisedQubit,
    pub degenerate: bool,
}

/// Cyclic offset `k` with `s = ζ^k 𝓘_ℓ(m)`, for `0 < m < ℓ`.
pub(crate) fn block_offset(entries: &[i8]) -> Result<(usize, usize)> {
    let len = entries.len();
    let m = entries.iter().filter(|&&e| e == 1).count();
    debug_assert!(0 < m && m < len);
    // The block of +1 entries starts right after a -1.
    let start = (0..len)
        .find(|&i| entries[i] == 1 && entries[(i + len - 1) % len] == -1)
        .ok_or(Error::NotCodeword)?;
    let contiguous = (0..len).all(|j| {
        let expected = if j < m { 1 } else { -1 };
        entries[(start + j) % len] == expected
    });
    if !contiguous {
        return Err(Error::NotCodeword);
    }
    Ok((m, (len - start) % len))
}

/// Inverse of [`encode`] for the canonical ξ.
pub fn decode(s: &BitString) -> Result<Decoded> {
    let l = s.len();
    if !l.is_multiple_of(2) {
        return Err(Error::OddLength(l));
    }
    let m = s.ones();
    if m == 0 || m == l {
        return Ok(Decoded { qubit: DiscretisedQubit::new(m as u64, 0, l as u64)?, degenerate: true });
    }
    let (_, offset) = block_offset(&s.0)?;
    let n = (offset + l - l / 2) % l;
    Ok(Decoded { qubit: DiscretisedQubit::new(m as u64, n as u64, l as u64)?, degenerate: false })
}

/// Exact frequency of `+1` entries.
pub fn born_frequency(s: &BitString) -> Rational {
    Rational::new(BigInt::from(s.ones()), BigInt::from(s.len()))
}

/// Exact `(μ, σ²)` with `μ = (2m − L)/L` and `σ² = 1 − μ²`.
pub fn moments_exact(s: &BitString) -> (Rational, Rational) {
    let l = BigInt::from(s.len());
    let mu = Rational::new(BigInt::from(2 * s.ones()) - &l, l);
    let var = Rational::from_integer(1.into()) - &mu * &mu;
    (mu, var)
}

/// Mean and standard deviation of the entries, `cos θ` and `|sin θ|` of the state.
pub fn mean_std(s: &BitString) -> (f64, f64) {
    let l = s.len() as f64;
    let mu = (2.0 * s.ones() as f64 - l) / l;
    let ones = s.ones() as f64;
    // σ² = 4m(L − m)/L², evaluated without cancellation.
    let sigma = 2.0 * (ones * (l - ones)).sqrt() / l;
    (mu, sigma)
}

/// Whether one position permutation ξ maps every string of `a` onto the
/// matching string of `b`: the multisets of position-columns must agree.
pub fn equivalent_mod_xi(a: &[BitString], b: &[BitString]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    let Some(first) = a.first() else {
        return Ok(true);
    };
    let l = first.len();
    for s in a.iter().chain(b) {
        if s.len() != l {
            return Err(Error::LengthMismatch { left: l, right: s.len() });
        }
    }
    let columns = |family: &[BitString]| {
        let mut cols: Vec<Vec<i8>> = (0..l).map(|i| family.iter().map(|s| s.0[i]).collect()).collect();
        cols.sort_unstable();
        cols
    };
    Ok(columns(a) == columns(b))
}
