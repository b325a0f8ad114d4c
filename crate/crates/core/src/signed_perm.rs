//! Complex units, quaternions and Pauli matrices as signed permutations of
//! bit strings.
//!
//! Every generator here is an `L × L` block matrix with exactly one `±1` per
//! row, so it is stored as a gather map plus a sign per output position and
//! applied in `O(L)`: `out[i] = signs[i] · s[map[i]]`. Dense matrices are
//! only produced on request, for cross-checking.

use serde::Serialize;

use crate::bitstring::{cyc, equivalent_mod_xi, iota, BitString};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    map: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(map: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        if map.len() != signs.len() {
            return Err(Error::LengthMismatch { left: map.len(), right: signs.len() });
        }
        let mut seen = vec![false; map.len()];
        for &j in &map {
            if j >= map.len() || seen[j] {
                return Err(Error::NotBijective(format!("index {j} repeated or out of range")));
            }
            seen[j] = true;
        }
        if let Some(&bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidEntry(bad.into()));
        }
        Ok(Self { map, signs })
    }

    /// `1_L`.
    pub fn identity(len: usize) -> Self {
        Self { map: (0..len).collect(), signs: vec![1; len] }
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

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn negate(&self) -> Self {
        Self { map: self.map.clone(), signs: self.signs.iter().map(|&s| -s).collect() }
    }

    pub fn apply(&self, s: &BitString) -> Result<BitString> {
        if s.len() != self.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: s.len() });
        }
        let src = s.entries();
        let out = self.map.iter().zip(&self.signs).map(|(&j, &sign)| sign * src[j]).collect();
        Ok(BitString::from_entries_unchecked(out))
    }

    /// The product `self · other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        let (map, signs) = self
            .map
            .iter()
            .zip(&self.signs)
            .map(|(&j, &sign)| (other.map[j], sign * other.signs[j]))
            .unzip();
        Ok(Self { map, signs })
    }

    /// Row-major dense matrix with entries in `{−1, 0, 1}`.
    pub fn dense(&self) -> Vec<Vec<i8>> {
        let len = self.len();
        self.map
            .iter()
            .zip(&self.signs)
            .map(|(&j, &sign)| {
                let mut row = vec![0i8; len];
                row[j] = sign;
                row
            })
            .collect()
    }

    /// `[[a, 0], [0, b]]`.
    fn diagonal_blocks(a: &Self, b: &Self) -> Self {
        let half = a.len();
        let map = a.map.iter().copied().chain(b.map.iter().map(|&j| j + half)).collect();
        let signs = a.signs.iter().chain(&b.signs).copied().collect();
        Self { map, signs }
    }

    /// `[[0, a], [b, 0]]`.
    fn off_diagonal_blocks(a: &Self, b: &Self) -> Self {
        let half = a.len();
        let map = a.map.iter().map(|&j| j + half).chain(b.map.iter().copied()).collect();
        let signs = a.signs.iter().chain(&b.signs).copied().collect();
        Self { map, signs }
    }
}

fn require_divisible(l: usize, divisor: usize) -> Result<()> {
    if l == 0 || !l.is_multiple_of(divisor) {
        return Err(Error::Divisibility { l, divisor });
    }
    Ok(())
}

/// `J_L = [[0, 1], [−1, 0]]`, a square root of `−1_L`. Needs `2 | L`.
pub fn make_j(l: usize) -> Result<SignedPermutation> {
    require_divisible(l, 2)?;
    let one = SignedPermutation::identity(l / 2);
    Ok(SignedPermutation::off_diagonal_blocks(&one, &one.negate()))
}

/// `I_L = [[J, 0], [0, −J]]` with `J = J_{L/2}`. Needs `4 | L`.
pub fn make_i(l: usize) -> Result<SignedPermutation> {
    require_divisible(l, 4)?;
    let j = make_j(l / 2)?;
    Ok(SignedPermutation::diagonal_blocks(&j, &j.negate()))
}

/// `K_L = [[0, J], [J, 0]]` with `J = J_{L/2}`. Needs `4 | L`.
pub fn make_k(l: usize) -> Result<SignedPermutation> {
    require_divisible(l, 4)?;
    let j = make_j(l / 2)?;
    Ok(SignedPermutation::off_diagonal_blocks(&j, &j))
}

/// The complex unit `i_L = [[J, 0], [0, J]]` with `J = J_{L/2}`. Needs `4 | L`.
pub fn make_ilittle(l: usize) -> Result<SignedPermutation> {
    require_divisible(l, 4)?;
    let j = make_j(l / 2)?;
    Ok(SignedPermutation::diagonal_blocks(&j, &j))
}

/// `σ_x(L) = [[0, 1], [1, 0]]`. Needs `2 | L`.
pub fn make_pauli_x(l: usize) -> Result<SignedPermutation> {
    require_divisible(l, 2)?;
    let one = SignedPermutation::identity(l / 2);
    Ok(SignedPermutation::off_diagonal_blocks(&one, &one))
}

/// `σ_y(L) = [[0, −J], [J, 0]]` with `J = J_{L/2}`. Needs `4 | L`.
pub fn make_pauli_y(l: usize) -> Result<SignedPermutation> {
    require_divisible(l, 4)?;
    let j = make_j(l / 2)?;
    Ok(SignedPermutation::off_diagonal_blocks(&j.negate(), &j))
}

/// `σ_z(L) = [[1, 0], [0, −1]]`. Needs `2 | L`.
pub fn make_pauli_z(l: usize) -> Result<SignedPermutation> {
    require_divisible(l, 2)?;
    let one = SignedPermutation::identity(l / 2);
    Ok(SignedPermutation::diagonal_blocks(&one, &one.negate()))
}

/// `I² = J² = K² = −1` and `I·J = K`, checked as exact operator equalities.
pub fn verify_quaternion(l: usize) -> Result<bool> {
    require_divisible(l, 4)?;
    let (i, j, k) = (make_i(l)?, make_j(l)?, make_k(l)?);
    let minus_one = SignedPermutation::identity(l).negate();
    Ok(i.compose(&i)? == minus_one
        && j.compose(&j)? == minus_one
        && k.compose(&k)? == minus_one
        && i.compose(&j)? == k)
}

/// One spinor/direction identity, checked both exactly (ξ = identity) and up to a global ξ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub exact: bool,
    pub mod_xi: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpinIdentityReport {
    pub l: usize,
    pub checks: Vec<IdentityCheck>,
}

impl SpinIdentityReport {
    /// The z and x identities hold exactly in the canonical frame; the y
    /// identity holds only modulo ξ (its two sides differ by a swap of the
    /// first two quarters).
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.mod_xi)
            && self.checks.iter().filter(|c| c.name != "y").all(|c| c.exact)
    }
}

fn compare(name: &'static str, lhs: &BitString, rhs: &BitString) -> Result<IdentityCheck> {
    Ok(IdentityCheck {
        name,
        exact: lhs == rhs,
        mod_xi: equivalent_mod_xi(std::slice::from_ref(lhs), std::slice::from_ref(rhs))?,
    })
}

/// The three axis states as Pauli images of the equator string `𝓘_L(L/2)`:
///
/// * z: `ζ^(L/2) 𝓘_L(L) = σ_z 𝓘_L(L/2)`
/// * x: `ζ^(L/2) 𝓘_L(L/2) = σ_x 𝓘_L(L/2)`
/// * y: `ζ^(3L/4) 𝓘_L(L/2) = σ_y 𝓘_L(L/2)`
pub fn verify_spin_identities(l: usize) -> Result<SpinIdentityReport> {
    require_divisible(l, 4)?;
    let half = l / 2;
    let equator = iota(l, half)?;
    let checks = vec![
        compare("z", &cyc(&iota(l, l)?, half as i64), &make_pauli_z(l)?.apply(&equator)?)?,
        compare("x", &cyc(&equator, half as i64), &make_pauli_x(l)?.apply(&equator)?)?,
        compare("y", &cyc(&equator, (3 * l / 4) as i64), &make_pauli_y(l)?.apply(&equator)?)?,
    ];
    Ok(SpinIdentityReport { l, checks })
}

/// Self-similar split of the x state:
/// `ζ^(L/2) 𝓘_L(L/2) = σ_x(L) ( σ_z(L/2) 𝓘_{L/2}(L/4) || −σ_z(L/2) 𝓘_{L/2}(L/4) )`.
pub fn self_similar_split(l: usize) -> Result<IdentityCheck> {
    require_divisible(l, 8)?;
    let half = l / 2;
    let lhs = cyc(&iota(l, half)?, half as i64);
    let inner = make_pauli_z(half)?.apply(&iota(half, half / 2)?)?;
    let rhs = make_pauli_x(l)?.apply(&inner.concat(&inner.negate()))?;
    compare("split", &lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn bits(v: &[i8]) -> BitString {
        BitString::new(v.to_vec()).unwrap()
    }

    fn dense_apply(m: &[Vec<i8>], s: &BitString) -> Vec<i8> {
        m.iter().map(|row| row.iter().zip(s.entries()).map(|(&a, &b)| a * b).sum()).collect()
    }

    fn generators(l: usize) -> Vec<SignedPermutation> {
        vec![
            make_j(l).unwrap(),
            make_i(l).unwrap(),
            make_k(l).unwrap(),
            make_ilittle(l).unwrap(),
            make_pauli_x(l).unwrap(),
            make_pauli_y(l).unwrap(),
            make_pauli_z(l).unwrap(),
        ]
    }

    #[test]
    fn j2_example() {
        let j = make_j(2).unwrap();
        assert_eq!(j.map(), &[1, 0]);
        assert_eq!(j.signs(), &[1, -1]);
        assert_eq!(j.apply(&bits(&[1, -1])).unwrap(), bits(&[-1, -1]));
        assert_eq!(j.apply(&bits(&[-1, 1])).unwrap(), bits(&[1, 1]));
    }

    #[test]
    fn apply_examples() {
        let s = bits(&[1, -1, -1, 1, 1]);
        assert_eq!(SignedPermutation::identity(5).apply(&s).unwrap(), s);
        let x = make_pauli_x(4).unwrap();
        assert_eq!(x.apply(&bits(&[1, 1, -1, -1])).unwrap(), bits(&[-1, -1, 1, 1]));
        assert!(x.apply(&s).is_err());
    }

    #[test]
    fn compose_examples() {
        let j = make_j(4).unwrap();
        assert_eq!(j.compose(&j).unwrap(), SignedPermutation::identity(4).negate());
        assert_eq!(j.compose(&SignedPermutation::identity(4)).unwrap(), j);
        assert_eq!(make_i(4).unwrap().compose(&j).unwrap(), make_k(4).unwrap());
        assert!(j.compose(&SignedPermutation::identity(2)).is_err());
    }

    #[test]
    fn generator_examples() {
        let z = make_pauli_z(4).unwrap().dense();
        let diag = [1, 1, -1, -1];
        for (r, row) in z.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                assert_eq!(v, if r == c { diag[r] } else { 0 });
            }
        }
        for l in [4, 8, 12, 16] {
            let il = make_ilittle(l).unwrap();
            assert_eq!(il.compose(&make_pauli_z(l).unwrap()).unwrap(), make_i(l).unwrap());
            assert_eq!(il.compose(&make_pauli_y(l).unwrap()).unwrap(), make_j(l).unwrap());
            assert_eq!(il.compose(&make_pauli_x(l).unwrap()).unwrap(), make_k(l).unwrap());
        }
    }

    #[test]
    fn divisibility_rules() {
        assert_eq!(make_j(3), Err(Error::Divisibility { l: 3, divisor: 2 }));
        assert!(make_j(6).is_ok() && make_pauli_x(6).is_ok() && make_pauli_z(6).is_ok());
        for f in [make_i, make_k, make_ilittle, make_pauli_y] {
            assert_eq!(f(6), Err(Error::Divisibility { l: 6, divisor: 4 }));
        }
        assert!(make_j(0).is_err());
        assert_eq!(verify_quaternion(6), Err(Error::Divisibility { l: 6, divisor: 4 }));
        assert!(verify_spin_identities(6).is_err());
        assert_eq!(self_similar_split(4), Err(Error::Divisibility { l: 4, divisor: 8 }));
    }

    #[test]
    fn constructor_validation() {
        assert!(SignedPermutation::new(vec![1, 0], vec![1, -1]).is_ok());
        assert!(SignedPermutation::new(vec![0, 0], vec![1, -1]).is_err());
        assert!(SignedPermutation::new(vec![1, 0], vec![1, 2]).is_err());
        assert!(SignedPermutation::new(vec![1, 0], vec![1]).is_err());
    }

    #[test]
    fn quaternion_identities() {
        assert!(verify_quaternion(4).unwrap());
        assert!(verify_quaternion(8).unwrap());
    }

    #[test]
    fn spin_identities_small() {
        let z = make_pauli_z(4).unwrap().apply(&bits(&[1, 1, -1, -1])).unwrap();
        assert_eq!(z, bits(&[1, 1, 1, 1]));
        assert_eq!(cyc(&iota(4, 4).unwrap(), 2), z);

        let report = verify_spin_identities(8).unwrap();
        assert!(report.holds());
        let y = &report.checks[2];
        assert!(!y.exact && y.mod_xi);
        assert!(report.checks[..2].iter().all(|c| c.exact));
    }

    #[test]
    fn sigma_y_differs_from_cyclic_form_by_quarter_swap() {
        let l = 8;
        let lhs = cyc(&iota(l, 4).unwrap(), 6);
        let rhs = make_pauli_y(l).unwrap().apply(&iota(l, 4).unwrap()).unwrap();
        assert_eq!(lhs, bits(&[-1, -1, 1, 1, 1, 1, -1, -1]));
        assert_eq!(rhs, bits(&[1, 1, -1, -1, 1, 1, -1, -1]));
    }

    #[test]
    fn split_identity() {
        assert!(self_similar_split(8).unwrap().exact);
        assert!(self_similar_split(16).unwrap().exact);
    }

    #[test]
    fn complex_unit_behaviour() {
        for l in (4..=64).step_by(4) {
            let il = make_ilittle(l).unwrap();
            let z = make_pauli_z(l).unwrap();
            assert_eq!(il.compose(&z).unwrap(), z.compose(&il).unwrap());
            assert_eq!(il.compose(&il).unwrap(), SignedPermutation::identity(l).negate());
            for p in [make_pauli_x(l).unwrap(), make_pauli_y(l).unwrap(), z.clone()] {
                assert_eq!(p.compose(&p).unwrap(), SignedPermutation::identity(l));
            }
        }
    }

    #[test]
    fn matches_dense_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for l in [4usize, 8, 12, 16] {
            for g in generators(l) {
                let dense = g.dense();
                let strings: Vec<BitString> = if l <= 12 {
                    (0..1u32 << l)
                        .map(|code| {
                            BitString::new((0..l).map(|b| if code >> b & 1 == 1 { 1 } else { -1 }).collect())
                                .unwrap()
                        })
                        .collect()
                } else {
                    (0..10_000).map(|_| BitString::random(l, &mut rng)).collect()
                };
                for s in &strings {
                    assert_eq!(g.apply(s).unwrap().entries(), dense_apply(&dense, s).as_slice());
                }
            }
        }
    }

    #[test]
    fn composition_is_associative_and_matches_sequential_application() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let l = 16;
        let gens = generators(l);
        for a in &gens {
            for b in &gens {
                let ab = a.compose(b).unwrap();
                for c in &gens {
                    assert_eq!(ab.compose(c).unwrap(), a.compose(&b.compose(c).unwrap()).unwrap());
                }
                let s = BitString::random(l, &mut rng);
                assert_eq!(ab.apply(&s).unwrap(), a.apply(&b.apply(&s).unwrap()).unwrap());
            }
        }
    }
}
