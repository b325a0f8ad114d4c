//! `N`-qubit states as `N` correlated bit strings.
//!
//! A normalised `N`-qubit state is a binary tree of single-qubit angles:
//! node `k` carries `(θ_k, φ_k)` for the qubit conditioned on the branch
//! pattern that leads to it, and its children are `2k` (outcome `+1`) and
//! `2k + 1` (outcome `−1`). String `d` encodes all nodes at depth `d`. The
//! segment of node `k` is the set of positions (in index order) where
//! strings `1..d` follow the node's branch pattern, so its length is the
//! parent's `+1` or `−1` count inside the parent's segment. Each segment
//! holds the codeword `ζ^(⌊ℓ/2⌋ + n) 𝓘_ℓ(m)` quantised at its own length `ℓ`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::bitstring::{block_offset, BitString};
use crate::discretisation::quantise;
use crate::error::{Error, Result};

/// Dense amplitude vectors are only built up to this many qubits.
pub const MAX_DENSE_DEPTH: u32 = 24;

/// Deepest tree the codec accepts.
pub const MAX_TREE_DEPTH: u32 = 30;

fn node_count(depth: u32) -> usize {
    (1usize << depth) - 1
}

fn check_depth(depth: u32, max: u32) -> Result<()> {
    if depth == 0 || depth > max {
        return Err(Error::DepthOutOfRange(depth));
    }
    Ok(())
}

/// Continuum angles `(θ_k, φ_k)` for every node `k = 1 … 2^N − 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleTree {
    depth: u32,
    nodes: Vec<(f64, f64)>,
}

impl AngleTree {
    /// `nodes[k − 1]` holds `(θ_k, φ_k)`.
    pub fn new(depth: u32, nodes: Vec<(f64, f64)>) -> Result<Self> {
        check_depth(depth, MAX_TREE_DEPTH)?;
        let expected = node_count(depth);
        if nodes.len() != expected {
            return Err(Error::TreeShape { expected, got: nodes.len() });
        }
        Ok(Self { depth, nodes })
    }

    /// Every node set to the same angles.
    pub fn uniform(depth: u32, theta: f64, phi: f64) -> Result<Self> {
        check_depth(depth, MAX_TREE_DEPTH)?;
        Ok(Self { depth, nodes: vec![(theta, phi); node_count(depth)] })
    }

    /// Random tree with `cos²(θ/2)` and `φ/2π` uniform on `[0, 1)` per node,
    /// drawn in node order, `θ` before `φ`.
    pub fn random<R: Rng + ?Sized>(depth: u32, rng: &mut R) -> Result<Self> {
        check_depth(depth, MAX_TREE_DEPTH)?;
        let nodes = (0..node_count(depth))
            .map(|_| {
                let weight: f64 = rng.random();
                let turns: f64 = rng.random();
                (2.0 * weight.sqrt().acos(), turns * TAU)
            })
            .collect();
        Ok(Self { depth, nodes })
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// `(θ_k, φ_k)` for node `k ≥ 1`.
    pub fn node(&self, k: usize) -> (f64, f64) {
        self.nodes[k - 1]
    }

    /// The continuum state the tree describes.
    pub fn amplitudes(&self) -> Result<StateVector> {
        check_depth(self.depth, MAX_DENSE_DEPTH)?;
        Ok(expand(self.depth, |k| {
            let (theta, phi) = self.nodes[k - 1];
            branch_factors((theta / 2.0).cos(), (theta / 2.0).sin(), phi)
        }))
    }
}

/// Quantised data of one tree node: `m` of `len` segment entries are `+1`,
/// and the segment is cyclically offset by `n`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct NodeState {
    pub m: u64,
    pub n: u64,
    pub len: u64,
}

impl NodeState {
    pub fn is_degenerate(&self) -> bool {
        self.m == 0 || self.m == self.len
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NestedState {
    depth: u32,
    #[serde(rename = "L")]
    l: u64,
    nodes: Vec<NodeState>,
}

impl NestedState {
    /// Validates segment bookkeeping: `ℓ₁ = L`, `ℓ_2k = m_k`,
    /// `ℓ_2k+1 = ℓ_k − m_k`, `m_k ≤ ℓ_k` and `n_k < max(ℓ_k, 1)`.
    pub fn new(depth: u32, l: u64, nodes: Vec<NodeState>) -> Result<Self> {
        check_depth(depth, MAX_TREE_DEPTH)?;
        let expected = node_count(depth);
        if nodes.len() != expected {
            return Err(Error::TreeShape { expected, got: nodes.len() });
        }
        for (idx, node) in nodes.iter().enumerate() {
            let k = idx + 1;
            let want_len = if k == 1 {
                l
            } else {
                let parent = nodes[k / 2 - 1];
                if k % 2 == 0 { parent.m } else { parent.len - parent.m }
            };
            if node.len != want_len || node.m > node.len || node.n >= node.len.max(1) {
                return Err(Error::InvalidQubit(format!("node {k}: {node:?}")));
            }
        }
        Ok(Self { depth, l, nodes })
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Granularity `L` of every string.
    pub fn granularity(&self) -> u64 {
        self.l
    }

    /// Node `k ≥ 1`.
    pub fn node(&self, k: usize) -> NodeState {
        self.nodes[k - 1]
    }

    pub fn nodes(&self) -> &[NodeState] {
        &self.nodes
    }

    /// Shortest segment anywhere in the tree.
    pub fn min_segment_len(&self) -> u64 {
        self.nodes.iter().map(|n| n.len).min().unwrap_or(self.l)
    }
}

/// Amplitudes `α_b` in the basis order `|1,…,1⟩, |1,…,1,−1⟩, …`: bit `d`
/// of `b`, counted from the most significant, is `0` for outcome `+1` of qubit `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<Complex64>,
}

impl StateVector {
    pub const NORM_TOLERANCE: f64 = 1e-12;

    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        let sv = Self { amps };
        if !sv.amps.len().is_power_of_two() {
            return Err(Error::DimensionMismatch { left: sv.amps.len(), right: sv.amps.len().next_power_of_two() });
        }
        let norm = sv.norm_sqr();
        if (norm - 1.0).abs() > Self::NORM_TOLERANCE {
            return Err(Error::InvalidQubit(format!("state norm² = {norm}")));
        }
        Ok(sv)
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn num_qubits(&self) -> u32 {
        self.amps.len().trailing_zeros()
    }
}

fn branch_factors(cos_half: f64, sin_half: f64, phi: f64) -> (Complex64, Complex64) {
    (Complex64::new(cos_half, 0.0), Complex64::from_polar(sin_half, phi))
}

/// Breadth-first product of branch factors down the tree.
fn expand(depth: u32, factors: impl Fn(usize) -> (Complex64, Complex64)) -> StateVector {
    let mut amps = vec![Complex64::new(1.0, 0.0)];
    for d in 0..depth {
        let first = 1usize << d;
        let mut next = Vec::with_capacity(amps.len() * 2);
        for (idx, &a) in amps.iter().enumerate() {
            let (up, down) = factors(first + idx);
            next.push(a * up);
            next.push(a * down);
        }
        amps = next;
    }
    StateVector { amps }
}

/// Positions of each depth-`d` segment, in index order. `node_of[i]` is the
/// node id of position `i` at that depth.
fn segments(node_of: &[usize], depth: u32) -> Vec<Vec<usize>> {
    let first = 1usize << (depth - 1);
    let mut buckets = vec![Vec::new(); first];
    for (i, &k) in node_of.iter().enumerate() {
        buckets[k - first].push(i);
    }
    buckets
}

fn descend(node_of: &mut [usize], string: &[i8]) {
    for (k, &e) in node_of.iter_mut().zip(string) {
        *k = 2 * *k + usize::from(e == -1);
    }
}

/// Encodes `tree` as `N` strings of even length `l` under the canonical ξ.
///
/// Empty segments (`ℓ = 0`) encode nothing, single-entry segments carry a
/// classical bit, and degenerate segments (`m ∈ {0, ℓ}`) record `n = 0`
/// because their phase leaves no trace in the string.
pub fn encode_nested(tree: &AngleTree, l: u64) -> Result<(Vec<BitString>, NestedState)> {
    let len = usize::try_from(l).map_err(|_| Error::OddLength(usize::MAX))?;
    if len == 0 || len % 2 != 0 {
        return Err(Error::OddLength(len));
    }
    let depth = tree.depth;
    let mut node_of = vec![1usize; len];
    let mut nodes = vec![NodeState::default(); node_count(depth)];
    let mut strings = Vec::with_capacity(depth as usize);

    for d in 1..=depth {
        let first = 1usize << (d - 1);
        let mut out = vec![0i8; len];
        for (offset, positions) in segments(&node_of, d).into_iter().enumerate() {
            let k = first + offset;
            let seg_len = positions.len();
            if seg_len == 0 {
                continue;
            }
            let (theta, phi) = tree.node(k);
            let q = quantise(theta, phi, seg_len as u64)?;
            let m = q.m() as usize;
            let n = if m == 0 || m == seg_len { 0 } else { q.n() as usize };
            let shift = seg_len / 2 + n;
            for (j, &pos) in positions.iter().enumerate() {
                out[pos] = if (j + shift) % seg_len < m { 1 } else { -1 };
            }
            nodes[k - 1] = NodeState { m: m as u64, n: n as u64, len: seg_len as u64 };
        }
        descend(&mut node_of, &out);
        strings.push(BitString::from_entries_unchecked(out));
    }
    let state = NestedState { depth, l, nodes };
    debug_assert!(NestedState::new(depth, l, state.nodes.clone()).is_ok());
    Ok((strings, state))
}

/// Decoded nested state plus the ids of degenerate nodes (`m ∈ {0, ℓ}`,
/// including empty segments), whose phase is reported as 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NestedDecoded {
    pub state: NestedState,
    pub degenerate: Vec<usize>,
}

/// Inverse of [`encode_nested`]: conditional counting per segment plus
/// cyclic-offset location.
pub fn decode_nested(strings: &[BitString]) -> Result<NestedDecoded> {
    let depth = u32::try_from(strings.len()).map_err(|_| Error::DepthOutOfRange(u32::MAX))?;
    check_depth(depth, MAX_TREE_DEPTH)?;
    let len = strings[0].len();
    if let Some(s) = strings.iter().find(|s| s.len() != len) {
        return Err(Error::LengthMismatch { left: len, right: s.len() });
    }
    if !len.is_multiple_of(2) {
        return Err(Error::OddLength(len));
    }
    let mut node_of = vec![1usize; len];
    let mut nodes = vec![NodeState::default(); node_count(depth)];
    let mut degenerate = Vec::new();

    for (d, string) in (1..=depth).zip(strings) {
        let first = 1usize << (d - 1);
        let entries = string.entries();
        for (offset, positions) in segments(&node_of, d).into_iter().enumerate() {
            let k = first + offset;
            let seg: Vec<i8> = positions.iter().map(|&p| entries[p]).collect();
            let seg_len = seg.len();
            let m = seg.iter().filter(|&&e| e == 1).count();
            let n = if m == 0 || m == seg_len {
                degenerate.push(k);
                0
            } else {
                let (_, shift) = block_offset(&seg)?;
                (shift + seg_len - seg_len / 2) % seg_len
            };
            nodes[k - 1] = NodeState { m: m as u64, n: n as u64, len: seg_len as u64 };
        }
        descend(&mut node_of, entries);
    }
    Ok(NestedDecoded { state: NestedState { depth, l: len as u64, nodes }, degenerate })
}

/// Dense amplitudes of a quantised state; node `k` contributes
/// `cos(θ_k/2) = √(m/ℓ)`, `e^{iφ_k} sin(θ_k/2)` with `φ_k = 2πn/ℓ`, and
/// empty segments contribute zero.
pub fn amplitudes(state: &NestedState) -> Result<StateVector> {
    check_depth(state.depth, MAX_DENSE_DEPTH)?;
    Ok(expand(state.depth, |k| {
        let node = state.nodes[k - 1];
        if node.len == 0 {
            return (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        }
        let len = node.len as f64;
        let cos_half = (node.m as f64 / len).sqrt();
        let sin_half = ((node.len - node.m) as f64 / len).sqrt();
        branch_factors(cos_half, sin_half, TAU * node.n as f64 / len)
    }))
}

/// `|⟨a|b⟩|²`.
pub fn fidelity(a: &StateVector, b: &StateVector) -> Result<f64> {
    if a.amps.len() != b.amps.len() {
        return Err(Error::DimensionMismatch { left: a.amps.len(), right: b.amps.len() });
    }
    let overlap: Complex64 = a.amps.iter().zip(&b.amps).map(|(x, y)| x.conj() * y).sum();
    Ok(overlap.norm_sqr().min(1.0))
}
