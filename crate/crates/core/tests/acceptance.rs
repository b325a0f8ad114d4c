//! End-to-end acceptance checks. Runs without the libtest harness so every
//! criterion prints exactly one PASS/FAIL line; exits non-zero if any fail.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use discrete_hilbert::gravity::{scenario_report, PhysicalConstants, Scenario};
use discrete_hilbert::rational::ratio;
use discrete_hilbert::saturation::to_csv;
use discrete_hilbert::signed_perm::{
    make_i, make_ilittle, make_j, make_k, make_pauli_x, make_pauli_y, make_pauli_z, self_similar_split,
    verify_quaternion, verify_spin_identities,
};
use discrete_hilbert::*;
use num_bigint::BigUint;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Verdict {
    pass: bool,
    detail: String,
}

/// Collects sub-clause results; the criterion passes only if all do.
#[derive(Default)]
struct Clauses {
    failed: Vec<String>,
    notes: Vec<String>,
}

impl Clauses {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if ok {
            self.notes.push(what.into());
        } else {
            self.failed.push(what.into());
        }
    }

    fn verdict(self) -> Verdict {
        if self.failed.is_empty() {
            Verdict { pass: true, detail: self.notes.join("; ") }
        } else {
            let detail = format!("failed: {} | passed: {}", self.failed.join("; "), self.notes.join("; "));
            Verdict { pass: false, detail }
        }
    }
}

fn within(x: f64, lo: f64, hi: f64) -> bool {
    (lo..=hi).contains(&x)
}

fn capacity_table() -> Verdict {
    let mut c = Clauses::default();
    let sixteen = BigUint::from(16u32);
    c.check(n_max(&sixteen) == 5, format!("n_max(16) = {}", n_max(&sixteen)));
    c.check(!capacity_deficient(5, &sixteen), "capacity_deficient(5, 16) = false");
    c.check(capacity_deficient(6, &sixteen), "capacity_deficient(6, 16) = true");
    c.check(dof_count(3) == BigUint::from(14u32), format!("dof_count(3) = {}", dof_count(3)));
    c.check(dof_count(5) == BigUint::from(62u32), format!("dof_count(5) = {}", dof_count(5)));
    c.verdict()
}

fn electron_scenario() -> Verdict {
    let mut c = Clauses::default();
    let start = Instant::now();
    let r = scenario_report(&Scenario::electron_qubit(), &PhysicalConstants::codata()).unwrap();
    let elapsed = start.elapsed();
    let log_eg = rational::log10(&r.e_g);
    let log_tau = rational::log10(&r.tau_dp);
    c.check(within(log_eg, -184.5, -183.5), format!("log10 E_G = {log_eg:.3}"));
    c.check(within(log_tau, 149.0, 151.0), format!("log10 tau_DP = {log_tau:.3}"));
    c.check(within(r.log10_l, 192.0, 194.0), format!("log10 L = {:.3}", r.log10_l));
    c.check(within(r.log2_l, 637.0, 644.0), format!("log2 L = {:.2}", r.log2_l));
    c.check(r.n_max.abs_diff(640) <= 3, format!("n_max = {} (target 640 +- 3)", r.n_max));
    c.check(elapsed < Duration::from_secs(1), format!("runtime {elapsed:.2?}"));
    c.verdict()
}

fn composite_scenarios() -> Verdict {
    let mut c = Clauses::default();
    let constants = PhysicalConstants::codata();
    let r640 = scenario_report(&Scenario::electron_qubit().with_multiplier(640).unwrap(), &constants).unwrap();
    c.check(within(r640.log10_l, 161.0, 163.0), format!("x640 log10 L = {:.3}", r640.log10_l));
    c.check(r640.n_max.abs_diff(538) <= 3, format!("x640 n_max = {} (target 538 +- 3)", r640.n_max));
    let r1e6 = scenario_report(&Scenario::electron_qubit().with_multiplier(1_000_000).unwrap(), &constants).unwrap();
    let log_tau = rational::log10(&r1e6.tau_dp);
    c.check(within(log_tau, 83.0, 85.0), format!("x1e6 log10 tau_DP = {log_tau:.3}"));

    let exact = PhysicalConstants::codata().exact();
    let base = Scenario::electron_qubit();
    let tripled = Scenario::new(base.mass.clone(), &base.separation * ratio(3, 1), 1).unwrap();
    let e1 = scenario_report(&base, &exact).unwrap().e_g;
    let e3 = scenario_report(&tripled, &exact).unwrap().e_g;
    c.check(e3 / e1 == ratio(9, 1), "E_G(3b) / E_G(b) = 9 exactly");
    c.verdict()
}

fn algebra_suite() -> Verdict {
    let mut c = Clauses::default();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut mismatches = 0usize;
    let mut applied = 0usize;
    let mut identity_failures = Vec::new();
    for l in (8..=128).step_by(8) {
        let quaternion = verify_quaternion(l).unwrap();
        let spin = verify_spin_identities(l).unwrap().holds();
        let split = self_similar_split(l).unwrap().exact;
        if !(quaternion && spin && split) {
            identity_failures.push(format!("L = {l}: quaternion {quaternion}, spin {spin}, split {split}"));
        }
        let fast = [
            make_j(l).unwrap(),
            make_i(l).unwrap(),
            make_k(l).unwrap(),
            make_ilittle(l).unwrap(),
            make_pauli_x(l).unwrap(),
            make_pauli_y(l).unwrap(),
            make_pauli_z(l).unwrap(),
        ];
        let dense = common::dense_generators(l);
        // 10^4 random strings per L, spread round-robin over the seven generators.
        for t in 0..10_000 {
            let g = t % fast.len();
            let s = BitString::random(l, &mut rng);
            if fast[g].apply(&s).unwrap().entries() != common::mat_vec(&dense[g].1, s.entries()).as_slice() {
                mismatches += 1;
            }
            applied += 1;
        }
    }
    c.check(mismatches == 0, format!("dense oracle: {mismatches} mismatches in {applied} applications"));
    c.check(
        identity_failures.is_empty(),
        format!("quaternion, spin and split identities for L = 8..128 {identity_failures:?}"),
    );
    c.verdict()
}

fn codec_suite() -> Verdict {
    let mut c = Clauses::default();
    let mut failures = 0usize;
    let mut cases = 0usize;
    for l in (2..=64u64).step_by(2) {
        for m in 1..l {
            for n in 0..l {
                let q = DiscretisedQubit::new(m, n, l).unwrap();
                let d = decode(&encode(&q).unwrap()).unwrap();
                cases += 1;
                if d.qubit != q || d.degenerate {
                    failures += 1;
                }
            }
        }
    }
    c.check(failures == 0, format!("exhaustive round trip: {failures} failures in {cases}"));

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let big = 1u64 << 12;
    let mut random_failures = 0usize;
    for _ in 0..10_000 {
        let q = DiscretisedQubit::new(rng.random_range(1..big), rng.random_range(0..big), big).unwrap();
        if decode(&encode(&q).unwrap()).unwrap().qubit != q {
            random_failures += 1;
        }
    }
    c.check(random_failures == 0, format!("random round trip at L = 4096: {random_failures} failures in 10000"));

    // 10^3 random permutations per granularity, each applied to a random codeword.
    let mut born_failures = 0usize;
    for l in (2..=64u64).step_by(2).chain([big]) {
        for _ in 0..1000 {
            let q = DiscretisedQubit::new(rng.random_range(0..=l), rng.random_range(0..l), l).unwrap();
            let s = encode(&q).unwrap();
            let p = Permutation::random(l as usize, &mut rng);
            let f = born_frequency(&p.apply(&s).unwrap());
            if f != born_frequency(&s) || f != ratio(q.m() as i64, l as i64) {
                born_failures += 1;
            }
        }
    }
    c.check(born_failures == 0, format!("Born frequency under permutations: {born_failures} failures"));
    c.verdict()
}

/// Counts of `+1` in string `depth(k)+1` over positions whose earlier
/// entries spell node `k`'s branch pattern (bit 0 of the path = `+1`).
fn conditional_counts(strings: &[BitString], k: usize) -> (u64, u64) {
    let depth = (usize::BITS - 1 - k.leading_zeros()) as usize;
    let pattern: Vec<i8> = (0..depth).rev().map(|b| if k >> b & 1 == 0 { 1 } else { -1 }).collect();
    let mut ones = 0;
    let mut total = 0;
    for i in 0..strings[0].len() {
        if (0..depth).all(|d| strings[d].entries()[i] == pattern[d]) {
            total += 1;
            ones += u64::from(strings[depth].entries()[i] == 1);
        }
    }
    (ones, total)
}

fn nested_codec() -> Verdict {
    let mut c = Clauses::default();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut round_trip, mut norm, mut counts) = (0usize, 0usize, 0usize);
    let mut worst_norm: f64 = 0.0;
    for depth in 1..=8u32 {
        for _ in 0..200 {
            let tree = AngleTree::random(depth, &mut rng).unwrap();
            let (strings, state) = encode_nested(&tree, 4096).unwrap();
            let decoded = decode_nested(&strings).unwrap();
            if decoded.state != state {
                round_trip += 1;
            }
            let amps = amplitudes(&decoded.state).unwrap();
            let err = (amps.norm_sqr() - 1.0).abs();
            worst_norm = worst_norm.max(err);
            if err > 1e-12 {
                norm += 1;
            }
            for k in 1..(1usize << depth) {
                let node = state.node(k);
                if conditional_counts(&strings, k) != (node.m, node.len) {
                    counts += 1;
                }
            }
        }
    }
    c.check(round_trip == 0, format!("round trip: {round_trip} failures in 1600"));
    c.check(norm == 0, format!("unit norm: worst deviation {worst_norm:.1e}"));
    c.check(counts == 0, format!("conditional frequencies m_k/l_k: {counts} mismatches"));
    c.verdict()
}

fn saturation() -> Verdict {
    let mut c = Clauses::default();
    let start = Instant::now();
    let rows = saturation_experiment(4096, 1, 14, 500, 7).unwrap();
    let elapsed = start.elapsed();
    let first = rows[0].median_fidelity;
    c.check(first > 1.0 - 1e-5, format!("median fidelity at N = 1: {first:.9}"));
    let rises: Vec<f64> = rows
        .windows(2)
        .map(|w| w[1].median_fidelity - w[0].median_fidelity)
        .filter(|&d| d > 0.0)
        .collect();
    let monotone = rises.is_empty() || (rises.len() == 1 && rises[0] <= 0.005);
    c.check(monotone, format!("median non-increasing ({} inversions, largest {:.2e})", rises.len(), rises.iter().cloned().fold(0.0, f64::max)));
    let hit = rows.iter().find(|r| r.min_segment_len <= 1).map(|r| r.n);
    c.check(hit.is_some_and(|n| n <= 13), format!("min segment length <= 1 first at N = {hit:?}"));
    c.check(elapsed < Duration::from_secs(120), format!("runtime {elapsed:.1?}"));
    c.verdict()
}

fn uncertainty_suite() -> Verdict {
    let mut c = Clauses::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut violations = 0usize;
    for _ in 0..100_000 {
        let d = Direction::sample(&mut rng);
        let norm = d.cx * d.cx + d.cy * d.cy + d.cz * d.cz;
        let sigma1 = (1.0 - d.cx * d.cx).max(0.0).sqrt();
        let sigma2 = (1.0 - d.cy * d.cy).max(0.0).sqrt();
        let check = uncertainty_check(&d);
        if !check.ok || sigma1 * sigma2 < d.cz.abs() - 1e-12 || (norm - 1.0).abs() > 1e-12 {
            violations += 1;
        }
    }
    c.check(violations == 0, format!("{} / 100000 sampled directions satisfy the bound", 100_000 - violations));
    for (name, (x, y, z)) in [("x", (1.0, 0.0, 0.0)), ("y", (0.0, 1.0, 0.0)), ("z", (0.0, 0.0, 1.0))] {
        let chk = uncertainty_check(&Direction::new(x, y, z).unwrap());
        c.check((chk.lhs - chk.rhs).abs() <= 1e-12, format!("equality at {name} pole"));
    }
    c.verdict()
}

fn niven_suite() -> Verdict {
    let mut c = Clauses::default();
    let mut admissible = std::collections::BTreeSet::new();
    for q in 1..=200i64 {
        for p in -q..=q {
            if p.gcd(&q) == 1 && niven_admissible(&ratio(p, q)).unwrap() {
                admissible.insert((p, q));
            }
        }
    }
    let expected: std::collections::BTreeSet<_> = [(-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1)].into();
    let oracle = common::niven_oracle(200);
    c.check(admissible == expected, format!("admissible set {admissible:?}"));
    c.check(oracle == expected, format!("angle oracle set {oracle:?}"));
    c.verdict()
}

fn run_binary(threads: &str) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_discrete-hilbert"))
        .args(["saturate", "--L", "1024", "--n", "1..9", "--samples", "300", "--seed", "11"])
        .env("RAYON_NUM_THREADS", threads)
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    out.stdout
}

fn determinism() -> Verdict {
    let mut c = Clauses::default();
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| to_csv(&saturation_experiment(2048, 1, 10, 300, 3).unwrap()))
    };
    let max = std::thread::available_parallelism().map_or(8, |n| n.get()).max(8);
    let reference = run(1);
    c.check(run(max) == reference, format!("library: 1 thread vs {max} threads identical"));
    c.check(run(max) == run(max), "library: repeated parallel runs identical");
    let serial = run_binary("1");
    c.check(run_binary("0") == serial && run_binary(&max.to_string()) == serial, "binary: repeated invocations byte-identical");
    c.verdict()
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("capacity table exactness", capacity_table),
        ("electron-qubit scenario", electron_scenario),
        ("composite scenarios", composite_scenarios),
        ("algebraic identity suite", algebra_suite),
        ("codec suite", codec_suite),
        ("nested codec", nested_codec),
        ("saturation experiment", saturation),
        ("uncertainty suite", uncertainty_suite),
        ("Niven suite", niven_suite),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = check();
        failures += usize::from(!v.pass);
        println!(
            "[{}] {:>2}. {name} ({:.2?}): {}",
            if v.pass { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed(),
            v.detail
        );
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
