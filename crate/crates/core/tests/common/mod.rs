#![allow(dead_code)]

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_integer::Integer;

/// Reduced fractions `p/q` with `q ≤ q_max` that some angle `πa/b`
/// (`b ≤ 720`) has as its cosine to within 1e-12. Built from the angle side
/// only, without reference to any admissibility rule.
pub fn niven_oracle(q_max: i64) -> BTreeSet<(i64, i64)> {
    let mut found = BTreeSet::new();
    for b in 1..=720i64 {
        for a in 0..=b {
            let c = (PI * a as f64 / b as f64).cos();
            for q in 1..=q_max {
                let p = (c * q as f64).round();
                if (c - p / q as f64).abs() < 1e-12 {
                    let p = p as i64;
                    let g = p.gcd(&q);
                    found.insert((p / g, q / g));
                    break;
                }
            }
        }
    }
    found
}

pub type Dense = Vec<Vec<i32>>;

fn zero(n: usize) -> Dense {
    vec![vec![0; n]; n]
}

fn ident(n: usize) -> Dense {
    let mut m = zero(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

fn neg(a: &Dense) -> Dense {
    a.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
}

/// `[[a, b], [c, d]]`.
fn block(a: &Dense, b: &Dense, c: &Dense, d: &Dense) -> Dense {
    let top = a.iter().zip(b).map(|(x, y)| x.iter().chain(y).copied().collect());
    let bottom = c.iter().zip(d).map(|(x, y)| x.iter().chain(y).copied().collect());
    top.chain(bottom).collect()
}

fn dense_j(l: usize) -> Dense {
    let h = l / 2;
    block(&zero(h), &ident(h), &neg(&ident(h)), &zero(h))
}

/// The seven generators at size `l` (`4 | l`) as dense matrices, named.
pub fn dense_generators(l: usize) -> Vec<(&'static str, Dense)> {
    let h = l / 2;
    let (one, z) = (ident(h), zero(h));
    let jh = dense_j(h);
    vec![
        ("J", dense_j(l)),
        ("I", block(&jh, &z, &z, &neg(&jh))),
        ("K", block(&z, &jh, &jh, &z)),
        ("i", block(&jh, &z, &z, &jh)),
        ("sx", block(&z, &one, &one, &z)),
        ("sy", block(&z, &neg(&jh), &jh, &z)),
        ("sz", block(&one, &z, &z, &neg(&one))),
    ]
}

pub fn mat_vec(m: &Dense, v: &[i8]) -> Vec<i8> {
    m.iter().map(|row| row.iter().zip(v).map(|(&a, &b)| a * i32::from(b)).sum::<i32>() as i8).collect()
}
