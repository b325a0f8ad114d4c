//! Fidelity loss as the qubit count approaches capacity at fixed `L`.
//!
//! For each `N` the experiment draws random angle trees, pushes them through
//! the nested bit-string codec at granularity `L`, rebuilds the amplitudes
//! from the decoded integers and compares them with the continuum state.
//! Sample `s` always draws from stream `s` of the ChaCha8 generator seeded
//! with `seed`, so results do not depend on how samples are scheduled
//! across threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::nested::{amplitudes, decode_nested, encode_nested, fidelity, AngleTree, MAX_DENSE_DEPTH};

pub const CSV_HEADER: [&str; 4] = ["N", "median_fidelity", "p10_fidelity", "min_segment_len"];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SaturationRow {
    #[serde(rename = "N")]
    pub n: u32,
    pub median_fidelity: f64,
    pub p10_fidelity: f64,
    pub min_segment_len: u64,
}

struct Sample {
    fidelity: f64,
    min_segment_len: u64,
}

fn run_sample(depth: u32, l: u64, seed: u64, sample: u64) -> Result<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(sample);
    let tree = AngleTree::random(depth, &mut rng)?;
    let (strings, _) = encode_nested(&tree, l)?;
    let decoded = decode_nested(&strings)?;
    let quantised = amplitudes(&decoded.state)?;
    Ok(Sample {
        fidelity: fidelity(&tree.amplitudes()?, &quantised)?,
        min_segment_len: decoded.state.min_segment_len(),
    })
}

/// Median of sorted values; the mean of the two middle values for even counts.
fn median(sorted: &[f64]) -> f64 {
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    }
}

/// Lower nearest-rank 10th percentile of sorted values.
fn p10(sorted: &[f64]) -> f64 {
    sorted[(sorted.len() - 1) / 10]
}

pub fn saturation_experiment(l: u64, n_min: u32, n_max: u32, samples: usize, seed: u64) -> Result<Vec<SaturationRow>> {
    if l == 0 || !l.is_multiple_of(2) {
        return Err(Error::Experiment(format!("L = {l} must be even and positive")));
    }
    if n_min == 0 || n_min > n_max {
        return Err(Error::Experiment(format!("qubit range {n_min}..{n_max} is empty or starts at 0")));
    }
    if n_max > MAX_DENSE_DEPTH {
        return Err(Error::Experiment(format!("N = {n_max} exceeds {MAX_DENSE_DEPTH}")));
    }
    if samples == 0 {
        return Err(Error::Experiment("samples must be positive".into()));
    }

    (n_min..=n_max)
        .map(|depth| {
            let results: Vec<Sample> = (0..samples)
                .into_par_iter()
                .map(|s| run_sample(depth, l, seed, s as u64))
                .collect::<Result<_>>()?;
            let mut fids: Vec<f64> = results.iter().map(|r| r.fidelity).collect();
            fids.sort_by(f64::total_cmp);
            Ok(SaturationRow {
                n: depth,
                median_fidelity: median(&fids),
                p10_fidelity: p10(&fids),
                min_segment_len: results.iter().map(|r| r.min_segment_len).min().unwrap_or(l),
            })
        })
        .collect()
}

/// CSV with the header `N,median_fidelity,p10_fidelity,min_segment_len`.
pub fn to_csv(rows: &[SaturationRow]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("in-memory write");
    for row in rows {
        writer
            .write_record([
                row.n.to_string(),
                row.median_fidelity.to_string(),
                row.p10_fidelity.to_string(),
                row.min_segment_len.to_string(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("ascii csv")
}
