//! Reproducible parallel Monte Carlo plumbing.
//!
//! Every path gets its own ChaCha stream keyed by `(seed, path index)`, so a
//! path's draws never depend on scheduling. Aggregation is pairwise over
//! fixed-size batches collected in index order, which makes results
//! bit-identical for any worker count.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Paths per work item; amortizes RNG construction without affecting values.
const BATCH_SIZE: u64 = 4096;

/// RNG for one path of a seeded run.
pub fn path_rng(seed: u64, path_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(path_index);
    rng
}

/// Outcome of a single path.
#[derive(Clone, Copy, Debug)]
pub enum PathOutcome {
    Value(f64),
    Aborted,
}

/// Deterministic summary of a seeded path ensemble.
#[derive(Clone, Copy, Debug)]
pub struct Aggregate {
    pub n: u64,
    pub completed: u64,
    pub aborted: u64,
    pub sum: f64,
    pub sum_sq: f64,
}

impl Aggregate {
    pub fn mean(&self) -> f64 {
        if self.completed == 0 {
            0.0
        } else {
            self.sum / self.completed as f64
        }
    }

    /// Sample variance of completed path values.
    pub fn variance(&self) -> f64 {
        if self.completed < 2 {
            return 0.0;
        }
        let n = self.completed as f64;
        ((self.sum_sq - self.sum * self.sum / n) / (n - 1.0)).max(0.0)
    }

    /// Standard error of the mean.
    pub fn std_error(&self) -> f64 {
        if self.completed == 0 {
            0.0
        } else {
            (self.variance() / self.completed as f64).sqrt()
        }
    }

    pub fn abort_fraction(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.aborted as f64 / self.n as f64
        }
    }
}

/// Runs `n_paths` independent paths and aggregates them deterministically.
///
/// `path` must derive all randomness from the provided RNG; it is invoked once
/// per path index with the stream `(seed, index)`.
pub fn run_paths<F>(n_paths: u64, seed: u64, path: F) -> Aggregate
where
    F: Fn(&mut ChaCha8Rng) -> PathOutcome + Sync,
{
    let n_batches = n_paths.div_ceil(BATCH_SIZE);
    let batches: Vec<Aggregate> = (0..n_batches)
        .into_par_iter()
        .map(|b| {
            let start = b * BATCH_SIZE;
            let end = ((b + 1) * BATCH_SIZE).min(n_paths);
            let mut agg = Aggregate {
                n: 0,
                completed: 0,
                aborted: 0,
                sum: 0.0,
                sum_sq: 0.0,
            };
            for i in start..end {
                let mut rng = path_rng(seed, i);
                agg.n += 1;
                match path(&mut rng) {
                    PathOutcome::Value(v) => {
                        agg.completed += 1;
                        agg.sum += v;
                        agg.sum_sq += v * v;
                    }
                    PathOutcome::Aborted => agg.aborted += 1,
                }
            }
            agg
        })
        .collect();
    combine_pairwise(&batches)
}

fn combine_pairwise(aggs: &[Aggregate]) -> Aggregate {
    match aggs.len() {
        0 => Aggregate {
            n: 0,
            completed: 0,
            aborted: 0,
            sum: 0.0,
            sum_sq: 0.0,
        },
        1 => aggs[0],
        len => {
            let (a, b) = aggs.split_at(len / 2);
            let (l, r) = (combine_pairwise(a), combine_pairwise(b));
            Aggregate {
                n: l.n + r.n,
                completed: l.completed + r.completed,
                aborted: l.aborted + r.aborted,
                sum: l.sum + r.sum,
                sum_sq: l.sum_sq + r.sum_sq,
            }
        }
    }
}

/// Pairwise sum of a slice in a fixed order.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        len => {
            let (a, b) = xs.split_at(len / 2);
            pairwise_sum(a) + pairwise_sum(b)
        }
    }
}
