//! Seeded random inputs and a timing harness contrasting the hopping
//! algorithm with the reduced-word oracle.
//!
//! Timings use the monotonic clock, discard a fixed number of warmup
//! trials per rank, and are reported as mean and nearest-rank
//! percentiles.  Every benchmarked pair is evaluated under both
//! algorithms and the results must agree; the harness records relative
//! speed but never asserts it.

use std::fmt;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hop::demazure_star;
use crate::oracle::{demazure_oracle, demazure_oracle_b};
use crate::perm::Permutation;
use crate::signed::{demazure_star_b, SignedPermutation};
use crate::{Error, Result};

/// Which family a benchmark runs over: type A (`S_n`) or type B (`B_n`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    A,
    B,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::A => "A",
            Kind::B => "B",
        })
    }
}

/// Column layout of [`BenchReport::to_csv`].
pub const CSV_HEADER: &str = "type,n,trials,algo,mean_ns,p50_ns,p95_ns,seed";

/// Warmup trials per rank, timed and agreement-checked but discarded.
const WARMUP: usize = 3;

/// One (rank, algorithm) aggregate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub kind: Kind,
    pub n: usize,
    pub trials: usize,
    pub algo: &'static str,
    pub mean_ns: u64,
    pub p50_ns: u64,
    pub p95_ns: u64,
}

/// A full benchmark run: rows cover every requested rank crossed with
/// both algorithms, all driven by one seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub seed: u64,
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.kind, r.n, r.trials, r.algo, r.mean_ns, r.p50_ns, r.p95_ns, self.seed
            ));
        }
        out
    }
}

fn random_permutation_from(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut entries: Vec<usize> = (1..=n).collect();
    entries.shuffle(rng);
    Permutation::from_one_line(entries).expect("shuffling preserves bijectivity")
}

fn random_signed_permutation_from(n: usize, rng: &mut ChaCha8Rng) -> SignedPermutation {
    let mut entries: Vec<i64> = (1..=n as i64).collect();
    entries.shuffle(rng);
    for v in entries.iter_mut() {
        if rng.random::<bool>() {
            *v = -*v;
        }
    }
    SignedPermutation::from_one_line(entries).expect("valid signed window")
}

/// A uniformly random permutation of `{1, …, n}`, deterministic per seed.
pub fn random_permutation(n: usize, seed: u64) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    Ok(random_permutation_from(n, &mut ChaCha8Rng::seed_from_u64(seed)))
}

/// A uniformly random signed permutation of rank `n`, deterministic per
/// seed.
pub fn random_signed_permutation(n: usize, seed: u64) -> Result<SignedPermutation> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    Ok(random_signed_permutation_from(n, &mut ChaCha8Rng::seed_from_u64(seed)))
}

/// Nearest-rank percentile of an ascending sample.
fn percentile(sorted: &[u64], pct: usize) -> u64 {
    let idx = (pct * sorted.len()).div_ceil(100).max(1);
    sorted[idx - 1]
}

fn summarize(kind: Kind, n: usize, algo: &'static str, mut sample: Vec<u64>) -> BenchRow {
    let trials = sample.len();
    let mean_ns = sample.iter().sum::<u64>() / trials as u64;
    sample.sort_unstable();
    BenchRow {
        kind,
        n,
        trials,
        algo,
        mean_ns,
        p50_ns: percentile(&sample, 50),
        p95_ns: percentile(&sample, 95),
    }
}

fn clamped_ns(elapsed: std::time::Duration) -> u64 {
    (elapsed.as_nanos().max(1)).min(u64::MAX as u128) as u64
}

/// Runs the benchmark: for each rank, `WARMUP + trials` fresh random
/// pairs, each evaluated under both the hopping algorithm and the
/// reduced-word oracle.  Any disagreement aborts the run.
pub fn run_bench(kind: Kind, ns: &[usize], trials: usize, seed: u64) -> Result<BenchReport> {
    if trials == 0 {
        return Err(Error::Bench("at least one trial is required".into()));
    }
    if let Some(&n) = ns.iter().find(|&&n| n < 2) {
        return Err(Error::Bench(format!("rank {n} is below the minimum of 2")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(2 * ns.len());
    for &n in ns {
        let mut hopping = Vec::with_capacity(trials);
        let mut oracle = Vec::with_capacity(trials);
        for trial in 0..WARMUP + trials {
            let (hop_ns, oracle_ns) = match kind {
                Kind::A => {
                    let w = random_permutation_from(n, &mut rng);
                    let v = random_permutation_from(n, &mut rng);
                    let clock = Instant::now();
                    let by_hopping = demazure_star(&w, &v)?.0;
                    let hop_ns = clamped_ns(clock.elapsed());
                    let clock = Instant::now();
                    let by_oracle = demazure_oracle(&w, &v)?;
                    let oracle_ns = clamped_ns(clock.elapsed());
                    if by_hopping != by_oracle {
                        return Err(Error::Disagreement(format!("type A, n = {n}, w = {w}, v = {v}")));
                    }
                    (hop_ns, oracle_ns)
                }
                Kind::B => {
                    let w = random_signed_permutation_from(n, &mut rng);
                    let v = random_signed_permutation_from(n, &mut rng);
                    let clock = Instant::now();
                    let by_hopping = demazure_star_b(&w, &v)?.0;
                    let hop_ns = clamped_ns(clock.elapsed());
                    let clock = Instant::now();
                    let by_oracle = demazure_oracle_b(&w, &v)?;
                    let oracle_ns = clamped_ns(clock.elapsed());
                    if by_hopping != by_oracle {
                        return Err(Error::Disagreement(format!("type B, n = {n}, w = {w}, v = {v}")));
                    }
                    (hop_ns, oracle_ns)
                }
            };
            if trial >= WARMUP {
                hopping.push(hop_ns);
                oracle.push(oracle_ns);
            }
        }
        rows.push(summarize(kind, n, "hopping", hopping));
        rows.push(summarize(kind, n, "oracle", oracle));
    }
    Ok(BenchReport { rows, seed })
}
