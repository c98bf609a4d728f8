use std::fmt;
use std::str::FromStr;
use std::thread;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::report::{SweepAccumulator, SweepMode, WorstCaseReport};
use crate::error::contract;
use crate::game::{count_correct_unchecked, guess_survives_flip, Color, HatDistribution, Strategy};
use crate::{Error, Result};

/// Trials per random substream. Substreams, not workers, own the random
/// numbers, so the report does not depend on the worker count.
pub const TRIALS_PER_STREAM: u64 = 1024;

/// How sampled distributions are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RedCount {
    /// Uniform over `{R, B}^n`.
    Uniform,
    /// Uniform among distributions with exactly this many red hats.
    Exactly(usize),
}

impl FromStr for RedCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<RedCount> {
        if s == "uniform" {
            return Ok(RedCount::Uniform);
        }
        s.parse()
            .map(RedCount::Exactly)
            .map_err(|_| contract(format!("red count must be an integer or \"uniform\", got {s:?}")))
    }
}

impl fmt::Display for RedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RedCount::Uniform => f.write_str("uniform"),
            RedCount::Exactly(r) => write!(f, "{r}"),
        }
    }
}

fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn draw(rng: &mut ChaCha8Rng, n: usize, red_count: RedCount, buf: &mut Vec<Color>) -> Result<HatDistribution> {
    buf.clear();
    match red_count {
        RedCount::Uniform => buf.extend((0..n).map(|_| if rng.gen::<bool>() { Color::Red } else { Color::Blue })),
        RedCount::Exactly(r) => {
            buf.extend(std::iter::repeat_n(Color::Red, r));
            buf.extend(std::iter::repeat_n(Color::Blue, n - r));
            buf.shuffle(rng);
        }
    }
    HatDistribution::new(buf)
}

fn run_stream<S: Strategy + ?Sized>(
    strategy: &S,
    n: usize,
    trials: u64,
    red_count: RedCount,
    seed: u64,
    stream: u64,
) -> Result<SweepAccumulator> {
    let mut rng = stream_rng(seed, stream);
    let mut acc = SweepAccumulator::new(n);
    let mut buf = Vec::with_capacity(n);
    let first = stream * TRIALS_PER_STREAM;
    let last = (first + TRIALS_PER_STREAM).min(trials);
    for trial in first..last {
        let omega = draw(&mut rng, n, red_count, &mut buf)?;
        acc.record(trial, &omega, count_correct_unchecked(strategy, &omega));
    }
    Ok(acc)
}

/// Sampled worst case over `trials` random distributions.
///
/// Deterministic in `seed`; `workers` only changes the wall time.
pub fn monte_carlo<S: Strategy + ?Sized>(
    strategy: &S,
    n: usize,
    trials: u64,
    red_count: RedCount,
    seed: u64,
    workers: usize,
) -> Result<WorstCaseReport> {
    if strategy.players() != n {
        return Err(contract(format!("strategy {} plays {} players, not {n}", strategy.name(), strategy.players())));
    }
    if trials == 0 {
        return Err(contract("need at least one trial"));
    }
    if let RedCount::Exactly(r) = red_count {
        if r > n {
            return Err(contract(format!("red count {r} exceeds n = {n}")));
        }
    }
    let streams = trials.div_ceil(TRIALS_PER_STREAM);
    let workers = (workers.max(1) as u64).min(streams);
    let parts: Vec<Result<SweepAccumulator>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let mut acc = SweepAccumulator::new(n);
                    for stream in (w..streams).step_by(workers as usize) {
                        acc = acc.merge(run_stream(strategy, n, trials, red_count, seed, stream)?);
                    }
                    Ok(acc)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sampling worker panicked")).collect()
    });
    let mut merged = SweepAccumulator::new(n);
    for part in parts {
        merged = merged.merge(part?);
    }
    Ok(merged
        .finish(strategy.name(), SweepMode::Sampled)
        .expect("trials >= 1"))
}

/// Random flip tests: draw `(ω, i)` uniformly, flip `ω_i`, and return every
/// pair where player `i`'s guess changed.
pub fn sample_no_peek<S: Strategy + ?Sized>(
    strategy: &S,
    tests: u64,
    seed: u64,
) -> Result<Vec<(HatDistribution, usize)>> {
    let n = strategy.players();
    let mut rng = stream_rng(seed, 0);
    let mut buf = Vec::with_capacity(n);
    let mut violations = Vec::new();
    for _ in 0..tests {
        let omega = draw(&mut rng, n, RedCount::Uniform, &mut buf)?;
        let i = rng.gen_range(1..=n);
        let mut scratch = omega.clone();
        if !guess_survives_flip(strategy, &omega, &mut scratch, i) {
            violations.push((omega, i));
        }
    }
    Ok(violations)
}
