use std::ops::Range;
use std::thread;

use num_bigint::BigUint;

use super::report::{SweepAccumulator, SweepMode, WorstCaseReport};
use crate::error::contract;
use crate::game::{count_correct_unchecked, HatDistribution, Strategy};
use crate::{Error, Result};

/// Largest `n` swept exhaustively (`2^24` distributions).
pub const MAX_EXHAUSTIVE_N: usize = 24;
/// Largest `n` for [`total_correct_over_omega`].
pub const MAX_EXACT_SUM_N: usize = 14;

pub fn default_workers() -> usize {
    thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn check_players<S: Strategy + ?Sized>(strategy: &S, n: usize) -> Result<()> {
    if strategy.players() != n {
        return Err(contract(format!("strategy {} plays {} players, not {n}", strategy.name(), strategy.players())));
    }
    Ok(())
}

/// Evaluate the distributions whose index lies in `range`.
pub fn sweep_range<S: Strategy + ?Sized>(strategy: &S, n: usize, range: Range<u64>) -> Result<SweepAccumulator> {
    check_players(strategy, n)?;
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::Capacity(format!(
            "exhaustive sweeps stop at n = {MAX_EXHAUSTIVE_N}, got {n}; use monte_carlo instead"
        )));
    }
    if range.end > 1u64 << n {
        return Err(contract(format!("index range {range:?} exceeds 2^{n}")));
    }
    let mut acc = SweepAccumulator::new(n);
    let mut omega = HatDistribution::from_index(n, 0)?;
    for idx in range {
        omega.load_index(idx);
        acc.record(idx, &omega, count_correct_unchecked(strategy, &omega));
    }
    Ok(acc)
}

/// Every `ω ∈ {R, B}^n`, using the default worker count.
pub fn exhaustive_worst_case<S: Strategy + ?Sized>(strategy: &S, n: usize) -> Result<WorstCaseReport> {
    exhaustive_worst_case_with(strategy, n, default_workers())
}

/// Every `ω ∈ {R, B}^n`, split into `workers` contiguous index ranges.
pub fn exhaustive_worst_case_with<S: Strategy + ?Sized>(
    strategy: &S,
    n: usize,
    workers: usize,
) -> Result<WorstCaseReport> {
    check_players(strategy, n)?;
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::Capacity(format!(
            "exhaustive sweeps stop at n = {MAX_EXHAUSTIVE_N}, got {n}; use monte_carlo instead"
        )));
    }
    let total = 1u64 << n;
    let workers = (workers.max(1) as u64).min(total);
    let chunk = total.div_ceil(workers);
    let parts: Vec<Result<SweepAccumulator>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let range = (w * chunk)..((w + 1) * chunk).min(total);
                scope.spawn(move || sweep_range(strategy, n, range))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sweep worker panicked")).collect()
    });
    let mut merged = SweepAccumulator::new(n);
    for part in parts {
        merged = merged.merge(part?);
    }
    Ok(merged
        .finish(strategy.name(), SweepMode::Exhaustive)
        .expect("2^n >= 2 distributions evaluated"))
}

/// `Σ_ω cor(S, ω)` in exact arithmetic.
pub fn total_correct_over_omega<S: Strategy + ?Sized>(strategy: &S, n: usize) -> Result<BigUint> {
    check_players(strategy, n)?;
    if n > MAX_EXACT_SUM_N {
        return Err(Error::Capacity(format!("exact sums stop at n = {MAX_EXACT_SUM_N}, got {n}")));
    }
    let mut total = BigUint::default();
    let mut omega = HatDistribution::from_index(n, 0)?;
    for idx in 0..1u64 << n {
        omega.load_index(idx);
        total += count_correct_unchecked(strategy, &omega);
    }
    Ok(total)
}
