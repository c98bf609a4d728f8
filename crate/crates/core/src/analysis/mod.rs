//! Exhaustive and sampled verification, exact identities, the lower bound
//! and brute-force optimal search.

mod identities;
mod optimal;
mod report;
mod sampling;
mod sweep;

pub use identities::{
    binomial, identity_check, lower_bound_loss, robbins_check, IdentityCheck, RobbinsCheck, MAX_ROBBINS_N,
};
pub use optimal::{search_optimal, OptimalReport, TruthTableStrategy, MAX_OPTIMAL_N};
pub use report::{SweepAccumulator, SweepMode, WorstCaseReport};
pub use sampling::{monte_carlo, sample_no_peek, RedCount, TRIALS_PER_STREAM};
pub use sweep::{
    default_workers, exhaustive_worst_case, exhaustive_worst_case_with, sweep_range, total_correct_over_omega,
    MAX_EXACT_SUM_N, MAX_EXHAUSTIVE_N,
};
