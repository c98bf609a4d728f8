//! Exhaustive worst case of the composite strategy against its bounds.
//!
//! cargo run --release -p hatgame --example composite_sweep [max_n]

use hatgame::analysis::{default_workers, exhaustive_worst_case_with, lower_bound_loss};
use hatgame::strategies::{guarantee_bound, CompositeStrategy};

fn main() -> hatgame::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(18);
    println!("  n  worst  proven  closed-form  lower  min_correct");
    for n in 2..=max_n {
        let strategy = CompositeStrategy::new(n)?;
        let report = exhaustive_worst_case_with(&strategy, n, default_workers())?;
        let bound = guarantee_bound(n, None)?;
        println!(
            "{n:>3}  {:>5}  {:>6}  {:>11.4}  {:>5.2}  {:>11}",
            report.worst_loss,
            strategy.loss_bound(),
            bound.theorem_loss(),
            lower_bound_loss(n as u64),
            report.min_correct
        );
    }
    Ok(())
}
