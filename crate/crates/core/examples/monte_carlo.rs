//! Seeded sampling beyond the exhaustive range.
//!
//! cargo run --release -p hatgame --example monte_carlo

use hatgame::analysis::{default_workers, monte_carlo, RedCount};
use hatgame::strategies::{guarantee_bound, CompositeStrategy};

fn main() -> hatgame::Result<()> {
    for n in [999, 1000] {
        let strategy = CompositeStrategy::new(n)?;
        let limit = guarantee_bound(n, None)?.theorem_loss();
        for red_count in [RedCount::Uniform, RedCount::Exactly(n / 2), RedCount::Exactly(n * 9 / 10)] {
            let r = monte_carlo(&strategy, n, 10_000, red_count, 42, default_workers())?;
            println!(
                "n = {n}, reds {red_count}: min correct {}, worst loss {} (limit {limit:.2})",
                r.min_correct, r.worst_loss
            );
        }
    }
    Ok(())
}
