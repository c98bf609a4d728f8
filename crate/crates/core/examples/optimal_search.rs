//! Every strategy profile for n <= 3, enumerated as truth tables.
//!
//! cargo run -p hatgame --example optimal_search

use hatgame::analysis::search_optimal;

fn main() -> hatgame::Result<()> {
    for n in 1..=3 {
        let r = search_optimal(n)?;
        println!(
            "n = {n}: {} profiles, best guaranteed correct = {}, best worst loss = {} (tables {:?})",
            r.strategies_enumerated, r.best_min_correct, r.best_worst_loss, r.best_min_tables
        );
    }
    Ok(())
}
