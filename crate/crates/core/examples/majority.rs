//! The majority strategy is perfect off balance and scores zero on balance.
//!
//! cargo run -p hatgame --example majority

use hatgame::analysis::exhaustive_worst_case_with;
use hatgame::game::evaluate;
use hatgame::strategies::MajorityStrategy;
use hatgame::{Color, HatDistribution};

fn main() -> hatgame::Result<()> {
    let strategy = MajorityStrategy::new(6, Color::Red)?;
    for text in ["RRRRRB", "RRRRBB", "RRRBBB"] {
        let omega: HatDistribution = text.parse()?;
        let record = evaluate(&strategy, &omega)?;
        println!("{omega}: {} correct, target {}", record.correct_count, omega.majority_target());
    }
    let report = exhaustive_worst_case_with(&strategy, 6, 2)?;
    println!("worst loss over all 64 distributions: {} (witness {})", report.worst_loss, report.witness);
    println!("histogram: {:?}", report.histogram);
    Ok(())
}
