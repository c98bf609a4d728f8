//! Plugging in your own strategy: implement `Strategy`, then reuse the
//! legality check and the sweeps.
//!
//! cargo run -p hatgame --example custom_strategy

use hatgame::analysis::{exhaustive_worst_case_with, total_correct_over_omega};
use hatgame::game::verify_no_peek;
use hatgame::{Color, HatDistribution, Strategy, VisibleView};

/// Guess red iff the number of visible red hats is even.
struct Parity {
    n: usize,
}

impl Strategy for Parity {
    fn name(&self) -> &str {
        "parity"
    }

    fn players(&self) -> usize {
        self.n
    }

    fn guess(&self, view: &VisibleView<'_>) -> Color {
        if view.visible_red_count() % 2 == 0 {
            Color::Red
        } else {
            Color::Blue
        }
    }
}

fn main() -> hatgame::Result<()> {
    let n = 10;
    let strategy = Parity { n };
    let omega: HatDistribution = "RRBRBBRBRR".parse()?;
    println!("violations on {omega}: {:?}", verify_no_peek(&strategy, &omega)?);
    println!("Σcor = {} (always n·2^(n-1) = {})", total_correct_over_omega(&strategy, n)?, n << (n - 1));
    let report = exhaustive_worst_case_with(&strategy, n, 4)?;
    println!("worst loss {} at {}, histogram {:?}", report.worst_loss, report.witness, report.histogram);
    Ok(())
}
