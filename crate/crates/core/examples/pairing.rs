//! The pairing strategy: exactly one player of each pair guesses right.
//!
//! cargo run -p hatgame --example pairing

use hatgame::game::evaluate;
use hatgame::strategies::{canonical_pairing, PairingStrategy};
use hatgame::HatDistribution;

fn main() -> hatgame::Result<()> {
    let pairing = canonical_pairing(8)?;
    println!("pairs: {:?}", pairing.pairs());
    let strategy = PairingStrategy::new(pairing);
    for text in ["RRRRRRRR", "RBRBRBRB", "RRBBRRBB", "BBBBBBBR"] {
        let omega: HatDistribution = text.parse()?;
        let record = evaluate(&strategy, &omega)?;
        println!(
            "{omega}  guesses {}  correct {} {:?}  (max{{r,b}} = {})",
            record.guesses.iter().map(|c| c.symbol()).collect::<String>(),
            record.correct_count,
            record.correct_set,
            omega.majority_target()
        );
    }
    Ok(())
}
