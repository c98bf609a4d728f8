//! `S(T, a, b)` on one block, compared with its guaranteed row of the table.
//!
//! cargo run -p hatgame --example partial_block

use hatgame::game::PlayerSet;
use hatgame::strategies::{lemma_table_bound, Pairing, PartialParams, PartialStrategy};
use hatgame::HatDistribution;

fn main() -> hatgame::Result<()> {
    let size = 8;
    let params = PartialParams::new(PlayerSet::full(size), 1, 5, Pairing::canonical(size)?)?;
    let strategy = PartialStrategy::new(params);
    println!("|T| = {size}, a = 1, b = 5");
    println!("reds  worst simulated  table bound  fails");
    for reds in 0..=size {
        let mut worst = usize::MAX;
        let mut bound = 0;
        let mut fails = false;
        for idx in 0..1u64 << size {
            let omega = HatDistribution::from_index(size, idx)?;
            if omega.red_count() != reds {
                continue;
            }
            worst = worst.min(strategy.correct_in_block(&omega)?);
            bound = lemma_table_bound(&omega, strategy.params());
            fails = strategy.params().fails(&omega);
        }
        println!("{reds:>4}  {worst:>15}  {bound:>11}  {fails}");
    }
    Ok(())
}
