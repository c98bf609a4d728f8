//! Block partitions and thresholds behind the composite strategy.
//!
//! cargo run -p hatgame --example partition_plan

use hatgame::strategies::{compute_thresholds, guarantee_bound, make_partition};

fn main() -> hatgame::Result<()> {
    for n in [4, 6, 16, 64, 250, 1000] {
        let plan = make_partition(n)?;
        let bound = guarantee_bound(n, Some(&plan))?;
        println!(
            "n = {n:>4}: k = {}, l = {}, sizes {:?}, structural loss {} <= {:.4}",
            plan.k(),
            plan.l(),
            plan.block_sizes(),
            bound.structural_loss.unwrap_or_default(),
            bound.theorem_loss_even
        );
    }
    let plan = make_partition(16)?;
    for outside in 0..=8 {
        let t = compute_thresholds(&plan, 1, outside)?;
        println!("n = 16, block 1, {outside} reds outside: a = {}, b = {}", t.a, t.b);
    }
    println!("{}", serde_json::to_string(&make_partition(6)?).expect("plan serializes"));
    Ok(())
}
