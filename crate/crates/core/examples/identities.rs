//! The averaging identity, the binomial identity and the lower bound.
//!
//! cargo run -p hatgame --example identities

use hatgame::analysis::{identity_check, lower_bound_loss, robbins_check, total_correct_over_omega};
use hatgame::strategies::{CompositeStrategy, MajorityStrategy};
use hatgame::Color;

fn main() -> hatgame::Result<()> {
    for n in [4, 8, 12] {
        let majority = total_correct_over_omega(&MajorityStrategy::new(n, Color::Red)?, n)?;
        let composite = total_correct_over_omega(&CompositeStrategy::new(n)?, n)?;
        println!("n = {n:>2}: Σcor majority = {majority}, composite = {composite}, n·2^(n-1) = {}", n << (n - 1));
    }
    for n in [2, 6, 32, 64] {
        let c = identity_check(n)?;
        println!("identity n = {n:>2}: {} = {} ({})", c.lhs, c.rhs, c.equal);
    }
    for n in [2, 4, 64] {
        let r = robbins_check(n)?;
        println!("C({n}, {}) = {} >= {:.6}: {}", n / 2, r.central_binomial, r.bound, r.holds);
    }
    for n in [4, 100, 10_000, 1_000_000] {
        println!("unavoidable worst-case loss at n = {n}: {:.4}", lower_bound_loss(n));
    }
    Ok(())
}
