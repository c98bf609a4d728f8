//! The composite strategy: every block `T_i` of a [`PartitionPlan`] plays
//! `S(T_i, a_i, b_i)` with thresholds chosen so that at most one block can
//! fail on any distribution.
//!
//! For odd `n` the last player is a spectator: they guess the majority of
//! their view (ties go to `tie_break`) and everyone else runs the even-`n`
//! strategy on players `1..n` while ignoring that hat. This costs at most one
//! extra correct guess.

use super::bound::structural_loss;
use super::majority::majority_guess;
use super::pairing::pairing_guess;
use super::partial::block_guess;
use super::partition::{compute_thresholds, make_partition, PartitionPlan, Thresholds};
use crate::error::contract;
use crate::game::{Color, HatDistribution, PlayerSet, Strategy, VisibleView};
use crate::Result;

#[derive(Debug, Clone)]
pub struct CompositeStrategy {
    n: usize,
    plan: PartitionPlan,
    blocks: Vec<PlayerSet>,
    outside: Vec<PlayerSet>,
    tie_break: Color,
}

impl CompositeStrategy {
    pub fn new(n: usize) -> Result<CompositeStrategy> {
        CompositeStrategy::with_tie_break(n, Color::Red)
    }

    /// `tie_break` only matters for the spectator of an odd game.
    pub fn with_tie_break(n: usize, tie_break: Color) -> Result<CompositeStrategy> {
        if n < 2 {
            return Err(contract(format!("composite strategy needs n >= 2, got {n}")));
        }
        let core = n - n % 2;
        let plan = make_partition(core)?;
        // Lift the block masks into the n-player universe so that views of
        // the full distribution can be counted directly.
        let lift = |set: &PlayerSet| PlayerSet::from_players(n, set.iter());
        let blocks = plan.blocks().iter().map(lift).collect::<Result<Vec<_>>>()?;
        let outside = (1..=plan.k()).map(|i| lift(plan.outside(i))).collect::<Result<Vec<_>>>()?;
        Ok(CompositeStrategy { n, plan, blocks, outside, tie_break })
    }

    /// Plan over the even core `1..=n - n % 2`.
    pub fn plan(&self) -> &PartitionPlan {
        &self.plan
    }

    pub fn spectator(&self) -> Option<usize> {
        (self.n % 2 == 1).then_some(self.n)
    }

    /// `n <= 5`: a single block, played as plain pairing.
    pub fn is_pairing_fallback(&self) -> bool {
        self.plan.k() == 1
    }

    /// Proven worst-case shortfall below `max{r, b}`: the structural loss
    /// of the plan, plus one for the spectator of an odd game.
    pub fn loss_bound(&self) -> u64 {
        structural_loss(&self.plan) + (self.n % 2) as u64
    }

    fn thresholds_for(&self, i: usize, outside_reds: usize) -> Thresholds {
        if self.is_pairing_fallback() {
            // S(T, -1, |T|) never leaves the pairing branch.
            Thresholds { a: -1, b: self.plan.n() as i64 }
        } else {
            compute_thresholds(&self.plan, i, outside_reds).expect("block index in range")
        }
    }

    /// `(a_i, b_i)` for every block, from the true hats outside each block.
    pub fn block_thresholds(&self, omega: &HatDistribution) -> Result<Vec<Thresholds>> {
        self.check(omega)?;
        Ok((1..=self.plan.k())
            .map(|i| self.thresholds_for(i, omega.red_count_in(&self.outside[i - 1])))
            .collect())
    }

    /// Blocks `i` with `|R_ω ∩ T_i| ∈ {a_i + 1, b_i}`.
    pub fn failing_blocks(&self, omega: &HatDistribution) -> Result<Vec<usize>> {
        let thresholds = self.block_thresholds(omega)?;
        Ok(thresholds
            .iter()
            .enumerate()
            .filter(|(i, t)| {
                let reds = omega.red_count_in(&self.blocks[*i]) as i64;
                reds == t.a + 1 || reds == t.b
            })
            .map(|(i, _)| i + 1)
            .collect())
    }

    fn check(&self, omega: &HatDistribution) -> Result<()> {
        if omega.n() != self.n {
            return Err(contract(format!("composite plays {} players, got {}", self.n, omega.n())));
        }
        Ok(())
    }
}

impl Strategy for CompositeStrategy {
    fn name(&self) -> &str {
        "composite"
    }

    fn players(&self) -> usize {
        self.n
    }

    fn guess(&self, view: &VisibleView<'_>) -> Color {
        let me = view.observer();
        if Some(me) == self.spectator() {
            return majority_guess(view, self.tie_break);
        }
        if self.is_pairing_fallback() {
            return pairing_guess(self.plan.pairing(), view);
        }
        let i = self.plan.block_of(me);
        let t = self.thresholds_for(i, view.red_count_in(&self.outside[i - 1]));
        block_guess(view, &self.blocks[i - 1], t.a, t.b, self.plan.pairing())
    }
}
