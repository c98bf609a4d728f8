//! The block strategy `S(T, a, b)`.
//!
//! A player in `T` who sees at least `b` red hats in `T` guesses red, one who
//! sees at most `a` guesses blue, and everyone else follows the pairing rule.

use super::pairing::{pairing_guess, Pairing};
use crate::error::contract;
use crate::game::{Color, HatDistribution, PlayerSet, Strategy, VisibleView};
use crate::Result;

/// An admissible `(T, a, b)` together with the pairing `T` respects.
#[derive(Debug, Clone)]
pub struct PartialParams {
    block: PlayerSet,
    a: i64,
    b: i64,
    pairing: Pairing,
}

impl PartialParams {
    /// Checks `a < |T|/2 <= b`, `a + 2 <= b` and that every pair lies
    /// entirely inside or entirely outside `T`.
    pub fn new(block: PlayerSet, a: i64, b: i64, pairing: Pairing) -> Result<PartialParams> {
        if block.universe() != pairing.n() {
            return Err(contract(format!(
                "block is drawn from {} players, pairing covers {}",
                block.universe(),
                pairing.n()
            )));
        }
        if block.is_empty() {
            return Err(contract("block T is empty"));
        }
        let size = block.len() as i64;
        // a < |T|/2 <= b, doubled to stay in integers
        if !(2 * a < size && size <= 2 * b) {
            return Err(contract(format!("need a < |T|/2 <= b, got a = {a}, b = {b}, |T| = {size}")));
        }
        if a + 2 > b {
            return Err(contract(format!("need a + 2 <= b, got a = {a}, b = {b}")));
        }
        if let Some(&(x, y)) = pairing
            .pairs()
            .iter()
            .find(|&&(x, y)| block.contains(x) != block.contains(y))
        {
            return Err(contract(format!("pair ({x}, {y}) straddles the block boundary")));
        }
        Ok(PartialParams { block, a, b, pairing })
    }

    pub fn block(&self) -> &PlayerSet {
        &self.block
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    /// `S(T, a, b)` fails on `omega` when `|R_ω ∩ T|` is `a + 1` or `b`.
    pub fn fails(&self, omega: &HatDistribution) -> bool {
        let reds = omega.red_count_in(&self.block) as i64;
        reds == self.a + 1 || reds == self.b
    }
}

/// The block rule, for an observer known to be inside `block`.
pub(crate) fn block_guess(
    view: &VisibleView<'_>,
    block: &PlayerSet,
    a: i64,
    b: i64,
    pairing: &Pairing,
) -> Color {
    let seen = view.red_count_in(block) as i64;
    if seen >= b {
        Color::Red
    } else if seen <= a {
        Color::Blue
    } else {
        pairing_guess(pairing, view)
    }
}

/// `S(T, a, b)` as a full profile: players in `T` use the block rule, players
/// outside `T` fall back to the pairing rule.
#[derive(Debug, Clone)]
pub struct PartialStrategy {
    params: PartialParams,
}

impl PartialStrategy {
    pub fn new(params: PartialParams) -> PartialStrategy {
        PartialStrategy { params }
    }

    pub fn params(&self) -> &PartialParams {
        &self.params
    }

    /// The block rule for an observer in `T`; anyone else is a contract error.
    pub fn guess_in_block(&self, view: &VisibleView<'_>) -> Result<Color> {
        let p = &self.params;
        if !p.block.contains(view.observer()) {
            return Err(contract(format!("player {} is not in the block", view.observer())));
        }
        Ok(block_guess(view, &p.block, p.a, p.b, &p.pairing))
    }

    /// Correct guesses made by players inside `T`.
    pub fn correct_in_block(&self, omega: &HatDistribution) -> Result<usize> {
        if omega.n() != self.players() {
            return Err(contract("distribution and strategy sizes differ"));
        }
        let mut correct = 0;
        for i in self.params.block.iter() {
            let view = VisibleView::new(omega, i)?;
            if self.guess_in_block(&view)? == omega.color(i) {
                correct += 1;
            }
        }
        Ok(correct)
    }
}

impl Strategy for PartialStrategy {
    fn name(&self) -> &str {
        "partial"
    }

    fn players(&self) -> usize {
        self.params.pairing.n()
    }

    fn guess(&self, view: &VisibleView<'_>) -> Color {
        let p = &self.params;
        if p.block.contains(view.observer()) {
            block_guess(view, &p.block, p.a, p.b, &p.pairing)
        } else {
            pairing_guess(&p.pairing, view)
        }
    }
}

/// Guaranteed number of correct guesses of `S(T, a, b)` inside `T`:
///
/// | `|R ∩ T|`         | bound         |
/// |-------------------|---------------|
/// | `> b`             | `m`           |
/// | `= b`             | `b - |T|/2`   |
/// | `a+2 ..= b-1`     | `|T|/2`       |
/// | `= a + 1`         | `|T|/2 - a - 1` |
/// | `<= a`            | `m`           |
///
/// with `m = max{|R ∩ T|, |B ∩ T|}`.
pub fn lemma_table_bound(omega: &HatDistribution, params: &PartialParams) -> i64 {
    let size = params.block.len() as i64;
    let half = size / 2;
    let reds = omega.red_count_in(&params.block) as i64;
    let m = reds.max(size - reds);
    let (a, b) = (params.a, params.b);
    if reds > b {
        m
    } else if reds == b {
        b - half
    } else if reds >= a + 2 {
        half
    } else if reds == a + 1 {
        half - a - 1
    } else {
        m
    }
}
