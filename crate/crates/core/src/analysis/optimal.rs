//! Brute force over every strategy profile for tiny `n`.

use serde::Serialize;

use crate::error::contract;
use crate::game::{count_correct_unchecked, Color, HatDistribution, Strategy, VisibleView};
use crate::{Error, Result};

/// Largest `n` for [`search_optimal`]; `n = 4` already has `2^32` profiles.
pub const MAX_OPTIMAL_N: usize = 3;

/// Each player's guess as a truth table over the `2^(n-1)` possible views.
///
/// View index: the other players' hats in ascending player order, bit `j`
/// set when the `j`-th other player wears red. Bit `v` of a player's table
/// is 1 when they guess red on view `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTableStrategy {
    n: usize,
    tables: Vec<u64>,
}

impl TruthTableStrategy {
    pub fn new(n: usize, tables: Vec<u64>) -> Result<TruthTableStrategy> {
        if n == 0 || n > 7 {
            return Err(contract(format!("truth tables are limited to 1..=7 players, got {n}")));
        }
        if tables.len() != n {
            return Err(contract(format!("need {n} tables, got {}", tables.len())));
        }
        let width = 1u32 << (n - 1);
        if width < 64 && tables.iter().any(|&t| t >> width != 0) {
            return Err(contract(format!("tables have only {width} entries")));
        }
        Ok(TruthTableStrategy { n, tables })
    }

    pub fn tables(&self) -> &[u64] {
        &self.tables
    }

    fn view_index(view: &VisibleView<'_>) -> usize {
        let mut idx = 0;
        let mut bit = 0;
        for j in (1..=view.n()).filter(|&j| j != view.observer()) {
            if view.color(j).expect("j is not the observer") == Color::Red {
                idx |= 1 << bit;
            }
            bit += 1;
        }
        idx
    }
}

impl Strategy for TruthTableStrategy {
    fn name(&self) -> &str {
        "truth-table"
    }

    fn players(&self) -> usize {
        self.n
    }

    fn guess(&self, view: &VisibleView<'_>) -> Color {
        let table = self.tables[view.observer() - 1];
        if table >> Self::view_index(view) & 1 == 1 {
            Color::Red
        } else {
            Color::Blue
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptimalReport {
    pub n: usize,
    /// `max_S min_ω cor(S, ω)`
    pub best_min_correct: usize,
    /// `min_S max_ω (max{r, b} - cor(S, ω))`
    pub best_worst_loss: i64,
    pub strategies_enumerated: u64,
    /// Tables of the first profile attaining `best_min_correct`.
    pub best_min_tables: Vec<u64>,
    /// Tables of the first profile attaining `best_worst_loss`.
    pub best_loss_tables: Vec<u64>,
}

/// Enumerate all `(2^(2^(n-1)))^n` profiles.
pub fn search_optimal(n: usize) -> Result<OptimalReport> {
    if n == 0 {
        return Err(contract("search needs at least one player"));
    }
    if n > MAX_OPTIMAL_N {
        return Err(Error::Capacity(format!(
            "exhaustive strategy search stops at n = {MAX_OPTIMAL_N}, got {n}"
        )));
    }
    let table_bits = 1u32 << (n - 1);
    let per_player = 1u64 << table_bits;
    let profiles = per_player.pow(n as u32);
    let omegas: Vec<HatDistribution> = (0..1u64 << n)
        .map(|i| HatDistribution::from_index(n, i))
        .collect::<Result<_>>()?;

    let mut best_min: Option<(usize, Vec<u64>)> = None;
    let mut best_loss: Option<(i64, Vec<u64>)> = None;
    for p in 0..profiles {
        let mut rest = p;
        let tables: Vec<u64> = (0..n)
            .map(|_| {
                let t = rest % per_player;
                rest /= per_player;
                t
            })
            .collect();
        let s = TruthTableStrategy::new(n, tables)?;
        let mut min_correct = usize::MAX;
        let mut worst_loss = i64::MIN;
        for omega in &omegas {
            let c = count_correct_unchecked(&s, omega);
            min_correct = min_correct.min(c);
            worst_loss = worst_loss.max(omega.majority_target() as i64 - c as i64);
        }
        if best_min.as_ref().is_none_or(|(m, _)| min_correct > *m) {
            best_min = Some((min_correct, s.tables.clone()));
        }
        if best_loss.as_ref().is_none_or(|(l, _)| worst_loss < *l) {
            best_loss = Some((worst_loss, s.tables));
        }
    }
    let (best_min_correct, best_min_tables) = best_min.expect("at least one profile");
    let (best_worst_loss, best_loss_tables) = best_loss.expect("at least one profile");
    Ok(OptimalReport {
        n,
        best_min_correct,
        best_worst_loss,
        strategies_enumerated: profiles,
        best_min_tables,
        best_loss_tables,
    })
}
