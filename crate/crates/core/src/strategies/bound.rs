use serde::Serialize;

use super::partition::PartitionPlan;
use crate::error::contract;
use crate::Result;

/// Loss guarantees for `n` players, measured against `max{r, b}`.
#[derive(Debug, Clone, Serialize)]
pub struct GuaranteeBound {
    pub n: usize,
    /// `max|T_i|/2 + (k-1)²` for the given plan. Block sizes are even, so
    /// this is always an integer.
    pub structural_loss: Option<u64>,
    /// `1.2·n^(2/3) + 1`, the closed-form bound for even `n`.
    pub theorem_loss_even: f64,
    /// `1.2·n^(2/3) + 2`, valid for every `n`.
    pub theorem_loss_general: f64,
}

impl GuaranteeBound {
    /// The closed-form loss that applies to `n`'s parity.
    pub fn theorem_loss(&self) -> f64 {
        if self.n % 2 == 0 {
            self.theorem_loss_even
        } else {
            self.theorem_loss_general
        }
    }
}

pub fn structural_loss(plan: &PartitionPlan) -> u64 {
    let k = plan.k() as u64;
    plan.max_block_size() as u64 / 2 + (k - 1) * (k - 1)
}

pub fn theorem_loss_even(n: usize) -> f64 {
    1.2 * (n as f64).powf(2.0 / 3.0) + 1.0
}

pub fn theorem_loss_general(n: usize) -> f64 {
    1.2 * (n as f64).powf(2.0 / 3.0) + 2.0
}

pub fn guarantee_bound(n: usize, plan: Option<&PartitionPlan>) -> Result<GuaranteeBound> {
    if n < 2 {
        return Err(contract(format!("bounds need n >= 2, got {n}")));
    }
    if let Some(p) = plan {
        if p.n() != n {
            return Err(contract(format!("plan is for {} players, not {n}", p.n())));
        }
    }
    Ok(GuaranteeBound {
        n,
        structural_loss: plan.map(structural_loss),
        theorem_loss_even: theorem_loss_even(n),
        theorem_loss_general: theorem_loss_general(n),
    })
}
