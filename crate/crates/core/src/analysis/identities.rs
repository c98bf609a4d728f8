//! Exact combinatorial identities and the lower-bound formula.

use std::f64::consts::PI;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::contract;
use crate::Result;

/// `C(n, k)` by the multiplicative recurrence, exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub n: u64,
    #[serde(serialize_with = "decimal")]
    pub lhs: BigUint,
    #[serde(serialize_with = "decimal")]
    pub rhs: BigUint,
    pub equal: bool,
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// `Σ_{i ≠ n/2} C(n, i)·max{i, n-i}` against `2^n·n/2`, for even `n`.
///
/// The left side is the total score of the majority strategy over all
/// distributions; the balanced ones score nothing.
pub fn identity_check(n: u64) -> Result<IdentityCheck> {
    if n == 0 || n % 2 != 0 {
        return Err(contract(format!("the identity is stated for even n >= 2, got {n}")));
    }
    let mut lhs = BigUint::default();
    let mut c = BigUint::one();
    for i in 0..=n {
        if i != n / 2 {
            lhs += &c * i.max(n - i);
        }
        c = c * (n - i) / (i + 1);
    }
    let rhs = (BigUint::one() << n) * (n / 2);
    let equal = lhs == rhs;
    Ok(IdentityCheck { n, lhs, rhs, equal })
}

/// `√(n/2π)·e^(-1/3n) - 1`: no strategy keeps its worst-case loss below
/// `max{r, b}` under this value. Negative (vacuous) for small `n`.
pub fn lower_bound_loss(n: u64) -> f64 {
    let n = n as f64;
    (n / (2.0 * PI)).sqrt() * (-1.0 / (3.0 * n)).exp() - 1.0
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RobbinsCheck {
    pub n: u64,
    #[serde(serialize_with = "decimal")]
    pub central_binomial: BigUint,
    /// `2^n·√(2/πn)·e^(-1/3n)`
    pub bound: f64,
    pub holds: bool,
}

/// Largest `n` for which `2^n` is still a finite `f64`.
pub const MAX_ROBBINS_N: u64 = 1022;

/// `C(n, n/2) >= 2^n·√(2/πn)·e^(-1/3n)` with the left side exact.
pub fn robbins_check(n: u64) -> Result<RobbinsCheck> {
    if n == 0 || n % 2 != 0 || n > MAX_ROBBINS_N {
        return Err(contract(format!("robbins check needs an even n in 2..={MAX_ROBBINS_N}, got {n}")));
    }
    let central = binomial(n, n / 2);
    let nf = n as f64;
    let bound = 2f64.powi(n as i32) * (2.0 / (PI * nf)).sqrt() * (-1.0 / (3.0 * nf)).exp();
    let holds = central.to_f64().is_some_and(|c| c >= bound);
    Ok(RobbinsCheck { n, central_binomial: central, bound, holds })
}
