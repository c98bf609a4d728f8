use serde::Serialize;

use super::pairing::Pairing;
use crate::error::contract;
use crate::game::{PlayerSet, VisibleView};
use crate::Result;

/// Blocks `T_1, ..., T_k` of consecutive, pair-aligned players.
///
/// The first `l` blocks have size `⌈n/k⌉₂`, the remaining ones `⌊n/k⌋₂`.
#[derive(Debug, Clone, Serialize)]
pub struct PartitionPlan {
    n: usize,
    k: usize,
    l: usize,
    block_sizes: Vec<usize>,
    blocks: Vec<PlayerSet>,
    #[serde(skip)]
    outside: Vec<PlayerSet>,
    #[serde(skip)]
    pairing: Pairing,
    #[serde(skip)]
    block_of: Vec<usize>,
}

/// Smallest even integer `>= num / den`.
pub fn ceil_even(num: usize, den: usize) -> usize {
    let c = num.div_ceil(den);
    c + c % 2
}

/// Largest even integer `<= num / den`.
pub fn floor_even(num: usize, den: usize) -> usize {
    let f = num / den;
    f - f % 2
}

/// `⌈∛(n/4)⌉`, computed in integers as the least `k` with `4k³ >= n`.
pub fn cube_root_block_count(n: usize) -> usize {
    let mut k = 1usize;
    while 4 * k * k * k < n {
        k += 1;
    }
    k
}

/// Block count used by [`make_partition`]: `⌈∛(n/4)⌉`, raised to 2 for
/// `n >= 6`. For `n <= 4` this is 1, the single-block plan on which the
/// composite strategy reduces to plain pairing.
pub fn block_count(n: usize) -> usize {
    let k = cube_root_block_count(n);
    if n >= 6 {
        k.max(2)
    } else {
        k
    }
}

/// Partition `1..=n` (even) into pair-aligned consecutive blocks.
pub fn make_partition(n: usize) -> Result<PartitionPlan> {
    if n < 2 || n % 2 != 0 {
        return Err(contract(format!("partition needs an even n >= 2, got {n}")));
    }
    let k = block_count(n);
    let big = ceil_even(n, k);
    let small = floor_even(n, k);
    let l = if big == small { k } else { (n - k * small) / 2 };
    debug_assert!(l >= 1 && l <= k);
    debug_assert_eq!(l * big + (k - l) * small, n);

    let block_sizes: Vec<usize> = (0..k).map(|i| if i < l { big } else { small }).collect();
    let mut blocks = Vec::with_capacity(k);
    let mut block_of = vec![0; n];
    let mut first = 1;
    for (i, &size) in block_sizes.iter().enumerate() {
        let last = first + size - 1;
        blocks.push(PlayerSet::range(n, first, last)?);
        block_of[first - 1..last].fill(i + 1);
        first = last + 1;
    }
    let outside = blocks.iter().map(PlayerSet::complement).collect();
    Ok(PartitionPlan { n, k, l, block_sizes, blocks, outside, pairing: Pairing::canonical(n)?, block_of })
}

impl PartitionPlan {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of blocks of the larger size.
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn max_block_size(&self) -> usize {
        self.block_sizes.iter().copied().max().unwrap_or(0)
    }

    /// Block `i` in `1..=k`.
    pub fn block(&self, i: usize) -> &PlayerSet {
        &self.blocks[i - 1]
    }

    pub fn blocks(&self) -> &[PlayerSet] {
        &self.blocks
    }

    /// `[n] \ T_i`.
    pub fn outside(&self, i: usize) -> &PlayerSet {
        &self.outside[i - 1]
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    /// Index in `1..=k` of the block containing player `p`.
    pub fn block_of(&self, p: usize) -> usize {
        self.block_of[p - 1]
    }

    /// Thresholds of block `i` as computed by an observer inside it, from
    /// the red hats they see outside `T_i`.
    pub fn thresholds_seen_by(&self, view: &VisibleView<'_>, i: usize) -> Result<Thresholds> {
        if !self.block(i).contains(view.observer()) {
            return Err(contract(format!("player {} is not in block {i}", view.observer())));
        }
        compute_thresholds(self, i, view.red_count_in(self.outside(i)))
    }
}

/// The pair `(a_i, b_i)` for one block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Thresholds {
    pub a: i64,
    pub b: i64,
}

/// `b_i` is the least integer `>= |T_i|/2` with
/// `outside_reds + b_i ≡ i (mod k)`, and `a_i = b_i - k - 1`.
pub fn compute_thresholds(plan: &PartitionPlan, i: usize, outside_reds: usize) -> Result<Thresholds> {
    if i == 0 || i > plan.k {
        return Err(contract(format!("block index {i} outside 1..={}", plan.k)));
    }
    let k = plan.k;
    let mut b = plan.block_sizes[i - 1].div_ceil(2);
    let target = i % k;
    let mut steps = 0;
    while (outside_reds + b) % k != target {
        b += 1;
        steps += 1;
        debug_assert!(steps < k);
    }
    let b = b as i64;
    Ok(Thresholds { a: b - k as i64 - 1, b })
}
