//! The pairing, majority, partial and composite strategies, and the
//! partition and loss bounds behind the composite guarantee.

mod bound;
mod composite;
mod majority;
mod pairing;
mod partial;
mod partition;

pub use bound::{guarantee_bound, structural_loss, theorem_loss_even, theorem_loss_general, GuaranteeBound};
pub use composite::CompositeStrategy;
pub use majority::MajorityStrategy;
pub use pairing::{canonical_pairing, Pairing, PairingStrategy, Role};
pub use partial::{lemma_table_bound, PartialParams, PartialStrategy};
pub use partition::{
    block_count, ceil_even, compute_thresholds, cube_root_block_count, floor_even, make_partition, PartitionPlan,
    Thresholds,
};
