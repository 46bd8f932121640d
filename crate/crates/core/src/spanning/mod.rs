//! Edge-disjoint spanning tree packing: the partition condition, a
//! constructive packer, and sufficient conditions.

mod packer;
mod partition;
mod sufficiency;

pub use packer::{max_spanning_tree_packing, pack_induced};
pub use partition::{
    cross_edge_count, nash_williams_check, partition_bound, NashWilliams, Partition, PARTITION_CAP,
};
pub use sufficiency::{check_sufficiency, Condition, Sufficiency};
