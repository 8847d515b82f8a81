//! Hook-pair multisets of skew diagrams glued from rectangles and partition
//! copies, the master bijection on broken-column legs, and exhaustive
//! verifiers for the resulting identities.

pub mod identities;
pub mod literal;
pub mod multiset;
pub mod partition;
pub mod region;
pub mod sample;
pub mod staircase;
pub mod sweep;

pub use identities::{
    eq7_check, eq8_check, verify, verify_theorem1, verify_theorem2, verify_theorem3, IdentityError,
    Instance, Report, Theorem,
};
pub use literal::{parse_partition, parse_sequence, parse_staircase, LiteralError};
pub use multiset::{HookPairMultiset, LegMultiset, Multiset};
pub use partition::{
    partitions_in_box, strict_partitions_max, FrobeniusForm, Partition, PartitionError,
};
pub use region::{Cell, HookPair, Region, RegionError};
pub use staircase::{
    inverse_master_bijection, master_bijection, BijectionError, Staircase, StaircaseError,
};
pub use sweep::{Bounds, SweepError};
