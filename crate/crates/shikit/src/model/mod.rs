//! Core combinatorial objects: permutations and signed windows, set
//! partitions of types A and C with their arc diagrams, integer partition
//! types, and label sequences with their statistics.

mod partition;
mod perm;
mod sequence;

pub use partition::{
    arcs_nonnesting, enumerate_nonnesting_a, enumerate_nonnesting_c, partition_from_arcs_a,
    partition_from_arcs_c, BlockPair, PartitionA, PartitionC, PartitionType,
};
pub(crate) use partition::factorial;
pub use perm::{Permutation, SignedWindow};
pub use sequence::{
    enumerate_parking_functions, for_each_sequence_a, for_each_sequence_c, SequenceA, SequenceC,
};
