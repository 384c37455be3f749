//! Exact-arithmetic construction and machine verification of 2-basic sets
//! for symmetric and alternating groups.
//!
//! The crate builds character tables of `S_n` and `A_n` over exact integers
//! and quadratic irrationalities, constructs the distinguished basic set
//! `B_Λ` from 2-quotients, and verifies the supporting structure: restriction
//! to the alternating group, the wreath-product character identities on the
//! `C_∅` classes, unimodularity of the induced-square basis of the character
//! ring of `S_{2w}`, and the sign-isometry between block Gram matrices.
//! Everything is computed over `Z` (or `Q`, or `Q(sqrt(d))`) with no
//! floating point anywhere.

pub mod alternating;
pub mod engine;
pub mod error;
pub mod lattice;
pub mod lr;
pub mod partition;
pub mod quad;
pub mod report;
pub mod symmetric;
pub mod wreath;

pub use error::{Error, Result};
pub use partition::{
    bar_partition, enumerate, from_core_and_quotient, partition_count, partitions_of,
    two_core_and_quotient, Partition, PartitionFamily, TwoQuotientData,
};
pub use quad::{QuadSum, QuadValue};

/// Version tag embedded in every JSON document this crate emits.
pub const SCHEMA_VERSION: &str = "charbasis/1";
