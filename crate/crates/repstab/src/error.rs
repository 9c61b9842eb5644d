//! Error type shared by the library modules.
//!
//! Domain errors (inputs outside the contracts of the individual operations)
//! are distinguished from internal-consistency failures, which indicate a bug
//! in the tables or the derivations rather than a bad input.

use thiserror::Error;

/// Errors raised by the dimension computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Homological degree outside the tabulated range `k <= 5`.
    #[error("homological degree {0} is outside the tabulated range (k <= 5)")]
    UnsupportedDegree(u64),

    /// A perfect-matching count was requested for an odd ground set.
    #[error("no perfect matchings on an odd ground set of size {0}")]
    OddMatchingSize(u64),

    /// Partition-size cap exceeded during enumeration.
    #[error("partition size {size} exceeds the enumeration cap {cap}")]
    CapExceeded { size: u64, cap: u64 },

    /// Membership in the family `D_{2n}` is only defined for even sizes.
    #[error("partition size {0} is odd; the signed-matching family is indexed by even sizes")]
    OddPartitionSize(u64),

    /// A freeness certificate needs a dimension that was not supplied.
    #[error("missing dimension for degree {0}; all degrees of that parity up to the cap are required")]
    MissingDimension(u64),

    /// A derived table row disagrees with its independently stored form.
    #[error("derived Betti row k = {k} disagrees with the stored closed form")]
    DerivationMismatch { k: u64 },

    /// The diagonal vanishing report is only stated for even `n >= 8`.
    #[error("diagonal vanishing report requires even n >= 8, got n = {n}")]
    DiagonalRange { n: u64 },

    /// A report would have to rely on an entry the tables do not determine.
    #[error("entry (p = {p}, q = {q}) at n = {n} is not determined by the tabulated range")]
    UnresolvedEntry { p: i64, q: u64, n: u64 },
}
