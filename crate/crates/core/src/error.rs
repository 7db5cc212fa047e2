use thiserror::Error;

/// Crate-wide error type. Every cap-guarded operation reports `CapExceeded`
/// instead of silently degrading, and every hypothesis the classifier or
/// finder relies on gets its own variant so failures are distinguishable.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("image list is not a permutation of 0..{degree}")]
    NotAPermutation { degree: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("cap exceeded in {what} (cap {cap})")]
    CapExceeded { what: &'static str, cap: u128 },

    #[error("group order exceeds supported range (u128)")]
    OrderOverflow,

    #[error("generator is not a member of the parent group")]
    NotInParent,

    #[error("subgroup is not normal in the ambient group")]
    NotNormal,

    #[error("{p} does not divide the subgroup order")]
    PrimeDoesNotDivide { p: u64 },

    #[error("subgroup is not abelian")]
    NotAbelian,

    #[error("blocks do not form a partition of the point set")]
    InvalidPartition,

    #[error("partition is not invariant under the group")]
    PartitionNotInvariant,

    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphism,

    #[error("connection set must be identity-free and closed under inversion")]
    InvalidConnectionSet,

    #[error("element not found in the supplied group element list")]
    UnknownGroupElement,

    #[error("parameter out of range: {0}")]
    ParamRange(String),

    #[error("graph is not 4-valent")]
    NotFourValent,

    #[error("graph is not cubic")]
    NotCubic,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("group is not vertex-transitive on the graph")]
    NotVertexTransitive,

    #[error("cycle set is not a valid cycle decomposition")]
    InvalidDecomposition,

    #[error("local group at a vertex has order {found}, expected 2")]
    LocalGroupOrder { found: u128 },

    #[error("matched edge orbit is not a perfect matching")]
    NotPerfectMatching,

    #[error("complement of the matching is not a disjoint union of equal cycles")]
    UnequalCycles,

    #[error("matching complement has cycles of length {k}, expected 4")]
    CycleLengthNotFour { k: usize },

    #[error("pair is degenerate: two matched edges are joined by more than one edge")]
    Degenerate,

    #[error("no abelian normal subgroup with a nontrivial point stabiliser")]
    NoAbelianNormalNonsemiregular,

    #[error("the group has no nontrivial abelian normal subgroup")]
    NoAbelianNormal,

    #[error("stabiliser order has smallest prime {p}, expected 2 or 3")]
    BadStabilizerPrime { p: u64 },

    #[error("classification reached a family but the isomorphism check failed")]
    WitnessFailed,

    #[error("the induced action on the merged quotient is not faithful")]
    UnfaithfulAction,

    #[error("the merged quotient is not arc-transitive under the induced action")]
    QuotientNotArcTransitive,

    #[error("the merged quotient is not a Praeger-Xu graph")]
    NotPraegerXu,

    #[error("graph is not a split Praeger-Xu graph with r >= 5")]
    NotSplitPx,

    #[error("quotient by the minimal normal subgroup is not a cycle on >= 3 blocks")]
    QuotientNotCycle,

    #[error("no rotation found in the centraliser acting on the quotient cycle")]
    NoRotation,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
