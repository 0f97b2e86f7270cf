use crate::rootsys::Family;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank {rank} is not supported for family {family}")]
    UnsupportedRank { family: Family, rank: u32 },

    #[error("vector {0} is not a root of any supported family")]
    NotARoot(String),

    #[error("Weyl group generation exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("unsupported subsystem embedding: {0}")]
    UnsupportedEmbedding(String),

    #[error("unknown symmetric pair: {0}")]
    UnknownPair(String),

    #[error("parameter constraint violated for {pair}: {detail}")]
    ConstraintViolated { pair: String, detail: String },

    #[error("exact signature data is not available for {0}; only the Δᵃ-support is known")]
    SignatureDataUnavailable(String),

    #[error("diagram component is black in neither maximal diagram yet invariant under both involutions; the input triple is inconsistent")]
    Case4Detected,

    #[error("induced Satake diagram matches no classical real form: {0}")]
    UnknownDiagramClassification(String),

    #[error("no orbit-type classification rules are encoded for {0}")]
    UnsupportedFamily(String),

    #[error("Θ is not a subset of the transformed simple system")]
    NonSimpleTheta,

    #[error("parse error: {0}")]
    Parse(String),
}
