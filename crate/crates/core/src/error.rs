use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input text is not a well-formed word in either grammar.
    #[error("syntax error: {0}")]
    Syntax(String),

    /// A generator index exceeds the ambient rank.
    #[error("generator x{index} exceeds rank {rank}")]
    RankExceeded { index: u32, rank: u32 },

    /// A move references generators outside the rank it is applied at,
    /// or a tuple operation got indices outside the tuple.
    #[error("rank mismatch: {0}")]
    RankMismatch(String),

    /// The operation is undefined on the empty word.
    #[error("operation undefined on the empty word")]
    EmptyWord,

    /// Rank 0 was requested.
    #[error("rank must be at least 1")]
    InvalidRank,

    /// A move violates its own structural invariants.
    #[error("invalid move: {0}")]
    InvalidMove(String),

    /// A configured resource cap was hit before the computation finished.
    /// Carries how far the search got; never reported as a verdict.
    #[error("resource limit exceeded during {phase}: {moves_applied} move applications, {members_seen} level-set members")]
    ResourceLimit {
        phase: &'static str,
        moves_applied: u64,
        members_seen: usize,
    },

    /// A certificate failed to replay to what it claims.
    #[error("certificate unsound: {0}")]
    CertificateUnsound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
