use thiserror::Error;

/// Errors surfaced by the library.  Every fallible operation reports a
/// structured variant; none panic on user input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),

    #[error("weight has {got} coordinates, root system has rank {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("operands belong to different root systems ({0} vs {1})")]
    MixedRootSystems(String, String),

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("not a valid embedding datum: {0}")]
    InvalidEmbedding(String),

    #[error("invalid linear representation: {0}")]
    InvalidLinearRep(String),

    #[error("torus point is singular: {0}")]
    SingularPoint(String),

    #[error("index not locally finite for this direction: {0}")]
    IndexNotLocallyFinite(String),

    #[error("insufficient samples: need at least {needed}, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("empty support: {0}")]
    EmptySupport(String),

    #[error("invalid face data: {0}")]
    InvalidFaceData(String),

    #[error("Weyl group too large to enumerate ({0} elements)")]
    WeylGroupTooLarge(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
