use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lambda must be 2 or 3, got {0}")]
    InvalidLambda(u32),

    #[error("parts must be positive integers")]
    ZeroPart,

    #[error("parts must be strictly increasing: {0} followed by {1}")]
    NotIncreasing(u32, u32),

    #[error("not a {lambda}-partition: parts {lo} and {hi} differ by less than {lambda}")]
    GapTooSmall { lambda: u32, lo: u32, hi: u32 },

    #[error("marked value {0} is not a part")]
    MarkNotPart(u32),

    #[error("marked part {0} is not a leading part")]
    MarkNotLeading(u32),

    #[error("odd-part partition has an even part {0}")]
    EvenPart(u32),

    #[error("the empty partition has no Frobenius symbol")]
    EmptyPartition,

    #[error("Frobenius condition ({condition}) violated: {detail}")]
    Frobenius { condition: u8, detail: String },

    #[error("the diagonal map is only defined for lambda = 3")]
    DiagonalMapNeedsThree,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
