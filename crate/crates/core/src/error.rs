use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("maps are not composable: {0}")]
    NonComposable(String),
    #[error("composite of the two maps is not zero")]
    NotAComplex,
    #[error("element is not a cycle")]
    NotACycle,
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("modules live over different groups")]
    GroupMismatch,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("table size {needed} exceeds the cap of {cap} entries")]
    SizeCap { needed: u128, cap: u128 },
    #[error("degree {0} is outside the supported range")]
    DegreeOutOfRange(i32),
    #[error("cup product at bidegree ({0}, {1}) is not supported")]
    UnsupportedBidegree(i32, i32),
    #[error("a Tate group in the quotient has a free part")]
    InfiniteCohomology,
    #[error("group is not cyclic")]
    NotCyclic,
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("lift through a surjection failed: {0}")]
    LiftFailed(String),
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("element is not a unit")]
    NotAUnit,
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
