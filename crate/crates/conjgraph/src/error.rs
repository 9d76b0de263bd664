use thiserror::Error;

/// Errors produced by permutation and group operations.
#[derive(Debug, Error)]
pub enum GroupError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("image array of length {len} is not a bijection (problem at position {pos})")]
    NotBijective { len: usize, pos: usize },

    #[error("degree {degree} exceeds the degree cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("group of order {order} is too large to enumerate (cap {cap})")]
    TooLarge { order: u128, cap: u64 },

    #[error("permutation {perm} is not a member of the group")]
    NotMember { perm: String },

    #[error("subgroup is not normal: conjugating {elem} by {gen} leaves the subgroup")]
    NotNormal { gen: String, elem: String },

    #[error("unknown catalog name `{0}`")]
    UnknownCatalog(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("matrix generator {index} is singular mod {prime}")]
    SingularMatrix { prime: u64, index: usize },

    #[error("unsupported field size {0} (only 8 is implemented)")]
    UnsupportedField(u64),

    #[error("unknown export format `{0}` (expected `dot` or `json`)")]
    UnknownFormat(String),

    #[error("group document error: {0}")]
    Document(String),

    #[error("json parse error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, GroupError>;
