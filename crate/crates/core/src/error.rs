use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shell norm {norm_sq} exceeds the configured shell cap {cap}")]
    ShellCapExceeded { norm_sq: u64, cap: u64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("unsupported rational {0:?}: denominators must divide 4")]
    UnsupportedDenominator(String),

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),

    #[error("holonomy group exceeds the cap of {cap} elements")]
    HolonomyTooLarge { cap: usize },

    #[error("inconsistent cocycle: linear part {linear} demands translations {first} and {second} mod 1")]
    CocycleInconsistent {
        linear: String,
        first: String,
        second: String,
    },

    #[error("representative set is not closed: product {0} has no representative")]
    NotClosed(String),

    #[error("group has torsion: the coset of {0} contains an element of finite order")]
    Torsion(String),

    #[error("holonomy is not elementary abelian of exponent 2 (found {0})")]
    NotElementaryAbelian(String),

    #[error("multiplicity is not a nonnegative integer: {numerator} / {order} at N={norm_sq}, p={degree}")]
    NonIntegralMultiplicity {
        numerator: String,
        order: usize,
        norm_sq: u64,
        degree: usize,
    },

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("invalid GHW array: {0}")]
    InvalidArray(String),

    #[error("graph is not of K_n shape: {0}")]
    NotKnShape(String),

    #[error("unknown catalog name {0:?}")]
    UnknownCatalogName(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamilyParameters(String),

    #[error("family size cap exceeded: n = {n} > {cap}")]
    FamilyCapExceeded { n: usize, cap: usize },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
