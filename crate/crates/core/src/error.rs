use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set size {0} is outside 1..=5")]
    GroundSize(usize),
    #[error("set function on N_{n} needs {expected} values, got {got}")]
    ValueCount { n: usize, expected: usize, got: usize },
    #[error("ground sets differ: N_{0} vs N_{1}")]
    GroundMismatch(usize, usize),
    #[error("subset {mask:#b} is not contained in N_{n}")]
    SubsetOutOfRange { mask: u32, n: usize },
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("malformed permutation: {0}")]
    Permutation(String),

    #[error("inequality system is empty")]
    EmptySystem,
    #[error("cone is not pointed: {0}")]
    NotPointed(String),
    #[error("inequality dimensions disagree: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("catalog: {0}")]
    Catalog(String),
    #[error("cannot parse ray name `{0}`")]
    RayName(String),
    #[error("`{0}` is not a matroid family; its rank function is not constructible by name")]
    NotMatroid(String),
    #[error("unknown face `{0}`")]
    UnknownFace(String),

    #[error("invalid distribution: {0}")]
    InvalidDist(String),
    #[error("entropy target {target} is outside [0, log2 {m}]")]
    EntropyOutOfRange { target: f64, m: usize },
    #[error("construction roles must be distinct variables of N_{n}: {roles:?}")]
    Roles { roles: Vec<usize>, n: usize },

    #[error("face coordinates must be nonnegative, got a = {a}, b = {b}")]
    NegativeCoordinate { a: f64, b: f64 },
    #[error("k = {k} exceeds the partition enumeration cap {cap}")]
    PartitionCap { k: u64, cap: u64 },
    #[error("point (a = {a}, b = {b}) is not entropic on face {face}")]
    NotEntropic { face: String, a: f64, b: f64 },
    #[error("face {0} is not characterized")]
    Uncharacterized(String),
    #[error("witness parameters do not fit face {face}: {reason}")]
    Params { face: String, reason: String },
    #[error("witness search failed: {0}")]
    SearchFailed(String),
    #[error("witness round-trip error {error:e} exceeds {tol:e}")]
    RoundTrip { error: f64, tol: f64 },

    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
