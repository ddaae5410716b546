use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("no class equals the identity matrix")]
    MissingIdentity,

    #[error("classes do not partition the all-ones matrix: entry ({row}, {col}) is covered {count} times")]
    NotPartition { row: usize, col: usize, count: usize },

    #[error("class {0} is not symmetric")]
    NotSymmetric(usize),

    #[error("class {0} has an entry other than 0 or 1")]
    NotZeroOne(usize),

    #[error("class {0} is the zero matrix")]
    EmptyClass(usize),

    #[error("product of classes {0} and {1} is not in the span of the classes")]
    NotClosed(usize, usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("eigenvalue {value} is not an integer (distance {distance:e} to the nearest integer)")]
    NonIntegerEigenvalue { value: f64, distance: f64 },

    #[error("class {0} is not a fixed-point-free permutation matrix of order 2")]
    NotPermutationClass(usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate spectrum: all eigenvalues coincide with the valency")]
    DegenerateSpectrum,

    #[error("eigenvalue congruences fail for m = {m}")]
    InconsistentSigns { m: String },

    #[error("m = {m} does not divide h = {h}")]
    NotAdmissible { m: String, h: String },

    #[error("the antipodal class on its own is a perfect matching and is excluded")]
    SingleAntipodalClass,

    #[error("spectrum is irrational: {0}")]
    IrrationalSpectrum(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("precision {requested} bits is below the required {required} bits")]
    PrecisionTooLow { requested: u32, required: u32 },

    #[error("{vertices} vertices exceeds the dense cap of {cap}")]
    DimensionCapExceeded { vertices: usize, cap: usize },

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable tag for the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MissingIdentity => "missing_identity",
            Error::NotPartition { .. } => "not_partition",
            Error::NotSymmetric(_) => "not_symmetric",
            Error::NotZeroOne(_) => "not_zero_one",
            Error::EmptyClass(_) => "empty_class",
            Error::NotClosed(..) => "not_closed",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::NonIntegerEigenvalue { .. } => "non_integer_eigenvalue",
            Error::NotPermutationClass(_) => "not_permutation_class",
            Error::Domain(_) => "domain_error",
            Error::DegenerateSpectrum => "degenerate_spectrum",
            Error::InconsistentSigns { .. } => "inconsistent_signs",
            Error::NotAdmissible { .. } => "not_admissible",
            Error::SingleAntipodalClass => "single_antipodal_class",
            Error::IrrationalSpectrum(_) => "irrational_spectrum",
            Error::InvalidParameters(_) => "invalid_parameters",
            Error::PrecisionTooLow { .. } => "precision_too_low",
            Error::DimensionCapExceeded { .. } => "dimension_cap_exceeded",
            Error::InvalidSpectrum(_) => "invalid_spectrum",
            Error::Parse(_) => "parse_error",
            Error::Internal(_) => "internal_error",
        }
    }
}
