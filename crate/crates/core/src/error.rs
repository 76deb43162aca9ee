use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not special unitary (residual {residual:.3e})")]
    NonUnitary { residual: f64 },

    #[error("matrix is not a traceless skew-Hermitian element (residual {residual:.3e})")]
    NotInAlgebra { residual: f64 },

    #[error("invalid Cheeger chain: {0}")]
    BadChain(String),

    #[error("vectors are linearly dependent (normalized Gram determinant {gram:.3e})")]
    DependentVectors { gram: f64 },

    #[error("horizontality constraints are rank deficient (rank {rank} of {expected})")]
    DegenerateConstraints { rank: usize, expected: usize },

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("argument outside domain: {0}")]
    OutOfDomain(String),

    #[error("singular denominator in {0}")]
    SingularDenominator(&'static str),

    #[error("Re(x12) is not real: z1 - Im(x12)^2 = {gap:.6e} < 0")]
    NotReal { gap: f64 },

    #[error("certificate parameters have negative gap; X cannot be formed")]
    GapNegative,

    #[error("flatness check failed with positive gap (max residual {max_residual:.3e})")]
    FlatnessFailed { max_residual: f64 },

    #[error("invalid Bazaikin tuple: {0}")]
    InvalidTuple(String),

    #[error("thread pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable variant name, printed by the CLI on domain errors.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonUnitary { .. } => "NonUnitary",
            Error::NotInAlgebra { .. } => "NotInAlgebra",
            Error::BadChain(_) => "BadChain",
            Error::DependentVectors { .. } => "DependentVectors",
            Error::DegenerateConstraints { .. } => "DegenerateConstraints",
            Error::OutOfRange(_) => "OutOfRange",
            Error::OutOfDomain(_) => "OutOfDomain",
            Error::SingularDenominator(_) => "SingularDenominator",
            Error::NotReal { .. } => "NotReal",
            Error::GapNegative => "GapNegative",
            Error::FlatnessFailed { .. } => "FlatnessFailed",
            Error::InvalidTuple(_) => "InvalidTuple",
            Error::ThreadPool(_) => "ThreadPool",
            Error::Json(_) => "Json",
            Error::Csv(_) => "Csv",
            Error::Io(_) => "Io",
        }
    }
}
