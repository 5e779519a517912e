use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("configuration error: {0}")]
    Config(String),

    /// Malformed optical data or manifest content.
    #[error("data error: {0}")]
    Data(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Quadrature or Matsubara summation failed to converge.
    #[error("numerical error: {0}")]
    Numerical(String),

    #[error("ensemble member {index} ({label}) failed: {source}")]
    Member {
        index: usize,
        label: String,
        #[source]
        source: Box<Error>,
    },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for this error class: 2 config/input, 3 data, 4 numerics.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Input(_) | Error::Config(_) | Error::Io { .. } => 2,
            Error::Data(_) | Error::Parse { .. } => 3,
            Error::Numerical(_) => 4,
            Error::Member { source, .. } => source.exit_code(),
        }
    }
}
