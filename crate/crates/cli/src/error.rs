use thiserror::Error;

/// Problems with the input: exit code 2.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("schema error: {0}")]
    Schema(String),

    #[error("validation error in {item}: {message}")]
    Validation { item: String, message: String },

    #[error(transparent)]
    Core(#[from] kh_tripos::Error),
}
