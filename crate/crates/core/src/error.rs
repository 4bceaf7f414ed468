use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParameter { field: String, reason: String },
    #[error("parametric instability at cooperativity C = {0}: the linearized model requires C < 1")]
    Unstable(f64),
    #[error("`{field}` = {value} outside the valid range [{min}, {max}]")]
    OutOfRange { field: String, value: f64, min: f64, max: f64 },
    #[error("numerical failure: {0}")]
    Numeric(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("phase-space grid: {0}")]
    Grid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(field: &str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field: field.to_string(),
            reason: reason.into(),
        }
    }
}

pub(crate) fn require_stable(c: f64) -> Result<()> {
    if c < 1.0 {
        Ok(())
    } else {
        Err(Error::Unstable(c))
    }
}
