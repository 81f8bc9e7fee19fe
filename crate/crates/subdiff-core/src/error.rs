//! Error taxonomy shared across the crate.

use alloc::string::String;

/// Failure classes surfaced by the numerical operations.
///
/// `Domain` is a precondition violation on an argument, `Capability` an
/// unsupported parameter combination, `Numeric` a runtime breakdown
/// (bracketing, quadrature non-convergence, series failure), and `Config`
/// an inconsistent grid/bank/profile setup.
#[derive(Clone, Debug, PartialEq)]
pub enum CoreError {
    Domain(String),
    Capability(String),
    Numeric(String),
    Config(String),
}

impl core::fmt::Display for CoreError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CoreError::Domain(m) => write!(f, "domain error: {m}"),
            CoreError::Capability(m) => write!(f, "capability error: {m}"),
            CoreError::Numeric(m) => write!(f, "numeric error: {m}"),
            CoreError::Config(m) => write!(f, "configuration error: {m}"),
        }
    }
}

impl core::error::Error for CoreError {}

pub(crate) fn domain(m: &str) -> CoreError {
    CoreError::Domain(String::from(m))
}

pub(crate) fn capability(m: &str) -> CoreError {
    CoreError::Capability(String::from(m))
}

pub(crate) fn numeric(m: &str) -> CoreError {
    CoreError::Numeric(String::from(m))
}

pub(crate) fn config(m: &str) -> CoreError {
    CoreError::Config(String::from(m))
}
