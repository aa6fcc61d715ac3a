use alloc::string::String;

/// Errors raised by the numeric layers.
///
/// The exact layer is total and never fails.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain the operation supports.
    #[error("{function}: argument {value} outside domain ({requirement})")]
    Domain {
        function: &'static str,
        value: f64,
        requirement: &'static str,
    },
    /// The integrand produced NaN or an infinity at a finite abscissa.
    #[error("integrand is not finite at abscissa {abscissa}")]
    NonFinite { abscissa: f64 },
    /// The requested density route is not available for this index.
    #[error("density method {method} does not support ell = {ell}")]
    Unsupported { method: &'static str, ell: u32 },
    /// Catch-all for malformed parameters (bad grids, empty lists, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn domain(function: &'static str, value: f64, requirement: &'static str) -> Error {
    Error::Domain {
        function,
        value,
        requirement,
    }
}
