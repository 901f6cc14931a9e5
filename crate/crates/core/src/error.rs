use alloc::string::String;

/// Errors raised by the library.
///
/// `InexactDivision`, `FormulaMismatch` and `Internal` should never fire on
/// valid input; they exist so that a defect surfaces as a value rather than a
/// wrong answer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("mismatched ring: {0}")]
    Mismatch(String),
    #[error("inexact division")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("formula mismatch: {0}")]
    FormulaMismatch(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! domain {
    ($($arg:tt)*) => {
        $crate::Error::Domain(alloc::format!($($arg)*))
    };
}
pub(crate) use domain;
