use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Row with the wrong number of cells; 1-based row number.
    MalformedTable(usize),
    DuplicateAttribute(String),
    UnknownDecision(String),
    EmptyTable,
    /// The decision column was the only column.
    NoConditionalAttributes,
    UnknownAttribute(String),
    UniverseMismatch {
        left: usize,
        right: usize,
    },
    EmptyAttributeSet,
    /// Object not covered by any member of a family expected to cover `U`.
    NotACover(usize),
    NotInRemaining(String),
    TooManyAttributes {
        count: usize,
        cap: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedTable(row) => write!(f, "malformed table at row {row}"),
            Error::DuplicateAttribute(a) => write!(f, "duplicate attribute name `{a}`"),
            Error::UnknownDecision(a) => write!(f, "decision column `{a}` not found"),
            Error::EmptyTable => f.write_str("table has no objects or no attributes"),
            Error::NoConditionalAttributes => {
                f.write_str("table has no conditional attributes besides the decision")
            }
            Error::UnknownAttribute(a) => write!(f, "unknown attribute `{a}`"),
            Error::UniverseMismatch { left, right } => {
                write!(f, "universe mismatch: {left} vs {right} objects")
            }
            Error::EmptyAttributeSet => f.write_str("attribute set is empty"),
            Error::NotACover(x) => write!(f, "object {x} is not covered by the family"),
            Error::NotInRemaining(a) => write!(f, "attribute `{a}` is not in the remaining set"),
            Error::TooManyAttributes { count, cap } => {
                write!(
                    f,
                    "{count} conditional attributes exceed the enumeration cap of {cap}"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
