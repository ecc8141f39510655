use thiserror::Error;

use crate::space::Element;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("rig mismatch: {left} vs {right}")]
    RigMismatch { left: String, right: String },

    #[error("map is not defined at {0}")]
    MapIncomplete(Element),

    #[error("element {0} is not tagged L/R")]
    UntaggedElement(Element),

    #[error("element {0} is not a pair")]
    UnpairedElement(Element),

    #[error("key {0} is not a coefficient of the rig")]
    KeyNotCoefficient(Element),

    #[error("element {0} does not lie in the declared carrier")]
    CarrierMismatch(Element),

    #[error("{0} has no multiplicative inverse")]
    NotInvertible(String),

    #[error("distribution has total {0}, not one")]
    NotProbability(String),

    #[error("enumeration of {count} items exceeds the cap of {cap}")]
    CapExceeded { count: u128, cap: usize },
}

impl Error {
    pub(crate) fn rig_mismatch(left: impl ToString, right: impl ToString) -> Self {
        Error::RigMismatch {
            left: left.to_string(),
            right: right.to_string(),
        }
    }
}
