use thiserror::Error;

use crate::shapes::{Cell, Partition};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("({inner}) is not contained in ({outer})")]
    NotContained { outer: Partition, inner: Partition },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid reading: {0}")]
    InvalidReading(String),
    #[error("invalid picture: {0}")]
    InvalidPicture(String),
    #[error("value {0} already occurs in the tableau")]
    DuplicateValue(u32),
    #[error("the shape has no rows")]
    EmptyShape,
    #[error("bumping destination {0} is extreme, nothing is addable")]
    NotAddable(Cell),
    #[error("{0} is not a removable corner")]
    NotRemovable(Cell),
    #[error("{0} is not an inner corner")]
    NotInnerCorner(Cell),
    #[error("{0} is not an inner or extreme cocorner of the target")]
    InvalidCocorner(Cell),
    #[error("tableau is not Remmel-Whitney: {0}")]
    NotRemmelWhitney(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("picture has no balanced cocorner")]
    NotHookShape,
    #[error("picture has no balanced corner")]
    NotCoHookShape,
    #[error("{0}")]
    Range(String),
    #[error("n = {n} exceeds the configured cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("cache error: {0}")]
    Cache(String),
}
