use thiserror::Error;

use crate::algebra::Variable;
use crate::combinatorics::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition weights differ: |{0}| != |{1}|")]
    WeightMismatch(Partition, Partition),

    #[error("partition {inner} is not contained in {outer}")]
    NotContained { inner: Partition, outer: Partition },

    #[error("malformed partition `{0}`")]
    ParsePartition(String),

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at {symbol} = {value}: factor {factor} vanishes")]
    Pole {
        symbol: String,
        value: String,
        factor: String,
    },

    #[error("cannot combine series in {0} with series in {1}")]
    VariableMismatch(Variable, Variable),

    #[error("coefficient of power {power} is not guaranteed (series exact through {order})")]
    BeyondOrder { power: i64, order: i64 },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("invalid request: {0}")]
    InvalidRequest(String),

    #[error("cannot parse expression: {0}")]
    ParseExpr(String),
}
