use num_bigint::BigInt;
use thiserror::Error;

use crate::pretzel::ClassTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial division leaves a nonzero remainder")]
    NonzeroRemainder,

    #[error("cannot normalize: polynomial vanishes at t = 1")]
    ZeroAtOne,

    #[error("cannot normalize: value {0} at t = 1 is not a unit")]
    NonUnitAtOne(BigInt),

    #[error("cannot normalize: exponent span {0} is odd")]
    OddSpan(i32),

    #[error("degenerate pretzel parameters {0:?}: {1}")]
    DegenerateParams([i64; 3], String),

    #[error("operation requires a {expected} knot, got {got:?}")]
    UnsupportedTag {
        expected: &'static str,
        got: ClassTag,
    },

    #[error("state index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("spin grading {s} outside the supported range {lo}..={hi}")]
    GradingOutOfRange { s: i64, lo: i64, hi: i64 },

    #[error("presentation is malformed: {0}")]
    MalformedPresentation(String),

    #[error("Alexander matrix minor has zero determinant")]
    ZeroDeterminant,

    #[error("torus knot parameters ({0}, {1}) must be coprime and at least 2")]
    BadTorusParams(i64, i64),

    #[error("Alexander polynomial is not symmetric with value 1 at t = 1")]
    NotNormalized,

    #[error("no consistent line assignment at s = {0}")]
    NoLineAssignment(i64),

    #[error("pairing {0} is not grading compatible")]
    IncompatiblePairing(String),

    #[error("empty homology table")]
    EmptyTable,
}

pub type Result<T> = std::result::Result<T, Error>;
