use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),

    #[error("point index {index} out of range for a space with {size} points")]
    PointOutOfRange { index: usize, size: usize },

    #[error("not a topology: {0}")]
    NotATopology(String),

    #[error("map `{map}` is not continuous: preimage of open {open:?} is {preimage:?}, which is not open")]
    NotContinuous {
        map: String,
        open: Vec<usize>,
        preimage: Vec<usize>,
    },

    #[error("map table has {got} entries but the domain has {expected} points")]
    TableLength { expected: usize, got: usize },

    #[error("result would have {requested} points, above the cap of {cap}")]
    SizeCap { requested: usize, cap: usize },

    #[error("space mismatch: expected `{expected}`, found `{found}`")]
    SpaceMismatch { expected: String, found: String },

    #[error("subset {extent:?} of `{space}` is not clopen")]
    NotClopen { space: String, extent: Vec<usize> },

    #[error("map `{0}` is not a clopen map")]
    NotClopenMap(String),

    #[error("space `{0}` is not discrete")]
    NotDiscreteBase(String),

    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown space `{0}`")]
    UnknownSpace(String),

    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("unknown point `{label}` in space `{space}`")]
    UnknownPoint { space: String, label: String },

    #[error("type error: {0}")]
    Type(String),
}
