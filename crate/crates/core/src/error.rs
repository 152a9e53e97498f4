use thiserror::Error;

use crate::report::ModelReport;

/// A violated construction invariant. Element names are resolved so the
/// message can be shown to a user as is.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("structure has {0} elements; at most 64 are supported")]
    TooLarge(usize),
    #[error("structure must have at least one element")]
    Empty,
    #[error("element index {index} out of range for {n} elements")]
    OutOfRange { index: usize, n: usize },
    #[error("order is not reflexive at {0}")]
    NotReflexive(String),
    #[error("order is not antisymmetric: {0} <= {1} and {1} <= {0}")]
    NotAntisymmetric(String, String),
    #[error("order is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(String, String, String),
    #[error("zero {zero} is not below {x}")]
    ZeroNotBottom { zero: String, x: String },
    #[error("one {one} is not above {x}")]
    OneNotTop { one: String, x: String },
    #[error("involution has wrong length {got}, expected {expected}")]
    InvolutionLength { got: usize, expected: usize },
    #[error("involution is not involutive at {0}: x'' != x")]
    NotInvolutive(String),
    #[error("involution is not antitone: {0} <= {1} but {1}' not <= {0}'")]
    NotAntitone(String, String),
    #[error("complementation fails at {0}: join of x and x' is not one")]
    ComplementJoin(String),
    #[error("complementation fails at {0}: meet of x and x' is not zero")]
    ComplementMeet(String),
    #[error("orthogonal elements {0} and {1} have no join")]
    OrthogonalJoinMissing(String, String),
    #[error("arrow entry ({0}, {1}) is empty")]
    EmptyArrowEntry(String, String),
    #[error("negation of {0} is not a singleton")]
    NegationNotSingleton(String),
    #[error("arrow table has {got} entries, expected {expected}")]
    TableShape { got: usize, expected: usize },
    #[error("{0} names given for {1} elements")]
    NameCount(usize, usize),
    #[error("duplicate element name {0}")]
    DuplicateName(String),
    #[error("operand set must be nonempty")]
    EmptyOperand,
}

/// Syntax errors in the line-oriented text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// Formula syntax error with a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct FormulaError {
    pub offset: usize,
    pub message: String,
}

/// Failures of the translations between the two presentations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConversionError {
    #[error("input is not an orthomodular poset")]
    NotOrthomodular(Box<ModelReport>),
    #[error("arrow table fails the implication axioms")]
    AxiomsFailed(Box<ModelReport>),
    #[error("internal consistency error: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
