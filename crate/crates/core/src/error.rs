use std::fmt;

use thiserror::Error;

use crate::perm::Label;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("invalid label {0:?}: must be non-empty without whitespace, commas or parentheses")]
    InvalidLabel(String),
    #[error("label {0} appears twice in the domain")]
    DuplicateDomainLabel(Label),
    #[error("label {0:?} is not in the domain")]
    UnknownLabel(String),
    #[error("not a bijection: {0}")]
    NotBijection(String),
    #[error("domain mismatch: {left} vs {right}")]
    DomainMismatch { left: String, right: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A cycle-notation syntax or content error, with the byte offset where it
/// was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at column {}: {kind}", .position + 1)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownLabel(String),
    DuplicateLabel(String),
    Unexpected {
        found: Option<char>,
        expected: &'static str,
    },
    /// `(1)` or `()`: a cycle needs at least two labels.
    ShortCycle,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnknownLabel(l) => write!(f, "unknown label {l:?}"),
            ParseErrorKind::DuplicateLabel(l) => write!(f, "label {l:?} appears more than once"),
            ParseErrorKind::Unexpected {
                found: Some(c),
                expected,
            } => write!(f, "expected {expected}, found {c:?}"),
            ParseErrorKind::Unexpected {
                found: None,
                expected,
            } => write!(f, "expected {expected}, found end of input"),
            ParseErrorKind::ShortCycle => f.write_str("a cycle needs at least two labels"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("generator set is empty")]
    NoGenerators,
    #[error("generator name {0:?} is used twice")]
    DuplicateGenerator(String),
    #[error("invalid generator name {0:?}")]
    InvalidGeneratorName(String),
    #[error("generators act on different domains")]
    MixedDomains,
    #[error("closure exceeded the safety bound of {bound} elements")]
    ClosureTooLarge { bound: usize },
    #[error("at column {}: unknown generator in word {word:?}", .position + 1)]
    UnknownGenerator { word: String, position: usize },
    #[error("{0} is not an element of the group")]
    NotInGroup(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("orbit construction found {found} {what}, expected {expected}")]
    Structure {
        what: &'static str,
        found: usize,
        expected: usize,
    },
    #[error("{0:?} is not a vertex")]
    NotAVertex(String),
    #[error("{0} is not a rotation of the icosahedron")]
    NotARotation(String),
    #[error("{perm} has order {order}, which no rotation has")]
    UnexpectedOrder { perm: String, order: u64 },
    #[error("{0} is not a face rotation")]
    NotFaceRotation(String),
    #[error("the axis faces share {0} vertices, expected exactly one")]
    SharedVertices(usize),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("points must be distinct, got {0:?}")]
    PointsNotDistinct(Vec<String>),
    #[error("{0} is in neither group")]
    Unmapped(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Perm(#[from] PermError),
}
