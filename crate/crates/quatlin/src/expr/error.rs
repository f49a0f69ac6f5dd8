use thiserror::Error;

use super::lexer::Pos;

/// A syntax or well-formedness error with its 1-based source position.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{line}:{col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn new(pos: Pos, kind: ParseErrorKind) -> Self {
        ParseError {
            line: pos.line,
            col: pos.col,
            kind,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected {0}")]
    Unexpected(String),
    #[error("expected {expected}, found {found}")]
    Expected { expected: String, found: String },
    #[error("malformed number `{0}`")]
    BadNumber(String),
    #[error("nonlinear term: a product may contain only one factor depending on q")]
    Nonlinear,
    #[error("constant term: every term of a linear function must depend on q")]
    ConstantTerm,
    #[error("expression does not depend on q")]
    NoStateVariable,
    #[error("unknown function `{0}`")]
    UnknownFunction(String),
    #[error("`{0}` is a function and must be applied, e.g. `{0}(q)`")]
    UnappliedFunction(String),
    #[error("`{0}` is reserved and cannot name a function")]
    ReservedName(String),
    #[error("function `{0}` is already defined")]
    Redefinition(String),
    #[error("a quaternion tuple needs exactly 4 components, found {0}")]
    TupleArity(usize),
    #[error("expected a quaternion literal")]
    NotALiteral,
}

/// Failure to reduce a syntactically valid tree.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReduceError {
    #[error("unbound function `{0}`")]
    UnboundName(String),
    #[error("function `{0}` is already defined")]
    Redefinition(String),
    #[error("product must contain exactly one factor depending on q, found {0}")]
    StateFactorCount(usize),
    #[error("a constant quaternion is not a linear function of q")]
    ConstantExpression,
    #[error("empty program")]
    EmptyProgram,
}
