//! The expression language for linear quaternion functions.

mod ast;
mod error;
mod lexer;
mod parser;
mod reduce;

pub use ast::{Expr, Program, SignedTerm, Statement};
pub use error::{ParseError, ParseErrorKind, ReduceError};
pub use lexer::Pos;
pub use parser::{parse, parse_quaternion};
pub use reduce::{reduce_expr, reduce_expr_with, reduce_program, Environment, Reduction};
