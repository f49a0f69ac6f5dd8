use quatlin_core::Quaternion;

use super::lexer::Pos;

/// Parse tree of a linear quaternion function of the state symbol `q`.
///
/// Well-formed trees keep every [`Expr::Product`] to exactly one
/// state-bearing factor, with all other factors [`Expr::Literal`]s, so a
/// tree always denotes a linear function.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Literal(Quaternion),
    /// The state symbol `q`.
    State,
    /// Factors in written order.
    Product(Vec<Expr>),
    Sum(Vec<SignedTerm>),
    Apply {
        name: String,
        arg: Box<Expr>,
    },
    ScalarWeight {
        weight: f64,
        expr: Box<Expr>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignedTerm {
    pub negative: bool,
    pub expr: Expr,
}

impl SignedTerm {
    pub fn plus(expr: Expr) -> Self {
        SignedTerm {
            negative: false,
            expr,
        }
    }

    pub fn minus(expr: Expr) -> Self {
        SignedTerm {
            negative: true,
            expr,
        }
    }
}

impl Expr {
    pub fn literal(q: Quaternion) -> Self {
        Expr::Literal(q)
    }

    pub fn apply(name: impl Into<String>, arg: Expr) -> Self {
        Expr::Apply {
            name: name.into(),
            arg: Box::new(arg),
        }
    }

    pub fn weighted(weight: f64, expr: Expr) -> Self {
        Expr::ScalarWeight {
            weight,
            expr: Box::new(expr),
        }
    }

    /// Whether the node depends on `q`. Only literals do not.
    pub fn is_state_bearing(&self) -> bool {
        !matches!(self, Expr::Literal(_))
    }
}

/// One `name = expr` binding or bare expression.
#[derive(Debug, Clone, PartialEq)]
pub struct Statement {
    pub name: Option<String>,
    pub expr: Expr,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Program {
    pub statements: Vec<Statement>,
}
