//! Recursive-descent parser.
//!
//! ```text
//! program := stmt (';' stmt)* [';']
//! stmt    := ident '=' expr | expr
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor ('*' factor)*
//! factor  := ('+'|'-') factor | real | real('i'|'j'|'k') | 'i' | 'j' | 'k'
//!          | 'q' | ident '(' expr ')' | '(' expr ')' | '(' real ',' real ',' real ',' real ')'
//! ```
//!
//! Sub-expressions that do not mention `q` are folded to quaternion
//! literals while parsing, so `(2+i)*q` has a single literal factor. A
//! constant may only appear as a factor of a product with `q`.

use std::collections::HashSet;

use quatlin_core::Quaternion;

use super::ast::{Expr, Program, SignedTerm, Statement};
use super::error::{ParseError, ParseErrorKind};
use super::lexer::{tokenize, Pos, Tok, Token};

const RESERVED: [&str; 4] = ["i", "j", "k", "q"];

/// Parses a whole program. Function names must be bound before use.
pub fn parse(src: &str) -> Result<Program, ParseError> {
    let mut parser = Parser::new(src)?;
    parser.program()
}

/// Parses a standalone quaternion literal: Cartesian `a+bi+cj+dk` (any
/// subset of components, free signs) or tuple `(a,b,c,d)`.
pub fn parse_quaternion(src: &str) -> Result<Quaternion, ParseError> {
    let mut parser = Parser::new(src)?;
    let start = parser.pos();
    let value = parser.expr()?;
    parser.expect_eof()?;
    match value {
        Value::Const(q, _) => Ok(q),
        Value::Linear(_) => Err(ParseError::new(start, ParseErrorKind::NotALiteral)),
    }
}

/// A parsed sub-expression: folded constant, or a tree depending on `q`.
enum Value {
    Const(Quaternion, Pos),
    Linear(Expr),
}

struct Parser {
    tokens: Vec<Token>,
    idx: usize,
    bound: HashSet<String>,
}

impl Parser {
    fn new(src: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            tokens: tokenize(src)?,
            idx: 0,
            bound: HashSet::new(),
        })
    }

    fn peek(&self) -> &Tok {
        &self.tokens[self.idx].tok
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let last = self.tokens.len() - 1;
        &self.tokens[(self.idx + offset).min(last)].tok
    }

    fn pos(&self) -> Pos {
        self.tokens[self.idx].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.idx].clone();
        if self.idx < self.tokens.len() - 1 {
            self.idx += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expected(&self, what: &str) -> ParseError {
        ParseError::new(
            self.pos(),
            ParseErrorKind::Expected {
                expected: what.to_string(),
                found: self.peek().describe(),
            },
        )
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.expected(what))
        }
    }

    fn expect_eof(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.expected("end of input"))
        }
    }

    fn program(&mut self) -> Result<Program, ParseError> {
        let mut statements = vec![self.statement()?];
        while self.eat(&Tok::Semi) {
            if *self.peek() == Tok::Eof {
                break;
            }
            statements.push(self.statement()?);
        }
        if *self.peek() != Tok::Eof {
            return Err(self.expected("`;` or end of input"));
        }
        Ok(Program { statements })
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        let pos = self.pos();
        let name = match (self.peek().clone(), self.peek_at(1)) {
            (Tok::Ident(name), Tok::Equals) => {
                if RESERVED.contains(&name.as_str()) {
                    return Err(ParseError::new(pos, ParseErrorKind::ReservedName(name)));
                }
                if self.bound.contains(&name) {
                    return Err(ParseError::new(pos, ParseErrorKind::Redefinition(name)));
                }
                self.bump();
                self.bump();
                Some(name)
            }
            _ => None,
        };
        let expr = match self.expr()? {
            Value::Linear(expr) => expr,
            Value::Const(_, _) => {
                return Err(ParseError::new(pos, ParseErrorKind::NoStateVariable))
            }
        };
        if let Some(name) = &name {
            self.bound.insert(name.clone());
        }
        Ok(Statement { name, expr, pos })
    }

    fn expr(&mut self) -> Result<Value, ParseError> {
        let mut terms = Vec::new();
        let mut negative = false;
        if self.eat(&Tok::Minus) {
            negative = true;
        } else {
            self.eat(&Tok::Plus);
        }
        terms.push((negative, self.term()?));
        loop {
            let negative = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
            terms.push((negative, self.term()?));
        }

        let constants = terms
            .iter()
            .filter(|(_, v)| matches!(v, Value::Const(..)))
            .count();
        if constants == terms.len() {
            let pos = match terms[0].1 {
                Value::Const(_, pos) => pos,
                Value::Linear(_) => unreachable!(),
            };
            let sum = terms
                .into_iter()
                .map(|(neg, v)| match v {
                    Value::Const(q, _) if neg => -q,
                    Value::Const(q, _) => q,
                    Value::Linear(_) => unreachable!(),
                })
                .sum();
            return Ok(Value::Const(sum, pos));
        }
        if let Some(pos) = terms.iter().find_map(|(_, v)| match v {
            Value::Const(_, pos) => Some(*pos),
            Value::Linear(_) => None,
        }) {
            return Err(ParseError::new(pos, ParseErrorKind::ConstantTerm));
        }

        let mut linear: Vec<SignedTerm> = terms
            .into_iter()
            .map(|(negative, v)| match v {
                Value::Linear(expr) => SignedTerm { negative, expr },
                Value::Const(..) => unreachable!(),
            })
            .collect();
        if linear.len() == 1 && !linear[0].negative {
            return Ok(Value::Linear(linear.pop().unwrap().expr));
        }
        Ok(Value::Linear(Expr::Sum(linear)))
    }

    fn term(&mut self) -> Result<Value, ParseError> {
        let mut factors = vec![(self.pos(), self.factor()?)];
        while self.eat(&Tok::Star) {
            factors.push((self.pos(), self.factor()?));
        }

        let mut state_positions = factors
            .iter()
            .filter(|(_, v)| matches!(v, Value::Linear(_)))
            .map(|(pos, _)| *pos);
        let first_state = state_positions.next();
        if let Some(pos) = state_positions.next() {
            return Err(ParseError::new(pos, ParseErrorKind::Nonlinear));
        }

        if first_state.is_none() {
            let pos = factors[0].0;
            let product = factors
                .into_iter()
                .map(|(_, v)| match v {
                    Value::Const(q, _) => q,
                    Value::Linear(_) => unreachable!(),
                })
                .fold(Quaternion::ONE, |acc, q| acc * q);
            return Ok(Value::Const(product, pos));
        }
        if factors.len() == 1 {
            return Ok(factors.pop().unwrap().1);
        }
        let exprs = factors
            .into_iter()
            .map(|(_, v)| match v {
                Value::Const(q, _) => Expr::Literal(q),
                Value::Linear(e) => e,
            })
            .collect();
        Ok(Value::Linear(Expr::Product(exprs)))
    }

    fn factor(&mut self) -> Result<Value, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Minus => {
                self.bump();
                Ok(match self.factor()? {
                    Value::Const(q, _) => Value::Const(-q, pos),
                    Value::Linear(e) => Value::Linear(Expr::weighted(-1.0, e)),
                })
            }
            Tok::Plus => {
                self.bump();
                self.factor()
            }
            Tok::Number(v) => {
                self.bump();
                Ok(Value::Const(Quaternion::real(v), pos))
            }
            Tok::Imaginary(v, axis) => {
                self.bump();
                Ok(Value::Const(axis.unit().scale(v), pos))
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "i" => Ok(Value::Const(Quaternion::I, pos)),
                    "j" => Ok(Value::Const(Quaternion::J, pos)),
                    "k" => Ok(Value::Const(Quaternion::K, pos)),
                    "q" => Ok(Value::Linear(Expr::State)),
                    _ => self.application(name, pos),
                }
            }
            Tok::LParen => {
                self.bump();
                if self.at_tuple() {
                    return self.tuple(pos);
                }
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(match inner {
                    Value::Const(q, _) => Value::Const(q, pos),
                    linear => linear,
                })
            }
            _ => Err(self.expected("a factor")),
        }
    }

    fn application(&mut self, name: String, pos: Pos) -> Result<Value, ParseError> {
        if *self.peek() != Tok::LParen {
            let kind = if self.bound.contains(&name) {
                ParseErrorKind::UnappliedFunction(name)
            } else {
                ParseErrorKind::Unexpected(format!("identifier `{name}`"))
            };
            return Err(ParseError::new(pos, kind));
        }
        if !self.bound.contains(&name) {
            return Err(ParseError::new(pos, ParseErrorKind::UnknownFunction(name)));
        }
        self.bump();
        let arg_pos = self.pos();
        let arg = self.expr()?;
        self.expect(Tok::RParen, "`)`")?;
        match arg {
            Value::Linear(arg) => Ok(Value::Linear(Expr::apply(name, arg))),
            Value::Const(..) => Err(ParseError::new(arg_pos, ParseErrorKind::NoStateVariable)),
        }
    }

    /// After `(`: a signed number followed by `,` starts a tuple.
    fn at_tuple(&self) -> bool {
        let offset = usize::from(matches!(self.peek(), Tok::Minus | Tok::Plus));
        matches!(self.peek_at(offset), Tok::Number(_)) && *self.peek_at(offset + 1) == Tok::Comma
    }

    fn tuple(&mut self, pos: Pos) -> Result<Value, ParseError> {
        let mut components = vec![self.signed_number()?];
        while self.eat(&Tok::Comma) {
            components.push(self.signed_number()?);
        }
        self.expect(Tok::RParen, "`,` or `)`")?;
        match <[f64; 4]>::try_from(components) {
            Ok(c) => Ok(Value::Const(Quaternion::from_array(c), pos)),
            Err(c) => Err(ParseError::new(pos, ParseErrorKind::TupleArity(c.len()))),
        }
    }

    fn signed_number(&mut self) -> Result<f64, ParseError> {
        let sign = if self.eat(&Tok::Minus) {
            -1.0
        } else {
            self.eat(&Tok::Plus);
            1.0
        };
        match *self.peek() {
            Tok::Number(v) => {
                self.bump();
                Ok(sign * v)
            }
            _ => Err(self.expected("a real number")),
        }
    }
}
