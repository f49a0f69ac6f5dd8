//! Test oracles and random fixtures shared by the integration tests.
//!
//! Nothing here calls the reduction machinery: the interpreter walks the
//! tree with plain quaternion products, and the composition expansion
//! builds the sixteen `(X₂ X₁, g₁ g₂)` terms directly.

#![allow(dead_code)]

use std::collections::HashMap;

use quatlin::expr::{Expr, SignedTerm};
use quatlin_core::{CanonicalForm, Quaternion, TermList};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int_quat(rng: &mut TestRng, bound: i32) -> Quaternion {
    let mut c = [0.0; 4];
    for v in &mut c {
        *v = rng.gen_range(-bound..=bound) as f64;
    }
    Quaternion::from_array(c)
}

pub fn real_quat(rng: &mut TestRng, bound: f64) -> Quaternion {
    let mut c = [0.0; 4];
    for v in &mut c {
        *v = rng.gen_range(-bound..bound);
    }
    Quaternion::from_array(c)
}

pub fn int_form(rng: &mut TestRng, bound: i32) -> CanonicalForm {
    CanonicalForm::from_slots([0; 4].map(|_| int_quat(rng, bound)))
}

pub fn real_form(rng: &mut TestRng, bound: f64) -> CanonicalForm {
    CanonicalForm::from_slots([0; 4].map(|_| real_quat(rng, bound)))
}

pub fn int_terms(rng: &mut TestRng, max_len: usize, bound: i32) -> TermList {
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| (int_quat(rng, bound), int_quat(rng, bound)))
        .collect()
}

pub fn real_terms(rng: &mut TestRng, max_len: usize, bound: f64) -> TermList {
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| (real_quat(rng, bound), real_quat(rng, bound)))
        .collect()
}

pub fn basis_points() -> [Quaternion; 4] {
    [Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K]
}

/// `f₂ ∘ f₁` as the explicit sixteen-term list: slot `g₂` of `f₂` times slot
/// `g₁` of `f₁` gives the term `X₂ X₁ q (g₁ g₂)`.
pub fn composition_expansion(f2: &CanonicalForm, f1: &CanonicalForm) -> TermList {
    let units = basis_points();
    let mut terms = TermList::new();
    for (x2, g2) in f2.slots().into_iter().zip(units) {
        for (x1, g1) in f1.slots().into_iter().zip(units) {
            terms.push(x2 * x1, g1 * g2);
        }
    }
    terms
}

/// Direct tree-walking evaluation at `q`; named functions are looked up as
/// trees and evaluated at their argument's value.
pub fn interpret(expr: &Expr, fns: &HashMap<String, Expr>, q: Quaternion) -> Quaternion {
    match expr {
        Expr::Literal(c) => *c,
        Expr::State => q,
        Expr::Product(factors) => factors
            .iter()
            .fold(Quaternion::ONE, |acc, f| acc * interpret(f, fns, q)),
        Expr::Sum(terms) => terms
            .iter()
            .map(|t| {
                let v = interpret(&t.expr, fns, q);
                if t.negative {
                    -v
                } else {
                    v
                }
            })
            .sum(),
        Expr::ScalarWeight { weight, expr } => interpret(expr, fns, q).scale(*weight),
        Expr::Apply { name, arg } => {
            let inner = interpret(arg, fns, q);
            interpret(&fns[name], fns, inner)
        }
    }
}

fn number(x: f64) -> String {
    // Exact round trip through the lexer.
    format!("{x:?}")
}

pub fn literal_source(c: Quaternion) -> String {
    let [a, b, cc, d] = c.to_array();
    let signed = |x: f64| {
        if x < 0.0 {
            format!("-{}", number(-x))
        } else {
            number(x)
        }
    };
    format!("({},{},{},{})", signed(a), signed(b), signed(cc), signed(d))
}

/// Renders a tree in the surface grammar.
pub fn to_source(expr: &Expr) -> String {
    match expr {
        Expr::Literal(c) => literal_source(*c),
        Expr::State => "q".to_string(),
        Expr::Product(factors) => factors
            .iter()
            .map(|f| match f {
                Expr::Sum(_) => format!("({})", to_source(f)),
                _ => to_source(f),
            })
            .collect::<Vec<_>>()
            .join("*"),
        Expr::Sum(terms) => {
            let mut out = String::new();
            for (n, t) in terms.iter().enumerate() {
                let op = match (n, t.negative) {
                    (0, false) => "",
                    (0, true) => "-",
                    (_, false) => " + ",
                    (_, true) => " - ",
                };
                out.push_str(op);
                match &t.expr {
                    Expr::Sum(_) => out.push_str(&format!("({})", to_source(&t.expr))),
                    e => out.push_str(&to_source(e)),
                }
            }
            out
        }
        Expr::ScalarWeight { weight, expr } => {
            format!(
                "{}*({})",
                literal_source(Quaternion::real(*weight)),
                to_source(expr)
            )
        }
        Expr::Apply { name, arg } => format!("{name}({})", to_source(arg)),
    }
}

/// A random linear tree of the given depth over previously defined names.
pub fn random_expr(rng: &mut TestRng, depth: u32, names: &[String]) -> Expr {
    let choice = if depth == 0 { 0 } else { rng.gen_range(0..5) };
    match choice {
        0 => {
            let mut factors = Vec::new();
            for _ in 0..rng.gen_range(0..=2) {
                factors.push(Expr::Literal(real_quat(rng, 2.0)));
            }
            factors.push(Expr::State);
            for _ in 0..rng.gen_range(0..=2) {
                factors.push(Expr::Literal(real_quat(rng, 2.0)));
            }
            if factors.len() == 1 {
                Expr::State
            } else {
                Expr::Product(factors)
            }
        }
        1 => {
            let n = rng.gen_range(2..=3);
            Expr::Sum(
                (0..n)
                    .map(|_| SignedTerm {
                        negative: rng.gen_bool(0.3),
                        expr: random_expr(rng, depth - 1, names),
                    })
                    .collect(),
            )
        }
        2 => Expr::weighted(rng.gen_range(-2.0..2.0), random_expr(rng, depth - 1, names)),
        3 if !names.is_empty() => {
            let name = names[rng.gen_range(0..names.len())].clone();
            Expr::apply(name, random_expr(rng, depth - 1, names))
        }
        _ => Expr::Product(vec![
            Expr::Literal(real_quat(rng, 2.0)),
            random_expr(rng, depth - 1, names),
            Expr::Literal(real_quat(rng, 2.0)),
        ]),
    }
}
