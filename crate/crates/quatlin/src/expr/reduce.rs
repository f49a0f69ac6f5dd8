use quatlin_core::{compose, CanonicalForm, Method, Quaternion, TermList};

use super::ast::{Expr, Program};
use super::error::ReduceError;

/// Reduced functions by name, in definition order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Environment {
    entries: Vec<(String, CanonicalForm)>,
}

impl Environment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, name: &str) -> Option<&CanonicalForm> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn bind(
        &mut self,
        name: impl Into<String>,
        form: CanonicalForm,
    ) -> Result<(), ReduceError> {
        let name = name.into();
        if self.get(&name).is_some() {
            return Err(ReduceError::Redefinition(name));
        }
        self.entries.push((name, form));
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &CanonicalForm)> {
        self.entries.iter().map(|(n, f)| (n.as_str(), f))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Reduces with the matrix method.
pub fn reduce_expr(expr: &Expr, env: &Environment) -> Result<CanonicalForm, ReduceError> {
    reduce_expr_with(expr, env, Method::Matrix)
}

/// Structural reduction of a tree to one canonical form:
///
/// * a product `m₁…mₐ · S · n₁…n_b` is the single term `(Πm, Πn)` reduced
///   with `method`, composed with the reduction of `S`;
/// * sums add, weights scale;
/// * `f(e)` composes the bound form of `f` with the reduction of `e`.
pub fn reduce_expr_with(
    expr: &Expr,
    env: &Environment,
    method: Method,
) -> Result<CanonicalForm, ReduceError> {
    match expr {
        Expr::Literal(_) => Err(ReduceError::ConstantExpression),
        Expr::State => Ok(CanonicalForm::IDENTITY),
        Expr::Product(factors) => {
            let states: Vec<usize> = factors
                .iter()
                .enumerate()
                .filter(|(_, f)| f.is_state_bearing())
                .map(|(n, _)| n)
                .collect();
            let [at] = states[..] else {
                return Err(ReduceError::StateFactorCount(states.len()));
            };
            let literal_product = |fs: &[Expr]| {
                fs.iter().fold(Quaternion::ONE, |acc, f| match f {
                    Expr::Literal(q) => acc * *q,
                    _ => unreachable!("only one state-bearing factor"),
                })
            };
            let left = literal_product(&factors[..at]);
            let right = literal_product(&factors[at + 1..]);
            let outer = method.reduce(&TermList::from(vec![(left, right)]));
            match &factors[at] {
                Expr::State => Ok(outer),
                inner => Ok(compose(&outer, &reduce_expr_with(inner, env, method)?)),
            }
        }
        Expr::Sum(terms) => terms.iter().try_fold(CanonicalForm::ZERO, |acc, t| {
            let f = reduce_expr_with(&t.expr, env, method)?;
            Ok(if t.negative { acc - f } else { acc + f })
        }),
        Expr::ScalarWeight { weight, expr } => {
            Ok(reduce_expr_with(expr, env, method)?.scale(*weight))
        }
        Expr::Apply { name, arg } => {
            let outer = *env
                .get(name)
                .ok_or_else(|| ReduceError::UnboundName(name.clone()))?;
            Ok(compose(&outer, &reduce_expr_with(arg, env, method)?))
        }
    }
}

/// Result of reducing a whole program.
#[derive(Debug, Clone, PartialEq)]
pub struct Reduction {
    pub env: Environment,
    /// Form of the last statement.
    pub result: CanonicalForm,
}

/// Reduces every statement in order, binding named ones.
pub fn reduce_program(program: &Program, method: Method) -> Result<Reduction, ReduceError> {
    let mut env = Environment::new();
    let mut result = None;
    for stmt in &program.statements {
        let form = reduce_expr_with(&stmt.expr, &env, method)?;
        if let Some(name) = &stmt.name {
            env.bind(name.clone(), form)?;
        }
        result = Some(form);
    }
    let result = result.ok_or(ReduceError::EmptyProgram)?;
    Ok(Reduction { env, result })
}
