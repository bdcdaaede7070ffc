//! Solution semantics of Boolean equation systems.
//!
//! [`solve_recursive`] transcribes the recursive definition of the solution
//! and serves as the reference oracle. [`solve_gauss`] is the practical
//! solver. The choice-function and lasso machinery for structure graphs
//! lives in [`choice`] and [`lasso`].

pub mod choice;
mod gauss;
pub mod lasso;

pub use choice::{apply_choice, enumerate_choices, ChoiceFunction};
pub use gauss::solve_gauss;
pub use lasso::solve_lasso;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bes::{Bes, Equation, PropFormula};

/// A total map from variables to booleans. Unmapped variables take the
/// default value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Environment {
    values: BTreeMap<String, bool>,
    default: bool,
}

impl Environment {
    pub fn new() -> Self {
        Environment::default()
    }

    pub fn with_default(default: bool) -> Self {
        Environment {
            values: BTreeMap::new(),
            default,
        }
    }

    pub fn get(&self, x: &str) -> bool {
        self.values.get(x).copied().unwrap_or(self.default)
    }

    pub fn set(&mut self, x: impl Into<String>, b: bool) {
        self.values.insert(x.into(), b);
    }

    /// The updated environment η[x := b].
    pub fn with(&self, x: &str, b: bool) -> Environment {
        let mut out = self.clone();
        out.set(x, b);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, bool)> {
        self.values.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// η ⊑ η′ on the given variables: η(x) implies η′(x).
    pub fn le_on<'a>(&self, other: &Environment, vars: impl IntoIterator<Item = &'a str>) -> bool {
        vars.into_iter().all(|x| !self.get(x) || other.get(x))
    }

    pub fn eq_on<'a>(&self, other: &Environment, vars: impl IntoIterator<Item = &'a str>) -> bool {
        vars.into_iter().all(|x| self.get(x) == other.get(x))
    }
}

impl FromIterator<(String, bool)> for Environment {
    fn from_iter<I: IntoIterator<Item = (String, bool)>>(iter: I) -> Self {
        Environment {
            values: iter.into_iter().collect(),
            default: false,
        }
    }
}

pub fn eval_formula(f: &PropFormula, env: &Environment) -> bool {
    match f {
        PropFormula::True => true,
        PropFormula::False => false,
        PropFormula::Var(x) => env.get(x),
        PropFormula::And(l, r) => eval_formula(l, env) && eval_formula(r, env),
        PropFormula::Or(l, r) => eval_formula(l, env) || eval_formula(r, env),
    }
}

/// The solution of `bes` under `env`, following the recursive definition:
/// the first equation `σX = f` is resolved by solving the tail with `X` set
/// to its extremal value, evaluating `f`, and solving the tail again with
/// `X` set to that value. Exponential in the number of equations.
pub fn solve_recursive(bes: &Bes, env: &Environment) -> Environment {
    fn go(eqs: &[Equation], env: &Environment) -> Environment {
        let Some((eq, rest)) = eqs.split_first() else {
            return env.clone();
        };
        let approx = go(rest, &env.with(&eq.lhs, eq.sign.extremal()));
        let b = eval_formula(&eq.rhs, &approx);
        go(rest, &env.with(&eq.lhs, b))
    }
    go(bes.equations(), env)
}

/// Largest system handed to [`solve_recursive`] by [`solve`].
pub const RECURSIVE_LIMIT: usize = 10;

/// Uses the reference solver for small systems and Gauss elimination
/// otherwise.
pub fn solve(bes: &Bes, env: &Environment) -> Environment {
    if bes.len() <= RECURSIVE_LIMIT {
        solve_recursive(bes, env)
    } else {
        solve_gauss(bes, env)
    }
}
