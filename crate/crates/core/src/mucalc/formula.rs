//! Modal μ-calculus formulae in positive form.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bes::Sign;
use crate::error::{Error, Result};

/// The action set of a modality: either listed explicitly or given as the
/// complement of a list with respect to the actions of the system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ActionSet {
    Only(BTreeSet<String>),
    Except(BTreeSet<String>),
}

impl ActionSet {
    pub fn only<'a>(actions: impl IntoIterator<Item = &'a str>) -> Self {
        ActionSet::Only(actions.into_iter().map(String::from).collect())
    }

    pub fn except<'a>(actions: impl IntoIterator<Item = &'a str>) -> Self {
        ActionSet::Except(actions.into_iter().map(String::from).collect())
    }

    pub fn contains(&self, a: &str) -> bool {
        match self {
            ActionSet::Only(xs) => xs.contains(a),
            ActionSet::Except(xs) => !xs.contains(a),
        }
    }

    /// The explicit set this denotes over the action alphabet `act`.
    pub fn resolve(&self, act: &BTreeSet<String>) -> BTreeSet<String> {
        match self {
            ActionSet::Only(xs) => xs.clone(),
            ActionSet::Except(xs) => act.difference(xs).cloned().collect(),
        }
    }
}

impl fmt::Display for ActionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (bang, xs) = match self {
            ActionSet::Only(xs) => ("", xs),
            ActionSet::Except(xs) => ("!", xs),
        };
        let list: Vec<&str> = xs.iter().map(String::as_str).collect();
        write!(f, "{}{}", bang, list.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MuFormula {
    True,
    False,
    Var(String),
    And(Box<MuFormula>, Box<MuFormula>),
    Or(Box<MuFormula>, Box<MuFormula>),
    Box(ActionSet, Box<MuFormula>),
    Diamond(ActionSet, Box<MuFormula>),
    Fix(Sign, String, Box<MuFormula>),
}

impl MuFormula {
    pub fn var(x: &str) -> Self {
        MuFormula::Var(x.to_string())
    }

    pub fn and(l: MuFormula, r: MuFormula) -> Self {
        MuFormula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: MuFormula, r: MuFormula) -> Self {
        MuFormula::Or(Box::new(l), Box::new(r))
    }

    pub fn boxed(a: ActionSet, f: MuFormula) -> Self {
        MuFormula::Box(a, Box::new(f))
    }

    pub fn diamond(a: ActionSet, f: MuFormula) -> Self {
        MuFormula::Diamond(a, Box::new(f))
    }

    pub fn nu(x: &str, f: MuFormula) -> Self {
        MuFormula::Fix(Sign::Nu, x.to_string(), Box::new(f))
    }

    pub fn mu(x: &str, f: MuFormula) -> Self {
        MuFormula::Fix(Sign::Mu, x.to_string(), Box::new(f))
    }

    /// Variables bound by some fixpoint, in order of appearance.
    pub fn binders(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.walk(&mut |g| {
            if let MuFormula::Fix(_, x, _) = g {
                out.push(x.clone());
            }
        });
        out
    }

    /// Variables that occur in the formula.
    pub fn occ(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.walk(&mut |g| {
            if let MuFormula::Var(x) = g {
                out.insert(x.clone());
            }
        });
        out
    }

    /// Variables with an occurrence outside the scope of their binder.
    pub fn free_vars(&self) -> BTreeSet<String> {
        fn go(f: &MuFormula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
            match f {
                MuFormula::True | MuFormula::False => {}
                MuFormula::Var(x) => {
                    if !bound.contains(x) {
                        out.insert(x.clone());
                    }
                }
                MuFormula::And(l, r) | MuFormula::Or(l, r) => {
                    go(l, bound, out);
                    go(r, bound, out);
                }
                MuFormula::Box(_, g) | MuFormula::Diamond(_, g) => go(g, bound, out),
                MuFormula::Fix(_, x, g) => {
                    bound.push(x.clone());
                    go(g, bound, out);
                    bound.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Checks that no variable is bound twice and that no bound variable
    /// also occurs outside the scope of its binder.
    pub fn check_well_formed(&self) -> Result<()> {
        let binders = self.binders();
        let mut seen = BTreeSet::new();
        for x in &binders {
            if !seen.insert(x) {
                return Err(Error::IllFormed(format!("variable {} is bound twice", x)));
            }
        }
        if let Some(x) = self.free_vars().iter().find(|x| seen.contains(x)) {
            return Err(Error::IllFormed(format!(
                "variable {} occurs both bound and outside its binder",
                x
            )));
        }
        Ok(())
    }

    pub fn nesting_depth(&self) -> usize {
        match self {
            MuFormula::True | MuFormula::False | MuFormula::Var(_) => 0,
            MuFormula::And(l, r) | MuFormula::Or(l, r) => {
                1 + l.nesting_depth().max(r.nesting_depth())
            }
            MuFormula::Box(_, g) | MuFormula::Diamond(_, g) | MuFormula::Fix(_, _, g) => {
                1 + g.nesting_depth()
            }
        }
    }

    /// The action sets of all modalities.
    pub fn modalities(&self) -> Vec<&ActionSet> {
        fn go<'a>(f: &'a MuFormula, out: &mut Vec<&'a ActionSet>) {
            match f {
                MuFormula::True | MuFormula::False | MuFormula::Var(_) => {}
                MuFormula::And(l, r) | MuFormula::Or(l, r) => {
                    go(l, out);
                    go(r, out);
                }
                MuFormula::Box(a, g) | MuFormula::Diamond(a, g) => {
                    out.push(a);
                    go(g, out);
                }
                MuFormula::Fix(_, _, g) => go(g, out),
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    /// Replaces every complemented action set by the explicit set it
    /// denotes over `act`.
    pub fn resolve_complements(&self, act: &BTreeSet<String>) -> MuFormula {
        let r = |g: &MuFormula| Box::new(g.resolve_complements(act));
        match self {
            MuFormula::True | MuFormula::False | MuFormula::Var(_) => self.clone(),
            MuFormula::And(l, g) => MuFormula::And(r(l), r(g)),
            MuFormula::Or(l, g) => MuFormula::Or(r(l), r(g)),
            MuFormula::Box(a, g) => MuFormula::Box(ActionSet::Only(a.resolve(act)), r(g)),
            MuFormula::Diamond(a, g) => MuFormula::Diamond(ActionSet::Only(a.resolve(act)), r(g)),
            MuFormula::Fix(s, x, g) => MuFormula::Fix(*s, x.clone(), r(g)),
        }
    }

    fn walk(&self, visit: &mut dyn FnMut(&MuFormula)) {
        visit(self);
        match self {
            MuFormula::True | MuFormula::False | MuFormula::Var(_) => {}
            MuFormula::And(l, r) | MuFormula::Or(l, r) => {
                l.walk(visit);
                r.walk(visit);
            }
            MuFormula::Box(_, g) | MuFormula::Diamond(_, g) | MuFormula::Fix(_, _, g) => {
                g.walk(visit)
            }
        }
    }
}

impl fmt::Display for MuFormula {
    /// Prints in the concrete syntax accepted by the formula parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand(g: &MuFormula, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match g {
                MuFormula::And(..) | MuFormula::Or(..) | MuFormula::Fix(..) => write!(f, "({})", g),
                _ => write!(f, "{}", g),
            }
        }
        match self {
            MuFormula::True => write!(f, "true"),
            MuFormula::False => write!(f, "false"),
            MuFormula::Var(x) => write!(f, "{}", x),
            MuFormula::And(l, r) => {
                operand(l, f)?;
                write!(f, " && ")?;
                operand(r, f)
            }
            MuFormula::Or(l, r) => {
                operand(l, f)?;
                write!(f, " || ")?;
                operand(r, f)
            }
            MuFormula::Box(a, g) => {
                write!(f, "[{}]", a)?;
                operand(g, f)
            }
            MuFormula::Diamond(a, g) => {
                write!(f, "<{}>", a)?;
                operand(g, f)
            }
            MuFormula::Fix(s, x, g) => write!(f, "{} {}. {}", s.keyword(), x, g),
        }
    }
}
