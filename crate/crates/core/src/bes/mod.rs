//! Proposition formulae and Boolean equation systems.
//!
//! A BES is an ordered sequence of fixpoint equations `σX = f`. The order of
//! the equations determines the priority of the fixpoints, which is captured
//! by the [`rank`] of each bound variable.

mod order;

pub use order::{big_and, big_or, formula_cmp, ident_cmp};

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A proposition formula: constants, variables and binary conjunction and
/// disjunction. Structural equality is the identity used for sharing
/// vertices in structure graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PropFormula {
    True,
    False,
    Var(String),
    And(Box<PropFormula>, Box<PropFormula>),
    Or(Box<PropFormula>, Box<PropFormula>),
}

impl PropFormula {
    pub fn var(name: impl Into<String>) -> Self {
        PropFormula::Var(name.into())
    }

    pub fn constant(b: bool) -> Self {
        if b {
            PropFormula::True
        } else {
            PropFormula::False
        }
    }

    pub fn and(left: PropFormula, right: PropFormula) -> Self {
        PropFormula::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: PropFormula, right: PropFormula) -> Self {
        PropFormula::Or(Box::new(left), Box::new(right))
    }

    pub fn is_and(&self) -> bool {
        matches!(self, PropFormula::And(..))
    }

    pub fn is_or(&self) -> bool {
        matches!(self, PropFormula::Or(..))
    }

    /// Number of parse-tree nodes: leaves plus binary operators.
    pub fn size(&self) -> usize {
        match self {
            PropFormula::True | PropFormula::False | PropFormula::Var(_) => 1,
            PropFormula::And(l, r) | PropFormula::Or(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Variables occurring in the formula.
    pub fn occ(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            PropFormula::True | PropFormula::False => {}
            PropFormula::Var(x) => {
                out.insert(x.clone());
            }
            PropFormula::And(l, r) | PropFormula::Or(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            PropFormula::True | PropFormula::False | PropFormula::Var(_) => 0,
            PropFormula::And(l, r) | PropFormula::Or(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Replaces every occurrence of `x` by `by`, without simplification.
    pub fn replace_var(&self, x: &str, by: &PropFormula) -> PropFormula {
        match self {
            PropFormula::Var(y) if y == x => by.clone(),
            PropFormula::True | PropFormula::False | PropFormula::Var(_) => self.clone(),
            PropFormula::And(l, r) => PropFormula::and(l.replace_var(x, by), r.replace_var(x, by)),
            PropFormula::Or(l, r) => PropFormula::or(l.replace_var(x, by), r.replace_var(x, by)),
        }
    }

    /// Renames variables through `f`; variables mapped to `None` are kept.
    pub fn rename(&self, f: &dyn Fn(&str) -> Option<String>) -> PropFormula {
        match self {
            PropFormula::Var(y) => PropFormula::Var(f(y).unwrap_or_else(|| y.clone())),
            PropFormula::True | PropFormula::False => self.clone(),
            PropFormula::And(l, r) => PropFormula::and(l.rename(f), r.rename(f)),
            PropFormula::Or(l, r) => PropFormula::or(l.rename(f), r.rename(f)),
        }
    }
}

impl fmt::Display for PropFormula {
    /// Prints with `&&`/`||`, parenthesising every compound operand.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand(g: &PropFormula, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match g {
                PropFormula::And(..) | PropFormula::Or(..) => write!(f, "({})", g),
                _ => write!(f, "{}", g),
            }
        }
        match self {
            PropFormula::True => write!(f, "true"),
            PropFormula::False => write!(f, "false"),
            PropFormula::Var(x) => write!(f, "{}", x),
            PropFormula::And(l, r) => {
                operand(l, f)?;
                write!(f, " && ")?;
                operand(r, f)
            }
            PropFormula::Or(l, r) => {
                operand(l, f)?;
                write!(f, " || ")?;
                operand(r, f)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Mu,
    Nu,
}

impl Sign {
    /// The value a variable is initialised with when its own equation is
    /// resolved: `false` for least and `true` for greatest fixpoints.
    pub fn extremal(self) -> bool {
        self == Sign::Nu
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Sign::Mu => "mu",
            Sign::Nu => "nu",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Equation {
    pub sign: Sign,
    pub lhs: String,
    pub rhs: PropFormula,
}

impl Equation {
    pub fn new(sign: Sign, lhs: impl Into<String>, rhs: PropFormula) -> Self {
        Equation {
            sign,
            lhs: lhs.into(),
            rhs,
        }
    }

    pub fn mu(lhs: impl Into<String>, rhs: PropFormula) -> Self {
        Equation::new(Sign::Mu, lhs, rhs)
    }

    pub fn nu(lhs: impl Into<String>, rhs: PropFormula) -> Self {
        Equation::new(Sign::Nu, lhs, rhs)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} = {};", self.sign.keyword(), self.lhs, self.rhs)
    }
}

/// A well-formed Boolean equation system: every variable is the left-hand
/// side of at most one equation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bes {
    equations: Vec<Equation>,
}

impl Bes {
    pub fn new(equations: Vec<Equation>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for eq in &equations {
            if !seen.insert(eq.lhs.as_str()) {
                return Err(Error::DuplicateLhs(eq.lhs.clone()));
            }
        }
        Ok(Bes { equations })
    }

    pub fn empty() -> Self {
        Bes::default()
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn equation(&self, x: &str) -> Option<&Equation> {
        self.equations.iter().find(|eq| eq.lhs == x)
    }

    /// Variables occurring as left-hand side.
    pub fn bnd(&self) -> BTreeSet<String> {
        self.equations.iter().map(|eq| eq.lhs.clone()).collect()
    }

    /// Variables occurring in some right-hand side.
    pub fn occ(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for eq in &self.equations {
            eq.rhs.collect_vars(&mut out);
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        let bnd = self.bnd();
        self.occ().iter().all(|x| bnd.contains(x))
    }

    /// True iff no right-hand side contains both a conjunction and a
    /// disjunction.
    pub fn is_simple_form(&self) -> bool {
        fn ops(f: &PropFormula, and: &mut bool, or: &mut bool) {
            match f {
                PropFormula::And(l, r) => {
                    *and = true;
                    ops(l, and, or);
                    ops(r, and, or);
                }
                PropFormula::Or(l, r) => {
                    *or = true;
                    ops(l, and, or);
                    ops(r, and, or);
                }
                _ => {}
            }
        }
        self.equations.iter().all(|eq| {
            let (mut and, mut or) = (false, false);
            ops(&eq.rhs, &mut and, &mut or);
            !(and && or)
        })
    }

    /// Rank of every bound variable, computed from right to left: the last
    /// block has rank 0 when it is a greatest and 1 when it is a least
    /// fixpoint block, and every sign alternation adds one.
    pub fn ranks(&self) -> HashMap<String, usize> {
        let mut out = HashMap::with_capacity(self.equations.len());
        let mut next: Option<(Sign, usize)> = None;
        for eq in self.equations.iter().rev() {
            let block = match next {
                None => match eq.sign {
                    Sign::Nu => 0,
                    Sign::Mu => 1,
                },
                Some((sign, block)) if sign == eq.sign => block,
                Some((_, block)) => block + 1,
            };
            out.insert(eq.lhs.clone(), block);
            next = Some((eq.sign, block));
        }
        out
    }

    pub fn rank(&self, x: &str) -> Result<usize> {
        self.ranks()
            .get(x)
            .copied()
            .ok_or_else(|| Error::UnboundVariable(x.to_string()))
    }

    /// Replaces every occurrence of the free variable `x` by the constant
    /// `b` in every right-hand side. No simplification is performed.
    pub fn substitute(&self, x: &str, b: bool) -> Result<Bes> {
        if self.equation(x).is_some() {
            return Err(Error::BoundVariable(x.to_string()));
        }
        let c = PropFormula::constant(b);
        Ok(Bes {
            equations: self
                .equations
                .iter()
                .map(|eq| Equation::new(eq.sign, eq.lhs.clone(), eq.rhs.replace_var(x, &c)))
                .collect(),
        })
    }

    /// Sum over all equations of one plus the size of the right-hand side.
    pub fn size(&self) -> usize {
        self.equations.iter().map(|eq| 1 + eq.rhs.size()).sum()
    }

    /// Keeps the equations whose left-hand side is in `ks`, in order.
    pub fn restrict(&self, ks: &BTreeSet<String>) -> Bes {
        Bes {
            equations: self
                .equations
                .iter()
                .filter(|eq| ks.contains(&eq.lhs))
                .cloned()
                .collect(),
        }
    }

    /// The relevant variables of `f`: the least set containing `occ(f)` and
    /// closed under taking the right-hand side occurrences of bound members.
    pub fn kappa(&self, f: &PropFormula) -> BTreeSet<String> {
        let index: BTreeMap<&str, &Equation> = self
            .equations
            .iter()
            .map(|eq| (eq.lhs.as_str(), eq))
            .collect();
        let mut seen = f.occ();
        let mut todo: Vec<String> = seen.iter().cloned().collect();
        while let Some(x) = todo.pop() {
            if let Some(eq) = index.get(x.as_str()) {
                for y in eq.rhs.occ() {
                    if seen.insert(y.clone()) {
                        todo.push(y);
                    }
                }
            }
        }
        seen
    }
}

impl fmt::Display for Bes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for eq in &self.equations {
            writeln!(f, "{}", eq)?;
        }
        Ok(())
    }
}
