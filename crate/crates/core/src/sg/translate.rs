//! Translation of BESsy structure graphs back to formulae and equation
//! systems.

use std::collections::HashMap;

use crate::bes::{big_and, big_or, Bes, Equation, PropFormula, Sign};
use crate::error::{Error, Result};

use super::{bessy_violation, Decoration, StructureGraph};

/// Name of the variable that represents ranked vertex `u`.
pub fn fresh_name(u: usize) -> String {
    format!("X_{}", u)
}

fn require_bessy(sg: &StructureGraph) -> Result<()> {
    match bessy_violation(sg) {
        Some(why) => Err(Error::NotBessy(why)),
        None => Ok(()),
    }
}

struct Phi<'a> {
    sg: &'a StructureGraph,
    memo: HashMap<usize, PropFormula>,
}

impl<'a> Phi<'a> {
    fn new(sg: &'a StructureGraph) -> Self {
        Phi {
            sg,
            memo: HashMap::new(),
        }
    }

    fn successors(&mut self, u: usize) -> Vec<PropFormula> {
        self.sg.succ(u).iter().map(|&w| self.phi(w)).collect()
    }

    /// Terminates on BESsy graphs because every cycle passes through a
    /// ranked vertex, where the recursion stops.
    fn phi(&mut self, u: usize) -> PropFormula {
        if let Some(f) = self.memo.get(&u) {
            return f.clone();
        }
        let v = self.sg.vertex(u);
        let f = match (v.rank, v.dec, &v.fv) {
            (None, Some(Decoration::And), _) => big_and(self.successors(u)),
            (None, Some(Decoration::Or), _) => big_or(self.successors(u)),
            (_, Some(Decoration::Top), _) => PropFormula::True,
            (_, Some(Decoration::Bot), _) => PropFormula::False,
            (_, _, Some(x)) => PropFormula::Var(x.clone()),
            _ => PropFormula::Var(fresh_name(u)),
        };
        self.memo.insert(u, f.clone());
        f
    }

    fn rhs(&mut self, u: usize) -> Result<PropFormula> {
        let v = self.sg.vertex(u);
        if v.rank.is_none() {
            return Err(Error::Unranked(u));
        }
        Ok(match v.dec {
            Some(Decoration::And) => big_and(self.successors(u)),
            Some(Decoration::Or) => big_or(self.successors(u)),
            _ => {
                let w = self.sg.succ(u)[0];
                self.phi(w)
            }
        })
    }
}

/// The formula represented by vertex `u`.
pub fn phi(sg: &StructureGraph, u: usize) -> Result<PropFormula> {
    if u >= sg.len() {
        return Err(Error::NoSuchVertex(u));
    }
    require_bessy(sg)?;
    Ok(Phi::new(sg).phi(u))
}

/// The right-hand side of the equation for ranked vertex `u`.
pub fn rhs_of(sg: &StructureGraph, u: usize) -> Result<PropFormula> {
    if u >= sg.len() {
        return Err(Error::NoSuchVertex(u));
    }
    require_bessy(sg)?;
    Phi::new(sg).rhs(u)
}

/// One equation per ranked vertex, a least fixpoint iff the rank is odd,
/// ordered by descending rank and then ascending vertex id.
pub fn to_bes(sg: &StructureGraph) -> Result<Bes> {
    require_bessy(sg)?;
    let mut ranked: Vec<(usize, usize)> = sg
        .vertices()
        .iter()
        .enumerate()
        .filter_map(|(u, v)| v.rank.map(|r| (r, u)))
        .collect();
    for (_, u) in &ranked {
        let name = fresh_name(*u);
        if sg
            .vertices()
            .iter()
            .any(|v| v.fv.as_deref() == Some(name.as_str()))
        {
            return Err(Error::NameCollision(name));
        }
    }
    ranked.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut phi = Phi::new(sg);
    let mut equations = Vec::with_capacity(ranked.len());
    for (r, u) in ranked {
        let sign = if r % 2 == 1 { Sign::Mu } else { Sign::Nu };
        equations.push(Equation::new(sign, fresh_name(u), phi.rhs(u)?));
    }
    Bes::new(equations)
}
