//! Construction of the structure graph of a BES and a formula.
//!
//! Vertices are terms (formulae in the context of one fixed BES), shared by
//! structural equality. The rules fall into two strata. The first assigns
//! the labels that do not depend on edges: ⊤/⊥ for constants, ↗X for free
//! variables, ranks for bound variables, ▲/▼ for conjunctions and
//! disjunctions, and ▲/▼ for a bound variable whose right-hand side is an
//! unranked conjunction or disjunction. The second derives the edges, and
//! may consult the first stratum in negative premises.

use std::collections::HashMap;

use crate::bes::{Bes, PropFormula};

use super::{Decoration, StructureGraph, Vertex};

struct Rules<'a> {
    rhs: HashMap<&'a str, &'a PropFormula>,
    ranks: HashMap<String, usize>,
}

impl<'a> Rules<'a> {
    fn new(bes: &'a Bes) -> Self {
        Rules {
            rhs: bes
                .equations()
                .iter()
                .map(|eq| (eq.lhs.as_str(), &eq.rhs))
                .collect(),
            ranks: bes.ranks(),
        }
    }

    fn rank(&self, t: &PropFormula) -> Option<usize> {
        match t {
            PropFormula::Var(x) => self.ranks.get(x).copied(),
            _ => None,
        }
    }

    fn free_var(&self, t: &PropFormula) -> Option<String> {
        match t {
            PropFormula::Var(x) if !self.rhs.contains_key(x.as_str()) => Some(x.clone()),
            _ => None,
        }
    }

    fn decoration(&self, t: &PropFormula) -> Option<Decoration> {
        match t {
            PropFormula::True => Some(Decoration::Top),
            PropFormula::False => Some(Decoration::Bot),
            PropFormula::And(..) => Some(Decoration::And),
            PropFormula::Or(..) => Some(Decoration::Or),
            PropFormula::Var(x) => match self.rhs.get(x.as_str())? {
                PropFormula::And(..) => Some(Decoration::And),
                PropFormula::Or(..) => Some(Decoration::Or),
                _ => None,
            },
        }
    }

    /// Whether the edges of `t` are flattened into a parent carrying
    /// decoration `d`: `t` is `d`-decorated and has no rank.
    fn inherits(&self, t: &PropFormula, d: Decoration) -> bool {
        self.decoration(t) == Some(d) && self.rank(t).is_none()
    }

    fn edges(&self, t: &PropFormula, out: &mut Vec<PropFormula>) {
        match t {
            PropFormula::And(l, r) => {
                for c in [l.as_ref(), r.as_ref()] {
                    if self.inherits(c, Decoration::And) {
                        self.edges(c, out);
                    } else {
                        out.push(c.clone());
                    }
                }
            }
            PropFormula::Or(l, r) => {
                for c in [l.as_ref(), r.as_ref()] {
                    if self.inherits(c, Decoration::Or) {
                        self.edges(c, out);
                    } else {
                        out.push(c.clone());
                    }
                }
            }
            PropFormula::Var(x) => {
                if let Some(f) = self.rhs.get(x.as_str()) {
                    if f.is_and() || f.is_or() {
                        self.edges(f, out);
                    } else {
                        out.push((*f).clone());
                    }
                }
            }
            PropFormula::True | PropFormula::False => {}
        }
    }

    fn successors(&self, t: &PropFormula) -> Vec<PropFormula> {
        let mut out = Vec::new();
        self.edges(t, &mut out);
        let mut unique = Vec::with_capacity(out.len());
        for s in out {
            if !unique.contains(&s) {
                unique.push(s);
            }
        }
        unique
    }
}

/// The structure graph of `f` in the context of `bes`, restricted to the
/// part reachable from `f`.
pub fn build(bes: &Bes, f: &PropFormula) -> StructureGraph {
    build_with_terms(bes, f).0
}

/// As [`build`], also returning the term of every vertex. Vertex ids follow
/// the first-visit order of a depth-first traversal that explores
/// successors in the order the rules produce them (left operand first).
pub fn build_with_terms(bes: &Bes, f: &PropFormula) -> (StructureGraph, Vec<PropFormula>) {
    let rules = Rules::new(bes);
    let mut ids: HashMap<PropFormula, usize> = HashMap::new();
    let mut terms: Vec<PropFormula> = Vec::new();
    let mut succ_terms: Vec<Vec<PropFormula>> = Vec::new();

    let visit = |t: &PropFormula,
                 ids: &mut HashMap<PropFormula, usize>,
                 terms: &mut Vec<PropFormula>,
                 succ_terms: &mut Vec<Vec<PropFormula>>|
     -> Option<usize> {
        if ids.contains_key(t) {
            return None;
        }
        let id = terms.len();
        ids.insert(t.clone(), id);
        terms.push(t.clone());
        succ_terms.push(rules.successors(t));
        Some(id)
    };

    visit(f, &mut ids, &mut terms, &mut succ_terms);
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    while let Some((u, i)) = stack.pop() {
        let Some(next) = succ_terms[u].get(i).cloned() else {
            continue;
        };
        stack.push((u, i + 1));
        if let Some(w) = visit(&next, &mut ids, &mut terms, &mut succ_terms) {
            stack.push((w, 0));
        }
    }

    let vertices = terms
        .iter()
        .zip(&succ_terms)
        .map(|(t, succ)| Vertex {
            dec: rules.decoration(t),
            rank: rules.rank(t),
            fv: rules.free_var(t),
            succ: succ.iter().map(|s| ids[s]).collect(),
        })
        .collect();
    let graph = StructureGraph::new(vertices, 0).expect("ids are assigned to every successor");
    (graph, terms)
}
