//! Solving normalised structure graphs that contain only one kind of
//! junction, by inspecting the cycles reachable from the root.
//!
//! Without ▲ vertices the root is true iff a reachable cycle has an even
//! maximal rank or a ⊤ vertex is reachable. Without ▼ vertices the root is
//! false iff a reachable cycle has an odd maximal rank or a ⊥ vertex is
//! reachable.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::sg::{bessy_violation, is_normalised, Decoration, StructureGraph};

/// Whether some cycle among the `reachable` vertices has a maximal rank of
/// the given parity. A cycle with maximal rank `r` exists iff some vertex
/// of rank `r` lies on a cycle through vertices of rank at most `r`.
fn cycle_with_max_parity(sg: &StructureGraph, reachable: &BTreeSet<usize>, even: bool) -> bool {
    let rank = |u: usize| sg.vertex(u).rank;
    reachable.iter().any(|&v| {
        let Some(r) = rank(v) else { return false };
        if (r % 2 == 0) != even {
            return false;
        }
        let allowed = |u: usize| rank(u).is_some_and(|q| q <= r);
        let mut seen = BTreeSet::new();
        let mut stack: Vec<usize> = sg.succ(v).iter().copied().filter(|&u| allowed(u)).collect();
        while let Some(u) = stack.pop() {
            if u == v {
                return true;
            }
            if seen.insert(u) {
                stack.extend(sg.succ(u).iter().copied().filter(|&w| allowed(w)));
            }
        }
        false
    })
}

/// The value of the root of a normalised, closed, BESsy graph that has no
/// ▲ vertices or no ▼ vertices.
pub fn solve_lasso(sg: &StructureGraph) -> Result<bool> {
    if let Some(why) = bessy_violation(sg) {
        return Err(Error::NotBessy(why));
    }
    if !is_normalised(sg) {
        return Err(Error::Precondition("graph is not normalised".into()));
    }
    if sg.has_free_variables() {
        return Err(Error::Precondition("graph has free variables".into()));
    }
    let conjunctive = sg.has_decoration(Decoration::And);
    let disjunctive = sg.has_decoration(Decoration::Or);
    if conjunctive && disjunctive {
        return Err(Error::MixedGraph);
    }
    let reachable = sg.reachable();
    let reaches = |d: Decoration| reachable.iter().any(|&u| sg.vertex(u).dec == Some(d));
    if !conjunctive {
        Ok(reaches(Decoration::Top) || cycle_with_max_parity(sg, &reachable, true))
    } else {
        Ok(!(reaches(Decoration::Bot) || cycle_with_max_parity(sg, &reachable, false)))
    }
}
