//! The BESsy property: the structural constraints under which a structure
//! graph can be translated back to an equation system.

use super::{Decoration, StructureGraph};

/// Describes the first violated constraint, or `None` for a BESsy graph.
pub fn bessy_violation(sg: &StructureGraph) -> Option<String> {
    for (u, v) in sg.vertices().iter().enumerate() {
        let has_succ = !v.succ.is_empty();
        let terminal = matches!(v.dec, Some(Decoration::Top | Decoration::Bot)) || v.fv.is_some();
        if terminal && has_succ {
            return Some(format!(
                "vertex {} is labelled top, bot or fv but has successors",
                u
            ));
        }
        let junction = matches!(v.dec, Some(Decoration::And | Decoration::Or));
        if (junction || v.rank.is_some()) != has_succ {
            return Some(format!(
                "vertex {} has a junction decoration or rank but no successor, or vice versa",
                u
            ));
        }
        if v.succ.len() >= 2 && !junction {
            return Some(format!(
                "vertex {} branches without a junction decoration",
                u
            ));
        }
    }
    if let Some(u) = unranked_cycle_vertex(sg) {
        return Some(format!(
            "vertex {} lies on a cycle without a ranked vertex",
            u
        ));
    }
    None
}

pub fn is_bessy(sg: &StructureGraph) -> bool {
    bessy_violation(sg).is_none()
}

/// A vertex on a cycle that consists of unranked vertices only, found by
/// colouring depth-first search on the unranked subgraph.
fn unranked_cycle_vertex(sg: &StructureGraph) -> Option<usize> {
    const WHITE: u8 = 0;
    const GREY: u8 = 1;
    const BLACK: u8 = 2;
    let unranked = |u: usize| sg.vertex(u).rank.is_none();
    let mut colour = vec![WHITE; sg.len()];
    for start in 0..sg.len() {
        if colour[start] != WHITE || !unranked(start) {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        colour[start] = GREY;
        while let Some((u, i)) = stack.pop() {
            match sg.succ(u).get(i) {
                Some(&w) => {
                    stack.push((u, i + 1));
                    if !unranked(w) {
                        continue;
                    }
                    match colour[w] {
                        GREY => return Some(w),
                        WHITE => {
                            colour[w] = GREY;
                            stack.push((w, 0));
                        }
                        _ => {}
                    }
                }
                None => colour[u] = BLACK,
            }
        }
    }
    None
}
