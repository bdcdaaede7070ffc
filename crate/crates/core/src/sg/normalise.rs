//! Normalisation: every unranked vertex with a successor receives rank 0.

use super::StructureGraph;

pub fn normalise(sg: &StructureGraph) -> StructureGraph {
    let vertices = sg
        .vertices()
        .iter()
        .map(|v| {
            let mut v = v.clone();
            if v.rank.is_none() && !v.succ.is_empty() {
                v.rank = Some(0);
            }
            v
        })
        .collect();
    StructureGraph::new(vertices, sg.root()).expect("same shape as the input")
}

/// True iff every vertex with a successor is ranked.
pub fn is_normalised(sg: &StructureGraph) -> bool {
    sg.vertices()
        .iter()
        .all(|v| v.succ.is_empty() || v.rank.is_some())
}
