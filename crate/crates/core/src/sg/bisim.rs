//! Strong bisimulation on structure graphs: the coarsest partition whose
//! blocks agree on decoration, rank and free variable and have matching
//! successor blocks.

use std::collections::BTreeSet;

pub use crate::partition::Partition;

use super::{StructureGraph, Vertex};

/// The bisimulation equivalence on the vertices of `sg`.
pub fn bisim_partition(sg: &StructureGraph) -> Partition {
    Partition::from_keys(sg.vertices().iter().map(|v| v.label())).refine(|u, p| {
        sg.succ(u)
            .iter()
            .map(|&w| p.block(w))
            .collect::<BTreeSet<usize>>()
    })
}

/// The quotient of `sg` by bisimilarity, together with the partition. Each
/// block becomes one vertex carrying the labels of its members; there is an
/// edge between blocks iff some member of the first has an edge into the
/// second.
pub fn bisim_minimise(sg: &StructureGraph) -> (StructureGraph, Partition) {
    let p = bisim_partition(sg);
    let vertices = p
        .blocks()
        .iter()
        .map(|members| {
            let rep = sg.vertex(members[0]);
            let succ: BTreeSet<usize> = members
                .iter()
                .flat_map(|&u| sg.succ(u).iter().map(|&w| p.block(w)))
                .collect();
            Vertex {
                dec: rep.dec,
                rank: rep.rank,
                fv: rep.fv.clone(),
                succ: succ.into_iter().collect(),
            }
        })
        .collect();
    let q = StructureGraph::new(vertices, p.block(sg.root())).expect("blocks are in range");
    (q, p)
}

/// Whether the roots of the two graphs are bisimilar.
pub fn bisim_equiv(a: &StructureGraph, b: &StructureGraph) -> bool {
    let union = a.disjoint_union(b);
    let p = bisim_partition(&union);
    p.same_block(a.root(), b.root() + a.len())
}
