//! Structure graphs: vertex-labelled graphs capturing the dependencies and
//! top-level operators of a BES together with a formula.

mod bessy;
mod bisim;
mod build;
mod normalise;
mod translate;

pub use bessy::{bessy_violation, is_bessy};
pub use bisim::{bisim_equiv, bisim_minimise, bisim_partition, Partition};
pub use build::{build, build_with_terms};
pub use normalise::{is_normalised, normalise};
pub use translate::{fresh_name, phi, rhs_of, to_bes};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The vertex decorations: conjunction (▲), disjunction (▼), true (⊤) and
/// false (⊥).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Decoration {
    And,
    Or,
    Top,
    Bot,
}

impl Decoration {
    pub fn keyword(self) -> &'static str {
        match self {
            Decoration::And => "and",
            Decoration::Or => "or",
            Decoration::Top => "top",
            Decoration::Bot => "bot",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        match s {
            "and" => Some(Decoration::And),
            "or" => Some(Decoration::Or),
            "top" => Some(Decoration::Top),
            "bot" => Some(Decoration::Bot),
            _ => None,
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            Decoration::And => "/\\",
            Decoration::Or => "\\/",
            Decoration::Top => "top",
            Decoration::Bot => "bot",
        }
    }

    pub fn glyph(self) -> &'static str {
        match self {
            Decoration::And => "▲",
            Decoration::Or => "▼",
            Decoration::Top => "⊤",
            Decoration::Bot => "⊥",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub dec: Option<Decoration>,
    pub rank: Option<usize>,
    pub fv: Option<String>,
    /// Successor ids, sorted ascending and without duplicates.
    pub succ: Vec<usize>,
}

impl Vertex {
    /// The label compared by bisimulation: decoration, rank and free
    /// variable.
    pub fn label(&self) -> (Option<Decoration>, Option<usize>, Option<&str>) {
        (self.dec, self.rank, self.fv.as_deref())
    }
}

/// A structure graph ⟨T, t, →, d, r, ↗⟩ over vertices `0..len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StructureGraph {
    vertices: Vec<Vertex>,
    root: usize,
}

impl StructureGraph {
    /// Creates a graph after checking that the root and all edges refer to
    /// existing vertices. Successor lists are sorted and deduplicated.
    pub fn new(mut vertices: Vec<Vertex>, root: usize) -> Result<Self> {
        let n = vertices.len();
        if root >= n {
            return Err(Error::NoSuchVertex(root));
        }
        for v in &mut vertices {
            if let Some(&bad) = v.succ.iter().find(|&&w| w >= n) {
                return Err(Error::NoSuchVertex(bad));
            }
            v.succ.sort_unstable();
            v.succ.dedup();
        }
        Ok(StructureGraph { vertices, root })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, u: usize) -> &Vertex {
        &self.vertices[u]
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn succ(&self, u: usize) -> &[usize] {
        &self.vertices[u].succ
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(|v| v.succ.len()).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices
            .iter()
            .enumerate()
            .flat_map(|(u, v)| v.succ.iter().map(move |&w| (u, w)))
    }

    pub fn ranked_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.rank.is_some()).count()
    }

    pub fn has_decoration(&self, d: Decoration) -> bool {
        self.vertices.iter().any(|v| v.dec == Some(d))
    }

    pub fn has_free_variables(&self) -> bool {
        self.vertices.iter().any(|v| v.fv.is_some())
    }

    /// Same graph with a different root.
    pub fn with_root(&self, root: usize) -> Result<Self> {
        StructureGraph::new(self.vertices.clone(), root)
    }

    /// Vertices reachable from the root, in ascending id order.
    pub fn reachable(&self) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![self.root];
        while let Some(u) = stack.pop() {
            if seen.insert(u) {
                stack.extend(self.succ(u).iter().copied());
            }
        }
        seen
    }

    /// The subgraph reachable from the root, renumbered in depth-first
    /// first-visit order (successors in ascending id order).
    pub fn reachable_part(&self) -> StructureGraph {
        let order = self.dfs_order();
        let mut new_id = vec![usize::MAX; self.len()];
        for (i, &u) in order.iter().enumerate() {
            new_id[u] = i;
        }
        let vertices = order
            .iter()
            .map(|&u| {
                let v = &self.vertices[u];
                Vertex {
                    dec: v.dec,
                    rank: v.rank,
                    fv: v.fv.clone(),
                    succ: v.succ.iter().map(|&w| new_id[w]).collect(),
                }
            })
            .collect();
        StructureGraph::new(vertices, 0).expect("renumbering keeps edges in range")
    }

    fn dfs_order(&self) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut order = Vec::new();
        let mut stack: Vec<(usize, usize)> = vec![(self.root, 0)];
        seen[self.root] = true;
        order.push(self.root);
        while let Some((u, i)) = stack.pop() {
            if let Some(&w) = self.succ(u).get(i) {
                stack.push((u, i + 1));
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                    stack.push((w, 0));
                }
            }
        }
        order
    }

    /// Disjoint union; vertices of `other` are shifted by `self.len()`. The
    /// root of the result is the root of `self`.
    pub fn disjoint_union(&self, other: &StructureGraph) -> StructureGraph {
        let shift = self.len();
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().map(|v| Vertex {
            succ: v.succ.iter().map(|&w| w + shift).collect(),
            ..v.clone()
        }));
        StructureGraph {
            vertices,
            root: self.root,
        }
    }
}
