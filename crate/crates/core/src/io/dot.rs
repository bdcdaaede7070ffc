//! DOT export of structure graphs.

use crate::sg::StructureGraph;

/// Renders `sg` in DOT. Vertex labels read `<id> <decoration> <rank> <fv>`
/// with absent parts omitted; the root has a double border.
pub fn to_dot(sg: &StructureGraph) -> String {
    let mut out = String::from("digraph sg {\n  node [shape=box];\n");
    for (u, v) in sg.vertices().iter().enumerate() {
        let mut label = u.to_string();
        if let Some(d) = v.dec {
            label.push(' ');
            label.push_str(d.glyph());
        }
        if let Some(r) = v.rank {
            label.push_str(&format!(" {}", r));
        }
        if let Some(x) = &v.fv {
            label.push_str(&format!(" ↗{}", x));
        }
        let border = if u == sg.root() {
            ", peripheries=2"
        } else {
            ""
        };
        out.push_str(&format!("  v{} [label=\"{}\"{}];\n", u, label, border));
    }
    for (u, w) in sg.edges() {
        out.push_str(&format!("  v{} -> v{};\n", u, w));
    }
    out.push_str("}\n");
    out
}
