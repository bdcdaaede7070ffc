//! Line-oriented structure-graph format:
//!
//! ```text
//! sg <num_vertices> <root_id>
//! v <id> [rank=<n>] [dec=and|or|top|bot] [fv=<ident>]
//! e <from> <to>
//! ```
//!
//! Vertices without a `v` line carry no labels.

use crate::error::{Error, Result};
use crate::sg::{Decoration, StructureGraph, Vertex};

use super::is_ident_char;

fn number(line: usize, column: usize, word: &str) -> Result<usize> {
    word.parse()
        .map_err(|_| Error::parse(line, column, format!("expected a number, found `{}`", word)))
}

/// Splits a line into words with their 1-based starting columns.
fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub fn parse_sg(text: &str) -> Result<StructureGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut declared: Vec<bool> = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.split('%').next().unwrap_or("");
        let ws = words(line);
        let Some(&(col, kind)) = ws.first() else {
            continue;
        };
        let err = |column: usize, message: String| Error::parse(line_no, column, message);
        match (kind, header) {
            ("sg", None) => {
                if ws.len() != 3 {
                    return Err(err(col, "expected `sg <num_vertices> <root_id>`".into()));
                }
                let n = number(line_no, ws[1].0, ws[1].1)?;
                let root = number(line_no, ws[2].0, ws[2].1)?;
                header = Some((n, root));
                vertices = vec![Vertex::default(); n];
                declared = vec![false; n];
            }
            ("sg", Some(_)) => return Err(err(col, "duplicate header".into())),
            (_, None) => return Err(err(col, "expected header `sg <n> <root>` first".into())),
            ("v", Some((n, _))) => {
                let &(id_col, id_word) = ws
                    .get(1)
                    .ok_or_else(|| err(col, "expected a vertex id".into()))?;
                let id = number(line_no, id_col, id_word)?;
                if id >= n {
                    return Err(err(id_col, format!("vertex {} out of range", id)));
                }
                if std::mem::replace(&mut declared[id], true) {
                    return Err(err(id_col, format!("vertex {} declared twice", id)));
                }
                let v = &mut vertices[id];
                for &(c, attr) in &ws[2..] {
                    let (key, value) = attr
                        .split_once('=')
                        .ok_or_else(|| err(c, format!("expected key=value, found `{}`", attr)))?;
                    let value_col = c + key.len() + 1;
                    match key {
                        "rank" if v.rank.is_none() => {
                            v.rank = Some(number(line_no, value_col, value)?)
                        }
                        "dec" if v.dec.is_none() => {
                            v.dec = Some(Decoration::from_keyword(value).ok_or_else(|| {
                                err(value_col, format!("unknown decoration `{}`", value))
                            })?)
                        }
                        "fv" if v.fv.is_none() => {
                            if value.is_empty() || !value.chars().all(is_ident_char) {
                                return Err(err(
                                    value_col,
                                    format!("invalid identifier `{}`", value),
                                ));
                            }
                            v.fv = Some(value.to_string());
                        }
                        "rank" | "dec" | "fv" => {
                            return Err(err(c, format!("attribute `{}` given twice", key)))
                        }
                        _ => return Err(err(c, format!("unknown attribute `{}`", key))),
                    }
                }
            }
            ("e", Some((n, _))) => {
                if ws.len() != 3 {
                    return Err(err(col, "expected `e <from> <to>`".into()));
                }
                let from = number(line_no, ws[1].0, ws[1].1)?;
                let to = number(line_no, ws[2].0, ws[2].1)?;
                if from >= n || to >= n {
                    return Err(err(
                        ws[1].0,
                        format!("edge {} -> {} out of range", from, to),
                    ));
                }
                vertices[from].succ.push(to);
            }
            (other, _) => return Err(err(col, format!("unknown line kind `{}`", other))),
        }
    }
    let (_, root) = header.ok_or_else(|| Error::parse(1, 1, "missing header `sg <n> <root>`"))?;
    StructureGraph::new(vertices, root).map_err(|e| Error::parse(1, 1, e.to_string()))
}

pub fn print_sg(sg: &StructureGraph) -> String {
    let mut out = format!("sg {} {}\n", sg.len(), sg.root());
    for (u, v) in sg.vertices().iter().enumerate() {
        out.push_str(&format!("v {}", u));
        if let Some(r) = v.rank {
            out.push_str(&format!(" rank={}", r));
        }
        if let Some(d) = v.dec {
            out.push_str(&format!(" dec={}", d.keyword()));
        }
        if let Some(x) = &v.fv {
            out.push_str(&format!(" fv={}", x));
        }
        out.push('\n');
    }
    for (u, w) in sg.edges() {
        out.push_str(&format!("e {} {}\n", u, w));
    }
    out
}
