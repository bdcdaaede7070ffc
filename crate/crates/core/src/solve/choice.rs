//! Choice functions: resolving every ▲ (or every ▼) vertex to a single
//! successor.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sg::{Decoration, StructureGraph};

/// A •-choice function for • ∈ {▲, ▼}: maps every •-decorated vertex that
/// has a successor to one of its successors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoiceFunction {
    pub bullet: Decoration,
    pub map: BTreeMap<usize, usize>,
}

/// The required domain of a •-choice function on `sg`.
pub fn choice_domain(sg: &StructureGraph, bullet: Decoration) -> Vec<usize> {
    sg.vertices()
        .iter()
        .enumerate()
        .filter(|(_, v)| v.dec == Some(bullet) && !v.succ.is_empty())
        .map(|(u, _)| u)
        .collect()
}

fn check_bullet(bullet: Decoration) -> Result<()> {
    match bullet {
        Decoration::And | Decoration::Or => Ok(()),
        _ => Err(Error::InvalidChoice(format!(
            "bullet must be and or or, got {}",
            bullet.keyword()
        ))),
    }
}

/// Keeps only the chosen edge at every vertex in the domain of `gamma` and
/// removes the bullet decoration there. Ranks and free variables are kept.
pub fn apply_choice(sg: &StructureGraph, gamma: &ChoiceFunction) -> Result<StructureGraph> {
    check_bullet(gamma.bullet)?;
    let domain = choice_domain(sg, gamma.bullet);
    if !domain.iter().copied().eq(gamma.map.keys().copied()) {
        return Err(Error::InvalidChoice(format!(
            "domain {:?} does not match the {} vertices with successors {:?}",
            gamma.map.keys().collect::<Vec<_>>(),
            gamma.bullet.keyword(),
            domain
        )));
    }
    let mut vertices = sg.vertices().to_vec();
    for (&u, &w) in &gamma.map {
        if !sg.succ(u).contains(&w) {
            return Err(Error::InvalidChoice(format!(
                "{} is not a successor of {}",
                w, u
            )));
        }
        vertices[u].succ = vec![w];
        vertices[u].dec = None;
    }
    StructureGraph::new(vertices, sg.root())
}

/// Iterator over all •-choice functions of a graph. Domain vertices are
/// taken in ascending id order and the last one varies fastest; successors
/// are tried in ascending id order.
pub struct Choices<'a> {
    sg: &'a StructureGraph,
    bullet: Decoration,
    domain: Vec<usize>,
    index: Vec<usize>,
    done: bool,
}

impl Iterator for Choices<'_> {
    type Item = ChoiceFunction;

    fn next(&mut self) -> Option<ChoiceFunction> {
        if self.done {
            return None;
        }
        let map = self
            .domain
            .iter()
            .zip(&self.index)
            .map(|(&u, &i)| (u, self.sg.succ(u)[i]))
            .collect();
        let mut k = self.domain.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.index[k] += 1;
            if self.index[k] < self.sg.succ(self.domain[k]).len() {
                break;
            }
            self.index[k] = 0;
        }
        Some(ChoiceFunction {
            bullet: self.bullet,
            map,
        })
    }
}

/// All •-choice functions of `sg`; a graph without •-vertices has exactly
/// one, with empty domain.
pub fn enumerate_choices(sg: &StructureGraph, bullet: Decoration) -> Result<Choices<'_>> {
    check_bullet(bullet)?;
    let domain = choice_domain(sg, bullet);
    Ok(Choices {
        sg,
        bullet,
        index: vec![0; domain.len()],
        domain,
        done: false,
    })
}
