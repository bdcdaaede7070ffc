//! Labelled transition systems.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Transition {
    pub from: usize,
    pub action: String,
    pub to: usize,
}

/// States are `0..num_states()`, each with a display name used when
/// generating variable names. Transitions form a set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lts {
    names: Vec<String>,
    transitions: Vec<Transition>,
    initial: usize,
    outgoing: Vec<Vec<(String, usize)>>,
}

impl Lts {
    pub fn new(
        names: Vec<String>,
        transitions: impl IntoIterator<Item = Transition>,
        initial: usize,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Precondition(
                "a transition system needs a state".into(),
            ));
        }
        if initial >= n {
            return Err(Error::Precondition(format!(
                "initial state {} does not exist",
                initial
            )));
        }
        let unique: BTreeSet<&String> = names.iter().collect();
        if unique.len() != n {
            return Err(Error::Precondition("state names must be distinct".into()));
        }
        let set: BTreeSet<Transition> = transitions.into_iter().collect();
        let mut outgoing = vec![Vec::new(); n];
        for t in &set {
            if t.from >= n || t.to >= n {
                return Err(Error::Precondition(format!(
                    "transition {} -{}-> {} refers to a missing state",
                    t.from, t.action, t.to
                )));
            }
            outgoing[t.from].push((t.action.clone(), t.to));
        }
        Ok(Lts {
            names,
            transitions: set.into_iter().collect(),
            initial,
            outgoing,
        })
    }

    /// States named `0`, `1`, ... as in the Aldebaran format.
    pub fn numbered(
        num_states: usize,
        transitions: impl IntoIterator<Item = (usize, &'static str, usize)>,
        initial: usize,
    ) -> Result<Self> {
        Lts::new(
            (0..num_states).map(|s| s.to_string()).collect(),
            transitions.into_iter().map(|(from, a, to)| Transition {
                from,
                action: a.to_string(),
                to,
            }),
            initial,
        )
    }

    /// Builds a system from named states and transitions given by name.
    pub fn from_named(names: &[&str], transitions: &[(&str, &str, &str)]) -> Result<Self> {
        let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::Precondition(format!("unknown state {}", s)))
        };
        let mut ts = Vec::new();
        for &(from, a, to) in transitions {
            ts.push(Transition {
                from: lookup(from)?,
                action: a.to_string(),
                to: lookup(to)?,
            });
        }
        Lts::new(names.iter().map(|s| s.to_string()).collect(), ts, 0)
    }

    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn name(&self, s: usize) -> &str {
        &self.names[s]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn outgoing(&self, s: usize) -> &[(String, usize)] {
        &self.outgoing[s]
    }

    /// The actions occurring on some transition.
    pub fn actions(&self) -> BTreeSet<String> {
        self.transitions.iter().map(|t| t.action.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transitions_form_a_set() {
        let l = Lts::numbered(2, [(0, "a", 1), (0, "a", 1), (1, "b", 0)], 0).unwrap();
        assert_eq!(l.transitions().len(), 2);
        assert_eq!(l.actions().len(), 2);
        assert_eq!(l.outgoing(0), &[("a".to_string(), 1)]);
    }

    #[test]
    fn dangling_transition_rejected() {
        assert!(Lts::numbered(1, [(0, "a", 1)], 0).is_err());
    }
}
