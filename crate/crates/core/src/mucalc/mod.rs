//! Labelled transition systems, the modal μ-calculus, and the reduction of
//! model checking to Boolean equation systems.

mod formula;
mod lts;

pub use formula::{ActionSet, MuFormula};
pub use lts::{Lts, Transition};

use std::collections::{BTreeMap, BTreeSet};

use crate::bes::{big_and, big_or, ident_cmp, Bes, Equation, PropFormula};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::solve::Environment;

/// Environment for μ-calculus variables: each maps to a set of states.
/// Unmapped variables denote the empty set.
pub type StateEnv = BTreeMap<String, BTreeSet<usize>>;

/// Name of the BES variable for μ-calculus variable `x` at state `s`.
pub fn state_var(x: &str, lts: &Lts, s: usize) -> String {
    format!("{}_{}", x, lts.name(s))
}

fn post<'a>(lts: &'a Lts, s: usize, a: &'a ActionSet) -> impl Iterator<Item = usize> + 'a {
    lts.outgoing(s)
        .iter()
        .filter(move |(b, _)| a.contains(b))
        .map(|&(_, t)| t)
}

/// Complements are taken with respect to the actions of the system.
fn in_alphabet(lts: &Lts, a: &ActionSet) -> ActionSet {
    ActionSet::Only(a.resolve(&lts.actions()))
}

/// The set of states satisfying `phi`, with fixpoints computed by
/// iteration from the empty set (μ) or the full state set (ν).
pub fn mc_semantics(lts: &Lts, phi: &MuFormula, theta: &StateEnv) -> Result<BTreeSet<usize>> {
    phi.check_well_formed()?;
    let n = lts.num_states();
    let mut env: BTreeMap<String, Vec<bool>> = BTreeMap::new();
    for (x, states) in theta {
        env.insert(x.clone(), (0..n).map(|s| states.contains(&s)).collect());
    }

    fn sem(lts: &Lts, f: &MuFormula, env: &mut BTreeMap<String, Vec<bool>>) -> Vec<bool> {
        let n = lts.num_states();
        match f {
            MuFormula::True => vec![true; n],
            MuFormula::False => vec![false; n],
            MuFormula::Var(x) => env.get(x).cloned().unwrap_or_else(|| vec![false; n]),
            MuFormula::And(l, r) => {
                let a = sem(lts, l, env);
                let b = sem(lts, r, env);
                a.iter().zip(&b).map(|(x, y)| *x && *y).collect()
            }
            MuFormula::Or(l, r) => {
                let a = sem(lts, l, env);
                let b = sem(lts, r, env);
                a.iter().zip(&b).map(|(x, y)| *x || *y).collect()
            }
            MuFormula::Box(a, g) => {
                let a = in_alphabet(lts, a);
                let inner = sem(lts, g, env);
                (0..n).map(|s| post(lts, s, &a).all(|t| inner[t])).collect()
            }
            MuFormula::Diamond(a, g) => {
                let a = in_alphabet(lts, a);
                let inner = sem(lts, g, env);
                (0..n).map(|s| post(lts, s, &a).any(|t| inner[t])).collect()
            }
            MuFormula::Fix(sign, x, g) => {
                let saved = env.get(x).cloned();
                let mut approx = vec![sign.extremal(); n];
                loop {
                    env.insert(x.clone(), approx.clone());
                    let next = sem(lts, g, env);
                    if next == approx {
                        break;
                    }
                    approx = next;
                }
                match saved {
                    Some(v) => env.insert(x.clone(), v),
                    None => env.remove(x),
                };
                approx
            }
        }
    }

    let result = sem(lts, phi, &mut env);
    Ok((0..n).filter(|&s| result[s]).collect())
}

/// The proposition formula RHS_s(f).
pub fn rhs_s(lts: &Lts, s: usize, f: &MuFormula) -> PropFormula {
    match f {
        MuFormula::True => PropFormula::True,
        MuFormula::False => PropFormula::False,
        MuFormula::Var(x) | MuFormula::Fix(_, x, _) => PropFormula::Var(state_var(x, lts, s)),
        MuFormula::And(l, r) => PropFormula::and(rhs_s(lts, s, l), rhs_s(lts, s, r)),
        MuFormula::Or(l, r) => PropFormula::or(rhs_s(lts, s, l), rhs_s(lts, s, r)),
        MuFormula::Box(a, g) => {
            let a = in_alphabet(lts, a);
            let targets: BTreeSet<usize> = post(lts, s, &a).collect();
            big_and(targets.into_iter().map(|t| rhs_s(lts, t, g)))
        }
        MuFormula::Diamond(a, g) => {
            let a = in_alphabet(lts, a);
            let targets: BTreeSet<usize> = post(lts, s, &a).collect();
            big_or(targets.into_iter().map(|t| rhs_s(lts, t, g)))
        }
    }
}

/// The equation system E(L, phi). Every fixpoint `σX.f` contributes one
/// block of equations `X_s = RHS_s(f)`, ordered by left-hand side, followed
/// by the equations of `f`.
pub fn encode(lts: &Lts, phi: &MuFormula) -> Result<Bes> {
    phi.check_well_formed()?;
    fn go(lts: &Lts, f: &MuFormula, out: &mut Vec<Equation>) {
        match f {
            MuFormula::True | MuFormula::False | MuFormula::Var(_) => {}
            MuFormula::And(l, r) | MuFormula::Or(l, r) => {
                go(lts, l, out);
                go(lts, r, out);
            }
            MuFormula::Box(_, g) | MuFormula::Diamond(_, g) => go(lts, g, out),
            MuFormula::Fix(sign, x, g) => {
                let mut block: Vec<Equation> = (0..lts.num_states())
                    .map(|s| Equation::new(*sign, state_var(x, lts, s), rhs_s(lts, s, g)))
                    .collect();
                block.sort_by(|a, b| ident_cmp(&a.lhs, &b.lhs));
                out.extend(block);
                go(lts, g, out);
            }
        }
    }
    let mut equations = Vec::new();
    go(lts, phi, &mut equations);
    let bes = Bes::new(equations).map_err(|e| match e {
        Error::DuplicateLhs(x) => Error::NameCollision(x),
        other => other,
    })?;
    let bound = bes.bnd();
    for x in phi.free_vars() {
        for s in 0..lts.num_states() {
            let name = state_var(&x, lts, s);
            if bound.contains(&name) {
                return Err(Error::NameCollision(name));
            }
        }
    }
    Ok(bes)
}

/// The BES environment corresponding to `theta`: `Y_t` is true iff `t` is
/// in `theta(Y)`.
pub fn environment_of(lts: &Lts, theta: &StateEnv) -> Environment {
    let mut env = Environment::new();
    for (x, states) in theta {
        for &s in states {
            env.set(state_var(x, lts, s), true);
        }
    }
    env
}

/// The coarsest strong bisimulation on `lts` and the quotient system.
/// Quotient states are named after the smallest member of their block.
pub fn lts_bisim_minimise(lts: &Lts) -> (Lts, Partition) {
    let p = Partition::from_keys(std::iter::repeat_n((), lts.num_states())).refine(|s, p| {
        lts.outgoing(s)
            .iter()
            .map(|(a, t)| (a.clone(), p.block(*t)))
            .collect::<BTreeSet<_>>()
    });
    let names = p
        .blocks()
        .iter()
        .map(|b| lts.name(b[0]).to_string())
        .collect();
    let transitions = lts.transitions().iter().map(|t| Transition {
        from: p.block(t.from),
        action: t.action.clone(),
        to: p.block(t.to),
    });
    let quotient = Lts::new(names, transitions, p.block(lts.initial()))
        .expect("blocks of a valid system form a valid system");
    (quotient, p)
}

pub const TAU: &str = "tau";

/// Relabels the actions in `hidden` to τ.
pub fn abstract_lts(lts: &Lts, hidden: &BTreeSet<String>) -> Result<Lts> {
    if lts.actions().contains(TAU) {
        return Err(Error::TauPresent);
    }
    let transitions = lts.transitions().iter().map(|t| Transition {
        from: t.from,
        action: if hidden.contains(&t.action) {
            TAU.to_string()
        } else {
            t.action.clone()
        },
        to: t.to,
    });
    Lts::new(lts.names().to_vec(), transitions, lts.initial())
}

/// True iff every modality of `phi`, with complements taken over the
/// actions of `lts`, avoids the `hidden` actions.
pub fn is_safe_abstraction(lts: &Lts, hidden: &BTreeSet<String>, phi: &MuFormula) -> bool {
    let act = lts.actions();
    phi.modalities()
        .iter()
        .all(|a| a.resolve(&act).is_disjoint(hidden))
}
