//! Random instance generators for the property suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bes::{Bes, Equation, PropFormula, Sign};
use crate::mucalc::{ActionSet, Lts, MuFormula, Transition};
use crate::sg::{Decoration, StructureGraph, Vertex};

/// Names used for bound variables of random equation systems.
pub const BOUND_NAMES: [&str; 6] = ["A", "B", "C", "D", "E", "F"];
/// Names used for free variables of random equation systems.
pub const FREE_NAMES: [&str; 2] = ["P", "Q"];

pub fn sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Mu
    } else {
        Sign::Nu
    }
}

/// A formula of depth at most `depth` over `vars`.
pub fn prop_formula<R: Rng>(rng: &mut R, vars: &[String], depth: usize) -> PropFormula {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..10) {
            0 => PropFormula::True,
            1 => PropFormula::False,
            _ if vars.is_empty() => PropFormula::constant(rng.gen_bool(0.5)),
            _ => PropFormula::Var(vars.choose(rng).expect("non-empty").clone()),
        };
    }
    let l = prop_formula(rng, vars, depth - 1);
    let r = prop_formula(rng, vars, depth - 1);
    if rng.gen_bool(0.5) {
        PropFormula::and(l, r)
    } else {
        PropFormula::or(l, r)
    }
}

/// A system of at most `max_equations` equations over [`BOUND_NAMES`],
/// whose right-hand sides may mention [`FREE_NAMES`] as well.
pub fn bes<R: Rng>(rng: &mut R, max_equations: usize, rhs_depth: usize) -> Bes {
    let n = rng.gen_range(0..=max_equations.min(BOUND_NAMES.len()));
    let mut names: Vec<String> = BOUND_NAMES.iter().map(|s| s.to_string()).collect();
    names.shuffle(rng);
    names.truncate(n);
    let vars = bes_vars(&names);
    let equations = names
        .iter()
        .map(|x| Equation::new(sign(rng), x.clone(), prop_formula(rng, &vars, rhs_depth)))
        .collect();
    Bes::new(equations).expect("names are distinct")
}

/// A closed system of at most `max_equations` equations.
pub fn closed_bes<R: Rng>(rng: &mut R, max_equations: usize, rhs_depth: usize) -> Bes {
    let n = rng.gen_range(1..=max_equations.clamp(1, BOUND_NAMES.len()));
    let names: Vec<String> = BOUND_NAMES[..n].iter().map(|s| s.to_string()).collect();
    let equations = names
        .iter()
        .map(|x| Equation::new(sign(rng), x.clone(), prop_formula(rng, &names, rhs_depth)))
        .collect();
    Bes::new(equations).expect("names are distinct")
}

/// The variables a formula over `bes_names` may mention: all bound names
/// plus the free ones.
pub fn bes_vars(bound: &[String]) -> Vec<String> {
    let mut vars: Vec<String> = BOUND_NAMES.iter().map(|s| s.to_string()).collect();
    vars.retain(|x| bound.contains(x));
    vars.extend(FREE_NAMES.iter().map(|s| s.to_string()));
    vars
}

/// A formula over the variables of `bes` and the free names.
pub fn formula_for<R: Rng>(rng: &mut R, bes: &Bes, depth: usize) -> PropFormula {
    let bound: Vec<String> = bes.bnd().into_iter().collect();
    prop_formula(rng, &bes_vars(&bound), depth)
}

/// A system with at most `max_states` states over the first `max_actions`
/// of `a`, `b`, `c`.
pub fn lts<R: Rng>(rng: &mut R, max_states: usize, max_actions: usize) -> Lts {
    let n = rng.gen_range(1..=max_states.max(1));
    let k = rng.gen_range(1..=max_actions.clamp(1, 3));
    let actions = &["a", "b", "c"][..k];
    let mut transitions = Vec::new();
    for from in 0..n {
        for to in 0..n {
            for a in actions {
                if rng.gen_bool(0.25) {
                    transitions.push(Transition {
                        from,
                        action: a.to_string(),
                        to,
                    });
                }
            }
        }
    }
    Lts::new((0..n).map(|s| s.to_string()).collect(), transitions, 0).expect("states in range")
}

fn action_set<R: Rng>(rng: &mut R, actions: &[&str]) -> ActionSet {
    let chosen: Vec<&str> = actions
        .iter()
        .copied()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    if rng.gen_bool(0.3) {
        ActionSet::except(chosen)
    } else {
        ActionSet::only(chosen)
    }
}

const FIX_NAMES: [&str; 2] = ["X", "Y"];

/// A closed, well-formed formula `σX.f` with at most `max_fixpoints`
/// fixpoints and nesting depth at most `max_depth`.
pub fn mu_formula<R: Rng>(
    rng: &mut R,
    actions: &[&str],
    max_depth: usize,
    max_fixpoints: usize,
) -> MuFormula {
    struct Gen<'a> {
        actions: &'a [&'a str],
        fixpoints: usize,
        max_fixpoints: usize,
    }

    impl Gen<'_> {
        fn go<R: Rng>(&mut self, rng: &mut R, depth: usize, scope: &mut Vec<String>) -> MuFormula {
            if depth == 0 || rng.gen_bool(0.15) {
                return match rng.gen_range(0..6) {
                    0 => MuFormula::True,
                    1 => MuFormula::False,
                    _ => MuFormula::Var(scope.choose(rng).expect("scope is never empty").clone()),
                };
            }
            let can_bind = self.fixpoints < self.max_fixpoints;
            match rng.gen_range(0..10) {
                0..=1 => MuFormula::and(
                    self.go(rng, depth - 1, scope),
                    self.go(rng, depth - 1, scope),
                ),
                2..=3 => MuFormula::or(
                    self.go(rng, depth - 1, scope),
                    self.go(rng, depth - 1, scope),
                ),
                4..=5 => {
                    let a = action_set(rng, self.actions);
                    MuFormula::boxed(a, self.go(rng, depth - 1, scope))
                }
                6..=7 => {
                    let a = action_set(rng, self.actions);
                    MuFormula::diamond(a, self.go(rng, depth - 1, scope))
                }
                _ if can_bind => {
                    let x = FIX_NAMES[self.fixpoints];
                    self.fixpoints += 1;
                    scope.push(x.to_string());
                    let body = self.go(rng, depth - 1, scope);
                    scope.pop();
                    MuFormula::Fix(sign(rng), x.to_string(), Box::new(body))
                }
                _ => {
                    let a = action_set(rng, self.actions);
                    MuFormula::diamond(a, self.go(rng, depth - 1, scope))
                }
            }
        }
    }

    let max_fixpoints = max_fixpoints.clamp(1, FIX_NAMES.len());
    let mut g = Gen {
        actions,
        fixpoints: 1,
        max_fixpoints,
    };
    let mut scope = vec![FIX_NAMES[0].to_string()];
    let body = g.go(rng, max_depth.saturating_sub(1), &mut scope);
    MuFormula::Fix(sign(rng), FIX_NAMES[0].to_string(), Box::new(body))
}

/// Which junction decorations a random graph may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Junctions {
    Both,
    OnlyAnd,
    OnlyOr,
}

/// A normalised, closed, BESsy graph with at most `max_vertices` vertices.
/// Every vertex is either a ⊤/⊥ leaf or ranked with one to three
/// successors; branching vertices carry a junction decoration.
pub fn normalised_graph<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    junctions: Junctions,
) -> StructureGraph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let mut vertices = Vec::with_capacity(n);
    for _ in 0..n {
        if rng.gen_bool(0.2) {
            let dec = if rng.gen_bool(0.5) {
                Decoration::Top
            } else {
                Decoration::Bot
            };
            vertices.push(Vertex {
                dec: Some(dec),
                ..Vertex::default()
            });
            continue;
        }
        let k = rng.gen_range(1..=n.min(3));
        let mut targets: Vec<usize> = (0..n).collect();
        targets.shuffle(rng);
        targets.truncate(k);
        let junction = match junctions {
            Junctions::Both => {
                if rng.gen_bool(0.5) {
                    Decoration::And
                } else {
                    Decoration::Or
                }
            }
            Junctions::OnlyAnd => Decoration::And,
            Junctions::OnlyOr => Decoration::Or,
        };
        let dec = if k >= 2 || rng.gen_bool(0.5) {
            Some(junction)
        } else {
            None
        };
        vertices.push(Vertex {
            dec,
            rank: Some(rng.gen_range(0..4)),
            fv: None,
            succ: targets,
        });
    }
    let root = rng.gen_range(0..n);
    StructureGraph::new(vertices, root).expect("targets are in range")
}
