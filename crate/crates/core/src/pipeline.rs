//! The end-to-end reduction pipeline: encode, build, optionally normalise,
//! minimise, translate back and solve, recording what each stage produced.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::bes::{big_and, Bes, PropFormula};
use crate::error::{Error, Result};
use crate::mucalc::{encode, state_var, Lts, MuFormula};
use crate::sg::{bisim_minimise, build, normalise, phi, to_bes};
use crate::solve::{eval_formula, solve, Environment};

/// Which formula the structure graph is built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootChoice {
    /// `X_s` for the named state `s`, where `X` binds the outermost fixpoint.
    State(String),
    /// The initial state of the transition system.
    Initial,
    /// The conjunction of `X_s` over all states.
    Global,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    pub root: RootChoice,
    pub normalise: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            root: RootChoice::Initial,
            normalise: true,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StageTiming {
    pub stage: String,
    pub micros: u128,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    /// Number of states of the input system, when there is one.
    pub lts_states: Option<usize>,
    /// Number of transitions of the input system, when there is one.
    pub lts_transitions: Option<usize>,
    pub root_formula: String,
    pub bes_equations: usize,
    pub bes_size: usize,
    pub graph_vertices: usize,
    pub graph_edges: usize,
    pub normalised: bool,
    pub normalised_vertices: usize,
    pub normalised_edges: usize,
    pub quotient_vertices: usize,
    pub quotient_edges: usize,
    pub minimised_equations: usize,
    pub minimised_size: usize,
    /// Value of the root formula under the solution of the input system.
    pub root_value: bool,
    /// Value of the root vertex under the solution of the minimised system.
    pub minimised_root_value: bool,
    /// Solution of the minimised system.
    pub solution: BTreeMap<String, bool>,
    pub timings: Vec<StageTiming>,
}

struct Clock {
    timings: Vec<StageTiming>,
}

impl Clock {
    fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.push(StageTiming {
            stage: stage.to_string(),
            micros: start.elapsed().as_micros(),
        });
        out
    }
}

/// The formula the pipeline starts from for `phi` on `lts`.
pub fn root_formula(lts: &Lts, phi: &MuFormula, root: &RootChoice) -> Result<PropFormula> {
    let MuFormula::Fix(_, x, _) = phi else {
        return Err(Error::Precondition(
            "the formula must start with a fixpoint".into(),
        ));
    };
    let state = match root {
        RootChoice::Global => {
            return Ok(big_and(
                (0..lts.num_states()).map(|s| PropFormula::Var(state_var(x, lts, s))),
            ))
        }
        RootChoice::Initial => lts.initial(),
        RootChoice::State(name) => lts
            .state_index(name)
            .ok_or_else(|| Error::Precondition(format!("no state named `{}`", name)))?,
    };
    Ok(PropFormula::Var(state_var(x, lts, state)))
}

/// Runs the pipeline for `phi` on `lts`.
pub fn run_pipeline(
    lts: &Lts,
    phi: &MuFormula,
    options: &PipelineOptions,
) -> Result<PipelineReport> {
    let mut clock = Clock {
        timings: Vec::new(),
    };
    let bes = clock.time("encode", || encode(lts, phi))?;
    let root = root_formula(lts, phi, &options.root)?;
    let mut report = run_stages(&bes, &root, options.normalise, clock)?;
    report.lts_states = Some(lts.num_states());
    report.lts_transitions = Some(lts.transitions().len());
    Ok(report)
}

/// Runs the pipeline from an equation system and a root formula, skipping
/// the encoding stage.
pub fn run_bes_pipeline(
    bes: &Bes,
    root: &PropFormula,
    normalise_graph: bool,
) -> Result<PipelineReport> {
    let clock = Clock {
        timings: Vec::new(),
    };
    run_stages(bes, root, normalise_graph, clock)
}

fn run_stages(
    bes: &Bes,
    root: &PropFormula,
    normalise_graph: bool,
    mut clock: Clock,
) -> Result<PipelineReport> {
    if !bes.is_closed() {
        let free: Vec<String> = bes.occ().difference(&bes.bnd()).cloned().collect();
        return Err(Error::Precondition(format!(
            "the system has free variables: {}",
            free.join(", ")
        )));
    }
    if let Some(x) = root.occ().into_iter().find(|x| bes.equation(x).is_none()) {
        return Err(Error::UnboundVariable(x));
    }
    let graph = clock.time("build", || build(bes, root));
    let reduced = if normalise_graph {
        clock.time("normalise", || normalise(&graph))
    } else {
        graph.clone()
    };
    let (quotient, _) = clock.time("minimise", || bisim_minimise(&reduced));
    let minimised = clock.time("to_bes", || to_bes(&quotient))?;
    let empty = Environment::new();
    let (solution, original) =
        clock.time("solve", || (solve(&minimised, &empty), solve(bes, &empty)));
    let root_phi = phi(&quotient, quotient.root())?;
    Ok(PipelineReport {
        lts_states: None,
        lts_transitions: None,
        root_formula: root.to_string(),
        bes_equations: bes.len(),
        bes_size: bes.size(),
        graph_vertices: graph.len(),
        graph_edges: graph.edge_count(),
        normalised: normalise_graph,
        normalised_vertices: reduced.len(),
        normalised_edges: reduced.edge_count(),
        quotient_vertices: quotient.len(),
        quotient_edges: quotient.edge_count(),
        minimised_equations: minimised.len(),
        minimised_size: minimised.size(),
        root_value: eval_formula(root, &original),
        minimised_root_value: eval_formula(&root_phi, &solution),
        solution: minimised
            .equations()
            .iter()
            .map(|e| (e.lhs.clone(), solution.get(&e.lhs)))
            .collect(),
        timings: clock.timings,
    })
}
