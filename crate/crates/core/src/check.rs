//! Randomised property suites relating the solvers, the structure-graph
//! transformations and the model checker to one another.
//!
//! Every suite draws its instances from [`crate::gen`] and returns a
//! [`SuiteReport`] listing the counterexamples it found.

use std::collections::BTreeSet;

use rand::Rng;
use serde::Serialize;

use crate::bes::{Bes, PropFormula};
use crate::gen::{self, Junctions};
use crate::mucalc::{encode, mc_semantics, state_var, MuFormula, StateEnv};
use crate::sg::{
    bisim_equiv, bisim_minimise, build, normalise, phi, to_bes, Decoration, StructureGraph,
};
use crate::solve::{
    apply_choice, enumerate_choices, eval_formula, solve, solve_lasso, solve_recursive, Environment,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, message: String) {
        self.failures.push(message);
    }
}

/// Value of the root of `sg` under the solution of its translation.
fn graph_value(sg: &StructureGraph, env: &Environment) -> crate::Result<bool> {
    let bes = to_bes(sg)?;
    let root = phi(sg, sg.root())?;
    Ok(eval_formula(&root, &solve(&bes, env)))
}

fn random_env<R: Rng>(rng: &mut R) -> Environment {
    gen::FREE_NAMES
        .iter()
        .map(|x| (x.to_string(), rng.gen_bool(0.5)))
        .collect()
}

/// `s` satisfies `φ` iff `X_s` is true in the solution of the encoding,
/// where `X` binds the outermost fixpoint of `φ`.
pub fn mader_suite<R: Rng>(rng: &mut R, cases: usize) -> SuiteReport {
    let mut report = SuiteReport::new("mader correspondence");
    for _ in 0..cases {
        let lts = gen::lts(rng, 6, 3);
        let phi = gen::mu_formula(rng, &["a", "b", "c"], 5, 2);
        report.cases += 1;
        let MuFormula::Fix(_, x, _) = &phi else {
            unreachable!("generated formulae start with a fixpoint")
        };
        let sat = match mc_semantics(&lts, &phi, &StateEnv::new()) {
            Ok(sat) => sat,
            Err(e) => {
                report.fail(format!("mc_semantics failed on {}: {}", phi, e));
                continue;
            }
        };
        let bes = match encode(&lts, &phi) {
            Ok(bes) => bes,
            Err(e) => {
                report.fail(format!("encode failed on {}: {}", phi, e));
                continue;
            }
        };
        let solution = solve(&bes, &Environment::new());
        for s in 0..lts.num_states() {
            if sat.contains(&s) != solution.get(&state_var(x, &lts, s)) {
                report.fail(format!(
                    "state {} of\n{}disagrees on {}",
                    s,
                    crate::io::print_aut(&lts),
                    phi
                ));
                break;
            }
        }
    }
    report
}

/// Building, minimising and normalising all preserve the value of the root.
pub fn preservation_suite<R: Rng>(rng: &mut R, cases: usize) -> SuiteReport {
    let mut report = SuiteReport::new("solution preservation");
    for _ in 0..cases {
        let bes = gen::bes(rng, 6, 3);
        let f = gen::formula_for(rng, &bes, 5);
        let env = random_env(rng);
        report.cases += 1;
        let expected = eval_formula(&f, &solve(&bes, &env));
        let t = build(&bes, &f);
        let context = || format!("{}with root {} under {:?}", bes, f, env);
        let (quotient, _) = bisim_minimise(&t);
        let normal = normalise(&t);
        let checks = [
            ("build", graph_value(&t, &env)),
            ("minimise", graph_value(&quotient, &env)),
            ("normalise", graph_value(&normal, &env)),
            (
                "normalise then minimise",
                graph_value(&bisim_minimise(&normal).0, &env),
            ),
        ];
        for (stage, value) in checks {
            match value {
                Ok(v) if v == expected => {}
                Ok(v) => report.fail(format!(
                    "{} gives {} instead of {} for {}",
                    stage,
                    v,
                    expected,
                    context()
                )),
                Err(e) => report.fail(format!("{} failed ({}) for {}", stage, e, context())),
            }
        }
        if !bisim_equiv(&normalise(&normal), &normal) {
            report.fail(format!(
                "normalisation is not idempotent up to bisimilarity for {}",
                context()
            ));
        }
    }
    report
}

/// Rewrites `f` by randomly commuting and reassociating junctions.
fn shuffle_formula<R: Rng>(rng: &mut R, f: &PropFormula) -> PropFormula {
    let (is_and, l, r) = match f {
        PropFormula::And(l, r) => (true, l, r),
        PropFormula::Or(l, r) => (false, l, r),
        _ => return f.clone(),
    };
    let join = |a, b| {
        if is_and {
            PropFormula::and(a, b)
        } else {
            PropFormula::or(a, b)
        }
    };
    let (mut l, mut r) = (shuffle_formula(rng, l), shuffle_formula(rng, r));
    if rng.gen_bool(0.5) {
        std::mem::swap(&mut l, &mut r);
    }
    let same = |g: &PropFormula| if is_and { g.is_and() } else { g.is_or() };
    if same(&l) && rng.gen_bool(0.5) {
        if let PropFormula::And(a, b) | PropFormula::Or(a, b) = l {
            return join(*a, join(*b, r));
        }
    }
    join(l, r)
}

fn law<R: Rng>(
    report: &mut SuiteReport,
    rng: &mut R,
    bes: &Bes,
    name: &str,
    make: impl Fn(&mut R, bool) -> (PropFormula, PropFormula),
) {
    for is_and in [true, false] {
        let (lhs, rhs) = make(rng, is_and);
        if !bisim_equiv(&build(bes, &lhs), &build(bes, &rhs)) {
            report.fail(format!(
                "{}: {} is not bisimilar to {} in\n{}",
                name, lhs, rhs, bes
            ));
        }
    }
}

/// Congruence, associativity, commutativity and weak idempotence of
/// bisimilarity on `(E, f)` pairs, plus the failure of plain idempotence.
pub fn laws_suite<R: Rng>(rng: &mut R, cases: usize) -> SuiteReport {
    let mut report = SuiteReport::new("bisimilarity laws");
    let op = |is_and: bool, a: PropFormula, b: PropFormula| {
        if is_and {
            PropFormula::and(a, b)
        } else {
            PropFormula::or(a, b)
        }
    };
    for _ in 0..cases {
        let bes = gen::bes(rng, 6, 3);
        report.cases += 1;
        let fs: Vec<PropFormula> = (0..3).map(|_| gen::formula_for(rng, &bes, 4)).collect();
        let (f, g, h) = (&fs[0], &fs[1], &fs[2]);

        let f2 = shuffle_formula(rng, f);
        let g2 = shuffle_formula(rng, g);
        let premise = bisim_equiv(&build(&bes, f), &build(&bes, &f2))
            && bisim_equiv(&build(&bes, g), &build(&bes, &g2));
        if !premise {
            report.fail(format!(
                "shuffling {} or {} broke bisimilarity in\n{}",
                f, g, bes
            ));
        } else {
            law(&mut report, rng, &bes, "congruence", |_, a| {
                (op(a, f.clone(), g.clone()), op(a, f2.clone(), g2.clone()))
            });
        }
        law(&mut report, rng, &bes, "associativity", |_, a| {
            (
                op(a, op(a, f.clone(), g.clone()), h.clone()),
                op(a, f.clone(), op(a, g.clone(), h.clone())),
            )
        });
        law(&mut report, rng, &bes, "commutativity", |_, a| {
            (op(a, f.clone(), g.clone()), op(a, g.clone(), f.clone()))
        });
        law(&mut report, rng, &bes, "weak idempotence", |_, a| {
            (
                op(a, op(a, f.clone(), f.clone()), g.clone()),
                op(a, f.clone(), g.clone()),
            )
        });

        for is_and in [true, false] {
            if (is_and && f.is_and()) || (!is_and && f.is_or()) {
                continue;
            }
            let doubled = op(is_and, f.clone(), f.clone());
            if bisim_equiv(&build(&bes, &doubled), &build(&bes, f)) {
                report.fail(format!(
                    "idempotence: {} is bisimilar to {} in\n{}",
                    doubled, f, bes
                ));
            }
        }
    }
    report
}

/// For every ▲-choice the solution can only grow and some choice keeps it;
/// dually for ▼-choices.
pub fn choice_suite<R: Rng>(rng: &mut R, cases: usize) -> SuiteReport {
    let mut report = SuiteReport::new("choice functions");
    let empty = Environment::new();
    for _ in 0..cases {
        let t = gen::normalised_graph(rng, 8, Junctions::Both);
        report.cases += 1;
        let base = match to_bes(&t) {
            Ok(b) => b,
            Err(e) => {
                report.fail(format!(
                    "to_bes failed ({}) on\n{}",
                    e,
                    crate::io::print_sg(&t)
                ));
                continue;
            }
        };
        let vars: BTreeSet<String> = base.bnd();
        let solution = solve_recursive(&base, &empty);
        for bullet in [Decoration::And, Decoration::Or] {
            let mut attained = false;
            for gamma in enumerate_choices(&t, bullet).expect("junction bullet") {
                let chosen = apply_choice(&t, &gamma).expect("enumerated choices are valid");
                let other = match to_bes(&chosen) {
                    Ok(b) => solve_recursive(&b, &empty),
                    Err(e) => {
                        report.fail(format!("to_bes failed ({}) after {:?}", e, gamma));
                        continue;
                    }
                };
                let names = vars.iter().map(String::as_str);
                let ordered = match bullet {
                    Decoration::And => solution.le_on(&other, names),
                    _ => other.le_on(&solution, names),
                };
                if !ordered {
                    report.fail(format!(
                        "{:?} is not monotone on\n{}",
                        gamma,
                        crate::io::print_sg(&t)
                    ));
                }
                attained |= solution.eq_on(&other, vars.iter().map(String::as_str));
            }
            if !attained {
                report.fail(format!(
                    "no {} choice attains the solution of\n{}",
                    bullet.keyword(),
                    crate::io::print_sg(&t)
                ));
            }
        }
    }
    report
}

/// The lasso solver agrees with the recursive solver on graphs with a
/// single kind of junction.
pub fn lasso_suite<R: Rng>(rng: &mut R, cases: usize) -> SuiteReport {
    let mut report = SuiteReport::new("lasso solver");
    let empty = Environment::new();
    for i in 0..cases {
        let junctions = if i % 2 == 0 {
            Junctions::OnlyOr
        } else {
            Junctions::OnlyAnd
        };
        let t = gen::normalised_graph(rng, 8, junctions);
        report.cases += 1;
        let expected = to_bes(&t).and_then(|b| {
            let root = phi(&t, t.root())?;
            Ok(eval_formula(&root, &solve_recursive(&b, &empty)))
        });
        match (solve_lasso(&t), expected) {
            (Ok(a), Ok(b)) if a == b => {}
            (a, b) => report.fail(format!(
                "lasso {:?} vs recursive {:?} on\n{}",
                a,
                b,
                crate::io::print_sg(&t)
            )),
        }
    }
    report
}

/// Runs every suite with the given number of cases each.
pub fn run_all<R: Rng>(rng: &mut R, cases: usize) -> Vec<SuiteReport> {
    vec![
        mader_suite(rng, cases),
        preservation_suite(rng, cases),
        laws_suite(rng, cases),
        choice_suite(rng, cases),
        lasso_suite(rng, cases),
    ]
}
