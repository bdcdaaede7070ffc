//! Invariants over randomly generated systems, formulae and graphs.

#![allow(clippy::needless_range_loop)]

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use besg_core::bes::{big_and, big_or, Bes, Equation, PropFormula, Sign};
use besg_core::gen::{self, Junctions};
use besg_core::io::{parse_bes, parse_formula, print_bes};
use besg_core::mucalc::{
    abstract_lts, encode, is_safe_abstraction, lts_bisim_minimise, mc_semantics, state_var,
    MuFormula, StateEnv,
};
use besg_core::sg::{
    bisim_equiv, bisim_minimise, bisim_partition, build, is_bessy, is_normalised, normalise,
    to_bes, StructureGraph,
};
use besg_core::solve::{solve_gauss, solve_recursive, Environment};

const BOUND: [&str; 8] = ["A", "B", "C", "D", "E", "F", "G", "H"];

fn formula(vars: Vec<&'static str>) -> impl Strategy<Value = PropFormula> {
    let leaf = prop_oneof![
        Just(PropFormula::True),
        Just(PropFormula::False),
        proptest::sample::select(vars).prop_map(PropFormula::var),
    ];
    leaf.prop_recursive(5, 32, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| PropFormula::and(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| PropFormula::or(l, r)),
        ]
    })
}

/// Systems over a prefix of [`BOUND`] whose right-hand sides may also use
/// the free names `P` and `Q` when `open` is set.
fn system(max: usize, open: bool) -> impl Strategy<Value = Bes> {
    (1..=max).prop_flat_map(move |n| {
        let mut vars: Vec<&'static str> = BOUND[..n].to_vec();
        if open {
            vars.extend(["P", "Q"]);
        }
        proptest::collection::vec((any::<bool>(), formula(vars)), n).prop_map(move |rhs| {
            let equations = rhs
                .into_iter()
                .enumerate()
                .map(|(i, (nu, f))| {
                    Equation::new(if nu { Sign::Nu } else { Sign::Mu }, BOUND[i], f)
                })
                .collect();
            Bes::new(equations).unwrap()
        })
    })
}

fn environment() -> impl Strategy<Value = Environment> {
    (any::<bool>(), any::<bool>()).prop_map(|(p, q)| {
        [("P".to_string(), p), ("Q".to_string(), q)]
            .into_iter()
            .collect()
    })
}

fn agree_on(a: &Environment, b: &Environment, vars: &BTreeSet<String>) -> bool {
    a.eq_on(b, vars.iter().map(String::as_str))
}

/// Greatest bisimulation computed from the full relation by deleting pairs
/// until stable.
fn naive_bisimilar(g: &StructureGraph) -> Vec<Vec<bool>> {
    let n = g.len();
    let mut rel = vec![vec![false; n]; n];
    for u in 0..n {
        for w in 0..n {
            rel[u][w] = g.vertex(u).label() == g.vertex(w).label();
        }
    }
    loop {
        let mut changed = false;
        for u in 0..n {
            for w in 0..n {
                if !rel[u][w] {
                    continue;
                }
                let forth = g
                    .succ(u)
                    .iter()
                    .all(|&x| g.succ(w).iter().any(|&y| rel[x][y]));
                let back = g
                    .succ(w)
                    .iter()
                    .all(|&y| g.succ(u).iter().any(|&x| rel[x][y]));
                if !(forth && back) {
                    rel[u][w] = false;
                    changed = true;
                }
            }
        }
        if !changed {
            return rel;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn printed_systems_parse_back(b in system(6, true)) {
        prop_assert_eq!(parse_bes(&print_bes(&b)).unwrap(), b);
    }

    #[test]
    fn printed_formulae_parse_back(f in formula(vec!["A", "B", "x_1", "Y'"])) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn gauss_agrees_with_the_recursive_solver(b in system(8, true), env in environment()) {
        let bnd = b.bnd();
        prop_assert!(agree_on(&solve_gauss(&b, &env), &solve_recursive(&b, &env), &bnd));
    }

    #[test]
    fn closed_solutions_ignore_the_environment(b in system(6, false), env in environment()) {
        let bnd = b.bnd();
        let base = solve_recursive(&b, &Environment::with_default(true));
        prop_assert!(agree_on(&solve_recursive(&b, &env), &base, &bnd));
    }

    #[test]
    fn substituting_the_environment_value_keeps_the_solution(b in system(6, true), env in environment()) {
        let p = env.get("P");
        let substituted = b.substitute("P", p).unwrap();
        prop_assert_eq!(substituted.bnd(), b.bnd());
        prop_assert!(substituted.occ().is_subset(&b.occ()));
        prop_assert!(!substituted.occ().contains("P"));
        let bnd = b.bnd();
        prop_assert!(agree_on(&solve_recursive(&substituted, &env), &solve_recursive(&b, &env), &bnd));
    }

    #[test]
    fn rank_parity_follows_the_sign(b in system(6, true)) {
        for eq in b.equations() {
            let rank = b.rank(&eq.lhs).unwrap();
            prop_assert_eq!(rank % 2 == 1, eq.sign == Sign::Mu);
        }
    }

    #[test]
    fn junction_sets_ignore_input_order(fs in proptest::collection::vec(formula(vec!["A", "B", "C"]), 0..5)) {
        let mut reversed = fs.clone();
        reversed.reverse();
        prop_assert_eq!(big_and(fs.clone()), big_and(reversed.clone()));
        prop_assert_eq!(big_or(fs.clone()), big_or(reversed));
    }

    #[test]
    fn built_graphs_are_bessy(b in system(6, true), f in formula(vec!["A", "B", "P"])) {
        let t = build(&b, &f);
        prop_assert!(is_bessy(&t));
        prop_assert_eq!(t.reachable().len(), t.len());
        let n = normalise(&t);
        prop_assert!(is_bessy(&n) && is_normalised(&n));
        prop_assert_eq!(normalise(&n), n.clone());
        prop_assert!(to_bes(&n).unwrap().is_simple_form());
    }

    #[test]
    fn quotients_are_sound_and_stable(b in system(6, true), f in formula(vec!["A", "B", "P"])) {
        let t = build(&b, &f);
        let (q, p) = bisim_minimise(&t);
        prop_assert_eq!(q.len(), p.block_count());
        for u in 0..t.len() {
            prop_assert_eq!(t.vertex(u).label(), q.vertex(p.block(u)).label());
        }
        prop_assert!(bisim_equiv(&t, &q));
        prop_assert!(is_bessy(&q));
        let (again, _) = bisim_minimise(&q);
        prop_assert_eq!(again, q);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn refinement_matches_the_naive_greatest_bisimulation(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = gen::normalised_graph(&mut rng, 8, Junctions::Both);
        let p = bisim_partition(&g);
        let rel = naive_bisimilar(&g);
        for u in 0..g.len() {
            for w in 0..g.len() {
                prop_assert_eq!(p.same_block(u, w), rel[u][w]);
            }
        }
    }

    #[test]
    fn bisimilar_states_give_bisimilar_vertices(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let lts = gen::lts(&mut rng, 5, 2);
        let phi = gen::mu_formula(&mut rng, &["a", "b"], 4, 2);
        let e = encode(&lts, &phi).unwrap();
        let (_, p) = lts_bisim_minimise(&lts);
        for x in phi.binders() {
            for s in 0..lts.num_states() {
                for s2 in 0..lts.num_states() {
                    if s < s2 && p.same_block(s, s2) {
                        let a = build(&e, &PropFormula::var(state_var(&x, &lts, s)));
                        let b = build(&e, &PropFormula::var(state_var(&x, &lts, s2)));
                        prop_assert!(bisim_equiv(&a, &b));
                    }
                }
            }
        }
    }

    #[test]
    fn safe_abstractions_preserve_truth_and_vertices(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let lts = gen::lts(&mut rng, 5, 3);
        let phi = gen::mu_formula(&mut rng, &["a", "b", "c"], 4, 2);
        let act = lts.actions();
        let resolved = phi.resolve_complements(&act);
        let used: BTreeSet<String> = resolved.modalities().iter().flat_map(|a| a.resolve(&act)).collect();
        let hidden: BTreeSet<String> = act.difference(&used).cloned().collect();
        prop_assert!(is_safe_abstraction(&lts, &hidden, &phi));
        let abstracted = abstract_lts(&lts, &hidden).unwrap();
        let theta = StateEnv::new();
        prop_assert_eq!(
            mc_semantics(&lts, &phi, &theta).unwrap(),
            mc_semantics(&abstracted, &resolved, &theta).unwrap()
        );
        let e = encode(&lts, &phi).unwrap();
        let MuFormula::Fix(_, x, _) = &phi else { unreachable!() };
        let (_, p) = lts_bisim_minimise(&abstracted);
        for s in 0..lts.num_states() {
            for s2 in (s + 1)..lts.num_states() {
                if p.same_block(s, s2) {
                    let a = build(&e, &PropFormula::var(state_var(x, &lts, s)));
                    let b = build(&e, &PropFormula::var(state_var(x, &lts, s2)));
                    prop_assert!(bisim_equiv(&a, &b));
                }
            }
        }
    }
}

#[test]
fn hiding_a_used_action_is_unsafe() {
    let lts = besg_core::mucalc::Lts::from_named(
        &["s0", "s1"],
        &[
            ("s0", "w_s", "s1"),
            ("s1", "w_e", "s0"),
            ("s0", "r_s", "s0"),
        ],
    )
    .unwrap();
    let phi = besg_core::io::parse_mu_formula("nu X. mu Y. <r_s>X || <!r_s>Y").unwrap();
    let hidden: BTreeSet<String> = ["w_s", "w_e"].iter().map(|s| s.to_string()).collect();
    assert!(!is_safe_abstraction(&lts, &hidden, &phi));
    assert!(is_safe_abstraction(&lts, &BTreeSet::new(), &phi));
}
