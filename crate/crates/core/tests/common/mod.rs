//! Helpers shared by the integration tests.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use besg_core::bes::{Bes, PropFormula};

/// A formula with conjunction and disjunction chains flattened into sets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Shape {
    Const(bool),
    Var(String),
    And(BTreeSet<Shape>),
    Or(BTreeSet<Shape>),
}

fn collect(f: &PropFormula, and: bool, out: &mut BTreeSet<Shape>) {
    match f {
        PropFormula::And(l, r) if and => {
            collect(l, and, out);
            collect(r, and, out);
        }
        PropFormula::Or(l, r) if !and => {
            collect(l, and, out);
            collect(r, and, out);
        }
        other => {
            out.insert(shape(other));
        }
    }
}

pub fn shape(f: &PropFormula) -> Shape {
    match f {
        PropFormula::True => Shape::Const(true),
        PropFormula::False => Shape::Const(false),
        PropFormula::Var(x) => Shape::Var(x.clone()),
        PropFormula::And(..) => {
            let mut s = BTreeSet::new();
            collect(f, true, &mut s);
            Shape::And(s)
        }
        PropFormula::Or(..) => {
            let mut s = BTreeSet::new();
            collect(f, false, &mut s);
            Shape::Or(s)
        }
    }
}

/// How right-hand sides are compared once variables are renamed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Compare {
    /// Syntactic equality.
    Exact,
    /// Equality up to the order and repetition of operands in junction
    /// chains.
    OperandSets,
}

/// Checks that `b` is `a` with its bound variables renamed, equation by
/// equation and in the same order. Variables that are not bound in `a` must
/// be left alone. Returns the renaming, or a description of the first
/// mismatch.
pub fn isomorphism(a: &Bes, b: &Bes, compare: Compare) -> Result<BTreeMap<String, String>, String> {
    if a.len() != b.len() {
        return Err(format!("{} equations against {}", a.len(), b.len()));
    }
    let h: BTreeMap<String, String> = a
        .equations()
        .iter()
        .zip(b.equations())
        .map(|(x, y)| (x.lhs.clone(), y.lhs.clone()))
        .collect();
    let free_b: BTreeSet<String> = b.occ().difference(&b.bnd()).cloned().collect();
    for (x, y) in a.equations().iter().zip(b.equations()) {
        if x.sign != y.sign {
            return Err(format!("{} and {} have different signs", x.lhs, y.lhs));
        }
        let renamed = x.rhs.rename(&|v: &str| h.get(v).cloned());
        let same = match compare {
            Compare::Exact => renamed == y.rhs,
            Compare::OperandSets => shape(&renamed) == shape(&y.rhs),
        };
        if !same {
            return Err(format!(
                "{} = {} renames to {}, expected {} = {}",
                x.lhs, x.rhs, renamed, y.lhs, y.rhs
            ));
        }
    }
    let free_a: BTreeSet<String> = a.occ().difference(&a.bnd()).cloned().collect();
    if free_a != free_b {
        return Err(format!("free variables {:?} against {:?}", free_a, free_b));
    }
    Ok(h)
}

/// The channel of the application example: reading `r`, sending `s`, and
/// an internal loop `i`/`l` without either.
pub const CHANNEL_AUT: &str =
    "des (0, 4, 3)\n(0, \"r\", 1)\n(1, \"s\", 0)\n(1, \"i\", 2)\n(2, \"l\", 1)\n";

pub const CHANNEL_PHI: &str = "nu X. mu Y. (([r,s]X && (nu Z. <!s>Z)) || [r,s]Y)";

/// The channel equation system exactly as printed with the example.
pub const CHANNEL_BES: &str = "\
nu X_s0 = Y_s0;
nu X_s1 = Y_s1;
nu X_s2 = Y_s2;
mu Y_s0 = ((X_s1 && X_s1) && Z_s0) || ((Y_s1 && Y_s1) || (Y_s1 && Y_s1));
mu Y_s1 = ((X_s0 && X_s0) && Z_s1) || ((Y_s0 && Y_s0) || (Y_s0 && Y_s0));
mu Y_s2 = (true && Z_s2) || true;
nu Z_s0 = Z_s1 || Z_s1;
nu Z_s1 = Z_s2 || Z_s2;
nu Z_s2 = Z_s1 || Z_s1;
";

/// The three-equation system printed as the result of minimising the
/// channel graph.
pub const CHANNEL_MINIMISED: &str = "\
nu X_t1 = X_t4;
mu X_t4 = (X_t7 && (X_t1 && X_t1)) || (X_t4 || X_t4);
nu X_t7 = X_t7;
";

/// The channel with state names `s0`, `s1`, `s2`.
pub fn channel_lts() -> besg_core::mucalc::Lts {
    besg_core::mucalc::Lts::from_named(
        &["s0", "s1", "s2"],
        &[
            ("s0", "r", "s1"),
            ("s1", "s", "s0"),
            ("s1", "i", "s2"),
            ("s2", "l", "s1"),
        ],
    )
    .expect("valid channel")
}
