//! Gauss elimination for Boolean equation systems.
//!
//! Right-hand sides are kept in a hash-consed arena with local constant and
//! idempotence simplification, so repeated substitution shares subterms
//! instead of copying them.

use std::collections::HashMap;

use crate::bes::{Bes, PropFormula};

use super::Environment;

type Id = usize;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Const(bool),
    Var(usize),
    And(Id, Id),
    Or(Id, Id),
}

struct Arena {
    nodes: Vec<Node>,
    index: HashMap<Node, Id>,
}

impl Arena {
    fn new() -> Self {
        let mut arena = Arena {
            nodes: Vec::new(),
            index: HashMap::new(),
        };
        arena.intern(Node::Const(false));
        arena.intern(Node::Const(true));
        arena
    }

    fn intern(&mut self, node: Node) -> Id {
        if let Some(&id) = self.index.get(&node) {
            return id;
        }
        let id = self.nodes.len();
        self.nodes.push(node);
        self.index.insert(node, id);
        id
    }

    fn constant(&self, b: bool) -> Id {
        b as Id
    }

    fn as_const(&self, id: Id) -> Option<bool> {
        match self.nodes[id] {
            Node::Const(b) => Some(b),
            _ => None,
        }
    }

    fn and(&mut self, a: Id, b: Id) -> Id {
        match (self.as_const(a), self.as_const(b)) {
            (Some(false), _) | (_, Some(false)) => self.constant(false),
            (Some(true), _) => b,
            (_, Some(true)) => a,
            _ if a == b => a,
            _ => self.intern(Node::And(a.min(b), a.max(b))),
        }
    }

    fn or(&mut self, a: Id, b: Id) -> Id {
        match (self.as_const(a), self.as_const(b)) {
            (Some(true), _) | (_, Some(true)) => self.constant(true),
            (Some(false), _) => b,
            (_, Some(false)) => a,
            _ if a == b => a,
            _ => self.intern(Node::Or(a.min(b), a.max(b))),
        }
    }

    /// Replaces variable `x` by the term `by` throughout `root`.
    fn substitute(&mut self, root: Id, x: usize, by: Id) -> Id {
        let mut memo = HashMap::new();
        self.subst_rec(root, x, by, &mut memo)
    }

    fn subst_rec(&mut self, id: Id, x: usize, by: Id, memo: &mut HashMap<Id, Id>) -> Id {
        if let Some(&done) = memo.get(&id) {
            return done;
        }
        let out = match self.nodes[id] {
            Node::Const(_) => id,
            Node::Var(y) if y == x => by,
            Node::Var(_) => id,
            Node::And(a, b) => {
                let a = self.subst_rec(a, x, by, memo);
                let b = self.subst_rec(b, x, by, memo);
                self.and(a, b)
            }
            Node::Or(a, b) => {
                let a = self.subst_rec(a, x, by, memo);
                let b = self.subst_rec(b, x, by, memo);
                self.or(a, b)
            }
        };
        memo.insert(id, out);
        out
    }

    fn mentions(&self, root: Id, x: usize) -> bool {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![root];
        while let Some(id) = stack.pop() {
            if std::mem::replace(&mut seen[id], true) {
                continue;
            }
            match self.nodes[id] {
                Node::Var(y) if y == x => return true,
                Node::And(a, b) | Node::Or(a, b) => {
                    stack.push(a);
                    stack.push(b);
                }
                _ => {}
            }
        }
        false
    }

    fn eval(&self, root: Id, values: &[Option<bool>]) -> bool {
        let mut memo: HashMap<Id, bool> = HashMap::new();
        self.eval_rec(root, values, &mut memo)
    }

    fn eval_rec(&self, id: Id, values: &[Option<bool>], memo: &mut HashMap<Id, bool>) -> bool {
        if let Some(&b) = memo.get(&id) {
            return b;
        }
        let b = match self.nodes[id] {
            Node::Const(b) => b,
            Node::Var(i) => values[i].expect("variable resolved before use"),
            Node::And(a, b) => self.eval_rec(a, values, memo) && self.eval_rec(b, values, memo),
            Node::Or(a, b) => self.eval_rec(a, values, memo) || self.eval_rec(b, values, memo),
        };
        memo.insert(id, b);
        b
    }
}

/// Solves `bes` by Gauss elimination. Free variables are read from `env`;
/// the returned environment extends `env` with the values of all bound
/// variables.
pub fn solve_gauss(bes: &Bes, env: &Environment) -> Environment {
    let eqs = bes.equations();
    let position: HashMap<&str, usize> = eqs
        .iter()
        .enumerate()
        .map(|(i, eq)| (eq.lhs.as_str(), i))
        .collect();
    let mut arena = Arena::new();

    fn lower(
        f: &PropFormula,
        arena: &mut Arena,
        position: &HashMap<&str, usize>,
        env: &Environment,
    ) -> Id {
        match f {
            PropFormula::True => arena.constant(true),
            PropFormula::False => arena.constant(false),
            PropFormula::Var(x) => match position.get(x.as_str()) {
                Some(&i) => arena.intern(Node::Var(i)),
                None => arena.constant(env.get(x)),
            },
            PropFormula::And(l, r) => {
                let a = lower(l, arena, position, env);
                let b = lower(r, arena, position, env);
                arena.and(a, b)
            }
            PropFormula::Or(l, r) => {
                let a = lower(l, arena, position, env);
                let b = lower(r, arena, position, env);
                arena.or(a, b)
            }
        }
    }

    let mut rhs: Vec<Id> = eqs
        .iter()
        .map(|eq| lower(&eq.rhs, &mut arena, &position, env))
        .collect();

    // Backward pass: resolve the self-reference of equation i and substitute
    // the result into every earlier equation.
    for i in (0..eqs.len()).rev() {
        let ext = arena.constant(eqs[i].sign.extremal());
        rhs[i] = arena.substitute(rhs[i], i, ext);
        for j in 0..i {
            if arena.mentions(rhs[j], i) {
                rhs[j] = arena.substitute(rhs[j], i, rhs[i]);
            }
        }
    }

    // Forward pass: equation i now only mentions variables before it.
    let mut values: Vec<Option<bool>> = vec![None; eqs.len()];
    for i in 0..eqs.len() {
        values[i] = Some(arena.eval(rhs[i], &values));
    }

    let mut out = env.clone();
    for (eq, value) in eqs.iter().zip(values) {
        out.set(eq.lhs.clone(), value.expect("all equations solved"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bes::Equation;

    fn v(x: &str) -> PropFormula {
        PropFormula::var(x)
    }

    #[test]
    fn self_loops() {
        let e = Bes::new(vec![Equation::nu("X", v("X"))]).unwrap();
        assert!(solve_gauss(&e, &Environment::new()).get("X"));
        let e = Bes::new(vec![Equation::mu("X", PropFormula::or(v("X"), v("X")))]).unwrap();
        assert!(!solve_gauss(&e, &Environment::with_default(true)).get("X"));
    }

    #[test]
    fn long_chain_does_not_blow_up() {
        let n = 200;
        let eqs = (0..n)
            .map(|i| {
                let next = v(&format!("X{}", (i + 1) % n));
                Equation::nu(format!("X{}", i), PropFormula::or(next.clone(), next))
            })
            .collect();
        let e = Bes::new(eqs).unwrap();
        let s = solve_gauss(&e, &Environment::new());
        assert!((0..n).all(|i| s.get(&format!("X{}", i))));
    }

    #[test]
    fn free_variables_read_from_environment() {
        let e = Bes::new(vec![Equation::mu("X", PropFormula::or(v("F"), v("X")))]).unwrap();
        assert!(solve_gauss(&e, &Environment::new().with("F", true)).get("X"));
        assert!(!solve_gauss(&e, &Environment::new()).get("X"));
    }
}
