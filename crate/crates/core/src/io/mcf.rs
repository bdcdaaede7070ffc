//! Concrete syntax for μ-calculus formulae:
//!
//! ```text
//! f ::= true | false | X | f && f | f || f | [A]f | <A>f | nu X. f | mu X. f | (f)
//! A ::= a,b,... | !a,b,...
//! ```
//!
//! `&&` binds tighter than `||`; modalities bind tighter than both; a
//! fixpoint extends as far to the right as possible. `%` starts a comment.

use std::collections::BTreeSet;

use crate::bes::Sign;
use crate::error::Result;
use crate::mucalc::{ActionSet, MuFormula};

use super::Cursor;

fn formula(c: &mut Cursor) -> Result<MuFormula> {
    let mut left = conjunction(c)?;
    while c.eat("||") {
        left = MuFormula::or(left, conjunction(c)?);
    }
    Ok(left)
}

fn conjunction(c: &mut Cursor) -> Result<MuFormula> {
    let mut left = unary(c)?;
    while c.eat("&&") {
        left = MuFormula::and(left, unary(c)?);
    }
    Ok(left)
}

fn actions(c: &mut Cursor, close: &str) -> Result<ActionSet> {
    let complement = c.eat("!");
    let mut set = BTreeSet::new();
    if !c.eat(close) {
        loop {
            set.insert(c.ident()?);
            if c.eat(close) {
                break;
            }
            c.expect(",")?;
        }
    }
    Ok(if complement {
        ActionSet::Except(set)
    } else {
        ActionSet::Only(set)
    })
}

fn unary(c: &mut Cursor) -> Result<MuFormula> {
    if c.eat("(") {
        let f = formula(c)?;
        c.expect(")")?;
        return Ok(f);
    }
    if c.eat("[") {
        let a = actions(c, "]")?;
        return Ok(MuFormula::boxed(a, unary(c)?));
    }
    if c.eat("<") {
        let a = actions(c, ">")?;
        return Ok(MuFormula::diamond(a, unary(c)?));
    }
    let word = c.ident()?;
    match word.as_str() {
        "true" => Ok(MuFormula::True),
        "false" => Ok(MuFormula::False),
        "nu" | "mu" => {
            let sign = if word == "nu" { Sign::Nu } else { Sign::Mu };
            let x = c.ident()?;
            if ["true", "false", "nu", "mu"].contains(&x.as_str()) {
                return Err(c.error(format!("keyword `{}` cannot be a variable", x)));
            }
            c.expect(".")?;
            Ok(MuFormula::Fix(sign, x, Box::new(formula(c)?)))
        }
        _ => Ok(MuFormula::Var(word)),
    }
}

/// Parses a formula and checks that it is well formed.
pub fn parse_mu_formula(text: &str) -> Result<MuFormula> {
    let mut c = Cursor::new(text, true);
    let f = formula(&mut c)?;
    if !c.at_end() {
        return Err(c.error("unexpected input after formula"));
    }
    f.check_well_formed()?;
    Ok(f)
}
