//! Text format for equation systems:
//!
//! ```text
//! % comment
//! mu X = (X && Y) || Z;
//! nu Y = W || (X && Y);
//! ```
//!
//! `&&` binds tighter than `||` and both associate to the left.

use crate::bes::{Bes, Equation, PropFormula, Sign};
use crate::error::{Error, Result};

use super::Cursor;

const KEYWORDS: [&str; 4] = ["true", "false", "mu", "nu"];

fn formula(c: &mut Cursor) -> Result<PropFormula> {
    let mut left = conjunction(c)?;
    while c.eat("||") {
        left = PropFormula::or(left, conjunction(c)?);
    }
    Ok(left)
}

fn conjunction(c: &mut Cursor) -> Result<PropFormula> {
    let mut left = atom(c)?;
    while c.eat("&&") {
        left = PropFormula::and(left, atom(c)?);
    }
    Ok(left)
}

fn atom(c: &mut Cursor) -> Result<PropFormula> {
    if c.eat("(") {
        let f = formula(c)?;
        c.expect(")")?;
        return Ok(f);
    }
    let name = c.ident()?;
    match name.as_str() {
        "true" => Ok(PropFormula::True),
        "false" => Ok(PropFormula::False),
        "mu" | "nu" => Err(c.error(format!("keyword `{}` cannot be a variable", name))),
        _ => Ok(PropFormula::Var(name)),
    }
}

/// Parses a single proposition formula.
pub fn parse_formula(text: &str) -> Result<PropFormula> {
    let mut c = Cursor::new(text, true);
    let f = formula(&mut c)?;
    if !c.at_end() {
        return Err(c.error("unexpected input after formula"));
    }
    Ok(f)
}

/// Parses an equation system; duplicate left-hand sides are rejected.
pub fn parse_bes(text: &str) -> Result<Bes> {
    let mut c = Cursor::new(text, true);
    let mut equations = Vec::new();
    while !c.at_end() {
        let sign = match c.ident()?.as_str() {
            "mu" => Sign::Mu,
            "nu" => Sign::Nu,
            other => return Err(c.error(format!("expected `mu` or `nu`, found `{}`", other))),
        };
        let lhs = c.ident()?;
        if KEYWORDS.contains(&lhs.as_str()) {
            return Err(c.error(format!("keyword `{}` cannot be a variable", lhs)));
        }
        c.expect("=")?;
        let rhs = formula(&mut c)?;
        c.expect(";")?;
        if equations.iter().any(|eq: &Equation| eq.lhs == lhs) {
            return Err(Error::DuplicateLhs(lhs));
        }
        equations.push(Equation::new(sign, lhs, rhs));
    }
    Bes::new(equations)
}

/// Prints one equation per line; every compound operand is parenthesised
/// so the printed text parses back to the same tree.
pub fn print_bes(bes: &Bes) -> String {
    bes.to_string()
}
