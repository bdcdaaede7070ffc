//! Aldebaran (`.aut`) transition systems:
//!
//! ```text
//! des (<initial>, <#transitions>, <#states>)
//! (<from>, "<label>", <to>)
//! ```
//!
//! Labels may also be written without quotes.

use crate::error::{Error, Result};
use crate::mucalc::{Lts, Transition};

use super::Cursor;

fn label(c: &mut Cursor) -> Result<String> {
    c.skip_ws();
    let mut out = String::new();
    if c.eat("\"") {
        loop {
            match c.bump() {
                Some('"') => break,
                Some('\n') | None => return Err(c.error("unterminated label")),
                Some(ch) => out.push(ch),
            }
        }
    } else {
        while let Some(ch) = c.peek() {
            if ch == ',' || ch == ')' || ch.is_whitespace() {
                break;
            }
            out.push(ch);
            c.bump();
        }
    }
    if out.is_empty() {
        return Err(c.error("empty label"));
    }
    Ok(out)
}

pub fn parse_aut(text: &str) -> Result<Lts> {
    let mut c = Cursor::new(text, false);
    if c.ident()? != "des" {
        return Err(Error::parse(1, 1, "expected `des` header"));
    }
    c.expect("(")?;
    let initial = c.number()?;
    c.expect(",")?;
    let count = c.number()?;
    c.expect(",")?;
    let states = c.number()?;
    c.expect(")")?;
    let mut transitions = Vec::new();
    while !c.at_end() {
        c.expect("(")?;
        let from = c.number()?;
        c.expect(",")?;
        let action = label(&mut c)?;
        c.expect(",")?;
        let to = c.number()?;
        if from >= states || to >= states {
            return Err(c.error(format!(
                "state out of range in ({}, {}, {})",
                from, action, to
            )));
        }
        c.expect(")")?;
        transitions.push(Transition { from, action, to });
    }
    if transitions.len() != count {
        return Err(c.error(format!(
            "header announces {} transitions, found {}",
            count,
            transitions.len()
        )));
    }
    Lts::new(
        (0..states).map(|s| s.to_string()).collect(),
        transitions,
        initial,
    )
    .map_err(|e| Error::parse(1, 1, e.to_string()))
}

pub fn print_aut(lts: &Lts) -> String {
    let mut out = format!(
        "des ({}, {}, {})\n",
        lts.initial(),
        lts.transitions().len(),
        lts.num_states()
    );
    for t in lts.transitions() {
        out.push_str(&format!("({}, \"{}\", {})\n", t.from, t.action, t.to));
    }
    out
}
