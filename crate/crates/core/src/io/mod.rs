//! Text formats: equation systems, structure graphs, Aldebaran transition
//! systems and μ-calculus formulae, plus DOT export.

mod aut;
mod bes_text;
mod dot;
mod mcf;
mod sg_text;

pub use aut::{parse_aut, print_aut};
pub use bes_text::{parse_bes, parse_formula, print_bes};
pub use dot::to_dot;
pub use mcf::parse_mu_formula;
pub use sg_text::{parse_sg, print_sg};

use crate::error::Error;

/// Character cursor with line and column tracking. `%` starts a comment
/// that runs to the end of the line when comments are enabled.
pub(crate) struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
    comments: bool,
}

pub(crate) fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str, comments: bool) -> Self {
        Cursor {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
            comments,
        }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.column, message)
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '%' && self.comments {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    /// Consumes `s` after whitespace, or reports what was expected.
    pub(crate) fn expect(&mut self, s: &str) -> Result<(), Error> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", s)))
        }
    }

    /// Consumes the symbol `s` if it comes next (after whitespace).
    pub(crate) fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        let mut probe = self.chars.clone();
        for expected in s.chars() {
            if probe.next() != Some(expected) {
                return false;
            }
        }
        for _ in s.chars() {
            self.bump();
        }
        true
    }

    /// Reads an identifier made of letters, digits, `_` and `'`.
    pub(crate) fn ident(&mut self) -> Result<String, Error> {
        self.skip_ws();
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if is_ident_char(c) {
                out.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if out.is_empty() {
            Err(self.error("expected an identifier"))
        } else {
            Ok(out)
        }
    }

    pub(crate) fn number(&mut self) -> Result<usize, Error> {
        self.skip_ws();
        let mut digits = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.bump();
            } else {
                break;
            }
        }
        digits
            .parse()
            .map_err(|_| self.error("expected a natural number"))
    }
}
