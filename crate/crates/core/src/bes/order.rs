//! The total order ⋖ on formulae and the ⊓/⊔ shorthands built on it.
//!
//! Atoms are ordered `true ⋖ false ⋖ identifiers`, identifiers by their
//! bytes. Formulae are ordered by decreasing tree size first and then by
//! their preorder token sequence. Because ⊓ and ⊔ duplicate the ⋖-greatest
//! element, putting larger formulae first means the smallest operand is the
//! one that gets duplicated.

use std::cmp::Ordering;

use super::PropFormula;

#[derive(PartialEq, Eq, PartialOrd, Ord)]
enum Token<'a> {
    And,
    Or,
    True,
    False,
    Var(&'a [u8]),
}

fn tokens<'a>(f: &'a PropFormula, out: &mut Vec<Token<'a>>) {
    match f {
        PropFormula::True => out.push(Token::True),
        PropFormula::False => out.push(Token::False),
        PropFormula::Var(x) => out.push(Token::Var(x.as_bytes())),
        PropFormula::And(l, r) => {
            out.push(Token::And);
            tokens(l, out);
            tokens(r, out);
        }
        PropFormula::Or(l, r) => {
            out.push(Token::Or);
            tokens(l, out);
            tokens(r, out);
        }
    }
}

/// Byte-lexicographic order on identifiers.
pub fn ident_cmp(a: &str, b: &str) -> Ordering {
    a.as_bytes().cmp(b.as_bytes())
}

/// The order ⋖ on formulae.
pub fn formula_cmp(a: &PropFormula, b: &PropFormula) -> Ordering {
    b.size().cmp(&a.size()).then_with(|| {
        let (mut ta, mut tb) = (Vec::new(), Vec::new());
        tokens(a, &mut ta);
        tokens(b, &mut tb);
        ta.cmp(&tb)
    })
}

fn fold(
    fs: impl IntoIterator<Item = PropFormula>,
    unit: PropFormula,
    op: fn(PropFormula, PropFormula) -> PropFormula,
) -> PropFormula {
    let mut items: Vec<PropFormula> = fs.into_iter().collect();
    items.sort_by(formula_cmp);
    items.dedup();
    let Some(last) = items.pop() else {
        return unit;
    };
    let mut acc = op(last.clone(), last);
    while let Some(f) = items.pop() {
        acc = op(f, acc);
    }
    acc
}

/// ⊓ over a finite set: `true` for the empty set, `f ∧ f` for a singleton,
/// and otherwise `f ∧ ⊓F` with `f` the ⋖-least element.
pub fn big_and(fs: impl IntoIterator<Item = PropFormula>) -> PropFormula {
    fold(fs, PropFormula::True, PropFormula::and)
}

/// ⊔ over a finite set, dual to [`big_and`].
pub fn big_or(fs: impl IntoIterator<Item = PropFormula>) -> PropFormula {
    fold(fs, PropFormula::False, PropFormula::or)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &str) -> PropFormula {
        PropFormula::var(x)
    }

    #[test]
    fn empty_and_singleton() {
        assert_eq!(big_and(vec![]), PropFormula::True);
        assert_eq!(big_or(vec![]), PropFormula::False);
        assert_eq!(big_and(vec![v("f")]), PropFormula::and(v("f"), v("f")));
        assert_eq!(
            big_or(vec![v("Y_s1")]),
            PropFormula::or(v("Y_s1"), v("Y_s1"))
        );
    }

    #[test]
    fn duplicates_collapse_as_in_a_set() {
        assert_eq!(big_and(vec![v("a"), v("a")]), big_and(vec![v("a")]));
    }

    #[test]
    fn last_element_is_duplicated() {
        assert_eq!(
            big_or(vec![v("b"), v("a")]),
            PropFormula::or(v("a"), PropFormula::or(v("b"), v("b")))
        );
    }

    #[test]
    fn atoms_order() {
        let t = PropFormula::True;
        let f = PropFormula::False;
        assert_eq!(formula_cmp(&t, &f), Ordering::Less);
        assert_eq!(formula_cmp(&f, &v("A")), Ordering::Less);
        assert_eq!(formula_cmp(&v("X_10"), &v("X_9")), Ordering::Less);
    }

    #[test]
    fn larger_formulae_come_first() {
        let c = PropFormula::and(v("X_u"), PropFormula::and(v("X_w"), v("X_w")));
        assert_eq!(
            big_or(vec![v("X_v"), c.clone()]),
            PropFormula::or(c, PropFormula::or(v("X_v"), v("X_v")))
        );
    }
}
