//! Shared term formatting for polynomial text and LaTeX output.

use num_traits::{Signed, Zero};

use crate::scalars::{GaussRat, ScalarQ};

/// A rendered term with its sign pulled out.
pub(crate) struct Term {
    negative: bool,
    body: String,
}

fn leading_negative(c: &ScalarQ) -> bool {
    match c.numerator().terms().next_back() {
        Some((_, lead)) => negative_like(lead),
        None => false,
    }
}

fn negative_like(c: &GaussRat) -> bool {
    (c.im.is_zero() && c.re.is_negative()) || (c.re.is_zero() && c.im.is_negative())
}

/// Splits `c` into a sign and an absolute value for display.
fn split_sign(c: &ScalarQ) -> (bool, ScalarQ) {
    if leading_negative(c) {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

/// `c * body`; an empty body means the term is a bare scalar.
pub(crate) fn term_text(c: &ScalarQ, body: &str) -> Term {
    let (negative, abs) = split_sign(c);
    let body = if body.is_empty() {
        let t = abs.to_text();
        if negative && abs.as_monomial().is_none() {
            format!("({t})")
        } else {
            t
        }
    } else if abs.is_one() {
        body.to_string()
    } else if abs.is_atomic() {
        format!("{}*{body}", abs.to_text())
    } else {
        format!("({})*{body}", abs.to_text())
    };
    Term { negative, body }
}

pub(crate) fn join_terms<I: IntoIterator<Item = Term>>(terms: I) -> String {
    let mut out = String::new();
    for (k, t) in terms.into_iter().enumerate() {
        match (k, t.negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&t.body);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub(crate) fn term_latex(c: &ScalarQ, body: &str) -> Term {
    let (negative, abs) = split_sign(c);
    let coef = abs.to_latex();
    let wrapped = abs.is_laurent() && abs.numerator().term_count() > 1;
    let body = if body.is_empty() {
        if wrapped && negative {
            format!("({coef})")
        } else {
            coef
        }
    } else if abs.is_one() {
        body.to_string()
    } else if wrapped {
        format!("({coef}){body}")
    } else {
        format!("{coef}{body}")
    };
    Term { negative, body }
}

pub(crate) fn join_latex<I: IntoIterator<Item = Term>>(terms: I) -> String {
    let mut out = String::new();
    for (k, t) in terms.into_iter().enumerate() {
        if t.negative {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        out.push_str(&t.body);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}
