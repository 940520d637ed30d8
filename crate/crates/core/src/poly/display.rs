//! Human-readable polynomial rendering.
//!
//! Terms are printed in descending graded-reverse-lexicographic order, so
//! output is canonical: `x^2*y - 3/2*z^3`, `(w + 1)*x - y`. The format is
//! accepted back by the parser.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::coeffs::FieldElement;

use super::{var_name, Monomial, MonomialOrder, Polynomial};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms = self.sorted_terms(&MonomialOrder::GrevLex);
        let mut first = true;
        for (m, c) in &terms {
            let (negative, abs) = sign_split(c);
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_term(f, m, &abs, self.num_vars)?;
        }
        Ok(())
    }
}

/// Split an element into a display sign and its "absolute value". For
/// extension elements the sign is taken from the highest nonzero
/// power-basis coordinate, so the printed body never leads with a minus.
fn sign_split(c: &FieldElement) -> (bool, FieldElement) {
    if let Some(r) = c.as_rational() {
        if r.is_negative() {
            return (true, -c);
        }
        return (false, c.clone());
    }
    if let Some(v) = c.as_extension() {
        if let Some(top) = v.iter().rev().find(|x| !x.is_zero()) {
            if top.is_negative() {
                return (true, -c);
            }
        }
    }
    (false, c.clone())
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    m: &Monomial,
    coeff: &FieldElement,
    num_vars: usize,
) -> fmt::Result {
    let mono = format_monomial(m, num_vars);
    if mono.is_empty() {
        if coeff.display_atomic() {
            return write!(f, "{coeff}");
        }
        return write!(f, "({coeff})");
    }
    if coeff.is_one() {
        return write!(f, "{mono}");
    }
    if coeff.display_atomic() {
        write!(f, "{coeff}*{mono}")
    } else {
        write!(f, "({coeff})*{mono}")
    }
}

fn format_monomial(m: &Monomial, num_vars: usize) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(var_name(num_vars, i)),
            _ => parts.push(format!("{}^{}", var_name(num_vars, i), e)),
        }
    }
    parts.join("*")
}
