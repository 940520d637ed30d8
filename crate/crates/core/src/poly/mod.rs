//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! Terms are held in a sorted map keyed by exponent vector, so iteration
//! order is deterministic and independent of insertion history; Gröbner
//! runs built on top of this are reproducible. Monomial comparisons under
//! a chosen [`MonomialOrder`] are separate from the storage order: leading
//! terms are queried per order.
//!
//! Derivatives are unnormalized (plain iterated partials, no factorial
//! division): in characteristic zero, a homogeneous polynomial vanishes to
//! order at least `k` at a projective point exactly when every partial
//! derivative of order `< k` vanishes at a fixed affine representative of
//! the point.

mod display;
mod parse;

pub use parse::{parse_element, parse_polynomial};

use std::collections::BTreeMap;

use smallvec::SmallVec;

use crate::coeffs::{CoeffDomain, FieldElement};
use crate::error::{Error, Result};

/// A monomial: an exponent vector with its total degree cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 6]>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: impl Into<SmallVec<[u32; 6]>>) -> Self {
        let exps = exps.into();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// The monomial 1 in `num_vars` variables.
    pub fn one(num_vars: usize) -> Self {
        Monomial::new(SmallVec::from_elem(0, num_vars))
    }

    /// The single variable `x_i`.
    pub fn variable(num_vars: usize, i: usize) -> Self {
        let mut exps = SmallVec::from_elem(0u32, num_vars);
        exps[i] = 1;
        Monomial::new(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: SmallVec<[u32; 6]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: SmallVec<[u32; 6]> = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(b, a)| b - a)
            .collect();
        Some(Monomial {
            degree: other.degree - self.degree,
            exps,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u32; 6]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Append `extra` zero exponents (new trailing variables).
    pub fn extended(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Drop the last `drop` exponents; `None` if any of them is nonzero.
    pub fn restricted(&self, drop: usize) -> Option<Monomial> {
        let n = self.exps.len() - drop;
        if self.exps[n..].iter().any(|&e| e != 0) {
            return None;
        }
        Some(Monomial::new(SmallVec::from_slice(&self.exps[..n])))
    }
}

/// Storage order only (lexicographic on the raw exponent vector); not a
/// monomial order. Guarantees deterministic map iteration.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial order: a total order on monomials compatible with
/// multiplication and with 1 as the minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic (the default for Gröbner bases here).
    GrevLex,
    /// Pure lexicographic.
    Lex,
    /// Block elimination order: the `eliminated` variables dominate,
    /// compared graded-reverse-lexicographically among themselves; ties are
    /// broken by `inner` on the remaining variables.
    Block {
        eliminated: Vec<usize>,
        inner: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Compare two monomials; `Greater` means `a` is larger.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self {
            MonomialOrder::GrevLex => grevlex(&a.exps, a.degree, &b.exps, b.degree),
            MonomialOrder::Lex => {
                for (x, y) in a.exps.iter().zip(&b.exps) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { eliminated, inner } => {
                let sub_a: SmallVec<[u32; 6]> =
                    eliminated.iter().map(|&i| a.exps[i]).collect();
                let sub_b: SmallVec<[u32; 6]> =
                    eliminated.iter().map(|&i| b.exps[i]).collect();
                let deg_a = sub_a.iter().sum();
                let deg_b = sub_b.iter().sum();
                match grevlex(&sub_a, deg_a, &sub_b, deg_b) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                let rest_a = complement(&a.exps, eliminated);
                let rest_b = complement(&b.exps, eliminated);
                inner.cmp(&Monomial::new(rest_a), &Monomial::new(rest_b))
            }
        }
    }

    /// Maximum of two monomials under this order.
    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == std::cmp::Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn grevlex(a: &[u32], deg_a: u32, b: &[u32], deg_b: u32) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    match deg_a.cmp(&deg_b) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // Smaller exponent in the rightmost difference wins.
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

fn complement(exps: &[u32], eliminated: &[usize]) -> SmallVec<[u32; 6]> {
    exps.iter()
        .enumerate()
        .filter(|(i, _)| !eliminated.contains(i))
        .map(|(_, &e)| e)
        .collect()
}

/// A sparse multivariate polynomial with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    domain: CoeffDomain,
    num_vars: usize,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero(domain: &CoeffDomain, num_vars: usize) -> Self {
        Polynomial {
            domain: domain.clone(),
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(domain: &CoeffDomain, num_vars: usize, c: FieldElement) -> Self {
        let mut p = Polynomial::zero(domain, num_vars);
        p.add_term(Monomial::one(num_vars), c);
        p
    }

    pub fn one(domain: &CoeffDomain, num_vars: usize) -> Self {
        Polynomial::constant(domain, num_vars, domain.one())
    }

    /// The variable `x_i`.
    pub fn variable(domain: &CoeffDomain, num_vars: usize, i: usize) -> Self {
        let mut p = Polynomial::zero(domain, num_vars);
        p.add_term(Monomial::variable(num_vars, i), domain.one());
        p
    }

    /// The linear form with the given coefficients on `x_0..x_{n-1}`.
    pub fn linear_form(domain: &CoeffDomain, coeffs: &[FieldElement]) -> Self {
        let num_vars = coeffs.len();
        let mut p = Polynomial::zero(domain, num_vars);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::variable(num_vars, i), c.clone());
        }
        p
    }

    pub fn from_terms(
        domain: &CoeffDomain,
        num_vars: usize,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
    ) -> Self {
        let mut p = Polynomial::zero(domain, num_vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Add one term, merging and dropping zeros to keep the form canonical.
    pub fn add_term(&mut self, monomial: Monomial, coeff: FieldElement) {
        debug_assert_eq!(monomial.num_vars(), self.num_vars);
        debug_assert_eq!(coeff.domain(), &self.domain);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn domain(&self) -> &CoeffDomain {
        &self.domain
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&FieldElement> {
        self.terms.get(m)
    }

    /// Largest total degree among terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            self.total_degree()
        }
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &FieldElement)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, FieldElement)> {
        let mut v: Vec<(Monomial, FieldElement)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        v.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        v
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.domain, self.num_vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), a * c))
            .filter(|(_, a)| !a.is_zero())
            .collect();
        Polynomial {
            domain: self.domain.clone(),
            num_vars: self.num_vars,
            terms,
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (k.mul(m), c.clone()))
            .collect();
        Polynomial {
            domain: self.domain.clone(),
            num_vars: self.num_vars,
            terms,
        }
    }

    /// Multiply by `c * m` (one term).
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        self.mul_monomial(m).scale(c)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.domain, self.num_vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divide every coefficient by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.domain, self.num_vars);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let mut exps: SmallVec<[u32; 6]> = SmallVec::from_slice(m.exponents());
            exps[var] = e - 1;
            let factor = self.domain.from_i64(e as i64);
            out.add_term(Monomial::new(exps), &factor * c);
        }
        out
    }

    /// Iterated unnormalized partial derivative for a multi-index.
    pub fn derivative(&self, mu: &[u32]) -> Polynomial {
        let mut out = self.clone();
        for (var, &k) in mu.iter().enumerate() {
            for _ in 0..k {
                out = out.partial_derivative(var);
                if out.is_zero() {
                    return out;
                }
            }
        }
        out
    }

    pub fn evaluate(&self, coords: &[FieldElement]) -> FieldElement {
        assert_eq!(coords.len(), self.num_vars);
        let mut acc = self.domain.zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = &term * &coords[i].pow(e as u64);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Evaluate the unnormalized iterated derivative `∂^mu f` at the given
    /// affine coordinate vector.
    pub fn evaluate_derivative(&self, coords: &[FieldElement], mu: &[u32]) -> FieldElement {
        self.derivative(mu).evaluate(coords)
    }

    /// Append `extra` new trailing variables (with zero exponents).
    pub fn extended(&self, extra: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.extended(extra), c.clone()))
            .collect();
        Polynomial {
            domain: self.domain.clone(),
            num_vars: self.num_vars + extra,
            terms,
        }
    }

    /// Drop the last `drop` variables; `None` if any term uses them.
    pub fn restricted(&self, drop: usize) -> Option<Polynomial> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.restricted(drop)?, c.clone());
        }
        Some(Polynomial {
            domain: self.domain.clone(),
            num_vars: self.num_vars - drop,
            terms,
        })
    }

    /// Re-express over another domain (e.g. rationals into a prime field or
    /// a number field). Fails when a coefficient has no image.
    pub fn to_domain(&self, target: &CoeffDomain) -> Result<Polynomial> {
        if target == &self.domain {
            return Ok(self.clone());
        }
        let mut out = Polynomial::zero(target, self.num_vars);
        for (m, c) in &self.terms {
            let r = c.as_rational().ok_or_else(|| {
                Error::UnrepresentableElement(format!(
                    "cannot map {} from {} into {}",
                    c,
                    self.domain.name(),
                    target.name()
                ))
            })?;
            out.add_term(m.clone(), target.from_rational(r.clone())?);
        }
        Ok(out)
    }

    fn require_compatible(&self, other: &Polynomial) {
        assert_eq!(
            self.domain, other.domain,
            "polynomial domain mismatch: {} vs {}",
            self.domain.name(),
            other.domain.name()
        );
        assert_eq!(
            self.num_vars, other.num_vars,
            "polynomial variable-count mismatch"
        );
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.require_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.require_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c))
            .collect();
        Polynomial {
            domain: self.domain.clone(),
            num_vars: self.num_vars,
            terms,
        }
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.require_compatible(rhs);
        let mut out = Polynomial::zero(&self.domain, self.num_vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned_poly_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_poly_binop!(Add, add);
forward_owned_poly_binop!(Sub, sub);
forward_owned_poly_binop!(Mul, mul);

/// Variable name used for printing and parsing: `x, y, z` when there are at
/// most three variables, otherwise `x0, x1, ...`.
pub fn var_name(num_vars: usize, i: usize) -> String {
    if num_vars <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{i}")
    }
}

/// All exponent vectors of the given total degree, in deterministic
/// (lexicographic, first variable most significant) order.
pub fn monomials_of_degree(num_vars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; num_vars];
    fill_monomials(&mut out, &mut current, 0, degree);
    out
}

fn fill_monomials(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Monomial::new(SmallVec::from_slice(current)));
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill_monomials(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> CoeffDomain {
        CoeffDomain::rationals()
    }

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(SmallVec::from_slice(exps))
    }

    #[test]
    fn monomial_basics() {
        let m = mono(&[2, 1, 0]);
        assert_eq!(m.degree(), 3);
        let n = mono(&[1, 1, 1]);
        assert_eq!(m.lcm(&n), mono(&[2, 1, 1]));
        assert!(mono(&[1, 0, 0]).divides(&m));
        assert!(!mono(&[0, 0, 1]).divides(&m));
        assert_eq!(mono(&[1, 1, 0]).div_into(&m), Some(mono(&[1, 0, 0])));
        assert!(mono(&[2, 0, 0]).coprime(&mono(&[0, 1, 1])));
    }

    #[test]
    fn grevlex_examples() {
        use std::cmp::Ordering::*;
        let ord = MonomialOrder::GrevLex;
        // Higher degree wins.
        assert_eq!(ord.cmp(&mono(&[2, 0, 0]), &mono(&[1, 0, 0])), Greater);
        // Same degree: x^2 > xy > y^2 > xz > yz > z^2 in grevlex x>y>z.
        let degree2 = [
            mono(&[2, 0, 0]),
            mono(&[1, 1, 0]),
            mono(&[0, 2, 0]),
            mono(&[1, 0, 1]),
            mono(&[0, 1, 1]),
            mono(&[0, 0, 2]),
        ];
        for w in degree2.windows(2) {
            assert_eq!(ord.cmp(&w[0], &w[1]), Greater);
        }
    }

    #[test]
    fn lex_examples() {
        use std::cmp::Ordering::*;
        let ord = MonomialOrder::Lex;
        // x > y^5 in lex.
        assert_eq!(ord.cmp(&mono(&[1, 0, 0]), &mono(&[0, 5, 0])), Greater);
        assert_eq!(ord.cmp(&mono(&[1, 2, 0]), &mono(&[1, 1, 9])), Greater);
    }

    #[test]
    fn block_order_eliminates() {
        use std::cmp::Ordering::*;
        // Eliminate the last variable: any monomial containing it dominates
        // any monomial that does not.
        let ord = MonomialOrder::Block {
            eliminated: vec![3],
            inner: Box::new(MonomialOrder::GrevLex),
        };
        assert_eq!(ord.cmp(&mono(&[0, 0, 0, 1]), &mono(&[9, 9, 9, 0])), Greater);
        assert_eq!(ord.cmp(&mono(&[2, 0, 0, 1]), &mono(&[0, 0, 1, 1])), Greater);
    }

    #[test]
    fn arithmetic_and_canonical_zero_removal() {
        let x = Polynomial::variable(&q(), 3, 0);
        let y = Polynomial::variable(&q(), 3, 1);
        let sum = &x + &y;
        let diff = &sum - &y;
        assert_eq!(diff, x);
        let cancel = &x - &x;
        assert!(cancel.is_zero());
        assert_eq!(cancel.num_terms(), 0);
    }

    #[test]
    fn product_of_conjugate_linear_forms_over_qw() {
        // (x - y)(x - wy)(x - w^2 y) = x^3 - y^3.
        let k = CoeffDomain::qw();
        let w = k.generator().unwrap();
        let x = Polynomial::variable(&k, 3, 0);
        let y = Polynomial::variable(&k, 3, 1);
        let f1 = &x - &y;
        let f2 = &x - &y.scale(&w);
        let f3 = &x - &y.scale(&(&w * &w));
        let prod = &(&f1 * &f2) * &f3;
        let expected = &x.pow(3) - &y.pow(3);
        assert_eq!(prod, expected);
    }

    #[test]
    fn derivative_examples() {
        let x = Polynomial::variable(&q(), 3, 0);
        let y = Polynomial::variable(&q(), 3, 1);
        // d/dx (x^3) = 3x^2.
        assert_eq!(x.pow(3).partial_derivative(0), x.pow(2).scale(&q().from_i64(3)));
        // Unnormalized second derivative of x^2 is the constant 2.
        assert_eq!(
            x.pow(2).derivative(&[2, 0, 0]),
            Polynomial::constant(&q(), 3, q().from_i64(2))
        );
        // Mixed partial of x^2 y at (1,1,1) is 2.
        let f = &x.pow(2) * &y;
        let ones = vec![q().one(), q().one(), q().one()];
        assert_eq!(f.evaluate_derivative(&ones, &[1, 1, 0]), q().from_i64(2));
        // Constant has zero derivative.
        assert!(Polynomial::one(&q(), 3).partial_derivative(2).is_zero());
    }

    #[test]
    fn derivative_in_positive_characteristic() {
        let f3 = CoeffDomain::prime_field(3).unwrap();
        let x = Polynomial::variable(&f3, 2, 0);
        assert!(x.pow(3).partial_derivative(0).is_zero());
    }

    #[test]
    fn monomial_enumeration() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        // Deterministic order, first variable most significant.
        assert_eq!(ms[0], mono(&[2, 0, 0]));
        assert_eq!(ms[5], mono(&[0, 0, 2]));
        assert_eq!(monomials_of_degree(4, 5).len(), 56);
    }

    #[test]
    fn leading_terms_depend_on_order() {
        // f = x + y^2: grevlex leading term is y^2, lex leading term is x.
        let x = Polynomial::variable(&q(), 3, 0);
        let y = Polynomial::variable(&q(), 3, 1);
        let f = &x + &y.pow(2);
        assert_eq!(
            f.leading_term(&MonomialOrder::GrevLex).unwrap().0,
            &mono(&[0, 2, 0])
        );
        assert_eq!(
            f.leading_term(&MonomialOrder::Lex).unwrap().0,
            &mono(&[1, 0, 0])
        );
    }

    // Property tests.

    prop_compose! {
        fn arb_monomial(num_vars: usize, max_exp: u32)
            (exps in prop::collection::vec(0..=max_exp, num_vars))
            -> Monomial
        {
            Monomial::new(SmallVec::from_slice(&exps))
        }
    }

    prop_compose! {
        fn arb_poly()
            (terms in prop::collection::vec((arb_monomial(3, 3), -9i64..10), 0..6))
            -> Polynomial
        {
            let domain = CoeffDomain::rationals();
            Polynomial::from_terms(
                &domain,
                3,
                terms.into_iter().map(|(m, c)| (m, domain.from_i64(c))),
            )
        }
    }

    /// Random homogeneous polynomial of the given degree.
    fn arb_homogeneous(degree: u32) -> impl Strategy<Value = Polynomial> {
        let monos = monomials_of_degree(3, degree);
        let n = monos.len();
        prop::collection::vec(-9i64..10, n).prop_map(move |coeffs| {
            let domain = CoeffDomain::rationals();
            Polynomial::from_terms(
                &domain,
                3,
                monos
                    .iter()
                    .cloned()
                    .zip(coeffs.into_iter().map(|c| domain.from_i64(c))),
            )
        })
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::GrevLex),
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::Block {
                eliminated: vec![0],
                inner: Box::new(MonomialOrder::GrevLex)
            }),
            Just(MonomialOrder::Block {
                eliminated: vec![2],
                inner: Box::new(MonomialOrder::Lex)
            }),
        ]
    }

    proptest! {
        #[test]
        fn orders_are_total(ord in orders(), a in arb_monomial(3, 4), b in arb_monomial(3, 4)) {
            use std::cmp::Ordering::*;
            let ab = ord.cmp(&a, &b);
            let ba = ord.cmp(&b, &a);
            prop_assert_eq!(ab, ba.reverse());
            prop_assert_eq!(ab == Equal, a == b);
        }

        #[test]
        fn orders_respect_multiplication(
            ord in orders(),
            a in arb_monomial(3, 4),
            b in arb_monomial(3, 4),
            c in arb_monomial(3, 4),
        ) {
            let ab = ord.cmp(&a, &b);
            prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ab);
        }

        #[test]
        fn one_is_minimal(ord in orders(), a in arb_monomial(3, 4)) {
            let one = Monomial::one(3);
            prop_assert_ne!(ord.cmp(&a, &one), std::cmp::Ordering::Less);
        }

        #[test]
        fn derivative_is_linear(f in arb_poly(), g in arb_poly(), var in 0usize..3) {
            let lhs = (&f + &g).partial_derivative(var);
            let rhs = &f.partial_derivative(var) + &g.partial_derivative(var);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn derivative_product_rule(f in arb_poly(), g in arb_poly(), var in 0usize..3) {
            let lhs = (&f * &g).partial_derivative(var);
            let rhs = &(&f.partial_derivative(var) * &g) + &(&f * &g.partial_derivative(var));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn euler_identity(f in (1u32..5).prop_flat_map(arb_homogeneous)) {
            // Σ x_i ∂f/∂x_i = deg(f) · f for homogeneous f.
            let degree = f.total_degree().unwrap_or(0);
            let domain = f.domain().clone();
            let mut acc = Polynomial::zero(&domain, 3);
            for i in 0..3 {
                let xi = Polynomial::variable(&domain, 3, i);
                acc = &acc + &(&xi * &f.partial_derivative(i));
            }
            prop_assert_eq!(acc, f.scale(&domain.from_i64(degree as i64)));
        }

        #[test]
        fn evaluation_is_ring_homomorphism(f in arb_poly(), g in arb_poly(),
                                           px in -3i64..4, py in -3i64..4, pz in -3i64..4) {
            let domain = CoeffDomain::rationals();
            let pt = vec![domain.from_i64(px), domain.from_i64(py), domain.from_i64(pz)];
            let sum = (&f + &g).evaluate(&pt);
            prop_assert_eq!(sum, &f.evaluate(&pt) + &g.evaluate(&pt));
            let prod = (&f * &g).evaluate(&pt);
            prop_assert_eq!(prod, &f.evaluate(&pt) * &g.evaluate(&pt));
        }
    }
}
