//! Ideal arithmetic: sums, products, powers, intersections, colon ideals,
//! and saturation.
//!
//! Intersections use the classical auxiliary-variable construction: for
//! ideals `A`, `B` in `k[x]`, the intersection is the elimination ideal
//! `(t*A + (1-t)*B) ∩ k[x]` in `k[x][t]`. The auxiliary variable is
//! appended last and eliminated with a block order whose inner order is
//! grevlex, so the surviving basis elements form a reduced grevlex basis
//! of the intersection, which seeds the result's basis cache.
//!
//! When every generator on both sides is a single term, the intersection
//! is generated by pairwise lcms instead; the tests keep this fast path
//! honest by checking it against the elimination route.

use crate::coeffs::CoeffDomain;
use crate::error::{Error, Result};
use crate::groebner::{exact_divide, Ideal};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Bound on colon rounds when saturating; proper inputs stabilize in a
/// handful of rounds, so hitting this signals a bug or a wild input.
const SATURATION_ROUND_CAP: usize = 50;

/// The ideal generated by both sets of generators.
pub fn sum(a: &Ideal, b: &Ideal) -> Ideal {
    check_compatible(a, b);
    let gens = a.generators().iter().chain(b.generators()).cloned();
    Ideal::new(a.domain(), a.num_vars(), gens)
}

/// The product ideal, generated by all pairwise products.
pub fn product(a: &Ideal, b: &Ideal) -> Ideal {
    check_compatible(a, b);
    let mut gens = Vec::with_capacity(a.generators().len() * b.generators().len());
    for f in a.generators() {
        for g in b.generators() {
            gens.push(f * g);
        }
    }
    Ideal::new(a.domain(), a.num_vars(), gens)
}

/// The `k`-th power; `k = 0` gives the unit ideal.
pub fn power(a: &Ideal, k: u32) -> Ideal {
    if k == 0 {
        return Ideal::new(a.domain(), a.num_vars(), [Polynomial::one(a.domain(), a.num_vars())]);
    }
    let mut result = a.clone();
    for _ in 1..k {
        result = product(&result, a);
    }
    result
}

/// `A ∩ B`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Ideal {
    check_compatible(a, b);
    if a.is_zero() || b.is_zero() {
        return Ideal::zero(a.domain(), a.num_vars());
    }
    if is_monomial_ideal(a) && is_monomial_ideal(b) {
        return intersect_monomial(a, b);
    }
    intersect_via_elimination(a, b)
}

fn is_monomial_ideal(a: &Ideal) -> bool {
    a.generators().iter().all(|g| g.num_terms() == 1)
}

/// Pairwise-lcm intersection for ideals generated by single terms.
fn intersect_monomial(a: &Ideal, b: &Ideal) -> Ideal {
    let monos = |i: &Ideal| -> Vec<Monomial> {
        i.generators()
            .iter()
            .map(|g| g.terms().next().unwrap().0.clone())
            .collect()
    };
    let am = monos(a);
    let bm = monos(b);
    let mut lcms: Vec<Monomial> = Vec::new();
    for m in &am {
        for n in &bm {
            let l = m.lcm(n);
            if !lcms.contains(&l) {
                lcms.push(l);
            }
        }
    }
    // Keep only divisibility-minimal lcms.
    let minimal: Vec<Monomial> = lcms
        .iter()
        .filter(|l| !lcms.iter().any(|other| *other != **l && other.divides(l)))
        .cloned()
        .collect();
    let one = a.domain().one();
    let gens: Vec<Polynomial> = minimal
        .into_iter()
        .map(|m| {
            Polynomial::from_terms(a.domain(), a.num_vars(), [(m, one.clone())])
        })
        .collect();
    Ideal::new(a.domain(), a.num_vars(), gens)
}

/// Elimination-based intersection; also the cross-check for the monomial
/// fast path.
pub(crate) fn intersect_via_elimination(a: &Ideal, b: &Ideal) -> Ideal {
    let domain = a.domain();
    let n = a.num_vars();
    let t_index = n;
    let t = Polynomial::variable(domain, n + 1, t_index);
    let one_minus_t = &Polynomial::one(domain, n + 1) - &t;

    let mut gens: Vec<Polynomial> = Vec::new();
    for f in a.generators() {
        gens.push(&f.extended(1) * &t);
    }
    for g in b.generators() {
        gens.push(&g.extended(1) * &one_minus_t);
    }

    let order = MonomialOrder::Block {
        eliminated: vec![t_index],
        inner: Box::new(MonomialOrder::GrevLex),
    };
    let helper = Ideal::new(domain, n + 1, gens);
    let basis = helper.groebner_basis(&order);

    // Elements free of t form a reduced grevlex basis of the intersection.
    let restricted: Vec<Polynomial> = basis
        .iter()
        .filter_map(|p| p.restricted(1))
        .collect();
    Ideal::from_reduced_basis(domain, n, restricted, MonomialOrder::GrevLex)
}

/// Colon ideal `(A : f)` for a single nonzero polynomial.
pub fn colon(a: &Ideal, f: &Polynomial) -> Ideal {
    assert!(!f.is_zero(), "colon by the zero polynomial");
    assert_eq!(f.domain(), a.domain(), "colon divisor domain mismatch");
    if a.is_zero() {
        return Ideal::zero(a.domain(), a.num_vars());
    }
    let f_ideal = Ideal::new(a.domain(), a.num_vars(), [f.clone()]);
    let meet = intersect(a, &f_ideal);
    let gens: Vec<Polynomial> = meet
        .generators()
        .iter()
        .map(|g| {
            exact_divide(g, f).expect("intersection with <f> consists of multiples of f")
        })
        .collect();
    Ideal::new(a.domain(), a.num_vars(), gens)
}

/// Colon ideal `(A : B)`, the intersection of `(A : g)` over generators
/// of `B`.
pub fn colon_ideal(a: &Ideal, b: &Ideal) -> Ideal {
    check_compatible(a, b);
    let mut gens = b.generators().iter();
    let Some(first) = gens.next() else {
        // (A : 0) is the unit ideal.
        return Ideal::new(
            a.domain(),
            a.num_vars(),
            [Polynomial::one(a.domain(), a.num_vars())],
        );
    };
    let mut result = colon(a, first);
    for g in gens {
        result = intersect(&result, &colon(a, g));
    }
    result
}

/// Saturation `(A : B^∞)` with the number of strict colon rounds taken.
/// A return of `(A, 0)` means `A` was already saturated with respect
/// to `B`.
pub fn saturate(a: &Ideal, b: &Ideal) -> Result<(Ideal, usize)> {
    check_compatible(a, b);
    let mut current = a.clone();
    for round in 0..SATURATION_ROUND_CAP {
        let next = colon_ideal(&current, b);
        if next.equals(&current) {
            return Ok((current, round));
        }
        current = next;
    }
    Err(Error::CapExceeded {
        context: "saturation".to_string(),
        cap: SATURATION_ROUND_CAP,
    })
}

/// The irrelevant maximal ideal `<x_0, ..., x_{n-1}>`.
pub fn irrelevant_ideal(domain: &CoeffDomain, num_vars: usize) -> Ideal {
    let gens: Vec<Polynomial> = (0..num_vars)
        .map(|i| Polynomial::variable(domain, num_vars, i))
        .collect();
    Ideal::new(domain, num_vars, gens)
}

fn check_compatible(a: &Ideal, b: &Ideal) {
    assert_eq!(a.domain(), b.domain(), "ideal domain mismatch");
    assert_eq!(a.num_vars(), b.num_vars(), "ideal variable count mismatch");
}
