//! Gröbner bases via Buchberger's algorithm, and the [`Ideal`] type.
//!
//! The implementation is deliberately classical and deterministic:
//!
//! * pair selection follows the normal strategy - the pending pair whose
//!   leading-monomial lcm is smallest under the active order is processed
//!   first, with the index pair as the tie-break;
//! * the coprimality criterion and the chain criterion prune useless pairs;
//! * reduction always picks the lowest-index reducer whose leading term
//!   divides the current term, and normal forms are full (no term of the
//!   remainder is divisible by any basis leading term);
//! * bases are returned reduced: monic, auto-reduced, sorted ascending by
//!   leading term. A reduced basis is unique for the ideal and order, so
//!   results are independent of generator order.
//!
//! [`Ideal`] caches one reduced basis per order behind a mutex with
//! compute-once semantics: concurrent readers never observe a partially
//! built basis.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex};

use crate::coeffs::{CoeffDomain, FieldElement};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

type Term = (Monomial, FieldElement);

/// Terms sorted descending under the active order.
struct SortedPoly {
    terms: Vec<Term>,
}

impl SortedPoly {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        SortedPoly {
            terms: p.sorted_terms(order),
        }
    }

    fn into_poly(self, domain: &CoeffDomain, num_vars: usize) -> Polynomial {
        Polynomial::from_terms(domain, num_vars, self.terms)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn leading(&self) -> &Term {
        &self.terms[0]
    }

    /// Divide by the leading coefficient.
    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.first() {
            if lc.is_one() {
                return;
            }
            let inv = lc.inv().expect("leading coefficient nonzero");
            for (_, c) in &mut self.terms {
                *c = &*c * &inv;
            }
        }
    }
}

/// `a - coeff * shift * b`, all term lists descending under `order`.
fn sub_scaled(
    a: &[Term],
    b: &[Term],
    shift: &Monomial,
    coeff: &FieldElement,
    order: &MonomialOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(shift);
        match order.cmp(&a[i].0, &bm) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((bm, -&(coeff * &b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = &a[i].1 - &(coeff * &b[j].1);
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push((b[j].0.mul(shift), -&(coeff * &b[j].1)));
        j += 1;
    }
    out
}

/// Full normal form of `work` against monic reducers, lowest index first.
fn normal_form_sorted(
    mut work: Vec<Term>,
    reducers: &[SortedPoly],
    order: &MonomialOrder,
) -> Vec<Term> {
    let mut out: Vec<Term> = Vec::new();
    'outer: while let Some((m, c)) = work.first().cloned() {
        for g in reducers {
            if g.is_zero() {
                continue;
            }
            let (lt, _) = g.leading();
            if let Some(shift) = lt.div_into(&m) {
                work = sub_scaled(&work, &g.terms, &shift, &c, order);
                continue 'outer;
            }
        }
        out.push((m, c));
        work.remove(0);
    }
    out
}

/// Full normal form of `f` with respect to `basis` under `order`: repeated
/// top reduction until no term of the remainder is divisible by any basis
/// leading term. Reduction always uses the lowest-index applicable basis
/// element, so the result is deterministic for any (not necessarily
/// Gröbner) basis.
pub fn reduce(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let reducers: Vec<SortedPoly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut s = SortedPoly::from_poly(g, order);
            s.make_monic();
            s
        })
        .collect();
    let work = SortedPoly::from_poly(f, order);
    let terms = normal_form_sorted(work.terms, &reducers, order);
    SortedPoly { terms }.into_poly(f.domain(), f.num_vars())
}

/// Quotient of `f` by `g` when `g` divides `f` exactly; `None` otherwise.
pub fn exact_divide(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    assert!(!g.is_zero(), "division by the zero polynomial");
    let order = MonomialOrder::GrevLex;
    let divisor = SortedPoly::from_poly(g, &order);
    let (glt, glc) = divisor.leading();
    let glc_inv = glc.inv().expect("leading coefficient nonzero");
    let mut work = SortedPoly::from_poly(f, &order).terms;
    let mut quotient = Polynomial::zero(f.domain(), f.num_vars());
    while let Some((m, c)) = work.first().cloned() {
        let shift = glt.div_into(&m)?;
        let q = &c * &glc_inv;
        // work -= q * shift * g; the head cancels by construction.
        let scaled_c = &q * glc;
        debug_assert_eq!(&scaled_c, &c);
        work = sub_scaled(&work, &divisor.terms, &shift, &q, &order);
        quotient.add_term(shift, q);
    }
    Some(quotient)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let nonzero: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return Vec::new();
    };
    let domain = first.domain().clone();
    let num_vars = first.num_vars();

    let mut basis: Vec<SortedPoly> = nonzero
        .iter()
        .map(|g| {
            let mut s = SortedPoly::from_poly(g, order);
            s.make_monic();
            s
        })
        .collect();

    let mut pending: Vec<Pair> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..basis.len() {
        for j in 0..i {
            add_pair(&mut pending, &mut pending_set, &basis, j, i);
        }
    }

    while !pending.is_empty() {
        // Normal selection: smallest lcm under the order, then smallest
        // index pair.
        let mut best = 0;
        for k in 1..pending.len() {
            let ord = order.cmp(&pending[k].lcm, &pending[best].lcm);
            let better = match ord {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => {
                    (pending[k].i, pending[k].j) < (pending[best].i, pending[best].j)
                }
            };
            if better {
                best = k;
            }
        }
        let pair = pending.swap_remove(best);
        pending_set.remove(&(pair.i, pair.j));

        let (lt_i, _) = basis[pair.i].leading();
        let (lt_j, _) = basis[pair.j].leading();

        // Coprimality criterion: S-polynomial reduces to zero.
        if lt_i.coprime(lt_j) {
            continue;
        }
        // Chain criterion: if some other basis element's leading term
        // divides the lcm and both companion pairs are already treated,
        // this S-polynomial also reduces to zero.
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].leading().0.divides(&pair.lcm)
                && !pending_set.contains(&key(pair.i, k))
                && !pending_set.contains(&key(pair.j, k))
        });
        if chain {
            continue;
        }

        // S-polynomial: shift_i * g_i - shift_j * g_j (both monic).
        let shift_i = lt_i.div_into(&pair.lcm).unwrap();
        let s = {
            let scaled_i: Vec<Term> = basis[pair.i]
                .terms
                .iter()
                .map(|(m, c)| (m.mul(&shift_i), c.clone()))
                .collect();
            let shift_j = basis[pair.j].leading().0.div_into(&pair.lcm).unwrap();
            let one = domain.one();
            sub_scaled(&scaled_i, &basis[pair.j].terms, &shift_j, &one, order)
        };

        let h = normal_form_sorted(s, &basis, order);
        if h.is_empty() {
            continue;
        }
        let mut h = SortedPoly { terms: h };
        h.make_monic();
        basis.push(h);
        let new = basis.len() - 1;
        for i in 0..new {
            add_pair(&mut pending, &mut pending_set, &basis, i, new);
        }
    }

    reduce_basis(basis, &domain, num_vars, order)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn add_pair(
    pending: &mut Vec<Pair>,
    pending_set: &mut HashSet<(usize, usize)>,
    basis: &[SortedPoly],
    i: usize,
    j: usize,
) {
    let lcm = basis[i].leading().0.lcm(&basis[j].leading().0);
    pending.push(Pair { i, j, lcm });
    pending_set.insert(key(i, j));
}

/// Minimalize and inter-reduce a Gröbner basis, returning the unique
/// reduced basis sorted ascending by leading term.
fn reduce_basis(
    basis: Vec<SortedPoly>,
    domain: &CoeffDomain,
    num_vars: usize,
    order: &MonomialOrder,
) -> Vec<Polynomial> {
    // Minimal basis: keep only elements whose leading term is not divisible
    // by another kept leading term. Processing ascending by leading term
    // makes the choice canonical.
    let mut indices: Vec<usize> = (0..basis.len()).collect();
    indices.sort_by(|&a, &b| {
        order
            .cmp(&basis[a].leading().0, &basis[b].leading().0)
            .then(a.cmp(&b))
    });
    let mut kept: Vec<usize> = Vec::new();
    for idx in indices {
        let lt = &basis[idx].leading().0;
        if !kept.iter().any(|&k| basis[k].leading().0.divides(lt)) {
            kept.push(idx);
        }
    }

    // Inter-reduce tails until stable.
    let mut polys: Vec<Vec<Term>> = kept.iter().map(|&k| basis[k].terms.clone()).collect();
    loop {
        let mut changed = false;
        for i in 0..polys.len() {
            let others: Vec<SortedPoly> = polys
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, t)| SortedPoly { terms: t.clone() })
                .collect();
            let reduced = normal_form_sorted(polys[i].clone(), &others, order);
            let mut reduced = SortedPoly { terms: reduced };
            reduced.make_monic();
            if reduced.terms != polys[i] {
                changed = true;
                polys[i] = reduced.terms;
            }
        }
        if !changed {
            break;
        }
    }

    polys.retain(|p| !p.is_empty());
    polys.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    polys
        .into_iter()
        .map(|terms| SortedPoly { terms }.into_poly(domain, num_vars))
        .collect()
}

/// A polynomial ideal with cached reduced Gröbner bases. Cloning is cheap
/// and clones share the cache.
#[derive(Clone, Debug)]
pub struct Ideal {
    domain: CoeffDomain,
    num_vars: usize,
    generators: Arc<Vec<Polynomial>>,
    cache: Arc<Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>>,
}

impl Ideal {
    /// Build an ideal from generators; zero polynomials are dropped and
    /// exact duplicates removed. All generators must share the domain and
    /// variable count.
    pub fn new(
        domain: &CoeffDomain,
        num_vars: usize,
        generators: impl IntoIterator<Item = Polynomial>,
    ) -> Ideal {
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in generators {
            if g.is_zero() {
                continue;
            }
            assert_eq!(g.domain(), domain, "ideal generator domain mismatch");
            assert_eq!(g.num_vars(), num_vars, "ideal generator variable mismatch");
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ideal {
            domain: domain.clone(),
            num_vars,
            generators: Arc::new(gens),
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    /// An ideal whose generators are already a reduced Gröbner basis under
    /// `order`; seeds the cache instead of recomputing.
    pub fn from_reduced_basis(
        domain: &CoeffDomain,
        num_vars: usize,
        basis: Vec<Polynomial>,
        order: MonomialOrder,
    ) -> Ideal {
        let ideal = Ideal::new(domain, num_vars, basis.clone());
        ideal
            .cache
            .lock()
            .unwrap_or_else(std::sync::PoisonError::into_inner)
            .insert(order, Arc::new(basis));
        ideal
    }

    pub fn zero(domain: &CoeffDomain, num_vars: usize) -> Ideal {
        Ideal::new(domain, num_vars, [])
    }

    pub fn domain(&self) -> &CoeffDomain {
        &self.domain
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    /// The reduced Gröbner basis under `order`, computed once and cached.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Arc<Vec<Polynomial>> {
        let mut cache = self
            .cache
            .lock()
            .unwrap_or_else(std::sync::PoisonError::into_inner);
        if let Some(basis) = cache.get(order) {
            return Arc::clone(basis);
        }
        let basis = Arc::new(buchberger(&self.generators, order));
        cache.insert(order.clone(), Arc::clone(&basis));
        basis
    }

    /// Ideal membership via full reduction against the (cached) basis.
    pub fn member(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        let order = MonomialOrder::GrevLex;
        let basis = self.groebner_basis(&order);
        reduce(f, &basis, &order).is_zero()
    }

    /// Everything in `other` lies in `self`.
    pub fn contains(&self, other: &Ideal) -> bool {
        other.generators.iter().all(|g| self.member(g))
    }

    /// Ideal equality via uniqueness of the reduced Gröbner basis.
    pub fn equals(&self, other: &Ideal) -> bool {
        if self.domain != other.domain || self.num_vars != other.num_vars {
            return false;
        }
        let order = MonomialOrder::GrevLex;
        *self.groebner_basis(&order) == *other.groebner_basis(&order)
    }

    /// Smallest degree of a nonzero element, read off the reduced basis.
    /// Meaningful for homogeneous ideals; `None` when zero.
    pub fn min_generator_degree(&self) -> Option<u32> {
        self.groebner_basis(&MonomialOrder::GrevLex)
            .iter()
            .filter_map(Polynomial::total_degree)
            .min()
    }
}
