//! Numerical invariants of homogeneous ideals and fat point schemes:
//! Hilbert functions, initial degree, Castelnuovo-Mumford regularity for
//! point schemes, saturation degree, and Waldschmidt-type bounds.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ideal_ops::{irrelevant_ideal, saturate};
use crate::poly::{monomials_of_degree, MonomialOrder, Polynomial};
use crate::schemes::FatPointScheme;

/// Number of monomials of degree `d` in `num_vars` variables.
pub fn monomial_count(num_vars: usize, d: u32) -> u64 {
    binomial((d as u64) + (num_vars as u64) - 1, (num_vars as u64) - 1)
}

/// Hilbert function of `R/I` in degree `d`, counted as the number of
/// standard monomials (monomials outside the leading-term ideal).
pub fn hilbert_function(ideal: &Ideal, d: u32) -> Result<u64> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous(
            "Hilbert function requires a homogeneous ideal".into(),
        ));
    }
    let order = MonomialOrder::GrevLex;
    let basis = ideal.groebner_basis(&order);
    let lts: Vec<_> = basis
        .iter()
        .map(|g| g.leading_term(&order).expect("basis elements nonzero").0.clone())
        .collect();
    let count = monomials_of_degree(ideal.num_vars(), d)
        .into_iter()
        .filter(|m| !lts.iter().any(|lt| lt.divides(m)))
        .count();
    Ok(count as u64)
}

/// Dimension of the degree-`d` piece of the ideal itself.
pub fn ideal_piece_dim(ideal: &Ideal, d: u32) -> Result<u64> {
    Ok(monomial_count(ideal.num_vars(), d) - hilbert_function(ideal, d)?)
}

/// Initial degree: the least degree of a nonzero form in the ideal.
/// `None` for the zero ideal.
pub fn alpha(ideal: &Ideal) -> Option<u32> {
    ideal.min_generator_degree()
}

/// Degree (multiplicity) of a fat point scheme in projective N-space:
/// the sum over the points of C(m_i + N - 1, N).
pub fn multiplicity(scheme: &FatPointScheme) -> u64 {
    let n = scheme.num_vars() as u64 - 1;
    scheme
        .points()
        .iter()
        .map(|(_, m)| binomial(*m as u64 + n - 1, n))
        .sum()
}

/// Castelnuovo-Mumford regularity of the (saturated) defining ideal of a
/// fat point scheme, read off the Hilbert function: the first degree
/// where the Hilbert function of `R/I` stalls. Hilbert functions of
/// graded quotients can never stall and then grow again, so the first
/// stall is final; for a saturated point ideal the stalled value must be
/// the scheme's degree, and that is checked rather than assumed.
pub fn regularity_via_hilbert(ideal: &Ideal, scheme: &FatPointScheme) -> Result<u32> {
    let target = multiplicity(scheme);
    let mut previous = hilbert_function(ideal, 0)?;
    // The Hilbert function reaches its limit no later than the scheme
    // degree (it starts at 1 and strictly increases until the stall).
    let cap = target as u32 + 1;
    for d in 1..=cap {
        let current = hilbert_function(ideal, d)?;
        if current == previous {
            if current != target {
                return Err(Error::InvalidInput(format!(
                    "Hilbert function stalls at {current} but the scheme has degree {target}; \
                     the ideal is not the saturated ideal of the scheme"
                )));
            }
            return Ok(d);
        }
        previous = current;
    }
    Err(Error::InvalidInput(
        "Hilbert function failed to stabilize within the scheme degree".into(),
    ))
}

/// The same regularity computation driven entirely by the
/// vanishing-conditions linear algebra, with no Groebner basis of the
/// symbolic power: the Hilbert function of the quotient in degree `d` is
/// the number of monomials minus the dimension of the space of forms
/// satisfying all vanishing conditions. Useful when the symbolic power
/// itself is too expensive to present by generators.
pub fn regularity_via_conditions(scheme: &FatPointScheme) -> Result<u32> {
    let target = multiplicity(scheme);
    let n = scheme.num_vars();
    let hf = |d: u32| -> Result<u64> {
        Ok(monomial_count(n, d) - crate::oracle::symbolic_piece_dim(scheme, d)? as u64)
    };
    let mut previous = hf(0)?;
    let cap = target as u32 + 1;
    for d in 1..=cap {
        let current = hf(d)?;
        if current == previous {
            if current != target {
                return Err(Error::InvalidInput(format!(
                    "Hilbert function stalls at {current} but the scheme has degree {target}"
                )));
            }
            return Ok(d);
        }
        previous = current;
    }
    Err(Error::InvalidInput(
        "Hilbert function failed to stabilize within the scheme degree".into(),
    ))
}

/// Saturation degree and the saturation itself: the least degree from
/// which the ideal agrees with its saturation. The scan stops once both
/// ideals are generated in degrees at or below the current degree and
/// their pieces agree there - from then on both sides grow by
/// multiplication with linear forms, so agreement persists.
pub fn saturation_degree(ideal: &Ideal) -> Result<(u32, Ideal)> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous(
            "saturation degree requires a homogeneous ideal".into(),
        ));
    }
    let m = irrelevant_ideal(ideal.domain(), ideal.num_vars());
    let (sat, _) = saturate(ideal, &m)?;
    let max_gen_degree = |i: &Ideal| -> u32 {
        i.groebner_basis(&MonomialOrder::GrevLex)
            .iter()
            .filter_map(Polynomial::total_degree)
            .max()
            .unwrap_or(0)
    };
    let stable_from = max_gen_degree(ideal).max(max_gen_degree(&sat));
    let mut last_disagreement: Option<u32> = None;
    let mut d = 0;
    loop {
        let agree = hilbert_function(ideal, d)? == hilbert_function(&sat, d)?;
        if !agree {
            last_disagreement = Some(d);
        }
        if agree && d >= stable_from {
            break;
        }
        d += 1;
    }
    Ok((last_disagreement.map_or(0, |l| l + 1), sat))
}

/// Rational lower and upper bounds for the Waldschmidt constant of a fat
/// point scheme's ideal, from initial degrees of symbolic powers up to
/// `max_m`:
///
/// * every alpha(I^(m)) / (m + N - 1) is a lower bound, as is the
///   refinement (alpha(I) + N - 1) / N;
/// * every alpha(I^(m)) / m is an upper bound.
///
/// Returns `(best_lower, best_upper)`.
pub fn waldschmidt_bounds(
    scheme: &FatPointScheme,
    max_m: u32,
) -> Result<(BigRational, BigRational)> {
    assert!(max_m >= 1, "need at least the first symbolic power");
    let n = scheme.num_vars() as i64 - 1;
    let rat = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let mut lower: Option<BigRational> = None;
    let mut upper: Option<BigRational> = None;
    for m in 1..=max_m {
        let power = scheme.symbolic_power(m);
        let a = alpha(&power).ok_or_else(|| {
            Error::ZeroIdeal("symbolic power of a point scheme is never zero".into())
        })? as i64;
        let low = if m == 1 {
            // Chudnovsky-type bound from the first power.
            rat(a + n - 1, n)
        } else {
            rat(a, m as i64 + n - 1)
        };
        let up = rat(a, m as i64);
        lower = Some(match lower {
            Some(cur) => cur.max(low),
            None => low,
        });
        upper = Some(match upper {
            Some(cur) => cur.min(up),
            None => up,
        });
    }
    Ok((lower.unwrap(), upper.unwrap()))
}

/// Upper bound for the resurgence of the ideal of a scheme with uniform
/// multiplicity `t` in projective N-space: (t + N - 1) / t. For t = 1
/// this is the classical bound N.
pub fn resurgence_upper_bound(t: u32, n: u32) -> BigRational {
    BigRational::new(BigInt::from(t + n - 1), BigInt::from(t))
}

/// Degree threshold beta(N, alpha) = 2(N-1)(alpha + N - 1)/((N-2)N) + 1
/// for projective N-space with N >= 4; below that the threshold
/// degenerates and the value 1 is returned.
pub fn beta_threshold(n: u32, alpha: u32) -> BigRational {
    if n < 4 {
        return BigRational::from(BigInt::from(1));
    }
    let num = 2 * (n as i64 - 1) * (alpha as i64 + n as i64 - 1);
    let den = (n as i64 - 2) * n as i64;
    BigRational::new(BigInt::from(num), BigInt::from(den))
        + BigRational::from(BigInt::from(1))
}
