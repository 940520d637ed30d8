//! Containment checks between symbolic and ordinary powers of fat point
//! ideals, with witness extraction and the classical sufficient
//! criteria.

use std::time::{Duration, Instant};

use crate::error::Result;
use crate::groebner::Ideal;
use crate::ideal_ops::{irrelevant_ideal, power, product, saturate};
use crate::invariants::{alpha, regularity_via_hilbert};
use crate::poly::Polynomial;
use crate::schemes::FatPointScheme;

/// Outcome of one containment question `lhs ⊆ rhs`, with a witness
/// generator when the containment fails.
#[derive(Clone, Debug)]
pub struct ContainmentReport {
    /// Human-readable statement, e.g. `"I^(3) in I^2"`.
    pub description: String,
    pub holds: bool,
    /// A generator of the left side that is not in the right side.
    pub witness: Option<Polynomial>,
    /// Total generators of the left side's basis.
    pub lhs_generators: usize,
    /// Generators checked before success or first failure.
    pub checked: usize,
    pub elapsed: Duration,
}

impl ContainmentReport {
    pub fn witness_degree(&self) -> Option<u32> {
        self.witness.as_ref().and_then(Polynomial::total_degree)
    }
}

/// Check `lhs ⊆ rhs` by reducing every generator of `lhs` against a
/// basis of `rhs`; on failure the first non-member generator is kept as
/// a witness.
pub fn ideal_containment(description: &str, lhs: &Ideal, rhs: &Ideal) -> ContainmentReport {
    let start = Instant::now();
    let gens = lhs.generators();
    let mut checked = 0;
    let mut witness = None;
    for g in gens {
        checked += 1;
        if !rhs.member(g) {
            witness = Some(g.clone());
            break;
        }
    }
    ContainmentReport {
        description: description.to_string(),
        holds: witness.is_none(),
        witness,
        lhs_generators: gens.len(),
        checked,
        elapsed: start.elapsed(),
    }
}

/// Is the `m`-th symbolic power inside the `r`-th ordinary power?
pub fn symbolic_vs_ordinary(scheme: &FatPointScheme, m: u32, r: u32) -> ContainmentReport {
    let symbolic = scheme.symbolic_power(m);
    let ordinary = power(&scheme.ideal(), r);
    ideal_containment(
        &format!("I^({m}) in I^{r}"),
        &symbolic,
        &ordinary,
    )
}

/// The uniform containment `I^(N m) ⊆ I^m` that holds for any finite
/// set of (fat) points in projective N-space.
pub fn uniform_containment_check(scheme: &FatPointScheme, m: u32) -> ContainmentReport {
    let n = scheme.num_vars() as u32 - 1;
    let mut report = symbolic_vs_ordinary(scheme, n * m, m);
    report.description = format!("I^({} m) in I^m at m = {m}", n);
    report
}

/// The refined plane containment `I^(N m - N + 1) ⊆ I^m`.
pub fn refined_containment_check(scheme: &FatPointScheme, m: u32) -> ContainmentReport {
    let n = scheme.num_vars() as u32 - 1;
    let mut report = symbolic_vs_ordinary(scheme, n * m - n + 1, m);
    report.description = format!("I^({n} m - {}) in I^m at m = {m}", n - 1);
    report
}

/// The `k`-th symbolic power of a saturated ideal of points computed
/// the other way: saturate the ordinary power. For ideals of fat point
/// schemes the only possible embedded component of `I^k` sits at the
/// irrelevant ideal, so the saturation is exactly the intersection of
/// the point-primary components.
pub fn symbolic_power_via_saturation(ideal: &Ideal, k: u32) -> Result<Ideal> {
    let m = irrelevant_ideal(ideal.domain(), ideal.num_vars());
    let (sat, _) = saturate(&power(ideal, k), &m)?;
    Ok(sat)
}

/// Report for the identity `(I^(t))^(k) = I^(tk)`: the left side is
/// computed by saturating the ordinary power of the `t`-fattened ideal,
/// the right side by intersecting point-ideal powers directly.
#[derive(Clone, Debug)]
pub struct PowerIdentityReport {
    pub t: u32,
    pub k: u32,
    pub holds: bool,
    pub elapsed: Duration,
}

pub fn power_identity_check(scheme: &FatPointScheme, t: u32, k: u32) -> Result<PowerIdentityReport> {
    let start = Instant::now();
    let fattened = scheme.scaled(t).ideal();
    let saturation_route = symbolic_power_via_saturation(&fattened, k)?;
    let intersection_route = scheme.scaled(t * k).ideal();
    Ok(PowerIdentityReport {
        t,
        k,
        holds: saturation_route.equals(&intersection_route),
        elapsed: start.elapsed(),
    })
}

/// Report for the postulation criterion: if `r * reg(I) <= alpha(I^(m))`
/// then `I^(m) ⊆ I^r`. Both the criterion and the containment itself
/// are evaluated, so callers can confirm the implication on examples.
#[derive(Clone, Debug)]
pub struct PostulationReport {
    pub m: u32,
    pub r: u32,
    pub regularity: u32,
    pub alpha_m: u32,
    pub criterion_holds: bool,
    pub containment: ContainmentReport,
}

pub fn postulation_check(scheme: &FatPointScheme, m: u32, r: u32) -> Result<PostulationReport> {
    let base = scheme.ideal();
    let regularity = regularity_via_hilbert(&base, scheme)?;
    let symbolic = scheme.symbolic_power(m);
    let alpha_m = alpha(&symbolic).expect("symbolic power of points is nonzero");
    let criterion_holds = r * regularity <= alpha_m;
    let containment = ideal_containment(
        &format!("I^({m}) in I^{r} (postulation)"),
        &symbolic,
        &power(&base, r),
    );
    Ok(PostulationReport {
        m,
        r,
        regularity,
        alpha_m,
        criterion_holds,
        containment,
    })
}

/// The product containment `I^(N l + sum a_i) ⊆ I^(a_1 + 1) ... I^(a_l + 1)`
/// for nonnegative integers `a_1, ..., a_l`.
pub fn product_containment_check(scheme: &FatPointScheme, a: &[u32]) -> ContainmentReport {
    assert!(!a.is_empty(), "need at least one factor");
    let n = scheme.num_vars() as u32 - 1;
    let l = a.len() as u32;
    let total: u32 = a.iter().sum();
    let lhs = scheme.symbolic_power(n * l + total);
    let mut rhs: Option<Ideal> = None;
    for &ai in a {
        let factor = scheme.symbolic_power(ai + 1);
        rhs = Some(match rhs {
            None => factor,
            Some(acc) => product(&acc, &factor),
        });
    }
    let exps: Vec<String> = a.iter().map(|ai| format!("I^({})", ai + 1)).collect();
    ideal_containment(
        &format!("I^({} * {l} + {total}) in {}", n, exps.join(" ")),
        &lhs,
        &rhs.expect("at least one factor"),
    )
}

/// Check `I^(m) ⊆ target` without ever presenting `I^(m)` by a Groebner
/// basis: the symbolic power is saturated, so all its minimal
/// generators live in degrees at most its regularity, which is read off
/// the vanishing-conditions ranks; the certified kernel bases in those
/// degrees are a (redundant) generating set, and each element is
/// reduced against the target. The returned report counts the kernel
/// generators checked.
pub fn symbolic_containment_via_conditions(
    scheme: &FatPointScheme,
    m: u32,
    target: &Ideal,
    description: &str,
) -> Result<ContainmentReport> {
    let start = Instant::now();
    let scaled = scheme.scaled(m);
    let reg = crate::invariants::regularity_via_conditions(&scaled)?;
    let gens = crate::oracle::symbolic_generators_up_to(&scaled, reg)?;
    let mut checked = 0;
    let mut witness = None;
    for g in &gens {
        checked += 1;
        if !target.member(g) {
            witness = Some(g.clone());
            break;
        }
    }
    Ok(ContainmentReport {
        description: description.to_string(),
        holds: witness.is_none(),
        witness,
        lhs_generators: gens.len(),
        checked,
        elapsed: start.elapsed(),
    })
}

/// The sharpened containment `I^(s) ⊆ M^j I^r` where `M` is the
/// irrelevant maximal ideal.
pub fn symbolic_in_scaled_power(
    scheme: &FatPointScheme,
    s: u32,
    j: u32,
    r: u32,
) -> ContainmentReport {
    let lhs = scheme.symbolic_power(s);
    let m = irrelevant_ideal(scheme.domain(), scheme.num_vars());
    let rhs = product(&power(&m, j), &power(&scheme.ideal(), r));
    let description = if j == 0 {
        format!("I^({s}) in I^{r}")
    } else {
        format!("I^({s}) in M^{j} I^{r}")
    };
    ideal_containment(&description, &lhs, &rhs)
}
