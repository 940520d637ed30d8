//! Projective points, fat point schemes, and line arrangements.
//!
//! A fat point scheme is a finite set of distinct projective points with
//! positive multiplicities. Its defining ideal is the intersection of the
//! corresponding powers of the points' vanishing ideals, and the `m`-th
//! symbolic power of the underlying ideal is obtained by scaling every
//! multiplicity by `m` before intersecting. Intersections are folded as a
//! balanced binary tree with coordinate points (whose ideals are monomial)
//! grouped first, so the cheap pairwise-lcm path handles as much of the
//! work as possible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffs::{CoeffDomain, FieldElement};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ideal_ops::{intersect, power};
use crate::poly::{Monomial, Polynomial};

/// A point of projective space, stored with its first nonzero coordinate
/// normalized to one so that equality is equality of points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectivePoint {
    domain: CoeffDomain,
    coords: Vec<FieldElement>,
}

impl ProjectivePoint {
    pub fn new(domain: &CoeffDomain, coords: Vec<FieldElement>) -> Result<ProjectivePoint> {
        if coords.len() < 2 {
            return Err(Error::InvalidScheme(format!(
                "a projective point needs at least 2 coordinates, got {}",
                coords.len()
            )));
        }
        for c in &coords {
            if c.domain() != domain {
                return Err(Error::DomainMismatch(
                    domain.name(),
                    c.domain().name(),
                ));
            }
        }
        let pivot = coords.iter().position(|c| !c.is_zero()).ok_or_else(|| {
            Error::InvalidScheme("all coordinates are zero".to_string())
        })?;
        let inv = coords[pivot].inv()?;
        let normalized: Vec<FieldElement> = coords.iter().map(|c| c * &inv).collect();
        Ok(ProjectivePoint {
            domain: domain.clone(),
            coords: normalized,
        })
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_integers(domain: &CoeffDomain, coords: &[i64]) -> Result<ProjectivePoint> {
        let elems = coords.iter().map(|&c| domain.from_i64(c)).collect();
        ProjectivePoint::new(domain, elems)
    }

    pub fn domain(&self) -> &CoeffDomain {
        &self.domain
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn num_vars(&self) -> usize {
        self.coords.len()
    }

    /// Exactly one nonzero coordinate; such points have monomial vanishing
    /// ideals, which intersect much faster.
    pub fn is_coordinate_point(&self) -> bool {
        self.coords.iter().filter(|c| !c.is_zero()).count() == 1
    }

    /// The prime ideal of linear forms vanishing at the point: with pivot
    /// coordinate k (normalized to 1), generated by x_i - p_i * x_k for
    /// all i != k.
    pub fn vanishing_ideal(&self) -> Ideal {
        let n = self.coords.len();
        let pivot = self
            .coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("normalized point has a pivot");
        let mut gens = Vec::with_capacity(n - 1);
        for i in 0..n {
            if i == pivot {
                continue;
            }
            let mut g = Polynomial::variable(&self.domain, n, i);
            if !self.coords[i].is_zero() {
                let xk = Polynomial::variable(&self.domain, n, pivot);
                g = &g - &xk.scale(&self.coords[i]);
            }
            gens.push(g);
        }
        Ideal::new(&self.domain, n, gens)
    }
}

impl std::fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Distinct projective points with positive multiplicities.
#[derive(Clone, Debug)]
pub struct FatPointScheme {
    domain: CoeffDomain,
    num_vars: usize,
    points: Vec<(ProjectivePoint, u32)>,
}

impl FatPointScheme {
    pub fn new(
        domain: &CoeffDomain,
        num_vars: usize,
        points: Vec<(ProjectivePoint, u32)>,
    ) -> Result<FatPointScheme> {
        if points.is_empty() {
            return Err(Error::InvalidScheme("a scheme needs at least one point".into()));
        }
        for (p, m) in &points {
            if p.domain() != domain {
                return Err(Error::DomainMismatch(domain.name(), p.domain().name()));
            }
            if p.num_vars() != num_vars {
                return Err(Error::InvalidScheme(format!(
                    "point {p} has {} coordinates, expected {num_vars}",
                    p.num_vars()
                )));
            }
            if *m == 0 {
                return Err(Error::InvalidScheme(format!(
                    "point {p} has multiplicity 0"
                )));
            }
        }
        for i in 0..points.len() {
            for j in 0..i {
                if points[i].0 == points[j].0 {
                    return Err(Error::InvalidScheme(format!(
                        "duplicate point {}",
                        points[i].0
                    )));
                }
            }
        }
        Ok(FatPointScheme {
            domain: domain.clone(),
            num_vars,
            points,
        })
    }

    /// All points with the same multiplicity.
    pub fn uniform(
        domain: &CoeffDomain,
        num_vars: usize,
        points: Vec<ProjectivePoint>,
        multiplicity: u32,
    ) -> Result<FatPointScheme> {
        FatPointScheme::new(
            domain,
            num_vars,
            points.into_iter().map(|p| (p, multiplicity)).collect(),
        )
    }

    pub fn domain(&self) -> &CoeffDomain {
        &self.domain
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn points(&self) -> &[(ProjectivePoint, u32)] {
        &self.points
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.points.iter().map(|(_, m)| *m).max().unwrap_or(0)
    }

    pub fn is_uniform(&self) -> Option<u32> {
        let m = self.points.first()?.1;
        self.points.iter().all(|(_, k)| *k == m).then_some(m)
    }

    /// The same points, all with multiplicity `m`.
    pub fn with_uniform_multiplicity(&self, m: u32) -> FatPointScheme {
        assert!(m >= 1, "multiplicity must be positive");
        FatPointScheme {
            domain: self.domain.clone(),
            num_vars: self.num_vars,
            points: self
                .points
                .iter()
                .map(|(p, _)| (p.clone(), m))
                .collect(),
        }
    }

    /// The scheme with every multiplicity scaled by `m`.
    pub fn scaled(&self, m: u32) -> FatPointScheme {
        assert!(m >= 1, "scaling factor must be positive");
        FatPointScheme {
            domain: self.domain.clone(),
            num_vars: self.num_vars,
            points: self
                .points
                .iter()
                .map(|(p, k)| (p.clone(), k * m))
                .collect(),
        }
    }

    /// The defining ideal: the intersection of the m_i-th powers of the
    /// points' vanishing ideals.
    pub fn ideal(&self) -> Ideal {
        let mut pieces: Vec<Ideal> = Vec::with_capacity(self.points.len());
        // Coordinate points first: their pieces are monomial ideals and
        // intersect by pairwise lcms.
        let (coord, general): (Vec<_>, Vec<_>) = self
            .points
            .iter()
            .partition(|(p, _)| p.is_coordinate_point());
        for (p, m) in coord.iter().chain(general.iter()) {
            pieces.push(power(&p.vanishing_ideal(), *m));
        }
        balanced_intersection(pieces).expect("scheme has at least one point")
    }

    /// The ideal of the scheme scaled by `m`: for the scheme with all
    /// multiplicities one this is the m-th symbolic power of its radical
    /// ideal, and in general the m-th symbolic power of `self.ideal()`.
    pub fn symbolic_power(&self, m: u32) -> Ideal {
        self.scaled(m).ideal()
    }
}

/// Intersect ideals as a balanced binary tree to keep intermediate bases
/// small; `None` when the list is empty.
pub fn balanced_intersection(mut pieces: Vec<Ideal>) -> Option<Ideal> {
    if pieces.is_empty() {
        return None;
    }
    while pieces.len() > 1 {
        let mut next = Vec::with_capacity(pieces.len().div_ceil(2));
        let mut iter = pieces.into_iter();
        while let Some(a) = iter.next() {
            match iter.next() {
                Some(b) => next.push(intersect(&a, &b)),
                None => next.push(a),
            }
        }
        pieces = next;
    }
    pieces.pop()
}

/// A finite set of pairwise non-proportional lines in the projective
/// plane, each given by a nonzero linear form in three variables.
#[derive(Clone, Debug)]
pub struct LineArrangement {
    domain: CoeffDomain,
    lines: Vec<Polynomial>,
}

impl LineArrangement {
    pub fn new(domain: &CoeffDomain, lines: Vec<Polynomial>) -> Result<LineArrangement> {
        if lines.len() < 2 {
            return Err(Error::InvalidArrangement(
                "an arrangement needs at least two lines".into(),
            ));
        }
        for f in &lines {
            if f.domain() != domain {
                return Err(Error::DomainMismatch(domain.name(), f.domain().name()));
            }
            if f.num_vars() != 3 {
                return Err(Error::InvalidArrangement(format!(
                    "line {f} is not a form in three variables"
                )));
            }
            if f.is_zero() || f.homogeneous_degree() != Some(1) {
                return Err(Error::InvalidArrangement(format!(
                    "line {f} is not a nonzero linear form"
                )));
            }
        }
        for i in 0..lines.len() {
            for j in 0..i {
                if proportional(&lines[i], &lines[j]) {
                    return Err(Error::InvalidArrangement(format!(
                        "lines {} and {} coincide",
                        lines[j], lines[i]
                    )));
                }
            }
        }
        Ok(LineArrangement {
            domain: domain.clone(),
            lines,
        })
    }

    pub fn domain(&self) -> &CoeffDomain {
        &self.domain
    }

    pub fn lines(&self) -> &[Polynomial] {
        &self.lines
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    /// The product of all the defining linear forms.
    pub fn defining_polynomial(&self) -> Polynomial {
        let mut f = Polynomial::one(&self.domain, 3);
        for line in &self.lines {
            f = &f * line;
        }
        f
    }

    /// Coefficient vector (a, b, c) of a line ax + by + cz.
    fn coefficients(&self, i: usize) -> [FieldElement; 3] {
        let line = &self.lines[i];
        let coeff = |v: usize| {
            let m = Monomial::variable(3, v);
            line.coefficient(&m)
                .cloned()
                .unwrap_or_else(|| self.domain.zero())
        };
        [coeff(0), coeff(1), coeff(2)]
    }

    /// All points where at least two lines meet, each with the number of
    /// lines passing through it as multiplicity.
    pub fn singular_points(&self) -> Result<FatPointScheme> {
        let mut points: Vec<ProjectivePoint> = Vec::new();
        for i in 0..self.lines.len() {
            let [a, b, c] = self.coefficients(i);
            for j in 0..i {
                let [d, e, f] = self.coefficients(j);
                // Cross product of the coefficient vectors is the meet.
                let coords = vec![
                    &(&b * &f) - &(&c * &e),
                    &(&c * &d) - &(&a * &f),
                    &(&a * &e) - &(&b * &d),
                ];
                let p = ProjectivePoint::new(&self.domain, coords)?;
                if !points.contains(&p) {
                    points.push(p);
                }
            }
        }
        let counted: Vec<(ProjectivePoint, u32)> = points
            .into_iter()
            .map(|p| {
                let through = self
                    .lines
                    .iter()
                    .filter(|line| line.evaluate(p.coords()).is_zero())
                    .count() as u32;
                (p, through)
            })
            .collect();
        FatPointScheme::new(&self.domain, 3, counted)
    }

    /// The singular points, each with multiplicity one less than the
    /// number of lines through it. This is the scheme whose ideal the
    /// subproduct generators cut out.
    pub fn subproduct_scheme(&self) -> Result<FatPointScheme> {
        let sing = self.singular_points()?;
        let points = sing
            .points()
            .iter()
            .map(|(p, through)| (p.clone(), through - 1))
            .collect();
        FatPointScheme::new(&self.domain, 3, points)
    }

    /// The ideal generated by all products of all but one of the lines.
    pub fn subproducts_ideal(&self) -> Ideal {
        self.k_fold_products_ideal(self.lines.len() - 1)
    }

    /// The ideal generated by all products of `k` distinct lines of the
    /// arrangement.
    pub fn k_fold_products_ideal(&self, k: usize) -> Ideal {
        let n = self.lines.len();
        assert!(k >= 1 && k <= n, "k must be between 1 and the line count");
        let mut gens = Vec::new();
        let mut chosen = Vec::with_capacity(k);
        self.collect_products(0, k, &mut chosen, &mut gens);
        Ideal::new(&self.domain, 3, gens)
    }

    fn collect_products(
        &self,
        from: usize,
        k: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Polynomial>,
    ) {
        if chosen.len() == k {
            let mut g = Polynomial::one(&self.domain, 3);
            for &i in chosen.iter() {
                g = &g * &self.lines[i];
            }
            out.push(g);
            return;
        }
        let needed = k - chosen.len();
        for i in from..=self.lines.len() - needed {
            chosen.push(i);
            self.collect_products(i + 1, k, chosen, out);
            chosen.pop();
        }
    }
}

fn proportional(f: &Polynomial, g: &Polynomial) -> bool {
    // For nonzero linear forms: f and g are proportional iff
    // f * lc(g) == g * lc(f) with leading coefficients under any order.
    let order = crate::poly::MonomialOrder::GrevLex;
    let (_, cf) = f.leading_term(&order).expect("nonzero form");
    let (_, cg) = g.leading_term(&order).expect("nonzero form");
    &f.scale(cg) == &g.scale(cf)
}

/// Random distinct rational points with small integer coordinates, for
/// reproducible example schemes. Coordinates are drawn uniformly from
/// -bound..=bound with the last coordinate forced to 1, which keeps the
/// points affine and distinctness easy to check.
pub fn random_points(
    domain: &CoeffDomain,
    num_vars: usize,
    count: usize,
    seed: u64,
    bound: i64,
) -> Result<Vec<ProjectivePoint>> {
    assert!(bound >= 1, "coordinate bound must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<ProjectivePoint> = Vec::new();
    let max_attempts = 200 * count.max(1);
    let mut attempts = 0;
    while points.len() < count {
        if attempts >= max_attempts {
            return Err(Error::RandomPointsExhausted {
                needed: count,
                attempts,
            });
        }
        attempts += 1;
        let mut coords: Vec<i64> = (0..num_vars - 1)
            .map(|_| rng.gen_range(-bound..=bound))
            .collect();
        coords.push(1);
        let p = ProjectivePoint::from_integers(domain, &coords)?;
        if !points.contains(&p) {
            points.push(p);
        }
    }
    Ok(points)
}

/// A parsed scheme description file: an optional point list and an
/// optional line list over a common field.
#[derive(Clone, Debug)]
pub struct SchemeFile {
    pub domain: CoeffDomain,
    pub num_vars: usize,
    pub points: Vec<(ProjectivePoint, u32)>,
    pub lines: Vec<Polynomial>,
}

impl SchemeFile {
    pub fn scheme(&self) -> Result<FatPointScheme> {
        FatPointScheme::new(&self.domain, self.num_vars, self.points.clone())
    }

    pub fn arrangement(&self) -> Result<LineArrangement> {
        LineArrangement::new(&self.domain, self.lines.clone())
    }
}

/// Parse the plain-text scheme format:
///
/// ```text
/// # comment
/// field: Q            (or "Fp 31", or "Qw")
/// point: 1, 0, 0 mult: 2
/// point: 0, 1, -1
/// line: 1, -1, 0
/// ```
///
/// Coordinates and line coefficients are field-element expressions
/// (rationals, and `w` over the cube-root extension). A missing `mult:`
/// defaults to 1. The number of variables is inferred from the first
/// point or line.
pub fn parse_scheme_text(text: &str) -> Result<SchemeFile> {
    parse_scheme_text_over(text, None)
}

/// Like [`parse_scheme_text`], but with an optional field override that
/// replaces the file's declared field before any coordinate is read, so
/// the same fixture can be re-run over another coefficient field.
pub fn parse_scheme_text_over(
    text: &str,
    field_override: Option<&CoeffDomain>,
) -> Result<SchemeFile> {
    let mut domain: Option<CoeffDomain> = None;
    let mut num_vars: Option<usize> = None;
    let mut points: Vec<(ProjectivePoint, u32)> = Vec::new();
    let mut lines: Vec<Polynomial> = Vec::new();

    let err = |line: usize, msg: String| Error::Parse { line, msg };

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, rest) = trimmed
            .split_once(':')
            .ok_or_else(|| err(lineno, format!("expected 'key: value', got '{trimmed}'")))?;
        let rest = rest.trim();
        match key.trim() {
            "field" => {
                if domain.is_some() {
                    return Err(err(lineno, "field specified twice".into()));
                }
                domain = Some(match field_override {
                    Some(k) => {
                        // Validate the declared field even when overridden.
                        parse_field_name(rest).map_err(|e| err(lineno, e.to_string()))?;
                        k.clone()
                    }
                    None => parse_field_name(rest).map_err(|e| err(lineno, e.to_string()))?,
                });
            }
            "point" => {
                let domain = domain
                    .as_ref()
                    .ok_or_else(|| err(lineno, "field must be declared before points".into()))?;
                let (coord_part, mult) = match rest.split_once("mult:") {
                    Some((c, m)) => {
                        let mult: u32 = m.trim().parse().map_err(|_| {
                            err(lineno, format!("invalid multiplicity '{}'", m.trim()))
                        })?;
                        (c.trim(), mult)
                    }
                    None => (rest, 1),
                };
                let coords = parse_element_list(coord_part, domain)
                    .map_err(|e| err(lineno, e.to_string()))?;
                match num_vars {
                    None => num_vars = Some(coords.len()),
                    Some(n) if n != coords.len() => {
                        return Err(err(
                            lineno,
                            format!("expected {n} coordinates, got {}", coords.len()),
                        ));
                    }
                    _ => {}
                }
                let p = ProjectivePoint::new(domain, coords)
                    .map_err(|e| err(lineno, e.to_string()))?;
                points.push((p, mult));
            }
            "line" => {
                let domain = domain
                    .as_ref()
                    .ok_or_else(|| err(lineno, "field must be declared before lines".into()))?;
                let coeffs = parse_element_list(rest, domain)
                    .map_err(|e| err(lineno, e.to_string()))?;
                if coeffs.len() != 3 {
                    return Err(err(
                        lineno,
                        format!("a line needs 3 coefficients, got {}", coeffs.len()),
                    ));
                }
                match num_vars {
                    None => num_vars = Some(3),
                    Some(3) => {}
                    Some(n) => {
                        return Err(err(
                            lineno,
                            format!("lines live in 3 variables but points use {n}"),
                        ));
                    }
                }
                let form = Polynomial::linear_form(domain, &coeffs);
                if form.is_zero() {
                    return Err(err(lineno, "line has all coefficients zero".into()));
                }
                lines.push(form);
            }
            other => {
                return Err(err(lineno, format!("unknown key '{other}'")));
            }
        }
    }

    let domain = domain.ok_or_else(|| err(0, "missing 'field:' declaration".into()))?;
    let num_vars = num_vars.ok_or_else(|| err(0, "no points or lines given".into()))?;
    Ok(SchemeFile {
        domain,
        num_vars,
        points,
        lines,
    })
}

/// Parse a field name as used in scheme files and on the command line:
/// `Q`, `Fp <prime>` (also accepted as `Fp:<prime>`), or `Qw` for the
/// rationals extended by a primitive cube root of unity.
pub fn parse_field_name(name: &str) -> Result<CoeffDomain> {
    let cleaned = name.trim();
    if cleaned == "Q" {
        return Ok(CoeffDomain::rationals());
    }
    if cleaned == "Qw" {
        return Ok(CoeffDomain::qw());
    }
    for sep in [' ', ':'] {
        if let Some((head, tail)) = cleaned.split_once(sep) {
            if head.trim() == "Fp" {
                let p: u64 = tail.trim().parse().map_err(|_| {
                    Error::InvalidInput(format!("invalid prime '{}'", tail.trim()))
                })?;
                return CoeffDomain::prime_field(p);
            }
        }
    }
    Err(Error::InvalidInput(format!(
        "unknown field '{cleaned}' (expected Q, Fp <p>, or Qw)"
    )))
}

fn parse_element_list(input: &str, domain: &CoeffDomain) -> Result<Vec<FieldElement>> {
    input
        .split(',')
        .map(|part| crate::poly::parse_element(part.trim(), domain))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn q() -> CoeffDomain {
        CoeffDomain::rationals()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &q(), 3).unwrap()
    }

    #[test]
    fn point_normalization_and_equality() {
        let a = ProjectivePoint::from_integers(&q(), &[2, 4, 6]).unwrap();
        let b = ProjectivePoint::from_integers(&q(), &[1, 2, 3]).unwrap();
        assert_eq!(a, b);
        let c = ProjectivePoint::from_integers(&q(), &[0, 0, 5]).unwrap();
        assert!(c.is_coordinate_point());
        assert!(!a.is_coordinate_point());
        assert!(ProjectivePoint::from_integers(&q(), &[0, 0, 0]).is_err());
    }

    #[test]
    fn vanishing_ideal_of_a_point() {
        let p0 = ProjectivePoint::from_integers(&q(), &[1, 2, 3]).unwrap();
        let ideal = p0.vanishing_ideal();
        // Linear forms vanishing at (1 : 2 : 3).
        assert!(ideal.member(&p("y - 2*x")));
        assert!(ideal.member(&p("z - 3*x")));
        assert!(ideal.member(&p("2*z - 3*y")));
        assert!(!ideal.member(&p("x")));
        // Coordinate point gives a monomial ideal.
        let e2 = ProjectivePoint::from_integers(&q(), &[0, 0, 1]).unwrap();
        let gens = e2.vanishing_ideal();
        assert!(gens.equals(&Ideal::new(&q(), 3, [p("x"), p("y")])));
    }

    #[test]
    fn fat_point_ideal_of_two_coordinate_points() {
        // Points (1:0:0) and (0:1:0), multiplicities 1: ideal is
        // <y, z> ∩ <x, z> = <z, xy>.
        let pts = vec![
            (ProjectivePoint::from_integers(&q(), &[1, 0, 0]).unwrap(), 1),
            (ProjectivePoint::from_integers(&q(), &[0, 1, 0]).unwrap(), 1),
        ];
        let scheme = FatPointScheme::new(&q(), 3, pts).unwrap();
        let ideal = scheme.ideal();
        assert!(ideal.equals(&Ideal::new(&q(), 3, [p("z"), p("x*y")])));
    }

    #[test]
    fn double_point_ideal() {
        // A double point at (0:0:1): <x, y>^2.
        let pts = vec![(ProjectivePoint::from_integers(&q(), &[0, 0, 1]).unwrap(), 2)];
        let scheme = FatPointScheme::new(&q(), 3, pts).unwrap();
        assert!(scheme
            .ideal()
            .equals(&Ideal::new(&q(), 3, [p("x^2"), p("x*y"), p("y^2")])));
        // Symbolic power scales the multiplicity.
        assert!(scheme
            .symbolic_power(2)
            .equals(&crate::ideal_ops::power(
                &Ideal::new(&q(), 3, [p("x"), p("y")]),
                4
            )));
    }

    #[test]
    fn scheme_validation() {
        let dup = vec![
            (ProjectivePoint::from_integers(&q(), &[1, 0, 0]).unwrap(), 1),
            (ProjectivePoint::from_integers(&q(), &[2, 0, 0]).unwrap(), 1),
        ];
        assert!(FatPointScheme::new(&q(), 3, dup).is_err());
        let zero_mult = vec![(ProjectivePoint::from_integers(&q(), &[1, 0, 0]).unwrap(), 0)];
        assert!(FatPointScheme::new(&q(), 3, zero_mult).is_err());
        assert!(FatPointScheme::new(&q(), 3, vec![]).is_err());
    }

    #[test]
    fn triangle_arrangement_singular_points() {
        // Lines x, y, z: singular points are the three coordinate points,
        // each on exactly two lines.
        let arr = LineArrangement::new(&q(), vec![p("x"), p("y"), p("z")]).unwrap();
        let sing = arr.singular_points().unwrap();
        assert_eq!(sing.points().len(), 3);
        for (pt, mult) in sing.points() {
            assert!(pt.is_coordinate_point());
            assert_eq!(*mult, 2);
        }
        assert_eq!(arr.defining_polynomial(), p("x*y*z"));
    }

    #[test]
    fn concurrent_lines_are_counted_once() {
        // x, y, x - y all pass through (0:0:1); z meets each elsewhere.
        let arr =
            LineArrangement::new(&q(), vec![p("x"), p("y"), p("x - y"), p("z")]).unwrap();
        let sing = arr.singular_points().unwrap();
        // Points: (0:0:1) on 3 lines; (0:1:0), (1:0:0), (1:1:0) on 2 each.
        assert_eq!(sing.points().len(), 4);
        let triple: Vec<_> = sing.points().iter().filter(|(_, m)| *m == 3).collect();
        assert_eq!(triple.len(), 1);
        assert_eq!(
            triple[0].0,
            ProjectivePoint::from_integers(&q(), &[0, 0, 1]).unwrap()
        );
        assert_eq!(sing.points().iter().filter(|(_, m)| *m == 2).count(), 3);
    }

    #[test]
    fn proportional_lines_rejected() {
        assert!(LineArrangement::new(&q(), vec![p("x"), p("2*x")]).is_err());
        assert!(LineArrangement::new(&q(), vec![p("x + y"), p("-x - y")]).is_err());
        assert!(LineArrangement::new(&q(), vec![p("x^2"), p("y")]).is_err());
    }

    #[test]
    fn subproducts_of_the_triangle() {
        let arr = LineArrangement::new(&q(), vec![p("x"), p("y"), p("z")]).unwrap();
        let sub = arr.subproducts_ideal();
        assert!(sub.equals(&Ideal::new(&q(), 3, [p("y*z"), p("x*z"), p("x*y")])));
    }

    #[test]
    fn random_points_are_distinct_and_reproducible() {
        let a = random_points(&q(), 3, 6, 42, 10).unwrap();
        let b = random_points(&q(), 3, 6, 42, 10).unwrap();
        assert_eq!(a, b);
        for i in 0..a.len() {
            for j in 0..i {
                assert_ne!(a[i], a[j]);
            }
        }
        let c = random_points(&q(), 3, 6, 43, 10).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn parse_scheme_file_roundtrip() {
        let text = "\
# two points and a line
field: Q
point: 1, 0, 0 mult: 2
point: 0, 1, -1
line: 1, -1, 0
";
        let file = parse_scheme_text(text).unwrap();
        assert_eq!(file.num_vars, 3);
        assert_eq!(file.points.len(), 2);
        assert_eq!(file.points[0].1, 2);
        assert_eq!(file.points[1].1, 1);
        assert_eq!(file.lines.len(), 1);
        assert_eq!(file.lines[0], p("x - y"));
        let scheme = file.scheme().unwrap();
        assert_eq!(scheme.points().len(), 2);
    }

    #[test]
    fn parse_scheme_file_extension_field() {
        let text = "\
field: Qw
point: 1, w, w^2 mult: 3
";
        let file = parse_scheme_text(text).unwrap();
        assert_eq!(file.points.len(), 1);
        let k = CoeffDomain::qw();
        let w = k.generator().unwrap();
        let expected = ProjectivePoint::new(
            &k,
            vec![k.one(), w.clone(), &w * &w],
        )
        .unwrap();
        assert_eq!(file.points[0].0, expected);
    }

    #[test]
    fn parse_scheme_file_errors() {
        assert!(parse_scheme_text("point: 1, 0, 0\n").is_err()); // field first
        assert!(parse_scheme_text("field: Q\nfield: Q\n").is_err());
        assert!(parse_scheme_text("field: Z\n").is_err());
        assert!(parse_scheme_text("field: Q\npoint: 1, 0\npoint: 1, 0, 0\n").is_err());
        assert!(parse_scheme_text("field: Q\nline: 1, 0\n").is_err());
        assert!(parse_scheme_text("field: Q\npoint: 0, 0, 0\n").is_err());
        assert!(parse_scheme_text("field: Q\nbogus: 1\n").is_err());
        assert!(parse_scheme_text("field: Q\npoint: 1, 0, 0 mult: x\n").is_err());
        assert!(parse_scheme_text("field: Q\n").is_err()); // nothing declared
    }

    #[test]
    fn field_names() {
        assert_eq!(parse_field_name("Q").unwrap().name(), "Q");
        assert_eq!(parse_field_name("Fp 31").unwrap().name(), "Fp 31");
        assert_eq!(parse_field_name("Fp:101").unwrap().name(), "Fp 101");
        assert_eq!(parse_field_name("Qw").unwrap().name(), "Qw");
        assert!(parse_field_name("Fp 32").is_err());
        assert!(parse_field_name("R").is_err());
    }
}
