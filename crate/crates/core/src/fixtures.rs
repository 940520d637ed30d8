//! Ready-made schemes and arrangements used by the verification suites
//! and the integration tests.

use crate::coeffs::CoeffDomain;
use crate::error::Result;
use crate::poly::{parse_polynomial, Polynomial};
use crate::schemes::{random_points, FatPointScheme, LineArrangement, ProjectivePoint};

fn q() -> CoeffDomain {
    CoeffDomain::rationals()
}

fn qpt(coords: &[i64]) -> ProjectivePoint {
    ProjectivePoint::from_integers(&q(), coords).expect("valid fixture point")
}

/// A single rational point away from the coordinate axes.
pub fn single_point() -> FatPointScheme {
    FatPointScheme::uniform(&q(), 3, vec![qpt(&[1, 2, 3])], 1).expect("valid fixture")
}

/// Two coordinate points.
pub fn two_points() -> FatPointScheme {
    FatPointScheme::uniform(&q(), 3, vec![qpt(&[1, 0, 0]), qpt(&[0, 1, 0])], 1)
        .expect("valid fixture")
}

/// The three coordinate points of the plane.
pub fn triangle() -> FatPointScheme {
    FatPointScheme::uniform(
        &q(),
        3,
        vec![qpt(&[1, 0, 0]), qpt(&[0, 1, 0]), qpt(&[0, 0, 1])],
        1,
    )
    .expect("valid fixture")
}

/// The coordinate triangle together with the unit point.
pub fn unit4() -> FatPointScheme {
    FatPointScheme::uniform(
        &q(),
        3,
        vec![
            qpt(&[1, 0, 0]),
            qpt(&[0, 1, 0]),
            qpt(&[0, 0, 1]),
            qpt(&[1, 1, 1]),
        ],
        1,
    )
    .expect("valid fixture")
}

/// `count` distinct random affine rational points, reproducible from the
/// seed. Coordinates are kept small so that Groebner bases of the
/// schemes' symbolic powers stay affordable.
pub fn generic_points(count: usize, seed: u64) -> Result<FatPointScheme> {
    let pts = random_points(&q(), 3, count, seed, 5)?;
    FatPointScheme::uniform(&q(), 3, pts, 1)
}

/// `n` lines in general position (no three concurrent) with small
/// rational coefficients, for `2 <= n <= 5`. The singular locus is the
/// star configuration of `n(n-1)/2` double points.
pub fn generic_arrangement(n: usize) -> LineArrangement {
    let candidates = ["x", "y", "z", "x + y + z", "x + 2*y + 4*z"];
    assert!(
        (2..=candidates.len()).contains(&n),
        "generic fixture arrangements exist for 2..=5 lines"
    );
    let lines = candidates[..n]
        .iter()
        .map(|s| parse_polynomial(s, &q(), 3).expect("valid fixture line"))
        .collect();
    let arr = LineArrangement::new(&q(), lines).expect("valid fixture");
    debug_assert!(arr
        .singular_points()
        .expect("valid fixture")
        .points()
        .iter()
        .all(|(_, through)| *through == 2));
    arr
}

/// Four lines, three of them concurrent: x, y, x - y, z. The singular
/// locus is one triple point and three double points.
pub fn pencil_arrangement() -> LineArrangement {
    let lines = ["x", "y", "x - y", "z"]
        .iter()
        .map(|s| parse_polynomial(s, &q(), 3).expect("valid fixture line"))
        .collect();
    LineArrangement::new(&q(), lines).expect("valid fixture")
}

/// The nine lines of (x^3 - y^3)(y^3 - z^3)(z^3 - x^3) over the
/// rationals extended by a primitive cube root of unity. The singular
/// locus consists of twelve triple points, and every line passes
/// through exactly four of them.
pub fn dual_hesse_arrangement() -> LineArrangement {
    let k = CoeffDomain::qw();
    let w = k.generator().expect("extension generator");
    let var = |i: usize| Polynomial::variable(&k, 3, i);
    let mut lines = Vec::with_capacity(9);
    for (a, b) in [(0usize, 1usize), (1, 2), (2, 0)] {
        let mut scale = k.one();
        for _ in 0..3 {
            // x_a - w^e * x_b for e = 0, 1, 2.
            lines.push(&var(a) - &var(b).scale(&scale));
            scale = &scale * &w;
        }
    }
    LineArrangement::new(&k, lines).expect("valid fixture")
}

/// The twelve triple points of the dual Hesse arrangement, as a reduced
/// scheme (all multiplicities one).
pub fn dual_hesse_points() -> FatPointScheme {
    dual_hesse_arrangement()
        .singular_points()
        .expect("valid fixture")
        .with_uniform_multiplicity(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pencil_singular_locus() {
        let sing = pencil_arrangement().singular_points().unwrap();
        assert_eq!(sing.points().len(), 4);
        let mut mults: Vec<u32> = sing.points().iter().map(|(_, m)| *m).collect();
        mults.sort();
        assert_eq!(mults, vec![2, 2, 2, 3]);
    }

    #[test]
    fn dual_hesse_combinatorics() {
        let arr = dual_hesse_arrangement();
        assert_eq!(arr.num_lines(), 9);
        let sing = arr.singular_points().unwrap();
        // Twelve points, all triple.
        assert_eq!(sing.points().len(), 12);
        assert!(sing.points().iter().all(|(_, m)| *m == 3));
        // Each line passes through exactly 4 of the 12 points.
        for line in arr.lines() {
            let on_line = sing
                .points()
                .iter()
                .filter(|(p, _)| line.evaluate(p.coords()).is_zero())
                .count();
            assert_eq!(on_line, 4);
        }
        // The three coordinate points are among them.
        let k = CoeffDomain::qw();
        for coords in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
            let pt = ProjectivePoint::from_integers(&k, &coords).unwrap();
            assert!(sing.points().iter().any(|(p, _)| *p == pt));
        }
    }

    #[test]
    fn dual_hesse_defining_polynomial() {
        let arr = dual_hesse_arrangement();
        let k = arr.domain().clone();
        let expect = parse_polynomial(
            "(x^3 - y^3) * (y^3 - z^3) * (z^3 - x^3)",
            &k,
            3,
        )
        .unwrap();
        assert_eq!(arr.defining_polynomial(), expect);
    }

    #[test]
    fn generic_arrangements_are_star_configurations() {
        for n in 3..=5 {
            let arr = generic_arrangement(n);
            let sing = arr.singular_points().unwrap();
            assert_eq!(sing.points().len(), n * (n - 1) / 2);
            assert!(sing.points().iter().all(|(_, m)| *m == 2));
        }
    }

    #[test]
    fn generic_points_reproducible() {
        let a = generic_points(5, 7).unwrap();
        let b = generic_points(5, 7).unwrap();
        assert_eq!(a.points(), b.points());
        assert_eq!(a.points().len(), 5);
    }
}
