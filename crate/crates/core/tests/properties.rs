//! Cross-module consistency properties on small schemes: the
//! conditions-rank oracle against Gröbner bases, symbolic against
//! ordinary powers, saturation, and arithmetic identities that every
//! ideal of points must satisfy.

use fatpoints::fixtures::{pencil_arrangement, single_point, triangle, two_points, unit4};
use fatpoints::ideal_ops::{intersect, power, product, saturate, irrelevant_ideal, sum};
use fatpoints::invariants::{
    alpha, hilbert_function, ideal_piece_dim, monomial_count, multiplicity,
    regularity_via_conditions, regularity_via_hilbert,
};
use fatpoints::oracle::{alpha_by_conditions, symbolic_piece_dim};
use fatpoints::schemes::FatPointScheme;
use fatpoints::{CoeffDomain, Ideal, MonomialOrder, Polynomial};

fn point_fixtures() -> Vec<(&'static str, FatPointScheme)> {
    vec![
        ("single", single_point()),
        ("two-points", two_points()),
        ("triangle", triangle()),
        ("unit-4", unit4()),
        (
            "near-pencil",
            pencil_arrangement()
                .subproduct_scheme()
                .expect("fixture arrangement"),
        ),
    ]
}

#[test]
fn oracle_dimensions_match_groebner_dimensions() {
    for (name, scheme) in point_fixtures() {
        for m in 1..=3u32 {
            let scaled = scheme.scaled(m);
            let ideal = scaled.ideal();
            for d in 0..=9u32 {
                assert_eq!(
                    symbolic_piece_dim(&scaled, d).expect("oracle dim") as u64,
                    ideal_piece_dim(&ideal, d).expect("groebner dim"),
                    "{name}: m = {m}, d = {d}"
                );
            }
        }
    }
}

#[test]
fn ordinary_powers_lie_in_symbolic_powers() {
    for (name, scheme) in point_fixtures() {
        let base = scheme.ideal();
        for m in 2..=3u32 {
            let symbolic = scheme.symbolic_power(m);
            let ordinary = power(&base, m);
            for g in ordinary.generators() {
                assert!(symbolic.member(g), "{name}: I^{m} must lie in I^({m})");
            }
        }
    }
}

#[test]
fn symbolic_powers_are_saturated() {
    let m_ideal = |i: &Ideal| irrelevant_ideal(i.domain(), i.num_vars());
    for (name, scheme) in point_fixtures() {
        for m in 1..=2u32 {
            let symbolic = scheme.symbolic_power(m);
            let (sat, steps) = saturate(&symbolic, &m_ideal(&symbolic)).expect("saturation");
            assert!(sat.equals(&symbolic), "{name}: I^({m}) must equal its saturation");
            assert_eq!(steps, 0, "{name}: saturating I^({m}) must finish without any colon step");
        }
    }
}

#[test]
fn hilbert_functions_stabilize_at_scheme_degree() {
    for (name, scheme) in point_fixtures() {
        let target = multiplicity(&scheme);
        let ideal = scheme.ideal();
        let reg = regularity_via_hilbert(&ideal, &scheme).expect("regularity");
        for d in reg..reg + 3 {
            assert_eq!(
                hilbert_function(&ideal, d).expect("hilbert"),
                target,
                "{name}: Hilbert function must sit at the scheme degree from the regularity on"
            );
        }
        assert_eq!(
            regularity_via_conditions(&scheme).expect("regularity"),
            reg,
            "{name}: the two regularity routes agree"
        );
    }
}

#[test]
fn alpha_routes_agree_and_scale_monotonically() {
    for (name, scheme) in point_fixtures() {
        let mut last = 0;
        for m in 1..=3u32 {
            let by_groebner = alpha(&scheme.symbolic_power(m)).expect("nonzero ideal");
            let by_conditions = alpha_by_conditions(&scheme.scaled(m), 40)
                .expect("scan")
                .expect("found");
            assert_eq!(by_groebner, by_conditions, "{name}: alpha routes at m = {m}");
            assert!(by_groebner >= last, "{name}: alpha must not decrease in m");
            last = by_groebner;
        }
    }
}

#[test]
fn piece_dimensions_complement_hilbert_function() {
    for (_, scheme) in point_fixtures() {
        let ideal = scheme.ideal();
        for d in 0..=8u32 {
            assert_eq!(
                ideal_piece_dim(&ideal, d).expect("dim")
                    + hilbert_function(&ideal, d).expect("hilbert"),
                monomial_count(3, d)
            );
        }
    }
}

#[test]
fn intersection_is_the_larger_ideal_inside_both() {
    // I ∩ J sits inside I and J and contains the product I J.
    for (name, scheme) in point_fixtures() {
        let base = scheme.ideal();
        let square = power(&base, 2);
        let meet = intersect(&base, &square);
        assert!(meet.equals(&square), "{name}: I ∩ I^2 = I^2");
        let prod = product(&base, &base);
        for g in prod.generators() {
            assert!(meet.member(g), "{name}: I·I lies inside I ∩ I^2");
        }
    }
}

#[test]
fn sum_with_irrelevant_ideal_swallows_points() {
    // Adding the irrelevant ideal to any point ideal gives back M.
    let q = CoeffDomain::rationals();
    let m = irrelevant_ideal(&q, 3);
    for (name, scheme) in point_fixtures() {
        if scheme.domain() != &q {
            continue;
        }
        let total = sum(&scheme.ideal(), &m);
        assert!(total.equals(&m), "{name}: I + M = M");
    }
}

#[test]
fn per_line_multiplicities_cover_the_arrangement() {
    // Every line of the near-pencil passes through exactly as many
    // singular points as its intersections with the other lines allow:
    // summed over the lines, points are counted once per incident line.
    let arr = pencil_arrangement();
    let sing = arr.singular_points().expect("singular points");
    let incidences: u32 = sing.points().iter().map(|(_, through)| *through).sum();
    // 4 lines meeting pairwise: C(4,2) = 6 incidences of pairs; the
    // triple point absorbs three pairs into one point of multiplicity 3.
    assert_eq!(sing.points().len(), 4);
    assert_eq!(incidences, 3 + 2 + 2 + 2);
}

#[test]
fn groebner_bases_are_reduced_and_monic() {
    let order = MonomialOrder::GrevLex;
    for (name, scheme) in point_fixtures() {
        let basis = scheme.ideal().groebner_basis(&order);
        for (i, g) in basis.iter().enumerate() {
            let (lt_i, c) = g.leading_term(&order).expect("nonzero basis element");
            assert!(c.is_one(), "{name}: basis element {i} is not monic");
            // No term of any element is divisible by another leading term.
            for (j, h) in basis.iter().enumerate() {
                if i == j {
                    continue;
                }
                let (lt_j, _) = h.leading_term(&order).expect("nonzero basis element");
                for (mono, _) in g.terms() {
                    assert!(
                        !lt_j.divides(mono),
                        "{name}: term of element {i} divisible by leading term of {j}"
                    );
                }
                assert!(!lt_j.divides(lt_i));
            }
        }
    }
}

#[test]
fn symbolic_power_of_single_point_is_ordinary_power() {
    // For one point the symbolic and ordinary powers coincide.
    let s = single_point();
    for m in 1..=4u32 {
        assert!(
            s.symbolic_power(m).equals(&power(&s.ideal(), m)),
            "single point: I^({m}) = I^{m}"
        );
    }
}

#[test]
fn defining_polynomial_lies_in_every_line_ideal_product() {
    // The product of all lines lies in every k-fold product ideal.
    let arr = pencil_arrangement();
    let f: Polynomial = arr.defining_polynomial();
    for k in 1..=4usize {
        assert!(arr.k_fold_products_ideal(k).member(&f), "k = {k}");
    }
}
