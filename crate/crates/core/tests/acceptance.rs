//! Acceptance gate: twelve end-to-end criteria covering the toolkit's
//! headline computations. Each `#[test]` below is one criterion, so the
//! harness prints exactly one pass/fail line per criterion. All
//! arithmetic is exact; every comparison is an equality or a proved
//! inequality, never a tolerance.
//!
//! Expensive symbolic powers are shared between criteria through a
//! process-wide cache (clones of an `Ideal` share its Gröbner cache),
//! so each heavy basis is computed once no matter how many criteria
//! consult it.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fatpoints::containment::{
    ideal_containment, product_containment_check, symbolic_containment_via_conditions,
    uniform_containment_check,
};
use fatpoints::fixtures::{
    dual_hesse_arrangement, dual_hesse_points, generic_arrangement, generic_points,
    pencil_arrangement, triangle, two_points, unit4,
};
use fatpoints::ideal_ops::{irrelevant_ideal, power, product};
use fatpoints::invariants::{
    alpha, beta_threshold, ideal_piece_dim, regularity_via_conditions, regularity_via_hilbert,
    saturation_degree,
};
use fatpoints::oracle::{
    alpha_by_conditions, products_of_pieces, span_membership, symbolic_piece_basis,
    symbolic_piece_contains, symbolic_piece_dim,
};
use fatpoints::poly::{monomials_of_degree, parse_polynomial};
use fatpoints::schemes::FatPointScheme;
use fatpoints::{CoeffDomain, Ideal, MonomialOrder, Polynomial};

/// Seed for every randomized fixture in this gate.
const SEED: u64 = 42;

/// Degree cap for initial-degree scans; far above every value that
/// actually occurs (the largest is 26).
const ALPHA_CAP: u32 = 40;

/// Initial degree of the m-th symbolic power via the certified
/// conditions-rank scan (no Gröbner basis involved).
fn scan_alpha(scheme: &FatPointScheme, m: u32) -> u32 {
    alpha_by_conditions(&scheme.scaled(m), ALPHA_CAP)
        .expect("conditions scan succeeds")
        .expect("least degree found below the cap")
}

/// Process-wide ideal cache. The registry lock is only held while
/// looking up the cell, so concurrent builders of different keys never
/// block each other, while two requests for the same key compute it
/// once.
fn cached(key: String, build: impl FnOnce() -> Ideal) -> Ideal {
    static CELLS: OnceLock<Mutex<HashMap<String, Arc<OnceLock<Ideal>>>>> = OnceLock::new();
    let cells = CELLS.get_or_init(|| Mutex::new(HashMap::new()));
    let cell = {
        let mut map = cells.lock().expect("cache registry");
        Arc::clone(map.entry(key).or_default())
    };
    cell.get_or_init(build).clone()
}

/// Cached ideal of the scheme with all multiplicities scaled by `m`
/// (the m-th symbolic power of the scheme's ideal).
fn sym_ideal(name: &str, scheme: &FatPointScheme, m: u32) -> Ideal {
    let scheme = scheme.clone();
    cached(format!("{name}:sym:{m}"), move || scheme.scaled(m).ideal())
}

/// The singular-locus schemes of the five arrangement fixtures, with
/// the line count and whether the arrangement is generic. The
/// nine-line scheme is keyed through its reduced point set so that all
/// criteria share one cache entry per multiplicity.
fn arrangement_fixtures() -> Vec<(&'static str, FatPointScheme, usize, bool)> {
    let mut out = Vec::new();
    for (name, n) in [("star-3", 3usize), ("star-6", 4), ("star-10", 5)] {
        let scheme = generic_arrangement(n)
            .subproduct_scheme()
            .expect("fixture arrangement");
        out.push((name, scheme, n, true));
    }
    out.push((
        "near-pencil",
        pencil_arrangement()
            .subproduct_scheme()
            .expect("fixture arrangement"),
        4,
        false,
    ));
    out.push((
        "dual-hesse",
        dual_hesse_arrangement()
            .subproduct_scheme()
            .expect("fixture arrangement"),
        9,
        false,
    ));
    out
}

/// Cached symbolic power of a singular-locus scheme. The nine-line
/// scheme's points carry multiplicity two, so its m-th power is keyed
/// as the 2m-th power of the reduced twelve points.
fn sub_ideal(name: &str, scheme: &FatPointScheme, m: u32) -> Ideal {
    if name == "dual-hesse" {
        sym_ideal("dual-hesse", &dual_hesse_points(), 2 * m)
    } else {
        sym_ideal(name, scheme, m)
    }
}

/// Over the rationals extended by a cube root of unity, the product of
/// the nine lines vanishes to order three at each of the twelve triple
/// points but is not a quadratic expression in the points' ideal: it
/// lies in the third symbolic power yet outside the ordinary square,
/// by Gröbner reduction and by exact span membership independently.
#[test]
fn criterion_01_nine_line_product_lies_in_third_symbolic_power_but_not_in_square() {
    let t0 = Instant::now();
    let arr = dual_hesse_arrangement();
    let points = dual_hesse_points();
    let f = arr.defining_polynomial();
    let literal = parse_polynomial("(x^3 - y^3)*(y^3 - z^3)*(z^3 - x^3)", arr.domain(), 3)
        .expect("parse separating form");
    assert_eq!(f, literal, "the nine lines multiply to the cubic-difference product");

    // All derivatives of order <= 2 vanish at all twelve points.
    let third = points.with_uniform_multiplicity(3);
    assert!(
        symbolic_piece_contains(&third, &f).expect("vanishing check"),
        "F must vanish to order 3 at every triple point"
    );

    // Groebner route: F has a nonzero remainder against the square.
    let square = cached("dual-hesse:pow:2".into(), || {
        power(&sym_ideal("dual-hesse", &points, 1), 2)
    });
    assert!(!square.member(&f), "F must not reduce to zero against J^2");

    // Span route: the degree-9 piece of the square is spanned by
    // products of the degree-4 and degree-5 pieces of J, and F lies
    // outside that span.
    let pieces = vec![
        (4u32, symbolic_piece_basis(&points, 4).expect("degree-4 piece")),
        (5u32, symbolic_piece_basis(&points, 5).expect("degree-5 piece")),
    ];
    let span = products_of_pieces(&pieces, 2, 9);
    assert!(
        !span_membership(&span, &f).expect("span membership"),
        "F must lie outside the span of degree-9 products"
    );

    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(120), "two-minute budget, took {elapsed:?}");
    eprintln!("criterion 01: separating form confirmed in {elapsed:?}");
}

/// The ideal generated by the 8-fold products of the nine lines equals
/// the second symbolic power of the twelve points (reduced Gröbner
/// bases coincide), and the sixth symbolic power lies in the square of
/// the second — certified through kernel generators up to the
/// regularity, with no Gröbner basis of the sixth power itself.
#[test]
fn criterion_02_eightfold_products_equal_second_power_and_sixth_lies_in_its_square() {
    let t0 = Instant::now();
    let arr = dual_hesse_arrangement();
    let points = dual_hesse_points();

    let eightfold = cached("dual-hesse:subproducts".into(), || arr.subproducts_ideal());
    let second = sym_ideal("dual-hesse", &points, 2);
    assert!(
        eightfold.equals(&second),
        "8-fold products must generate the second symbolic power"
    );

    let target = cached("dual-hesse:sym2:pow:2".into(), || power(&second, 2));
    let report = symbolic_containment_via_conditions(&points, 6, &target, "J^(6) in (J^(2))^2")
        .expect("kernel-generator route");
    assert!(report.holds, "J^(6) must lie in (J^(2))^2");
    assert_eq!(report.checked, report.lhs_generators);

    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(600), "ten-minute budget, took {elapsed:?}");
    eprintln!(
        "criterion 02: identity and containment confirmed ({} kernel generators) in {elapsed:?}",
        report.lhs_generators
    );
}

/// For the four-line near-pencil's singular locus, the third symbolic
/// power begins in degree 7 — one less than a naive count of conditions
/// predicts — by Gröbner basis and by conditions kernel independently.
#[test]
fn criterion_03_near_pencil_third_symbolic_power_starts_in_degree_seven() {
    let scheme = pencil_arrangement()
        .subproduct_scheme()
        .expect("fixture arrangement");
    let by_groebner =
        alpha(&sym_ideal("near-pencil", &scheme, 3)).expect("nonzero symbolic power");
    let by_conditions = scan_alpha(&scheme, 3);
    assert_eq!(by_groebner, 7, "Groebner route");
    assert_eq!(by_conditions, 7, "conditions route");
    assert_eq!(by_groebner, by_conditions, "the two routes agree exactly");
    eprintln!("criterion 03: initial degree 7 by both routes");
}

/// For every arrangement fixture with n lines, the ideal of (n-1)-fold
/// products has initial degree n-1, and the singular-locus scheme has
/// regularity n-1, read off the first stall of the Hilbert function.
#[test]
fn criterion_04_subproduct_ideals_have_initial_degree_and_regularity_n_minus_one() {
    let arrangements = [
        ("star-3", generic_arrangement(3), 3u32),
        ("star-6", generic_arrangement(4), 4),
        ("star-10", generic_arrangement(5), 5),
        ("near-pencil", pencil_arrangement(), 4),
        ("dual-hesse", dual_hesse_arrangement(), 9),
    ];
    for (name, arr, n) in arrangements {
        let ideal = cached(format!("{name}:subproducts"), || arr.subproducts_ideal());
        assert_eq!(
            alpha(&ideal),
            Some(n - 1),
            "{name}: subproduct ideal must start in degree n-1"
        );
        let scheme = arr.subproduct_scheme().expect("fixture arrangement");
        let reg = if name == "dual-hesse" {
            // The Groebner-free route keeps the nine-line case cheap.
            regularity_via_conditions(&scheme).expect("regularity")
        } else {
            let ideal = sub_ideal(name, &scheme, 1);
            regularity_via_hilbert(&ideal, &scheme).expect("regularity")
        };
        assert_eq!(reg, n - 1, "{name}: regularity must equal n-1");
    }
    eprintln!("criterion 04: initial degree and regularity n-1 on all five arrangements");
}

/// The subproduct ideal of each arrangement equals the ideal of its
/// singular points fattened to (lines through the point) - 1, as an
/// exact ideal identity.
#[test]
fn criterion_05_subproduct_ideals_cut_out_the_fattened_singular_locus() {
    for (name, scheme, _, _) in arrangement_fixtures() {
        let arr = match name {
            "star-3" => generic_arrangement(3),
            "star-6" => generic_arrangement(4),
            "star-10" => generic_arrangement(5),
            "near-pencil" => pencil_arrangement(),
            "dual-hesse" => dual_hesse_arrangement(),
            other => unreachable!("unknown fixture {other}"),
        };
        let products = cached(format!("{name}:subproducts"), || arr.subproducts_ideal());
        let locus = sub_ideal(name, &scheme, 1);
        assert!(
            products.equals(&locus),
            "{name}: subproduct ideal must equal the singular-locus ideal"
        );
    }
    eprintln!("criterion 05: subproduct ideal = fattened singular locus on all five arrangements");
}

/// Initial-degree bounds for symbolic powers of singular-locus ideals
/// of n lines: the (2r-1)-st power starts no earlier than rn-1 and the
/// 2r-th no earlier than rn, with equality on the generic (star)
/// fixtures; swept for r = 1, 2.
#[test]
fn criterion_06_odd_and_even_symbolic_powers_respect_initial_degree_bounds() {
    for (name, scheme, n, generic) in arrangement_fixtures() {
        for r in 1..=2u32 {
            for (m, bound) in [(2 * r - 1, r * n as u32 - 1), (2 * r, r * n as u32)] {
                let a = scan_alpha(&scheme, m);
                if generic {
                    assert_eq!(a, bound, "{name}: alpha of power {m} must equal {bound}");
                } else {
                    assert!(a >= bound, "{name}: alpha of power {m} is {a}, below {bound}");
                }
            }
        }
    }
    eprintln!("criterion 06: initial-degree bounds hold for r = 1, 2 on all five arrangements");
}

/// Sharpened containments with irrelevant-ideal factors for
/// singular-locus ideals: the (2r-1)-st symbolic power lies in
/// M^(r-1) I^r and the 2r-th in M^r I^r, for r = 1, 2 on the
/// arrangements with at most five lines and r = 1 on the nine-line
/// arrangement.
#[test]
fn criterion_07_sharpened_containments_with_irrelevant_ideal_factors() {
    for (name, scheme, _, _) in arrangement_fixtures() {
        let rs: &[u32] = if name == "dual-hesse" { &[1] } else { &[1, 2] };
        let base = sub_ideal(name, &scheme, 1);
        let irrelevant = irrelevant_ideal(scheme.domain(), scheme.num_vars());
        for &r in rs {
            for (s, j) in [(2 * r - 1, r - 1), (2 * r, r)] {
                let lhs = sub_ideal(name, &scheme, s);
                let rhs = product(&power(&irrelevant, j), &power(&base, r));
                let report = ideal_containment("", &lhs, &rhs);
                assert!(report.holds, "{name}: I^({s}) must lie in M^{j} I^{r}");
            }
        }
    }
    eprintln!("criterion 07: sharpened containments hold on every fixture in range");
}

/// Uniform containments in the plane: the 2m-th symbolic power lies in
/// the m-th ordinary power for m = 1, 2 on every point fixture, and on
/// the coordinate triangle the fifth symbolic power lies in the
/// product of the second symbolic power with the ideal itself.
#[test]
fn criterion_08_uniform_containments_for_plane_point_schemes() {
    let fixtures: Vec<(&str, FatPointScheme)> = vec![
        ("triangle", triangle()),
        ("two-points", two_points()),
        ("unit-4", unit4()),
        ("random-5", generic_points(5, SEED).expect("seeded fixture")),
        ("random-6", generic_points(6, SEED).expect("seeded fixture")),
    ];
    for (name, scheme) in &fixtures {
        for m in 1..=2u32 {
            // On the largest random fixture the left side's generators
            // come from certified conditions kernels, which is far
            // cheaper than elimination at multiplicity four.
            let holds = if *name == "random-6" && m == 2 {
                let target = power(&scheme.ideal(), m);
                symbolic_containment_via_conditions(scheme, 2 * m, &target, "I^(4) in I^2")
                    .expect("kernel-generator route")
                    .holds
            } else {
                uniform_containment_check(scheme, m).holds
            };
            assert!(holds, "{name}: I^({}) must lie in I^{m}", 2 * m);
        }
    }
    let report = product_containment_check(&triangle(), &[1, 0]);
    assert!(report.holds, "triangle: I^(5) must lie in I^(2) I");
    eprintln!("criterion 08: uniform containments hold on all five point fixtures");
}

/// Containments between symbolic and ordinary powers of uniformly
/// fattened point ideals: with K the t-fattened ideal of a scheme of
/// at most six points, K^(m) lies in K^r whenever m/r exceeds
/// (t+1)/t, swept over m <= 6, r <= 3. Both t = 2 and t = 3 run on
/// the coordinate-supported schemes; the scheme containing the unit
/// point runs at t = 2, where its bases stay affordable.
#[test]
fn criterion_09_fattened_ideals_contain_their_symbolic_powers_past_the_ratio() {
    let fixtures: Vec<(&str, FatPointScheme, Vec<u32>)> = vec![
        ("triangle", triangle(), vec![2, 3]),
        ("two-points", two_points(), vec![2, 3]),
        ("unit-4", unit4(), vec![2]),
    ];
    let mut checked = 0u32;
    for (name, scheme, ts) in &fixtures {
        for &t in ts {
            for m in 1..=6u32 {
                for r in 1..=3u32 {
                    // Strict inequality m/r > (t+1)/t, cross-multiplied.
                    if m * t <= r * (t + 1) {
                        continue;
                    }
                    let lhs = sym_ideal(name, scheme, t * m);
                    let rhs = cached(format!("{name}:t{t}:pow:{r}"), || {
                        power(&sym_ideal(name, scheme, t), r)
                    });
                    let report = ideal_containment("", &lhs, &rhs);
                    assert!(
                        report.holds,
                        "{name}: (K^({t}))^({m}) must lie in (K^({t}))^{r}"
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked >= 30, "the sweep must cover its full range, got {checked}");
    eprintln!("criterion 09: {checked} fattened-power containments hold");
}

/// The two independent computation routes agree everywhere: certified
/// conditions-kernel ranks match Gröbner-basis piece dimensions on
/// every graded piece of every fixture's symbolic powers (m <= 4,
/// d <= 12), and both routes return the same verdict on every
/// containment checked both ways — zero discrepancies.
#[test]
fn criterion_10_conditions_kernels_and_groebner_bases_agree_everywhere() {
    let fixtures: Vec<(&str, FatPointScheme)> = vec![
        ("triangle", triangle()),
        ("two-points", two_points()),
        ("unit-4", unit4()),
        (
            "near-pencil",
            pencil_arrangement()
                .subproduct_scheme()
                .expect("fixture arrangement"),
        ),
        (
            "star-3",
            generic_arrangement(3)
                .subproduct_scheme()
                .expect("fixture arrangement"),
        ),
        (
            "star-6",
            generic_arrangement(4)
                .subproduct_scheme()
                .expect("fixture arrangement"),
        ),
        (
            "star-10",
            generic_arrangement(5)
                .subproduct_scheme()
                .expect("fixture arrangement"),
        ),
        ("dual-hesse", dual_hesse_points()),
    ];
    let mut pieces = 0u32;
    for (name, scheme) in &fixtures {
        for m in 1..=4u32 {
            let ideal = sym_ideal(name, scheme, m);
            let scaled = scheme.scaled(m);
            for d in 0..=12u32 {
                let by_conditions = symbolic_piece_dim(&scaled, d).expect("oracle dimension") as u64;
                let by_groebner = ideal_piece_dim(&ideal, d).expect("basis dimension");
                assert_eq!(
                    by_conditions, by_groebner,
                    "{name}: piece dimension differs at m = {m}, d = {d}"
                );
                pieces += 1;
            }
        }
    }

    // Verdict agreement on containments decided by both routes, with
    // holding and failing instances represented.
    let verdicts: Vec<(&str, FatPointScheme, u32, u32)> = vec![
        ("triangle", triangle(), 2, 1),
        ("triangle", triangle(), 2, 2),
        ("triangle", triangle(), 3, 2),
        ("two-points", two_points(), 2, 2),
        ("unit-4", unit4(), 2, 1),
        (
            "near-pencil",
            pencil_arrangement()
                .subproduct_scheme()
                .expect("fixture arrangement"),
            3,
            2,
        ),
    ];
    let mut seen_holds = false;
    let mut seen_fails = false;
    for (name, scheme, m, r) in &verdicts {
        let target = power(&sym_ideal(name, scheme, 1), *r);
        let by_groebner = ideal_containment("", &sym_ideal(name, scheme, *m), &target).holds;
        let by_conditions = symbolic_containment_via_conditions(scheme, *m, &target, "")
            .expect("kernel-generator route")
            .holds;
        assert_eq!(
            by_groebner, by_conditions,
            "{name}: verdicts differ on I^({m}) in I^{r}"
        );
        seen_holds |= by_groebner;
        seen_fails |= !by_groebner;
    }
    assert!(seen_holds && seen_fails, "both verdicts must occur in the sample");
    eprintln!(
        "criterion 10: {pieces} graded pieces and {} containment verdicts agree",
        verdicts.len()
    );
}

/// Structural property suites: the Euler identity on a hundred random
/// homogeneous polynomials; subadditivity of the initial degree across
/// all computed pairs of symbolic powers; saturation degrees of
/// ordinary powers bounded by m times the regularity; and invariance
/// of the reduced Gröbner basis under twenty generator shuffles per
/// fixture ideal.
#[test]
fn criterion_11_property_suites_hold() {
    // Euler: sum_i x_i dF/dx_i = deg(F) * F for homogeneous F.
    let q = CoeffDomain::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..100 {
        let d = rng.gen_range(1..=6u32);
        let monomials = monomials_of_degree(3, d);
        let mut f = Polynomial::zero(&q, 3);
        for mono in &monomials {
            if rng.gen_bool(0.4) {
                let c = rng.gen_range(-9i64..=9);
                if c != 0 {
                    f.add_term(mono.clone(), q.from_i64(c));
                }
            }
        }
        if f.is_zero() {
            f.add_term(monomials[0].clone(), q.one());
        }
        let mut euler = Polynomial::zero(&q, 3);
        for v in 0..3 {
            euler = &euler + &(&Polynomial::variable(&q, 3, v) * &f.partial_derivative(v));
        }
        assert_eq!(euler, f.scale(&q.from_i64(d as i64)), "Euler identity at degree {d}");
    }

    // Subadditivity: alpha(I^(a+b)) <= alpha(I^(a)) + alpha(I^(b)).
    let schemes: Vec<(&str, FatPointScheme)> = vec![
        ("triangle", triangle()),
        ("two-points", two_points()),
        ("unit-4", unit4()),
        (
            "near-pencil",
            pencil_arrangement()
                .subproduct_scheme()
                .expect("fixture arrangement"),
        ),
        ("dual-hesse", dual_hesse_points()),
    ];
    for (name, scheme) in &schemes {
        let alphas: Vec<u32> = (1..=4u32).map(|m| scan_alpha(scheme, m)).collect();
        for a in 1..=3usize {
            for b in a..=(4 - a) {
                assert!(
                    alphas[a + b - 1] <= alphas[a - 1] + alphas[b - 1],
                    "{name}: alpha is not subadditive at ({a}, {b})"
                );
            }
        }
    }

    // Saturation degrees: satdeg(I^m) <= m * reg(I), and the saturation
    // of the ordinary power is exactly the symbolic power.
    let satdeg_fixtures: Vec<(&str, FatPointScheme)> = vec![
        ("triangle", triangle()),
        ("two-points", two_points()),
        ("unit-4", unit4()),
        (
            "near-pencil",
            pencil_arrangement()
                .subproduct_scheme()
                .expect("fixture arrangement"),
        ),
    ];
    for (name, scheme) in &satdeg_fixtures {
        let base = sym_ideal(name, scheme, 1);
        let reg = regularity_via_hilbert(&base, scheme).expect("regularity");
        for m in 1..=3u32 {
            let (sd, sat) = saturation_degree(&power(&base, m)).expect("saturation");
            assert!(
                sd <= m * reg,
                "{name}: satdeg(I^{m}) = {sd} exceeds {m} * reg = {}",
                m * reg
            );
            assert!(
                sat.equals(&sym_ideal(name, scheme, m)),
                "{name}: the saturation of I^{m} must be I^({m})"
            );
        }
    }

    // Reduced-basis uniqueness: twenty generator shuffles per fixture
    // ideal leave the reduced basis bit-for-bit identical.
    let shuffle_ideals: Vec<(&str, Ideal)> = vec![
        ("triangle", triangle().ideal()),
        ("unit-4", unit4().ideal()),
        ("near-pencil", pencil_arrangement().subproducts_ideal()),
        ("star-6", generic_arrangement(4).subproducts_ideal()),
    ];
    let order = MonomialOrder::GrevLex;
    for (name, ideal) in &shuffle_ideals {
        let reference = ideal.groebner_basis(&order);
        let mut gens: Vec<Polynomial> = ideal.generators().to_vec();
        for shuffle in 0..20 {
            gens.shuffle(&mut rng);
            let permuted = Ideal::new(ideal.domain(), ideal.num_vars(), gens.clone());
            assert_eq!(
                *permuted.groebner_basis(&order),
                *reference,
                "{name}: reduced basis changed under shuffle {shuffle}"
            );
        }
    }
    eprintln!("criterion 11: Euler, subadditivity, saturation-degree, and shuffle suites hold");
}

/// The one-step asymptotic containment statement concerns very general
/// points in at least four ambient dimensions and degrees past a
/// threshold that grows linearly in the initial degree — outside exact
/// desk-scale computation. Its machinery is accepted through the
/// product containment of criterion 08 and this table: at seeded
/// random plane points, the scaled initial degree of each symbolic
/// power stays above (alpha + 1)/2. Random points stand in for very
/// general ones, so the table is heuristic evidence, not a theorem.
#[test]
fn criterion_12_chudnovsky_table_at_seeded_random_points_heuristic() {
    for s in [5usize, 6, 10] {
        let scheme = generic_points(s, SEED.wrapping_add(s as u64)).expect("seeded fixture");
        let a1 = scan_alpha(&scheme, 1);
        for m in 1..=4u32 {
            let am = scan_alpha(&scheme, m);
            // alpha(I^(m))/m >= (alpha(I) + 1)/2, cross-multiplied.
            assert!(
                2 * am >= m * (a1 + 1),
                "random-{s}: 2 alpha(I^({m})) = {} falls below {m} (alpha+1) = {} [heuristic]",
                2 * am,
                m * (a1 + 1)
            );
        }
    }
    // The degree threshold in the smallest admissible ambient dimension
    // is already 2(N-1)(alpha+N-1)/((N-2)N) + 1 = 4 at alpha = 1 and
    // grows linearly from there, which is what puts the full statement
    // beyond exact reproduction.
    assert_eq!(beta_threshold(4, 1), BigRational::from(BigInt::from(4)));
    eprintln!("criterion 12: Chudnovsky table holds at seeds (heuristic; stands in for the asymptotic)");
}
