//! Acceptance suite: one test per criterion, exact tolerances throughout,
//! one pass line printed per criterion.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cohrank::algreal::{isolate_real_roots, AlgReal};
use cohrank::family::{RankFamily, Side, SmoothnessIndex, VanishingOrder};
use cohrank::models::{
    build_abel_jacobi, build_gv_subscheme, build_line_bundle, build_product_be, build_theta_sum,
    builtin_catalog, gv_hilbert_poly,
};
use cohrank::piecewise::{PiecewisePoly, Segment};
use cohrank::poly::Poly;
use cohrank::rat::{rat, rat_int, Rat};
use cohrank::regularity::{
    beta_s_consistency, classify, hacon_monotonicity_check, jump_consistency, max_critical_point,
    s_from_beta, RegularityClass, Threshold,
};
use cohrank::transform::{double_inversion_identity_check, invert_neg, mobius_piecewise};

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_ace5)
}

fn random_rat(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rat {
    let den = rng.random_range(1i64..=64);
    let num = rng.random_range(lo * den..=hi * den);
    Rat::new(num.into(), den.into())
}

#[test]
fn criterion_1_gv_subscheme_reproduction() {
    let mut rng = rng();
    for (g, d) in [(3usize, 1usize), (4, 2), (5, 2), (6, 3)] {
        let fam = build_gv_subscheme(g, d).unwrap().family;
        let chi = gv_hilbert_poly(g, d);
        let x_pow_g = Poly::monomial(Rat::one(), g);
        for _ in 0..100 {
            let x = random_rat(&mut rng, -10, 0);
            if x >= rat_int(0) {
                continue;
            }
            assert_eq!(fam.evaluate(0, &x).unwrap(), rat_int(0), "(g,d)=({g},{d})");
        }
        for _ in 0..100 {
            let x = random_rat(&mut rng, 0, 1);
            assert_eq!(fam.evaluate(0, &x).unwrap(), x_pow_g.eval(&x));
        }
        for _ in 0..100 {
            let x = random_rat(&mut rng, 1, 12);
            assert_eq!(fam.evaluate(0, &x).unwrap(), chi.eval(&x));
        }
        // exact continuity at the two breakpoints
        assert_eq!(fam.evaluate(0, &rat_int(0)).unwrap(), rat_int(0));
        assert_eq!(x_pow_g.eval(&rat_int(0)), rat_int(0));
        assert_eq!(fam.evaluate(0, &rat_int(1)).unwrap(), rat_int(1));
        assert_eq!(x_pow_g.eval(&rat_int(1)), chi.eval(&rat_int(1)));
        assert!(fam.continuity_report().all_passed());
    }
    println!("criterion 1 PASS: gv-subscheme h^0 matches the closed forms on all three regions");
}

#[test]
fn criterion_2_smoothness_indices() {
    for (g, d) in [(3usize, 1usize), (4, 2), (5, 2), (6, 3)] {
        let fam = build_gv_subscheme(g, d).unwrap().family;
        assert_eq!(
            fam.smoothness_index(0, &rat_int(0)).unwrap(),
            SmoothnessIndex::Index(g - 1),
            "gv({g},{d}) at 0"
        );
        assert_eq!(
            fam.smoothness_index(0, &rat_int(1)).unwrap(),
            SmoothnessIndex::Index(d),
            "gv({g},{d}) at 1"
        );
    }
    for g in 2..=6usize {
        let fam = build_product_be(g).unwrap().family;
        assert_eq!(
            fam.smoothness_index(0, &rat_int(0)).unwrap(),
            SmoothnessIndex::Index(0),
            "product_be({g})"
        );
        let fam = build_abel_jacobi(g).unwrap().family;
        assert_eq!(
            fam.smoothness_index(0, &rat_int(0)).unwrap(),
            SmoothnessIndex::Index(0),
            "abel_jacobi({g})"
        );
    }
    println!("criterion 2 PASS: smoothness indices g-1 / d / 0 / 0 exactly");
}

#[test]
fn criterion_3_fm_inversion_reproduction() {
    for g in 1..=8usize {
        let t_minus_1_pow = Poly::from_i64(&[-1, 1]).pow(g);
        let one_plus_x_pow = Poly::from_i64(&[1, 1]).pow(g);
        assert_eq!(
            invert_neg(&t_minus_1_pow, g, 1).unwrap(),
            one_plus_x_pow,
            "g = {g}"
        );
    }
    println!("criterion 3 PASS: invert_neg((t-1)^g) = (1+x)^g for g = 1..8");
}

#[test]
fn criterion_4_double_inversion_identities() {
    let mut rng = rng();
    for case in 0..200 {
        let g = rng.random_range(1usize..=6);
        let chi = rng.random_range(1u64..=12);
        let coeffs: Vec<Rat> = (0..=g)
            .map(|_| {
                Rat::new(
                    rng.random_range(-40i64..=40).into(),
                    rng.random_range(1i64..=7).into(),
                )
            })
            .collect();
        let q = Poly::new(coeffs);
        assert!(
            double_inversion_identity_check(&q, g, chi).unwrap(),
            "case {case}: g = {g}, chi = {chi}, Q = {q}"
        );
    }
    println!("criterion 4 PASS: double-inversion identities on 200 random inputs");
}

#[test]
fn criterion_5_euler_polynomials() {
    let lb = build_line_bundle(&Poly::from_i64(&[-2, 0, 1]), 2, 1).unwrap();
    assert_eq!(lb.family.euler_poly().unwrap(), lb.hilbert.clone().unwrap());
    for g in 2..=6usize {
        let m = build_abel_jacobi(g).unwrap();
        assert_eq!(m.family.euler_poly().unwrap(), m.hilbert.clone().unwrap());
    }
    for g in 2..=4usize {
        let m = build_theta_sum(g).unwrap();
        assert_eq!(m.family.euler_poly().unwrap(), m.hilbert.clone().unwrap());
    }
    println!("criterion 5 PASS: alternating sums equal the declared Hilbert polynomials");
}

#[test]
fn criterion_6_integrality_and_divisibility() {
    let mut rng = rng();
    for model in builtin_catalog() {
        let fam = &model.family;
        let g = fam.g();
        let g_fact: BigInt = (2..=g).map(BigInt::from).product::<BigInt>().max(BigInt::one());
        // §-lemma integrality on every known segment coefficient
        for f in fam.functions() {
            for seg in f.segments() {
                let Some(p) = seg.known() else { continue };
                for c in p.coeffs() {
                    let scaled = c * Rat::from_integer(g_fact.clone());
                    assert!(scaled.is_integer(), "{}: g!·{c} not integral", model.name);
                }
            }
        }
        // divisibility at 50 random coprime fractions in known regions
        let mut done = 0;
        let mut attempts = 0;
        while done < 50 && attempts < 5000 {
            attempts += 1;
            let b = rng.random_range(1u64..=40);
            if BigInt::from(b).gcd(&g_fact) != BigInt::one() {
                continue;
            }
            let a = rng.random_range(-(6 * b as i64)..=6 * b as i64);
            let i = rng.random_range(0..=g);
            let x = Rat::new(a.into(), (b as i64).into());
            if fam.evaluate(i, &x).is_err() {
                continue;
            }
            fam.divisibility_quotient(i, a, b)
                .unwrap_or_else(|e| panic!("{}: b^g divisibility failed: {e}", model.name));
            done += 1;
        }
        assert_eq!(done, 50, "{}: not enough valid samples", model.name);
    }
    println!("criterion 6 PASS: g!-integrality everywhere; b^g | b^(2g)·h^i(a/b) at 50 coprime points per model");
}

#[test]
fn criterion_7_beta_s_law() {
    // s(h·l) thresholds at β = 1
    assert_eq!(
        s_from_beta(&AlgReal::from_int(1), 2).unwrap().as_rational(),
        Some(&rat_int(1))
    );
    for h in 2..=10u64 {
        let s = s_from_beta(&AlgReal::from_int(1), h).unwrap();
        assert_eq!(s.as_rational(), Some(&rat(1, h as i64 - 1)));
    }
    // 50 synthetic inputs with rational β ∈ (0, 1]
    let mut rng = rng();
    let mut done = 0;
    while done < 50 {
        let den = rng.random_range(1i64..=24);
        let num = rng.random_range(1i64..=den);
        let beta = Rat::new(num.into(), den.into()); // β_l ∈ (0, 1]
        let h = rng.random_range(1u64..=5);
        let g = rng.random_range(1usize..=4);
        let scaled = &beta / rat_int(h as i64);
        let h1 = PiecewisePoly::from_rational_breaks(
            &[scaled.clone()],
            vec![
                Segment::Known(Poly::new(vec![scaled.clone(), -Rat::one()])),
                Segment::Known(Poly::zero()),
            ],
        )
        .unwrap();
        let report = beta_s_consistency(&h1, g, 1, h).unwrap();
        assert!(report.all_passed(), "β = {beta}, h = {h}:\n{report}");
        done += 1;
    }
    // the worked g = 1 example: support of the transform ends exactly at 1
    let h1 = PiecewisePoly::from_rational_breaks(
        &[rat_int(0), rat(1, 2)],
        vec![
            Segment::Unknown,
            Segment::Known(Poly::from_i64(&[1, -2])),
            Segment::Known(Poly::zero()),
        ],
    )
    .unwrap();
    let out = mobius_piecewise(&h1, 1, 1).unwrap();
    match out.support_sup() {
        cohrank::piecewise::SupportBound::At(k) => {
            assert_eq!(out.breakpoints()[k].as_rational(), Some(&rat_int(1)));
        }
        other => panic!("expected support end at 1, got {other:?}"),
    }
    println!("criterion 7 PASS: s = β/(h−β) exactly; 50 synthetic threshold checks; worked Möbius example ends at 1");
}

#[test]
fn criterion_8_irrational_critical_points() {
    // isolation brackets ±√2 below width 1e-9
    let roots = isolate_real_roots(&Poly::from_i64(&[-2, 0, 1])).unwrap();
    assert_eq!(roots.len(), 2);
    let eps = Rat::new(1.into(), BigInt::from(10u32).pow(9));
    for (root, mult) in &roots {
        assert_eq!(*mult, 1);
        let fine = root.refined_below(&eps);
        assert!(fine.width() < eps);
        // the refined interval still brackets the root of x^2 - 2
        let p = Poly::from_i64(&[-2, 0, 1]);
        let (lo, hi) = fine.interval();
        assert!(p.eval(lo) * p.eval(hi) < Rat::from_integer(0.into()));
    }
    // the maximal critical point of the line-bundle model is exactly √2
    let lb = build_line_bundle(&Poly::from_i64(&[-2, 0, 1]), 2, 1).unwrap();
    let sqrt2 = AlgReal::new(Poly::from_i64(&[-2, 0, 1]), rat_int(1), rat_int(2)).unwrap();
    match max_critical_point(&lb.family).unwrap() {
        Threshold::Value(v) => assert_eq!(v.compare(&sqrt2), Ordering::Equal),
        other => panic!("expected √2, got {other}"),
    }
    // classification flips across √2
    assert_eq!(
        classify(&lb.family, &rat(141, 100)).unwrap(),
        RegularityClass::NotGV
    );
    assert_eq!(
        classify(&lb.family, &rat(142, 100)).unwrap(),
        RegularityClass::IT0
    );
    println!("criterion 8 PASS: ±√2 bracketed under 1e-9; max critical point equals √2; IT(0)/not-GV flips across it");
}

// Re-derives the class from the raw vanishing orders, independently of the
// classifier's branching.
fn derive_class(fam: &RankFamily, x0: &Rat) -> Option<RegularityClass> {
    let g = fam.g();
    let mut orders = Vec::new();
    for i in 1..=g {
        match fam.vanishing_order(i, x0, Side::Left) {
            Ok(o) => orders.push((i, o)),
            Err(_) => return None,
        }
    }
    let all_zero = orders
        .iter()
        .all(|(_, o)| matches!(o, VanishingOrder::Infinite));
    let value_zero = (1..=g).all(|i| {
        fam.evaluate(i, x0)
            .map(|v| v == rat_int(0))
            .unwrap_or(true)
    });
    if all_zero && value_zero {
        return Some(RegularityClass::IT0);
    }
    if orders.iter().all(|(i, o)| o.at_least(i + 1)) {
        return Some(RegularityClass::MRegular);
    }
    if orders.iter().all(|(i, o)| o.at_least(*i)) {
        return Some(RegularityClass::GV);
    }
    Some(RegularityClass::NotGV)
}

#[test]
fn criterion_9_regularity_semantics() {
    for (g, d) in [(3usize, 1usize), (4, 2), (5, 2), (6, 3)] {
        let fam = build_gv_subscheme(g, d).unwrap().family;
        assert_eq!(
            classify(&fam, &rat_int(1)).unwrap(),
            RegularityClass::MRegular,
            "gv({g},{d})"
        );
        let samples = [rat(3, 2), rat_int(2), rat_int(7)];
        let report = hacon_monotonicity_check(&fam, &rat_int(1), &samples).unwrap();
        assert!(report.all_passed(), "gv({g},{d}):\n{report}");
    }
    // classifier agrees with the order-derived class at 50 points per model
    let mut rng = rng();
    for model in builtin_catalog() {
        let fam = &model.family;
        let mut checked = 0;
        let mut attempts = 0;
        while checked < 50 && attempts < 2000 {
            attempts += 1;
            let x = random_rat(&mut rng, -4, 4);
            let Some(expected) = derive_class(fam, &x) else {
                continue;
            };
            let got = classify(fam, &x).unwrap();
            assert_eq!(got, expected, "{} at x = {x}", model.name);
            // hierarchy chain
            if got == RegularityClass::IT0 {
                assert!(got.is_m_regular());
            }
            if got.is_m_regular() {
                assert!(got.is_gv());
            }
            checked += 1;
        }
        assert!(
            checked == 50 || !fam.function(1).is_fully_known(),
            "{}: {checked} points",
            model.name
        );
    }
    println!("criterion 9 PASS: M-regular at the gv threshold; classifier matches order-derived classes");
}

#[test]
fn criterion_10_jump_consistency() {
    for g in 2..=6usize {
        let fam = build_product_be(g).unwrap().family;
        let report = jump_consistency(&fam);
        assert!(report.all_passed(), "product_be({g}):\n{report}");
        assert_eq!(report.len(), 1);
        // a seeded codim-3 datum at an index-0 point must be flagged
        let mut bad_data = std::collections::BTreeMap::new();
        bad_data.insert((0usize, rat_int(0)), 3usize);
        let bad = fam.clone().with_jump_data(bad_data);
        assert!(!jump_consistency(&bad).all_passed(), "product_be({g}) seeded");
    }
    println!("criterion 10 PASS: codim ≤ index+1 for stored jump data; seeded inconsistency detected");
}
