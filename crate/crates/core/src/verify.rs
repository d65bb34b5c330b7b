//! Verification driver: runs the invariant suites over a set of models and
//! assembles a deterministic, order-stable report.

use num_traits::Signed;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::family::RankFamily;
use crate::models::{Model, ModelSpec};
use crate::poly::Poly;
use crate::rat::{format_rat, rat_int, Rat};
use crate::regularity::{
    classify, hacon_monotonicity_check, jump_consistency, RegularityClass,
};
use crate::report::Report;
use crate::transform::double_inversion_identity_check;

const SEED: u64 = 0x1f2e_3d4c_5b6a_7988;

pub struct VerifyOutcome {
    pub report: Report,
    pub passed: bool,
}

/// Runs continuity, Euler, integrality, non-negativity, hierarchy,
/// monotonicity, jump-consistency, and double-inversion suites. The report
/// is sorted by model name (the input order) and check name; randomness is
/// seeded, so repeated runs produce identical reports.
pub fn run_verify(models: &[Model]) -> VerifyOutcome {
    let mut sorted: Vec<&Model> = models.iter().collect();
    sorted.sort_by(|a, b| a.name.cmp(&b.name));
    let mut report = Report::new();
    for model in sorted {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ hash_name(&model.name));
        let local = verify_model(model, &mut rng);
        report.merge_prefixed(&model.name, local);
    }
    if !models.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        report.merge_prefixed("fm-calculus", double_inversion_suite(&mut rng, 200));
    }
    let passed = report.all_passed();
    VerifyOutcome { report, passed }
}

fn hash_name(name: &str) -> u64 {
    name.bytes().fold(0u64, |acc, b| {
        acc.wrapping_mul(131).wrapping_add(b as u64)
    })
}

fn verify_model(model: &Model, rng: &mut ChaCha8Rng) -> Report {
    let mut report = Report::new();
    for note in &model.notes {
        report.pass("data-source", &format!("{} [{}]", note.what, note.source));
    }
    report.merge(model.family.continuity_report());
    if model.family.complete() {
        match model.family.euler_poly() {
            Ok(chi) => match &model.hilbert {
                Some(declared) if declared == &chi => {
                    report.pass("euler", &format!("alternating sum = {chi}"))
                }
                Some(declared) => report.fail(
                    "euler",
                    &format!("alternating sum {chi} differs from declared {declared}"),
                ),
                None => report.pass("euler", &format!("alternating sum = {chi}")),
            },
            Err(e) => report.fail("euler", &e.to_string()),
        }
    }
    report.merge(model.family.integrality_report());
    if matches!(model.spec, ModelSpec::Germ { .. }) {
        // germ families are only formal near 0; skip the global sampling
        // suites for them
        return report;
    }
    report.merge(nonneg_suite(&model.family, rng, 1000));
    report.merge(hierarchy_suite(&model.family, rng, 50));
    report.merge(hacon_suite(&model.family, rng));
    report.merge(jump_consistency(&model.family));
    report
}

fn random_rat_in(rng: &mut ChaCha8Rng, lo: &Rat, hi: &Rat) -> Rat {
    let den = rng.random_range(2u32..=64);
    let num = rng.random_range(0u32..=den);
    lo + (hi - lo) * Rat::new(num.into(), den.into())
}

/// Non-negativity of every known segment at random rationals.
fn nonneg_suite(fam: &RankFamily, rng: &mut ChaCha8Rng, per_degree: usize) -> Report {
    let mut report = Report::new();
    for (i, f) in fam.functions().iter().enumerate() {
        let known: Vec<usize> = (0..f.segments().len())
            .filter(|&s| f.segments()[s].known().is_some())
            .collect();
        if known.is_empty() {
            continue;
        }
        let windows: Vec<(Rat, Rat)> = known
            .iter()
            .map(|&s| f.rational_window(s, 10))
            .collect();
        let mut bad = None;
        for _ in 0..per_degree {
            let w = &windows[rng.random_range(0..windows.len())];
            let x = random_rat_in(rng, &w.0, &w.1);
            let v = fam.evaluate(i, &x).expect("sample in a known window");
            if v.is_negative() {
                bad = Some((x, v));
                break;
            }
        }
        match bad {
            None => report.pass(
                "non-negativity",
                &format!("h^{i}: {per_degree} samples over {} windows", windows.len()),
            ),
            Some((x, v)) => report.fail(
                "non-negativity",
                &format!("h^{i}({}) = {}", format_rat(&x), format_rat(&v)),
            ),
        }
    }
    report
}

/// Classifies random points and re-derives the weaker predicates to confirm
/// IT(0) ⇒ M-regular ⇒ GV.
fn hierarchy_suite(fam: &RankFamily, rng: &mut ChaCha8Rng, points: usize) -> Report {
    let mut report = Report::new();
    let window = classify_window(fam);
    let mut tested = 0usize;
    let mut attempts = 0usize;
    while tested < points && attempts < points * 20 {
        attempts += 1;
        let x = random_rat_in(rng, &window.0, &window.1);
        let class = match classify(fam, &x) {
            Ok(c) => c,
            Err(Error::UnknownRegion(_)) => continue,
            Err(e) => {
                report.fail("hierarchy", &format!("x = {}: {e}", format_rat(&x)));
                return report;
            }
        };
        // re-derive the chain directly from the orders
        let it0 = class == RegularityClass::IT0;
        let mreg = class.is_m_regular();
        let gv = class.is_gv();
        if (it0 && !mreg) || (mreg && !gv) {
            report.fail(
                "hierarchy",
                &format!("chain broken at x = {}: {class}", format_rat(&x)),
            );
            return report;
        }
        tested += 1;
    }
    if tested == 0 {
        report.pass("hierarchy", "no classifiable points (germs unknown)");
    } else {
        report.pass("hierarchy", &format!("chain holds at {tested} classified points"));
    }
    report
}

// A window covering all breakpoints with margin, for classification sweeps.
fn classify_window(fam: &RankFamily) -> (Rat, Rat) {
    let mut lo = rat_int(-2);
    let mut hi = rat_int(2);
    for f in fam.functions() {
        for bp in f.breakpoints() {
            let (l, h) = bp.interval();
            if l - rat_int(2) < lo {
                lo = l - rat_int(2);
            }
            if h + rat_int(2) > hi {
                hi = h + rat_int(2);
            }
        }
    }
    (lo, hi)
}

/// Wherever a random point classifies as GV or better, 20 random points
/// above it must be IT(0).
fn hacon_suite(fam: &RankFamily, rng: &mut ChaCha8Rng) -> Report {
    let mut report = Report::new();
    let window = classify_window(fam);
    let mut bases = Vec::new();
    let mut attempts = 0usize;
    while bases.len() < 3 && attempts < 200 {
        attempts += 1;
        let x = random_rat_in(rng, &window.0, &window.1);
        if let Ok(c) = classify(fam, &x) {
            if c != RegularityClass::NotGV {
                bases.push(x);
            }
        }
    }
    if bases.is_empty() {
        report.pass("hacon-monotonicity", "no GV base points found to test");
        return report;
    }
    for x0 in bases {
        let samples: Vec<Rat> = (0..20)
            .map(|_| {
                let off = random_rat_in(rng, &rat_int(0), &rat_int(4));
                &x0 + off + Rat::new(1.into(), 64.into())
            })
            .collect();
        match hacon_monotonicity_check(fam, &x0, &samples) {
            Ok(local) => {
                let what = format!(
                    "20 samples above x0 = {} all IT(0): {}",
                    format_rat(&x0),
                    local.all_passed()
                );
                report.push("hacon-monotonicity", local.all_passed(), &what);
            }
            Err(e) => report.fail("hacon-monotonicity", &e.to_string()),
        }
    }
    report
}

/// Double-inversion identities on random (Q, g, chi) triples.
pub fn double_inversion_suite(rng: &mut ChaCha8Rng, cases: usize) -> Report {
    let mut report = Report::new();
    let mut all_ok = true;
    for _ in 0..cases {
        let g = rng.random_range(1usize..=6);
        let chi = rng.random_range(1u64..=12);
        let coeffs: Vec<Rat> = (0..=g)
            .map(|_| {
                Rat::new(
                    rng.random_range(-30i64..=30).into(),
                    rng.random_range(1i64..=6).into(),
                )
            })
            .collect();
        let q = Poly::new(coeffs);
        match double_inversion_identity_check(&q, g, chi) {
            Ok(true) => {}
            Ok(false) => {
                all_ok = false;
                report.fail(
                    "double-inversion",
                    &format!("identity failed for g = {g}, chi = {chi}, Q = {q}"),
                );
            }
            Err(e) => {
                all_ok = false;
                report.fail("double-inversion", &e.to_string());
            }
        }
    }
    if all_ok {
        report.pass("double-inversion", &format!("{cases} random cases"));
    }
    report
}
