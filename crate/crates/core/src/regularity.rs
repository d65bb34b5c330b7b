//! Generic-vanishing classification from left-germ vanishing orders, the β
//! and s threshold invariants with their Möbius law, and jump-locus
//! consistency checks.

use std::cmp::Ordering;

use crate::algreal::AlgReal;
use crate::error::{Error, Result};
use crate::family::{RankFamily, Side, VanishingOrder};
use crate::piecewise::{PiecewisePoly, SupportBound};
use crate::rat::{format_rat, rat_int, Rat};
use crate::report::Report;
use crate::transform::mobius_piecewise;

/// The strict hierarchy IT(0) ⇒ M-regular ⇒ GV.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityClass {
    IT0,
    MRegular,
    GV,
    NotGV,
}

impl RegularityClass {
    pub fn is_gv(&self) -> bool {
        !matches!(self, RegularityClass::NotGV)
    }

    pub fn is_m_regular(&self) -> bool {
        matches!(self, RegularityClass::IT0 | RegularityClass::MRegular)
    }
}

impl std::fmt::Display for RegularityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegularityClass::IT0 => write!(f, "IT(0)"),
            RegularityClass::MRegular => write!(f, "M-regular"),
            RegularityClass::GV => write!(f, "GV"),
            RegularityClass::NotGV => write!(f, "not-GV"),
        }
    }
}

/// Largest breakpoint past which a designated function vanishes.
#[derive(Clone, Debug, PartialEq)]
pub enum Threshold {
    NegInfinity,
    Value(AlgReal),
}

impl Threshold {
    pub fn value(&self) -> Option<&AlgReal> {
        match self {
            Threshold::NegInfinity => None,
            Threshold::Value(v) => Some(v),
        }
    }
}

impl std::fmt::Display for Threshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Threshold::NegInfinity => write!(f, "-inf"),
            Threshold::Value(v) => write!(f, "{}", v.describe()),
        }
    }
}

/// Classification at `x0` from the left germs of h^1..h^g: IT(0) when they
/// all vanish identically together with the value at `x0`; M-regular when
/// each vanishes to order ≥ i+1; GV when each vanishes to order ≥ i.
pub fn classify(fam: &RankFamily, x0: &Rat) -> Result<RegularityClass> {
    let g = fam.g();
    let mut all_zero_germ = true;
    let mut mreg = true;
    let mut gv = true;
    for i in 1..=g {
        let order = fam.vanishing_order(i, x0, Side::Left)?;
        match order {
            VanishingOrder::Infinite => {}
            VanishingOrder::Finite(o) => {
                all_zero_germ = false;
                if o < i {
                    gv = false;
                }
                if o < i + 1 {
                    mreg = false;
                }
            }
        }
    }
    if all_zero_germ {
        // value at x0 itself (right limit when the right germ is known)
        let mut value_zero = true;
        for i in 1..=g {
            match fam.evaluate(i, x0) {
                Ok(v) => {
                    if !v.eq(&rat_int(0)) {
                        value_zero = false;
                    }
                }
                Err(Error::UnknownRegion(_)) => {}
                Err(e) => return Err(e),
            }
        }
        if value_zero {
            return Ok(RegularityClass::IT0);
        }
    }
    Ok(if mreg {
        RegularityClass::MRegular
    } else if gv {
        RegularityClass::GV
    } else {
        RegularityClass::NotGV
    })
}

/// At a point that is at least GV, every strictly larger sample must be
/// IT(0).
pub fn hacon_monotonicity_check(fam: &RankFamily, x0: &Rat, samples: &[Rat]) -> Result<Report> {
    let mut report = Report::new();
    let base = classify(fam, x0)?;
    if base == RegularityClass::NotGV {
        report.fail(
            "hacon-monotonicity",
            &format!("x0 = {} is not GV; nothing to propagate", format_rat(x0)),
        );
        return Ok(report);
    }
    for s in samples {
        let what = format!("x = {} above x0 = {}", format_rat(s), format_rat(x0));
        if s <= x0 {
            report.fail("hacon-monotonicity", &format!("{what}: sample not above x0"));
            continue;
        }
        match classify(fam, s)? {
            RegularityClass::IT0 => report.pass("hacon-monotonicity", &what),
            other => report.fail(
                "hacon-monotonicity",
                &format!("{what}: classified {other}, expected IT(0)"),
            ),
        }
    }
    Ok(report)
}

/// Largest critical-point location across all degrees. Requires every
/// function to be known on a right tail.
pub fn max_critical_point(fam: &RankFamily) -> Result<Threshold> {
    for (i, f) in fam.functions().iter().enumerate() {
        let last = f.segments().last().expect("at least one segment");
        if last.known().is_none() {
            return Err(Error::UnknownRegion(format!(
                "h^{i} is unknown on the right tail"
            )));
        }
    }
    let mut best: Option<AlgReal> = None;
    for cp in fam.critical_points() {
        match &best {
            None => best = Some(cp.location),
            Some(b) => {
                if cp.location.compare(b) == Ordering::Greater {
                    best = Some(cp.location);
                }
            }
        }
    }
    Ok(match best {
        None => Threshold::NegInfinity,
        Some(v) => Threshold::Value(v),
    })
}

/// Supremum of the support of one function (the largest breakpoint past
/// which it vanishes identically). With `ideal_of_point` set, enforces the
/// β ≤ 1 bound.
pub fn beta_invariant(h1: &PiecewisePoly, ideal_of_point: bool) -> Result<Threshold> {
    let threshold = match h1.support_sup() {
        SupportBound::UnknownTail => {
            return Err(Error::UnknownRegion(
                "function is unknown on the right tail".into(),
            ))
        }
        SupportBound::Infinite => {
            return Err(Error::InvalidInput(
                "support is not bounded above; no threshold exists".into(),
            ))
        }
        SupportBound::NegInfinity => Threshold::NegInfinity,
        SupportBound::At(k) => Threshold::Value(h1.breakpoints()[k].clone()),
    };
    if ideal_of_point {
        if let Threshold::Value(beta) = &threshold {
            if beta.cmp_rat(&rat_int(1)) == Ordering::Greater {
                return Err(Error::BetaBoundViolation(beta.describe()));
            }
        }
    }
    Ok(threshold)
}

/// s = β/(h−β), exactly. Requires β ≤ 1 and h ≥ 1; the pole h = β (only
/// possible at h = 1, β = 1) is rejected.
pub fn s_from_beta(beta: &AlgReal, h: u64) -> Result<AlgReal> {
    if h == 0 {
        return Err(Error::BadParameters("h must be a positive integer".into()));
    }
    let one = rat_int(1);
    if beta.cmp_rat(&one) == Ordering::Greater {
        return Err(Error::InvalidBeta(beta.describe()));
    }
    let h_rat = rat_int(h as i64);
    if beta.cmp_rat(&h_rat) == Ordering::Equal {
        return Err(Error::DegenerateDenominator);
    }
    beta.mobius_over(&h_rat)
}

/// Runs the threshold bookkeeping both ways: reads β from the (pre-scaled)
/// ideal-of-point h¹, pushes the function through the Möbius transform,
/// reads s as the output support supremum, and matches it against
/// β/(1−β) = β_l/(h−β_l) with β_l = h·β.
pub fn beta_s_consistency(
    h1_ideal: &PiecewisePoly,
    g: usize,
    chi_n: u64,
    h: u64,
) -> Result<Report> {
    let mut report = Report::new();
    if h == 0 {
        return Err(Error::BadParameters("h must be a positive integer".into()));
    }
    let beta_scaled = beta_invariant(h1_ideal, true)?;
    let transformed = mobius_piecewise(h1_ideal, g, chi_n)?;
    let measured = transformed.support_sup();
    match beta_scaled {
        Threshold::NegInfinity => {
            // the transform leaves an artificial unknown region left of −1,
            // so "identically zero" means: no known segment is nonzero
            let any_nonzero = transformed
                .segments()
                .iter()
                .any(|s| s.known().is_some_and(|p| !p.is_zero()));
            report.push(
                "beta-s",
                !any_nonzero,
                "h^1 vanishes identically; both thresholds are -inf",
            );
        }
        Threshold::Value(beta) if beta.cmp_rat(&rat_int(1)) == Ordering::Equal => {
            // base-point case: the transformed function never vanishes
            report.push(
                "beta-s",
                matches!(measured, SupportBound::Infinite),
                "beta = 1: transformed support is unbounded (s = inf)",
            );
        }
        Threshold::Value(beta) => {
            let s_direct = s_from_beta(&beta, 1)?;
            // the same value through the unscaled polarization: β_l = h·β
            let beta_l = beta.affine(&rat_int(h as i64), &rat_int(0));
            let s_unscaled = s_from_beta(&beta_l, h)?;
            report.push(
                "beta-s",
                s_direct.compare(&s_unscaled) == Ordering::Equal,
                &format!(
                    "β/(1−β) = {} agrees with β_l/(h−β_l) = {}",
                    s_direct.describe(),
                    s_unscaled.describe()
                ),
            );
            match measured {
                SupportBound::At(k) => {
                    let measured_s = &transformed.breakpoints()[k];
                    report.push(
                        "beta-s",
                        measured_s.compare(&s_direct) == Ordering::Equal,
                        &format!(
                            "transformed support ends at {} = β/(1−β)",
                            measured_s.describe()
                        ),
                    );
                }
                other => {
                    report.fail(
                        "beta-s",
                        &format!("transformed support has no finite end: {other:?}"),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// codim J ≤ index + 1 for every stored jump datum whose critical point has
/// both germs known.
pub fn jump_consistency(fam: &RankFamily) -> Report {
    let mut report = Report::new();
    for ((i, x0), codim) in fam.jump_data() {
        let what = format!("i = {i}, x0 = {}, codim = {codim}", format_rat(x0));
        let left = fam.function(*i).left_germ(x0).known();
        let right = fam.function(*i).right_germ(x0).known();
        let (Some(l), Some(r)) = (left, right) else {
            continue; // index not computable from one-sided data
        };
        let diff = r - l;
        if diff.is_zero() {
            report.pass("jump-consistency", &format!("{what}: smooth point, bound vacuous"));
            continue;
        }
        match diff.ord_at(x0) {
            Some(0) | None => {
                report.fail("jump-consistency", &format!("{what}: germs disagree in value"));
            }
            Some(ord) => {
                let index = ord - 1;
                report.push(
                    "jump-consistency",
                    *codim <= index + 1,
                    &format!("{what}: index {index}, need codim ≤ {}", index + 1),
                );
            }
        }
    }
    report
}
