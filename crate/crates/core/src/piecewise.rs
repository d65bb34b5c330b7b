//! Piecewise-polynomial functions on the real line with algebraic
//! breakpoints and first-class unknown regions.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::algreal::AlgReal;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{format_rat, rat_int, Rat};

/// One piece of a function: either a polynomial valid on the whole open
/// interval, or a region the model does not determine.
#[derive(Clone, Debug, PartialEq)]
pub enum Segment {
    Known(Poly),
    Unknown,
}

impl Segment {
    pub fn known(&self) -> Option<&Poly> {
        match self {
            Segment::Known(p) => Some(p),
            Segment::Unknown => None,
        }
    }

    pub fn is_known_zero(&self) -> bool {
        matches!(self, Segment::Known(p) if p.is_zero())
    }
}

/// Where a rational point sits relative to the breakpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    /// Interior of segment `k` (segment `k` spans breakpoints `k-1..k`).
    Interior(usize),
    /// Exactly at breakpoint `k`.
    At(usize),
}

/// Supremum of the region where the function is certified to vanish safely
/// from the right.
#[derive(Clone, Debug, PartialEq)]
pub enum SupportBound {
    /// The function is `0` on every known region (all segments known zero).
    NegInfinity,
    /// The rightmost tail is unknown; no bound can be certified.
    UnknownTail,
    /// The rightmost known tail is a nonzero polynomial.
    Infinite,
    /// Zero exactly on `(breakpoint k, ∞)`.
    At(usize),
}

#[derive(Clone, Debug)]
pub struct PiecewisePoly {
    breakpoints: Vec<AlgReal>,
    segments: Vec<Segment>,
}

impl PiecewisePoly {
    /// `segments.len()` must be `breakpoints.len() + 1`; breakpoints must be
    /// strictly increasing.
    pub fn new(breakpoints: Vec<AlgReal>, segments: Vec<Segment>) -> Result<Self> {
        if segments.len() != breakpoints.len() + 1 {
            return Err(Error::InvalidInput(format!(
                "{} breakpoints need {} segments, got {}",
                breakpoints.len(),
                breakpoints.len() + 1,
                segments.len()
            )));
        }
        for pair in breakpoints.windows(2) {
            if pair[0].compare(&pair[1]) != Ordering::Less {
                return Err(Error::InvalidInput(format!(
                    "breakpoints out of order: {} then {}",
                    pair[0].describe(),
                    pair[1].describe()
                )));
            }
        }
        Ok(PiecewisePoly {
            breakpoints,
            segments,
        })
    }

    /// A single polynomial valid everywhere.
    pub fn constant(p: Poly) -> Self {
        PiecewisePoly {
            breakpoints: vec![],
            segments: vec![Segment::Known(p)],
        }
    }

    pub fn zero() -> Self {
        PiecewisePoly::constant(Poly::zero())
    }

    /// Completely undetermined function.
    pub fn unknown() -> Self {
        PiecewisePoly {
            breakpoints: vec![],
            segments: vec![Segment::Unknown],
        }
    }

    /// Convenience constructor from rational breakpoints.
    pub fn from_rational_breaks(breaks: &[Rat], segments: Vec<Segment>) -> Result<Self> {
        PiecewisePoly::new(
            breaks.iter().cloned().map(AlgReal::from_rat).collect(),
            segments,
        )
    }

    pub fn breakpoints(&self) -> &[AlgReal] {
        &self.breakpoints
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn is_fully_known(&self) -> bool {
        self.segments.iter().all(|s| s.known().is_some())
    }

    pub fn max_known_degree(&self) -> usize {
        self.segments
            .iter()
            .filter_map(|s| s.known().and_then(|p| p.degree()))
            .max()
            .unwrap_or(0)
    }

    pub fn locate(&self, x: &Rat) -> Location {
        // binary search over exact comparisons
        let mut lo = 0usize;
        let mut hi = self.breakpoints.len();
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.breakpoints[mid].cmp_rat(x) {
                Ordering::Equal => return Location::At(mid),
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
            }
        }
        Location::Interior(lo)
    }

    /// The germ valid just left of `x0`.
    pub fn left_germ(&self, x0: &Rat) -> &Segment {
        match self.locate(x0) {
            Location::Interior(k) => &self.segments[k],
            Location::At(k) => &self.segments[k],
        }
    }

    /// The germ valid just right of `x0`.
    pub fn right_germ(&self, x0: &Rat) -> &Segment {
        match self.locate(x0) {
            Location::Interior(k) => &self.segments[k],
            Location::At(k) => &self.segments[k + 1],
        }
    }

    /// Exact value at a rational point. At a breakpoint the (shared)
    /// one-sided limit is returned; with only one side known, that side's
    /// limit is used.
    pub fn value_at(&self, x: &Rat) -> Result<Rat> {
        match self.locate(x) {
            Location::Interior(k) => match &self.segments[k] {
                Segment::Known(p) => Ok(p.eval(x)),
                Segment::Unknown => Err(Error::UnknownRegion(format!("x = {}", format_rat(x)))),
            },
            Location::At(k) => {
                let left = self.segments[k].known();
                let right = self.segments[k + 1].known();
                match (left, right) {
                    (_, Some(p)) => Ok(p.eval(x)),
                    (Some(p), None) => Ok(p.eval(x)),
                    (None, None) => {
                        Err(Error::UnknownRegion(format!("x = {}", format_rat(x))))
                    }
                }
            }
        }
    }

    /// Breakpoints where both neighbouring segments are known but their
    /// one-sided limits disagree. At an irrational breakpoint agreement is
    /// decided by divisibility of the difference by the defining polynomial.
    pub fn continuity_failures(&self) -> Vec<usize> {
        let mut bad = Vec::new();
        for (k, bp) in self.breakpoints.iter().enumerate() {
            if let (Some(l), Some(r)) = (self.segments[k].known(), self.segments[k + 1].known()) {
                if !limits_agree(l, r, bp) {
                    bad.push(k);
                }
            }
        }
        bad
    }

    /// Scans the known zero tail from the right.
    pub fn support_sup(&self) -> SupportBound {
        let last = self.segments.len() - 1;
        match &self.segments[last] {
            Segment::Unknown => return SupportBound::UnknownTail,
            Segment::Known(p) if !p.is_zero() => return SupportBound::Infinite,
            _ => {}
        }
        let mut j = last;
        while j > 0 && self.segments[j].is_known_zero() {
            j -= 1;
        }
        if j == 0 && self.segments[0].is_known_zero() {
            SupportBound::NegInfinity
        } else {
            // segment j is the last one that is not known-zero; the zero
            // tail starts at the breakpoint to its right
            SupportBound::At(j)
        }
    }

    /// A rational interval `[a, b]` with `a < b` strictly inside segment `k`,
    /// clipping unbounded ends at distance `span`. Used for sampling.
    pub fn rational_window(&self, k: usize, span: i64) -> (Rat, Rat) {
        let left = k.checked_sub(1).map(|j| &self.breakpoints[j]);
        let right = self.breakpoints.get(k);
        match (left, right) {
            (None, None) => (rat_int(-span), rat_int(span)),
            (None, Some(r)) => {
                let upper = strictly_below(r);
                (&upper - &rat_int(span), upper)
            }
            (Some(l), None) => {
                let lower = strictly_above(l);
                let upper = &lower + &rat_int(span);
                (lower, upper)
            }
            (Some(l), Some(r)) => {
                let mut a = l.clone();
                let mut b = r.clone();
                loop {
                    let (a_hi, b_lo) = (a.interval().1.clone(), b.interval().0.clone());
                    if a_hi < b_lo {
                        let third = (&b_lo - &a_hi) / rat_int(3);
                        return (&a_hi + &third, &b_lo - &third);
                    }
                    a = a.refined();
                    b = b.refined();
                }
            }
        }
    }
}

// A rational strictly above the algebraic number.
fn strictly_above(a: &AlgReal) -> Rat {
    match a.as_rational() {
        Some(q) => q + rat_int(1) / rat_int(64),
        None => a.interval().1.clone(),
    }
}

fn strictly_below(a: &AlgReal) -> Rat {
    match a.as_rational() {
        Some(q) => q - rat_int(1) / rat_int(64),
        None => a.interval().0.clone(),
    }
}

/// Exact agreement of one-sided limits at a breakpoint.
pub fn limits_agree(left: &Poly, right: &Poly, bp: &AlgReal) -> bool {
    let diff = right - left;
    if diff.is_zero() {
        return true;
    }
    match bp.as_rational() {
        Some(q) => diff.eval(q).is_zero(),
        None => bp.defining().divides(&diff),
    }
}
