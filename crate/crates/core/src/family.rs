//! Families {h^i}_{i=0..g} of piecewise-polynomial rank functions together
//! with breakpoint analysis, recentering, and the Euler / integrality /
//! divisibility / duality checks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algreal::AlgReal;
use crate::error::{Error, Result};
use crate::piecewise::{PiecewisePoly, Segment};
use crate::poly::Poly;
use crate::rat::{format_rat, rat_int, Rat};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Order of vanishing of a one-sided germ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VanishingOrder {
    Finite(usize),
    /// The germ is identically zero.
    Infinite,
}

impl VanishingOrder {
    pub fn at_least(&self, k: usize) -> bool {
        match self {
            VanishingOrder::Finite(o) => *o >= k,
            VanishingOrder::Infinite => true,
        }
    }
}

/// Result of comparing the two germs at a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmoothnessIndex {
    /// The germs coincide as polynomials.
    Smooth,
    /// Class C^k but not C^{k+1}.
    Index(usize),
}

/// A point where some h^i has distinct one-sided germs.
#[derive(Clone, Debug)]
pub struct CriticalPoint {
    pub location: AlgReal,
    pub degree: usize,
    pub index: usize,
}

/// The tuple (g, χ(l), polarization type, {h^i}) plus jump-locus metadata.
#[derive(Clone, Debug)]
pub struct RankFamily {
    g: usize,
    chi_l: u64,
    pol_type: Option<Vec<u64>>,
    functions: Vec<PiecewisePoly>,
    complete: bool,
    jump_data: BTreeMap<(usize, Rat), usize>,
}

impl RankFamily {
    pub fn new(
        g: usize,
        chi_l: u64,
        pol_type: Option<Vec<u64>>,
        functions: Vec<PiecewisePoly>,
        jump_data: BTreeMap<(usize, Rat), usize>,
    ) -> Result<Self> {
        if chi_l == 0 {
            return Err(Error::BadParameters("chi_l must be positive".into()));
        }
        if functions.len() != g + 1 {
            return Err(Error::BadParameters(format!(
                "need {} functions for g = {g}, got {}",
                g + 1,
                functions.len()
            )));
        }
        if let Some(d) = &pol_type {
            if d.len() != g {
                return Err(Error::BadParameters("polarization type needs g entries".into()));
            }
            for w in d.windows(2) {
                if w[1] % w[0] != 0 {
                    return Err(Error::BadParameters(
                        "polarization type must be a divisibility chain".into(),
                    ));
                }
            }
            let prod: u64 = d.iter().product();
            if prod != chi_l {
                return Err(Error::BadParameters(
                    "product of the polarization type must equal chi_l".into(),
                ));
            }
        }
        for f in &functions {
            if f.max_known_degree() > g {
                return Err(Error::DegreeTooHigh {
                    got: f.max_known_degree(),
                    bound: g,
                });
            }
        }
        let complete = functions.iter().all(|f| f.is_fully_known());
        Ok(RankFamily {
            g,
            chi_l,
            pol_type,
            functions,
            complete,
            jump_data,
        })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn chi_l(&self) -> u64 {
        self.chi_l
    }

    pub fn pol_type(&self) -> Option<&[u64]> {
        self.pol_type.as_deref()
    }

    pub fn complete(&self) -> bool {
        self.complete
    }

    pub fn function(&self, i: usize) -> &PiecewisePoly {
        &self.functions[i]
    }

    pub fn functions(&self) -> &[PiecewisePoly] {
        &self.functions
    }

    pub fn jump_data(&self) -> &BTreeMap<(usize, Rat), usize> {
        &self.jump_data
    }

    pub fn with_jump_data(mut self, jump_data: BTreeMap<(usize, Rat), usize>) -> Self {
        self.jump_data = jump_data;
        self
    }

    fn check_degree(&self, i: usize) -> Result<()> {
        if i > self.g {
            return Err(Error::InvalidInput(format!(
                "degree {i} out of range 0..={}",
                self.g
            )));
        }
        Ok(())
    }

    /// Exact value h^i(x·l).
    pub fn evaluate(&self, i: usize, x: &Rat) -> Result<Rat> {
        self.check_degree(i)?;
        self.functions[i]
            .value_at(x)
            .map_err(|e| annotate_unknown(e, i))
    }

    /// One pass/fail entry per (i, breakpoint with two known neighbours).
    pub fn continuity_report(&self) -> Report {
        let mut report = Report::new();
        for (i, f) in self.functions.iter().enumerate() {
            let failures = f.continuity_failures();
            for (k, bp) in f.breakpoints().iter().enumerate() {
                let both_known = f.segments()[k].known().is_some()
                    && f.segments()[k + 1].known().is_some();
                if !both_known {
                    continue;
                }
                let detail = format!("h^{i} at {}", bp.describe());
                if failures.contains(&k) {
                    report.fail("continuity", &format!("{detail}: one-sided limits differ"));
                } else {
                    report.pass("continuity", &detail);
                }
            }
        }
        report
    }

    /// Order of vanishing of the one-sided germ of h^i at `x0`.
    pub fn vanishing_order(&self, i: usize, x0: &Rat, side: Side) -> Result<VanishingOrder> {
        self.check_degree(i)?;
        let germ = match side {
            Side::Left => self.functions[i].left_germ(x0),
            Side::Right => self.functions[i].right_germ(x0),
        };
        match germ {
            Segment::Unknown => Err(Error::UnknownRegion(format!(
                "h^{i} germ at x = {}",
                format_rat(x0)
            ))),
            Segment::Known(p) => Ok(match p.ord_at(x0) {
                None => VanishingOrder::Infinite,
                Some(o) => VanishingOrder::Finite(o),
            }),
        }
    }

    /// Vanishing order of (right germ − left germ) at `x0`, minus one.
    pub fn smoothness_index(&self, i: usize, x0: &Rat) -> Result<SmoothnessIndex> {
        self.check_degree(i)?;
        let left = self.functions[i].left_germ(x0).known().ok_or_else(|| {
            Error::UnknownRegion(format!("left germ of h^{i} at {}", format_rat(x0)))
        })?;
        let right = self.functions[i].right_germ(x0).known().ok_or_else(|| {
            Error::UnknownRegion(format!("right germ of h^{i} at {}", format_rat(x0)))
        })?;
        let diff = &(right - left);
        match diff.ord_at(x0) {
            None => Ok(SmoothnessIndex::Smooth),
            Some(0) => Err(Error::InvalidInput(format!(
                "germs of h^{i} disagree in value at {}; the family is discontinuous",
                format_rat(x0)
            ))),
            Some(o) => Ok(SmoothnessIndex::Index(o - 1)),
        }
    }

    /// All breakpoints where some h^i has distinct known germs, with the
    /// per-(i, location) index. Locations with an unknown germ on either
    /// side are skipped.
    pub fn critical_points(&self) -> Vec<CriticalPoint> {
        let mut out = Vec::new();
        for (i, f) in self.functions.iter().enumerate() {
            for (k, bp) in f.breakpoints().iter().enumerate() {
                let (l, r) = (f.segments()[k].known(), f.segments()[k + 1].known());
                let (Some(l), Some(r)) = (l, r) else { continue };
                let diff = r - l;
                if diff.is_zero() {
                    continue;
                }
                let ord = bp
                    .vanishing_order_of(&diff)
                    .expect("difference is nonzero");
                out.push(CriticalPoint {
                    location: bp.clone(),
                    degree: i,
                    index: ord.saturating_sub(1),
                });
            }
        }
        out.sort_by(|a, b| {
            a.location
                .compare(&b.location)
                .then(a.degree.cmp(&b.degree))
        });
        out
    }

    /// The alternating sum Σ (−1)^i h^i, which must be one and the same
    /// polynomial on every interval of a complete family.
    pub fn euler_poly(&self) -> Result<Poly> {
        if !self.complete {
            return Err(Error::IncompleteFamily);
        }
        let cells = self.refined_cells();
        let mut result: Option<(Poly, String)> = None;
        for (cell_desc, segs) in cells {
            let mut sum = Poly::zero();
            for (i, p) in segs.iter().enumerate() {
                let signed = if i % 2 == 0 { p.clone() } else { -p };
                sum = &sum + &signed;
            }
            match &result {
                None => result = Some((sum, cell_desc)),
                Some((expected, first_desc)) => {
                    if *expected != sum {
                        return Err(Error::EulerMismatch(format!(
                            "{expected} on {first_desc} vs {sum} on {cell_desc}"
                        )));
                    }
                }
            }
        }
        Ok(result.expect("at least one cell").0)
    }

    // Common refinement of all breakpoints: for every open cell, the list of
    // the g+1 segment polynomials valid there. Requires a complete family.
    fn refined_cells(&self) -> Vec<(String, Vec<Poly>)> {
        let mut union: Vec<AlgReal> = Vec::new();
        for f in &self.functions {
            for bp in f.breakpoints() {
                let pos = union.binary_search_by(|u| u.compare(bp));
                if let Err(idx) = pos {
                    union.insert(idx, bp.clone());
                }
            }
        }
        // per function: which union index each of its breakpoints sits at
        let mut seg_of_cell: Vec<Vec<usize>> = Vec::new();
        for f in &self.functions {
            let positions: Vec<usize> = f
                .breakpoints()
                .iter()
                .map(|bp| {
                    union
                        .binary_search_by(|u| u.compare(bp))
                        .expect("breakpoint present in union")
                })
                .collect();
            // cell j spans (union[j-1], union[j]); the function's segment
            // there is the number of its own breakpoints at positions < j
            let mut per_cell = Vec::with_capacity(union.len() + 1);
            for j in 0..=union.len() {
                let s = positions.iter().filter(|&&p| p < j).count();
                per_cell.push(s);
            }
            seg_of_cell.push(per_cell);
        }
        let mut cells = Vec::new();
        for j in 0..=union.len() {
            let lo = if j == 0 {
                "-inf".to_string()
            } else {
                union[j - 1].describe()
            };
            let hi = if j == union.len() {
                "inf".to_string()
            } else {
                union[j].describe()
            };
            let segs: Vec<Poly> = self
                .functions
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    f.segments()[seg_of_cell[i][j]]
                        .known()
                        .expect("complete family")
                        .clone()
                })
                .collect();
            cells.push((format!("({lo}, {hi})"), segs));
        }
        cells
    }

    /// The family of μ_b^* F ⊗ L^{ab}: f′_i(z) = b^{2g} f_i(a/b + z/b²),
    /// with breakpoints mapped by β ↦ b²β − ab. `b` must be positive and the
    /// fraction a/b already in lowest terms; b itself enters the formula, so
    /// the fraction is never reduced here.
    pub fn recenter(&self, a: i64, b: u64) -> RankFamily {
        assert!(b > 0, "recenter denominator must be positive");
        let center = Rat::new(BigInt::from(a), BigInt::from(b));
        let b_sq = rat_int(b as i64) * rat_int(b as i64);
        let inv_b_sq = Rat::one() / &b_sq;
        let scale = b_sq.pow(self.g as i32);
        let shift = -(rat_int(a) * rat_int(b as i64));

        let map_poly = |p: &Poly| {
            p.taylor_shift(&center)
                .scale_var(&inv_b_sq)
                .scale(&scale)
        };
        let functions = self
            .functions
            .iter()
            .map(|f| {
                let breakpoints = f
                    .breakpoints()
                    .iter()
                    .map(|bp| bp.affine(&b_sq, &shift))
                    .collect();
                let segments = f
                    .segments()
                    .iter()
                    .map(|s| match s {
                        Segment::Unknown => Segment::Unknown,
                        Segment::Known(p) => Segment::Known(map_poly(p)),
                    })
                    .collect();
                PiecewisePoly::new(breakpoints, segments).expect("monotone affine image")
            })
            .collect();
        let jump_data = self
            .jump_data
            .iter()
            .map(|((i, x0), codim)| ((*i, x0 * &b_sq + &shift), *codim))
            .collect();
        RankFamily {
            g: self.g,
            chi_l: self.chi_l,
            pol_type: self.pol_type.clone(),
            functions,
            complete: self.complete,
            jump_data,
        }
    }

    /// Coefficient integrality: g!·c_k ∈ ℤ for every coefficient of every
    /// known segment; with a polarization type (d_1, …, d_g) additionally
    /// k!·c_k ∈ d_1⋯d_k·ℤ.
    pub fn integrality_report(&self) -> Report {
        let mut report = Report::new();
        let g_fact = factorial(self.g);
        for (i, f) in self.functions.iter().enumerate() {
            for (s, seg) in f.segments().iter().enumerate() {
                let Some(p) = seg.known() else { continue };
                for (k, c) in p.coeffs().iter().enumerate() {
                    let scaled = c * Rat::from_integer(g_fact.clone());
                    let what = format!("h^{i} segment {s} coefficient of x^{k}");
                    if scaled.is_integer() {
                        report.pass("integrality", &format!("{what}: g!·c ∈ Z"));
                    } else {
                        report.fail(
                            "integrality",
                            &format!("{what} = {} but g!·c ∉ Z", format_rat(c)),
                        );
                    }
                    if let Some(dtype) = &self.pol_type {
                        let d_prod: BigInt = dtype[..k.min(dtype.len())]
                            .iter()
                            .map(|d| BigInt::from(*d))
                            .product();
                        let refined = c * Rat::from_integer(factorial(k))
                            / Rat::from_integer(d_prod);
                        if refined.is_integer() {
                            report.pass("integrality-refined", &format!("{what}: k!·c ∈ d_1⋯d_k·Z"));
                        } else {
                            report.fail(
                                "integrality-refined",
                                &format!("{what} = {} violates the type bound", format_rat(c)),
                            );
                        }
                    }
                }
            }
        }
        report
    }

    /// For coprime b: v = b^{2g}·h^i(a/b) must be an integer divisible by
    /// b^g; returns v / b^g.
    pub fn divisibility_quotient(&self, i: usize, a: i64, b: u64) -> Result<BigInt> {
        self.check_degree(i)?;
        if b == 0 {
            return Err(Error::BadParameters("b must be positive".into()));
        }
        let g_fact = factorial(self.g);
        let b_big = BigInt::from(b);
        if b_big.gcd(&g_fact) != BigInt::one() {
            return Err(Error::NotCoprime {
                b: b.to_string(),
                g: self.g,
            });
        }
        let x = Rat::new(BigInt::from(a), BigInt::from(b));
        let value = self.evaluate(i, &x)?;
        let v = value * Rat::from_integer(b_big.pow(2 * self.g as u32));
        if !v.is_integer() {
            return Err(Error::DivisibilityFailure(format!(
                "b^(2g)·h^{i}({}) = {} is not an integer",
                format_rat(&x),
                format_rat(&v)
            )));
        }
        let v = v.to_integer();
        let b_pow_g = BigInt::from(b).pow(self.g as u32);
        let (q, r) = v.div_rem(&b_pow_g);
        if !r.is_zero() {
            return Err(Error::DivisibilityFailure(format!(
                "{v} is not divisible by b^g = {b_pow_g}"
            )));
        }
        Ok(q)
    }

    /// Serre duality: h^i_F(x) = h^{g−i}_{F^∨}(−x) at every sample.
    pub fn serre_dual_report(&self, dual: &RankFamily, samples: &[Rat]) -> Report {
        let mut report = Report::new();
        if self.g != dual.g {
            report.fail("serre-duality", "families have different dimensions");
            return report;
        }
        for x in samples {
            for i in 0..=self.g {
                let what = format!("i = {i}, x = {}", format_rat(x));
                let lhs = self.evaluate(i, x);
                let rhs = dual.evaluate(self.g - i, &-x);
                match (lhs, rhs) {
                    (Ok(l), Ok(r)) if l == r => report.pass("serre-duality", &what),
                    (Ok(l), Ok(r)) => report.fail(
                        "serre-duality",
                        &format!("{what}: {} vs {}", format_rat(&l), format_rat(&r)),
                    ),
                    (Err(e), _) | (_, Err(e)) => {
                        report.fail("serre-duality", &format!("{what}: {e}"))
                    }
                }
            }
        }
        report
    }
}

fn annotate_unknown(e: Error, i: usize) -> Error {
    match e {
        Error::UnknownRegion(msg) => Error::UnknownRegion(format!("h^{i}, {msg}")),
        other => other,
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::ModelSpec;
    use crate::rat::rat;

    fn gv42() -> RankFamily {
        ModelSpec::GvSubscheme { g: 4, d: 2 }.build().unwrap().family
    }

    fn abel_jacobi(g: usize) -> RankFamily {
        ModelSpec::AbelJacobi { g }.build().unwrap().family
    }

    #[test]
    fn evaluate_gv_examples() {
        let fam = gv42();
        assert_eq!(fam.evaluate(0, &rat(1, 2)).unwrap(), rat(1, 16));
        assert_eq!(fam.evaluate(0, &rat_int(2)).unwrap(), rat_int(11));
        assert_eq!(fam.evaluate(1, &rat_int(3)).unwrap(), rat_int(0));
        // h^2 on (0,1]: χ - x^4
        assert_eq!(fam.evaluate(2, &rat(1, 2)).unwrap(), rat(7, 16));
        assert!(matches!(
            fam.evaluate(2, &rat_int(-1)),
            Err(Error::UnknownRegion(_))
        ));
    }

    #[test]
    fn vanishing_orders_for_gv() {
        let fam = gv42();
        assert_eq!(
            fam.vanishing_order(2, &rat_int(1), Side::Left).unwrap(),
            VanishingOrder::Finite(3)
        );
        assert_eq!(
            fam.vanishing_order(1, &rat_int(1), Side::Left).unwrap(),
            VanishingOrder::Infinite
        );
        let aj = abel_jacobi(5);
        assert_eq!(
            aj.vanishing_order(1, &rat_int(0), Side::Left).unwrap(),
            VanishingOrder::Finite(1)
        );
    }

    #[test]
    fn smoothness_indices_for_gv() {
        let fam = gv42();
        assert_eq!(
            fam.smoothness_index(0, &rat_int(0)).unwrap(),
            SmoothnessIndex::Index(3)
        );
        assert_eq!(
            fam.smoothness_index(0, &rat_int(1)).unwrap(),
            SmoothnessIndex::Index(2)
        );
        // away from breakpoints both germs are the same segment
        assert_eq!(
            fam.smoothness_index(0, &rat(1, 2)).unwrap(),
            SmoothnessIndex::Smooth
        );
    }

    #[test]
    fn critical_points_of_gv_and_zero_family() {
        let fam = gv42();
        let cps = fam.critical_points();
        let listed: Vec<(String, usize, usize)> = cps
            .iter()
            .map(|c| (c.location.describe(), c.degree, c.index))
            .collect();
        assert_eq!(
            listed,
            vec![
                ("0".to_string(), 0, 3),
                ("1".to_string(), 0, 2),
                ("1".to_string(), 2, 2),
            ]
        );
        let zero = RankFamily::new(
            2,
            1,
            None,
            vec![PiecewisePoly::zero(), PiecewisePoly::zero(), PiecewisePoly::zero()],
            BTreeMap::new(),
        )
        .unwrap();
        assert!(zero.critical_points().is_empty());
    }

    #[test]
    fn euler_poly_abel_jacobi() {
        let aj = abel_jacobi(5);
        assert_eq!(aj.euler_poly().unwrap(), Poly::from_i64(&[0, 5]));
        assert!(matches!(gv42().euler_poly(), Err(Error::IncompleteFamily)));
    }

    #[test]
    fn recenter_matches_worked_values() {
        let fam = gv42();
        let re = fam.recenter(1, 2);
        // f'_0(0) = 2^8 · (1/2)^4 = 16
        assert_eq!(re.evaluate(0, &rat_int(0)).unwrap(), rat_int(16));
        // breakpoint 1 maps to 4·(1 − 1/2) = 2
        let h0 = re.function(0);
        assert_eq!(h0.breakpoints().len(), 2);
        assert_eq!(h0.breakpoints()[1].as_rational(), Some(&rat_int(2)));
        // identity recentering
        let id = fam.recenter(0, 1);
        assert_eq!(id.evaluate(0, &rat(3, 2)).unwrap(), fam.evaluate(0, &rat(3, 2)).unwrap());
    }

    #[test]
    fn integrality_phrases_failures() {
        let fam = gv42();
        assert!(fam.integrality_report().all_passed());
        let bad = RankFamily::new(
            2,
            1,
            None,
            vec![
                PiecewisePoly::constant(Poly::new(vec![rat(1, 7)])),
                PiecewisePoly::zero(),
                PiecewisePoly::zero(),
            ],
            BTreeMap::new(),
        )
        .unwrap();
        assert!(!bad.integrality_report().all_passed());
    }

    #[test]
    fn divisibility_quotients() {
        let fam = gv42();
        // 5^8 · (3/5)^4 = 50625, quotient 81
        assert_eq!(
            fam.divisibility_quotient(0, 3, 5).unwrap(),
            BigInt::from(81)
        );
        assert_eq!(
            fam.divisibility_quotient(1, 3, 5).unwrap(),
            BigInt::from(0)
        );
        let aj = abel_jacobi(5);
        let q = aj.divisibility_quotient(0, 7, 11).unwrap();
        assert_eq!(q, BigInt::from(35) * BigInt::from(11u32).pow(4));
        assert!(matches!(
            fam.divisibility_quotient(0, 1, 2),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn recenter_representations_differ_by_the_twist_scaling() {
        // the (2,4) and (1,2) centerings represent the same Q-twist:
        // f'_{2,4}(z) = 2^{2g} · f'_{1,2}(z/4)
        let fam = abel_jacobi(2);
        let a = fam.recenter(2, 4);
        let b = fam.recenter(1, 2);
        let factor = rat_int(16); // 2^(2g), g = 2
        for z in [rat_int(0), rat(1, 3), rat_int(-2), rat_int(8)] {
            let quarter = &z / rat_int(4);
            for i in 0..=2 {
                assert_eq!(
                    a.evaluate(i, &z).unwrap(),
                    b.evaluate(i, &quarter).unwrap() * &factor
                );
            }
        }
    }
}
