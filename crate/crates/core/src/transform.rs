//! The numerical shadow of the Fourier–Mukai calculus: the coefficientwise
//! inversion formulas turning Hilbert polynomials of transform sheaves into
//! one-sided rank-function germs, and the Möbius change of variables relating
//! ideal-of-a-point functions to evaluation-bundle functions.

use std::collections::BTreeMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::family::RankFamily;
use crate::piecewise::{PiecewisePoly, Segment};
use crate::poly::Poly;
use crate::rat::{rat_int, Rat};

/// Hilbert-polynomial data attached to a point: for each degree `i`, the
/// polynomial driving the left germ (`minus`) and the right germ (`plus`).
/// Missing entries are zero.
#[derive(Clone, Debug, Default)]
pub struct TransformGerm {
    pub g: usize,
    pub chi_l: u64,
    pub minus: BTreeMap<usize, Poly>,
    pub plus: BTreeMap<usize, Poly>,
}

impl TransformGerm {
    pub fn validate(&self) -> Result<()> {
        if self.chi_l == 0 {
            return Err(Error::BadParameters("chi_l must be positive".into()));
        }
        for (i, q) in self.minus.iter().chain(self.plus.iter()) {
            if *i > self.g {
                return Err(Error::BadParameters(format!(
                    "entry for i = {i} outside 0..={}",
                    self.g
                )));
            }
            if q.degree().unwrap_or(0) > self.g {
                return Err(Error::DegreeTooHigh {
                    got: q.degree().unwrap_or(0),
                    bound: self.g,
                });
            }
        }
        let zero = Poly::zero();
        for i in 0..=self.g {
            let qm = self.minus.get(&i).unwrap_or(&zero);
            let qp = self.plus.get(&i).unwrap_or(&zero);
            if qm.coeff(self.g) != qp.coeff(self.g) {
                return Err(Error::LeadingMismatch { i });
            }
        }
        Ok(())
    }
}

/// Left-germ inversion: P(x) = ((−x)^g / chi) · Q(−1/x), i.e. coefficientwise
/// p_{g−j} = (−1)^{g+j} q_j / chi.
pub fn invert_neg(q: &Poly, g: usize, chi: u64) -> Result<Poly> {
    check_inputs(q, g, chi)?;
    let chi_rat = rat_int(chi as i64);
    let mut coeffs = vec![Rat::from_integer(0.into()); g + 1];
    for j in 0..=g {
        let sign = if (g + j) % 2 == 0 { Rat::one() } else { -Rat::one() };
        coeffs[g - j] = q.coeff(j) * sign / &chi_rat;
    }
    Ok(Poly::new(coeffs))
}

/// Right-germ inversion: P(x) = (x^g / chi) · Q(1/x), i.e. coefficientwise
/// p_{g−j} = q_j / chi.
pub fn invert_pos(q: &Poly, g: usize, chi: u64) -> Result<Poly> {
    check_inputs(q, g, chi)?;
    let chi_rat = rat_int(chi as i64);
    let mut coeffs = vec![Rat::from_integer(0.into()); g + 1];
    for j in 0..=g {
        coeffs[g - j] = q.coeff(j) / &chi_rat;
    }
    Ok(Poly::new(coeffs))
}

fn check_inputs(q: &Poly, g: usize, chi: u64) -> Result<()> {
    if chi == 0 {
        return Err(Error::BadParameters("chi must be positive".into()));
    }
    if q.degree().unwrap_or(0) > g {
        return Err(Error::DegreeTooHigh {
            got: q.degree().unwrap_or(0),
            bound: g,
        });
    }
    Ok(())
}

/// Both double-inversion identities, exactly:
/// invert_neg² = ((−1)^g/chi²)·Q and invert_pos² = (1/chi²)·Q.
pub fn double_inversion_identity_check(q: &Poly, g: usize, chi: u64) -> Result<bool> {
    let chi_sq = rat_int(chi as i64) * rat_int(chi as i64);
    let neg_twice = invert_neg(&invert_neg(q, g, chi)?, g, chi)?;
    let sign = if g % 2 == 0 { Rat::one() } else { -Rat::one() };
    let expected_neg = q.scale(&(sign / &chi_sq));
    let pos_twice = invert_pos(&invert_pos(q, g, chi)?, g, chi)?;
    let expected_pos = q.scale(&(Rat::one() / &chi_sq));
    Ok(neg_twice == expected_neg && pos_twice == expected_pos)
}

/// Assembles the germ family at 0: for each i the left germ comes from the
/// minus data through `invert_neg` and the right germ from the plus data
/// through `invert_pos`. The two one-sided limits at 0 must agree (they both
/// equal the degree-g coefficient over chi).
pub fn germ_from_transform(tg: &TransformGerm) -> Result<RankFamily> {
    tg.validate()?;
    let zero = Poly::zero();
    let mut functions = Vec::with_capacity(tg.g + 1);
    for i in 0..=tg.g {
        let qm = tg.minus.get(&i).unwrap_or(&zero);
        let qp = tg.plus.get(&i).unwrap_or(&zero);
        let left = invert_neg(qm, tg.g, tg.chi_l)?;
        let right = invert_pos(qp, tg.g, tg.chi_l)?;
        functions.push(PiecewisePoly::from_rational_breaks(
            &[rat_int(0)],
            vec![Segment::Known(left), Segment::Known(right)],
        )?);
    }
    RankFamily::new(tg.g, tg.chi_l, None, functions, BTreeMap::new())
}

/// Transforms one ideal-of-a-point function, known on a sub-interval of
/// (−∞, 1), into the matching evaluation-bundle function on (−1, ∞):
/// out(x) = chi_n · (1+x)^g · in(x/(1+x)), with breakpoints mapped by
/// β ↦ β/(1−β). A breakpoint at 1 escapes to infinity and is dropped with
/// everything right of it; the region left of −1 in the output is unknown.
pub fn mobius_piecewise(f: &PiecewisePoly, g: usize, chi_n: u64) -> Result<PiecewisePoly> {
    if chi_n == 0 {
        return Err(Error::BadParameters("chi_n must be positive".into()));
    }
    let one = rat_int(1);
    let mut kept = f.breakpoints().len();
    for (k, bp) in f.breakpoints().iter().enumerate() {
        match bp.cmp_rat(&one) {
            std::cmp::Ordering::Less => {}
            std::cmp::Ordering::Equal => {
                if k + 1 != f.breakpoints().len() {
                    return Err(Error::InvalidInput(
                        "breakpoints past 1 are outside the domain of the transform".into(),
                    ));
                }
                kept = k;
            }
            std::cmp::Ordering::Greater => {
                return Err(Error::InvalidInput(
                    "breakpoints past 1 are outside the domain of the transform".into(),
                ));
            }
        }
    }
    let mut breakpoints = vec![crate::algreal::AlgReal::from_int(-1)];
    let mut segments = vec![Segment::Unknown];
    for bp in &f.breakpoints()[..kept] {
        breakpoints.push(bp.mobius_over(&one)?);
    }
    for seg in &f.segments()[..=kept] {
        segments.push(match seg {
            Segment::Unknown => Segment::Unknown,
            Segment::Known(p) => Segment::Known(mobius_poly(p, g, chi_n)?),
        });
    }
    PiecewisePoly::new(breakpoints, segments)
}

/// chi · (1+x)^g · p(x/(1+x)) = chi · Σ c_k x^k (1+x)^{g−k}.
fn mobius_poly(p: &Poly, g: usize, chi: u64) -> Result<Poly> {
    let deg = p.degree().unwrap_or(0);
    if deg > g {
        return Err(Error::DegreeOverflow { bound: g });
    }
    let one_plus = Poly::from_i64(&[1, 1]);
    let mut out = Poly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        let term = &Poly::monomial(c.clone(), k) * &one_plus.pow(g - k);
        out = &out + &term;
    }
    Ok(out.scale(&rat_int(chi as i64)))
}

/// Lifts `mobius_piecewise` to the family level for degrees 0 and 1; higher
/// degrees are not asserted by the transform and come back unknown.
pub fn mobius_ideal_to_evalbundle(fam: &RankFamily, chi_n: u64) -> Result<RankFamily> {
    let g = fam.g();
    let mut functions = Vec::with_capacity(g + 1);
    for i in 0..=g {
        if i <= 1 {
            functions.push(mobius_piecewise(fam.function(i), g, chi_n)?);
        } else {
            functions.push(PiecewisePoly::unknown());
        }
    }
    RankFamily::new(g, chi_n, None, functions, BTreeMap::new())
}
