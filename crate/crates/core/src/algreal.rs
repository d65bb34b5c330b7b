//! Real algebraic numbers as (square-free defining polynomial, isolating
//! interval), with Sturm-sequence counting, root isolation, and exact
//! comparison by interval refinement.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{format_decimal, format_rat, rat_int, Rat};

/// A real algebraic number. Rational values are stored with a point interval
/// `[q, q]`; irrational values carry an open interval `(lo, hi)` on which the
/// square-free defining polynomial has exactly one root and does not vanish
/// at either endpoint.
#[derive(Clone, Debug)]
pub struct AlgReal {
    defining: Poly,
    lo: Rat,
    hi: Rat,
}

/// Sturm chain of `p`: remainder sequence with sign flips.
pub fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone()];
    let d = p.derivative();
    if !d.is_zero() {
        chain.push(d);
    }
    while chain.last().map(|q| q.degree().unwrap_or(0)) > Some(0) {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn sign_variations(chain: &[Poly], x: &Rat) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for q in chain {
        let v = q.eval(x);
        if v.is_zero() {
            continue;
        }
        let s = v.is_positive();
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`,
/// counted on the square-free part.
pub fn sturm_count(p: &Poly, lo: &Rat, hi: &Rat) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::InvalidInput(format!(
            "empty interval ({}, {})",
            format_rat(lo),
            format_rat(hi)
        )));
    }
    if p.eval(lo).is_zero() {
        return Err(Error::EndpointIsRoot(format_rat(lo)));
    }
    if p.eval(hi).is_zero() {
        return Err(Error::EndpointIsRoot(format_rat(hi)));
    }
    let sqf = p.square_free_part();
    let chain = sturm_chain(&sqf);
    Ok(sign_variations(&chain, lo) - sign_variations(&chain, hi))
}

// Count for an already square-free `p` with verified non-root endpoints.
fn count_sqf(chain: &[Poly], lo: &Rat, hi: &Rat) -> usize {
    sign_variations(chain, lo) - sign_variations(chain, hi)
}

impl AlgReal {
    pub fn from_rat(q: Rat) -> Self {
        let defining = Poly::new(vec![-&q, Rat::one()]);
        AlgReal {
            defining,
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn from_int(n: i64) -> Self {
        AlgReal::from_rat(rat_int(n))
    }

    /// Validates that `defining` (after square-free reduction) has exactly
    /// one root in the given interval.
    pub fn new(defining: Poly, lo: Rat, hi: Rat) -> Result<Self> {
        if defining.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sqf = defining.square_free_part();
        if lo == hi {
            if !sqf.eval(&lo).is_zero() {
                return Err(Error::InvalidInput(format!(
                    "{} is not a root of {}",
                    format_rat(&lo),
                    sqf
                )));
            }
            return Ok(AlgReal {
                defining: sqf,
                lo,
                hi,
            });
        }
        if lo > hi {
            return Err(Error::InvalidInput("interval endpoints out of order".into()));
        }
        let n = sturm_count(&sqf, &lo, &hi)?;
        if n != 1 {
            return Err(Error::InvalidInput(format!(
                "interval ({}, {}) isolates {} roots, not 1",
                format_rat(&lo),
                format_rat(&hi),
                n
            )));
        }
        Ok(AlgReal { defining: sqf, lo, hi })
    }

    pub fn defining(&self) -> &Poly {
        &self.defining
    }

    pub fn interval(&self) -> (&Rat, &Rat) {
        (&self.lo, &self.hi)
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// The exact rational value, when the interval has collapsed to a point.
    pub fn as_rational(&self) -> Option<&Rat> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    /// One bisection step; returns a new value with a halved interval (or an
    /// exact point if the midpoint hits the root).
    pub fn refined(&self) -> Self {
        if self.lo == self.hi {
            return self.clone();
        }
        let mid = (&self.lo + &self.hi) / rat_int(2);
        if self.defining.eval(&mid).is_zero() {
            return AlgReal {
                defining: self.defining.clone(),
                lo: mid.clone(),
                hi: mid,
            };
        }
        let chain = sturm_chain(&self.defining);
        if count_sqf(&chain, &self.lo, &mid) == 1 {
            AlgReal {
                defining: self.defining.clone(),
                lo: self.lo.clone(),
                hi: mid,
            }
        } else {
            AlgReal {
                defining: self.defining.clone(),
                lo: mid,
                hi: self.hi.clone(),
            }
        }
    }

    /// Refines until the interval is narrower than `width`.
    pub fn refined_below(&self, width: &Rat) -> Self {
        let mut cur = self.clone();
        while &cur.width() >= width {
            cur = cur.refined();
        }
        cur
    }

    /// Exact comparison against a rational.
    pub fn cmp_rat(&self, q: &Rat) -> Ordering {
        if let Some(v) = self.as_rational() {
            return v.cmp(q);
        }
        if q <= &self.lo {
            return Ordering::Greater;
        }
        if q >= &self.hi {
            return Ordering::Less;
        }
        if self.defining.eval(q).is_zero() {
            return Ordering::Equal;
        }
        let chain = sturm_chain(&self.defining);
        if count_sqf(&chain, &self.lo, q) == 1 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Exact trichotomy between two algebraic numbers.
    pub fn compare(&self, other: &AlgReal) -> Ordering {
        if let Some(q) = other.as_rational() {
            return self.cmp_rat(q);
        }
        if let Some(q) = self.as_rational() {
            return other.cmp_rat(q).reverse();
        }
        let mut a = self.clone();
        let mut b = other.clone();
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        // Overlapping intervals: decide equality through a common factor.
        let g = Poly::gcd(&a.defining, &b.defining);
        if g.degree().unwrap_or(0) >= 1 {
            let lo = a.lo.clone().max(b.lo.clone());
            let hi = a.hi.clone().min(b.hi.clone());
            // Overlap endpoints are endpoints of one of the two isolating
            // intervals, so g (a common divisor) cannot vanish there.
            if lo < hi && sturm_count(&g, &lo, &hi).unwrap_or(0) == 1 {
                return Ordering::Equal;
            }
        }
        // Distinct values: refinement separates them in finitely many steps.
        loop {
            a = a.refined();
            b = b.refined();
            match (a.as_rational(), b.as_rational()) {
                (Some(p), Some(q)) => return p.cmp(q),
                (Some(p), None) => return b.cmp_rat(p).reverse(),
                (None, Some(q)) => return a.cmp_rat(q),
                (None, None) => {
                    if a.hi <= b.lo {
                        return Ordering::Less;
                    }
                    if b.hi <= a.lo {
                        return Ordering::Greater;
                    }
                }
            }
        }
    }

    /// Whether `q` vanishes at this number. The zero polynomial vanishes
    /// everywhere.
    pub fn is_root_of(&self, q: &Poly) -> bool {
        if q.is_zero() {
            return true;
        }
        if let Some(v) = self.as_rational() {
            return q.eval(v).is_zero();
        }
        let g = Poly::gcd(&self.defining, q);
        if g.degree().unwrap_or(0) == 0 {
            return false;
        }
        // g divides the defining polynomial, so it has at most (and here
        // exactly) our root inside the isolating interval, and cannot vanish
        // at the endpoints.
        sturm_count(&g, &self.lo, &self.hi).unwrap_or(0) == 1
    }

    /// Order of vanishing of `q` at this number; `None` when `q` is the zero
    /// polynomial.
    pub fn vanishing_order_of(&self, q: &Poly) -> Option<usize> {
        if q.is_zero() {
            return None;
        }
        let mut d = q.clone();
        let mut ord = 0usize;
        while !d.is_zero() && self.is_root_of(&d) {
            ord += 1;
            d = d.derivative();
        }
        Some(ord)
    }

    /// The value `s·x + t` for `s ≠ 0`.
    pub fn affine(&self, s: &Rat, t: &Rat) -> AlgReal {
        assert!(!s.is_zero(), "degenerate affine map");
        if let Some(v) = self.as_rational() {
            return AlgReal::from_rat(v * s + t);
        }
        // substitute x = (y - t)/s into the defining polynomial
        let inv = Rat::one() / s;
        let img = self
            .defining
            .scale_var(&inv)
            .taylor_shift(&-t)
            .square_free_part();
        let (mut lo, mut hi) = (&self.lo * s + t, &self.hi * s + t);
        if s.is_negative() {
            std::mem::swap(&mut lo, &mut hi);
        }
        AlgReal {
            defining: img,
            lo,
            hi,
        }
    }

    /// The value `x / (c - x)`, defined for `x < c`.
    pub fn mobius_over(&self, c: &Rat) -> Result<AlgReal> {
        if self.cmp_rat(c) != Ordering::Less {
            return Err(Error::InvalidInput(format!(
                "mobius map needs a value below {}",
                format_rat(c)
            )));
        }
        if let Some(v) = self.as_rational() {
            return Ok(AlgReal::from_rat(v / (c - v)));
        }
        let mut a = self.clone();
        while a.hi >= *c {
            a = a.refined();
        }
        // x = c·y/(1+y): clear denominators of F(c·y/(1+y)).
        let n = a.defining.degree().unwrap_or(0);
        let mut img = Poly::zero();
        let one_plus = Poly::from_i64(&[1, 1]);
        for (j, coeff) in a.defining.coeffs().iter().enumerate() {
            let term = Poly::monomial(coeff * c.pow(j as i32), j);
            img = &img + &(&term * &one_plus.pow(n - j));
        }
        let img = img.square_free_part();
        let map = |x: &Rat| x / (c - x);
        Ok(AlgReal {
            defining: img,
            lo: map(&a.lo),
            hi: map(&a.hi),
        })
    }

    /// Midpoint of the current isolating interval, for display.
    pub fn approx(&self) -> Rat {
        (&self.lo + &self.hi) / rat_int(2)
    }

    pub fn decimal(&self, digits: usize) -> String {
        let width = Rat::new(1.into(), num_bigint::BigInt::from(10u32).pow(digits as u32 + 2));
        let fine = self.refined_below(&width);
        format_decimal(&fine.approx(), digits)
    }

    /// Short exact description, e.g. `root of x^2 - 2 in (1, 3/2)`.
    pub fn describe(&self) -> String {
        match self.as_rational() {
            Some(v) => format_rat(v),
            None => format!(
                "root of {} in ({}, {})",
                self.defining,
                format_rat(&self.lo),
                format_rat(&self.hi)
            ),
        }
    }
}

impl PartialEq for AlgReal {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for AlgReal {}

impl PartialOrd for AlgReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.compare(other))
    }
}

impl Ord for AlgReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl std::fmt::Display for AlgReal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.as_rational() {
            Some(v) => write!(f, "{}", format_rat(v)),
            None => write!(f, "{}", self.decimal(6)),
        }
    }
}

/// All distinct real roots of `p` with multiplicities, sorted descending and
/// carrying pairwise disjoint isolating intervals.
pub fn isolate_real_roots(p: &Poly) -> Result<Vec<(AlgReal, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots: Vec<(AlgReal, usize)> = Vec::new();
    for (factor, mult) in p.square_free_decomposition() {
        for root in isolate_sqf(&factor) {
            roots.push((root, mult));
        }
    }
    // descending, mirroring the λ_1 > λ_2 > ⋯ indexing
    roots.sort_by(|a, b| b.0.compare(&a.0));
    // force disjoint intervals between (descending) neighbours
    for k in 1..roots.len() {
        let (left, right) = roots.split_at_mut(k);
        let hi_root = &mut left[k - 1].0; // larger value
        let lo_root = &mut right[0].0;
        while lo_root.hi > hi_root.lo {
            *hi_root = hi_root.refined();
            *lo_root = lo_root.refined();
        }
    }
    Ok(roots)
}

// Root isolation for a square-free polynomial by Sturm bisection.
fn isolate_sqf(p: &Poly) -> Vec<AlgReal> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    if p.degree() == Some(1) {
        let root = -(&p.coeff(0) / &p.coeff(1));
        out.push(AlgReal::from_rat(root));
        return out;
    }
    let bound = p.root_bound();
    let chain = sturm_chain(p);
    let mut stack = vec![(-&bound, bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        match count_sqf(&chain, &lo, &hi) {
            0 => {}
            1 => out.push(AlgReal {
                defining: p.monic(),
                lo,
                hi,
            }),
            _ => {
                let mid = (&lo + &hi) / rat_int(2);
                if p.eval(&mid).is_zero() {
                    out.push(AlgReal {
                        defining: p.monic(),
                        lo: mid.clone(),
                        hi: mid.clone(),
                    });
                    // carve out a root-free collar around the exact root
                    let mut w = (&hi - &lo) / rat_int(4);
                    loop {
                        let (l, r) = (&mid - &w, &mid + &w);
                        if !p.eval(&l).is_zero()
                            && !p.eval(&r).is_zero()
                            && count_sqf(&chain, &l, &r) == 1
                        {
                            stack.push((lo, l));
                            stack.push((r, hi));
                            break;
                        }
                        w = w / rat_int(2);
                    }
                } else {
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
    }
    out
}

/// True when the real roots of `p`, counted with multiplicity, exhaust its
/// degree.
pub fn is_real_rooted(p: &Poly) -> Result<bool> {
    let roots = isolate_real_roots(p)?;
    let total: usize = roots.iter().map(|(_, m)| m).sum();
    Ok(total == p.degree().expect("nonzero polynomial"))
}

/// A rational strictly between two algebraic numbers (`a < b` required).
pub fn rational_between(a: &AlgReal, b: &AlgReal) -> Rat {
    debug_assert_eq!(a.compare(b), Ordering::Less);
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        if a.hi < b.lo {
            return (&a.hi + &b.lo) / rat_int(2);
        }
        a = a.refined();
        b = b.refined();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn sqrt2() -> AlgReal {
        AlgReal::new(Poly::from_i64(&[-2, 0, 1]), rat_int(1), rat_int(2)).unwrap()
    }

    #[test]
    fn sturm_count_examples() {
        let p = Poly::from_i64(&[-2, 0, 1]);
        assert_eq!(sturm_count(&p, &rat_int(0), &rat_int(2)).unwrap(), 1);
        let q = Poly::from_i64(&[1, 0, 1]);
        assert_eq!(sturm_count(&q, &rat_int(-10), &rat_int(10)).unwrap(), 0);
        let cube = Poly::from_i64(&[-1, 1]).pow(3);
        assert_eq!(sturm_count(&cube, &rat_int(0), &rat_int(2)).unwrap(), 1);
        assert_eq!(
            sturm_count(&p, &rat_int(0), &rat_int(0)).unwrap_err(),
            Error::InvalidInput("empty interval (0, 0)".into())
        );
        assert!(matches!(
            sturm_count(&Poly::from_i64(&[0, 1]), &rat_int(0), &rat_int(1)),
            Err(Error::EndpointIsRoot(_))
        ));
    }

    #[test]
    fn isolate_sqrt2() {
        let p = Poly::from_i64(&[-2, 0, 1]);
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].1, 1);
        assert_eq!(roots[0].0.cmp_rat(&rat_int(1)), Ordering::Greater);
        assert_eq!(roots[0].0.cmp_rat(&rat_int(2)), Ordering::Less);
        assert_eq!(roots[1].0.cmp_rat(&rat_int(-1)), Ordering::Less);
        // descending order
        assert_eq!(roots[0].0.compare(&roots[1].0), Ordering::Greater);
    }

    #[test]
    fn isolate_with_multiplicity_and_no_real_roots() {
        let p = Poly::from_i64(&[1, -2, 1]); // (x-1)^2
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].0.as_rational(), Some(&rat_int(1)));
        assert_eq!(roots[0].1, 2);
        assert!(isolate_real_roots(&Poly::from_i64(&[1, 0, 1]))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn real_rootedness() {
        assert!(is_real_rooted(&Poly::from_i64(&[-2, 0, 1])).unwrap());
        assert!(!is_real_rooted(&Poly::from_i64(&[1, 0, 1])).unwrap());
        let p = &Poly::from_i64(&[1, -2, 1]) * &Poly::from_i64(&[3, 1]);
        assert!(is_real_rooted(&p).unwrap());
    }

    #[test]
    fn compare_examples() {
        let r = sqrt2();
        assert_eq!(r.cmp_rat(&rat(3, 2)), Ordering::Less);
        let other = AlgReal::new(Poly::from_i64(&[-2, 0, 1]), rat(7, 5), rat(3, 2)).unwrap();
        assert_eq!(r.compare(&other), Ordering::Equal);
        let neg = AlgReal::new(Poly::from_i64(&[-2, 0, 1]), rat_int(-2), rat_int(-1)).unwrap();
        assert_eq!(neg.cmp_rat(&rat_int(0)), Ordering::Less);
        assert_eq!(neg.compare(&r), Ordering::Less);
    }

    #[test]
    fn equal_roots_from_different_polynomials() {
        // √2 as a root of (x^2-2)(x-5) vs of x^2-2
        let fat = &Poly::from_i64(&[-2, 0, 1]) * &Poly::from_i64(&[-5, 1]);
        let a = AlgReal::new(fat, rat_int(1), rat_int(2)).unwrap();
        assert_eq!(a.compare(&sqrt2()), Ordering::Equal);
    }

    #[test]
    fn refinement_shrinks_to_any_width() {
        let r = sqrt2().refined_below(&Rat::new(1.into(), 1_000_000_000.into()));
        assert!(r.width() < rat(1, 1_000_000_000));
        assert_eq!(r.cmp_rat(&rat(141421356, 100000000)), Ordering::Greater);
        assert_eq!(r.cmp_rat(&rat(141421357, 100000000)), Ordering::Less);
    }

    #[test]
    fn affine_and_mobius_images() {
        // 4(√2 - 1/2) = 4√2 - 2, a root of x^2 + 4x - 28... check numerically
        let img = sqrt2().affine(&rat_int(4), &rat_int(-2));
        assert_eq!(img.cmp_rat(&rat(36, 10)), Ordering::Greater);
        assert_eq!(img.cmp_rat(&rat(37, 10)), Ordering::Less);
        // β/(1-β) for β = 1/2 is 1
        let half = AlgReal::from_rat(rat(1, 2));
        assert_eq!(
            half.mobius_over(&rat_int(1)).unwrap().as_rational(),
            Some(&rat_int(1))
        );
        // √2/(3-√2) ≈ 0.8918
        let s = sqrt2().mobius_over(&rat_int(3)).unwrap();
        assert_eq!(s.cmp_rat(&rat(89, 100)), Ordering::Greater);
        assert_eq!(s.cmp_rat(&rat(90, 100)), Ordering::Less);
    }

    #[test]
    fn vanishing_order_at_algebraic_points() {
        let r = sqrt2();
        let p = Poly::from_i64(&[-2, 0, 1]);
        assert_eq!(r.vanishing_order_of(&p), Some(1));
        assert_eq!(r.vanishing_order_of(&p.pow(3)), Some(3));
        assert_eq!(r.vanishing_order_of(&Poly::from_i64(&[1, 1])), Some(0));
        assert_eq!(r.vanishing_order_of(&Poly::zero()), None);
    }

    #[test]
    fn rational_between_separated_roots() {
        let roots = isolate_real_roots(&Poly::from_i64(&[-2, 0, 1])).unwrap();
        let mid = rational_between(&roots[1].0, &roots[0].0);
        assert_eq!(roots[0].0.cmp_rat(&mid), Ordering::Greater);
        assert_eq!(roots[1].0.cmp_rat(&mid), Ordering::Less);
    }
}
