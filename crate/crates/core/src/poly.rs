//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree order; the highest stored
//! coefficient is nonzero (the empty list is the zero polynomial).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rat::{format_rat, Rat};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    /// `c · x^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| crate::rat::rat_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero-padded past the degree.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `Q(x) = P(s·x)`.
    pub fn scale_var(&self, s: &Rat) -> Poly {
        let mut pow = Rat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let v = c * &pow;
                pow = &pow * s;
                v
            })
            .collect();
        Poly::new(coeffs)
    }

    /// `Q(y) = P(c + y)`, computed exactly via Horner in the polynomial ring.
    pub fn taylor_shift(&self, c: &Rat) -> Poly {
        let shift = Poly::new(vec![c.clone(), Rat::one()]);
        let mut acc = Poly::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &shift) + &Poly::constant(a.clone());
        }
        acc
    }

    pub fn pow(&self, n: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            quot[k] = factor.clone();
            for (j, c) in divisor.coeffs.iter().enumerate() {
                let idx = k + j;
                rem[idx] = &rem[idx] - &(c * &factor);
            }
            // leading entry is now exactly zero
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Whether `self` divides `other` exactly (the zero polynomial divides
    /// only itself).
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(l) => self.scale(&(Rat::one() / l)),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut f = a.clone();
        let mut g = b.clone();
        while !g.is_zero() {
            let r = f.rem(&g);
            f = g;
            g = r;
        }
        f.monic()
    }

    /// The monic product of the distinct irreducible factors.
    pub fn square_free_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        if self.degree() == Some(0) {
            return Poly::one();
        }
        let g = Poly::gcd(self, &self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Yun decomposition: monic pairwise-coprime square-free factors with
    /// their multiplicities, so that `P = lc · ∏ f_i^{m_i}`. Constant factors
    /// are dropped.
    pub fn square_free_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = Poly::gcd(&f, &df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut d = &c - &b.derivative();
        let mut mult = 1usize;
        loop {
            a = Poly::gcd(&b, &d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.monic(), mult));
            }
            b = b.div_rem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&a).0;
            d = &c - &b.derivative();
            mult += 1;
        }
        out
    }

    /// Order of vanishing at the rational point `x0`; `None` for the zero
    /// polynomial (which vanishes to infinite order).
    pub fn ord_at(&self, x0: &Rat) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let shifted = self.taylor_shift(x0);
        Some(
            shifted
                .coeffs
                .iter()
                .position(|c| !c.is_zero())
                .expect("nonzero polynomial has a nonzero coefficient"),
        )
    }

    /// Largest integer `B` with every real root of `self` inside `(-B, B)`
    /// (Cauchy bound, rounded up).
    pub fn root_bound(&self) -> Rat {
        let lead = match self.leading_coeff() {
            None => return Rat::one(),
            Some(l) => l.abs(),
        };
        let mut max = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len().saturating_sub(1)] {
            let q = c.abs() / &lead;
            if q > max {
                max = q;
            }
        }
        (Rat::one() + max).ceil() + Rat::one()
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::new(coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                if abs.is_integer() {
                    write!(f, "{}", abs.numer())?;
                } else {
                    write!(f, "({})", format_rat(&abs))?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn eval_examples() {
        assert_eq!(Poly::zero().eval(&rat_int(5)), rat_int(0));
        let p = Poly::from_i64(&[-2, 0, 1]); // x^2 - 2
        assert_eq!(p.eval(&rat(3, 2)), rat(1, 4));
        // 1 + 4(x-1) + 6(x-1)^2 = 6x^2 - 8x + 3 at x = 2
        let q = Poly::from_i64(&[3, -8, 6]);
        assert_eq!(q.eval(&rat_int(2)), rat_int(11));
    }

    #[test]
    fn taylor_shift_examples() {
        let p = Poly::from_i64(&[0, 0, 0, 0, 1]); // x^4
        assert_eq!(p.taylor_shift(&rat_int(1)), Poly::from_i64(&[1, 4, 6, 4, 1]));
        let q = Poly::from_i64(&[7, -3, 2, 5]);
        assert_eq!(q.taylor_shift(&rat_int(0)), q);
        let r = Poly::from_i64(&[-2, 0, 1]); // x^2 - 2 at c = 1 -> -1 + 2y + y^2
        assert_eq!(r.taylor_shift(&rat_int(1)), Poly::from_i64(&[-1, 2, 1]));
    }

    #[test]
    fn taylor_shift_round_trip() {
        let p = Poly::new(vec![rat(1, 3), rat(-2, 7), rat_int(4), rat(5, 2)]);
        let c = rat(9, 4);
        assert_eq!(p.taylor_shift(&c).taylor_shift(&(-c)), p);
    }

    #[test]
    fn division_and_gcd() {
        let p = Poly::from_i64(&[-2, 0, 1]);
        let d = Poly::from_i64(&[2, 1]); // x + 2
        let (q, r) = p.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, p);
        let a = &Poly::from_i64(&[-1, 1]) * &Poly::from_i64(&[-2, 1]);
        let b = &Poly::from_i64(&[-1, 1]) * &Poly::from_i64(&[3, 1]);
        assert_eq!(Poly::gcd(&a, &b), Poly::from_i64(&[-1, 1]));
    }

    #[test]
    fn square_free_decomposition_recovers_multiplicities() {
        // (x-1)^2 (x+3)
        let p = &Poly::from_i64(&[1, -2, 1]) * &Poly::from_i64(&[3, 1]);
        let dec = p.square_free_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (Poly::from_i64(&[3, 1]), 1));
        assert_eq!(dec[1], (Poly::from_i64(&[-1, 1]), 2));
        let sqf = &Poly::from_i64(&[-1, 1]) * &Poly::from_i64(&[3, 1]);
        assert_eq!(p.square_free_part(), sqf.monic());
    }

    #[test]
    fn ord_at_counts_trailing_zeros() {
        let p = &Poly::from_i64(&[-1, 1]).pow(3) * &Poly::from_i64(&[3, 1]);
        assert_eq!(p.ord_at(&rat_int(1)), Some(3));
        assert_eq!(p.ord_at(&rat_int(-3)), Some(1));
        assert_eq!(p.ord_at(&rat_int(0)), Some(0));
        assert_eq!(Poly::zero().ord_at(&rat_int(1)), None);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(Poly::from_i64(&[3, -8, 6]).to_string(), "6x^2 - 8x + 3");
        assert_eq!(Poly::new(vec![rat(7, 16)]).to_string(), "(7/16)");
        assert_eq!(Poly::from_i64(&[0, -1]).to_string(), "-x");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
