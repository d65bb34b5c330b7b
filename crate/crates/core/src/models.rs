//! Catalog of constructible rank-function families: non-degenerate line
//! bundles via the index rule, GV-subschemes, the product B×E, Abel–Jacobi
//! curves, the theta-sum family, and raw transform germs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::algreal::{is_real_rooted, isolate_real_roots, rational_between, AlgReal};
use crate::error::{Error, Result};
use crate::family::RankFamily;
use crate::piecewise::{PiecewisePoly, Segment};
use crate::poly::Poly;
use crate::rat::{format_rat, rat_int, Rat};
use crate::transform::{germ_from_transform, TransformGerm};

/// Whether a segment's closed form is declared by the model directly or was
/// filled in from constraints (alternating-sum and duality bookkeeping).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentSource {
    Stated,
    Derived,
}

impl std::fmt::Display for SegmentSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SegmentSource::Stated => write!(f, "stated"),
            SegmentSource::Derived => write!(f, "derived"),
        }
    }
}

/// Data-source note attached to a model, surfaced in verification reports.
#[derive(Clone, Debug)]
pub struct SourceNote {
    pub what: String,
    pub source: SegmentSource,
}

impl SourceNote {
    fn new(what: impl Into<String>, source: SegmentSource) -> Self {
        SourceNote {
            what: what.into(),
            source,
        }
    }
}

/// Descriptor for a constructible model.
#[derive(Clone, Debug)]
pub enum ModelSpec {
    /// Non-degenerate line bundle with Hilbert polynomial `poly`.
    LineBundle { poly: Poly, g: usize, chi_l: u64 },
    /// Structure sheaf of a geometrically non-degenerate GV-subscheme of
    /// dimension `d` in a principally polarized abelian variety.
    GvSubscheme { g: usize, d: usize },
    /// O_B(Θ_B) ⊠ O_E on a product B×E.
    ProductBE { g: usize },
    /// Abel–Jacobi pushforward i_*O_C((g−1)p) inside a Jacobian.
    AbelJacobi { g: usize },
    /// O_A ⊕ O_Θ(Θ) on a principally polarized abelian variety.
    ThetaSum { g: usize },
    /// Raw transform-germ data.
    Germ { germ: TransformGerm },
}

/// A built model: the family plus its declared metadata.
#[derive(Clone, Debug)]
pub struct Model {
    pub name: String,
    pub spec: ModelSpec,
    pub family: RankFamily,
    /// Declared Hilbert polynomial, when the model states one.
    pub hilbert: Option<Poly>,
    /// h^i(O_X) documentation for GV-subschemes.
    pub hodge_numbers: Option<Vec<BigInt>>,
    /// Largest critical point flagged by construction (GV-but-not-IT(0)).
    pub flagged_max_critical: Option<Rat>,
    pub notes: Vec<SourceNote>,
}

impl ModelSpec {
    pub fn kind_name(&self) -> &'static str {
        match self {
            ModelSpec::LineBundle { .. } => "line_bundle",
            ModelSpec::GvSubscheme { .. } => "gv_subscheme",
            ModelSpec::ProductBE { .. } => "product_be",
            ModelSpec::AbelJacobi { .. } => "abel_jacobi",
            ModelSpec::ThetaSum { .. } => "theta_sum",
            ModelSpec::Germ { .. } => "germ",
        }
    }

    pub fn build(&self) -> Result<Model> {
        match self {
            ModelSpec::LineBundle { poly, g, chi_l } => build_line_bundle(poly, *g, *chi_l),
            ModelSpec::GvSubscheme { g, d } => build_gv_subscheme(*g, *d),
            ModelSpec::ProductBE { g } => build_product_be(*g),
            ModelSpec::AbelJacobi { g } => build_abel_jacobi(*g),
            ModelSpec::ThetaSum { g } => build_theta_sum(*g),
            ModelSpec::Germ { germ } => build_germ(germ),
        }
    }
}

fn principal_type(g: usize) -> Option<Vec<u64>> {
    Some(vec![1; g])
}

/// Line bundle model: breakpoints at the roots λ_1 > ⋯ > λ_k of P; on the
/// interval with index a_i = Σ_{j≤i} m_j the function h^{a_i} equals
/// (−1)^{a_i} P and all others vanish. The sign (−1)^{a_i} P > 0 is verified
/// on every open interval (one interior sample decides, since P has no roots
/// there).
pub fn build_line_bundle(poly: &Poly, g: usize, chi_l: u64) -> Result<Model> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if chi_l == 0 {
        return Err(Error::BadParameters("chi_l must be positive".into()));
    }
    let deg = poly.degree().unwrap_or(0);
    if deg > g {
        return Err(Error::DegreeTooHigh { got: deg, bound: g });
    }
    if !is_real_rooted(poly)? {
        return Err(Error::NotRealRooted);
    }
    let desc_roots = isolate_real_roots(poly)?; // descending with multiplicities
    let k = desc_roots.len();
    // paper-side index a_i for interval i = 0 (rightmost) .. k (leftmost)
    let mut index_of_interval = Vec::with_capacity(k + 1);
    let mut acc = 0usize;
    index_of_interval.push(0);
    for (_, m) in &desc_roots {
        acc += m;
        index_of_interval.push(acc);
    }
    // one interior rational per open interval, to pin the sign
    let mut samples = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let right = i.checked_sub(1).map(|j| &desc_roots[j].0);
        let left = desc_roots.get(i).map(|(r, _)| r);
        let x = match (left, right) {
            (None, None) => rat_int(0),
            (Some(l), None) => l.interval().1 + rat_int(1),
            (None, Some(r)) => r.interval().0 - rat_int(1),
            (Some(l), Some(r)) => rational_between(l, r),
        };
        samples.push(x);
    }
    for (i, x) in samples.iter().enumerate() {
        let v = poly.eval(x);
        let signed = if index_of_interval[i] % 2 == 0 { v.clone() } else { -v.clone() };
        if signed <= Rat::from_integer(0.into()) {
            return Err(Error::SignViolation {
                at: format_rat(x),
                value: format_rat(&signed),
            });
        }
    }
    // ascending breakpoints for the piecewise representation
    let asc: Vec<AlgReal> = desc_roots.iter().rev().map(|(r, _)| r.clone()).collect();
    let mut functions = Vec::with_capacity(g + 1);
    for j in 0..=g {
        let segments = (0..=k)
            .map(|s| {
                let interval = k - s; // ascending segment s is paper interval k−s
                if index_of_interval[interval] == j {
                    let p = if j % 2 == 0 { poly.clone() } else { -poly };
                    Segment::Known(p)
                } else {
                    Segment::Known(Poly::zero())
                }
            })
            .collect();
        functions.push(PiecewisePoly::new(asc.clone(), segments)?);
    }
    let family = RankFamily::new(g, chi_l, None, functions, BTreeMap::new())?;
    Ok(Model {
        name: format!("line_bundle_g{g}_{}", slug(poly)),
        spec: ModelSpec::LineBundle {
            poly: poly.clone(),
            g,
            chi_l,
        },
        family,
        hilbert: Some(poly.clone()),
        hodge_numbers: None,
        flagged_max_critical: None,
        notes: vec![SourceNote::new(
            "all pieces from the non-degenerate index rule",
            SegmentSource::Stated,
        )],
    })
}

fn slug(p: &Poly) -> String {
    let s = p.to_string();
    s.chars()
        .filter_map(|c| match c {
            ' ' => None,
            '^' => Some('p'),
            '-' => Some('m'),
            '+' => Some('a'),
            '/' => Some('d'),
            '(' | ')' => None,
            other => Some(other),
        })
        .collect()
}

/// Binomial coefficient as a rational-free integer.
fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// χ(x) = Σ_{i=0}^d binom(g,i) (x−1)^i.
pub fn gv_hilbert_poly(g: usize, d: usize) -> Poly {
    let in_y = Poly::new(
        (0..=d)
            .map(|i| Rat::from_integer(binom(g, i)))
            .collect(),
    );
    in_y.taylor_shift(&rat_int(-1))
}

/// T(y) = (−1)^{d+1} Σ_{i=d+1}^{g} binom(g,i) y^{i−d−1}, the degree-(g−d−1)
/// cofactor with h^d = (x−1)^{d+1} T(x−1) left of 1. T(0) ≠ 0 always.
pub fn gv_t_poly(g: usize, d: usize) -> Poly {
    let sign = if (d + 1) % 2 == 0 { 1 } else { -1 };
    Poly::new(
        (d + 1..=g)
            .map(|i| Rat::from_integer(binom(g, i) * BigInt::from(sign)))
            .collect(),
    )
}

/// GV-subscheme model: h⁰ = 0 / x^g / χ on (−∞,0] / [0,1] / [1,∞); on (0,1]
/// the only other nonzero function is h^d = (−1)^d (χ − x^g); everything is
/// zero right of 1 for i ≥ 1. For i ≥ 1 the region x ≤ 0 stays unknown.
pub fn build_gv_subscheme(g: usize, d: usize) -> Result<Model> {
    if g < 2 || d < 1 || d > g - 1 {
        return Err(Error::BadParameters(format!(
            "need g ≥ 2 and 1 ≤ d ≤ g−1, got (g, d) = ({g}, {d})"
        )));
    }
    let chi = gv_hilbert_poly(g, d);
    let x_pow_g = Poly::monomial(Rat::one(), g);
    let zero_one = [rat_int(0), rat_int(1)];

    let h0 = PiecewisePoly::from_rational_breaks(
        &zero_one,
        vec![
            Segment::Known(Poly::zero()),
            Segment::Known(x_pow_g.clone()),
            Segment::Known(chi.clone()),
        ],
    )?;
    let mut hd_mid = &chi - &x_pow_g;
    if d % 2 != 0 {
        hd_mid = -&hd_mid;
    }
    let hd = PiecewisePoly::from_rational_breaks(
        &zero_one,
        vec![
            Segment::Unknown,
            Segment::Known(hd_mid),
            Segment::Known(Poly::zero()),
        ],
    )?;
    let rest = PiecewisePoly::from_rational_breaks(
        &[rat_int(0)],
        vec![Segment::Unknown, Segment::Known(Poly::zero())],
    )?;
    let mut functions = Vec::with_capacity(g + 1);
    for i in 0..=g {
        if i == 0 {
            functions.push(h0.clone());
        } else if i == d {
            functions.push(hd.clone());
        } else {
            functions.push(rest.clone());
        }
    }
    let family = RankFamily::new(g, 1, principal_type(g), functions, BTreeMap::new())?;
    Ok(Model {
        name: format!("gv_subscheme_g{g}_d{d}"),
        spec: ModelSpec::GvSubscheme { g, d },
        family,
        hilbert: Some(chi),
        hodge_numbers: Some((0..=d).map(|i| binom(g, i)).collect()),
        flagged_max_critical: Some(rat_int(1)),
        notes: vec![
            SourceNote::new("h^0 on the three regions", SegmentSource::Stated),
            SourceNote::new("h^d on (0, 1]", SegmentSource::Stated),
            SourceNote::new("h^i = 0 right of 0 for i ∉ {0, d}", SegmentSource::Stated),
            SourceNote::new("h^i left of 0 for i ≥ 1: unknown", SegmentSource::Stated),
        ],
    })
}

/// Product model B×E: h⁰ = 0 for x ≤ 0 and x(1+x)^{g−1} for x ≥ 0; nothing
/// else is determined. Carries the codimension-1 jump datum at (i=0, x=0).
pub fn build_product_be(g: usize) -> Result<Model> {
    if g < 2 {
        return Err(Error::BadParameters("need g ≥ 2".into()));
    }
    let h0_pos = &Poly::x() * &Poly::from_i64(&[1, 1]).pow(g - 1);
    let h0 = PiecewisePoly::from_rational_breaks(
        &[rat_int(0)],
        vec![Segment::Known(Poly::zero()), Segment::Known(h0_pos.clone())],
    )?;
    let mut functions = vec![h0];
    for _ in 1..=g {
        functions.push(PiecewisePoly::unknown());
    }
    let mut jump = BTreeMap::new();
    jump.insert((0usize, rat_int(0)), 1usize);
    let family = RankFamily::new(g, 1, principal_type(g), functions, jump)?;
    Ok(Model {
        name: format!("product_be_g{g}"),
        spec: ModelSpec::ProductBE { g },
        family,
        hilbert: Some(h0_pos),
        hodge_numbers: None,
        flagged_max_critical: None,
        notes: vec![
            SourceNote::new("h^0 on both sides of 0", SegmentSource::Stated),
            SourceNote::new("codim-1 jump locus at (i=0, x=0)", SegmentSource::Stated),
            SourceNote::new("h^i for i ≥ 1: unknown", SegmentSource::Stated),
        ],
    })
}

/// Abel–Jacobi model: χ = gx, transform concentrated in degrees 0 and g, so
/// h⁰ = {0 | gx} and h¹ = {−gx | 0} while every other function vanishes.
pub fn build_abel_jacobi(g: usize) -> Result<Model> {
    if g < 2 {
        return Err(Error::BadParameters("need g ≥ 2".into()));
    }
    let gx = Poly::new(vec![Rat::from_integer(0.into()), rat_int(g as i64)]);
    let h0 = PiecewisePoly::from_rational_breaks(
        &[rat_int(0)],
        vec![Segment::Known(Poly::zero()), Segment::Known(gx.clone())],
    )?;
    let h1 = PiecewisePoly::from_rational_breaks(
        &[rat_int(0)],
        vec![Segment::Known(-&gx), Segment::Known(Poly::zero())],
    )?;
    let mut functions = vec![h0, h1];
    for _ in 2..=g {
        functions.push(PiecewisePoly::zero());
    }
    let family = RankFamily::new(g, 1, principal_type(g), functions, BTreeMap::new())?;
    Ok(Model {
        name: format!("abel_jacobi_g{g}"),
        spec: ModelSpec::AbelJacobi { g },
        family,
        hilbert: Some(gx),
        hodge_numbers: None,
        flagged_max_critical: None,
        notes: vec![
            SourceNote::new("h^0 on both sides of 0", SegmentSource::Stated),
            SourceNote::new(
                "h^1 = −gx left of 0, forced by the alternating sum",
                SegmentSource::Derived,
            ),
            SourceNote::new("h^i = 0 for i ≥ 2 (curve support)", SegmentSource::Derived),
        ],
    })
}

/// Theta-sum model O_A ⊕ O_Θ(Θ): h⁰ = (1+x)^g right of −1 and
/// h^{g−1} = h^g = (−x)^g on [−1, 0]; the remaining regions are forced by
/// the direct-sum decomposition and validated by the alternating sum.
pub fn build_theta_sum(g: usize) -> Result<Model> {
    if g < 2 {
        return Err(Error::BadParameters("need g ≥ 2".into()));
    }
    let one_plus_pow = Poly::from_i64(&[1, 1]).pow(g);
    let neg_x_pow = Poly::from_i64(&[0, -1]).pow(g);
    let h0 = PiecewisePoly::from_rational_breaks(
        &[rat_int(-1)],
        vec![Segment::Known(Poly::zero()), Segment::Known(one_plus_pow.clone())],
    )?;
    // left of −1: h^{g−1} = (−1)^{g−1}((1+x)^g − x^g)
    let x_pow = Poly::monomial(Rat::one(), g);
    let mut far_left = &one_plus_pow - &x_pow;
    if (g - 1) % 2 != 0 {
        far_left = -&far_left;
    }
    let h_gm1 = PiecewisePoly::from_rational_breaks(
        &[rat_int(-1), rat_int(0)],
        vec![
            Segment::Known(far_left),
            Segment::Known(neg_x_pow.clone()),
            Segment::Known(Poly::zero()),
        ],
    )?;
    let h_g = PiecewisePoly::from_rational_breaks(
        &[rat_int(0)],
        vec![Segment::Known(neg_x_pow), Segment::Known(Poly::zero())],
    )?;
    let mut functions = vec![h0];
    for _ in 1..g - 1 {
        functions.push(PiecewisePoly::zero());
    }
    functions.push(h_gm1);
    functions.push(h_g);
    let family = RankFamily::new(g, 1, principal_type(g), functions, BTreeMap::new())?;
    Ok(Model {
        name: format!("theta_sum_g{g}"),
        spec: ModelSpec::ThetaSum { g },
        family,
        hilbert: Some(one_plus_pow),
        hodge_numbers: None,
        flagged_max_critical: Some(rat_int(0)),
        notes: vec![
            SourceNote::new("h^0 on both sides of −1", SegmentSource::Stated),
            SourceNote::new("h^{g−1} = h^g = (−x)^g on [−1, 0]", SegmentSource::Stated),
            SourceNote::new("h^i right of 0 for i ≥ 1: zero", SegmentSource::Derived),
            SourceNote::new(
                "h^{g−1} left of −1 from the direct-sum pieces",
                SegmentSource::Derived,
            ),
        ],
    })
}

fn build_germ(tg: &TransformGerm) -> Result<Model> {
    let family = germ_from_transform(tg)?;
    Ok(Model {
        name: format!("germ_g{}", tg.g),
        spec: ModelSpec::Germ { germ: tg.clone() },
        family,
        hilbert: None,
        hodge_numbers: None,
        flagged_max_critical: None,
        notes: vec![SourceNote::new(
            "one-sided germs from transform data; valid formally near 0",
            SegmentSource::Stated,
        )],
    })
}

/// The built-in model catalog exercised by the verification driver.
pub fn builtin_catalog() -> Vec<Model> {
    let mut models = Vec::new();
    models.push(
        build_line_bundle(&Poly::from_i64(&[0, 1]), 1, 1).expect("catalog line bundle x"),
    );
    models.push(
        build_line_bundle(&Poly::from_i64(&[-2, 0, 1]), 2, 1)
            .expect("catalog line bundle x^2-2"),
    );
    for (g, d) in [(3, 1), (4, 2), (5, 2), (6, 3)] {
        models.push(build_gv_subscheme(g, d).expect("catalog gv subscheme"));
    }
    for g in [2, 3] {
        models.push(build_product_be(g).expect("catalog product"));
    }
    for g in [2, 5] {
        models.push(build_abel_jacobi(g).expect("catalog abel-jacobi"));
    }
    for g in [2, 3, 4] {
        models.push(build_theta_sum(g).expect("catalog theta sum"));
    }
    models.sort_by(|a, b| a.name.cmp(&b.name));
    models
}
