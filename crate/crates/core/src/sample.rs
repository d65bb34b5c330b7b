//! Evenly spaced sample tables with exact and decimal columns, serialized as
//! CSV for plotting tools.

use crate::error::{Error, Result};
use crate::family::RankFamily;
use crate::rat::{format_decimal, format_rat, rat_int, Rat};

#[derive(Clone, Debug)]
pub struct SampleRow {
    pub x: Rat,
    /// `None` marks a point inside an unknown region.
    pub value: Option<Rat>,
}

#[derive(Clone, Debug)]
pub struct SampleTable {
    pub degree: usize,
    pub rows: Vec<SampleRow>,
}

/// `steps + 1` evenly spaced exact samples of h^i on `[lo, hi]`.
pub fn export_samples(
    fam: &RankFamily,
    i: usize,
    lo: &Rat,
    hi: &Rat,
    steps: u32,
) -> Result<SampleTable> {
    if lo >= hi {
        return Err(Error::InvalidInput(format!(
            "need lo < hi, got [{}, {}]",
            format_rat(lo),
            format_rat(hi)
        )));
    }
    if steps == 0 {
        return Err(Error::InvalidInput("need at least one step".into()));
    }
    let span = hi - lo;
    let mut rows = Vec::with_capacity(steps as usize + 1);
    for k in 0..=steps {
        let x = lo + &span * Rat::new(k.into(), steps.into());
        let value = match fam.evaluate(i, &x) {
            Ok(v) => Some(v),
            Err(Error::UnknownRegion(_)) => None,
            Err(e) => return Err(e),
        };
        rows.push(SampleRow { x, value });
    }
    Ok(SampleTable { degree: i, rows })
}

impl SampleTable {
    /// CSV with LF endings and the fixed header
    /// `x_exact,x_decimal,h_exact,h_decimal`.
    pub fn to_csv(&self, digits: usize) -> String {
        let mut out = String::from("x_exact,x_decimal,h_exact,h_decimal\n");
        for row in &self.rows {
            out.push_str(&format_rat(&row.x));
            out.push(',');
            out.push_str(&format_decimal(&row.x, digits));
            out.push(',');
            match &row.value {
                Some(v) => {
                    out.push_str(&format_rat(v));
                    out.push(',');
                    out.push_str(&format_decimal(v, digits));
                }
                None => out.push_str("unknown,unknown"),
            }
            out.push('\n');
        }
        out
    }
}

/// Default number of decimal digits in rendered output.
pub const DEFAULT_DIGITS: usize = 12;

/// Evenly spaced rationals, handy for external callers.
pub fn grid(lo: &Rat, hi: &Rat, steps: u32) -> Vec<Rat> {
    let span = hi - lo;
    (0..=steps)
        .map(|k| lo + &span * Rat::new(k.into(), steps.into()))
        .collect()
}

/// Rational grid points shifted to avoid hitting integers exactly; used by
/// sampling checks.
pub fn jittered_grid(lo: i64, hi: i64, count: u32) -> Vec<Rat> {
    let span = rat_int(hi - lo);
    (0..count)
        .map(|k| rat_int(lo) + &span * Rat::new((2 * k as i64 + 1).into(), (2 * count as i64).into()))
        .collect()
}
