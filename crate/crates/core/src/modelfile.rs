//! Line-oriented `key = value` model files.
//!
//! Grammar: UTF-8 text, `#` starts a comment, blank lines ignored. Keys:
//! `kind`, `g`, `d`, `chi_l`, `poly`, `minus.<i>`, `plus.<i>`. Polynomials
//! are bracketed ascending coefficient lists with rationals written `a/b`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::models::{Model, ModelSpec};
use crate::poly::Poly;
use crate::rat::{format_rat, parse_rat};
use crate::transform::TransformGerm;

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        msg: msg.into(),
    }
}

struct RawEntry {
    line: usize,
    value: String,
}

/// Parses and validates a model file, returning the descriptor. Validation
/// errors (e.g. a line-bundle polynomial with complex roots) are reported as
/// `Error::Validation`.
pub fn parse_model(text: &str) -> Result<ModelSpec> {
    let mut entries: BTreeMap<String, RawEntry> = BTreeMap::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(p) => &raw_line[..p],
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(syntax(line_no, format!("expected `key = value`, got `{line}`")));
        };
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        if value.is_empty() {
            return Err(syntax(line_no, format!("empty value for `{key}`")));
        }
        if entries.contains_key(&key) {
            return Err(syntax(line_no, format!("duplicate key `{key}`")));
        }
        entries.insert(key, RawEntry { line: line_no, value });
    }
    let kind = entries
        .remove("kind")
        .ok_or_else(|| syntax(0, "missing required key `kind`"))?;
    let spec = match kind.value.as_str() {
        "line_bundle" => {
            let g = take_usize(&mut entries, "g")?;
            let chi_l = take_u64(&mut entries, "chi_l")?;
            let poly = take_poly(&mut entries, "poly")?;
            ModelSpec::LineBundle { poly, g, chi_l }
        }
        "gv_subscheme" => {
            let g = take_usize(&mut entries, "g")?;
            let d = take_usize(&mut entries, "d")?;
            ModelSpec::GvSubscheme { g, d }
        }
        "product_be" => ModelSpec::ProductBE {
            g: take_usize(&mut entries, "g")?,
        },
        "abel_jacobi" => ModelSpec::AbelJacobi {
            g: take_usize(&mut entries, "g")?,
        },
        "theta_sum" => ModelSpec::ThetaSum {
            g: take_usize(&mut entries, "g")?,
        },
        "germ" => {
            let g = take_usize(&mut entries, "g")?;
            let chi_l = take_u64(&mut entries, "chi_l")?;
            let mut germ = TransformGerm {
                g,
                chi_l,
                ..Default::default()
            };
            let keys: Vec<String> = entries.keys().cloned().collect();
            for key in keys {
                let side = if let Some(i) = key.strip_prefix("minus.") {
                    Some((true, i.to_string()))
                } else if let Some(i) = key.strip_prefix("plus.") {
                    Some((false, i.to_string()))
                } else {
                    None
                };
                let Some((is_minus, i_str)) = side else { continue };
                let entry = entries.remove(&key).expect("key listed");
                let i: usize = i_str
                    .parse()
                    .map_err(|_| syntax(entry.line, format!("bad degree in `{key}`")))?;
                let poly = parse_poly(&entry.value, entry.line)?;
                if is_minus {
                    germ.minus.insert(i, poly);
                } else {
                    germ.plus.insert(i, poly);
                }
            }
            ModelSpec::Germ { germ }
        }
        other => {
            return Err(syntax(kind.line, format!("unknown kind `{other}`")));
        }
    };
    if let Some((key, entry)) = entries.iter().next() {
        return Err(syntax(
            entry.line,
            format!("unknown key `{key}` for kind `{}`", spec.kind_name()),
        ));
    }
    // vet the parameters by building once
    spec.build().map_err(|e| Error::Validation(e.to_string()))?;
    Ok(spec)
}

/// Parses a model file and builds the model in one step.
pub fn load_model(text: &str) -> Result<Model> {
    parse_model(text)?.build()
}

fn take_usize(entries: &mut BTreeMap<String, RawEntry>, key: &str) -> Result<usize> {
    let e = entries
        .remove(key)
        .ok_or_else(|| syntax(0, format!("missing required key `{key}`")))?;
    e.value
        .parse()
        .map_err(|_| syntax(e.line, format!("`{key}` must be a non-negative integer")))
}

fn take_u64(entries: &mut BTreeMap<String, RawEntry>, key: &str) -> Result<u64> {
    let e = entries
        .remove(key)
        .ok_or_else(|| syntax(0, format!("missing required key `{key}`")))?;
    e.value
        .parse()
        .map_err(|_| syntax(e.line, format!("`{key}` must be a non-negative integer")))
}

fn take_poly(entries: &mut BTreeMap<String, RawEntry>, key: &str) -> Result<Poly> {
    let e = entries
        .remove(key)
        .ok_or_else(|| syntax(0, format!("missing required key `{key}`")))?;
    parse_poly(&e.value, e.line)
}

fn parse_poly(value: &str, line: usize) -> Result<Poly> {
    let inner = value
        .strip_prefix('[')
        .and_then(|v| v.strip_suffix(']'))
        .ok_or_else(|| syntax(line, format!("polynomial must be bracketed, got `{value}`")))?
        .trim();
    if inner.is_empty() {
        return Ok(Poly::zero());
    }
    let coeffs = inner
        .split(',')
        .map(|c| parse_rat(c).map_err(|e| syntax(line, format!("bad coefficient: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

fn poly_text(p: &Poly) -> String {
    let coeffs: Vec<String> = p.coeffs().iter().map(format_rat).collect();
    format!("[{}]", coeffs.join(", "))
}

/// Canonical text form; `parse_model(serialize_model(s))` reproduces `s`.
pub fn serialize_model(spec: &ModelSpec) -> String {
    let mut out = String::new();
    let mut push = |k: &str, v: String| {
        out.push_str(k);
        out.push_str(" = ");
        out.push_str(&v);
        out.push('\n');
    };
    push("kind", spec.kind_name().to_string());
    match spec {
        ModelSpec::LineBundle { poly, g, chi_l } => {
            push("g", g.to_string());
            push("chi_l", chi_l.to_string());
            push("poly", poly_text(poly));
        }
        ModelSpec::GvSubscheme { g, d } => {
            push("g", g.to_string());
            push("d", d.to_string());
        }
        ModelSpec::ProductBE { g } | ModelSpec::AbelJacobi { g } | ModelSpec::ThetaSum { g } => {
            push("g", g.to_string());
        }
        ModelSpec::Germ { germ } => {
            push("g", germ.g.to_string());
            push("chi_l", germ.chi_l.to_string());
            for (i, q) in &germ.minus {
                push(&format!("minus.{i}"), poly_text(q));
            }
            for (i, q) in &germ.plus {
                push(&format!("plus.{i}"), poly_text(q));
            }
        }
    }
    out
}
