//! Python bindings: model construction, exact evaluation, breakpoint
//! analysis, classification, threshold invariants, and the verification
//! driver. Exact rationals cross the boundary as `a/b` strings so no
//! precision is lost.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use cohrank::modelfile::{load_model, serialize_model};
use cohrank::models::{self, Model as CoreModel};
use cohrank::poly::Poly;
use cohrank::rat::{format_decimal, format_rat, parse_rat};
use cohrank::regularity;
use cohrank::sample::export_samples;
use cohrank::transform;
use cohrank::verify::run_verify;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn poly_from_strings(coeffs: Vec<String>) -> PyResult<Poly> {
    let parsed = coeffs
        .iter()
        .map(|c| parse_rat(c))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    Ok(Poly::new(parsed))
}

fn poly_to_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(format_rat).collect()
}

/// A built rank-function model.
#[pyclass]
struct Model {
    inner: CoreModel,
}

#[pymethods]
impl Model {
    /// Non-degenerate line bundle with the given Hilbert polynomial
    /// (ascending coefficients, rationals as `a/b` strings).
    #[staticmethod]
    fn line_bundle(coeffs: Vec<String>, g: usize, chi_l: u64) -> PyResult<Self> {
        let poly = poly_from_strings(coeffs)?;
        let inner = models::build_line_bundle(&poly, g, chi_l).map_err(err)?;
        Ok(Model { inner })
    }

    #[staticmethod]
    fn gv_subscheme(g: usize, d: usize) -> PyResult<Self> {
        Ok(Model {
            inner: models::build_gv_subscheme(g, d).map_err(err)?,
        })
    }

    #[staticmethod]
    fn product_be(g: usize) -> PyResult<Self> {
        Ok(Model {
            inner: models::build_product_be(g).map_err(err)?,
        })
    }

    #[staticmethod]
    fn abel_jacobi(g: usize) -> PyResult<Self> {
        Ok(Model {
            inner: models::build_abel_jacobi(g).map_err(err)?,
        })
    }

    #[staticmethod]
    fn theta_sum(g: usize) -> PyResult<Self> {
        Ok(Model {
            inner: models::build_theta_sum(g).map_err(err)?,
        })
    }

    /// Parse a model from the `key = value` file grammar.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(Model {
            inner: load_model(text).map_err(err)?,
        })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn g(&self) -> usize {
        self.inner.family.g()
    }

    #[getter]
    fn complete(&self) -> bool {
        self.inner.family.complete()
    }

    fn to_text(&self) -> String {
        serialize_model(&self.inner.spec)
    }

    /// Exact value h^i(x) as an `a/b` string.
    fn evaluate(&self, i: usize, x: &str) -> PyResult<String> {
        let x = parse_rat(x).map_err(err)?;
        let v = self.inner.family.evaluate(i, &x).map_err(err)?;
        Ok(format_rat(&v))
    }

    #[pyo3(signature = (i, x, digits = 12))]
    fn evaluate_decimal(&self, i: usize, x: &str, digits: usize) -> PyResult<String> {
        let x = parse_rat(x).map_err(err)?;
        let v = self.inner.family.evaluate(i, &x).map_err(err)?;
        Ok(format_decimal(&v, digits))
    }

    /// Ascending coefficients of the alternating-sum polynomial.
    fn euler(&self) -> PyResult<Vec<String>> {
        let chi = self.inner.family.euler_poly().map_err(err)?;
        Ok(poly_to_strings(&chi))
    }

    fn classify(&self, x: &str) -> PyResult<String> {
        let x = parse_rat(x).map_err(err)?;
        let class = regularity::classify(&self.inner.family, &x).map_err(err)?;
        Ok(class.to_string())
    }

    /// Critical points as (exact description, decimal, degree, index).
    fn critical_points(&self) -> Vec<(String, String, usize, usize)> {
        self.inner
            .family
            .critical_points()
            .into_iter()
            .map(|cp| {
                (
                    cp.location.describe(),
                    cp.location.decimal(12),
                    cp.degree,
                    cp.index,
                )
            })
            .collect()
    }

    /// Smoothness index of h^i at a rational point: `None` when smooth.
    fn smoothness_index(&self, i: usize, x: &str) -> PyResult<Option<usize>> {
        let x = parse_rat(x).map_err(err)?;
        match self.inner.family.smoothness_index(i, &x).map_err(err)? {
            cohrank::family::SmoothnessIndex::Smooth => Ok(None),
            cohrank::family::SmoothnessIndex::Index(k) => Ok(Some(k)),
        }
    }

    fn max_critical_point(&self) -> PyResult<Option<String>> {
        match regularity::max_critical_point(&self.inner.family).map_err(err)? {
            regularity::Threshold::NegInfinity => Ok(None),
            regularity::Threshold::Value(v) => Ok(Some(v.decimal(12))),
        }
    }

    /// Recentered family around a/b (the μ_b-pullback normalization).
    fn recenter(&self, a: i64, b: u64) -> PyResult<Model> {
        if b == 0 {
            return Err(err("b must be positive"));
        }
        let mut inner = self.inner.clone();
        inner.family = inner.family.recenter(a, b);
        inner.name = format!("{}_recentered_{a}_{b}", inner.name);
        Ok(Model { inner })
    }

    #[pyo3(signature = (i, lo, hi, steps, digits = 12))]
    fn sample_csv(&self, i: usize, lo: &str, hi: &str, steps: u32, digits: usize) -> PyResult<String> {
        let lo = parse_rat(lo).map_err(err)?;
        let hi = parse_rat(hi).map_err(err)?;
        let table = export_samples(&self.inner.family, i, &lo, &hi, steps).map_err(err)?;
        Ok(table.to_csv(digits))
    }

    /// Runs the invariant suites on this model: (passed, report).
    fn verify(&self) -> (bool, String) {
        let outcome = run_verify(std::slice::from_ref(&self.inner));
        (outcome.passed, outcome.report.to_string())
    }

    fn __repr__(&self) -> String {
        format!(
            "Model(name='{}', g={}, kind='{}')",
            self.inner.name,
            self.inner.family.g(),
            self.inner.spec.kind_name()
        )
    }
}

/// Left-germ inversion coefficients (ascending, `a/b` strings).
#[pyfunction]
fn invert_neg(coeffs: Vec<String>, g: usize, chi: u64) -> PyResult<Vec<String>> {
    let q = poly_from_strings(coeffs)?;
    let p = transform::invert_neg(&q, g, chi).map_err(err)?;
    Ok(poly_to_strings(&p))
}

/// Right-germ inversion coefficients (ascending, `a/b` strings).
#[pyfunction]
fn invert_pos(coeffs: Vec<String>, g: usize, chi: u64) -> PyResult<Vec<String>> {
    let q = poly_from_strings(coeffs)?;
    let p = transform::invert_pos(&q, g, chi).map_err(err)?;
    Ok(poly_to_strings(&p))
}

/// s(h·l) = β/(h−β) for a rational β.
#[pyfunction]
fn s_from_beta(beta: &str, h: u64) -> PyResult<String> {
    let beta = parse_rat(beta).map_err(err)?;
    let s = regularity::s_from_beta(&cohrank::AlgReal::from_rat(beta), h).map_err(err)?;
    match s.as_rational() {
        Some(v) => Ok(format_rat(v)),
        None => Ok(s.decimal(12)),
    }
}

/// Names of the built-in catalog models.
#[pyfunction]
fn list_models() -> Vec<String> {
    models::builtin_catalog()
        .into_iter()
        .map(|m| m.name)
        .collect()
}

/// Runs the verification driver over the built-in catalog.
#[pyfunction]
fn verify_catalog() -> (bool, String) {
    let outcome = run_verify(&models::builtin_catalog());
    (outcome.passed, outcome.report.to_string())
}

#[pymodule]
fn cohrank_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Model>()?;
    m.add_function(wrap_pyfunction!(invert_neg, m)?)?;
    m.add_function(wrap_pyfunction!(invert_pos, m)?)?;
    m.add_function(wrap_pyfunction!(s_from_beta, m)?)?;
    m.add_function(wrap_pyfunction!(list_models, m)?)?;
    m.add_function(wrap_pyfunction!(verify_catalog, m)?)?;
    Ok(())
}
