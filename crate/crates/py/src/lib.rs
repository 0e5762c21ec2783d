//! Python module `twistlab`.

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use twistlab_core::kauffman::{top_rows, truncate as truncate_poly};
use twistlab_core::notation::{self, enumerate_standard as enumerate};
use twistlab_core::{ConwayCode, LaurentPoly2, LinkDiagram, SmoothingMode, Verifier};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn code_of(text: &str) -> PyResult<ConwayCode> {
    notation::parse_conway(text).map_err(value_error)
}

/// Laurent polynomial in `a` and `z` with integer coefficients.
#[pyclass(
    name = "Polynomial",
    module = "twistlab",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyPolynomial(LaurentPoly2);

#[pymethods]
impl PyPolynomial {
    /// Build from `(a_exp, z_exp, coeff)` triples.
    #[new]
    fn new(terms: Vec<(i32, i32, i64)>) -> Self {
        PyPolynomial(LaurentPoly2::from_terms(terms))
    }

    fn terms(&self) -> Vec<(i32, i32, i64)> {
        self.0.terms().collect()
    }

    fn coeff(&self, a: i32, z: i32) -> i64 {
        self.0.coeff(a, z)
    }

    fn max_z_degree(&self) -> Option<i32> {
        self.0.max_z_degree()
    }

    fn mirror(&self) -> Self {
        PyPolynomial(self.0.mirror())
    }

    /// Terms at z-degrees `c-1` and `c-2`.
    fn top_rows(&self, crossings: usize) -> Self {
        PyPolynomial(top_rows(&self.0, crossings))
    }

    fn table(&self) -> String {
        self.0.render_staggered()
    }

    fn __add__(&self, other: &Self) -> Self {
        PyPolynomial(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyPolynomial(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyPolynomial(&self.0 * &other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.0)
    }
}

/// Link diagram with crossings `0..crossing_count`.
#[pyclass(name = "Diagram", module = "twistlab", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyDiagram(LinkDiagram);

fn mode_of(mode: &str) -> PyResult<SmoothingMode> {
    match mode {
        "zero" | "0" => Ok(SmoothingMode::Zero),
        "infinity" | "inf" => Ok(SmoothingMode::Infinity),
        other => Err(PyValueError::new_err(format!(
            "unknown smoothing {other:?}"
        ))),
    }
}

#[pymethods]
impl PyDiagram {
    /// Standard diagram of the numerator closure of a Conway code.
    #[staticmethod]
    fn from_code(code: &str) -> PyResult<Self> {
        Ok(PyDiagram(LinkDiagram::build_standard(&code_of(code)?)))
    }

    #[staticmethod]
    fn from_pd(pd: Vec<Vec<i64>>) -> PyResult<Self> {
        LinkDiagram::from_pd(&pd)
            .map(PyDiagram)
            .map_err(value_error)
    }

    fn pd(&self) -> Vec<[u32; 4]> {
        self.0.to_pd()
    }

    #[getter]
    fn crossing_count(&self) -> usize {
        self.0.crossing_count()
    }

    #[getter]
    fn components(&self) -> usize {
        self.0.components()
    }

    fn writhe(&self) -> i32 {
        self.0.self_writhe()
    }

    fn is_alternating(&self) -> bool {
        self.0.is_alternating()
    }

    fn smooth(&self, crossing: usize, mode: &str) -> PyResult<Self> {
        let mode = mode_of(mode)?;
        self.0
            .smooth(crossing, mode)
            .map(PyDiagram)
            .map_err(|e| PyIndexError::new_err(e.to_string()))
    }

    fn switch(&self, crossing: usize) -> PyResult<Self> {
        self.0
            .switch(crossing)
            .map(PyDiagram)
            .map_err(|e| PyIndexError::new_err(e.to_string()))
    }

    fn mirror(&self) -> Self {
        PyDiagram(self.0.mirror())
    }

    fn connected_sum(&self, other: &Self) -> PyResult<Self> {
        LinkDiagram::connected_sum(&self.0, &other.0)
            .map(PyDiagram)
            .map_err(value_error)
    }

    fn canonical_key(&self) -> Vec<u8> {
        self.0.canonical_key()
    }

    fn is_isomorphic(&self, other: &Self) -> bool {
        self.0.is_isomorphic(&other.0)
    }

    /// Kauffman polynomial `Λ(a, z)`.
    fn kauffman(&self) -> PyPolynomial {
        PyPolynomial(twistlab_core::lambda(&self.0))
    }

    /// `(u-, u0, u+)` of the `z^(c-2)` row.
    fn truncate(&self) -> PyResult<(i64, i64, i64)> {
        let p = twistlab_core::lambda(&self.0);
        let t = truncate_poly(&p, self.0.crossing_count()).map_err(value_error)?;
        Ok((t.u.minus, t.u.zero, t.u.plus))
    }

    fn __repr__(&self) -> String {
        format!(
            "Diagram(crossings={}, components={})",
            self.0.crossing_count(),
            self.0.components()
        )
    }
}

#[pyfunction]
fn parse_code(code: &str) -> PyResult<Vec<u32>> {
    Ok(code_of(code)?.entries().to_vec())
}

#[pyfunction]
fn census<'py>(py: Python<'py>, code: &str) -> PyResult<Bound<'py, PyDict>> {
    let s = notation::census(&code_of(code)?);
    let d = PyDict::new(py);
    d.set_item("sites", s.sites)?;
    d.set_item("left_turning", s.left_turning)?;
    d.set_item("right_turning", s.right_turning)?;
    d.set_item("crossings", s.crossings)?;
    d.set_item("extra", s.extra)?;
    d.set_item("is_minimal", s.is_minimal)?;
    Ok(d)
}

#[pyfunction]
fn continued_fraction(code: &str) -> PyResult<(i64, i64)> {
    let f = notation::continued_fraction(&code_of(code)?);
    Ok((f.numerator, f.denominator))
}

#[pyfunction]
fn predicted_u(code: &str) -> PyResult<(i64, i64, i64)> {
    let u = notation::predicted_u(&notation::census(&code_of(code)?));
    Ok((u.minus, u.zero, u.plus))
}

#[pyfunction]
fn enumerate_standard(crossings: usize) -> Vec<String> {
    enumerate(crossings)
        .iter()
        .map(ToString::to_string)
        .collect()
}

/// Runs every applicable check on a code; returns `(overall, checks)`.
#[pyfunction]
fn verify(code: &str) -> PyResult<(bool, Vec<(String, bool)>)> {
    let report = Verifier::default()
        .verify_all(&code_of(code)?)
        .map_err(value_error)?;
    Ok((report.overall, report.checks.into_iter().collect()))
}

#[pymodule]
fn twistlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyDiagram>()?;
    m.add_function(wrap_pyfunction!(parse_code, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(continued_fraction, m)?)?;
    m.add_function(wrap_pyfunction!(predicted_u, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_standard, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
