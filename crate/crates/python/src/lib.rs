//! Python module `zetacont`: exact identity derivation and high-precision
//! zeta evaluation.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyComplex;

use zetacont_core::derive::{self, IdentitySpec};
use zetacont_core::evalzeta::{self, format_float, BigComplex};
use zetacont_core::exactmath::{self, format_rational, Rational};
use zetacont_core::ZetaError;

create_exception!(zetacont, DomainError, PyValueError);
create_exception!(zetacont, PoleError, DomainError);
create_exception!(zetacont, CapacityError, DomainError);

fn to_py(e: ZetaError) -> PyErr {
    let msg = e.to_string();
    match e {
        ZetaError::Pole { .. } => PoleError::new_err(msg),
        ZetaError::Capacity { .. } => CapacityError::new_err(msg),
        ZetaError::Domain(_) | ZetaError::Parse(_) => DomainError::new_err(msg),
        ZetaError::Internal(_) => PyRuntimeError::new_err(msg),
    }
}

fn text(r: &Rational) -> String {
    format_rational(r)
}

/// Accepts a literal such as `"0.5+14.1i"` (exact decimal input) or a Python
/// number (converted from its binary value).
fn point(s: &Bound<'_, PyAny>, digits: u32) -> PyResult<BigComplex> {
    if let Ok(t) = s.extract::<String>() {
        return BigComplex::parse(&t, digits).map_err(to_py);
    }
    if let Ok(c) = s.cast::<PyComplex>() {
        return Ok(BigComplex::from_f64(c.real(), c.imag(), digits));
    }
    let x: f64 = s.extract()?;
    Ok(BigComplex::from_f64(x, 0.0, digits))
}

/// A high-precision complex number, kept as decimal strings.
#[pyclass(module = "zetacont", frozen)]
struct Value {
    #[pyo3(get)]
    re: String,
    #[pyo3(get)]
    im: String,
}

impl Value {
    fn new(v: &BigComplex, digits: u32) -> Self {
        let sig = digits as usize;
        Value {
            re: format_float(v.re(), sig),
            im: format_float(v.im(), sig),
        }
    }
}

#[pymethods]
impl Value {
    fn __complex__<'py>(&self, py: Python<'py>) -> Bound<'py, PyComplex> {
        PyComplex::from_doubles(py, self.re.parse().unwrap_or(f64::NAN), self.im.parse().unwrap_or(f64::NAN))
    }

    fn __float__(&self) -> f64 {
        self.re.parse().unwrap_or(f64::NAN)
    }

    fn __repr__(&self) -> String {
        format!("Value(re={:?}, im={:?})", self.re, self.im)
    }
}

/// One derived identity: pole coefficient, closed part `Q_p` and series
/// coefficients `r_k`, all exact.
#[pyclass(module = "zetacont", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Identity {
    spec: IdentitySpec,
}

#[pymethods]
impl Identity {
    #[getter]
    fn p(&self) -> u32 {
        self.spec.p
    }

    #[getter]
    fn k0(&self) -> u32 {
        self.spec.k0
    }

    #[getter]
    fn k_max(&self) -> u32 {
        self.spec.k_max()
    }

    #[getter]
    fn pole_coefficient(&self) -> String {
        text(&self.spec.pole_coefficient)
    }

    /// `Q_p` coefficients in ascending degree.
    #[getter]
    fn q_poly(&self) -> Vec<String> {
        self.spec.q_poly.coeffs().iter().map(text).collect()
    }

    /// `(k, r_k)` pairs.
    #[getter]
    fn terms(&self) -> Vec<(u32, String)> {
        self.spec.terms.iter().map(|t| (t.k, text(&t.r))).collect()
    }

    /// Closed-form `r_k` polynomial in `k`, ascending degree.
    #[getter]
    fn closed_form(&self) -> Option<Vec<String>> {
        self.spec.closed_form.as_ref().map(|c| c.k_poly.coeffs().iter().map(text).collect())
    }

    #[getter]
    fn validity_re_gt(&self) -> String {
        text(&self.spec.validity_re_gt)
    }

    #[getter]
    fn extended_validity_re_gt(&self) -> Option<String> {
        self.spec.extended_validity_re_gt.as_ref().map(text)
    }

    /// `r_k`, using the closed form past the stored table.
    fn coefficient(&self, k: u32) -> Option<String> {
        self.spec.coefficient(k).as_ref().map(text)
    }

    fn describe(&self) -> String {
        let mut out = format!("Q_{}(s) = {}", self.spec.p, self.spec.q_poly.display_in("s"));
        if let Some(c) = &self.spec.closed_form {
            out += &format!("; r_k = {}", c.k_poly.display_in("k"));
        }
        out
    }

    fn to_json(&self) -> String {
        self.spec.to_json()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Identity> {
        IdentitySpec::from_json(text).map(|spec| Identity { spec }).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("Identity(p={}, k0={}, k_max={})", self.spec.p, self.spec.k0, self.spec.k_max())
    }
}

/// Outcome of one evaluation.
#[pyclass(module = "zetacont", frozen)]
struct EvalReport {
    #[pyo3(get)]
    value: Py<Value>,
    #[pyo3(get)]
    p_used: u32,
    #[pyo3(get)]
    terms_used: u32,
    #[pyo3(get)]
    error_estimate: f64,
    json: String,
}

#[pymethods]
impl EvalReport {
    fn to_json(&self) -> String {
        self.json.clone()
    }

    fn __repr__(&self, py: Python<'_>) -> String {
        let v = self.value.borrow(py);
        format!(
            "EvalReport(value={}{:+}i, p_used={}, terms_used={}, error_estimate={:e})",
            v.re,
            v.im.parse::<f64>().unwrap_or(0.0),
            self.p_used,
            self.terms_used,
            self.error_estimate
        )
    }
}

#[pyfunction]
#[pyo3(signature = (p, k_max = derive::DEFAULT_K_MAX))]
fn derive_identity(py: Python<'_>, p: u32, k_max: u32) -> PyResult<Identity> {
    py.detach(|| derive::derive_identity(p, k_max)).map(|spec| Identity { spec }).map_err(to_py)
}

/// The built-in table for depth `p`, stored to `k_max`.
#[pyfunction]
#[pyo3(signature = (p, k_max = derive::DEFAULT_K_MAX))]
fn reference_identity(p: u32, k_max: u32) -> PyResult<Identity> {
    derive::reference_identity_to(p, k_max).map(|spec| Identity { spec }).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (a, b, k_max = derive::DEFAULT_K_MAX))]
fn identities_equal(a: &Identity, b: &Identity, k_max: u32) -> bool {
    derive::identities_equal(&a.spec, &b.spec, k_max)
}

#[pyfunction]
fn bernoulli(m: usize) -> String {
    text(&exactmath::bernoulli(m))
}

/// Coefficients of `Σ_{i=1}^{n} i^m` as a polynomial in `n`, ascending.
#[pyfunction]
fn faulhaber(m: usize) -> Vec<String> {
    exactmath::faulhaber(m).coeffs().iter().map(text).collect()
}

#[pyfunction]
#[pyo3(signature = (identity, s, digits = evalzeta::DEFAULT_DIGITS))]
fn eval_identity(py: Python<'_>, identity: &Identity, s: &Bound<'_, PyAny>, digits: u32) -> PyResult<EvalReport> {
    let point = point(s, digits)?;
    let spec = identity.spec.clone();
    let report = py
        .detach(|| evalzeta::eval_identity(&spec, &point, digits))
        .map_err(to_py)?;
    Ok(EvalReport {
        value: Py::new(py, Value::new(&report.value, digits))?,
        p_used: report.p_used,
        terms_used: report.terms_used,
        error_estimate: report.error_estimate,
        json: report.to_json(&point).to_string(),
    })
}

/// Independent Euler–Maclaurin evaluation of `ζ(s)`.
#[pyfunction]
#[pyo3(signature = (s, digits = evalzeta::DEFAULT_DIGITS))]
fn zeta_em_reference(py: Python<'_>, s: &Bound<'_, PyAny>, digits: u32) -> PyResult<Value> {
    let point = point(s, digits)?;
    let v = py.detach(|| evalzeta::zeta_em_reference(&point, digits)).map_err(to_py)?;
    Ok(Value::new(&v, digits))
}

#[pyfunction]
#[pyo3(signature = (identity, digits = evalzeta::DEFAULT_DIGITS))]
fn zeta_prime_at_zero(identity: &Identity, digits: u32) -> PyResult<Value> {
    let v = evalzeta::zeta_prime_at_zero(&identity.spec, digits).map_err(to_py)?;
    Ok(Value::new(&v, digits))
}

#[pyfunction]
#[pyo3(signature = (digits = evalzeta::DEFAULT_DIGITS))]
fn sum_zeta_m1(digits: u32) -> PyResult<Value> {
    let v = evalzeta::sum_zeta_m1(digits).map_err(to_py)?;
    Ok(Value::new(&v, digits))
}

/// `[(s, |ζ(s)|, error_estimate)]` at the reachable even negative integers.
#[pyfunction]
#[pyo3(signature = (identity, digits = evalzeta::DEFAULT_DIGITS))]
fn trivial_zero_report(py: Python<'_>, identity: &Identity, digits: u32) -> PyResult<Vec<(i64, f64, f64)>> {
    let spec = identity.spec.clone();
    let report = py.detach(|| evalzeta::trivial_zero_report(&spec, digits)).map_err(to_py)?;
    Ok(report.into_iter().map(|z| (z.s, z.magnitude, z.error_estimate)).collect())
}

#[pymodule]
fn zetacont(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("DomainError", py.get_type::<DomainError>())?;
    m.add("PoleError", py.get_type::<PoleError>())?;
    m.add("CapacityError", py.get_type::<CapacityError>())?;
    m.add("MIN_DIGITS", evalzeta::MIN_DIGITS)?;
    m.add("DEFAULT_DIGITS", evalzeta::DEFAULT_DIGITS)?;
    m.add_class::<Identity>()?;
    m.add_class::<EvalReport>()?;
    m.add_class::<Value>()?;
    m.add_function(wrap_pyfunction!(derive_identity, m)?)?;
    m.add_function(wrap_pyfunction!(reference_identity, m)?)?;
    m.add_function(wrap_pyfunction!(identities_equal, m)?)?;
    m.add_function(wrap_pyfunction!(bernoulli, m)?)?;
    m.add_function(wrap_pyfunction!(faulhaber, m)?)?;
    m.add_function(wrap_pyfunction!(eval_identity, m)?)?;
    m.add_function(wrap_pyfunction!(zeta_em_reference, m)?)?;
    m.add_function(wrap_pyfunction!(zeta_prime_at_zero, m)?)?;
    m.add_function(wrap_pyfunction!(sum_zeta_m1, m)?)?;
    m.add_function(wrap_pyfunction!(trivial_zero_report, m)?)?;
    Ok(())
}
