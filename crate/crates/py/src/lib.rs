//! Python bindings. Integers map to `int`, rationals to `fractions.Fraction`;
//! rational arguments also accept strings such as `"1/2"` or `"1e-20"`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use lahbell::dobinski::{self, format_scientific, DobinskiResult};
use lahbell::error::Error;
use lahbell::exact::parse_rational;
use lahbell::poly::{self as lpoly, BiPoly, DefiningVariant, LambdaPoly, XPoly};
use lahbell::report::Report as CoreReport;
use lahbell::tables::ClosedForm;
use lahbell::verify::{run_suites, Overrides, Suite};
use lahbell::{oracle, tables, weyl};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Accepts `int`, `Fraction` or a rational literal string.
fn to_rational(value: &Bound<'_, PyAny>) -> PyResult<BigRational> {
    if let Ok(text) = value.extract::<String>() {
        return parse_rational(&text).map_err(py_err);
    }
    if let Ok(i) = value.extract::<BigInt>() {
        return Ok(BigRational::from_integer(i));
    }
    value.extract::<BigRational>()
}

#[pyfunction]
fn lah(n: usize, k: usize) -> BigInt {
    tables::lah(n, k)
}

#[pyfunction]
fn r_lah(n: usize, k: usize, r: usize) -> BigInt {
    tables::r_lah(n, k, r)
}

#[pyfunction]
fn stirling2(n: usize, k: usize) -> BigInt {
    tables::stirling2(n, k)
}

#[pyfunction]
fn bell(n: usize) -> BigInt {
    tables::bell(n)
}

/// Coefficients of `L^r_λ(n,k)` in ascending powers of λ.
#[pyfunction]
fn lambda_r_lah(n: usize, k: usize, r: usize) -> Polynomial {
    Polynomial::lambda(lpoly::lambda_r_lah(n, k, r))
}

#[derive(Clone, PartialEq)]
enum Univariate {
    X(XPoly),
    Lambda(LambdaPoly),
}

/// Univariate polynomial in `x` or in `l` (for λ).
#[pyclass(module = "lahbell", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct Polynomial(Univariate);

impl Polynomial {
    fn x(p: XPoly) -> Self {
        Polynomial(Univariate::X(p))
    }

    fn lambda(p: LambdaPoly) -> Self {
        Polynomial(Univariate::Lambda(p))
    }
}

#[pymethods]
impl Polynomial {
    /// Coefficients in ascending degree.
    #[getter]
    fn coeffs(&self) -> Vec<BigRational> {
        match &self.0 {
            Univariate::X(p) => p.coeffs().to_vec(),
            Univariate::Lambda(p) => p.coeffs().to_vec(),
        }
    }

    #[getter]
    fn variable(&self) -> &'static str {
        match &self.0 {
            Univariate::X(_) => "x",
            Univariate::Lambda(_) => "l",
        }
    }

    /// `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<usize> {
        match &self.0 {
            Univariate::X(p) => p.degree(),
            Univariate::Lambda(p) => p.degree(),
        }
    }

    fn __call__(&self, at: &Bound<'_, PyAny>) -> PyResult<BigRational> {
        let at = to_rational(at)?;
        Ok(match &self.0 {
            Univariate::X(p) => p.eval(&at),
            Univariate::Lambda(p) => p.eval(&at),
        })
    }

    fn __str__(&self) -> String {
        match &self.0 {
            Univariate::X(p) => p.to_string(),
            Univariate::Lambda(p) => p.to_string(),
        }
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.__str__())
    }
}

/// Polynomial in `x` whose coefficients are polynomials in λ.
#[pyclass(module = "lahbell", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct BiPolynomial(BiPoly);

#[pymethods]
impl BiPolynomial {
    fn __call__(&self, x: &Bound<'_, PyAny>, lam: &Bound<'_, PyAny>) -> PyResult<BigRational> {
        Ok(self.0.eval_both(&to_rational(x)?, &to_rational(lam)?))
    }

    /// Fixes x, leaving a polynomial in λ.
    fn at_x(&self, x: &Bound<'_, PyAny>) -> PyResult<Polynomial> {
        Ok(Polynomial::lambda(self.0.eval_x(&to_rational(x)?)))
    }

    /// Fixes λ, leaving a polynomial in x.
    fn at_lambda(&self, lam: &Bound<'_, PyAny>) -> PyResult<Polynomial> {
        Ok(Polynomial::x(self.0.eval_lambda(&to_rational(lam)?)))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("BiPolynomial('{}')", self.0)
    }
}

#[pyfunction]
fn lah_bell_poly(n: usize) -> Polynomial {
    Polynomial::x(lpoly::lah_bell_poly(n))
}

#[pyfunction]
fn r_lah_bell_poly(n: usize, r: usize) -> Polynomial {
    Polynomial::x(lpoly::r_lah_bell_poly(n, r))
}

#[pyfunction]
fn lambda_r_lah_bell_poly(n: usize, r: usize) -> BiPolynomial {
    BiPolynomial(lpoly::lambda_r_lah_bell_poly(n, r))
}

/// Normal-ordered element `Σ c_ij X^i D^j` of the Weyl algebra.
#[pyclass(module = "lahbell", frozen, eq, skip_from_py_object, name = "WeylOp")]
#[derive(Clone, PartialEq)]
pub struct PyWeylOp(weyl::WeylOp);

#[pymethods]
impl PyWeylOp {
    #[staticmethod]
    fn x() -> Self {
        PyWeylOp(weyl::WeylOp::x())
    }

    #[staticmethod]
    fn d() -> Self {
        PyWeylOp(weyl::WeylOp::d())
    }

    /// The number operator `XD`.
    #[staticmethod]
    fn euler() -> Self {
        PyWeylOp(weyl::WeylOp::euler())
    }

    #[staticmethod]
    fn scalar(c: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyWeylOp(weyl::WeylOp::scalar(to_rational(c)?)))
    }

    /// `c X^i D^j`
    #[staticmethod]
    fn term(c: &Bound<'_, PyAny>, i: usize, j: usize) -> PyResult<Self> {
        Ok(PyWeylOp(weyl::WeylOp::term(to_rational(c)?, i, j)))
    }

    /// `⟨XD + c⟩_n`
    #[staticmethod]
    fn rising(c: u64, n: usize) -> Self {
        PyWeylOp(weyl::op_rising(c, n))
    }

    fn coeff(&self, i: usize, j: usize) -> BigRational {
        self.0.coeff(i, j)
    }

    /// `{(i, j): c_ij}` for the nonzero terms.
    fn terms(&self) -> BTreeMap<(usize, usize), BigRational> {
        self.0.terms().clone()
    }

    fn apply(&self, p: &Polynomial) -> PyResult<Polynomial> {
        match &p.0 {
            Univariate::X(p) => Ok(Polynomial::x(self.0.apply_to_poly(p))),
            Univariate::Lambda(_) => {
                Err(PyValueError::new_err("operators act on polynomials in x"))
            }
        }
    }

    /// `e^{-x} · op(e^x)`
    fn apply_to_exp(&self) -> Polynomial {
        Polynomial::x(self.0.apply_to_exp())
    }

    fn __add__(&self, other: &PyWeylOp) -> PyWeylOp {
        PyWeylOp(&self.0 + &other.0)
    }

    fn __mul__(&self, other: &PyWeylOp) -> PyWeylOp {
        PyWeylOp(self.0.normal_mul(&other.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("WeylOp('{}')", self.0)
    }
}

#[pyclass(module = "lahbell", frozen, name = "Report")]
pub struct PyReport(CoreReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn identity(&self) -> &str {
        &self.0.identity
    }

    #[getter]
    fn params(&self) -> BTreeMap<String, String> {
        self.0.params.clone()
    }

    #[getter]
    fn checks(&self) -> usize {
        self.0.checks
    }

    #[getter]
    fn passed(&self) -> bool {
        self.0.passed()
    }

    /// `(at, expected, actual)` for each failed comparison.
    #[getter]
    fn failures(&self) -> Vec<(String, String, String)> {
        self.0
            .failures
            .iter()
            .map(|f| (f.at.clone(), f.expected.clone(), f.actual.clone()))
            .collect()
    }

    fn __bool__(&self) -> bool {
        self.0.passed()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// variant is "classic", "r_shift" or "lambda".
#[pyfunction]
#[pyo3(signature = (n, r, variant = "r_shift"))]
fn defining_relation_check(n: usize, r: usize, variant: &str) -> PyResult<PyReport> {
    let variant = match variant {
        "classic" => DefiningVariant::Classic,
        "r_shift" => DefiningVariant::RShift,
        "lambda" => DefiningVariant::Lambda,
        other => return Err(PyValueError::new_err(format!("unknown variant {other:?}"))),
    };
    Ok(PyReport(lpoly::defining_relation_check(n, r, variant)))
}

#[pyfunction]
fn spivey_r_check(n: usize, m: usize, r: usize) -> PyReport {
    PyReport(lpoly::spivey_r_check(n, m, r))
}

#[pyfunction]
fn spivey_lambda_check(n: usize, m: usize, r: usize) -> PyReport {
    PyReport(lpoly::spivey_lambda_check(n, m, r))
}

#[pyfunction]
fn operator_spivey_check(n: usize, m: usize, r: usize) -> PyReport {
    PyReport(weyl::operator_spivey_check(n, m, r))
}

/// Runs a verification suite ("all" for every suite) and returns one
/// `(suite, passed, reports)` tuple per suite.
#[pyfunction]
#[pyo3(signature = (suite, quick = true, jobs = 1))]
fn verify(
    py: Python<'_>,
    suite: &str,
    quick: bool,
    jobs: usize,
) -> PyResult<Vec<(String, bool, Vec<PyReport>)>> {
    let suites = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse::<Suite>().map_err(py_err)?]
    };
    let outcomes = py
        .detach(|| run_suites(&suites, &Overrides::default(), quick, jobs, &ClosedForm))
        .map_err(py_err)?;
    Ok(outcomes
        .into_iter()
        .map(|o| {
            let passed = o.passed();
            (
                o.suite.name().to_string(),
                passed,
                o.reports.into_iter().map(PyReport).collect(),
            )
        })
        .collect())
}

#[pyfunction]
fn count_ordered_partitions(n: usize, k: usize) -> PyResult<BigInt> {
    oracle::count_ordered_partitions(n, k).map_err(py_err)
}

#[pyfunction]
fn distribution_by_block_count(n: usize) -> PyResult<BTreeMap<usize, BigInt>> {
    oracle::distribution_by_block_count(n).map_err(py_err)
}

#[pyclass(module = "lahbell", frozen, name = "DobinskiResult")]
pub struct PyDobinskiResult(DobinskiResult);

#[pymethods]
impl PyDobinskiResult {
    /// Decimal expansion of the approximation, truncated.
    #[getter]
    fn approx(&self) -> String {
        self.0.approx.to_string()
    }

    /// The approximation as an exact dyadic rational.
    #[getter]
    fn approx_exact(&self) -> BigRational {
        self.0.approx.to_rational()
    }

    #[getter]
    fn tail_bound(&self) -> BigRational {
        self.0.tail_bound.to_rational()
    }

    #[getter]
    fn rounding_bound(&self) -> BigRational {
        self.0.rounding_bound.to_rational()
    }

    #[getter]
    fn terms_used(&self) -> usize {
        self.0.terms_used
    }

    #[getter]
    fn exact(&self) -> BigRational {
        self.0.exact_reference.clone()
    }

    /// `exact − approx`
    #[getter]
    fn error(&self) -> BigRational {
        self.0.error()
    }

    fn __repr__(&self) -> String {
        format!(
            "DobinskiResult(approx={}, tail_bound={}, terms_used={})",
            self.0.approx.to_decimal(30),
            format_scientific(&self.0.tail_bound.to_rational(), 4),
            self.0.terms_used
        )
    }
}

#[pyfunction]
#[pyo3(signature = (n, x, r = 0, lam = None, eps = None, precision_bits = dobinski::DEFAULT_PRECISION_BITS))]
fn dobinski_eval(
    n: usize,
    x: &Bound<'_, PyAny>,
    r: usize,
    lam: Option<&Bound<'_, PyAny>>,
    eps: Option<&Bound<'_, PyAny>>,
    precision_bits: u32,
) -> PyResult<PyDobinskiResult> {
    let x = to_rational(x)?;
    let lam = lam.map(to_rational).transpose()?;
    let eps = match eps {
        Some(e) => to_rational(e)?,
        None => parse_rational("1e-20").map_err(py_err)?,
    };
    dobinski::dobinski_eval_with_precision(n, r, &x, lam.as_ref(), &eps, precision_bits)
        .map(PyDobinskiResult)
        .map_err(py_err)
}

#[pymodule]
#[pyo3(name = "lahbell")]
pub fn lahbell_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Polynomial>()?;
    m.add_class::<BiPolynomial>()?;
    m.add_class::<PyWeylOp>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyDobinskiResult>()?;
    m.add_function(wrap_pyfunction!(lah, m)?)?;
    m.add_function(wrap_pyfunction!(r_lah, m)?)?;
    m.add_function(wrap_pyfunction!(stirling2, m)?)?;
    m.add_function(wrap_pyfunction!(bell, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_r_lah, m)?)?;
    m.add_function(wrap_pyfunction!(lah_bell_poly, m)?)?;
    m.add_function(wrap_pyfunction!(r_lah_bell_poly, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_r_lah_bell_poly, m)?)?;
    m.add_function(wrap_pyfunction!(defining_relation_check, m)?)?;
    m.add_function(wrap_pyfunction!(spivey_r_check, m)?)?;
    m.add_function(wrap_pyfunction!(spivey_lambda_check, m)?)?;
    m.add_function(wrap_pyfunction!(operator_spivey_check, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(count_ordered_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(distribution_by_block_count, m)?)?;
    m.add_function(wrap_pyfunction!(dobinski_eval, m)?)?;
    Ok(())
}
