//! Python bindings: the contour evaluator, the series oracle and the PDE
//! kernels and solvers.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::too_many_arguments)]

use num_complex::Complex64;
use pyo3::exceptions::{PyOverflowError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use wrightfn::oracle::{wright_series, SeriesOptions};
use wrightfn::pde;
use wrightfn::{EvalPoint, ToleranceProfile, WrightOrder};

fn to_py(e: wrightfn::Error) -> PyErr {
    match e {
        wrightfn::Error::Overflow(_) => PyOverflowError::new_err(e.to_string()),
        wrightfn::Error::IterationLimit(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn tolerance(tol: f64) -> PyResult<ToleranceProfile> {
    ToleranceProfile::with_target(tol).map_err(to_py)
}

/// Trapezoidal-rule parameters on the parabola `gamma (1 + iu)^2`.
#[pyclass(frozen, get_all, skip_from_py_object, module = "wrightfn")]
#[derive(Clone)]
pub struct ContourParams {
    n_nodes: usize,
    step: f64,
    gamma: f64,
    c: f64,
    xi: f64,
}

impl From<wrightfn::ContourParams> for ContourParams {
    fn from(p: wrightfn::ContourParams) -> Self {
        Self {
            n_nodes: p.n_nodes,
            step: p.step,
            gamma: p.gamma,
            c: p.c,
            xi: p.xi,
        }
    }
}

#[pymethods]
impl ContourParams {
    fn __repr__(&self) -> String {
        format!(
            "ContourParams(n_nodes={}, step={}, gamma={}, c={}, xi={})",
            self.n_nodes, self.step, self.gamma, self.c, self.xi
        )
    }
}

#[pyclass(frozen, get_all, module = "wrightfn")]
pub struct EvalResult {
    value: Complex64,
    contour: ContourParams,
    est_roundoff: f64,
    warnings: Vec<String>,
}

#[pymethods]
impl EvalResult {
    fn __repr__(&self) -> String {
        format!(
            "EvalResult(value={}, n_nodes={}, est_roundoff={:e})",
            self.value, self.contour.n_nodes, self.est_roundoff
        )
    }
}

#[pyclass(frozen, get_all, module = "wrightfn")]
pub struct SeriesResult {
    value: Complex64,
    terms_used: usize,
    tail_bound: f64,
    rounding_bound: f64,
    converged: bool,
}

#[pymethods]
impl SeriesResult {
    fn __repr__(&self) -> String {
        format!(
            "SeriesResult(value={}, terms_used={}, tail_bound={:e}, converged={})",
            self.value, self.terms_used, self.tail_bound, self.converged
        )
    }
}

fn order(lambda: f64, mu: Complex64) -> PyResult<WrightOrder> {
    WrightOrder::new(lambda, mu).map_err(to_py)
}

/// `t^(mu-1) W_{lambda,mu}(-|x| t^lambda)` by the parabolic contour.
#[pyfunction]
#[pyo3(signature = (lambda_, mu, t, x, tol = ToleranceProfile::DEFAULT_TARGET))]
fn wright_eval(lambda_: f64, mu: Complex64, t: f64, x: f64, tol: f64) -> PyResult<EvalResult> {
    let point = EvalPoint::new(t, x).map_err(to_py)?;
    let r = wrightfn::wright_eval_with(order(lambda_, mu)?, point, &tolerance(tol)?)
        .map_err(to_py)?;
    Ok(EvalResult {
        value: r.value,
        contour: r.contour.into(),
        est_roundoff: r.est_roundoff,
        warnings: r.warnings.iter().map(ToString::to_string).collect(),
    })
}

/// Values only, for a list of `x`. Releases the interpreter while evaluating.
#[pyfunction]
#[pyo3(signature = (lambda_, mu, t, xs, tol = ToleranceProfile::DEFAULT_TARGET))]
fn wright_eval_many(
    py: Python<'_>,
    lambda_: f64,
    mu: Complex64,
    t: f64,
    xs: Vec<f64>,
    tol: f64,
) -> PyResult<Vec<Complex64>> {
    let order = order(lambda_, mu)?;
    let tol = tolerance(tol)?;
    py.detach(|| {
        xs.iter()
            .map(|&x| {
                let point = EvalPoint::new(t, x)?;
                Ok(wrightfn::wright_eval_with(order, point, &tol)?.value)
            })
            .collect::<wrightfn::Result<Vec<_>>>()
    })
    .map_err(to_py)
}

/// `M_nu(z)` for `0 <= nu < 1`, `z >= 0`.
#[pyfunction]
fn mainardi(nu: f64, z: f64) -> PyResult<f64> {
    wrightfn::mainardi_eval(nu, z).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (mu, t, tol = ToleranceProfile::DEFAULT_TARGET))]
fn select_contour(mu: Complex64, t: f64, tol: f64) -> PyResult<ContourParams> {
    wrightfn::select_contour(mu, t, &tolerance(tol)?)
        .map(Into::into)
        .map_err(to_py)
}

/// Double-double power series `sum z^n / (n! Gamma(lambda n + mu))`.
#[pyfunction]
#[pyo3(signature = (lambda_, mu, z, abs_tol = 1e-17, max_terms = 1000))]
fn series(
    lambda_: f64,
    mu: Complex64,
    z: Complex64,
    abs_tol: f64,
    max_terms: usize,
) -> PyResult<SeriesResult> {
    if !(abs_tol > 0.0) || max_terms == 0 {
        return Err(PyValueError::new_err("abs_tol must be positive and max_terms at least 1"));
    }
    let opts = SeriesOptions {
        abs_tol,
        max_terms,
        ..SeriesOptions::default()
    };
    let s = wright_series(order(lambda_, mu)?, z, opts);
    Ok(SeriesResult {
        value: s.value,
        terms_used: s.terms_used,
        tail_bound: s.tail_bound,
        rounding_bound: s.rounding_bound,
        converged: s.converged,
    })
}

#[pyfunction]
fn cauchy_green(nu: f64, d: f64, x: f64, t: f64) -> PyResult<f64> {
    pde::cauchy_green(nu, d, x, t).map_err(to_py)
}

#[pyfunction]
fn cauchy_green_primitive(nu: f64, d: f64, x: f64, t: f64) -> PyResult<f64> {
    pde::cauchy_green_primitive(nu, d, x, t).map_err(to_py)
}

#[pyfunction]
fn signalling_green(nu: f64, d: f64, x: f64, t: f64) -> PyResult<f64> {
    pde::signalling_green(nu, d, x, t).map_err(to_py)
}

/// Solution on the grid `x_min + i dx` of the datum `g` (and velocity `p`
/// when `nu > 1/2`). Returns `(u, warnings)`.
#[pyfunction]
#[pyo3(signature = (nu, d, x_min, dx, g, t, p = None))]
fn cauchy_solve(
    py: Python<'_>,
    nu: f64,
    d: f64,
    x_min: f64,
    dx: f64,
    g: Vec<f64>,
    t: f64,
    p: Option<Vec<f64>>,
) -> PyResult<(Vec<f64>, Vec<String>)> {
    py.detach(|| {
        let g = pde::GridFunction::new(x_min, dx, g)?;
        let p = p.map(|p| pde::GridFunction::new(x_min, dx, p)).transpose()?;
        let sol = pde::cauchy_solve(&pde::CauchyProblem::new(nu, d, g, p)?, t)?;
        let warnings = sol.warnings.iter().map(|w| format!("{w:?}")).collect();
        Ok((sol.u.values().to_vec(), warnings))
    })
    .map_err(to_py)
}

/// `u(x, t)` for each time, with `h` a callable of one float. Returns a list
/// of `(value, error_estimate, converged)`.
#[pyfunction]
#[pyo3(signature = (h, nu, d, x, times, quad_tol = 1e-10))]
fn signalling_solve(
    py: Python<'_>,
    h: Py<PyAny>,
    nu: f64,
    d: f64,
    x: f64,
    times: Vec<f64>,
    quad_tol: f64,
) -> PyResult<Vec<(f64, f64, bool)>> {
    let failure = std::sync::Mutex::new(None::<PyErr>);
    let signal = |s: f64| {
        Python::attach(|py| match h.call1(py, (s,)).and_then(|v| v.extract::<f64>(py)) {
            Ok(v) => v,
            Err(e) => {
                failure.lock().unwrap().get_or_insert(e);
                f64::NAN
            }
        })
    };
    let result = py.detach(|| pde::signalling_solve(signal, nu, d, x, &times, quad_tol));
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    Ok(result
        .map_err(to_py)?
        .into_iter()
        .map(|q| (q.value, q.error_estimate, q.converged))
        .collect())
}

/// Two rods in perfect thermal contact at `x = 0` with a pulse at `rho`.
#[pyclass(frozen, module = "wrightfn")]
pub struct TwoRodConfig(pde::TwoRodConfig);

#[pymethods]
impl TwoRodConfig {
    #[new]
    #[pyo3(signature = (p0 = 1.0, rho = 0.5, a1 = 3.0, a2 = 1.0, k1 = 2.0, k2 = 6.0, alpha = 1.0))]
    fn new(p0: f64, rho: f64, a1: f64, a2: f64, k1: f64, k2: f64, alpha: f64) -> PyResult<Self> {
        pde::TwoRodConfig::new(p0, rho, a1, a2, k1, k2, alpha)
            .map(Self)
            .map_err(to_py)
    }

    #[getter]
    fn alpha(&self) -> f64 {
        self.0.alpha()
    }

    #[getter]
    fn eta(&self) -> f64 {
        self.0.eta()
    }

    #[getter]
    fn nu(&self) -> f64 {
        self.0.nu()
    }

    fn with_alpha(&self, alpha: f64) -> PyResult<Self> {
        self.0.with_alpha(alpha).map(Self).map_err(to_py)
    }

    /// Temperature at `(x, t)`; `x > 0` is rod 1, `x < 0` rod 2.
    fn temperature(&self, x: f64, t: f64) -> PyResult<f64> {
        pde::tworod_solve(&self.0, x, t).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        let c = &self.0;
        format!(
            "TwoRodConfig(p0={}, rho={}, a1={}, a2={}, k1={}, k2={}, alpha={})",
            c.p0(),
            c.rho(),
            c.a1(),
            c.a2(),
            c.k1(),
            c.k2(),
            c.alpha()
        )
    }
}

#[pymodule]
#[pyo3(name = "wrightfn")]
fn wrightfn_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<ContourParams>()?;
    m.add_class::<EvalResult>()?;
    m.add_class::<SeriesResult>()?;
    m.add_class::<TwoRodConfig>()?;
    m.add_function(wrap_pyfunction!(wright_eval, m)?)?;
    m.add_function(wrap_pyfunction!(wright_eval_many, m)?)?;
    m.add_function(wrap_pyfunction!(mainardi, m)?)?;
    m.add_function(wrap_pyfunction!(select_contour, m)?)?;
    m.add_function(wrap_pyfunction!(series, m)?)?;
    m.add_function(wrap_pyfunction!(cauchy_green, m)?)?;
    m.add_function(wrap_pyfunction!(cauchy_green_primitive, m)?)?;
    m.add_function(wrap_pyfunction!(signalling_green, m)?)?;
    m.add_function(wrap_pyfunction!(cauchy_solve, m)?)?;
    m.add_function(wrap_pyfunction!(signalling_solve, m)?)?;
    Ok(())
}
