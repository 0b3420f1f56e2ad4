use fracdelta::spectral::{default_ablv_radii, default_scan_radii};
use fracdelta::{CVector, Complex64, ComplexMatrix, ContourSpec, Error, FractionalOrder, MatrixSequence};
use pyo3::create_exception;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(fracdelta, NumericError, PyArithmeticError, "Overflow, singular node or insufficient truncation.");

fn to_py(e: Error) -> PyErr {
    if e.is_numeric() {
        NumericError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn order(alpha: f64) -> PyResult<FractionalOrder> {
    FractionalOrder::new(alpha).map_err(to_py)
}

/// Square complex matrix.
#[pyclass(name = "Matrix", module = "fracdelta", frozen, from_py_object)]
#[derive(Clone)]
struct PyMatrix(ComplexMatrix);

#[pymethods]
impl PyMatrix {
    #[new]
    fn new(rows: Vec<Vec<Complex64>>) -> PyResult<Self> {
        ComplexMatrix::from_rows(rows).map(PyMatrix).map_err(to_py)
    }

    #[staticmethod]
    fn identity(dim: usize) -> Self {
        PyMatrix(ComplexMatrix::identity(dim))
    }

    /// Nilpotent matrix with ones on the superdiagonal.
    #[staticmethod]
    fn shift(dim: usize) -> Self {
        PyMatrix(ComplexMatrix::shift(dim))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn rows(&self) -> Vec<Vec<Complex64>> {
        self.0.rows()
    }

    fn frobenius_norm(&self) -> f64 {
        self.0.frobenius_norm()
    }

    fn __matmul__(&self, other: &PyMatrix) -> PyResult<Self> {
        if self.0.dim() != other.0.dim() {
            return Err(PyValueError::new_err("dimension mismatch"));
        }
        Ok(PyMatrix(&self.0 * &other.0))
    }

    fn __getitem__(&self, index: (usize, usize)) -> PyResult<Complex64> {
        let d = self.0.dim();
        if index.0 >= d || index.1 >= d {
            return Err(pyo3::exceptions::PyIndexError::new_err("matrix index out of range"));
        }
        Ok(self.0[index])
    }

    fn __repr__(&self) -> String {
        format!("Matrix({:?})", self.0.rows())
    }
}

fn wrap(seq: MatrixSequence) -> Vec<PyMatrix> {
    seq.into_values().into_iter().map(PyMatrix).collect()
}

fn vector(x: Vec<Complex64>) -> PyResult<CVector> {
    CVector::new(x).map_err(to_py)
}

#[pyfunction]
fn log_gamma(x: f64) -> PyResult<f64> {
    fracdelta::log_gamma(x).map_err(to_py)
}

/// `k(0..=n_max)` for order `alpha`.
#[pyfunction]
fn kernel_k(alpha: f64, n_max: usize) -> PyResult<Vec<f64>> {
    Ok(fracdelta::kernel_k(order(alpha)?, n_max).values)
}

#[pyfunction]
fn delta_alpha(alpha: f64, f: Vec<Complex64>, n: usize) -> PyResult<Complex64> {
    fracdelta::delta_alpha(order(alpha)?, &f, n).map_err(to_py)
}

#[pyfunction]
fn s_alpha_recurrence(t: &PyMatrix, alpha: f64, n_max: usize) -> PyResult<Vec<PyMatrix>> {
    Ok(wrap(fracdelta::s_alpha_recurrence(&t.0, order(alpha)?, n_max)))
}

#[pyfunction]
fn s_alpha_gamma_sum(t: &PyMatrix, alpha: f64, n: usize) -> PyResult<PyMatrix> {
    fracdelta::s_alpha_gamma_sum(&t.0, order(alpha)?, n).map(PyMatrix).map_err(to_py)
}

/// Contour-integral value of `S(n)`; the radius is chosen automatically
/// unless given.
#[pyfunction]
#[pyo3(signature = (t, alpha, n, radius=None, nodes=1024))]
fn s_alpha_contour(t: &PyMatrix, alpha: f64, n: usize, radius: Option<f64>, nodes: usize) -> PyResult<PyMatrix> {
    let alpha = order(alpha)?;
    let spec = match radius {
        Some(r) => ContourSpec::new(r, nodes).map_err(to_py)?,
        None => ContourSpec { nodes, ..fracdelta::choose_contour(&t.0, alpha) },
    };
    fracdelta::s_alpha_contour(&t.0, alpha, n, spec).map(PyMatrix).map_err(to_py)
}

fn vector_sequence(y: Vec<Vec<Complex64>>) -> PyResult<fracdelta::VectorSequence> {
    let values = y.into_iter().map(vector).collect::<PyResult<Vec<_>>>()?;
    fracdelta::VectorSequence::new(values).map_err(to_py)
}

fn unwrap_vectors(u: fracdelta::VectorSequence) -> Vec<Vec<Complex64>> {
    u.into_values().into_iter().map(|v| v.0).collect()
}

/// `u(0..=n_max)` solving `Δ^α u = T u + y` with `u(0) = u0`.
#[pyfunction]
fn solve_frac(
    t: &PyMatrix,
    alpha: f64,
    u0: Vec<Complex64>,
    y: Vec<Vec<Complex64>>,
    n_max: usize,
) -> PyResult<Vec<Vec<Complex64>>> {
    let u = fracdelta::solve_frac(&t.0, order(alpha)?, &vector(u0)?, &vector_sequence(y)?, n_max).map_err(to_py)?;
    Ok(unwrap_vectors(u))
}

#[pyfunction]
fn residual_frac(t: &PyMatrix, alpha: f64, u: Vec<Vec<Complex64>>, y: Vec<Vec<Complex64>>) -> PyResult<Vec<f64>> {
    fracdelta::residual_frac(&t.0, order(alpha)?, &vector_sequence(u)?, &vector_sequence(y)?).map_err(to_py)
}

#[pyfunction]
fn g_symbol(alpha: f64, z: Complex64) -> PyResult<Complex64> {
    fracdelta::g_symbol(order(alpha)?, z).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (t, alpha, grid=4096, exclusion=1e-2, threshold=1e-6))]
fn sigma_condition_check<'py>(
    py: Python<'py>,
    t: &PyMatrix,
    alpha: f64,
    grid: usize,
    exclusion: f64,
    threshold: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let r = fracdelta::sigma_condition_check(&t.0, order(alpha)?, grid, exclusion, threshold).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("verdict", r.verdict)?;
    d.set_item("min_detmag", r.min_detmag)?;
    d.set_item("min_angle", r.min_angle)?;
    d.set_item("threshold", r.threshold)?;
    d.set_item("samples", r.samples)?;
    Ok(d)
}

fn matrices(s: &[PyMatrix]) -> Vec<ComplexMatrix> {
    s.iter().map(|m| m.0.clone()).collect()
}

/// Growth fit of `‖S(n)‖` over `start..=end`.
#[pyfunction]
fn growth_order_fit<'py>(py: Python<'py>, s: Vec<PyMatrix>, start: usize, end: usize) -> PyResult<Bound<'py, PyDict>> {
    let r = fracdelta::growth_order_fit(&matrices(&s), start..=end).map_err(to_py)?;
    let d = PyDict::new(py);
    let class = match r.classification {
        fracdelta::GrowthClass::ExpGrowth => "exp-growth",
        fracdelta::GrowthClass::Polynomial => "polynomial",
        fracdelta::GrowthClass::ExpDecay => "exp-decay",
    };
    d.set_item("classification", class)?;
    d.set_item("nu_hat", r.nu_hat)?;
    d.set_item("nu", r.nu)?;
    d.set_item("weighted_sup", r.weighted_sup)?;
    d.set_item("exp_rate", r.exp_rate)?;
    Ok(d)
}

#[pyfunction]
fn kt_diagnostic<'py>(
    py: Python<'py>,
    s: Vec<PyMatrix>,
    nu: u32,
    start: usize,
    end: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let r = fracdelta::kt_diagnostic(&matrices(&s), nu, start..=end).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("values", r.values)?;
    d.set_item("trend_slope", r.trend_slope)?;
    d.set_item("max_norm", r.max_norm)?;
    Ok(d)
}

/// Blow-up order of the truncated Z-transform of a scalar sequence at `xi0`.
#[pyfunction]
#[pyo3(signature = (x, xi0, n_trunc=None, nu=0, radii=None))]
fn resolvent_scan<'py>(
    py: Python<'py>,
    x: Vec<Complex64>,
    xi0: Complex64,
    n_trunc: Option<usize>,
    nu: u32,
    radii: Option<Vec<f64>>,
) -> PyResult<Bound<'py, PyDict>> {
    let n = n_trunc.unwrap_or(x.len().saturating_sub(1));
    let radii = radii.unwrap_or_else(default_scan_radii);
    let r = fracdelta::resolvent_scan(&x, xi0, &radii, n, nu).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("order_hat", r.order_hat)?;
    d.set_item("is_singular", r.is_singular)?;
    d.set_item("tail_bound", r.tail_bound)?;
    d.set_item("profile", r.profile)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (t, x, xi0, tolerance=1e-8))]
fn ablv_check<'py>(
    py: Python<'py>,
    t: &PyMatrix,
    x: Vec<Complex64>,
    xi0: Complex64,
    tolerance: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let r = fracdelta::ablv_check(&t.0, &vector(x)?, xi0, &default_ablv_radii(), tolerance).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("satisfied", r.satisfied)?;
    d.set_item("limit_estimate", r.limit_estimate)?;
    d.set_item("profile", r.profile)?;
    Ok(d)
}

/// Truncated Z-transform `Σ_{n≤N} x(n) z^{−n}` of a scalar sequence.
#[pyfunction]
#[pyo3(signature = (x, z, n=None))]
fn z_transform(x: Vec<Complex64>, z: Complex64, n: Option<usize>) -> PyResult<Complex64> {
    let n = n.unwrap_or(x.len().saturating_sub(1));
    fracdelta::z_transform_truncated(&x, z, n, None).map(|t| t.value).map_err(to_py)
}

#[pymodule(name = "fracdelta")]
fn fracdelta_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatrix>()?;
    m.add("NumericError", m.py().get_type::<NumericError>())?;
    m.add_function(wrap_pyfunction!(log_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_k, m)?)?;
    m.add_function(wrap_pyfunction!(delta_alpha, m)?)?;
    m.add_function(wrap_pyfunction!(s_alpha_recurrence, m)?)?;
    m.add_function(wrap_pyfunction!(s_alpha_gamma_sum, m)?)?;
    m.add_function(wrap_pyfunction!(s_alpha_contour, m)?)?;
    m.add_function(wrap_pyfunction!(solve_frac, m)?)?;
    m.add_function(wrap_pyfunction!(residual_frac, m)?)?;
    m.add_function(wrap_pyfunction!(g_symbol, m)?)?;
    m.add_function(wrap_pyfunction!(sigma_condition_check, m)?)?;
    m.add_function(wrap_pyfunction!(growth_order_fit, m)?)?;
    m.add_function(wrap_pyfunction!(kt_diagnostic, m)?)?;
    m.add_function(wrap_pyfunction!(resolvent_scan, m)?)?;
    m.add_function(wrap_pyfunction!(ablv_check, m)?)?;
    m.add_function(wrap_pyfunction!(z_transform, m)?)?;
    Ok(())
}
