//! Python bindings for `qgrass`.
//!
//! Representations are passed as descriptor strings (`"R3"`, `"P0+I2"`) and
//! dimension vectors as `(e1, e2)` tuples.

use num_bigint::{BigInt, BigUint};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qgrass::cluster::{self, CCInput};
use qgrass::fq::{self, FqMatrixRep};
use qgrass::hom::cell_dimension;
use qgrass::invariants::{self, GrassId};
use qgrass::kron;
use qgrass::quiver::enumerate_fixed_points;
use qgrass::{DimVector, Indecomposable, RepDescriptor};

create_exception!(qgrass_py, QgrassError, PyValueError);

fn err(e: qgrass::Error) -> PyErr {
    QgrassError::new_err(e.to_string())
}

fn indec(s: &str) -> PyResult<Indecomposable> {
    s.parse().map_err(err)
}

fn rep(s: &str) -> PyResult<RepDescriptor> {
    s.parse().map_err(err)
}

fn dim((d1, d2): (usize, usize)) -> DimVector {
    DimVector::new(d1, d2)
}

/// A Laurent polynomial with integer coefficients in `x1, ..., xn`.
#[pyclass(name = "LaurentPoly", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyLaurent(qgrass::LaurentPoly);

#[pymethods]
impl PyLaurent {
    #[new]
    #[pyo3(signature = (text, nvars = None))]
    fn new(text: &str, nvars: Option<usize>) -> PyResult<Self> {
        let p = match nvars {
            Some(n) => qgrass::LaurentPoly::parse(text, n),
            None => text.parse(),
        };
        p.map(PyLaurent).map_err(err)
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.0.nvars()
    }

    /// `[(exponents, coefficient), ...]` in display order.
    fn terms(&self) -> Vec<(Vec<i64>, BigInt)> {
        self.0.terms().map(|(e, c)| (e.clone(), c.clone())).collect()
    }

    fn is_nonnegative(&self) -> bool {
        self.0.is_nonnegative()
    }

    fn coefficient_sum(&self) -> BigInt {
        cluster::coefficient_sum(&self.0)
    }

    /// Re-express in the cluster starting at `x_k`.
    fn in_cluster(&self, k: i64) -> PyResult<Self> {
        cluster::in_cluster(&self.0, k).map(PyLaurent).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly('{}', nvars={})", self.0, self.0.nvars())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __add__(&self, other: &Self) -> Self {
        PyLaurent(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyLaurent(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyLaurent(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        PyLaurent(-&self.0)
    }

    fn __pow__(&self, k: u32, _modulo: Option<Py<PyAny>>) -> Self {
        PyLaurent(self.0.pow(k))
    }

    /// Exact division; raises `QgrassError` when the divisor does not divide.
    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        self.0.exact_div(&other.0).map(PyLaurent).map_err(err)
    }
}

/// Euler form of two dimension vectors.
#[pyfunction]
fn euler_form(x: (usize, usize), y: (usize, usize)) -> i64 {
    kron::euler_form(dim(x), dim(y))
}

#[pyfunction]
fn hom_dim(m: &str, n: &str) -> PyResult<usize> {
    Ok(kron::hom_dim(&rep(m)?, &rep(n)?))
}

#[pyfunction]
fn ext_dim(m: &str, n: &str) -> PyResult<usize> {
    Ok(kron::ext_dim(&rep(m)?, &rep(n)?))
}

/// Poincaré coefficients `[b0, b2, b4, ...]` of `Gr_e(m)`; empty if the variety is empty.
#[pyfunction]
fn poincare(m: &str, e: (usize, usize)) -> PyResult<Vec<u64>> {
    Ok(invariants::poincare(&GrassId::new(indec(m)?, dim(e))).coeffs().to_vec())
}

/// Poincaré coefficients assembled from the cell decomposition.
#[pyfunction]
fn poincare_from_cells(m: &str, e: (usize, usize)) -> PyResult<Vec<u64>> {
    invariants::poincare_from_cells(indec(m)?, dim(e))
        .map(|p| p.coeffs().to_vec())
        .map_err(err)
}

/// Euler characteristic of `Gr_e(m)` for any direct sum `m`.
#[pyfunction]
fn euler_char(m: &str, e: (usize, usize)) -> PyResult<u64> {
    Ok(invariants::euler_char_sum(&rep(m)?, dim(e)))
}

/// Torus-fixed points of `Gr_e(m)` as dicts with index sets, summands and cell dimension.
#[pyfunction]
fn fixed_points<'py>(py: Python<'py>, m: &str, e: (usize, usize)) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let m = indec(m)?;
    enumerate_fixed_points(m, dim(e))
        .iter()
        .map(|fp| {
            let d = PyDict::new(py);
            d.set_item("s1", &fp.s1)?;
            d.set_item("s2", &fp.s2)?;
            let summands: Vec<String> = fp.summands.iter().map(|s| s.to_string()).collect();
            d.set_item("summands", summands)?;
            d.set_item("cell_dimension", cell_dimension(m, fp).map_err(err)?)?;
            Ok(d)
        })
        .collect()
}

/// Strata of `Gr_e(R_n)` by `dim Ext^1(N, R_n/N)`.
#[pyfunction]
fn strata<'py>(py: Python<'py>, n: usize, e: (usize, usize)) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let e = dim(e);
    invariants::strata(n, e)
        .iter()
        .map(|s| {
            let d = PyDict::new(py);
            d.set_item("k", s.k)?;
            d.set_item("n", s.n)?;
            d.set_item("e", (s.e.d1, s.e.d2))?;
            d.set_item("euler_char", s.euler_char())?;
            d.set_item("exact_euler_char", invariants::stratum_euler_exact(n, e, s.k))?;
            d.set_item("poincare", s.poincare().coeffs().to_vec())?;
            Ok(d)
        })
        .collect()
}

/// Number of `F_q`-points of `Gr_e(m)` by subspace enumeration.
#[pyfunction]
#[pyo3(signature = (m, e, q, naive = false))]
fn count_points(m: &str, e: (usize, usize), q: u32, naive: bool) -> PyResult<BigUint> {
    let rep = FqMatrixRep::from_indecomposable(indec(m)?, q).map_err(err)?;
    let count = if naive { fq::count_points_naive(&rep, dim(e)) } else { fq::count_points(&rep, dim(e)) };
    count.map_err(err)
}

/// Cluster variable `x_k` of the Kronecker (`"kronecker"`) or affine A2 (`"affine-a2"`) algebra.
#[pyfunction]
#[pyo3(signature = (k, algebra = "kronecker"))]
fn cluster_variable(k: i64, algebra: &str) -> PyResult<PyLaurent> {
    let p = match algebra {
        "kronecker" => cluster::cluster_var_a11(k),
        "affine-a2" => cluster::cluster_var_a21(k),
        other => return Err(QgrassError::new_err(format!("unknown algebra {other:?}"))),
    };
    p.map(PyLaurent).map_err(err)
}

/// Caldero-Chapoton sum of a direct sum of Kronecker indecomposables.
#[pyfunction]
fn caldero_chapoton(m: &str) -> PyResult<PyLaurent> {
    cluster::cc_map_a11(&CCInput::from_rep(&rep(m)?)).map(PyLaurent).map_err(err)
}

/// `z_n`; `geometric` selects the sum over smooth loci instead of the recurrence.
#[pyfunction]
#[pyo3(signature = (n, geometric = false))]
fn z_n(n: usize, geometric: bool) -> PyResult<PyLaurent> {
    let p = if geometric { cluster::z_n_geometric(n) } else { cluster::z_n_recurrence(n) };
    p.map(PyLaurent).map_err(err)
}

/// `u_n` in the affine A2 cluster algebra.
#[pyfunction]
#[pyo3(signature = (n, geometric = false))]
fn u_n(n: usize, geometric: bool) -> PyResult<PyLaurent> {
    let p = if geometric { cluster::u_n_geometric(n) } else { cluster::u_n_recurrence(n) };
    p.map(PyLaurent).map_err(err)
}

#[pyfunction]
fn s_n(n: i64) -> PyLaurent {
    PyLaurent(cluster::s_n(n))
}

#[pymodule]
fn qgrass_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("QgrassError", m.py().get_type::<QgrassError>())?;
    m.add_class::<PyLaurent>()?;
    m.add_function(wrap_pyfunction!(euler_form, m)?)?;
    m.add_function(wrap_pyfunction!(hom_dim, m)?)?;
    m.add_function(wrap_pyfunction!(ext_dim, m)?)?;
    m.add_function(wrap_pyfunction!(poincare, m)?)?;
    m.add_function(wrap_pyfunction!(poincare_from_cells, m)?)?;
    m.add_function(wrap_pyfunction!(euler_char, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_points, m)?)?;
    m.add_function(wrap_pyfunction!(strata, m)?)?;
    m.add_function(wrap_pyfunction!(count_points, m)?)?;
    m.add_function(wrap_pyfunction!(cluster_variable, m)?)?;
    m.add_function(wrap_pyfunction!(caldero_chapoton, m)?)?;
    m.add_function(wrap_pyfunction!(z_n, m)?)?;
    m.add_function(wrap_pyfunction!(u_n, m)?)?;
    m.add_function(wrap_pyfunction!(s_n, m)?)?;
    Ok(())
}
