//! Python bindings for the `ariki_koike` engine.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ariki_koike::combinatorics::{self, Multipartition};
use ariki_koike::params::{KappaInput, ParamScheme};
use ariki_koike::{blocks, bn, simples, structure, Error};

fn to_py(err: Error) -> PyErr {
    match err.exit_code() {
        2 => PyRuntimeError::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

#[pyclass(name = "ParamScheme", frozen)]
pub struct PyScheme {
    inner: ParamScheme,
}

#[pymethods]
impl PyScheme {
    /// Parses `e=<int>;class=<c1,..>;shift=<s1,..>`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyScheme {
            inner: text.parse().map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn generic(m: usize) -> Self {
        PyScheme {
            inner: ParamScheme::generic(m),
        }
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn e(&self) -> u64 {
        self.inner.e()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("ParamScheme('{}')", self.inner)
    }
}

#[pyclass(name = "RegimeReport", frozen)]
pub struct PyRegimeReport {
    inner: structure::RegimeReport,
    scheme: ParamScheme,
}

#[pymethods]
impl PyRegimeReport {
    #[getter]
    fn kind(&self) -> String {
        self.inner.kind.to_string()
    }

    #[getter]
    fn irreps(&self) -> usize {
        self.inner.irreps
    }

    #[getter]
    fn simple_count(&self) -> usize {
        self.inner.simple_count
    }

    #[getter]
    fn non_simple(&self) -> Vec<String> {
        self.inner
            .non_simple
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    /// `(i, j, c)` with `i < j` and `u_j = q^c u_i`.
    #[getter]
    fn witness(&self) -> Option<(usize, usize, i64)> {
        self.inner.witness.map(|w| (w.i, w.j, w.c))
    }

    #[getter]
    fn non_kleshchev(&self) -> Option<String> {
        self.inner.non_kleshchev.as_ref().map(ToString::to_string)
    }

    #[getter]
    fn r(&self) -> Option<u64> {
        self.inner.r
    }

    #[getter]
    fn dim_l_chi(&self) -> Option<u128> {
        self.inner.dim_l_chi
    }

    #[getter]
    fn scheme(&self) -> PyScheme {
        PyScheme {
            inner: self.scheme.clone(),
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "RegimeReport(kind={}, simple_count={}, irreps={})",
            self.inner.kind, self.inner.simple_count, self.inner.irreps
        )
    }
}

#[pyclass(name = "BlockStructure", frozen, get_all)]
pub struct PyBlockStructure {
    rank: usize,
    specht_order: Vec<String>,
    simple_order: Vec<String>,
    decomposition: Vec<Vec<u64>>,
    cartan: Vec<Vec<u64>>,
    hom_dims: Vec<Vec<u64>>,
    kz_dims: Vec<u128>,
    exterior_dims: Vec<u128>,
}

fn parse_mp(text: &str) -> PyResult<Multipartition> {
    text.parse().map_err(to_py)
}

#[pyfunction]
fn enumerate_multipartitions(m: usize, n: usize) -> Vec<String> {
    combinatorics::enumerate_multipartitions(m, n)
        .iter()
        .map(ToString::to_string)
        .collect()
}

#[pyfunction]
fn dim_irrep(label: &str) -> PyResult<u128> {
    Ok(combinatorics::dim_irrep(&parse_mp(label)?))
}

#[pyfunction]
fn is_kleshchev(scheme: &PyScheme, label: &str) -> PyResult<bool> {
    let verdict = simples::is_kleshchev(&scheme.inner, &parse_mp(label)?).map_err(to_py)?;
    Ok(verdict.is_kleshchev)
}

/// `(count, labels with D^λ = 0)`.
#[pyfunction]
fn simple_count(scheme: &PyScheme, n: usize) -> (usize, Vec<String>) {
    let (count, rest) = simples::simple_count(&scheme.inner, n);
    (count, rest.iter().map(ToString::to_string).collect())
}

#[pyfunction]
fn ariki_semisimple(scheme: &PyScheme, n: usize) -> bool {
    simples::ariki_semisimple(&scheme.inner, n)
}

#[pyfunction]
fn block_partition(scheme: &PyScheme, n: usize) -> PyResult<Vec<Vec<String>>> {
    let partition = blocks::block_partition(&scheme.inner, n).map_err(to_py)?;
    Ok(partition
        .blocks
        .iter()
        .map(|b| b.iter().map(ToString::to_string).collect())
        .collect())
}

#[pyfunction]
fn classify_regime(scheme: &PyScheme, n: usize) -> PyResult<PyRegimeReport> {
    Ok(PyRegimeReport {
        inner: structure::classify_regime(&scheme.inner, n).map_err(to_py)?,
        scheme: scheme.inner.clone(),
    })
}

/// Accepts `m=..;n=..;kappa00=p/q;kappa=p1/q1,..`.
#[pyfunction]
fn classify_kappa(text: &str) -> PyResult<PyRegimeReport> {
    let k: KappaInput = text.parse().map_err(to_py)?;
    let (scheme, inner) = structure::classify_kappa(&k).map_err(to_py)?;
    Ok(PyRegimeReport { inner, scheme })
}

#[pyfunction]
fn block_structure(report: &PyRegimeReport) -> PyResult<PyBlockStructure> {
    let bs =
        structure::block_structure(&report.inner, &report.scheme, report.inner.n).map_err(to_py)?;
    let labels = |v: &[Multipartition]| v.iter().map(ToString::to_string).collect();
    Ok(PyBlockStructure {
        rank: bs.rank,
        specht_order: labels(&bs.specht_order),
        simple_order: labels(&bs.simple_order),
        decomposition: bs.decomposition,
        cartan: bs.cartan,
        hom_dims: bs.hom_dims,
        kz_dims: bs.kz_dims,
        exterior_dims: bs.exterior_dims,
    })
}

/// `(total, m^n n!)`.
#[pyfunction]
fn hecke_dimension_audit(report: &PyRegimeReport) -> PyResult<(u128, u128)> {
    structure::hecke_dimension_audit(&report.inner, &report.scheme, report.inner.n).map_err(to_py)
}

/// Basis labels and the text export of the structure constants of `B_n`.
#[pyfunction]
fn bn_algebra(n: usize) -> PyResult<(Vec<String>, String)> {
    if n == 0 {
        return Err(PyValueError::new_err("B_n needs n >= 1"));
    }
    let alg = bn::build_bn(n);
    Ok((
        alg.basis().iter().map(ToString::to_string).collect(),
        alg.export_table(),
    ))
}

#[pymodule]
fn ariki_koike_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScheme>()?;
    m.add_class::<PyRegimeReport>()?;
    m.add_class::<PyBlockStructure>()?;
    m.add_function(wrap_pyfunction!(enumerate_multipartitions, m)?)?;
    m.add_function(wrap_pyfunction!(dim_irrep, m)?)?;
    m.add_function(wrap_pyfunction!(is_kleshchev, m)?)?;
    m.add_function(wrap_pyfunction!(simple_count, m)?)?;
    m.add_function(wrap_pyfunction!(ariki_semisimple, m)?)?;
    m.add_function(wrap_pyfunction!(block_partition, m)?)?;
    m.add_function(wrap_pyfunction!(classify_regime, m)?)?;
    m.add_function(wrap_pyfunction!(classify_kappa, m)?)?;
    m.add_function(wrap_pyfunction!(block_structure, m)?)?;
    m.add_function(wrap_pyfunction!(hecke_dimension_audit, m)?)?;
    m.add_function(wrap_pyfunction!(bn_algebra, m)?)?;
    Ok(())
}
