//! Python bindings: thin wrappers over the core types plus the module-level
//! maps and checks. Domain errors surface as `ValueError` carrying the core
//! error message.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use riggedpaths::rigged::RiggedRow;
use riggedpaths::{identity, kkr, paths, tableaux};

fn value_error(err: riggedpaths::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// A 0/1 lattice word.
#[pyclass(name = "LatticeWord", frozen, eq)]
#[derive(PartialEq)]
struct PyLatticeWord {
    inner: riggedpaths::LatticeWord,
}

#[pymethods]
impl PyLatticeWord {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let inner = text.parse().map_err(value_error)?;
        Ok(PyLatticeWord { inner })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LatticeWord(\"{}\")", self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn heights(&self) -> Vec<usize> {
        self.inner.heights().heights().to_vec()
    }

    fn max_height(&self) -> usize {
        self.inner.max_height()
    }

    fn is_vacuum(&self) -> bool {
        self.inner.is_vacuum()
    }

    fn energy_h(&self) -> u64 {
        self.inner.energy_h()
    }

    fn energy_e(&self) -> PyResult<u64> {
        self.inner.energy_e().map_err(value_error)
    }

    fn reverse_complement(&self) -> PyResult<Self> {
        let inner = self.inner.reverse_complement().map_err(value_error)?;
        Ok(PyLatticeWord { inner })
    }

    fn to_tableau(&self) -> PyResult<PyStandardTableau> {
        let inner = tableaux::tableau_from_word(self.inner.letters()).map_err(value_error)?;
        Ok(PyStandardTableau { inner })
    }

    fn to_rigged(&self, level: usize) -> PyResult<PyRiggedConfiguration> {
        let inner = kkr::kkr_insert(&self.inner, level).map_err(value_error)?;
        Ok(PyRiggedConfiguration { inner })
    }
}

/// A standard Young tableau.
#[pyclass(name = "StandardTableau", frozen, eq)]
#[derive(PartialEq)]
struct PyStandardTableau {
    inner: riggedpaths::StandardTableau,
}

#[pymethods]
impl PyStandardTableau {
    #[new]
    fn new(rows: Vec<Vec<usize>>) -> PyResult<Self> {
        let inner = riggedpaths::StandardTableau::new(rows).map_err(value_error)?;
        Ok(PyStandardTableau { inner })
    }

    fn __repr__(&self) -> String {
        format!("StandardTableau({:?})", self.inner.rows())
    }

    fn rows(&self) -> Vec<Vec<usize>> {
        self.inner.rows().to_vec()
    }

    fn shape(&self) -> Vec<usize> {
        self.inner.shape()
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn thomas_p(&self) -> u64 {
        self.inner.thomas_p()
    }

    fn charge(&self) -> u64 {
        self.inner.charge()
    }

    fn evacuation(&self) -> Self {
        PyStandardTableau {
            inner: self.inner.evacuation(),
        }
    }

    fn to_word(&self) -> PyResult<PyLatticeWord> {
        let letters = tableaux::word_from_tableau(&self.inner);
        let inner = riggedpaths::LatticeWord::new(letters).map_err(value_error)?;
        Ok(PyLatticeWord { inner })
    }
}

/// A rigged configuration: rows of (length, rigging) at a level and size.
#[pyclass(name = "RiggedConfiguration", frozen, eq)]
#[derive(PartialEq)]
struct PyRiggedConfiguration {
    inner: riggedpaths::RiggedConfiguration,
}

#[pymethods]
impl PyRiggedConfiguration {
    #[new]
    fn new(level: usize, size: usize, rows: Vec<(usize, u64)>) -> PyResult<Self> {
        let rows = rows
            .into_iter()
            .map(|(length, rigging)| RiggedRow { length, rigging })
            .collect();
        let inner = riggedpaths::RiggedConfiguration::new(level, size, rows).map_err(value_error)?;
        Ok(PyRiggedConfiguration { inner })
    }

    fn __repr__(&self) -> String {
        format!("RiggedConfiguration.from_json('{}')", self.to_json())
    }

    fn level(&self) -> usize {
        self.inner.level()
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn rows(&self) -> Vec<(usize, u64)> {
        self.inner
            .rows()
            .iter()
            .map(|row| (row.length, row.rigging))
            .collect()
    }

    fn vacancies(&self) -> Vec<i64> {
        self.inner.content().vacancies(self.inner.size())
    }

    fn is_admissible(&self) -> bool {
        self.inner.is_admissible()
    }

    fn momentum(&self) -> PyResult<u64> {
        self.inner.momentum().map_err(value_error)
    }

    fn takahashi(&self) -> PyResult<Vec<String>> {
        let numbers = self.inner.takahashi().map_err(value_error)?;
        Ok(numbers.iter().map(|n| n.to_string()).collect())
    }

    fn sigma(&self) -> PyResult<Self> {
        let inner = self.inner.sigma().map_err(value_error)?;
        Ok(PyRiggedConfiguration { inner })
    }

    fn to_word(&self) -> PyResult<PyLatticeWord> {
        let inner = kkr::kkr_ramify(&self.inner).map_err(value_error)?;
        Ok(PyLatticeWord { inner })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("configurations serialize")
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner: riggedpaths::RiggedConfiguration =
            serde_json::from_str(text).map_err(|err| PyValueError::new_err(err.to_string()))?;
        Ok(PyRiggedConfiguration { inner })
    }
}

#[pyfunction]
fn enumerate_paths(level: usize, length: usize) -> Vec<PyLatticeWord> {
    paths::enumerate_paths(level, length)
        .into_iter()
        .map(|inner| PyLatticeWord { inner })
        .collect()
}

#[pyfunction]
fn enumerate_rcs(level: usize, length: usize) -> Vec<PyRiggedConfiguration> {
    riggedpaths::rigged::enumerate_rcs(level, length)
        .into_iter()
        .map(|inner| PyRiggedConfiguration { inner })
        .collect()
}

#[pyfunction]
fn bosonic_polynomial(level: usize, length: usize) -> Vec<i64> {
    paths::bosonic_polynomial(level, length).coeffs().to_vec()
}

#[pyfunction]
fn fermionic_polynomial(level: usize, length: usize) -> PyResult<Vec<i64>> {
    let poly = identity::fermionic_polynomial(level, length).map_err(value_error)?;
    Ok(poly.coeffs().to_vec())
}

#[pyfunction]
fn bose_fermi_equal(level: usize, length: usize) -> PyResult<bool> {
    let report = identity::bose_fermi_check(level, length).map_err(value_error)?;
    Ok(report.equal)
}

#[pyfunction]
fn statistic_transport_check(level: usize, length: usize) -> bool {
    identity::statistic_transport_check(level, length)
}

#[pyfunction]
fn bijection_roundtrip_check(level: usize, length: usize) -> bool {
    identity::bijection_roundtrip_check(level, length)
}

#[pymodule]
pub fn riggedpaths_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLatticeWord>()?;
    m.add_class::<PyStandardTableau>()?;
    m.add_class::<PyRiggedConfiguration>()?;
    m.add_function(wrap_pyfunction!(enumerate_paths, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_rcs, m)?)?;
    m.add_function(wrap_pyfunction!(bosonic_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(fermionic_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(bose_fermi_equal, m)?)?;
    m.add_function(wrap_pyfunction!(statistic_transport_check, m)?)?;
    m.add_function(wrap_pyfunction!(bijection_roundtrip_check, m)?)?;
    Ok(())
}
