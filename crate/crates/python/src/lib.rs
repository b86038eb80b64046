//! Python bindings: groups, coset bitrades, property reports and the
//! family table.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyTuple;

use bitrade::families::Family;
use bitrade::latin::{from_group, from_json, render_text, to_json, GroupTripleInput};
use bitrade::properties::{group_input_of, report, Check, ReportOptions, DEFAULT_MINIMAL_CAP, DEFAULT_PRIMARY_CAP};
use bitrade::search::{search as run_search, SearchFilter, DEFAULT_SEARCH_CAP};
use bitrade::table::{predicted_table, recompute_table};
use bitrade::Error;

create_exception!(pybitrade, BitradeError, PyException);
create_exception!(pybitrade, ValidationError, PyValueError);
create_exception!(pybitrade, ResourceError, BitradeError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Resource { .. } => ResourceError::new_err(e.to_string()),
        Error::Inconsistent(_) | Error::Io(_) => BitradeError::new_err(e.to_string()),
        _ => ValidationError::new_err(e.to_string()),
    }
}

fn loads(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// A finite group given by a spec such as `sym:3`, `alt:4`, `p3:3`,
/// `pq:7,3,2`, `prod:cyc:3,cyc:3` or `gens:4:(1,2,3,4);(1,3)`.
#[pyclass(module = "pybitrade", frozen)]
struct Group {
    inner: bitrade::Group,
}

#[pymethods]
impl Group {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        Ok(Group { inner: spec.parse().map_err(to_py)? })
    }

    fn order(&self) -> PyResult<u128> {
        self.inner.order().map_err(to_py)
    }

    fn elements(&self) -> PyResult<Vec<String>> {
        Ok(self.inner.elements().map_err(to_py)?.iter().map(|e| e.to_string()).collect())
    }

    fn mul(&self, x: &str, y: &str) -> PyResult<String> {
        let (x, y) = (self.parse(x)?, self.parse(y)?);
        Ok(self.inner.mul(&x, &y).map_err(to_py)?.to_string())
    }

    fn inverse(&self, x: &str) -> PyResult<String> {
        Ok(self.inner.inverse(&self.parse(x)?).to_string())
    }

    fn order_of(&self, x: &str) -> PyResult<u64> {
        Ok(self.inner.order_of(&self.parse(x)?))
    }

    fn __repr__(&self) -> String {
        format!("Group('{}')", self.inner)
    }
}

impl Group {
    fn parse(&self, x: &str) -> PyResult<bitrade::Element> {
        self.inner.parse_element(x).map_err(to_py)
    }
}

/// A latin bitrade `(T∘, T⋆)`.
#[pyclass(module = "pybitrade", frozen)]
struct Bitrade {
    inner: bitrade::Bitrade,
}

#[pymethods]
impl Bitrade {
    /// The coset bitrade of `a, b, c` in `group`.
    #[staticmethod]
    fn from_group(group: &Group, a: &str, b: &str, c: &str) -> PyResult<Self> {
        let input = GroupTripleInput::parse(group.inner.clone(), a, b, c).map_err(to_py)?;
        Ok(Bitrade { inner: from_group(&input).map_err(to_py)? })
    }

    /// A family member such as `zp2:p=3`, `p3:p=5`, `pq:p=11,q=5,r=3`
    /// or `alt:m=1`.
    #[staticmethod]
    #[pyo3(signature = (spec, cap = 5_000_000))]
    fn from_family(spec: &str, cap: usize) -> PyResult<Self> {
        let family: Family = spec.parse().map_err(to_py)?;
        let input = family.input(cap).map_err(to_py)?;
        Ok(Bitrade { inner: from_group(&input).map_err(to_py)? })
    }

    /// Two lists of `(row, col, sym)` labels.
    #[staticmethod]
    fn from_triples(circ: Vec<[String; 3]>, star: Vec<[String; 3]>) -> PyResult<Self> {
        Ok(Bitrade { inner: bitrade::Bitrade::from_labels(&circ, &star).map_err(to_py)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Bitrade { inner: from_json(text).map_err(to_py)? })
    }

    fn to_json(&self) -> String {
        to_json(&self.inner)
    }

    /// The two grids side by side.
    fn render(&self) -> PyResult<String> {
        render_text(&self.inner).map_err(to_py)
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn rows(&self) -> Vec<String> {
        self.inner.alphabets().rows.clone()
    }

    #[getter]
    fn cols(&self) -> Vec<String> {
        self.inner.alphabets().cols.clone()
    }

    #[getter]
    fn syms(&self) -> Vec<String> {
        self.inner.alphabets().syms.clone()
    }

    #[getter]
    fn t_circ(&self) -> Vec<[String; 3]> {
        self.inner.circ().label_triples()
    }

    #[getter]
    fn t_star(&self) -> Vec<[String; 3]> {
        self.inner.star().label_triples()
    }

    /// Property report as a dict keyed by property name.
    #[pyo3(signature = (checks = "all", oracle_cap = DEFAULT_MINIMAL_CAP))]
    fn verify(&self, py: Python<'_>, checks: &str, oracle_cap: usize) -> PyResult<Py<PyAny>> {
        let checks = Check::parse_list(checks).map_err(to_py)?;
        let group = group_input_of(&self.inner).map_err(to_py)?;
        let opts = ReportOptions {
            checks,
            minimal_cap: oracle_cap,
            primary_cap: oracle_cap.min(DEFAULT_PRIMARY_CAP),
            ..ReportOptions::default()
        };
        let rep = py.detach(|| report(&self.inner, group.as_ref(), &opts)).map_err(to_py)?;
        loads(py, &rep.to_json())
    }

    fn __len__(&self) -> usize {
        self.inner.size()
    }

    fn __eq__(&self, other: &Bitrade) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        let a = self.inner.alphabets();
        format!("Bitrade(size={}, rows={}, cols={}, syms={})", self.inner.size(), a.rows.len(), a.cols.len(), a.syms.len())
    }
}

/// Predicted size, k and properties of a family member.
#[pyfunction]
fn predict(py: Python<'_>, spec: &str) -> PyResult<Py<PyAny>> {
    let family: Family = spec.parse().map_err(to_py)?;
    let pred = family.predict().map_err(to_py)?;
    loads(py, &serde_json::to_string(&pred).expect("predictions serialize"))
}

/// Rows of the family comparison table for odd `k`.
#[pyfunction]
#[pyo3(signature = (ks = vec![3, 5, 7, 9, 11], recompute = false, build_cap = 100_000))]
fn table(py: Python<'_>, ks: Vec<u64>, recompute: bool, build_cap: usize) -> PyResult<Py<PyAny>> {
    let rows = py
        .detach(|| if recompute { recompute_table(&ks, build_cap, DEFAULT_MINIMAL_CAP) } else { predicted_table(&ks) })
        .map_err(to_py)?;
    loads(py, &serde_json::to_string(&rows).expect("rows serialize"))
}

/// Every `(a, b, (ab)⁻¹)` in `group` passing G1 and G2.
#[pyfunction]
#[pyo3(signature = (group, k = None, generating = false, max_order = DEFAULT_SEARCH_CAP))]
fn search(py: Python<'_>, group: &Group, k: Option<u64>, generating: bool, max_order: usize) -> PyResult<Py<PyAny>> {
    let records = py.detach(|| run_search(&group.inner, &SearchFilter { k, generating }, max_order)).map_err(to_py)?;
    loads(py, &serde_json::to_string(&records).expect("records serialize"))
}

#[pyfunction]
fn pq_thin_predicate(p: u64, q: u64, r: u64) -> bool {
    bitrade::properties::pq_thin_predicate(p, q, r)
}

/// `(i, j)` pairs that make the pq construction fail to be thin.
#[pyfunction]
fn pq_thin_solutions<'py>(py: Python<'py>, p: u64, q: u64, r: u64) -> PyResult<Vec<Bound<'py, PyTuple>>> {
    bitrade::properties::pq_thin_solutions(p, q, r).into_iter().map(|s| PyTuple::new(py, [s.0, s.1])).collect()
}

#[pymodule]
fn pybitrade(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<Bitrade>()?;
    m.add_function(wrap_pyfunction!(predict, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(pq_thin_predicate, m)?)?;
    m.add_function(wrap_pyfunction!(pq_thin_solutions, m)?)?;
    m.add("BitradeError", m.py().get_type::<BitradeError>())?;
    m.add("ValidationError", m.py().get_type::<ValidationError>())?;
    m.add("ResourceError", m.py().get_type::<ResourceError>())?;
    Ok(())
}
