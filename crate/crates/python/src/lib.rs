//! Python bindings. Multiplicities come back as Python `int`, so values of
//! any size are exact.

use std::collections::HashMap;

use lrtables::{BigUint, Error, GlWeight, MarginSpec, Partition, SymMarginSpec, TableSpec};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(lrtables, OutsideStableRange, PyValueError);

fn py<T>(result: lrtables::Result<T>) -> PyResult<T> {
    result.map_err(|e| match e {
        Error::OutsideStableRange { .. } => OutsideStableRange::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    })
}

#[pyclass(
    name = "Partition",
    module = "lrtables",
    frozen,
    eq,
    hash,
    ord,
    str,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PyPartition(Partition);

#[pymethods]
impl PyPartition {
    #[new]
    #[pyo3(signature = (parts = Vec::new()))]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        py(Partition::new(parts)).map(PyPartition)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn length(&self) -> usize {
        self.0.length()
    }

    fn conjugate(&self) -> Self {
        PyPartition(self.0.conjugate())
    }

    fn contains(&self, other: PartitionArg) -> PyResult<bool> {
        Ok(self.0.contains(&other.try_into_inner()?))
    }

    fn __len__(&self) -> usize {
        self.0.length()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }
}

impl std::fmt::Display for PyPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Accepts a `Partition` or any sequence of nonnegative integers.
#[derive(FromPyObject)]
enum PartitionArg {
    Obj(PyPartition),
    Parts(Vec<usize>),
}

impl PartitionArg {
    fn try_into_inner(self) -> PyResult<Partition> {
        match self {
            PartitionArg::Obj(p) => Ok(p.0),
            PartitionArg::Parts(v) => py(Partition::new(v)),
        }
    }
}

fn partitions(args: Vec<PartitionArg>) -> PyResult<Vec<Partition>> {
    args.into_iter().map(PartitionArg::try_into_inner).collect()
}

#[pyclass(
    name = "GlWeight",
    module = "lrtables",
    frozen,
    eq,
    hash,
    str,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyGlWeight(GlWeight);

#[pymethods]
impl PyGlWeight {
    /// From a weakly decreasing integer tuple such as `(2, 0, 0, -1)`.
    #[new]
    fn new(tuple: Vec<i64>) -> PyResult<Self> {
        if tuple.is_empty() {
            return Err(PyValueError::new_err("a weight needs at least one entry"));
        }
        py(lrtables::split(&tuple)).map(PyGlWeight)
    }

    #[staticmethod]
    fn from_parts(plus: PartitionArg, minus: PartitionArg, n: usize) -> PyResult<Self> {
        py(GlWeight::new(
            plus.try_into_inner()?,
            minus.try_into_inner()?,
            n,
        ))
        .map(PyGlWeight)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        py(text.parse()).map(PyGlWeight)
    }

    #[getter]
    fn plus(&self) -> PyPartition {
        PyPartition(self.0.plus().clone())
    }

    #[getter]
    fn minus(&self) -> PyPartition {
        PyPartition(self.0.minus().clone())
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn to_tuple(&self) -> Vec<i64> {
        self.0.to_tuple()
    }

    fn dual(&self) -> Self {
        PyGlWeight(self.0.dual())
    }

    fn twist(&self, k: i64) -> Self {
        PyGlWeight(self.0.twist(k))
    }

    fn __repr__(&self) -> String {
        format!("GlWeight({})", self.0)
    }
}

impl std::fmt::Display for PyGlWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(FromPyObject)]
enum WeightArg {
    Obj(PyGlWeight),
    Tuple(Vec<i64>),
}

impl WeightArg {
    fn into_inner(self) -> PyResult<GlWeight> {
        match self {
            WeightArg::Obj(w) => Ok(w.0),
            WeightArg::Tuple(t) => PyGlWeight::new(t).map(|w| w.0),
        }
    }
}

fn margin_spec(weights: Vec<WeightArg>) -> PyResult<MarginSpec> {
    let weights = weights
        .into_iter()
        .map(WeightArg::into_inner)
        .collect::<PyResult<Vec<_>>>()?;
    py(MarginSpec::new(weights))
}

fn sym_spec(margins: Vec<PartitionArg>, n: Option<usize>) -> PyResult<SymMarginSpec> {
    let parts = partitions(margins)?;
    let n = n.unwrap_or_else(|| (2 * parts.iter().map(Partition::length).sum::<usize>()).max(1));
    py(SymMarginSpec::new(parts, n))
}

/// `c^λ_{μν}`.
#[pyfunction]
fn lr_coefficient(lam: PartitionArg, mu: PartitionArg, nu: PartitionArg) -> PyResult<BigUint> {
    Ok(lrtables::lr_coefficient(
        &lam.try_into_inner()?,
        &mu.try_into_inner()?,
        &nu.try_into_inner()?,
    ))
}

/// Multiplicity of `s_target` in the product of the factors.
#[pyfunction]
fn multi_lr(
    py_: Python<'_>,
    target: PartitionArg,
    factors: Vec<PartitionArg>,
) -> PyResult<BigUint> {
    let target = target.try_into_inner()?;
    let factors = partitions(factors)?;
    Ok(py_.detach(|| lrtables::multi_lr(&target, &factors)))
}

/// `s_μ · s_ν` as a dict from `Partition` to coefficient.
#[pyfunction]
#[pyo3(signature = (mu, nu, max_length = None))]
fn schur_product(
    mu: PartitionArg,
    nu: PartitionArg,
    max_length: Option<usize>,
) -> PyResult<HashMap<PyPartition, BigUint>> {
    let product = lrtables::schur_product(&mu.try_into_inner()?, &nu.try_into_inner()?, max_length);
    Ok(product
        .into_iter()
        .map(|(p, c)| (PyPartition(p), c))
        .collect())
}

/// Dimension of `GL_n` invariants in the tensor product of the weights.
#[pyfunction]
fn lrc_zero(py_: Python<'_>, weights: Vec<WeightArg>) -> PyResult<BigUint> {
    let m = margin_spec(weights)?;
    py(py_.detach(|| lrtables::lrc_zero(&m)))
}

/// Multiplicity of `target` in the tensor product of the weights.
#[pyfunction]
fn lrc_general(py_: Python<'_>, target: WeightArg, weights: Vec<WeightArg>) -> PyResult<BigUint> {
    let target = target.into_inner()?;
    let m = margin_spec(weights)?;
    py(py_.detach(|| lrtables::lrc_general(&target, &m)))
}

#[pyfunction]
fn hom_dimension(
    py_: Python<'_>,
    sources: Vec<PartitionArg>,
    targets: Vec<PartitionArg>,
    n: usize,
) -> PyResult<BigUint> {
    let (s, t) = (partitions(sources)?, partitions(targets)?);
    py(py_.detach(|| lrtables::hom_dimension(&s, &t, n)))
}

/// Hollow LR-contingency tables with nonzero norm, as `(rows, norm)` pairs.
#[pyfunction]
fn enumerate_lrct(weights: Vec<WeightArg>) -> PyResult<Vec<(Vec<Vec<PyPartition>>, BigUint)>> {
    let m = margin_spec(weights)?;
    if !m.in_stable_range() {
        return py(Err(Error::OutsideStableRange {
            n: m.rank(),
            threshold: m.stable_threshold(),
            group: None,
        }));
    }
    Ok(lrtables::enumerate_lrct(&m, true)
        .map(|(t, norm)| {
            let rows = t
                .rows()
                .into_iter()
                .map(|row| row.into_iter().map(PyPartition).collect())
                .collect();
            (rows, norm)
        })
        .collect())
}

/// `O_n` / `Sp_2n` invariants. `n` defaults to the stable threshold and
/// `group` ("o" or "sp") only affects error messages.
#[pyfunction]
#[pyo3(signature = (margins, n = None, group = "o"))]
fn osp_invariant_dim(
    py_: Python<'_>,
    margins: Vec<PartitionArg>,
    n: Option<usize>,
    group: &str,
) -> PyResult<BigUint> {
    let m = sym_spec(margins, n)?;
    match group {
        "o" => py(py_.detach(|| lrtables::o_invariant_dim(&m))),
        "sp" => py(py_.detach(|| lrtables::sp_invariant_dim(&m))),
        other => Err(PyValueError::new_err(format!(
            "group must be 'o' or 'sp', got {other:?}"
        ))),
    }
}

#[pyfunction]
#[pyo3(signature = (rows, cols = None, hollow = false, symmetric = false, cap = None))]
fn count_tables(
    rows: Vec<usize>,
    cols: Option<Vec<usize>>,
    hollow: bool,
    symmetric: bool,
    cap: Option<usize>,
) -> PyResult<BigUint> {
    let spec = if symmetric {
        if cols.as_ref().is_some_and(|c| c != &rows) {
            return Err(PyValueError::new_err("symmetric tables need equal margins"));
        }
        TableSpec::symmetric(rows)
    } else {
        let cols = cols.unwrap_or_else(|| rows.clone());
        TableSpec::new(rows, cols)
    };
    Ok(lrtables::count_tables(&spec.hollow(hollow).with_cap(cap)))
}

#[pyfunction]
fn oracle_gl_invariants(py_: Python<'_>, weights: Vec<WeightArg>) -> PyResult<BigUint> {
    let m = margin_spec(weights)?;
    Ok(py_.detach(|| lrtables::oracle_gl_invariants(&m)))
}

#[pyfunction]
#[pyo3(signature = (margins, n = None))]
fn oracle_osp_invariants(
    py_: Python<'_>,
    margins: Vec<PartitionArg>,
    n: Option<usize>,
) -> PyResult<BigUint> {
    let m = sym_spec(margins, n)?;
    py(py_.detach(|| lrtables::oracle_osp_invariants(&m)))
}

#[pyfunction]
fn hook_identity_check(py_: Python<'_>, r: usize, s: usize) -> PyResult<bool> {
    py(py_.detach(|| lrtables::hook_identity_check(r, s)))
}

#[pymodule]
#[pyo3(name = "lrtables")]
fn lrtables_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyGlWeight>()?;
    m.add(
        "OutsideStableRange",
        m.py().get_type::<OutsideStableRange>(),
    )?;
    m.add_function(wrap_pyfunction!(lr_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(multi_lr, m)?)?;
    m.add_function(wrap_pyfunction!(schur_product, m)?)?;
    m.add_function(wrap_pyfunction!(lrc_zero, m)?)?;
    m.add_function(wrap_pyfunction!(lrc_general, m)?)?;
    m.add_function(wrap_pyfunction!(hom_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_lrct, m)?)?;
    m.add_function(wrap_pyfunction!(osp_invariant_dim, m)?)?;
    m.add_function(wrap_pyfunction!(count_tables, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_gl_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_osp_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(hook_identity_check, m)?)?;
    Ok(())
}
