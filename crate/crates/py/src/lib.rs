//! Python bindings: `import wcp`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyList;

use wcp_core::examples::fixtures;
use wcp_core::examples::laws::{check_wdl as core_check_wdl, law};
use wcp_core::examples::miner::{mine_wdl as core_mine_wdl, MinerConfig};
use wcp_core::examples::triples::{iterate_triple, triple_setup, LawTriple};
use wcp_core::iso::build_iso;
use wcp_core::json::{parse_workspace, EntryJson, MatrixJson};
use wcp_core::preunit::build_unital;
use wcp_core::wcp::{build_crossed_product, check_quadruple};
use wcp_core::{split_idempotent as core_split, Error, FMor, FObj, Field, Mat, MonoidData, Report};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn core_err(e: Error) -> PyErr {
    match e {
        Error::Hypothesis { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn field_of(arg: &Bound<'_, PyAny>) -> PyResult<Field> {
    if let Ok(p) = arg.extract::<u64>() {
        return Field::prime(p).map_err(value_err);
    }
    let s: String = arg.extract()?;
    if s.eq_ignore_ascii_case("q") {
        Ok(Field::Rationals)
    } else {
        Err(PyValueError::new_err(format!("field must be 'Q' or a prime, got {s:?}")))
    }
}

fn report_to_py(py: Python<'_>, r: &Report) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(r).map_err(value_err)?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// A dense matrix over ℚ or GF(p).
#[pyclass(module = "wcp", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct Matrix {
    inner: Mat,
}

#[pymethods]
impl Matrix {
    /// `rows` is a list of rows; entries are ints or strings like "3/4".
    #[new]
    fn new(field: &Bound<'_, PyAny>, rows: &Bound<'_, PyList>) -> PyResult<Matrix> {
        let field = field_of(field)?;
        let mut entries = Vec::new();
        let mut cols = None;
        for row in rows.iter() {
            let row = row.cast_into::<PyList>()?;
            if *cols.get_or_insert(row.len()) != row.len() {
                return Err(PyValueError::new_err("rows of different lengths"));
            }
            for x in row.iter() {
                entries.push(match x.extract::<i64>() {
                    Ok(v) => EntryJson::Int(v),
                    Err(_) => EntryJson::Text(x.extract::<String>()?),
                });
            }
        }
        let m = MatrixJson {
            rows: rows.len(),
            cols: cols.unwrap_or(0),
            entries,
        };
        Ok(Matrix {
            inner: m.resolve(field, "").map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn identity(field: &Bound<'_, PyAny>, n: usize) -> PyResult<Matrix> {
        Ok(Matrix {
            inner: Mat::identity(field_of(field)?, n),
        })
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        self.inner.shape()
    }

    #[getter]
    fn field(&self) -> String {
        self.inner.field().to_string()
    }

    /// Entries as strings, row by row.
    fn tolist(&self) -> Vec<Vec<String>> {
        (0..self.inner.rows())
            .map(|r| (0..self.inner.cols()).map(|c| self.inner.get(r, c).to_string()).collect())
            .collect()
    }

    fn rank(&self) -> usize {
        self.inner.rank()
    }

    /// `self∘other`.
    fn compose(&self, other: &Matrix) -> PyResult<Matrix> {
        Ok(Matrix {
            inner: self.inner.compose(&other.inner).map_err(value_err)?,
        })
    }

    /// Kronecker product.
    fn tensor(&self, other: &Matrix) -> PyResult<Matrix> {
        Ok(Matrix {
            inner: self.inner.tensor(&other.inner).map_err(value_err)?,
        })
    }

    fn __eq__(&self, other: &Matrix) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Matrix({}, {:?})", self.inner.field(), self.tolist())
    }
}

/// Splits an idempotent matrix `E` as `(rank, i, p)` with `i∘p = E` and `p∘i = id`.
#[pyfunction]
fn split_idempotent(e: &Matrix) -> PyResult<(usize, Matrix, Matrix)> {
    let s = core_split(&e.inner).map_err(value_err)?;
    Ok((s.rank, Matrix { inner: s.inj }, Matrix { inner: s.proj }))
}

/// A unital algebra given by structure constants.
#[pyclass(module = "wcp", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct Monoid {
    inner: MonoidData,
}

#[pymethods]
impl Monoid {
    /// `unit` is a column vector (dim×1), `mul` is dim×dim².
    #[new]
    fn new(name: &str, unit: &Matrix, mul: &Matrix) -> PyResult<Monoid> {
        Ok(Monoid {
            inner: MonoidData::new(name, unit.inner.clone(), mul.inner.clone()).map_err(core_err)?,
        })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn mul(&self) -> Matrix {
        Matrix {
            inner: self.inner.mul.mat.clone(),
        }
    }

    #[getter]
    fn unit(&self) -> Matrix {
        Matrix {
            inner: self.inner.unit.mat.clone(),
        }
    }

    /// Associativity and unit laws.
    fn check(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        report_to_py(py, &wcp_core::check_monoid(&self.inner).map_err(core_err)?)
    }

    fn __repr__(&self) -> String {
        format!("Monoid({:?}, dim={}, {})", self.inner.name, self.inner.dim(), self.inner.field())
    }
}

/// The data `(A, V, ψ, σ)` of a weak crossed product.
#[pyclass(module = "wcp", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct Quadruple {
    inner: wcp_core::wcp::Quadruple,
}

#[pymethods]
impl Quadruple {
    #[new]
    #[pyo3(signature = (algebra, v_dim, psi, sigma, v_name = "V"))]
    fn new(algebra: &Monoid, v_dim: usize, psi: &Matrix, sigma: &Matrix, v_name: &str) -> PyResult<Quadruple> {
        let q = wcp_core::wcp::Quadruple::new(
            algebra.inner.clone(),
            FObj::named(v_name, v_dim),
            psi.inner.clone(),
            sigma.inner.clone(),
        )
        .map_err(core_err)?;
        Ok(Quadruple { inner: q })
    }

    #[getter]
    fn psi(&self) -> Matrix {
        Matrix {
            inner: self.inner.psi.mat.clone(),
        }
    }

    #[getter]
    fn sigma(&self) -> Matrix {
        Matrix {
            inner: self.inner.sigma.mat.clone(),
        }
    }

    /// Every axiom and derived identity, as a list of dicts.
    fn check(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        report_to_py(py, &check_quadruple(&self.inner).map_err(core_err)?)
    }

    /// Builds `A×V` and returns a dict with `rank`, `product` and `report`. With a
    /// preunit `nu` (a dim(A⊗V)×1 matrix) the product is unital and `unit` is added.
    #[pyo3(signature = (nu = None))]
    fn build(&self, py: Python<'_>, nu: Option<&Matrix>) -> PyResult<Py<PyAny>> {
        let out = pyo3::types::PyDict::new(py);
        match nu {
            Some(nu) => {
                let nu = FMor::new(FObj::unit(), self.inner.av(), nu.inner.clone()).map_err(core_err)?;
                let u = build_unital(&self.inner, &nu).map_err(core_err)?;
                out.set_item("rank", u.cp.rank())?;
                out.set_item("product", Matrix { inner: u.cp.mu_small.mat.clone() })?;
                out.set_item("unit", Matrix { inner: u.unit_small.mat.clone() })?;
                out.set_item("report", report_to_py(py, &u.report)?)?;
            }
            None => {
                let cp = build_crossed_product(&self.inner).map_err(core_err)?;
                out.set_item("rank", cp.rank())?;
                out.set_item("product", Matrix { inner: cp.mu_small.mat.clone() })?;
                out.set_item("report", report_to_py(py, &cp.report)?)?;
            }
        }
        Ok(out.into_any().unbind())
    }
}

/// Three monoids with pairwise laws.
#[pyclass(module = "wcp", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct Triple {
    inner: LawTriple,
}

#[pymethods]
impl Triple {
    /// One of "flip-Q", "flip-GF3", "quantum-plane-GF5", "skew-group-double", "mined-wdl-GF2".
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Triple> {
        fixtures::triples()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, t)| Triple { inner: t })
            .ok_or_else(|| PyValueError::new_err(format!("no fixture named {name:?}")))
    }

    #[staticmethod]
    fn fixture_names() -> Vec<&'static str> {
        fixtures::triples().into_iter().map(|(n, _)| n).collect()
    }

    /// Iterates the triple. Returns `(rank, dim, report)`.
    fn iterate(&self, py: Python<'_>) -> PyResult<(usize, usize, Py<PyAny>)> {
        let res = iterate_triple(&self.inner).map_err(core_err)?;
        let cp = &res.iterated.iterated.cp;
        Ok((cp.rank(), res.setup.avw().dim(), report_to_py(py, &res.report)?))
    }

    /// Compares `(A×V)×W` with `A×(V⊗W)`. Returns `(rank, omega, report)`.
    fn iso(&self, py: Python<'_>) -> PyResult<(usize, Matrix, Py<PyAny>)> {
        let (s, nv, nw) = triple_setup(&self.inner).map_err(core_err)?;
        let b = build_iso(&s, &nv, &nw).map_err(core_err)?;
        Ok((b.image.dim(), Matrix { inner: b.omega.mat.clone() }, report_to_py(py, &b.report)?))
    }
}

/// Weak distributive-law checks for `λ: B⊗A -> A⊗B`.
#[pyfunction]
fn check_wdl(py: Python<'_>, a: &Monoid, b: &Monoid, lam: &Matrix) -> PyResult<Py<PyAny>> {
    let l = law(&a.inner, &b.inner, lam.inner.clone()).map_err(core_err)?;
    report_to_py(py, &core_check_wdl(&a.inner, &b.inner, &l).map_err(core_err)?)
}

/// Weak distributive laws with `∇ ≠ id` between `k^s` and `k^t` over GF(p).
/// Returns a list of `(lambda, nabla_rank)`.
#[pyfunction]
#[pyo3(signature = (p, dims, budget = 100_000, seed = 0, exhaustive = false))]
fn mine_wdl(p: u64, dims: (usize, usize), budget: u64, seed: u64, exhaustive: bool) -> PyResult<Vec<(Matrix, usize)>> {
    let cfg = MinerConfig {
        budget,
        seed,
        exhaustive,
        ..MinerConfig::exhaustive(p, dims)
    };
    let out = core_mine_wdl(&cfg).map_err(core_err)?;
    Ok(out
        .laws
        .into_iter()
        .map(|l| (Matrix { inner: l.lambda.mat }, l.nabla_rank))
        .collect())
}

/// Parses a workspace document and returns the names of its sections' items.
#[pyfunction]
#[pyo3(signature = (text, field = None))]
fn load_workspace(text: &str, field: Option<&Bound<'_, PyAny>>) -> PyResult<Vec<(String, String)>> {
    let field = field.map(field_of).transpose()?;
    let ws = parse_workspace(text, field).map_err(value_err)?;
    let mut out = Vec::new();
    out.extend(ws.monoids.iter().map(|m| ("monoid".to_string(), m.name.clone())));
    out.extend(ws.quadruples.iter().map(|q| ("quadruple".to_string(), q.name.clone())));
    out.extend(ws.setups.iter().map(|s| ("setup".to_string(), s.name.clone())));
    out.extend(ws.laws.iter().map(|l| ("law".to_string(), l.name.clone())));
    out.extend(ws.triples.iter().map(|t| ("triple".to_string(), t.0.clone())));
    out.extend(ws.morphisms.iter().map(|m| ("morphism".to_string(), m.0.clone())));
    Ok(out)
}

#[pymodule]
fn wcp(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Matrix>()?;
    m.add_class::<Monoid>()?;
    m.add_class::<Quadruple>()?;
    m.add_class::<Triple>()?;
    m.add_function(wrap_pyfunction!(split_idempotent, m)?)?;
    m.add_function(wrap_pyfunction!(check_wdl, m)?)?;
    m.add_function(wrap_pyfunction!(mine_wdl, m)?)?;
    m.add_function(wrap_pyfunction!(load_workspace, m)?)?;
    Ok(())
}
