use pyo3::exceptions::{PyKeyError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use modan_core::algebra::Algebra;
use modan_core::checks::{run_checks, Status};
use modan_core::derham::{derham_cohomology, DerKappa};
use modan_core::derivation::{derivation_algebra, module_derivations};
use modan_core::error::Error;
use modan_core::exactlin::{format_scalar, Subspace};
use modan_core::fixtures;
use modan_core::hochschild::hochschild_cohomology;
use modan_core::io::{parse_workspace, workspace_to_json};
use modan_core::module::ModuleOverAlgebra;
use modan_core::multiplier::{module_multipliers, multiplier_algebra};
use modan_core::operators::Carrier;
use modan_core::oracle::{run_oracle, DEFAULT_CAP};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Parse(_) => PyValueError::new_err(e.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn rows(s: &Subspace) -> Vec<Vec<String>> {
    s.basis().iter().map(|v| v.iter().map(format_scalar).collect()).collect()
}

/// An algebra with an optional module over it.
#[pyclass(frozen)]
struct Workspace {
    algebra: Algebra,
    module: Option<ModuleOverAlgebra>,
}

impl Workspace {
    fn need_module(&self) -> PyResult<&ModuleOverAlgebra> {
        self.module.as_ref().ok_or_else(|| PyValueError::new_err("workspace has no module"))
    }

    fn carrier(&self, on: &str) -> PyResult<Carrier> {
        match on {
            "algebra" => Ok(Carrier::Algebra(self.algebra.clone())),
            "module" => Ok(Carrier::Module(self.need_module()?.clone())),
            "auto" => Ok(self.module.clone().map_or_else(|| Carrier::Algebra(self.algebra.clone()), Carrier::Module)),
            other => Err(PyValueError::new_err(format!("unknown carrier {other:?}"))),
        }
    }
}

#[pymethods]
impl Workspace {
    /// Parse a workspace from JSON text.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let ws = parse_workspace(text).map_err(py_err)?;
        Ok(Workspace { algebra: ws.algebra, module: ws.module })
    }

    #[staticmethod]
    fn from_file(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| PyValueError::new_err(format!("{path}: {e}")))?;
        Self::from_json(&text)
    }

    /// One of the built-in examples, by name.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        let (algebra, module) = fixtures::by_name(name).ok_or_else(|| PyKeyError::new_err(name.to_string()))?;
        Ok(Workspace { algebra, module })
    }

    #[getter]
    fn algebra_dim(&self) -> usize {
        self.algebra.dim()
    }

    #[getter]
    fn module_dim(&self) -> Option<usize> {
        self.module.as_ref().map(ModuleOverAlgebra::dim)
    }

    #[getter]
    fn basis_names(&self) -> Vec<String> {
        self.algebra.basis_names().to_vec()
    }

    fn to_json(&self) -> String {
        workspace_to_json(&self.algebra, self.module.as_ref()).to_string()
    }

    /// Basis of the multiplier algebra, as flattened matrices of rational strings.
    fn multipliers(&self) -> Vec<Vec<String>> {
        rows(&multiplier_algebra(&self.algebra))
    }

    fn derivations(&self) -> Vec<Vec<String>> {
        rows(&derivation_algebra(&self.algebra))
    }

    fn module_multipliers(&self) -> PyResult<Vec<Vec<String>>> {
        Ok(rows(&module_multipliers(self.need_module()?)))
    }

    fn module_derivations(&self) -> PyResult<Vec<Vec<String>>> {
        Ok(rows(&module_derivations(self.need_module()?)))
    }

    /// Cohomology dimensions in degrees `0..=qmax`.
    #[pyo3(signature = (qmax = 3, on = "auto"))]
    fn hochschild(&self, qmax: usize, on: &str) -> PyResult<Vec<usize>> {
        let c = self.carrier(on)?;
        Ok(hochschild_cohomology(&c, &c, None, qmax).map_err(py_err)?.h())
    }

    /// `kappa` is `"id"` on the chosen carrier or `"lift"` from the algebra into a free module.
    #[pyo3(signature = (qmax = 3, kappa = "id", on = "auto"))]
    fn derham(&self, qmax: usize, kappa: &str, on: &str) -> PyResult<Vec<usize>> {
        let (u, v, k) = match kappa {
            "id" => {
                let c = self.carrier(on)?;
                let k = DerKappa::identity(&c);
                (c.clone(), c, k)
            }
            "lift" => {
                let m = self.need_module()?;
                (Carrier::Algebra(self.algebra.clone()), Carrier::Module(m.clone()), DerKappa::lift(m).map_err(py_err)?)
            }
            other => return Err(PyValueError::new_err(format!("unknown kappa {other:?}"))),
        };
        Ok(derham_cohomology(&u, &v, &k, qmax).map_err(py_err)?.h())
    }

    /// `(tag, status, detail)` for every registered check.
    #[pyo3(signature = (qmax = 3, seed = 0))]
    fn check(&self, qmax: usize, seed: u64) -> Vec<(String, String, String)> {
        run_checks(&self.algebra, self.module.as_ref(), qmax, seed)
            .entries
            .into_iter()
            .map(|e| {
                let status = match e.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Skipped => "skipped",
                };
                (e.tag, status.to_string(), e.detail)
            })
            .collect()
    }

    /// `(statement, primary, oracle)` dimension pairs.
    #[pyo3(signature = (qmax = 3, cap = DEFAULT_CAP))]
    fn oracle(&self, qmax: usize, cap: usize) -> PyResult<Vec<(String, usize, usize)>> {
        let report = run_oracle(&self.algebra, self.module.as_ref(), qmax, cap).map_err(py_err)?;
        Ok(report.rows.into_iter().map(|r| (r.statement, r.primary, r.oracle)).collect())
    }

    fn __repr__(&self) -> String {
        match &self.module {
            Some(m) => format!("Workspace(algebra={:?}, module={:?})", self.algebra.name(), m.name()),
            None => format!("Workspace(algebra={:?})", self.algebra.name()),
        }
    }
}

#[pyfunction]
fn fixture_names() -> Vec<&'static str> {
    fixtures::NAMES.to_vec()
}

#[pymodule]
fn modan(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Workspace>()?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    Ok(())
}
