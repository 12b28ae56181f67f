//! Python module `bicrit`.
//!
//! Rationals cross the boundary as `"p/q"` strings; results come back as
//! plain dicts and lists.

use bicrit_core::exact_search::{solve_budget_binary, solve_budget_parametric};
use bicrit_core::format::{parse_instance, serialize_instance};
use bicrit_core::marathe::{reproduce_example1, reproduce_example2, MaratheOutcome, MaratheTrace};
use bicrit_core::oracle::{exact_opt_budget, exact_pareto};
use bicrit_core::pareto::{approximate_pareto as grid_pareto, extended_pareto, pareto_from_parametric};
use bicrit_core::sweep::{solve_budget_fixed, solve_budget_sweep};
use bicrit_core::types::{format_rational, parse_rational};
use bicrit_core::{BudgetQuery, BudgetSolution, Epsilon, Error, ParetoSet, Rational, SolutionRecord};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

create_exception!(
    bicrit,
    NoCertificateError,
    PyRuntimeError,
    "No record met the relaxed budget."
);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::NoCertificate { .. } => NoCertificateError::new_err(e.to_string()),
        Error::Parse { .. }
        | Error::Validation { .. }
        | Error::InvalidArgument(_)
        | Error::ExactOracleRequired { .. }
        | Error::NotParametricCapable(_) => PyValueError::new_err(e.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn rational(text: &str) -> PyResult<Rational> {
    parse_rational(text).map_err(to_py)
}

fn record<'py>(py: Python<'py>, r: &SolutionRecord) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("token", r.token.clone())?;
    d.set_item("f1", format_rational(&r.image.f1))?;
    d.set_item("f2", format_rational(&r.image.f2))?;
    d.set_item("gamma", r.produced_at.as_ref().map(|w| format_rational(w.value())))?;
    Ok(d)
}

fn records<'py>(py: Python<'py>, rs: &[SolutionRecord]) -> PyResult<Bound<'py, PyList>> {
    let items = rs.iter().map(|r| record(py, r)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn budget_result<'py>(py: Python<'py>, sol: &BudgetSolution) -> PyResult<Bound<'py, PyDict>> {
    let c = &sol.certificate;
    let d = PyDict::new(py);
    d.set_item("solution", record(py, &sol.record)?)?;
    d.set_item("budget_factor", format_rational(&c.budget_factor))?;
    d.set_item("cost_factor", format_rational(&c.cost_factor))?;
    d.set_item("alpha", format_rational(&c.alpha))?;
    d.set_item("oracle_calls", c.oracle_calls)?;
    d.set_item("transcript", records(py, &sol.transcript)?)?;
    Ok(d)
}

fn pareto_result<'py>(py: Python<'py>, set: &ParetoSet) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("records", records(py, &set.records)?)?;
    d.set_item("factor1", format_rational(&set.factor1))?;
    d.set_item("factor2", format_rational(&set.factor2))?;
    d.set_item("oracle_calls", set.oracle_calls)?;
    Ok(d)
}

fn trace_result<'py>(py: Python<'py>, t: &MaratheTrace) -> PyResult<Bound<'py, PyDict>> {
    let tested = PyList::empty(py);
    for p in &t.tested {
        let row = PyDict::new(py);
        row.set_item("d", format_rational(&p.d))?;
        row.set_item("h", format_rational(&p.h))?;
        row.set_item("ratio", p.ratio().as_ref().map(format_rational))?;
        row.set_item("solution", record(py, &p.record)?)?;
        tested.append(row)?;
    }
    let d = PyDict::new(py);
    d.set_item("tested", tested)?;
    match &t.outcome {
        MaratheOutcome::Solution(r) => d.set_item("outcome", record(py, r)?)?,
        MaratheOutcome::NoSolution => d.set_item("outcome", "no-solution")?,
    }
    d.set_item("opt_budget", t.opt_budget.as_ref().map(format_rational))?;
    Ok(d)
}

/// A validated problem instance.
#[pyclass(frozen, module = "bicrit")]
pub struct Instance {
    inner: bicrit_core::Instance,
}

#[pymethods]
impl Instance {
    /// Parses the JSON instance format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Instance {
            inner: parse_instance(text).map_err(to_py)?,
        })
    }

    fn to_json(&self) -> String {
        serialize_instance(&self.inner)
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind()
    }

    #[getter]
    fn nodes(&self) -> usize {
        self.inner.node_count()
    }

    #[getter]
    fn alpha(&self) -> String {
        format_rational(&self.inner.problem().alpha())
    }

    /// Solution images `(f1, f2)` at weight `gamma`.
    fn solve_weighted_sum<'py>(&self, py: Python<'py>, gamma: &str) -> PyResult<Bound<'py, PyDict>> {
        let w = bicrit_core::Weight::new(rational(gamma)?).map_err(to_py)?;
        record(py, &self.inner.problem().solve_weighted_sum(&w).map_err(to_py)?)
    }

    /// The exact Pareto curve by enumeration; small instances only.
    fn exact_pareto<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        records(py, &exact_pareto(self.inner.enumerable()).map_err(to_py)?.records)
    }

    /// Smallest `f2` with `f1 <= budget` by enumeration, or `None`.
    fn exact_opt_budget(&self, budget: &str) -> PyResult<Option<String>> {
        let opt = exact_opt_budget(self.inner.enumerable(), &rational(budget)?).map_err(to_py)?;
        Ok(opt.as_ref().map(format_rational))
    }

    fn __repr__(&self) -> String {
        format!(
            "Instance(kind={:?}, nodes={})",
            self.inner.kind(),
            self.inner.node_count()
        )
    }
}

/// Budget-constrained solve. `algorithm` is one of sweep, binary,
/// parametric, fixed.
#[pyfunction]
#[pyo3(signature = (instance, budget, epsilon = "1", algorithm = "sweep"))]
fn solve_budget<'py>(
    py: Python<'py>,
    instance: &Instance,
    budget: &str,
    epsilon: &str,
    algorithm: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let budget = rational(budget)?;
    let query = BudgetQuery::new(budget.clone(), Epsilon::new(rational(epsilon)?).map_err(to_py)?).map_err(to_py)?;
    let problem = instance.inner.problem();
    let sol = match algorithm {
        "sweep" => solve_budget_sweep(problem, &query),
        "binary" => solve_budget_binary(problem, &query),
        "fixed" => solve_budget_fixed(problem, &budget),
        "parametric" => {
            let p = instance.inner.parametric().map_err(to_py)?;
            solve_budget_parametric(p, &query).map(|r| r.solution)
        }
        other => return Err(PyValueError::new_err(format!("unknown algorithm {other:?}"))),
    };
    budget_result(py, &sol.map_err(to_py)?)
}

/// Approximate Pareto curve. `algorithm` is one of grid, parametric,
/// extended.
#[pyfunction]
#[pyo3(signature = (instance, epsilon = "1", algorithm = "grid"))]
fn approximate_pareto<'py>(
    py: Python<'py>,
    instance: &Instance,
    epsilon: &str,
    algorithm: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let eps = Epsilon::new(rational(epsilon)?).map_err(to_py)?;
    let problem = instance.inner.problem();
    let set = match algorithm {
        "grid" => grid_pareto(problem, &eps),
        "parametric" => pareto_from_parametric(instance.inner.parametric().map_err(to_py)?, &eps),
        "extended" => extended_pareto(problem, &eps),
        other => return Err(PyValueError::new_err(format!("unknown algorithm {other:?}"))),
    };
    pareto_result(py, &set.map_err(to_py)?)
}

/// Runs one of the two counterexamples to the earlier algorithm:
/// "marathe-ex1" or "marathe-ex2".
#[pyfunction]
fn reproduce<'py>(py: Python<'py>, case: &str) -> PyResult<Bound<'py, PyDict>> {
    let trace = match case {
        "marathe-ex1" => reproduce_example1(),
        "marathe-ex2" => reproduce_example2(),
        other => return Err(PyValueError::new_err(format!("unknown case {other:?}"))),
    };
    trace_result(py, &trace.map_err(to_py)?)
}

#[pymodule]
pub fn bicrit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Instance>()?;
    m.add_function(wrap_pyfunction!(solve_budget, m)?)?;
    m.add_function(wrap_pyfunction!(approximate_pareto, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce, m)?)?;
    m.add("NoCertificateError", m.py().get_type::<NoCertificateError>())?;
    Ok(())
}
