//! Python bindings. Matrices, eigenstructures, targets and reports cross the
//! boundary as the same JSON strings the command-line tool reads and writes.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use polycomp::algebra::FieldTag;
use polycomp::feasibility::Theorem;
use polycomp::io::{
    eigenstructure_from_json, eigenstructure_to_json, matrix_from_json, matrix_to_json, target_from_json,
};
use polycomp::realize::oracle::{run_grid, Grid};
use polycomp::realize::SearchBudget;

fn py_err(e: polycomp::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn report_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports always serialize")
}

/// Eigenstructure JSON of a matrix JSON.
#[pyfunction]
pub fn eigenstructure(matrix: &str) -> PyResult<String> {
    let p = matrix_from_json(matrix).map_err(py_err)?;
    let es = polycomp::polymatrix::eigenstructure(&p).map_err(py_err)?;
    Ok(eigenstructure_to_json(&es))
}

/// Feasibility report JSON for adding `add_rows` rows to `matrix`.
#[pyfunction]
#[pyo3(signature = (matrix, add_rows, target, theorem = "full"))]
pub fn check(matrix: &str, add_rows: usize, target: &str, theorem: &str) -> PyResult<String> {
    let theorem: Theorem = theorem.parse().map_err(py_err)?;
    let p = matrix_from_json(matrix).map_err(py_err)?;
    let t = target_from_json(target, add_rows, Some(p.field())).map_err(py_err)?;
    let es = polycomp::polymatrix::eigenstructure(&p).map_err(py_err)?;
    let report = polycomp::feasibility::check(theorem, &es, &t).map_err(py_err)?;
    Ok(report_json(&report))
}

/// Matrix JSON realizing an eigenstructure of degree at most one.
#[pyfunction]
#[pyo3(signature = (target, field = None))]
pub fn realize(target: &str, field: Option<&str>) -> PyResult<String> {
    let field: Option<FieldTag> = field.map(str::parse).transpose().map_err(py_err)?;
    let t = eigenstructure_from_json(target, field).map_err(py_err)?;
    let m = polycomp::realize::realize_low_degree(&t).map_err(py_err)?;
    Ok(matrix_to_json(&m))
}

/// First companion form of a matrix JSON.
#[pyfunction]
pub fn companion_form(matrix: &str) -> PyResult<String> {
    let p = matrix_from_json(matrix).map_err(py_err)?;
    Ok(matrix_to_json(
        &polycomp::polymatrix::companion_form(&p).map_err(py_err)?,
    ))
}

/// Oracle report JSON for a grid such as `"gf2 n=1 m=1 z=1 d=1"`.
#[pyfunction]
#[pyo3(signature = (grid, jobs = None))]
pub fn oracle(py: Python<'_>, grid: &str, jobs: Option<usize>) -> PyResult<String> {
    let grid: Grid = grid.parse().map_err(py_err)?;
    let mut budget = SearchBudget::default();
    if let Some(j) = jobs {
        budget = budget.with_parallel(j);
    }
    let report = py
        .detach(|| run_grid(&grid, &Theorem::COMPLETION, &budget))
        .map_err(py_err)?;
    Ok(report_json(&report))
}

#[pymodule]
#[pyo3(name = "polycomp")]
fn polycomp_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(eigenstructure, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(realize, m)?)?;
    m.add_function(wrap_pyfunction!(companion_form, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    Ok(())
}
