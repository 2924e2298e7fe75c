//! Python bindings for the zakgabor core library.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use zakgabor_core::frame_analysis::{self, AnalysisOptions};
use zakgabor_core::report::{run_analyze, ProblemSpec};
use zakgabor_core::window_construction::{construct_windows, make_parseval_windows};
use zakgabor_core::{admissibility, arithmetic, oracle, periodic_set, zak};
use zakgabor_core::{FiniteSignal, ThetaGrid};

fn err(e: zakgabor_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An NZ-periodic subset of the integers.
#[pyclass(name = "PeriodicSet", skip_from_py_object)]
#[derive(Clone)]
struct PyPeriodicSet {
    inner: periodic_set::PeriodicSet,
}

#[pymethods]
impl PyPeriodicSet {
    #[new]
    fn new(period: i64, residues: Vec<i64>) -> PyResult<Self> {
        if period < 1 {
            return Err(PyValueError::new_err("period must be >= 1"));
        }
        let inner = periodic_set::PeriodicSet::new(period, &residues).map_err(err)?;
        Ok(Self { inner })
    }

    /// The full set Z (period 1).
    #[staticmethod]
    fn integers() -> Self {
        Self { inner: periodic_set::PeriodicSet::integers() }
    }

    #[getter]
    fn period(&self) -> i64 {
        self.inner.period()
    }

    #[getter]
    fn residues(&self) -> Vec<i64> {
        self.inner.residues().to_vec()
    }

    fn contains(&self, j: i64) -> bool {
        self.inner.contains(j)
    }

    fn __contains__(&self, j: i64) -> bool {
        self.inner.contains(j)
    }

    fn __repr__(&self) -> String {
        format!("PeriodicSet(period={}, residues={:?})", self.inner.period(), self.inner.residues())
    }
}

/// Lattice parameters (L, M, N) with the derived (p, q).
#[pyclass(name = "GaborParams", skip_from_py_object)]
#[derive(Clone)]
struct PyGaborParams {
    inner: arithmetic::GaborParams,
}

#[pymethods]
impl PyGaborParams {
    #[getter]
    fn window_count(&self) -> i64 {
        self.inner.window_count
    }

    #[getter]
    fn modulation_count(&self) -> i64 {
        self.inner.modulation_count
    }

    #[getter]
    fn translation_step(&self) -> i64 {
        self.inner.translation_step
    }

    #[getter]
    fn p(&self) -> i64 {
        self.inner.p
    }

    #[getter]
    fn q(&self) -> i64 {
        self.inner.q
    }

    #[getter]
    fn m_over_q(&self) -> i64 {
        self.inner.m_over_q
    }

    #[getter]
    fn zak_period(&self) -> i64 {
        self.inner.zak_period()
    }

    fn __repr__(&self) -> String {
        format!(
            "GaborParams(L={}, M={}, N={}, p={}, q={})",
            self.inner.window_count,
            self.inner.modulation_count,
            self.inner.translation_step,
            self.inner.p,
            self.inner.q,
        )
    }
}

/// A finitely supported window (complex sequence on Z).
#[pyclass(name = "Window", from_py_object)]
#[derive(Clone)]
struct PyWindow {
    inner: FiniteSignal,
}

#[pymethods]
impl PyWindow {
    #[new]
    fn new(support: Vec<i64>, values: Vec<Complex64>) -> PyResult<Self> {
        if support.len() != values.len() {
            return Err(PyValueError::new_err("support and values must have equal length"));
        }
        Ok(Self { inner: FiniteSignal::from_pairs(support.into_iter().zip(values)) })
    }

    /// Characteristic function of a finite set.
    #[staticmethod]
    fn indicator(support: Vec<i64>) -> Self {
        Self { inner: FiniteSignal::indicator(&support) }
    }

    #[getter]
    fn support(&self) -> Vec<i64> {
        self.inner.support().collect()
    }

    #[getter]
    fn values(&self) -> Vec<Complex64> {
        self.inner.iter().map(|(_, v)| v).collect()
    }

    fn norm_sqr(&self) -> f64 {
        self.inner.norm_sqr()
    }

    fn __len__(&self) -> usize {
        self.inner.support().count()
    }

    fn __repr__(&self) -> String {
        format!("Window(support={:?})", self.support())
    }
}

/// Frame classification with optimal bounds.
#[pyclass(name = "FrameVerdict")]
struct PyFrameVerdict {
    inner: frame_analysis::FrameVerdict,
}

#[pymethods]
impl PyFrameVerdict {
    #[getter]
    fn complete(&self) -> bool {
        self.inner.complete
    }

    #[getter]
    fn is_frame(&self) -> bool {
        self.inner.is_frame
    }

    #[getter]
    fn lower_bound(&self) -> f64 {
        self.inner.lower_bound
    }

    #[getter]
    fn upper_bound(&self) -> f64 {
        self.inner.upper_bound
    }

    #[getter]
    fn is_parseval(&self) -> bool {
        self.inner.is_parseval
    }

    #[getter]
    fn is_riesz(&self) -> bool {
        self.inner.is_riesz
    }

    #[getter]
    fn is_onb(&self) -> bool {
        self.inner.is_onb
    }

    fn __repr__(&self) -> String {
        format!(
            "FrameVerdict(complete={}, is_frame={}, A={}, B={}, parseval={}, riesz={}, onb={})",
            self.inner.complete,
            self.inner.is_frame,
            self.inner.lower_bound,
            self.inner.upper_bound,
            self.inner.is_parseval,
            self.inner.is_riesz,
            self.inner.is_onb,
        )
    }
}

fn unwrap_windows(windows: &[PyWindow]) -> Vec<FiniteSignal> {
    windows.iter().map(|w| w.inner.clone()).collect()
}

fn options(grid: usize, rank_tol: f64, parseval_tol: f64) -> AnalysisOptions {
    AnalysisOptions {
        grid: ThetaGrid::new(grid.max(1)),
        rank_tol,
        parseval_tol,
        ..AnalysisOptions::default()
    }
}

/// Derive (p, q, M/q) from (L, M, N).
#[pyfunction]
fn derive_params(l: i64, m: i64, n: i64) -> PyResult<PyGaborParams> {
    if l < 1 || m < 1 || n < 1 {
        return Err(PyValueError::new_err("L, M, N must all be >= 1"));
    }
    Ok(PyGaborParams { inner: arithmetic::derive_params(l, m, n) })
}

/// The set K_j = { k in N_p : j + kM in S }.
#[pyfunction]
fn kappa_set(set: &PyPeriodicSet, params: &PyGaborParams, j: i64) -> Vec<i64> {
    periodic_set::kappa_set(&set.inner, &params.inner, j).members
}

/// Discrete Zak transform z_K f(j, theta).
#[pyfunction]
fn zak_eval(window: &PyWindow, period: i64, j: i64, theta: f64) -> PyResult<Complex64> {
    if period < 1 {
        return Err(PyValueError::new_err("period must be >= 1"));
    }
    Ok(zak::zak_eval(&window.inner, period, j, theta))
}

/// True iff some L-window Gabor frame exists for these parameters.
#[pyfunction]
fn admits_frame(set: &PyPeriodicSet, params: &PyGaborParams) -> bool {
    admissibility::admits_frame(&set.inner, &params.inner)
}

/// True iff a Riesz basis / ONB is possible: card(K_j) = qL for all j.
#[pyfunction]
fn admits_riesz_onb(set: &PyPeriodicSet, params: &PyGaborParams) -> bool {
    admissibility::admits_riesz_onb(&set.inner, &params.inner)
}

/// Optimal frame bounds (A, B) from the Zak-domain eigenvalue sweep.
#[pyfunction]
#[pyo3(signature = (windows, set, params, grid=256))]
fn frame_bounds(
    windows: Vec<PyWindow>,
    set: &PyPeriodicSet,
    params: &PyGaborParams,
    grid: usize,
) -> PyResult<(f64, f64)> {
    let (a, b, _) = frame_analysis::frame_bounds(
        &unwrap_windows(&windows),
        &set.inner,
        &params.inner,
        ThetaGrid::new(grid.max(1)),
    )
    .map_err(err)?;
    Ok((a, b))
}

/// Full classification: complete / frame / Parseval / Riesz / ONB.
#[pyfunction]
#[pyo3(signature = (windows, set, params, grid=256, rank_tol=1e-10, parseval_tol=1e-9))]
fn classify(
    windows: Vec<PyWindow>,
    set: &PyPeriodicSet,
    params: &PyGaborParams,
    grid: usize,
    rank_tol: f64,
    parseval_tol: f64,
) -> PyResult<PyFrameVerdict> {
    let verdict = frame_analysis::classify(
        &unwrap_windows(&windows),
        &set.inner,
        &params.inner,
        &options(grid, rank_tol, parseval_tol),
    )
    .map_err(err)?;
    Ok(PyFrameVerdict { inner: verdict })
}

/// Construct windows that make the Gabor system a Parseval frame.
#[pyfunction]
fn construct_parseval_windows(
    set: &PyPeriodicSet,
    params: &PyGaborParams,
) -> PyResult<Vec<PyWindow>> {
    let wc = construct_windows(&set.inner, &params.inner).map_err(err)?;
    Ok(make_parseval_windows(&wc, params.inner.modulation_count)
        .into_iter()
        .map(|inner| PyWindow { inner })
        .collect())
}

/// Brute-force truncated frame-operator bounds (A_est, B_est).
#[pyfunction]
#[pyo3(signature = (windows, set, params, n_max=32))]
fn truncated_frame_bounds(
    windows: Vec<PyWindow>,
    set: &PyPeriodicSet,
    params: &PyGaborParams,
    n_max: usize,
) -> PyResult<(f64, f64)> {
    oracle::truncated_frame_bounds(&unwrap_windows(&windows), &set.inner, &params.inner, n_max)
        .map_err(err)
}

/// Brute-force completeness check on the truncated window.
#[pyfunction]
#[pyo3(signature = (windows, set, params, n_max=32))]
fn truncated_completeness(
    windows: Vec<PyWindow>,
    set: &PyPeriodicSet,
    params: &PyGaborParams,
    n_max: usize,
) -> PyResult<bool> {
    oracle::truncated_completeness(&unwrap_windows(&windows), &set.inner, &params.inner, n_max)
        .map_err(err)
}

/// Run the full analysis on a JSON problem description; returns report JSON.
#[pyfunction]
#[pyo3(signature = (spec, grid=256, rank_tol=1e-10, parseval_tol=1e-9))]
fn analyze_json(spec: &str, grid: usize, rank_tol: f64, parseval_tol: f64) -> PyResult<String> {
    let parsed: ProblemSpec = serde_json::from_str(spec)
        .map_err(|e| PyValueError::new_err(format!("malformed JSON spec: {e}")))?;
    let problem = parsed.validate().map_err(err)?;
    let report =
        run_analyze(&problem, &options(grid, rank_tol, parseval_tol)).map_err(err)?;
    Ok(report.to_json())
}

#[pymodule]
fn zakgabor(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPeriodicSet>()?;
    m.add_class::<PyGaborParams>()?;
    m.add_class::<PyWindow>()?;
    m.add_class::<PyFrameVerdict>()?;
    m.add_function(wrap_pyfunction!(derive_params, m)?)?;
    m.add_function(wrap_pyfunction!(kappa_set, m)?)?;
    m.add_function(wrap_pyfunction!(zak_eval, m)?)?;
    m.add_function(wrap_pyfunction!(admits_frame, m)?)?;
    m.add_function(wrap_pyfunction!(admits_riesz_onb, m)?)?;
    m.add_function(wrap_pyfunction!(frame_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(construct_parseval_windows, m)?)?;
    m.add_function(wrap_pyfunction!(truncated_frame_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(truncated_completeness, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_json, m)?)?;
    Ok(())
}
