//! Python bindings. Matrices live over the exact complex semiring; Boolean
//! runs are reachable through the string-selected functions.

use pyo3::exceptions::{PyIndexError, PyNotImplementedError, PyValueError};
use pyo3::prelude::*;

use catqm_core::gen::Gen;
use catqm_core::laws::run_suite;
use catqm_core::protocols::{self, TeleportationBase};
use catqm_core::qm::{self, BornReport, SpectralDecomposition};
use catqm_core::{Boolean, ComplexRootTwo as C, Error, Morphism as CoreMorphism, Scalar as _, SemiringKind};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Unsupported(_) => PyNotImplementedError::new_err(e.to_string()),
        Error::IndexOutOfRange { .. } => PyIndexError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn semiring(name: &str) -> PyResult<SemiringKind> {
    name.parse().map_err(py_err)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data")
}

/// An exact element of Q(i, √2).
#[pyclass(frozen, eq, hash, str, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Scalar(C);

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl Scalar {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        C::parse(text).map(Scalar).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("Scalar('{}')", self.0)
    }

    fn __add__(&self, other: &Scalar) -> Scalar {
        Scalar(self.0.add(&other.0))
    }

    fn __mul__(&self, other: &Scalar) -> Scalar {
        Scalar(self.0.mul(&other.0))
    }

    fn __neg__(&self) -> Scalar {
        Scalar(self.0.negated())
    }

    fn conj(&self) -> Scalar {
        Scalar(self.0.conj())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// An object built from `I`, `Q`, `*`, `+` and `^`.
#[pyclass(frozen, eq, str, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct Shape(catqm_core::Shape);

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl Shape {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        catqm_core::Shape::parse(text).map(Shape).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("Shape('{}')", self.0)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn tensor(&self, other: &Shape) -> Shape {
        Shape(catqm_core::Shape::tensor(&self.0, &other.0))
    }

    fn biproduct(&self, other: &Shape) -> Shape {
        Shape(catqm_core::Shape::biproduct(&self.0, &other.0))
    }

    fn dual(&self) -> Shape {
        Shape(catqm_core::Shape::dual(&self.0))
    }
}

/// A matrix `dom -> cod` over the exact complex semiring.
#[pyclass(frozen, eq, str, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct Morphism(CoreMorphism<C>);

impl std::fmt::Display for Morphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl Morphism {
    /// Rows of scalar strings, one row per basis vector of `cod`.
    #[new]
    fn new(dom: &Shape, cod: &Shape, rows: Vec<Vec<String>>) -> PyResult<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|e| C::parse(e)).collect())
            .collect::<Result<Vec<Vec<C>>, _>>()
            .map_err(py_err)?;
        CoreMorphism::from_rows(&dom.0, &cod.0, rows)
            .map(Morphism)
            .map_err(py_err)
    }

    /// Reads the `dom -> cod` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        CoreMorphism::parse_text(text).map(Morphism).map_err(py_err)
    }

    #[staticmethod]
    fn identity(shape: &Shape) -> Self {
        Morphism(CoreMorphism::identity(&shape.0))
    }

    #[getter]
    fn dom(&self) -> Shape {
        Shape(self.0.dom().clone())
    }

    #[getter]
    fn cod(&self) -> Shape {
        Shape(self.0.cod().clone())
    }

    fn entry(&self, row: usize, col: usize) -> PyResult<Scalar> {
        if row >= self.0.rows() || col >= self.0.cols() {
            return Err(PyIndexError::new_err(format!("({row}, {col}) out of range")));
        }
        Ok(Scalar(self.0.entry(row, col).clone()))
    }

    /// `self ∘ other`.
    fn compose(&self, other: &Morphism) -> PyResult<Morphism> {
        self.0.compose(&other.0).map(Morphism).map_err(py_err)
    }

    fn __matmul__(&self, other: &Morphism) -> PyResult<Morphism> {
        self.compose(other)
    }

    fn tensor(&self, other: &Morphism) -> Morphism {
        Morphism(self.0.tensor(&other.0))
    }

    fn biproduct(&self, other: &Morphism) -> Morphism {
        Morphism(self.0.biproduct(&other.0))
    }

    fn scale(&self, s: &Scalar) -> Morphism {
        Morphism(self.0.scale(&s.0))
    }

    fn adjoint(&self) -> Morphism {
        Morphism(self.0.adjoint())
    }

    fn dual(&self) -> Morphism {
        Morphism(self.0.dual())
    }

    fn name(&self) -> Morphism {
        Morphism(self.0.name())
    }

    fn coname(&self) -> Morphism {
        Morphism(self.0.coname())
    }

    fn is_unitary(&self) -> bool {
        self.0.is_unitary()
    }

    fn is_projector(&self) -> bool {
        self.0.is_projector()
    }
}

/// A teleportation base; the default is the Pauli base.
#[pyclass(frozen)]
struct BellBase(TeleportationBase<C>);

#[pymethods]
impl BellBase {
    #[new]
    fn new() -> PyResult<Self> {
        protocols::make_bell_base().map(BellBase).map_err(py_err)
    }

    /// A random base derived from `seed`.
    #[staticmethod]
    fn random(seed: u64) -> PyResult<Self> {
        Gen::new(seed).teleportation_base().map(BellBase).map_err(py_err)
    }

    #[getter]
    fn s(&self) -> Scalar {
        Scalar(self.0.s().clone())
    }

    /// `beta(i)` for `i` in `0..4`.
    fn beta(&self, i: usize) -> PyResult<Morphism> {
        if i >= 4 {
            return Err(PyIndexError::new_err(format!("beta index {i} out of range")));
        }
        Ok(Morphism(self.0.beta(i).clone()))
    }

    fn is_bell(&self) -> bool {
        self.0.is_bell()
    }

    /// Protocol reports are returned as JSON strings.
    fn teleport(&self) -> PyResult<String> {
        let r = protocols::verify_teleportation(&self.0).map_err(py_err)?;
        Ok(r.to_json().to_string())
    }

    fn gate_teleport(&self, gate: &Morphism) -> PyResult<String> {
        let r = protocols::verify_gate_teleportation(&self.0, &gate.0, None).map_err(py_err)?;
        Ok(r.to_json().to_string())
    }

    #[pyo3(signature = (gate=None))]
    fn cnot_teleport(&self, gate: Option<&Morphism>) -> PyResult<String> {
        let cnot = gate.map(|g| g.0.clone()).unwrap_or_else(protocols::standard_cnot);
        let r = protocols::verify_cnot_teleportation(&self.0, &cnot).map_err(py_err)?;
        Ok(r.to_json().to_string())
    }

    fn swap(&self) -> PyResult<String> {
        let r = protocols::verify_entanglement_swap(&self.0).map_err(py_err)?;
        Ok(r.to_json().to_string())
    }
}

/// Born-rule report for a state such as `"s*(1,1)"`.
#[pyfunction]
#[pyo3(signature = (state, measurement="standard", shape=None))]
fn born(state: &str, measurement: &str, shape: Option<&Shape>) -> PyResult<String> {
    let (sd, shape) = match measurement {
        "standard" => (None, shape.map(|s| s.0.clone())),
        "bell" => {
            let tb = protocols::make_bell_base::<C>().map_err(py_err)?;
            let u = tb.base().adjoint();
            let sd = SpectralDecomposition::new(u, vec![catqm_core::Shape::unit(); 4]).map_err(py_err)?;
            let default = catqm_core::Shape::tensor(
                &catqm_core::Shape::dual(&catqm_core::Shape::qubit()),
                &catqm_core::Shape::qubit(),
            );
            (Some(sd), Some(shape.map(|s| s.0.clone()).unwrap_or(default)))
        }
        other => return Err(PyValueError::new_err(format!("unknown measurement `{other}`"))),
    };
    let psi = qm::parse_state::<C>(state, shape.as_ref()).map_err(py_err)?;
    let sd = sd.unwrap_or_else(|| SpectralDecomposition::standard(psi.cod()));
    let branches = qm::born(&sd, &psi).map_err(py_err)?;
    Ok(to_json(&BornReport::new(measurement, &branches)))
}

/// `(dim_int, dim_scalar)` of a shape in the chosen semiring.
#[pyfunction]
#[pyo3(signature = (shape, semiring_name="complex-root-two"))]
fn dim(shape: &Shape, semiring_name: &str) -> PyResult<(usize, String)> {
    let s = match semiring(semiring_name)? {
        SemiringKind::Boolean => qm::dim_scalar::<Boolean>(&shape.0).to_string(),
        SemiringKind::ComplexRootTwo => qm::dim_scalar::<C>(&shape.0).to_string(),
    };
    Ok((qm::dim_int(&shape.0), s))
}

#[pyfunction]
fn rel_search() -> String {
    to_json(&protocols::rel_teleportation_search())
}

/// Runs the law suites and returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (semiring_name="complex-root-two", seed=0, count=200))]
fn lemmas(semiring_name: &str, seed: u64, count: usize) -> PyResult<String> {
    Ok(match semiring(semiring_name)? {
        SemiringKind::Boolean => to_json(&run_suite::<Boolean>(seed, count)),
        SemiringKind::ComplexRootTwo => to_json(&run_suite::<C>(seed, count)),
    })
}

#[pymodule]
fn catqm(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Scalar>()?;
    m.add_class::<Shape>()?;
    m.add_class::<Morphism>()?;
    m.add_class::<BellBase>()?;
    m.add_function(wrap_pyfunction!(born, m)?)?;
    m.add_function(wrap_pyfunction!(dim, m)?)?;
    m.add_function(wrap_pyfunction!(rel_search, m)?)?;
    m.add_function(wrap_pyfunction!(lemmas, m)?)?;
    Ok(())
}
