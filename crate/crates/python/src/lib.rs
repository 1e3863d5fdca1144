//! Python bindings: spaces, maps, closure, completion, Cauchy filters and
//! the verify suites.

use std::collections::HashMap;

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use nacomp::completion::{self, CompletionResult};
use nacomp::enumerate::InstanceBudget;
use nacomp::format::{self, Document};
use nacomp::uniform;
use nacomp::verify::{run as run_suites, Suite};
use nacomp::{Carrier, NaSpace, Partition, PointSet, UcMap};

create_exception!(nacomp, NacompError, PyValueError);

fn err(e: impl std::fmt::Display) -> PyErr {
    NacompError::new_err(e.to_string())
}

fn labels(space: &NaSpace, set: &PointSet) -> Vec<String> {
    set.iter().map(|x| space.names()[x].clone()).collect()
}

fn blocks(space: &NaSpace, p: &Partition) -> Vec<Vec<String>> {
    p.blocks().iter().map(|b| labels(space, b)).collect()
}

fn index(space: &NaSpace, label: &str) -> PyResult<usize> {
    space
        .carrier()
        .index_of(label)
        .ok_or_else(|| err(format!("unknown point `{label}`")))
}

fn subset(space: &NaSpace, points: &[String]) -> PyResult<PointSet> {
    let mut set = PointSet::empty(space.size());
    for p in points {
        set.insert(index(space, p)?);
    }
    Ok(set)
}

/// Excluded point and the two partitions, as blocks of labels.
type ClosureWitness = (String, Vec<Vec<String>>, Vec<Vec<String>>);

/// A finite non-Archimedean space: points and generating partitions.
#[pyclass(name = "Space", module = "nacomp", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PySpace {
    inner: NaSpace,
}

#[pymethods]
impl PySpace {
    /// `generators` lists partitions as lists of blocks of point labels.
    #[new]
    fn new(points: Vec<String>, generators: Vec<Vec<Vec<String>>>) -> PyResult<Self> {
        let carrier = Carrier::new(points).map_err(err)?;
        let parts = generators
            .iter()
            .map(|g| {
                let idx = g
                    .iter()
                    .map(|b| {
                        b.iter()
                            .map(|p| carrier.index_of(p).ok_or_else(|| err(format!("unknown point `{p}`"))))
                            .collect()
                    })
                    .collect::<PyResult<Vec<Vec<usize>>>>()?;
                Partition::from_blocks(carrier.size(), &idx).map_err(err)
            })
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PySpace {
            inner: NaSpace::new(carrier, parts).map_err(err)?,
        })
    }

    #[staticmethod]
    fn discrete(points: Vec<String>) -> PyResult<Self> {
        Ok(PySpace {
            inner: NaSpace::discrete(Carrier::new(points).map_err(err)?),
        })
    }

    #[staticmethod]
    fn indiscrete(points: Vec<String>) -> PyResult<Self> {
        Ok(PySpace {
            inner: NaSpace::indiscrete(Carrier::new(points).map_err(err)?),
        })
    }

    #[getter]
    fn points(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    #[getter]
    fn generators(&self) -> Vec<Vec<Vec<String>>> {
        self.inner.generators().iter().map(|g| blocks(&self.inner, g)).collect()
    }

    fn __len__(&self) -> usize {
        self.inner.size()
    }

    fn __repr__(&self) -> String {
        let gens: Vec<String> = self
            .inner
            .generators()
            .iter()
            .map(|g| format!("'{}'", g.display_with(self.inner.names())))
            .collect();
        format!(
            "Space(points={:?}, generators=[{}])",
            self.inner.names(),
            gens.join(", ")
        )
    }

    fn is_t0(&self) -> bool {
        self.inner.is_t0()
    }

    fn is_complete(&self) -> PyResult<bool> {
        Ok(completion::is_complete(&self.inner).map_err(err)?.complete)
    }

    fn is_intersection_closed(&self) -> bool {
        uniform::is_intersection_closed(&self.inner)
    }

    /// Returns the closure and, per excluded point, the two partitions
    /// cutting it off.
    fn closure(&self, points: Vec<String>) -> PyResult<(Vec<String>, Vec<ClosureWitness>)> {
        let s = &self.inner;
        let report = nacomp::zeta_closure(s, &subset(s, &points)?).map_err(err)?;
        let witnesses = report
            .witnesses
            .iter()
            .map(|w| (s.names()[w.point].clone(), blocks(s, &w.first), blocks(s, &w.second)))
            .collect();
        Ok((labels(s, &report.closure), witnesses))
    }

    fn regular_closure(&self, points: Vec<String>) -> PyResult<Vec<String>> {
        let s = &self.inner;
        let closed = nacomp::regular_closure_oracle(s, &subset(s, &points)?).map_err(err)?;
        Ok(labels(s, &closed))
    }

    /// Order-preserving choice functions, one tuple of chosen blocks each.
    fn choice_functions(&self) -> PyResult<Vec<String>> {
        let fns = completion::enumerate_choice_functions(&self.inner).map_err(err)?;
        Ok(fns.iter().map(|f| f.describe(&self.inner)).collect())
    }

    fn complete(&self) -> PyResult<PyCompletion> {
        Ok(PyCompletion {
            inner: completion::complete(&self.inner).map_err(err)?,
        })
    }

    /// Generating sets of the minimal Cauchy filters, sorted.
    fn minimal_cauchy_filters(&self) -> PyResult<Vec<Vec<String>>> {
        let filters = uniform::minimal_cauchy_filters(&self.inner).map_err(err)?;
        Ok(filters.iter().map(|f| labels(&self.inner, &f.generator)).collect())
    }

    #[pyo3(signature = (name = "X"))]
    fn to_nas(&self, name: &str) -> PyResult<String> {
        let mut doc = Document::default();
        doc.add_space(name, self.inner.clone()).map_err(err)?;
        Ok(format::emit(&doc))
    }
}

/// A uniformly continuous map between two spaces.
#[pyclass(name = "Map", module = "nacomp", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMap {
    inner: UcMap,
}

#[pymethods]
impl PyMap {
    #[new]
    fn new(domain: &PySpace, codomain: &PySpace, table: HashMap<String, String>) -> PyResult<Self> {
        let (dom, cod) = (&domain.inner, &codomain.inner);
        let mut values = vec![None; dom.size()];
        for (x, y) in &table {
            values[index(dom, x)?] = Some(index(cod, y)?);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(x, y)| y.ok_or_else(|| err(format!("no image for `{}`", dom.names()[x]))))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PyMap {
            inner: UcMap::new(dom.clone(), cod.clone(), values).map_err(err)?,
        })
    }

    #[getter]
    fn domain(&self) -> PySpace {
        PySpace {
            inner: self.inner.domain().clone(),
        }
    }

    #[getter]
    fn codomain(&self) -> PySpace {
        PySpace {
            inner: self.inner.codomain().clone(),
        }
    }

    /// `(point, image)` pairs in domain order.
    #[getter]
    fn table(&self) -> Vec<(String, String)> {
        let (dom, cod) = (self.inner.domain(), self.inner.codomain());
        self.inner
            .table()
            .iter()
            .enumerate()
            .map(|(x, &y)| (dom.names()[x].clone(), cod.names()[y].clone()))
            .collect()
    }

    fn __call__(&self, point: &str) -> PyResult<String> {
        let x = index(self.inner.domain(), point)?;
        Ok(self.inner.codomain().names()[self.inner.apply(x)].clone())
    }

    fn then(&self, next: &PyMap) -> PyResult<PyMap> {
        Ok(PyMap {
            inner: self.inner.then(&next.inner).map_err(err)?,
        })
    }

    fn is_injective(&self) -> bool {
        self.inner.is_injective()
    }

    fn is_embedding(&self) -> bool {
        self.inner.is_embedding()
    }

    fn is_isomorphism(&self) -> bool {
        self.inner.is_isomorphism()
    }

    fn is_epimorphism(&self) -> PyResult<bool> {
        self.inner.is_epimorphism().map_err(err)
    }

    fn is_extremal_mono(&self) -> PyResult<bool> {
        self.inner.is_extremal_mono().map_err(err)
    }
}

/// The completion of a T0 space with its embedding `j`.
#[pyclass(name = "Completion", module = "nacomp", frozen)]
struct PyCompletion {
    inner: CompletionResult,
}

#[pymethods]
impl PyCompletion {
    #[getter]
    fn space(&self) -> PySpace {
        PySpace {
            inner: self.inner.hat_space.clone(),
        }
    }

    #[getter]
    fn new_points(&self) -> Vec<String> {
        let names = self.inner.hat_space.names();
        self.inner.new_points.iter().map(|&i| names[i].clone()).collect()
    }

    #[getter]
    fn j(&self) -> PyMap {
        PyMap {
            inner: self.inner.j.clone(),
        }
    }

    /// The unique extension of `u` (into a complete space) over the
    /// completion.
    fn extend(&self, u: &PyMap) -> PyResult<PyMap> {
        Ok(PyMap {
            inner: completion::extend(&self.inner, &u.inner).map_err(err)?,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.hat_space.size()
    }
}

/// Parses `.nas` text into `(spaces, maps)` dictionaries, in file order.
#[pyfunction]
fn parse<'py>(py: Python<'py>, text: &str) -> PyResult<(Bound<'py, PyDict>, Bound<'py, PyDict>)> {
    let doc = format::parse(text).map_err(err)?;
    let spaces = PyDict::new(py);
    for (name, space) in doc.spaces {
        spaces.set_item(name, PySpace { inner: space })?;
    }
    let maps = PyDict::new(py);
    for m in doc.maps {
        maps.set_item(m.name, PyMap { inner: m.map })?;
    }
    Ok((spaces, maps))
}

type SuiteRow = (String, bool, String, Option<String>);

/// Runs the verify suites; returns `(suite, passed, summary, counterexample)`
/// per suite, the counterexample as `.nas` text.
#[pyfunction]
#[pyo3(signature = (max_size = 3, exhaustive_to = 3, samples = 200, seed = 42, suites = None))]
fn verify(
    py: Python<'_>,
    max_size: usize,
    exhaustive_to: usize,
    samples: usize,
    seed: u64,
    suites: Option<Vec<String>>,
) -> PyResult<Vec<SuiteRow>> {
    let budget = InstanceBudget::new(max_size, exhaustive_to, samples, seed).map_err(err)?;
    let chosen = match suites {
        None => Suite::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|n| Suite::from_name(n).ok_or_else(|| err(format!("unknown suite `{n}`"))))
            .collect::<PyResult<_>>()?,
    };
    let reports = py.detach(|| run_suites(&chosen, &budget)).map_err(err)?;
    Ok(reports
        .into_iter()
        .map(|r| {
            let nas = r.failure.as_ref().map(|c| c.to_nas());
            (r.suite.name().to_string(), r.passed(), r.summary(), nas)
        })
        .collect())
}

#[pymodule]
#[pyo3(name = "nacomp")]
fn nacomp_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySpace>()?;
    m.add_class::<PyMap>()?;
    m.add_class::<PyCompletion>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("NacompError", m.py().get_type::<NacompError>())?;
    Ok(())
}
