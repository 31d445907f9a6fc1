use ::bcdmod::catdata;
use ::bcdmod::cyclotomic::CycNum;
use ::bcdmod::modularize::{self, MChoices};
use ::bcdmod::refine;
use ::bcdmod::series::{make_spec, Series, SeriesSpec};
use ::bcdmod::smatrix;
use ::bcdmod::verlinde::{self, Method};
use ::bcdmod::{Error, Partition};
use pyo3::exceptions::{PyArithmeticError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn err(e: Error) -> PyErr {
    match e {
        Error::Consistency(_) | Error::NonIntegral(_) => PyRuntimeError::new_err(e.to_string()),
        Error::DivisionByZero | Error::VanishingDenominator(_) => PyArithmeticError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn part(p: Vec<usize>) -> PyResult<Partition> {
    Partition::new(p).map_err(err)
}

/// Exact element of a cyclotomic field Q(ζ_order).
#[pyclass(name = "CycNum", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCyc(CycNum);

#[pymethods]
impl PyCyc {
    #[getter]
    fn order(&self) -> u32 {
        self.0.order()
    }

    /// Rational coefficients on the power basis, as "p/q" strings.
    #[getter]
    fn coeffs(&self) -> Vec<String> {
        self.0.coeffs().iter().map(|c| c.to_string()).collect()
    }

    fn approx(&self) -> (f64, f64) {
        let c = self.0.approx();
        (c.re, c.im)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The value as a Python int when it is a rational integer.
    fn to_int(&self) -> Option<String> {
        self.0.to_integer().map(|i| i.to_string())
    }

    fn __add__(&self, o: &PyCyc) -> PyResult<PyCyc> {
        self.0.checked_add(&o.0).map(PyCyc).map_err(err)
    }

    fn __sub__(&self, o: &PyCyc) -> PyResult<PyCyc> {
        self.0.checked_sub(&o.0).map(PyCyc).map_err(err)
    }

    fn __mul__(&self, o: &PyCyc) -> PyResult<PyCyc> {
        self.0.checked_mul(&o.0).map(PyCyc).map_err(err)
    }

    fn __truediv__(&self, o: &PyCyc) -> PyResult<PyCyc> {
        self.0.checked_div(&o.0).map(PyCyc).map_err(err)
    }

    fn __pow__(&self, e: i64, _m: Option<i64>) -> PyResult<PyCyc> {
        self.0.pow(e).map(PyCyc).map_err(err)
    }

    fn __eq__(&self, o: &PyCyc) -> bool {
        self.0 == o.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CycNum({})", self.0)
    }
}

/// A series category at its canonical root of unity.
#[pyclass(name = "Spec", frozen)]
struct PySpec(SeriesSpec);

#[pymethods]
impl PySpec {
    #[new]
    fn new(series: &str, n: usize, k: usize) -> PyResult<Self> {
        let s: Series = series.parse().map_err(err)?;
        Ok(PySpec(make_spec(s, n, k).map_err(err)?))
    }

    #[getter]
    fn l(&self) -> usize {
        self.0.l
    }

    #[getter]
    fn order(&self) -> u32 {
        self.0.order
    }

    fn s(&self) -> PyCyc {
        PyCyc(self.0.s().clone())
    }

    fn alpha(&self) -> PyCyc {
        PyCyc(self.0.alpha().clone())
    }

    fn labels(&self) -> Vec<Vec<usize>> {
        self.0.label_sets().gamma.iter().map(|p| p.parts().to_vec()).collect()
    }

    fn boundary(&self) -> Vec<Vec<usize>> {
        let ls = self.0.label_sets();
        ls.gamma_bar.iter().filter(|p| !self.0.in_gamma(p)).map(|p| p.parts().to_vec()).collect()
    }

    fn qdim(&self, l: Vec<usize>) -> PyResult<PyCyc> {
        catdata::qdim(&self.0, &part(l)?).map(PyCyc).map_err(err)
    }

    fn twist(&self, l: Vec<usize>) -> PyResult<PyCyc> {
        Ok(PyCyc(catdata::twist(&self.0, &part(l)?)))
    }

    /// Labels of the transparent objects.
    fn transparent(&self) -> PyResult<Vec<String>> {
        Ok(catdata::transparent_objects(&self.0).map_err(err)?.iter().map(|t| t.label.to_string()).collect())
    }

    fn verdict(&self) -> PyResult<&'static str> {
        Ok(catdata::modularizability(&self.0).map_err(err)?.kind.name())
    }

    /// (label, kind, qdim or None) for the modularization; `m` fixes all stabilizer-4 orbits.
    #[pyo3(signature = (m=None))]
    fn modularize(&self, m: Option<u8>) -> PyResult<Vec<(String, String, Option<PyCyc>)>> {
        let mc = m.map(MChoices::uniform).unwrap_or_default();
        let t = modularize::modular_table(&self.0, &mc).map_err(err)?;
        Ok(t.labels.iter().map(|l| (l.label.to_string(), l.label.kind(), l.qdim.clone().map(PyCyc))).collect())
    }

    fn smatrix(&self) -> PyResult<Vec<Vec<PyCyc>>> {
        let sm = smatrix::build_smatrix(&self.0).map_err(err)?;
        Ok(sm.s.into_iter().map(|r| r.into_iter().map(PyCyc).collect()).collect())
    }

    /// Nonzero fusion coefficients (λ, μ, ν, N).
    fn fusion(&self) -> PyResult<Vec<(Vec<usize>, Vec<usize>, Vec<usize>, u64)>> {
        let sm = smatrix::build_smatrix(&self.0).map_err(err)?;
        let ft = smatrix::fusion_from_s(&sm).map_err(err)?;
        let p = |i: usize| ft.labels[i].parts().to_vec();
        Ok(ft.records().into_iter().map(|(a, b, c, v)| (p(a), p(b), p(c), v)).collect())
    }

    /// d_g as a decimal string.
    #[pyo3(signature = (g, method="generic", m=None))]
    fn verlinde(&self, g: u32, method: &str, m: Option<u8>) -> PyResult<String> {
        let me = match method {
            "closed" | "closed_form" => Method::ClosedForm,
            "generic" => Method::Generic,
            _ => return Err(PyValueError::new_err(format!("unknown method {method}"))),
        };
        let mc = m.map(MChoices::uniform).unwrap_or_default();
        Ok(verlinde::verlinde(&self.0, g, &mc, me).map_err(err)?.value.to_string())
    }

    fn refinement(&self) -> PyResult<&'static str> {
        Ok(refine::refinement_verdict(&self.0).map_err(err)?.0.name())
    }

    /// (lhs, rhs, holds) for the graded Hopf identity.
    fn graded_hopf(&self, nu: u8) -> PyResult<(PyCyc, PyCyc, bool)> {
        let h = refine::graded_hopf_identity(&self.0, nu).map_err(err)?;
        let ok = h.holds();
        Ok((PyCyc(h.lhs), PyCyc(h.rhs), ok))
    }

    /// (name, pass, detail) for every applicable identity.
    fn check(&self) -> Vec<(String, bool, String)> {
        ::bcdmod::cli::check(&self.0).into_iter().map(|c| (c.name, c.pass, c.detail)).collect()
    }

    fn __repr__(&self) -> String {
        format!("Spec{}", self.0.title())
    }
}

#[pyfunction]
fn root(order: u32, e: i64) -> PyCyc {
    PyCyc(CycNum::root(order, e))
}

#[pyfunction]
fn integer(order: u32, v: i64) -> PyCyc {
    PyCyc(CycNum::from_int(order, v))
}

#[pyfunction]
fn verlinde_c(n: usize, k: usize, g: u32) -> PyResult<String> {
    verlinde::verlinde_c(n, k, g).map(|v| v.to_string()).map_err(err)
}

#[pymodule]
#[pyo3(name = "bcdmod")]
fn bcdmod_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCyc>()?;
    m.add_class::<PySpec>()?;
    m.add_function(wrap_pyfunction!(root, m)?)?;
    m.add_function(wrap_pyfunction!(integer, m)?)?;
    m.add_function(wrap_pyfunction!(verlinde_c, m)?)?;
    Ok(())
}
