//! Python bindings: thin `#[pyfunction]` wrappers over the core crate,
//! trafficking in plain tuples, lists, and dicts so the module needs no
//! Python-side classes. Domain errors surface as `ValueError`; blowing
//! the enumeration budget surfaces as `RuntimeError`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use parataxi_core::lattice::{Operator, Point};
use parataxi_core::Error;

fn err(e: Error) -> PyErr {
    match e {
        Error::PointBudgetExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn op(name: &str) -> PyResult<Operator> {
    name.parse::<Operator>().map_err(PyValueError::new_err)
}

fn pt((x, y): (i64, i64)) -> Point {
    Point::new(x, y)
}

fn pair(p: Point) -> (i64, i64) {
    (p.x, p.y)
}

/// Apply one generator (by name: id, lp, lpp, mr, ml, mu, md) to a point.
#[pyfunction]
fn apply_op(name: &str, point: (i64, i64)) -> PyResult<(i64, i64)> {
    Ok(pair(op(name)?.apply(pt(point))))
}

/// Name of the operator conjugate under diagonal reflection.
#[pyfunction]
fn tilde_op(name: &str) -> PyResult<&'static str> {
    Ok(op(name)?.tilde().name())
}

/// Reflect a point across the diagonal y = x.
#[pyfunction]
fn reflect_diag(point: (i64, i64)) -> (i64, i64) {
    pair(pt(point).reflect_diag())
}

/// Index of the partition parabola through a point.
#[pyfunction]
fn parabola_index(point: (i64, i64)) -> i64 {
    parataxi_core::lattice::parabola_index(pt(point))
}

/// Alternating-mirror walk: `steps + 1` points starting at `start`.
#[pyfunction]
fn stairway(start: (i64, i64), first: &str, steps: usize) -> PyResult<Vec<(i64, i64)>> {
    let walk = parataxi_core::lattice::stairway(pt(start), op(first)?, steps).map_err(err)?;
    Ok(walk.into_iter().map(pair).collect())
}

/// All points within `radius` of the centers, as `(x, y, d)` triples
/// sorted by `(d, x, y)`. Centers default to the origin.
#[pyfunction]
#[pyo3(signature = (radius, centers=None))]
fn ball_points(radius: i64, centers: Option<Vec<(i64, i64)>>) -> PyResult<Vec<(i64, i64, i64)>> {
    let centers: Vec<Point> = centers
        .unwrap_or_else(|| vec![(0, 0)])
        .into_iter()
        .map(pt)
        .collect();
    let field = parataxi_core::oracle::bfs_ball(&centers, radius).map_err(err)?;
    Ok(field.points().map(|(p, d)| (p.x, p.y, d)).collect())
}

/// Exact distance between two points, or None when it exceeds `cutoff`.
#[pyfunction]
fn pc_distance(p: (i64, i64), q: (i64, i64), cutoff: i64) -> PyResult<Option<i64>> {
    parataxi_core::oracle::pc_distance(pt(p), pt(q), cutoff).map_err(err)
}

/// Number of lattice points in the ball of the given radius.
#[pyfunction]
fn ball_count(radius: i64) -> PyResult<i64> {
    parataxi_core::counts::ball_count(radius).map_err(err)
}

/// Number of lattice points on the boundary of the given radius.
#[pyfunction]
fn boundary_count(radius: i64) -> PyResult<i64> {
    parataxi_core::counts::boundary_count(radius).map_err(err)
}

/// Squared width of the ball between its two tangent diagonals.
#[pyfunction]
fn width_sq(radius: i64) -> PyResult<i64> {
    parataxi_core::counts::width_sq(radius).map_err(err)
}

/// Euclidean diameter data: endpoints `q` and `p`, the intercept of the
/// far tangent line, and the squared diameter.
#[pyfunction]
fn diameter_data(py: Python<'_>, radius: i64) -> PyResult<Bound<'_, PyDict>> {
    let d = parataxi_core::counts::diameter_data(radius).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("r", d.r)?;
    out.set_item("q", pair(d.q))?;
    out.set_item("p", pair(d.p))?;
    out.set_item("c_of_r", d.c_of_r)?;
    out.set_item("diam_sq", d.diam_sq)?;
    Ok(out)
}

/// Boundary cross-section on the line y = x + c, as closed interval
/// pairs of x-coordinates (empty list for an empty section).
#[pyfunction]
fn cross_section(radius: i64, c: i64) -> PyResult<Vec<(i64, i64)>> {
    let cs = parataxi_core::section::cross_section(radius, c).map_err(err)?;
    Ok(cs.parts().iter().map(|iv| (iv.lo(), iv.hi())).collect())
}

/// The negative part of a cross-section (x-coordinates below zero).
#[pyfunction]
fn neg_section(radius: i64, c: i64) -> PyResult<Vec<(i64, i64)>> {
    let parts = parataxi_core::section::neg_section(radius, c).map_err(err)?;
    Ok(parts.iter().map(|iv| (iv.lo(), iv.hi())).collect())
}

/// The negative section computed by recursive unfolding instead of the
/// closed form.
#[pyfunction]
fn neg_section_recursive(radius: i64, c: i64) -> PyResult<Vec<(i64, i64)>> {
    let parts = parataxi_core::section::neg_section_recursive(radius, c).map_err(err)?;
    Ok(parts.iter().map(|iv| (iv.lo(), iv.hi())).collect())
}

/// The section-recursion intercept map.
#[pyfunction]
fn zf(x: i64) -> i64 {
    parataxi_core::section::zf(x)
}

/// The k-th iterate of the intercept map.
#[pyfunction]
fn zk(x: i64, k: i64) -> PyResult<i64> {
    parataxi_core::section::zk(x, k).map_err(err)
}

/// Export a named sequence (ball, boundary, c_of_r, abs_x, abs_y,
/// diam_sq) for radii `0..=r_max`.
#[pyfunction]
fn sequence(kind: &str, r_max: i64) -> PyResult<Vec<i64>> {
    let kind = kind
        .parse::<parataxi_core::counts::SequenceKind>()
        .map_err(PyValueError::new_err)?;
    parataxi_core::counts::sequence_export(kind, r_max).map_err(err)
}

/// Histogram of chord lengths from a boundary base point, as a dict
/// with keys `r`, `base`, `counts`, `total`.
#[pyfunction]
fn chord_histogram(py: Python<'_>, radius: i64, base: (i64, i64)) -> PyResult<Bound<'_, PyDict>> {
    let h = parataxi_core::chords::chord_histogram(radius, pt(base)).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("r", h.r)?;
    out.set_item("base", pair(h.base_point))?;
    out.set_item("counts", h.counts.clone())?;
    out.set_item("total", h.total())?;
    Ok(out)
}

/// Longest chord length over all boundary base points.
#[pyfunction]
fn pc_diameter(radius: i64) -> PyResult<i64> {
    parataxi_core::chords::pc_diameter(radius).map_err(err)
}

/// Number of boundary points at diameter distance from `base`.
#[pyfunction]
fn antipode_count(radius: i64, base: (i64, i64)) -> PyResult<i64> {
    parataxi_core::chords::antipode_count(radius, pt(base)).map_err(err)
}

/// Check every boundary chord for even length; returns a dict with keys
/// `r`, `all_even`, `witnesses`.
#[pyfunction]
fn parity_scan(py: Python<'_>, radius: i64) -> PyResult<Bound<'_, PyDict>> {
    let rep = parataxi_core::chords::parity_scan(radius).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("r", rep.r)?;
    out.set_item("all_even", rep.all_even)?;
    let witnesses: Vec<((i64, i64), (i64, i64), i64)> = rep
        .odd_witnesses
        .iter()
        .map(|&(p, q, d)| (pair(p), pair(q), d))
        .collect();
    out.set_item("witnesses", witnesses)?;
    Ok(out)
}

/// SVG for the ball of a radius with highlighted boundary layers.
#[pyfunction]
#[pyo3(signature = (radius, highlight_radii=None))]
fn render_ball_svg(radius: i64, highlight_radii: Option<Vec<i64>>) -> PyResult<String> {
    parataxi_core::render::render_ball(radius, &highlight_radii.unwrap_or_default()).map_err(err)
}

/// SVG of the boundary colored by chord distance from a base point.
#[pyfunction]
fn render_chords_svg(radius: i64, base: (i64, i64)) -> PyResult<String> {
    parataxi_core::render::render_chords(radius, pt(base)).map_err(err)
}

/// SVG of the parabola partition of a square coordinate box, with arcs
/// for parabola indices `m_lo..=m_hi`.
#[pyfunction]
fn render_parabolas_svg(m_lo: i64, m_hi: i64, box_lo: i64, box_hi: i64) -> PyResult<String> {
    parataxi_core::render::render_parabolas(m_lo, m_hi, box_lo, box_hi, None).map_err(err)
}

#[pymodule]
fn parataxi(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(apply_op, m)?)?;
    m.add_function(wrap_pyfunction!(tilde_op, m)?)?;
    m.add_function(wrap_pyfunction!(reflect_diag, m)?)?;
    m.add_function(wrap_pyfunction!(parabola_index, m)?)?;
    m.add_function(wrap_pyfunction!(stairway, m)?)?;
    m.add_function(wrap_pyfunction!(ball_points, m)?)?;
    m.add_function(wrap_pyfunction!(pc_distance, m)?)?;
    m.add_function(wrap_pyfunction!(ball_count, m)?)?;
    m.add_function(wrap_pyfunction!(boundary_count, m)?)?;
    m.add_function(wrap_pyfunction!(width_sq, m)?)?;
    m.add_function(wrap_pyfunction!(diameter_data, m)?)?;
    m.add_function(wrap_pyfunction!(cross_section, m)?)?;
    m.add_function(wrap_pyfunction!(neg_section, m)?)?;
    m.add_function(wrap_pyfunction!(neg_section_recursive, m)?)?;
    m.add_function(wrap_pyfunction!(zf, m)?)?;
    m.add_function(wrap_pyfunction!(zk, m)?)?;
    m.add_function(wrap_pyfunction!(sequence, m)?)?;
    m.add_function(wrap_pyfunction!(chord_histogram, m)?)?;
    m.add_function(wrap_pyfunction!(pc_diameter, m)?)?;
    m.add_function(wrap_pyfunction!(antipode_count, m)?)?;
    m.add_function(wrap_pyfunction!(parity_scan, m)?)?;
    m.add_function(wrap_pyfunction!(render_ball_svg, m)?)?;
    m.add_function(wrap_pyfunction!(render_chords_svg, m)?)?;
    m.add_function(wrap_pyfunction!(render_parabolas_svg, m)?)?;
    Ok(())
}
