//! Breadth-first-search ground truth for the parabolic-taxicab metric.
//!
//! The oracle expands the lattice graph level by level from a set of
//! centers, recording the exact distance of every point it reaches. It is
//! deliberately free of any closed-form shortcuts: every formula elsewhere
//! in the crate is validated against the fields produced here.

use std::collections::HashMap;

use crate::lattice::{Operator, Point};
use crate::{Error, Result};

/// Default cap on the number of points a search may visit. Ball sizes grow
/// cubically (about `10r³/12` points), so this corresponds to a radius of
/// roughly 600.
pub const DEFAULT_POINT_BUDGET: usize = 200_000_000;

/// Exact distances from a center set to every point within some radius.
#[derive(Clone, Debug)]
pub struct DistanceField {
    centers: Vec<Point>,
    radius: i64,
    /// `layers[d]` holds the points at distance exactly `d`, sorted.
    layers: Vec<Vec<Point>>,
    index: HashMap<Point, i64>,
}

impl DistanceField {
    /// The deduplicated centers, in canonical order.
    pub fn centers(&self) -> &[Point] {
        &self.centers
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    /// Distance of `p` from the center set, if `p` is within the radius.
    pub fn distance(&self, p: Point) -> Option<i64> {
        self.index.get(&p).copied()
    }

    /// Points at distance exactly `r`, sorted by `(x, y)`.
    pub fn boundary(&self, r: i64) -> Result<&[Point]> {
        if r < 0 || r > self.radius {
            return Err(Error::RadiusOutOfRange { given: r, max: self.radius });
        }
        Ok(&self.layers[r as usize])
    }

    /// The outermost layer.
    pub fn outer_boundary(&self) -> &[Point] {
        self.layers.last().map(Vec::as_slice).unwrap_or(&[])
    }

    /// Total number of points in the field (the closed ball).
    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// All `(point, distance)` pairs ordered by `(d, x, y)`.
    pub fn points(&self) -> impl Iterator<Item = (Point, i64)> + '_ {
        self.layers
            .iter()
            .enumerate()
            .flat_map(|(d, layer)| layer.iter().map(move |&p| (p, d as i64)))
    }

    /// CSV lines `x,y,d` sorted by `(d, x, y)`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (p, d) in self.points() {
            out.push_str(&format!("{},{},{}\n", p.x, p.y, d));
        }
        out
    }

    /// JSON array of `{x, y, d}` objects in the same order as [`Self::to_csv`].
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.points()
                .map(|(p, d)| {
                    serde_json::json!({ "x": p.x, "y": p.y, "d": d })
                })
                .collect(),
        )
    }
}

/// Closed-ball statistics per radius; counts are cumulative, the bounding
/// box covers the whole ball of that radius.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BallSummary {
    pub radius: i64,
    pub ball_count: i64,
    pub boundary_count: i64,
    pub min_x: i64,
    pub max_x: i64,
    pub min_y: i64,
    pub max_y: i64,
}

/// Level-synchronous BFS from `centers` out to `radius`, with the default
/// point budget.
pub fn bfs_ball(centers: &[Point], radius: i64) -> Result<DistanceField> {
    bfs_ball_with_budget(centers, radius, DEFAULT_POINT_BUDGET)
}

/// As [`bfs_ball`], but aborting once more than `budget` points have been
/// visited; the error reports the last fully completed radius.
pub fn bfs_ball_with_budget(
    centers: &[Point],
    radius: i64,
    budget: usize,
) -> Result<DistanceField> {
    if centers.is_empty() {
        return Err(Error::EmptyCenters);
    }
    if radius < 0 {
        return Err(Error::NegativeRadius(radius));
    }
    let mut seeds = centers.to_vec();
    seeds.sort();
    seeds.dedup();
    if seeds.len() > budget {
        return Err(Error::PointBudgetExceeded { budget, completed_radius: -1 });
    }
    let mut index: HashMap<Point, i64> = seeds.iter().map(|&p| (p, 0)).collect();
    let mut layers = vec![seeds.clone()];
    for d in 1..=radius {
        let mut next = Vec::new();
        for &p in &layers[(d - 1) as usize] {
            for op in Operator::GENERATORS {
                let q = op.apply(p);
                if !index.contains_key(&q) {
                    if index.len() >= budget {
                        return Err(Error::PointBudgetExceeded {
                            budget,
                            completed_radius: d - 1,
                        });
                    }
                    index.insert(q, d);
                    next.push(q);
                }
            }
        }
        next.sort();
        layers.push(next);
    }
    Ok(DistanceField { centers: seeds, radius, layers, index })
}

/// Exact distance between two points, or `None` when it exceeds `cutoff`.
pub fn pc_distance(p: Point, q: Point, cutoff: i64) -> Result<Option<i64>> {
    if cutoff < 0 {
        return Err(Error::NegativeCutoff(cutoff));
    }
    if p == q {
        return Ok(Some(0));
    }
    let mut index: HashMap<Point, i64> = HashMap::from([(p, 0)]);
    let mut frontier = vec![p];
    for d in 1..=cutoff {
        let mut next = Vec::new();
        for &u in &frontier {
            for op in Operator::GENERATORS {
                let v = op.apply(u);
                if v == q {
                    return Ok(Some(d));
                }
                if !index.contains_key(&v) {
                    if index.len() >= DEFAULT_POINT_BUDGET {
                        return Err(Error::PointBudgetExceeded {
                            budget: DEFAULT_POINT_BUDGET,
                            completed_radius: d - 1,
                        });
                    }
                    index.insert(v, d);
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    Ok(None)
}

/// One [`BallSummary`] per radius `0..=radius` around `centers`.
pub fn ball_summary(centers: &[Point], radius: i64) -> Result<Vec<BallSummary>> {
    let field = bfs_ball(centers, radius)?;
    let mut summaries = Vec::with_capacity(radius as usize + 1);
    let mut ball = 0i64;
    let mut bbox: Option<(i64, i64, i64, i64)> = None;
    for r in 0..=radius {
        let layer = field.boundary(r)?;
        ball += layer.len() as i64;
        for &p in layer {
            bbox = Some(match bbox {
                None => (p.x, p.x, p.y, p.y),
                Some((lo_x, hi_x, lo_y, hi_y)) => (
                    lo_x.min(p.x),
                    hi_x.max(p.x),
                    lo_y.min(p.y),
                    hi_y.max(p.y),
                ),
            });
        }
        let (min_x, max_x, min_y, max_y) = bbox.expect("layer 0 is never empty");
        summaries.push(BallSummary {
            radius: r,
            ball_count: ball,
            boundary_count: layer.len() as i64,
            min_x,
            max_x,
            min_y,
            max_y,
        });
    }
    Ok(summaries)
}
