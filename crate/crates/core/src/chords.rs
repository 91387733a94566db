//! Distances between points of the same boundary: chord histograms,
//! boundary diameters, antipode counts, and parity scans.
//!
//! Nothing here has a closed form; these operations gather brute-force
//! evidence. Every boundary-to-boundary distance is at most `2r` (any two
//! boundary points connect through the center), so one BFS of radius `2r`
//! per base point answers all chords from it. The all-pairs operations are
//! practical up to roughly `r = 8`.

use std::collections::BTreeMap;

use crate::lattice::{Point, ORIGIN};
use crate::oracle::{bfs_ball, DistanceField};
use crate::{Error, Result};

/// Distance profile of one boundary point: how many other points of
/// `∂B(O, r)` sit at each distance from `base_point` (distance 0, the base
/// itself, excluded). All observed distances carry a positive count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChordHistogram {
    pub r: i64,
    pub base_point: Point,
    pub counts: BTreeMap<i64, i64>,
}

impl ChordHistogram {
    /// Total number of tallied points; one less than the boundary count.
    pub fn total(&self) -> i64 {
        self.counts.values().sum()
    }

    /// CSV lines `r,px,py,distance,count`, distances ascending.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (d, n) in &self.counts {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                self.r, self.base_point.x, self.base_point.y, d, n
            ));
        }
        out
    }
}

/// Result of checking every chord of `∂B(O, r)` for even length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParityReport {
    pub r: i64,
    pub all_even: bool,
    /// Chords `(p, q, d)` with odd `d`, if any exist.
    pub odd_witnesses: Vec<(Point, Point, i64)>,
}

impl ParityReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "r": self.r,
            "all_even": self.all_even,
            "witnesses": self.odd_witnesses.iter().map(|(p, q, d)| {
                serde_json::json!({ "p": [p.x, p.y], "q": [q.x, q.y], "d": d })
            }).collect::<Vec<_>>(),
        })
    }
}

fn positive_radius(r: i64) -> Result<()> {
    if r < 1 {
        return Err(Error::RadiusTooSmall { given: r, min: 1 });
    }
    Ok(())
}

// The boundary of B(O, r), and a field from which membership is checked.
fn origin_field(r: i64) -> Result<DistanceField> {
    bfs_ball(&[ORIGIN], r)
}

// Distances from `base` to every point of `boundary`, via one BFS of
// radius 2r from the base.
fn profile(r: i64, base: Point, boundary: &[Point]) -> Result<BTreeMap<i64, i64>> {
    let from_base = bfs_ball(&[base], 2 * r)?;
    let mut counts = BTreeMap::new();
    for &q in boundary {
        if q == base {
            continue;
        }
        let d = from_base
            .distance(q)
            .expect("boundary points lie within twice the radius of each other");
        *counts.entry(d).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Chord histogram of `∂B(O, r)` seen from `p`, which must itself lie on
/// that boundary.
pub fn chord_histogram(r: i64, p: Point) -> Result<ChordHistogram> {
    positive_radius(r)?;
    let field = origin_field(r)?;
    if field.distance(p) != Some(r) {
        return Err(Error::NotOnBoundary { point: p, radius: r });
    }
    let counts = profile(r, p, field.outer_boundary())?;
    Ok(ChordHistogram { r, base_point: p, counts })
}

/// The parabolic-taxicab diameter of `∂B(O, r)`: the largest chord length,
/// found by scanning every base point.
pub fn pc_diameter(r: i64) -> Result<i64> {
    positive_radius(r)?;
    let field = origin_field(r)?;
    let boundary = field.outer_boundary();
    let mut max = 0;
    for &p in boundary {
        if let Some((&d, _)) = profile(r, p, boundary)?.last_key_value() {
            max = max.max(d);
        }
    }
    Ok(max)
}

/// Number of boundary points diametrically opposite `p`: those at chord
/// distance exactly [`pc_diameter`]`(r)`.
pub fn antipode_count(r: i64, p: Point) -> Result<i64> {
    let diameter = pc_diameter(r)?;
    let histogram = chord_histogram(r, p)?;
    Ok(histogram.counts.get(&diameter).copied().unwrap_or(0))
}

/// Check the parity of every chord of `∂B(O, r)`.
pub fn parity_scan(r: i64) -> Result<ParityReport> {
    positive_radius(r)?;
    let field = origin_field(r)?;
    let boundary = field.outer_boundary();
    let mut odd_witnesses = Vec::new();
    for (i, &p) in boundary.iter().enumerate() {
        let from_base = bfs_ball(&[p], 2 * r)?;
        for &q in &boundary[i + 1..] {
            let d = from_base
                .distance(q)
                .expect("boundary points lie within twice the radius of each other");
            if d % 2 != 0 {
                odd_witnesses.push((p, q, d));
            }
        }
    }
    Ok(ParityReport { r, all_even: odd_witnesses.is_empty(), odd_witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::boundary_count;

    fn map(pairs: &[(i64, i64)]) -> BTreeMap<i64, i64> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn histogram_from_lower_left_corner() {
        let h = chord_histogram(6, Point::new(-6, -6)).unwrap();
        assert_eq!(h.counts, map(&[(2, 7), (4, 13), (6, 32), (8, 29), (10, 4)]));
        assert_eq!(h.total(), 85);
    }

    #[test]
    fn histograms_from_upper_boundary_points() {
        let h = chord_histogram(6, Point::new(2, 8)).unwrap();
        assert_eq!(h.counts, map(&[(2, 9), (4, 32), (6, 41), (8, 3)]));
        let h = chord_histogram(6, Point::new(21, 15)).unwrap();
        assert_eq!(h.counts, map(&[(2, 6), (4, 23), (6, 37), (8, 19)]));
    }

    #[test]
    fn histogram_total_matches_boundary_count() {
        // (15,10) is the tangency point of the boundary with the line
        // y = x - 5, so it lies at distance exactly 5.
        let h = chord_histogram(5, Point::new(15, 10)).unwrap();
        assert_eq!(h.total(), boundary_count(5).unwrap() - 1);
    }

    #[test]
    fn histogram_is_reflection_equivariant() {
        let p = Point::new(2, 8);
        let h = chord_histogram(6, p).unwrap();
        let reflected = chord_histogram(6, p.reflect_diag()).unwrap();
        assert_eq!(h.counts, reflected.counts);
    }

    #[test]
    fn histogram_rejects_bad_inputs() {
        assert_eq!(
            chord_histogram(6, ORIGIN),
            Err(Error::NotOnBoundary { point: ORIGIN, radius: 6 })
        );
        assert_eq!(
            chord_histogram(6, Point::new(1, 0)),
            Err(Error::NotOnBoundary { point: Point::new(1, 0), radius: 6 })
        );
        assert_eq!(
            chord_histogram(0, ORIGIN),
            Err(Error::RadiusTooSmall { given: 0, min: 1 })
        );
    }

    #[test]
    fn histogram_csv() {
        let h = chord_histogram(2, Point::new(1, 3)).unwrap();
        let csv = h.to_csv();
        for line in csv.lines() {
            assert!(line.starts_with("2,1,3,"));
        }
        assert_eq!(csv.lines().count(), h.counts.len());
    }

    #[test]
    fn small_diameters() {
        assert_eq!(pc_diameter(1).unwrap(), 2);
        assert_eq!(pc_diameter(2).unwrap(), 4);
        assert_eq!(pc_diameter(0), Err(Error::RadiusTooSmall { given: 0, min: 1 }));
    }

    #[test]
    fn diameter_at_most_twice_radius() {
        for r in 1..=5 {
            assert!(pc_diameter(r).unwrap() <= 2 * r);
        }
    }

    #[test]
    fn antipodes_agree_with_histogram() {
        let p = Point::new(1, 3);
        let diameter = pc_diameter(2).unwrap();
        let h = chord_histogram(2, p).unwrap();
        assert_eq!(
            antipode_count(2, p).unwrap(),
            h.counts.get(&diameter).copied().unwrap_or(0)
        );
    }

    #[test]
    fn small_parity_scans_are_all_even() {
        for r in 1..=4 {
            let report = parity_scan(r).unwrap();
            assert!(report.all_even, "odd chord at r = {r}: {:?}", report.odd_witnesses);
            assert!(report.odd_witnesses.is_empty());
        }
    }

    #[test]
    fn parity_report_json_shape() {
        let report = parity_scan(1).unwrap();
        let json = report.to_json();
        assert_eq!(json["r"], 1);
        assert_eq!(json["all_even"], true);
        assert_eq!(json["witnesses"].as_array().unwrap().len(), 0);
    }
}
