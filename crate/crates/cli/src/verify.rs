//! The oracle-vs-closed-form verification suite behind `parataxi verify`.
//!
//! One breadth-first enumeration out to the requested radius feeds every
//! oracle-side comparison; the closed forms are evaluated independently.
//! Failures carry the offending radius/intercept and printable expected
//! and actual values, and are reported in a fixed order.

use std::collections::BTreeMap;

use parataxi_core::counts::{ball_count, boundary_count, diameter_data};
use parataxi_core::lattice::{Point, ORIGIN};
use parataxi_core::oracle::bfs_ball_with_budget;
use parataxi_core::section::{binom2, cross_section, neg_section, neg_section_recursive};
use parataxi_core::{Error, Result};
use serde_json::json;

/// Largest radius whose ball is small enough to brute-force all point
/// pairs when checking diameter extremality.
const DIAMETER_BRUTE_LIMIT: i64 = 9;

pub struct Failure {
    pub check: &'static str,
    pub r: i64,
    pub c: Option<i64>,
    pub expected: String,
    pub actual: String,
}

pub struct Report {
    pub r_max: i64,
    pub checks_run: u64,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": 1,
            "r_max": self.r_max,
            "checks_run": self.checks_run,
            "ok": self.failures.is_empty(),
            "failures": self.failures.iter().map(|f| json!({
                "check": f.check,
                "r": f.r,
                "c": f.c,
                "expected": f.expected,
                "actual": f.actual,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("verify: max radius {}, {} checks\n", self.r_max, self.checks_run);
        for f in &self.failures {
            match f.c {
                Some(c) => out.push_str(&format!(
                    "FAIL {} r={} c={}: expected {}, got {}\n",
                    f.check, f.r, c, f.expected, f.actual
                )),
                None => out.push_str(&format!(
                    "FAIL {} r={}: expected {}, got {}\n",
                    f.check, f.r, f.expected, f.actual
                )),
            }
        }
        if self.failures.is_empty() {
            out.push_str("ok\n");
        } else {
            out.push_str(&format!("{} failures\n", self.failures.len()));
        }
        out
    }
}

// Closed-form point count of one boundary line: r + |c| points on line
// y = x + c when |c| ≤ r - 2 and the parity matches, a full tangent
// segment of C(r+1,2) + 1 points when |c| = r, nothing otherwise.
fn expected_line_count(r: i64, c: i64) -> i64 {
    if c.abs() > r || (r - c).rem_euclid(2) == 1 {
        0
    } else if c.abs() == r {
        binom2(r + 1) + 1
    } else {
        r + c.abs()
    }
}

fn max_pairwise_sq(points: &[Point]) -> i64 {
    let mut best = 0;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            let dx = a.x - b.x;
            let dy = a.y - b.y;
            best = best.max(dx * dx + dy * dy);
        }
    }
    best
}

pub fn run(r_max: i64, budget: usize) -> Result<Report> {
    if r_max < 0 {
        return Err(Error::NegativeRadius(r_max));
    }
    let mut checks_run: u64 = 0;
    let mut failures: Vec<Failure> = Vec::new();

    // A memory cap is reported as a failure, not a crash: the remaining
    // oracle-free checks still run.
    let field = match bfs_ball_with_budget(&[ORIGIN], r_max, budget) {
        Ok(f) => Some(f),
        Err(Error::PointBudgetExceeded { budget, completed_radius }) => {
            checks_run += 1;
            failures.push(Failure {
                check: "oracle",
                r: r_max,
                c: None,
                expected: format!("ball enumerated out to radius {r_max}"),
                actual: format!("point budget {budget} exhausted after radius {completed_radius}"),
            });
            None
        }
        Err(e) => return Err(e),
    };

    if let Some(field) = &field {
        let mut ball_total: i64 = 0;
        let mut strip_max = i64::MIN;
        let mut strip_min = i64::MAX;
        let mut cumulative: Vec<Point> = Vec::new();
        for r in 0..=r_max {
            let layer = field.boundary(r)?;
            ball_total += layer.len() as i64;

            let mut by_line: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
            for p in layer {
                by_line.entry(p.y - p.x).or_default().push(p.x);
                strip_max = strip_max.max(p.y - p.x);
                strip_min = strip_min.min(p.y - p.x);
            }
            for c in -r..=r {
                checks_run += 1;
                let cs = cross_section(r, c)?;
                let mut oracle_xs = by_line.remove(&c).unwrap_or_default();
                oracle_xs.sort_unstable();
                if cs.xs().ne(oracle_xs.iter().copied()) {
                    failures.push(Failure {
                        check: "cross-section",
                        r,
                        c: Some(c),
                        expected: cs.to_string(),
                        actual: format!("{oracle_xs:?}"),
                    });
                }
                checks_run += 1;
                let expected_n = expected_line_count(r, c);
                if cs.point_count() != expected_n {
                    failures.push(Failure {
                        check: "per-line-count",
                        r,
                        c: Some(c),
                        expected: expected_n.to_string(),
                        actual: cs.point_count().to_string(),
                    });
                }
            }
            // Leftover lines would mean boundary points with |y-x| > r.
            checks_run += 1;
            if !by_line.is_empty() {
                let stray: Vec<i64> = by_line.keys().copied().collect();
                failures.push(Failure {
                    check: "tangency",
                    r,
                    c: Some(stray[0]),
                    expected: format!("no boundary lines outside |c| <= {r}"),
                    actual: format!("lines {stray:?}"),
                });
            }

            checks_run += 1;
            let bc = boundary_count(r)?;
            if bc != layer.len() as i64 {
                failures.push(Failure {
                    check: "boundary-count",
                    r,
                    c: None,
                    expected: bc.to_string(),
                    actual: layer.len().to_string(),
                });
            }
            checks_run += 1;
            let total = ball_count(r)?;
            if total != ball_total {
                failures.push(Failure {
                    check: "ball-count",
                    r,
                    c: None,
                    expected: total.to_string(),
                    actual: ball_total.to_string(),
                });
            }

            checks_run += 1;
            if strip_max != r || strip_min != -r {
                failures.push(Failure {
                    check: "tangency",
                    r,
                    c: None,
                    expected: format!("y-x extremes -{r} and {r}"),
                    actual: format!("{strip_min} and {strip_max}"),
                });
            }

            cumulative.extend_from_slice(layer);
            if r <= DIAMETER_BRUTE_LIMIT {
                checks_run += 1;
                let expected = diameter_data(r)?.diam_sq;
                let actual = max_pairwise_sq(&cumulative);
                if expected != actual {
                    failures.push(Failure {
                        check: "diameter",
                        r,
                        c: None,
                        expected: expected.to_string(),
                        actual: actual.to_string(),
                    });
                }
            }
        }
    }

    // Recursive vs direct negative sections; needs no oracle.
    for r in 0..=r_max {
        let mut c = -r;
        while c <= r {
            checks_run += 1;
            let direct = neg_section(r, c)?;
            let unfolded = neg_section_recursive(r, c)?;
            if direct != unfolded {
                failures.push(Failure {
                    check: "recursion",
                    r,
                    c: Some(c),
                    expected: format!("{direct:?}"),
                    actual: format!("{unfolded:?}"),
                });
            }
            c += 2;
        }
    }

    failures.sort_by(|a, b| (a.check, a.r, a.c).cmp(&(b.check, b.r, b.c)));
    Ok(Report { r_max, checks_run, failures })
}
