//! Deterministic SVG figures: balls with highlighted layers, chord
//! colorings, and the parabola partition with stairway overlays.
//!
//! Output is plain SVG 1.1 text built from sorted integer data with a
//! hard-coded palette, so identical inputs produce byte-identical
//! documents. Markers are placed at 12 pixels per lattice unit with a
//! 2-unit margin; parabola arcs are exact quadratic Bézier segments
//! between lattice parameter values (their control points land on quarter
//! units, which are whole pixels at this scale).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::lattice::{parabola_index, stairway, Operator, Point, ORIGIN};
use crate::oracle::bfs_ball;
use crate::{Error, Result};

/// Pixels per lattice unit.
const SCALE: i64 = 12;
/// Margin around the content, in lattice units.
const MARGIN: i64 = 2;
/// Fixed fill colors; values index it modulo its length.
const PALETTE: [&str; 10] = [
    "#4477aa", "#66ccee", "#228833", "#ccbb44", "#ee6677", "#aa3377", "#994455", "#ee8866",
    "#44bb99", "#997700",
];
/// Fill for non-highlighted ball points.
const NEUTRAL: &str = "#c8c8c8";

/// A stairway polyline to draw on top of the parabola figure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StairwayOverlay {
    pub start: Point,
    pub first: Operator,
    pub steps: usize,
}

// Pixel mapping for a fixed content bounding box. `py` flips the y axis so
// larger lattice y is higher on screen.
struct Viewport {
    min_x: i64,
    max_x: i64,
    min_y: i64,
    max_y: i64,
}

impl Viewport {
    fn of(points: impl IntoIterator<Item = Point>) -> Viewport {
        let mut vp = Viewport { min_x: 0, max_x: 0, min_y: 0, max_y: 0 };
        let mut first = true;
        for p in points {
            if first {
                vp = Viewport { min_x: p.x, max_x: p.x, min_y: p.y, max_y: p.y };
                first = false;
            } else {
                vp.min_x = vp.min_x.min(p.x);
                vp.max_x = vp.max_x.max(p.x);
                vp.min_y = vp.min_y.min(p.y);
                vp.max_y = vp.max_y.max(p.y);
            }
        }
        vp
    }

    fn width(&self) -> i64 {
        (self.max_x - self.min_x + 2 * MARGIN) * SCALE
    }

    fn height(&self) -> i64 {
        (self.max_y - self.min_y + 2 * MARGIN) * SCALE
    }

    fn px(&self, x: i64) -> i64 {
        (x - self.min_x + MARGIN) * SCALE
    }

    fn py(&self, y: i64) -> i64 {
        (self.max_y - y + MARGIN) * SCALE
    }

    // Same mapping on quarter-unit coordinates (SCALE/4 pixels each).
    fn pxq(&self, qx: i64) -> i64 {
        (qx - 4 * self.min_x + 4 * MARGIN) * (SCALE / 4)
    }

    fn pyq(&self, qy: i64) -> i64 {
        (4 * self.max_y - qy + 4 * MARGIN) * (SCALE / 4)
    }
}

fn open_svg(vp: &Viewport) -> String {
    let (w, h) = (vp.width(), vp.height());
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(out, "<rect width=\"{w}\" height=\"{h}\" fill=\"#ffffff\"/>");
    out
}

fn style_block(rules: &[(String, String)]) -> String {
    let mut out = String::from("<style>\n");
    for (selector, body) in rules {
        let _ = writeln!(out, ".{selector}{{{body}}}");
    }
    out.push_str("</style>\n");
    out
}

fn circle(out: &mut String, vp: &Viewport, p: Point, radius: i64, class: &str) {
    let _ = writeln!(
        out,
        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" class=\"{}\"/>",
        vp.px(p.x),
        vp.py(p.y),
        radius,
        class
    );
}

/// The ball of radius `r` around the origin, one marker per point, with
/// the layers named in `highlight_radii` drawn in distinct colors.
pub fn render_ball(r: i64, highlight_radii: &[i64]) -> Result<String> {
    for &h in highlight_radii {
        if h < 0 || h > r {
            return Err(Error::RadiusOutOfRange { given: h, max: r });
        }
    }
    let field = bfs_ball(&[ORIGIN], r)?;
    let mut points: Vec<(Point, i64)> = field.points().collect();
    points.sort();
    let vp = Viewport::of(points.iter().map(|&(p, _)| p));

    let mut rules = vec![("pt".to_string(), format!("fill:{NEUTRAL}"))];
    for (i, _) in highlight_radii.iter().enumerate() {
        rules.push((format!("h{i}"), format!("fill:{}", PALETTE[i % PALETTE.len()])));
    }

    let mut out = open_svg(&vp);
    out.push_str(&style_block(&rules));
    for (p, d) in points {
        match highlight_radii.iter().position(|&h| h == d) {
            Some(i) => circle(&mut out, &vp, p, 4, &format!("h{i}")),
            None => circle(&mut out, &vp, p, 4, "pt"),
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// The boundary of radius `r` colored by chord distance from `base`,
/// which must lie on the boundary and is marked in black.
pub fn render_chords(r: i64, base: Point) -> Result<String> {
    if r < 1 {
        return Err(Error::RadiusTooSmall { given: r, min: 1 });
    }
    let field = bfs_ball(&[ORIGIN], r)?;
    if field.distance(base) != Some(r) {
        return Err(Error::NotOnBoundary { point: base, radius: r });
    }
    let from_base = bfs_ball(&[base], 2 * r)?;
    let boundary = field.outer_boundary();
    let vp = Viewport::of(boundary.iter().copied());

    let mut distances: BTreeMap<i64, ()> = BTreeMap::new();
    for &q in boundary {
        if q != base {
            let d = from_base.distance(q).expect("chords stay within twice the radius");
            distances.insert(d, ());
        }
    }
    let mut rules = Vec::new();
    for &d in distances.keys() {
        rules.push((
            format!("d{d}"),
            format!("fill:{}", PALETTE[(d.rem_euclid(PALETTE.len() as i64)) as usize]),
        ));
    }
    rules.push(("base".to_string(), "fill:#000000".to_string()));

    let mut out = open_svg(&vp);
    out.push_str(&style_block(&rules));
    for &q in boundary {
        if q == base {
            continue;
        }
        let d = from_base.distance(q).expect("chords stay within twice the radius");
        circle(&mut out, &vp, q, 4, &format!("d{d}"));
    }
    circle(&mut out, &vp, base, 5, "base");
    out.push_str("</svg>\n");
    Ok(out)
}

// Floor of the square root, by Newton iteration on integers.
fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut x = n;
    let mut y = (x + 1) / 2;
    while y < x {
        x = y;
        y = (x + n / x) / 2;
    }
    x
}

// Lattice point on parabola `m` at parameter `t` (the parameter is x - y;
// consecutive integers are exactly the stairway steps).
fn parabola_point(m: i64, t: i64) -> Point {
    Point::new((t * t + t) / 2 - m, (t * t - t) / 2 - m)
}

/// Lattice points of `[box_lo, box_hi]²` colored by parabola index, with
/// exact arcs for every parabola index in `[m_lo, m_hi]` (an empty index
/// range draws no arcs) and an optional stairway polyline.
pub fn render_parabolas(
    m_lo: i64,
    m_hi: i64,
    box_lo: i64,
    box_hi: i64,
    overlay: Option<StairwayOverlay>,
) -> Result<String> {
    assert!(box_lo <= box_hi, "empty coordinate box [{box_lo},{box_hi}]");
    let stair_points = match overlay {
        Some(o) => stairway(o.start, o.first, o.steps)?,
        None => Vec::new(),
    };
    let corners = [Point::new(box_lo, box_lo), Point::new(box_hi, box_hi)];
    let vp = Viewport::of(corners.into_iter().chain(stair_points.iter().copied()));

    let mut rules: Vec<(String, String)> = (0..PALETTE.len())
        .map(|i| (format!("c{i}"), format!("fill:{}", PALETTE[i])))
        .collect();
    rules.push(("axis".to_string(), "stroke:#999999;stroke-width:1".to_string()));
    rules.push((
        "arc".to_string(),
        "fill:none;stroke:#333333;stroke-width:1".to_string(),
    ));
    rules.push((
        "stair".to_string(),
        "fill:none;stroke:#000000;stroke-width:2".to_string(),
    ));

    let mut out = open_svg(&vp);
    out.push_str(&style_block(&rules));

    // Axes, clipped to the box.
    if box_lo <= 0 && 0 <= box_hi {
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" class=\"axis\"/>",
            vp.px(box_lo),
            vp.py(0),
            vp.px(box_hi),
            vp.py(0)
        );
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" class=\"axis\"/>",
            vp.px(0),
            vp.py(box_lo),
            vp.px(0),
            vp.py(box_hi)
        );
    }

    // One arc path per parabola, over each maximal run of in-box points.
    for m in m_lo..=m_hi {
        let t_max = isqrt((2 * (box_hi + m)).max(0)) + 2;
        let in_box = |p: Point| {
            box_lo <= p.x && p.x <= box_hi && box_lo <= p.y && p.y <= box_hi
        };
        let mut run: Vec<i64> = Vec::new();
        let mut runs: Vec<Vec<i64>> = Vec::new();
        for t in -t_max..=t_max {
            if in_box(parabola_point(m, t)) {
                run.push(t);
            } else if !run.is_empty() {
                runs.push(std::mem::take(&mut run));
            }
        }
        if !run.is_empty() {
            runs.push(run);
        }
        for run in runs {
            if run.len() < 2 {
                continue;
            }
            let start = parabola_point(m, run[0]);
            let mut d = format!("M {} {}", vp.px(start.x), vp.py(start.y));
            for &t in &run[..run.len() - 1] {
                let p = parabola_point(m, t);
                let q = parabola_point(m, t + 1);
                // Control point of the exact quadratic segment, in quarter
                // units: 4c = (4x(t) + 2t + 1, 4y(t) + 2t - 1).
                let cqx = 4 * p.x + 2 * t + 1;
                let cqy = 4 * p.y + 2 * t - 1;
                let _ = write!(
                    d,
                    " Q {} {} {} {}",
                    vp.pxq(cqx),
                    vp.pyq(cqy),
                    vp.px(q.x),
                    vp.py(q.y)
                );
            }
            let _ = writeln!(out, "<path d=\"{d}\" class=\"arc\"/>");
        }
    }

    // Point layer: every lattice point in the box, colored by its parabola.
    for x in box_lo..=box_hi {
        for y in box_lo..=box_hi {
            let p = Point::new(x, y);
            let slot = parabola_index(p).rem_euclid(PALETTE.len() as i64);
            circle(&mut out, &vp, p, 3, &format!("c{slot}"));
        }
    }

    // Stairway polyline on top.
    if !stair_points.is_empty() {
        let coords: Vec<String> = stair_points
            .iter()
            .map(|p| format!("{},{}", vp.px(p.x), vp.py(p.y)))
            .collect();
        let _ = writeln!(out, "<polyline points=\"{}\" class=\"stair\"/>", coords.join(" "));
    }

    out.push_str("</svg>\n");
    Ok(out)
}
