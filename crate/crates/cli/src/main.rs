//! Command-line surface for parabolic-taxicab geometry: ball dumps,
//! boundary cross-sections, sequence exports, chord histograms, the
//! verification suite, and SVG figures.
//!
//! Exit codes are a stable contract: 0 success, 1 verification failure,
//! 2 usage error, 3 resource error (memory cap or I/O). The environment
//! variable `PCM_MEM_CAP` overrides the enumeration point budget.

mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use parataxi_core::chords::{antipode_count, chord_histogram, parity_scan, pc_diameter};
use parataxi_core::counts::{sequence_export, SequenceKind};
use parataxi_core::lattice::{Operator, Point, ORIGIN};
use parataxi_core::oracle::{bfs_ball_with_budget, DEFAULT_POINT_BUDGET};
use parataxi_core::render::{render_ball, render_chords, render_parabolas, StairwayOverlay};
use parataxi_core::section::cross_section;
use parataxi_core::Error as CoreError;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "parataxi",
    version,
    about = "Exact parabolic-taxicab geometry on the integer lattice"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DumpFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderWhat {
    Ball,
    Chords,
    Parabolas,
}

fn parse_point(s: &str) -> Result<Point, String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected a point as x,y — got {s:?}"))?;
    let x = x.trim().parse::<i64>().map_err(|e| format!("bad x coordinate {x:?}: {e}"))?;
    let y = y.trim().parse::<i64>().map_err(|e| format!("bad y coordinate {y:?}: {e}"))?;
    Ok(Point::new(x, y))
}

fn parse_kind(s: &str) -> Result<SequenceKind, String> {
    s.parse()
}

fn parse_operator(s: &str) -> Result<Operator, String> {
    s.parse()
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the ball of a given radius around one or more centers.
    Ball {
        /// Ball radius (nonnegative).
        #[arg(long, allow_hyphen_values = true)]
        radius: i64,
        /// Center as `x,y`; repeat for multi-center balls. Default: origin.
        #[arg(long = "center", value_parser = parse_point, allow_hyphen_values = true)]
        centers: Vec<Point>,
        #[arg(long, value_enum, default_value_t = DumpFormat::Csv)]
        format: DumpFormat,
    },
    /// Print the boundary cross-section along one line y = x + c.
    Section {
        /// Boundary radius (nonnegative).
        #[arg(long, allow_hyphen_values = true)]
        radius: i64,
        /// Intercept c of the line y = x + c.
        #[arg(long, allow_hyphen_values = true)]
        intercept: i64,
        /// Also compare the closed form against the breadth-first oracle.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Run the oracle-vs-closed-form verification suite.
    Verify {
        /// Largest radius to verify.
        #[arg(long = "max-radius", default_value_t = 20, allow_hyphen_values = true)]
        max_radius: i64,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Export an integer sequence indexed by radius.
    Sequences {
        /// One of: ball, boundary, c_of_r, abs_x, abs_y, diam_sq.
        #[arg(long, value_parser = parse_kind)]
        kind: SequenceKind,
        /// Largest radius to include.
        #[arg(long = "max-radius", allow_hyphen_values = true)]
        max_radius: i64,
        #[arg(long, value_enum, default_value_t = DumpFormat::Csv)]
        format: DumpFormat,
    },
    /// Chord-length histogram from one boundary base point.
    Chords {
        /// Boundary radius (positive).
        #[arg(long, allow_hyphen_values = true)]
        radius: i64,
        /// Base point on the boundary, as `x,y`.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        point: Point,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
        /// Also compute the chord diameter and this base point's antipode
        /// count (scans every base point; practical up to radius ~8).
        #[arg(long)]
        diameter: bool,
    },
    /// Check every boundary chord for even length; prints a JSON report.
    Parity {
        /// Boundary radius (positive).
        #[arg(long, allow_hyphen_values = true)]
        radius: i64,
    },
    /// Draw an SVG figure.
    Render {
        /// Figure to draw.
        #[arg(long, value_enum)]
        what: RenderWhat,
        /// Ball or chord-figure radius.
        #[arg(long, allow_hyphen_values = true)]
        radius: Option<i64>,
        /// Boundary layer to highlight (ball figure); repeatable.
        #[arg(long = "highlight")]
        highlights: Vec<i64>,
        /// Chord base point as `x,y` (chords figure).
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        point: Option<Point>,
        /// Smallest parabola index to draw (parabola figure; default -2).
        #[arg(long = "m-min", allow_hyphen_values = true)]
        m_min: Option<i64>,
        /// Largest parabola index to draw (parabola figure; default 2).
        #[arg(long = "m-max", allow_hyphen_values = true)]
        m_max: Option<i64>,
        /// Low corner of the square coordinate box (parabola figure; default -6).
        #[arg(long = "box-lo", allow_hyphen_values = true)]
        box_lo: Option<i64>,
        /// High corner of the square coordinate box (parabola figure; default 6).
        #[arg(long = "box-hi", allow_hyphen_values = true)]
        box_hi: Option<i64>,
        /// Stairway overlay start point `x,y` (parabola figure).
        #[arg(long = "stairway-start", value_parser = parse_point, allow_hyphen_values = true)]
        stairway_start: Option<Point>,
        /// First mirror of the stairway overlay: lp or lpp.
        #[arg(long = "stairway-first", value_parser = parse_operator)]
        stairway_first: Option<Operator>,
        /// Number of stairway steps.
        #[arg(long = "stairway-steps")]
        stairway_steps: Option<usize>,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    /// Closed form and oracle disagree (or a parity witness was found).
    Verification,
    /// Bad flag or domain value.
    Usage(String),
    /// Memory budget or I/O problem.
    Resource(String),
}

fn core_fail(e: CoreError) -> Failure {
    match e {
        CoreError::PointBudgetExceeded { .. } => Failure::Resource(e.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

fn point_budget() -> Result<usize, Failure> {
    match std::env::var("PCM_MEM_CAP") {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map_err(|_| Failure::Usage(format!("PCM_MEM_CAP must be a nonnegative integer, got {s:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_POINT_BUDGET),
        Err(e) => Err(Failure::Usage(format!("PCM_MEM_CAP: {e}"))),
    }
}

fn cmd_ball(radius: i64, mut centers: Vec<Point>, format: DumpFormat) -> Result<(), Failure> {
    if centers.is_empty() {
        centers.push(ORIGIN);
    }
    let budget = point_budget()?;
    let field = bfs_ball_with_budget(&centers, radius, budget).map_err(core_fail)?;
    match format {
        DumpFormat::Csv => print!("{}", field.to_csv()),
        DumpFormat::Json => {
            let mut summaries = Vec::new();
            let mut ball_total: i64 = 0;
            let mut bbox: Option<(i64, i64, i64, i64)> = None;
            for r in 0..=radius {
                let layer = field.boundary(r).map_err(core_fail)?;
                ball_total += layer.len() as i64;
                for p in layer {
                    bbox = Some(match bbox {
                        None => (p.x, p.x, p.y, p.y),
                        Some((x0, x1, y0, y1)) => {
                            (x0.min(p.x), x1.max(p.x), y0.min(p.y), y1.max(p.y))
                        }
                    });
                }
                let (min_x, max_x, min_y, max_y) = bbox.expect("layer 0 is never empty");
                summaries.push(json!({
                    "radius": r,
                    "ball_count": ball_total,
                    "boundary_count": layer.len(),
                    "min_x": min_x,
                    "max_x": max_x,
                    "min_y": min_y,
                    "max_y": max_y,
                }));
            }
            let doc = json!({
                "schema": 1,
                "radius": radius,
                "centers": centers.iter().map(|p| json!([p.x, p.y])).collect::<Vec<_>>(),
                "points": field.to_json(),
                "summaries": summaries,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    eprintln!(
        "ball: {} points, outer boundary {}",
        field.len(),
        field.outer_boundary().len()
    );
    Ok(())
}

fn cmd_section(radius: i64, intercept: i64, check: bool, format: TextFormat) -> Result<(), Failure> {
    let cs = cross_section(radius, intercept).map_err(core_fail)?;
    let oracle_xs = if check {
        let budget = point_budget()?;
        let field = bfs_ball_with_budget(&[ORIGIN], radius, budget).map_err(core_fail)?;
        let mut xs: Vec<i64> = field
            .boundary(radius)
            .map_err(core_fail)?
            .iter()
            .filter(|p| p.y - p.x == intercept)
            .map(|p| p.x)
            .collect();
        xs.sort_unstable();
        Some(xs)
    } else {
        None
    };
    let verdict = oracle_xs.as_ref().map(|xs| cs.xs().eq(xs.iter().copied()));
    match format {
        TextFormat::Text => {
            println!("{cs}");
            match verdict {
                Some(true) => println!("oracle check: ok"),
                Some(false) => println!("oracle check: MISMATCH"),
                None => {}
            }
        }
        TextFormat::Csv => println!("{}", cs.csv_row()),
        TextFormat::Json => {
            let mut doc = json!({
                "schema": 1,
                "r": cs.r(),
                "c": cs.c(),
                "parts": cs.parts().iter().map(|iv| json!([iv.lo(), iv.hi()])).collect::<Vec<_>>(),
                "point_count": cs.point_count(),
            });
            if let Some(ok) = verdict {
                doc["check"] = json!(if ok { "ok" } else { "mismatch" });
                if !ok {
                    doc["oracle"] = json!(oracle_xs);
                }
            }
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    if verdict == Some(false) {
        eprintln!("section ({radius},{intercept}): closed form disagrees with the oracle");
        return Err(Failure::Verification);
    }
    Ok(())
}

fn cmd_verify(max_radius: i64, json_out: bool) -> Result<(), Failure> {
    let budget = point_budget()?;
    let report = verify::run(max_radius, budget).map_err(core_fail)?;
    if json_out {
        println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("serializable"));
    } else {
        print!("{}", report.to_text());
    }
    if report.failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_sequences(kind: SequenceKind, max_radius: i64, format: DumpFormat) -> Result<(), Failure> {
    let values = sequence_export(kind, max_radius).map_err(core_fail)?;
    match format {
        DumpFormat::Csv => {
            for (r, v) in values.iter().enumerate() {
                println!("{r},{v}");
            }
        }
        DumpFormat::Json => {
            let doc = json!({
                "schema": 1,
                "kind": kind.name(),
                "r_max": max_radius,
                "values": values,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    Ok(())
}

fn cmd_chords(radius: i64, point: Point, format: TextFormat, diameter: bool) -> Result<(), Failure> {
    let hist = chord_histogram(radius, point).map_err(core_fail)?;
    let extremes = if diameter {
        let d = pc_diameter(radius).map_err(core_fail)?;
        let a = antipode_count(radius, point).map_err(core_fail)?;
        Some((d, a))
    } else {
        None
    };
    match format {
        TextFormat::Text => {
            println!("base {} on the boundary of radius {}", hist.base_point, hist.r);
            for (d, n) in &hist.counts {
                println!("{d}: {n}");
            }
            println!("total: {}", hist.total());
            if let Some((d, a)) = extremes {
                println!("diameter: {d}");
                println!("antipodes: {a}");
            }
        }
        TextFormat::Csv => print!("{}", hist.to_csv()),
        TextFormat::Json => {
            let counts: serde_json::Map<String, serde_json::Value> = hist
                .counts
                .iter()
                .map(|(d, n)| (d.to_string(), json!(n)))
                .collect();
            let mut doc = json!({
                "schema": 1,
                "r": hist.r,
                "base": [hist.base_point.x, hist.base_point.y],
                "counts": counts,
                "total": hist.total(),
            });
            if let Some((d, a)) = extremes {
                doc["diameter"] = json!(d);
                doc["antipodes"] = json!(a);
            }
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    Ok(())
}

fn cmd_parity(radius: i64) -> Result<(), Failure> {
    let report = parity_scan(radius).map_err(core_fail)?;
    println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("serializable"));
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_render(
    what: RenderWhat,
    radius: Option<i64>,
    highlights: Vec<i64>,
    point: Option<Point>,
    m_min: Option<i64>,
    m_max: Option<i64>,
    box_lo: Option<i64>,
    box_hi: Option<i64>,
    stairway_start: Option<Point>,
    stairway_first: Option<Operator>,
    stairway_steps: Option<usize>,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let usage = |msg: &str| Failure::Usage(msg.to_string());
    let parabola_flags = m_min.is_some()
        || m_max.is_some()
        || box_lo.is_some()
        || box_hi.is_some()
        || stairway_start.is_some()
        || stairway_first.is_some()
        || stairway_steps.is_some();
    let svg = match what {
        RenderWhat::Ball => {
            let r = radius.ok_or_else(|| usage("--what ball requires --radius"))?;
            if point.is_some() {
                return Err(usage("--point only applies to --what chords"));
            }
            if parabola_flags {
                return Err(usage("parabola-figure flags only apply to --what parabolas"));
            }
            render_ball(r, &highlights).map_err(core_fail)?
        }
        RenderWhat::Chords => {
            let r = radius.ok_or_else(|| usage("--what chords requires --radius"))?;
            let p = point.ok_or_else(|| usage("--what chords requires --point"))?;
            if !highlights.is_empty() {
                return Err(usage("--highlight only applies to --what ball"));
            }
            if parabola_flags {
                return Err(usage("parabola-figure flags only apply to --what parabolas"));
            }
            render_chords(r, p).map_err(core_fail)?
        }
        RenderWhat::Parabolas => {
            if radius.is_some() || point.is_some() || !highlights.is_empty() {
                return Err(usage(
                    "--radius, --point, and --highlight do not apply to --what parabolas",
                ));
            }
            let overlay = match (stairway_start, stairway_first, stairway_steps) {
                (None, None, None) => None,
                (Some(start), Some(first), Some(steps)) => {
                    Some(StairwayOverlay { start, first, steps })
                }
                _ => {
                    return Err(usage(
                        "stairway overlay needs all of --stairway-start, --stairway-first, --stairway-steps",
                    ))
                }
            };
            let (lo, hi) = (box_lo.unwrap_or(-6), box_hi.unwrap_or(6));
            if lo > hi {
                return Err(usage("--box-lo must not exceed --box-hi"));
            }
            render_parabolas(m_min.unwrap_or(-2), m_max.unwrap_or(2), lo, hi, overlay)
                .map_err(core_fail)?
        }
    };
    match out {
        Some(path) => std::fs::write(&path, svg)
            .map_err(|e| Failure::Resource(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{svg}"),
    }
    Ok(())
}

fn run() -> Result<(), Failure> {
    match Cli::parse().command {
        Command::Ball { radius, centers, format } => cmd_ball(radius, centers, format),
        Command::Section { radius, intercept, check, format } => {
            cmd_section(radius, intercept, check, format)
        }
        Command::Verify { max_radius, json } => cmd_verify(max_radius, json),
        Command::Sequences { kind, max_radius, format } => cmd_sequences(kind, max_radius, format),
        Command::Chords { radius, point, format, diameter } => {
            cmd_chords(radius, point, format, diameter)
        }
        Command::Parity { radius } => cmd_parity(radius),
        Command::Render {
            what,
            radius,
            highlights,
            point,
            m_min,
            m_max,
            box_lo,
            box_hi,
            stairway_start,
            stairway_first,
            stairway_steps,
            out,
        } => cmd_render(
            what,
            radius,
            highlights,
            point,
            m_min,
            m_max,
            box_lo,
            box_hi,
            stairway_start,
            stairway_first,
            stairway_steps,
            out,
        ),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
