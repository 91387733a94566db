//! Exact geometry of parabolic-taxicab balls on the integer lattice.
//!
//! The parabolic-taxicab distance between two points of Z² is the length of
//! a shortest chain of generator applications connecting them, where a
//! single step is one of the four unit translations or one of the two
//! mirror involutions
//!
//! ```text
//! Lp:  (x, y) -> (-x + 2y + 1, y)        Lpp: (x, y) -> (x, 2x - y + 1)
//! ```
//!
//! Balls in this metric have an unusual three-lobed shape, but their
//! boundaries are rigid enough that every diagonal line `y = x + c` meets
//! them in at most two integer intervals, and the perimeter and area have
//! polynomial closed forms. This crate provides
//!
//! * [`lattice`] — points, the seven operators, the parabola partition and
//!   stairway orbits;
//! * [`oracle`] — a breadth-first-search ground truth producing exact
//!   distance fields for arbitrary center sets;
//! * [`section`] — the closed-form cross-sections `Sa(r, c)`, the signed
//!   counter `z`, and the recursive route to the negative part;
//! * [`counts`] — perimeter, area, Euclidean width/diameter, and the
//!   associated integer sequences;
//! * [`chords`] — distances between boundary points: histograms, diameters
//!   of boundaries, parity scans;
//! * [`render`] — deterministic SVG emission of ball, chord, and parabola
//!   figures.
//!
//! All arithmetic is exact: 64-bit integers with widened intermediates, and
//! loud failures on overflow. No floating point is used anywhere.

pub mod chords;
pub mod counts;
pub mod lattice;
pub mod oracle;
pub mod render;
pub mod section;

use thiserror::Error as ThisError;

use crate::lattice::{Operator, Point};

/// Errors shared by all modules of this crate.
#[derive(Clone, Debug, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("radius must be nonnegative, got {0}")]
    NegativeRadius(i64),
    #[error("radius must be at least {min}, got {given}")]
    RadiusTooSmall { given: i64, min: i64 },
    #[error("cutoff must be nonnegative, got {0}")]
    NegativeCutoff(i64),
    #[error("iteration count must be nonnegative, got {0}")]
    NegativeCount(i64),
    #[error("at least one center point is required")]
    EmptyCenters,
    #[error("distance {given} is outside the computed range 0..={max}")]
    RadiusOutOfRange { given: i64, max: i64 },
    #[error("{point} is not on the boundary of radius {radius}")]
    NotOnBoundary { point: Point, radius: i64 },
    #[error("line y = x + ({c}) misses the boundary of radius {r}: need |c| <= r and c = r (mod 2)")]
    SectionDomain { r: i64, c: i64 },
    #[error("stairway must start with one of the mirrors lp or lpp, got {0}")]
    StairwayFirst(Operator),
    #[error("point budget of {budget} exhausted; search completed radius {completed_radius}")]
    PointBudgetExceeded { budget: usize, completed_radius: i64 },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
