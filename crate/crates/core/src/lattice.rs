//! Lattice points, the seven generators, and the parabola partition.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A point of the integer lattice Z².
///
/// The derived `Ord` is lexicographic by `(x, y)`; that is the canonical
/// order used wherever a deterministic listing is required.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

/// The origin `(0, 0)`.
pub const ORIGIN: Point = Point { x: 0, y: 0 };

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Reflection across the diagonal `y = x`.
    pub const fn reflect_diag(self) -> Self {
        Point { x: self.y, y: self.x }
    }

    /// Translation by `(t, t)` along the diagonal.
    pub fn translate_diag(self, t: i64) -> Self {
        let t = t as i128;
        Point::new(narrow(self.x as i128 + t), narrow(self.y as i128 + t))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

// Coordinates stay far below 2^63 for every radius this crate can
// enumerate, so a failed narrowing means the caller left the supported
// coordinate range; fail loudly rather than wrap.
fn narrow(v: i128) -> i64 {
    i64::try_from(v).expect("lattice coordinate overflowed 64 bits")
}

/// The seven generators of the parabolic-taxicab graph.
///
/// `Lp` and `Lpp` are the two mirrors (involutions fixing the parabola
/// through the point); `Mr`, `Ml`, `Mu`, `Md` translate one unit right,
/// left, up, and down; `Id` does nothing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Operator {
    Id,
    Lp,
    Lpp,
    Mr,
    Ml,
    Mu,
    Md,
}

impl Operator {
    /// All seven operators.
    pub const ALL: [Operator; 7] = [
        Operator::Id,
        Operator::Lp,
        Operator::Lpp,
        Operator::Mr,
        Operator::Ml,
        Operator::Mu,
        Operator::Md,
    ];

    /// The six operators that move a point. `Id` only adds self-loops to
    /// the graph and cannot change any shortest-path length, so walks use
    /// this list.
    pub const GENERATORS: [Operator; 6] = [
        Operator::Lp,
        Operator::Lpp,
        Operator::Mr,
        Operator::Ml,
        Operator::Mu,
        Operator::Md,
    ];

    /// Image of `p` under this operator.
    pub fn apply(self, p: Point) -> Point {
        let (x, y) = (p.x as i128, p.y as i128);
        match self {
            Operator::Id => p,
            Operator::Lp => Point::new(narrow(-x + 2 * y + 1), p.y),
            Operator::Lpp => Point::new(p.x, narrow(2 * x - y + 1)),
            Operator::Mr => Point::new(narrow(x + 1), p.y),
            Operator::Ml => Point::new(narrow(x - 1), p.y),
            Operator::Mu => Point::new(p.x, narrow(y + 1)),
            Operator::Md => Point::new(p.x, narrow(y - 1)),
        }
    }

    /// Partner under conjugation by the diagonal reflection:
    /// `op.apply(p).reflect_diag() == op.tilde().apply(p.reflect_diag())`.
    pub const fn tilde(self) -> Operator {
        match self {
            Operator::Id => Operator::Id,
            Operator::Lp => Operator::Lpp,
            Operator::Lpp => Operator::Lp,
            Operator::Mr => Operator::Mu,
            Operator::Mu => Operator::Mr,
            Operator::Ml => Operator::Md,
            Operator::Md => Operator::Ml,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Operator::Id => "id",
            Operator::Lp => "lp",
            Operator::Lpp => "lpp",
            Operator::Mr => "mr",
            Operator::Ml => "ml",
            Operator::Mu => "mu",
            Operator::Md => "md",
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Operator {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "id" => Ok(Operator::Id),
            "lp" => Ok(Operator::Lp),
            "lpp" => Ok(Operator::Lpp),
            "mr" => Ok(Operator::Mr),
            "ml" => Ok(Operator::Ml),
            "mu" => Ok(Operator::Mu),
            "md" => Ok(Operator::Md),
            other => Err(format!(
                "unknown operator {other:?}; expected one of id, lp, lpp, mr, ml, mu, md"
            )),
        }
    }
}

/// Index `m` of the unique parabola `x + y + 2m = (x - y)²` through `p`.
///
/// `(x - y)² - x - y` is even for every lattice point, so the division is
/// exact; the mirrors `Lp`, `Lpp` preserve the index.
pub fn parabola_index(p: Point) -> i64 {
    let (x, y) = (p.x as i128, p.y as i128);
    let num = (x - y) * (x - y) - x - y;
    debug_assert_eq!(num.rem_euclid(2), 0);
    narrow(num / 2)
}

/// The orbit of `start` under strictly alternating mirror applications,
/// beginning with `first`: returns the `steps + 1` points
/// `[start, F₁(start), F₂F₁(start), …]`.
///
/// Every returned point lies on the parabola of `start`, and the points
/// are pairwise distinct (each mirror step moves the parabola parameter
/// `x - y` to its reflection, and the alternation drifts it by ±2, so the
/// walk never returns).
pub fn stairway(start: Point, first: Operator, steps: usize) -> Result<Vec<Point>> {
    if !matches!(first, Operator::Lp | Operator::Lpp) {
        return Err(Error::StairwayFirst(first));
    }
    let mut points = Vec::with_capacity(steps + 1);
    points.push(start);
    let mut op = first;
    let mut p = start;
    for _ in 0..steps {
        p = op.apply(p);
        points.push(p);
        op = if op == Operator::Lp { Operator::Lpp } else { Operator::Lp };
    }
    Ok(points)
}
