//! Closed-form cross-sections of ball boundaries along diagonal lines.
//!
//! For the ball of radius `r` around the origin, the boundary meets the
//! line `y = x + c` in a set `Sa(r, c)` of x-coordinates that is empty when
//! `|c| > r` or `c` and `r` have opposite parity, a single interval when
//! `c = ±r`, and otherwise the union of one strictly negative and one
//! positive interval. `S₋(r, c)` denotes the strictly negative portion.
//!
//! Besides the direct formulas this module provides the signed counter `z`
//! and the recursion it drives, which rebuilds `S₋(r, c)` from sections of
//! smaller radii; the two routes must always agree.

use std::fmt;
use std::ops::Add;

use crate::lattice::Point;
use crate::{Error, Result};

/// Closed integer interval `[lo, hi]`, empty iff `lo > hi`.
///
/// The empty interval has the single canonical representation `[0, -1]`,
/// so equality of values is equality of sets.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IntInterval {
    lo: i64,
    hi: i64,
}

impl IntInterval {
    /// The canonical empty interval.
    pub const EMPTY: IntInterval = IntInterval { lo: 0, hi: -1 };

    /// Interval `[lo, hi]`; any `lo > hi` collapses to [`IntInterval::EMPTY`].
    pub fn new(lo: i64, hi: i64) -> Self {
        if lo > hi {
            Self::EMPTY
        } else {
            IntInterval { lo, hi }
        }
    }

    pub fn lo(self) -> i64 {
        self.lo
    }

    pub fn hi(self) -> i64 {
        self.hi
    }

    pub fn is_empty(self) -> bool {
        self.lo > self.hi
    }

    /// Number of integers contained.
    pub fn len(self) -> i64 {
        if self.is_empty() {
            0
        } else {
            self.hi - self.lo + 1
        }
    }

    pub fn contains(self, v: i64) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// Minkowski sum with the singleton `{a}`.
    pub fn shift(self, a: i64) -> Self {
        if self.is_empty() {
            self
        } else {
            IntInterval { lo: self.lo + a, hi: self.hi + a }
        }
    }

    pub fn iter(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl Add<i64> for IntInterval {
    type Output = IntInterval;

    fn add(self, a: i64) -> IntInterval {
        self.shift(a)
    }
}

impl fmt::Display for IntInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("∅")
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}

/// The section `Sa(r, c) = { x : (x, x + c) on the boundary of radius r }`,
/// stored as its maximal disjoint intervals, sorted ascending.
///
/// After normalization there are at most two parts, each non-empty, with a
/// gap of at least one integer between them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossSection {
    r: i64,
    c: i64,
    parts: Vec<IntInterval>,
}

impl CrossSection {
    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn parts(&self) -> &[IntInterval] {
        &self.parts
    }

    /// The step count `k` with `|c| = r - 2k`, defined only on lines the
    /// boundary actually meets.
    pub fn k(&self) -> Option<i64> {
        if self.c.abs() <= self.r && (self.c - self.r) % 2 == 0 {
            Some((self.r - self.c.abs()) / 2)
        } else {
            None
        }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boundary points on the line.
    pub fn point_count(&self) -> i64 {
        self.parts.iter().map(|iv| iv.len()).sum()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.parts.iter().any(|iv| iv.contains(x))
    }

    /// The x-coordinates, ascending.
    pub fn xs(&self) -> impl Iterator<Item = i64> + '_ {
        self.parts.iter().flat_map(|iv| iv.iter())
    }

    /// The boundary points `(x, x + c)` on the line, in canonical order.
    pub fn points(&self) -> Vec<Point> {
        self.xs().map(|x| Point::new(x, x + self.c)).collect()
    }

    /// One CSV row `r,c,lo1,hi1[,lo2,hi2]`; an empty section dumps as `r,c`.
    pub fn csv_row(&self) -> String {
        let mut row = format!("{},{}", self.r, self.c);
        for iv in &self.parts {
            row.push_str(&format!(",{},{}", iv.lo(), iv.hi()));
        }
        row
    }
}

impl fmt::Display for CrossSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        for (i, iv) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

/// `n(n-1)/2`, the count of 2-element subsets; `binom2(k+1)` is the k-th
/// triangular number.
///
/// Panics on negative input: no section formula ever needs one, so a
/// negative argument indicates a caller bug.
pub fn binom2(n: i64) -> i64 {
    assert!(n >= 0, "binom2 argument must be nonnegative, got {n}");
    let n = n as i128;
    i64::try_from(n * (n - 1) / 2).expect("binom2 overflowed 64 bits")
}

// Drop empties, sort, and merge overlapping or adjacent intervals.
fn normalize(mut parts: Vec<IntInterval>) -> Vec<IntInterval> {
    parts.retain(|iv| !iv.is_empty());
    parts.sort();
    let mut merged: Vec<IntInterval> = Vec::with_capacity(parts.len());
    for iv in parts {
        match merged.last_mut() {
            Some(last) if iv.lo() <= last.hi() + 1 => {
                *last = IntInterval::new(last.lo(), last.hi().max(iv.hi()));
            }
            _ => merged.push(iv),
        }
    }
    merged
}

// Strictly negative run of Sa(r, c) for |c| <= r - 2 with c = r (mod 2);
// the four branches split on the sign of c and the parity of k.
fn negative_part(r: i64, c: i64, k: i64) -> IntInterval {
    if c <= 0 {
        if k % 2 == 1 {
            IntInterval::new(k - r, -1) + (c * (k - 1) - binom2(k))
        } else {
            IntInterval::new(0, r - k - 1) + (c * k - binom2(k + 1))
        }
    } else if k % 2 == 1 {
        IntInterval::new(0, r - k - 1) + (-c * (k + 1) - binom2(k + 1))
    } else {
        IntInterval::new(k - r, -1) + (-c * k - binom2(k))
    }
}

// Non-negative run of Sa(r, c) for |c| <= r - 2 with c = r (mod 2).
fn nonneg_part(r: i64, c: i64, k: i64) -> IntInterval {
    if c >= 0 {
        IntInterval::new(binom2(r - 1 - k) + k, binom2(r - k) + k)
    } else {
        IntInterval::new(binom2(r - k) + 1, binom2(r - k + 1))
    }
}

/// The full section `Sa(r, c)` in closed form.
pub fn cross_section(r: i64, c: i64) -> Result<CrossSection> {
    if r < 0 {
        return Err(Error::NegativeRadius(r));
    }
    let parts = if c.abs() > r || (c - r) % 2 != 0 {
        Vec::new()
    } else if c == r {
        normalize(vec![IntInterval::new(-r, binom2(r))])
    } else if c == -r {
        normalize(vec![IntInterval::new(0, binom2(r + 1))])
    } else {
        let k = (r - c.abs()) / 2;
        normalize(vec![negative_part(r, c, k), nonneg_part(r, c, k)])
    };
    Ok(CrossSection { r, c, parts })
}

/// The strictly negative part `S₋(r, c)` in closed form: at most one
/// interval, returned as a (possibly empty) list.
pub fn neg_section(r: i64, c: i64) -> Result<Vec<IntInterval>> {
    let section = cross_section(r, c)?;
    let negatives: Vec<IntInterval> = section
        .parts
        .iter()
        .filter_map(|iv| {
            let clipped = IntInterval::new(iv.lo(), iv.hi().min(-1));
            (!clipped.is_empty()).then_some(clipped)
        })
        .collect();
    debug_assert!(negatives.len() <= 1);
    Ok(negatives)
}

/// The signed counter `z(x) = ε(x)(|x| + 1)` with `ε(x) = -1` for positive
/// `x` and `+1` otherwise; never returns 0.
pub fn zf(x: i64) -> i64 {
    if x > 0 {
        -(x + 1)
    } else {
        -x + 1
    }
}

/// The `k`-fold composition of [`zf`], evaluated in closed form:
/// `(-1)^k (x + k)` for `x > 0` and `(-1)^(k-1) (-x + k)` for `x <= 0`
/// (with `k >= 1`); `zk(x, 0) = x`.
pub fn zk(x: i64, k: i64) -> Result<i64> {
    if k < 0 {
        return Err(Error::NegativeCount(k));
    }
    if k == 0 {
        return Ok(x);
    }
    let sign = |e: i64| if e % 2 == 0 { 1 } else { -1 };
    let v = if x > 0 {
        sign(k) * (x + k)
    } else {
        sign(k - 1) * (-x + k)
    };
    Ok(v)
}

/// `S₋(r, c)` by the unfolding recursion instead of the direct formulas:
/// `S₋(r, c) = S₋(r-1, z(c))` for `c <= 0` and
/// `S₋(r, c) = S₋(r-1, z(c)) + (z(c) - c)` for `c > 0`, descending until
/// the line is extremal for the smaller radius.
///
/// At the top level the extremal lines are explicit: `S₋(r, r) = [-r, -1]`
/// and `S₋(r, -r) = ∅`. Inside the descent the `c' = -r'` stop instead
/// contributes `[0, r' - 1]`, the non-negative block whose later shifts
/// produce the negative run; with that convention the result agrees with
/// [`neg_section`] everywhere.
///
/// Rejects lines the boundary does not meet (`|c| > r` or parity mismatch).
pub fn neg_section_recursive(r: i64, c: i64) -> Result<Vec<IntInterval>> {
    if r < 0 {
        return Err(Error::NegativeRadius(r));
    }
    if c.abs() > r || (c - r) % 2 != 0 {
        return Err(Error::SectionDomain { r, c });
    }
    if c == -r {
        return Ok(Vec::new());
    }
    let mut r = r;
    let mut c = c;
    let mut shift = 0i64;
    let base = loop {
        if c == r {
            break IntInterval::new(-r, -1);
        }
        if c == -r {
            break IntInterval::new(0, r - 1);
        }
        let zc = zf(c);
        if c > 0 {
            shift += zc - c;
        }
        c = zc;
        r -= 1;
        debug_assert!(r >= 0, "unfolding escaped the valid domain");
    };
    let shifted = base + shift;
    Ok(if shifted.is_empty() { Vec::new() } else { vec![shifted] })
}
