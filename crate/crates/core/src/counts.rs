//! Perimeter and area counts, Euclidean width and diameter, and the
//! integer sequences they generate.

use std::fmt;
use std::str::FromStr;

use crate::lattice::Point;
use crate::{Error, Result};

// Mathematical floor/ceiling of a/b for positive b: round toward -∞/+∞
// regardless of sign, never toward zero.
fn div_floor(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    let q = a / b;
    if a % b != 0 && a < 0 {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -div_floor(-a, b)
}

fn narrow(v: i128, what: &'static str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow(what))
}

/// Number of points on the boundary of the radius-`r` ball around the
/// origin: `(5r² - r)/2 - ⌈(r-1)/2⌉ + ⌈r/(r+1)⌉ + 1`.
///
/// The same count splits by parity into `1` for `r = 0`, `5r²/2 - r + 2`
/// for even `r ≥ 2`, and `(5r² + 5)/2 - r` for odd `r`; both evaluations
/// are computed and must agree.
pub fn boundary_count(r: i64) -> Result<i64> {
    if r < 0 {
        return Err(Error::NegativeRadius(r));
    }
    let rr = r as i128;
    let direct = (5 * rr * rr - rr) / 2 - div_ceil(rr - 1, 2) + div_ceil(rr, rr + 1) + 1;
    let split = if r == 0 {
        1
    } else if r % 2 == 0 {
        5 * rr * rr / 2 - rr + 2
    } else {
        (5 * rr * rr + 5) / 2 - rr
    };
    assert_eq!(direct, split, "boundary count evaluations disagree at r = {r}");
    narrow(direct, "boundary count")
}

/// Number of points in the closed ball of radius `r` around the origin:
/// `(10r³ + 9r² + 23r + 6⌈r/2⌉ + 12) / 12`, an exact division.
pub fn ball_count(r: i64) -> Result<i64> {
    if r < 0 {
        return Err(Error::NegativeRadius(r));
    }
    let rr = r as i128;
    let num = 10 * rr * rr * rr + 9 * rr * rr + 23 * rr + 6 * div_ceil(rr, 2) + 12;
    assert_eq!(num % 12, 0, "ball count numerator not divisible by 12 at r = {r}");
    narrow(num / 12, "ball count")
}

/// Squared Euclidean width of the radius-`r` ball: the ball fits between
/// the tangent lines `y = x ± r`, so the width is `r√2` and its square is
/// `2r²`.
pub fn width_sq(r: i64) -> Result<i64> {
    if r < 0 {
        return Err(Error::NegativeRadius(r));
    }
    let rr = r as i128;
    narrow(2 * rr * rr, "squared width")
}

/// The two boundary points realizing the Euclidean diameter of the
/// radius-`r` ball, and the squared distance between them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DiameterData {
    pub r: i64,
    /// Lower-right extremal point `(r(r+1)/2, r(r-1)/2)`.
    pub q: Point,
    /// Upper-left extremal point `(x(r), x(r) + c(r))`.
    pub p: Point,
    /// Intercept `c(r) = r - 2⌊r/3⌋` of the line through `p`.
    pub c_of_r: i64,
    /// `|pq|²`, exact.
    pub diam_sq: i64,
}

/// Diameter endpoints and squared length for radius `r`.
///
/// `q = (r(r+1)/2, r(r-1)/2)`; `p = (x(r), x(r) + c(r))` with
/// `x(r) = -⌊(r+1)(r+2)/6⌋` and `c(r) = r - 2⌊r/3⌋`. The squared length
/// is computed both from the endpoints and from the expanded closed form;
/// the two must agree.
pub fn diameter_data(r: i64) -> Result<DiameterData> {
    if r < 0 {
        return Err(Error::NegativeRadius(r));
    }
    let rr = r as i128;
    let qx = rr * (rr + 1) / 2;
    let qy = rr * (rr - 1) / 2;
    let c_of_r = rr - 2 * div_floor(rr, 3);
    let x_of_r = -div_floor((rr + 1) * (rr + 2), 6);
    let y_of_r = x_of_r + c_of_r;
    let from_points = (qx - x_of_r) * (qx - x_of_r) + (qy - y_of_r) * (qy - y_of_r);
    // Squared radical expression, with both floor terms as exact integers.
    let f = div_floor((rr + 1) * (rr + 2), 6);
    let a = rr * (rr + 1) / 2 + f;
    let b = rr * (rr - 3) / 2 + f + 2 * div_floor(rr, 3);
    let from_form = a * a + b * b;
    assert_eq!(
        from_points, from_form,
        "diameter evaluations disagree at r = {r}"
    );
    Ok(DiameterData {
        r,
        q: Point::new(narrow(qx, "diameter endpoint")?, narrow(qy, "diameter endpoint")?),
        p: Point::new(narrow(x_of_r, "diameter endpoint")?, narrow(y_of_r, "diameter endpoint")?),
        c_of_r: narrow(c_of_r, "diameter intercept")?,
        diam_sq: narrow(from_points, "squared diameter")?,
    })
}

/// The closed-form sequences this crate can emit, indexed by radius.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SequenceKind {
    /// Ball cardinality `#B(O, r)`.
    Ball,
    /// Boundary cardinality `#∂B(O, r)`.
    Boundary,
    /// Intercept `c(r)` of the upper-left diameter endpoint.
    COfR,
    /// `|x(r)|`, the absolute x-coordinate of that endpoint.
    AbsX,
    /// `|y(r)|`, its absolute y-coordinate.
    AbsY,
    /// Squared Euclidean diameter.
    DiamSq,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 6] = [
        SequenceKind::Ball,
        SequenceKind::Boundary,
        SequenceKind::COfR,
        SequenceKind::AbsX,
        SequenceKind::AbsY,
        SequenceKind::DiamSq,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            SequenceKind::Ball => "ball",
            SequenceKind::Boundary => "boundary",
            SequenceKind::COfR => "c_of_r",
            SequenceKind::AbsX => "abs_x",
            SequenceKind::AbsY => "abs_y",
            SequenceKind::DiamSq => "diam_sq",
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ball" => Ok(SequenceKind::Ball),
            "boundary" => Ok(SequenceKind::Boundary),
            "c_of_r" => Ok(SequenceKind::COfR),
            "abs_x" => Ok(SequenceKind::AbsX),
            "abs_y" => Ok(SequenceKind::AbsY),
            "diam_sq" => Ok(SequenceKind::DiamSq),
            other => Err(format!(
                "unknown sequence kind {other:?}; expected one of ball, boundary, c_of_r, abs_x, abs_y, diam_sq"
            )),
        }
    }
}

/// Values of the chosen sequence for `r = 0..=r_max`.
pub fn sequence_export(kind: SequenceKind, r_max: i64) -> Result<Vec<i64>> {
    if r_max < 0 {
        return Err(Error::NegativeRadius(r_max));
    }
    (0..=r_max)
        .map(|r| match kind {
            SequenceKind::Ball => ball_count(r),
            SequenceKind::Boundary => boundary_count(r),
            SequenceKind::COfR => diameter_data(r).map(|d| d.c_of_r),
            SequenceKind::AbsX => diameter_data(r).map(|d| d.p.x.abs()),
            SequenceKind::AbsY => diameter_data(r).map(|d| d.p.y.abs()),
            SequenceKind::DiamSq => diameter_data(r).map(|d| d.diam_sq),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const BALL_COUNTS: [i64; 19] = [
        1, 5, 15, 37, 75, 135, 221, 339, 493, 689, 931, 1225, 1575, 1987, 2465, 3015, 3641,
        4349, 5143,
    ];
    const BOUNDARY_COUNTS: [i64; 19] = [
        1, 4, 10, 22, 38, 60, 86, 118, 154, 196, 242, 294, 350, 412, 478, 550, 626, 708, 794,
    ];

    #[test]
    fn boundary_count_values() {
        for (r, &expected) in BOUNDARY_COUNTS.iter().enumerate() {
            assert_eq!(boundary_count(r as i64).unwrap(), expected);
        }
        assert_eq!(boundary_count(-1), Err(Error::NegativeRadius(-1)));
    }

    #[test]
    fn ball_count_values() {
        for (r, &expected) in BALL_COUNTS.iter().enumerate() {
            assert_eq!(ball_count(r as i64).unwrap(), expected);
        }
        assert_eq!(ball_count(-2), Err(Error::NegativeRadius(-2)));
    }

    #[test]
    fn width_sq_values() {
        assert_eq!(width_sq(0).unwrap(), 0);
        assert_eq!(width_sq(1).unwrap(), 2);
        assert_eq!(width_sq(5).unwrap(), 50);
    }

    #[test]
    fn diameter_data_at_2() {
        let d = diameter_data(2).unwrap();
        assert_eq!(d.q, Point::new(3, 1));
        assert_eq!(d.c_of_r, 2);
        assert_eq!(d.p, Point::new(-2, 0));
        assert_eq!(d.diam_sq, 26);
    }

    #[test]
    fn diameter_squares() {
        let got = sequence_export(SequenceKind::DiamSq, 9).unwrap();
        assert_eq!(got, vec![0, 4, 26, 106, 306, 680, 1384, 2500, 4122, 6570]);
    }

    #[test]
    fn intercept_sequence() {
        assert_eq!(
            sequence_export(SequenceKind::COfR, 12).unwrap(),
            vec![0, 1, 2, 1, 2, 3, 2, 3, 4, 3, 4, 5, 4]
        );
    }

    #[test]
    fn endpoint_coordinate_sequences() {
        assert_eq!(
            sequence_export(SequenceKind::AbsX, 9).unwrap(),
            vec![0, 1, 2, 3, 5, 7, 9, 12, 15, 18]
        );
        assert_eq!(
            sequence_export(SequenceKind::AbsY, 9).unwrap(),
            vec![0, 0, 0, 2, 3, 4, 7, 9, 11, 15]
        );
    }

    #[test]
    fn count_sequences() {
        assert_eq!(
            sequence_export(SequenceKind::Ball, 4).unwrap(),
            vec![1, 5, 15, 37, 75]
        );
        assert_eq!(
            sequence_export(SequenceKind::Boundary, 4).unwrap(),
            vec![1, 4, 10, 22, 38]
        );
        assert_eq!(sequence_export(SequenceKind::Ball, -1), Err(Error::NegativeRadius(-1)));
    }

    #[test]
    fn kind_parse_roundtrip() {
        for kind in SequenceKind::ALL {
            assert_eq!(kind.name().parse::<SequenceKind>().unwrap(), kind);
        }
        assert!("perimeter".parse::<SequenceKind>().is_err());
    }

    proptest! {
        #[test]
        fn ball_is_running_sum_of_boundaries(r in 0i64..=500) {
            let total: i64 = (0..=r).map(|s| boundary_count(s).unwrap()).sum();
            prop_assert_eq!(ball_count(r).unwrap(), total);
        }

        #[test]
        fn sections_sum_to_boundary(r in 0i64..=200) {
            let total: i64 = (-r..=r)
                .map(|c| crate::section::cross_section(r, c).unwrap().point_count())
                .sum();
            prop_assert_eq!(boundary_count(r).unwrap(), total);
        }

        #[test]
        fn per_line_counts(r in 2i64..=120) {
            for c in -r..=r {
                let n = crate::section::cross_section(r, c).unwrap().point_count();
                if (c - r) % 2 != 0 {
                    prop_assert_eq!(n, 0);
                } else if c.abs() == r {
                    prop_assert_eq!(n, crate::section::binom2(r + 1) + 1);
                } else {
                    let k = (r - c.abs()) / 2;
                    prop_assert_eq!(n, 2 * r - 2 * k);
                }
            }
        }

        #[test]
        fn diameter_endpoints_lie_on_tangent_lines(r in 0i64..=10_000) {
            let d = diameter_data(r).unwrap();
            // q sits on the lower tangent y = x - r; p on the line y = x + c(r).
            prop_assert_eq!(d.q.y - d.q.x, -r);
            prop_assert_eq!(d.p.y - d.p.x, d.c_of_r);
        }
    }
}
