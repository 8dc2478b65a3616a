//! Points, speed profiles, highway lines, convex hulls and widths.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::envelope::{Domain, Piece, PiecewiseFunction, Span};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn l1_dist(self, other: Point) -> f64 {
        (self.x - other.x).abs() + (self.y - other.y).abs()
    }

    /// Coordinates in the frame whose x-axis has direction `phi`.
    pub fn rotated_into(self, phi: f64) -> Point {
        let (s, c) = phi.sin_cos();
        Point::new(self.x * c + self.y * s, -self.x * s + self.y * c)
    }

    /// Inverse of [`Point::rotated_into`].
    pub fn rotated_out_of(self, phi: f64) -> Point {
        let (s, c) = phi.sin_cos();
        Point::new(self.x * c - self.y * s, self.x * s + self.y * c)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl std::ops::Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl std::ops::Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

/// Unit normal `(-sin phi, cos phi)` of a line with direction `phi`.
pub fn unit_normal(phi: f64) -> Point {
    let (s, c) = phi.sin_cos();
    Point::new(-s, c)
}

/// Normalizes an angle into `[0, pi)`.
pub fn normalize_angle(phi: f64) -> f64 {
    let r = phi.rem_euclid(PI);
    if r >= PI {
        0.0
    } else {
        r
    }
}

/// A non-empty set of sites with finite coordinates. Duplicates are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if let Some(p) = points.iter().find(|p| !p.is_finite()) {
            return Err(Error::NonFinite(p.x, p.y));
        }
        Ok(Self { points })
    }

    pub fn from_coords(coords: &[(f64, f64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| c.into()).collect())
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    /// Every point expressed in the frame whose x-axis has direction `phi`.
    pub fn rotated_into(&self, phi: f64) -> PointSet {
        PointSet {
            points: self.points.iter().map(|p| p.rotated_into(phi)).collect(),
        }
    }

    /// `(min, max)` corners of the axis-aligned bounding box.
    pub fn bbox(&self) -> (Point, Point) {
        let mut lo = self.points[0];
        let mut hi = self.points[0];
        for p in &self.points[1..] {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// Highway speed together with the derived access-angle constants.
///
/// For a finite speed `v > 1` the access angle is `alpha = acos(1/v)`,
/// `gamma = pi/2 - alpha`, `a = 1/sin(alpha)` and `b = 1/tan(alpha) = a/v`.
/// The infinite speed uses `1/v = 0` and `alpha = pi/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpeedProfile {
    v: f64,
    inv_v: f64,
    alpha: f64,
    sin_alpha: f64,
    cos_alpha: f64,
    tan_alpha: f64,
    gamma: f64,
    a_coef: f64,
    b_coef: f64,
}

impl SpeedProfile {
    pub fn finite(v: f64) -> Result<Self> {
        if !(v.is_finite() && v > 1.0) {
            return Err(Error::InvalidSpeed(v));
        }
        let inv_v = 1.0 / v;
        let alpha = inv_v.acos();
        let cos_alpha = inv_v;
        let sin_alpha = (1.0 - inv_v * inv_v).sqrt();
        let tan_alpha = sin_alpha / cos_alpha;
        Ok(Self {
            v,
            inv_v,
            alpha,
            sin_alpha,
            cos_alpha,
            tan_alpha,
            gamma: FRAC_PI_2 - alpha,
            a_coef: 1.0 / sin_alpha,
            b_coef: cos_alpha / sin_alpha,
        })
    }

    pub fn infinite() -> Self {
        Self {
            v: f64::INFINITY,
            inv_v: 0.0,
            alpha: FRAC_PI_2,
            sin_alpha: 1.0,
            cos_alpha: 0.0,
            tan_alpha: f64::INFINITY,
            gamma: 0.0,
            a_coef: 1.0,
            b_coef: 0.0,
        }
    }

    /// `inf` selects the infinite profile, anything else must exceed 1.
    pub fn new(v: f64) -> Result<Self> {
        if v == f64::INFINITY {
            Ok(Self::infinite())
        } else {
            Self::finite(v)
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.inv_v == 0.0
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn inv_v(&self) -> f64 {
        self.inv_v
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn sin_alpha(&self) -> f64 {
        self.sin_alpha
    }

    pub fn cos_alpha(&self) -> f64 {
        self.cos_alpha
    }

    pub fn tan_alpha(&self) -> f64 {
        self.tan_alpha
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn a_coef(&self) -> f64 {
        self.a_coef
    }

    pub fn b_coef(&self) -> f64 {
        self.b_coef
    }
}

/// A highway: the line `{ p : p . n(orientation) = offset }` with
/// `n(phi) = (-sin phi, cos phi)`. Orientation 0 with offset `c` is `y = c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HighwayLine {
    orientation: f64,
    pub offset: f64,
    pub speed: SpeedProfile,
}

impl HighwayLine {
    pub fn new(orientation: f64, offset: f64, speed: SpeedProfile) -> Self {
        // Flipping the direction by pi also flips the normal.
        let turned = orientation.rem_euclid(2.0 * PI) >= PI;
        let offset = if turned { -offset } else { offset };
        Self {
            orientation: normalize_angle(orientation),
            offset,
            speed,
        }
    }

    pub fn horizontal(y: f64, speed: SpeedProfile) -> Self {
        Self::new(0.0, y, speed)
    }

    pub fn orientation(&self) -> f64 {
        self.orientation
    }

    pub fn normal(&self) -> Point {
        unit_normal(self.orientation)
    }

    pub fn direction(&self) -> Point {
        let (s, c) = self.orientation.sin_cos();
        Point::new(c, s)
    }

    /// Point of the line closest to the origin.
    pub fn anchor(&self) -> Point {
        let n = self.normal();
        Point::new(n.x * self.offset, n.y * self.offset)
    }
}

/// The region between two parallel lines of direction `orientation`, given
/// by offsets along the unit normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Strip {
    pub orientation: f64,
    pub low: f64,
    pub high: f64,
}

impl Strip {
    pub fn width(&self) -> f64 {
        self.high - self.low
    }

    pub fn middle(&self) -> f64 {
        0.5 * (self.low + self.high)
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        let o = p.dot(unit_normal(self.orientation));
        o >= self.low - tol && o <= self.high + tol
    }
}

/// Convex hull in counterclockwise order (Andrew's monotone chain).
///
/// Collinear boundary points are dropped; an all-collinear input yields its
/// two extreme points, a single distinct location yields one point.
pub fn convex_hull(points: &[Point]) -> Result<Vec<Point>> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() <= 2 {
        return Ok(pts);
    }
    let turn = |o: Point, a: Point, b: Point| (a - o).cross(b - o);
    let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    Ok(hull)
}

/// Narrowest enclosing strip of direction `phi`.
pub fn strip_at_orientation(ps: &PointSet, phi: f64) -> Strip {
    let n = unit_normal(phi);
    let (low, high) = ps
        .iter()
        .map(|p| p.dot(n))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), o| {
            (lo.min(o), hi.max(o))
        });
    Strip {
        orientation: normalize_angle(phi),
        low,
        high,
    }
}

/// Width of the narrowest strip of direction `phi` around a convex polygon,
/// as a function on the circle `[0, pi)`.
///
/// Computed with rotating calipers: breakpoints are the edge directions
/// modulo pi, and on each piece the width is `|d| |cos(phi - theta)|` for the
/// antipodal vertex pair `d` of that piece.
pub fn width_function(hull: &[Point]) -> Result<PiecewiseFunction> {
    let domain = Domain::Circular { period: PI };
    if hull.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if hull.len() == 1 {
        return Ok(PiecewiseFunction::constant(domain, 0.0));
    }
    let h = hull.len();
    let mut breaks: Vec<f64> = (0..h)
        .map(|i| {
            let e = hull[(i + 1) % h] - hull[i];
            normalize_angle(e.y.atan2(e.x))
        })
        .collect();
    breaks.push(0.0);
    breaks.push(PI);
    breaks.sort_by(f64::total_cmp);
    breaks.dedup_by(|a, b| (*a - *b).abs() < 1e-14);

    let proj = |i: usize, n: Point| hull[i % h].dot(n);
    let mut spans = Vec::with_capacity(breaks.len());
    let mut imax = usize::MAX;
    let mut imin = usize::MAX;
    for w in breaks.windows(2) {
        let (start, end) = (w[0], w[1]);
        if end <= start {
            continue;
        }
        let n = unit_normal(0.5 * (start + end));
        if imax == usize::MAX {
            imax = (0..h).max_by(|&a, &b| proj(a, n).total_cmp(&proj(b, n))).unwrap();
            imin = (0..h).min_by(|&a, &b| proj(a, n).total_cmp(&proj(b, n))).unwrap();
        } else {
            // Projections along a convex polygon are bitonic, so the
            // extreme vertices only ever advance counterclockwise.
            for _ in 0..h {
                if proj(imax + 1, n) > proj(imax, n) {
                    imax = (imax + 1) % h;
                } else {
                    break;
                }
            }
            for _ in 0..h {
                if proj(imin + 1, n) < proj(imin, n) {
                    imin = (imin + 1) % h;
                } else {
                    break;
                }
            }
        }
        let d = hull[imax] - hull[imin];
        spans.push(Span {
            start,
            end,
            piece: Piece::Trig {
                amp: d.norm(),
                phase: (-d.x).atan2(d.y),
            },
            tag: None,
        });
    }
    Ok(PiecewiseFunction::from_spans(domain, spans))
}
