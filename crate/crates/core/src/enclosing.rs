//! Smallest enclosing strips, weighted rhombi and strip crosses.

use crate::envelope::{envelope_min, sorted_matrix_search, SortedMatrixView};
use crate::geom::{convex_hull, strip_at_orientation, width_function, Point, PointSet, Strip};
use crate::{Error, Result};

/// An axis-aligned rhombus `{ |u - c_u| <= half_u, |w - c_w| <= half_w }` in
/// the weighted coordinates `u = cy*y + cx*x`, `w = cy*y - cx*x`. Its main
/// diagonal is horizontal; `cy / cx` is the aspect ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rhombus {
    pub center: Point,
    pub orientation: f64,
    pub half_u: f64,
    pub half_w: f64,
    pub cx: f64,
    pub cy: f64,
}

impl Rhombus {
    pub fn ratio(&self) -> f64 {
        self.cy / self.cx
    }

    /// The four corners, counterclockwise starting on the main diagonal.
    pub fn corners(&self) -> [Point; 4] {
        let h = self.half_u;
        let (dx, dy) = (h / self.cx, h / self.cy);
        let (s, c) = self.orientation.sin_cos();
        let at = |x: f64, y: f64| {
            Point::new(self.center.x + x * c - y * s, self.center.y + x * s + y * c)
        };
        [at(dx, 0.0), at(0.0, dy), at(-dx, 0.0), at(0.0, -dy)]
    }
}

/// A minimal weighted rhombus together with its width and a pair of points
/// whose coordinate difference attains it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhombusFit {
    pub rhombus: Rhombus,
    pub width: f64,
    pub witness: (Point, Point),
}

/// Smallest axis-aligned rhombus in the weighted coordinates of
/// [`Rhombus`]. Its width `max(range u, range w)` equals the largest value
/// of `cx*|dx| + cy*|dy|` over all pairs. The narrower range is widened
/// symmetrically about its own center.
pub fn smallest_weighted_rhombus(ps: &PointSet, cx: f64, cy: f64) -> Result<RhombusFit> {
    if !(cx > 0.0 && cy > 0.0 && cx.is_finite() && cy.is_finite()) {
        return Err(Error::NonPositiveWeight(cx, cy));
    }
    let pts = ps.points();
    let u = |p: &Point| cy * p.y + cx * p.x;
    let w = |p: &Point| cy * p.y - cx * p.x;
    let extremes = |f: &dyn Fn(&Point) -> f64| {
        let (mut lo, mut hi) = (0, 0);
        for (i, p) in pts.iter().enumerate() {
            if f(p) < f(&pts[lo]) {
                lo = i;
            }
            if f(p) > f(&pts[hi]) {
                hi = i;
            }
        }
        (lo, hi)
    };
    let (ulo, uhi) = extremes(&u);
    let (wlo, whi) = extremes(&w);
    let ru = u(&pts[uhi]) - u(&pts[ulo]);
    let rw = w(&pts[whi]) - w(&pts[wlo]);
    let cu = 0.5 * (u(&pts[uhi]) + u(&pts[ulo]));
    let cw = 0.5 * (w(&pts[whi]) + w(&pts[wlo]));
    let (width, witness) = if ru >= rw {
        (ru, (pts[ulo], pts[uhi]))
    } else {
        (rw, (pts[wlo], pts[whi]))
    };
    let rhombus = Rhombus {
        center: Point::new((cu - cw) / (2.0 * cx), (cu + cw) / (2.0 * cy)),
        orientation: 0.0,
        half_u: 0.5 * width,
        half_w: 0.5 * width,
        cx,
        cy,
    };
    Ok(RhombusFit {
        rhombus,
        width,
        witness,
    })
}

/// The narrowest enclosing strip over all orientations, by rotating
/// calipers. Returns the strip and its orientation.
pub fn smallest_strip(ps: &PointSet) -> Result<(Strip, f64)> {
    let hull = convex_hull(ps.points())?;
    let w = width_function(&hull)?;
    let phi = envelope_min(&w).map_or(0.0, |m| m.x);
    let strip = strip_at_orientation(ps, phi);
    Ok((strip, strip.orientation))
}

/// Union of a vertical strip `[x_lo, x_hi] x R` and a horizontal strip
/// `R x [y_lo, y_hi]` of the same width.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnclosingCross {
    pub x_lo: f64,
    pub x_hi: f64,
    pub y_lo: f64,
    pub y_hi: f64,
    pub width: f64,
}

impl EnclosingCross {
    /// Intersection of the two middle lines.
    pub fn center(&self) -> Point {
        Point::new(0.5 * (self.x_lo + self.x_hi), 0.5 * (self.y_lo + self.y_hi))
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        (p.x >= self.x_lo - tol && p.x <= self.x_hi + tol)
            || (p.y >= self.y_lo - tol && p.y <= self.y_hi + tol)
    }
}

/// A point set sorted once by x and once by y, with prefix and suffix
/// y-extents along the x order.
#[derive(Debug, Clone)]
pub struct SortedPoints {
    by_x: Vec<Point>,
    ys: Vec<f64>,
    pre_min: Vec<f64>,
    pre_max: Vec<f64>,
    suf_min: Vec<f64>,
    suf_max: Vec<f64>,
}

impl SortedPoints {
    pub fn new(ps: &PointSet) -> Self {
        let mut by_x = ps.points().to_vec();
        by_x.sort_by(|a, b| a.x.total_cmp(&b.x));
        let mut ys: Vec<f64> = ps.iter().map(|p| p.y).collect();
        ys.sort_by(f64::total_cmp);
        let n = by_x.len();
        // pre_*[i] covers by_x[..i], suf_*[i] covers by_x[i..].
        let mut pre_min = vec![f64::INFINITY; n + 1];
        let mut pre_max = vec![f64::NEG_INFINITY; n + 1];
        for i in 0..n {
            pre_min[i + 1] = pre_min[i].min(by_x[i].y);
            pre_max[i + 1] = pre_max[i].max(by_x[i].y);
        }
        let mut suf_min = vec![f64::INFINITY; n + 1];
        let mut suf_max = vec![f64::NEG_INFINITY; n + 1];
        for i in (0..n).rev() {
            suf_min[i] = suf_min[i + 1].min(by_x[i].y);
            suf_max[i] = suf_max[i + 1].max(by_x[i].y);
        }
        Self {
            by_x,
            ys,
            pre_min,
            pre_max,
            suf_min,
            suf_max,
        }
    }

    pub fn len(&self) -> usize {
        self.by_x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_x.is_empty()
    }

    pub fn by_x(&self) -> &[Point] {
        &self.by_x
    }

    pub fn sorted_ys(&self) -> &[f64] {
        &self.ys
    }

    /// y-extent of the points outside `by_x[lo..=hi]`, or `None` if none.
    fn outside(&self, lo: usize, hi: usize) -> Option<(f64, f64)> {
        let ymin = self.pre_min[lo].min(self.suf_min[hi + 1]);
        let ymax = self.pre_max[lo].max(self.suf_max[hi + 1]);
        (ymin <= ymax).then_some((ymin, ymax))
    }
}

/// Decides whether a strip cross of width `omega` covers the points, by
/// sliding the vertical strip over all `2n` positions where one of its
/// edges touches a point. Among feasible crosses the one with the leftmost
/// vertical strip is returned.
pub fn enclosing_cross_decision(sp: &SortedPoints, omega: f64) -> Option<EnclosingCross> {
    if !(omega >= 0.0) || sp.is_empty() {
        return None;
    }
    let xs = &sp.by_x;
    let n = xs.len();
    let fits = |lo: usize, hi: usize| match sp.outside(lo, hi) {
        None => true,
        Some((a, b)) => b - a <= omega,
    };
    let mut best: Option<(f64, usize, usize)> = None;
    let mut consider = |left: f64, lo: usize, hi: usize| {
        if best.is_none_or(|(l, _, _)| left < l) && fits(lo, hi) {
            best = Some((left, lo, hi));
        }
    };
    // Left edge on x_i: the strip holds x_j with x_j - x_i <= omega.
    let mut hi = 0;
    for lo in 0..n {
        hi = hi.max(lo);
        while hi + 1 < n && xs[hi + 1].x - xs[lo].x <= omega {
            hi += 1;
        }
        consider(xs[lo].x, lo, hi);
    }
    // Right edge on x_i: the strip holds x_j with x_i - x_j <= omega.
    let mut lo = 0;
    for hi in 0..n {
        while xs[hi].x - xs[lo].x > omega {
            lo += 1;
        }
        consider(xs[hi].x - omega, lo, hi);
    }
    let (left, lo, hi) = best?;
    let (y_lo, y_hi) = match sp.outside(lo, hi) {
        Some((a, b)) => {
            let slack = 0.5 * (omega - (b - a));
            (a - slack, b + slack)
        }
        None => {
            let mid = 0.5 * (sp.ys[0] + sp.ys[n - 1]);
            (mid - 0.5 * omega, mid + 0.5 * omega)
        }
    };
    Some(EnclosingCross {
        x_lo: left,
        x_hi: left + omega,
        y_lo,
        y_hi,
        width: omega,
    })
}

/// The smallest enclosing strip cross.
///
/// Its width is a difference of two x-coordinates or of two y-coordinates.
/// Both difference sets are rows-and-columns sorted matrices
/// `A[i][j] = x_j - x_{n-1-i}`, searched for their smallest feasible entry
/// with the sliding decision as predicate.
pub fn smallest_enclosing_cross(ps: &PointSet) -> EnclosingCross {
    let sp = SortedPoints::new(ps);
    let n = sp.len();
    let xs: Vec<f64> = sp.by_x.iter().map(|p| p.x).collect();
    let ys = &sp.ys;
    let mx = SortedMatrixView::new(n, n, |i, j| xs[j] - xs[n - 1 - i]);
    let my = SortedMatrixView::new(n, n, |i, j| ys[j] - ys[n - 1 - i]);
    let feasible = |w: f64| w >= 0.0 && enclosing_cross_decision(&sp, w).is_some();
    let wx = sorted_matrix_search(&mx, feasible).expect("the full x-extent is always feasible");
    let wy = sorted_matrix_search(&my, |w| w >= wx || feasible(w)).unwrap_or(wx);
    enclosing_cross_decision(&sp, wx.min(wy)).expect("searched width is feasible")
}
