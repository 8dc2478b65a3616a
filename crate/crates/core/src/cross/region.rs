//! The set of cross centers that serve one pair within a time budget.
//!
//! For a pair `(p, q)` and budget `delta`, `R(p, q)` is the set of centers
//! `sigma` with `d_sigma(p, q) <= delta`. It is the union of at most four
//! convex pieces, one per path type: two strips (V and H) and two convex
//! polygons (VH and HV). The N path alone makes it the whole plane.
//!
//! `R` is the intersection of the four sets `F_i = R + cone(d_i)` for the
//! diagonal directions `d_i`. In the frame `t = u_i . sigma`,
//! `s = d_i . sigma` each `F_i` is the epigraph `s >= g_i(t)` of a
//! piecewise-linear function, the lower envelope of the pieces' lower
//! chains.

use crate::envelope::{lower_envelope, Domain, Piece, PiecewiseFunction, Segment1D};
use crate::geom::{Point, SpeedProfile};
use crate::travel::PathKind;
use crate::{Error, Result};

/// Structure of `R(p, q)` as the budget grows, with `w = |dx|`, `h = |dy|`
/// and `c = 1/v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionCase {
    /// `delta < (w + h) c`: no center works.
    Empty,
    /// Below `min(w + h c, h + w c)`: only the two polygons.
    TwoQuads,
    /// Below `max(w + h c, h + w c)`: one strip appears.
    HalfOpen,
    /// Below `w + h`: both strips.
    OpenBoth,
    /// Every center works.
    FullPlane,
}

impl RegionCase {
    pub fn classify(p: Point, q: Point, delta: f64, speed: &SpeedProfile) -> Self {
        let c = speed.inv_v();
        let w = (p.x - q.x).abs();
        let h = (p.y - q.y).abs();
        let (lo, hi) = {
            let a = w + h * c;
            let b = h + w * c;
            (a.min(b), a.max(b))
        };
        if delta >= w + h {
            RegionCase::FullPlane
        } else if delta < (w + h) * c {
            RegionCase::Empty
        } else if delta < lo {
            RegionCase::TwoQuads
        } else if delta < hi {
            RegionCase::HalfOpen
        } else {
            RegionCase::OpenBoth
        }
    }
}

/// One convex piece of a pair region.
#[derive(Debug, Clone, PartialEq)]
pub enum Component {
    /// Centers with `lo <= a <= hi` (V paths).
    VerticalStrip { lo: f64, hi: f64 },
    /// Centers with `lo <= b <= hi` (H paths).
    HorizontalStrip { lo: f64, hi: f64 },
    /// A convex polygon, counterclockwise (VH or HV paths).
    Polygon { kind: PathKind, vertices: Vec<Point> },
}

/// A rotated frame: `t = u . sigma`, `s = d . sigma`, with `u` and `d`
/// orthogonal diagonal vectors of squared length 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub u: Point,
    pub d: Point,
}

impl Frame {
    pub fn t(&self, p: Point) -> f64 {
        self.u.dot(p)
    }

    pub fn s(&self, p: Point) -> f64 {
        self.d.dot(p)
    }

    pub fn to_frame(&self, p: Point) -> Point {
        Point::new(self.t(p), self.s(p))
    }

    pub fn from_frame(&self, t: f64, s: f64) -> Point {
        Point::new(
            0.5 * (t * self.u.x + s * self.d.x),
            0.5 * (t * self.u.y + s * self.d.y),
        )
    }
}

/// The four frames, in order of the monotone directions `(1,1)`, `(-1,1)`,
/// `(-1,-1)` and `(1,-1)`. Frames 0 and 2 share `t = a - b`, frames 1 and 3
/// share `t = a + b`.
pub const FRAMES: [Frame; 4] = [
    Frame {
        u: Point::new(1.0, -1.0),
        d: Point::new(1.0, 1.0),
    },
    Frame {
        u: Point::new(1.0, 1.0),
        d: Point::new(-1.0, 1.0),
    },
    Frame {
        u: Point::new(1.0, -1.0),
        d: Point::new(-1.0, -1.0),
    },
    Frame {
        u: Point::new(1.0, 1.0),
        d: Point::new(1.0, -1.0),
    },
];

/// The budget actually used for the pieces: a hair above `delta` so that
/// regions that shrink to a point at a threshold keep some area.
pub fn inflated(delta: f64) -> f64 {
    delta + 1e-11 * (1.0 + delta.abs())
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairRegion {
    pub p: Point,
    pub q: Point,
    pub delta: f64,
    pub case: RegionCase,
    pub components: Vec<Component>,
    /// `g_i` per frame of [`FRAMES`], over the whole real line; `+inf`
    /// where `F_i` has no point, `-inf` everywhere for the full plane.
    pub boundaries: [PiecewiseFunction; 4],
}

impl PairRegion {
    /// Membership through the four monotone pieces.
    pub fn contains(&self, sigma: Point, tol: f64) -> bool {
        FRAMES
            .iter()
            .zip(&self.boundaries)
            .all(|(f, g)| f.s(sigma) >= g.eval(f.t(sigma)) - tol)
    }

    /// Membership through the convex pieces.
    pub fn contains_by_components(&self, sigma: Point, tol: f64) -> bool {
        if self.case == RegionCase::FullPlane {
            return true;
        }
        self.components.iter().any(|c| match c {
            Component::VerticalStrip { lo, hi } => sigma.x >= lo - tol && sigma.x <= hi + tol,
            Component::HorizontalStrip { lo, hi } => sigma.y >= lo - tol && sigma.y <= hi + tol,
            Component::Polygon { vertices, .. } => polygon_contains(vertices, sigma, tol),
        })
    }
}

fn polygon_contains(vertices: &[Point], p: Point, tol: f64) -> bool {
    let n = vertices.len();
    if n == 0 {
        return false;
    }
    (0..n).all(|i| {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let e = b - a;
        let len = e.norm();
        len == 0.0 || e.cross(p - a) >= -tol * len
    })
}

/// Keeps the part of a convex polygon where `n . x <= c`.
pub fn clip_halfplane(poly: &[Point], n: Point, c: f64) -> Vec<Point> {
    let mut out = Vec::with_capacity(poly.len() + 1);
    let k = poly.len();
    for i in 0..k {
        let a = poly[i];
        let b = poly[(i + 1) % k];
        let fa = n.dot(a) - c;
        let fb = n.dot(b) - c;
        if fa <= 0.0 {
            out.push(a);
        }
        if (fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0) {
            let t = fa / (fa - fb);
            out.push(Point::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)));
        }
    }
    out
}

pub fn rectangle(lo: Point, hi: Point) -> Vec<Point> {
    vec![lo, Point::new(hi.x, lo.y), hi, Point::new(lo.x, hi.y)]
}

/// The convex set `sum_k w_k |z_k - var_k| <= budget`, where each term is a
/// weight, an axis (`true` for the center's x) and a point coordinate.
fn weighted_l1_polygon(terms: &[(f64, bool, f64); 4], budget: f64, lo: Point, hi: Point) -> Vec<Point> {
    let mut poly = rectangle(lo, hi);
    for mask in 0..16u32 {
        let (mut na, mut nb, mut c) = (0.0, 0.0, budget);
        for (k, &(w, on_x, z)) in terms.iter().enumerate() {
            let s = if mask >> k & 1 == 1 { 1.0 } else { -1.0 };
            // s * w * (z - var) <= ... moves -s*w*var to the left side.
            if on_x {
                na -= s * w;
            } else {
                nb -= s * w;
            }
            c -= s * w * z;
        }
        poly = clip_halfplane(&poly, Point::new(na, nb), c);
        if poly.is_empty() {
            break;
        }
    }
    poly
}

fn components(p: Point, q: Point, budget: f64, speed: &SpeedProfile) -> Vec<Component> {
    let c = speed.inv_v();
    let w = (p.x - q.x).abs();
    let h = (p.y - q.y).abs();
    let mut out = Vec::new();
    let rv = 0.5 * (budget - h * c - w);
    if rv >= 0.0 {
        out.push(Component::VerticalStrip {
            lo: p.x.min(q.x) - rv,
            hi: p.x.max(q.x) + rv,
        });
    }
    let rh = 0.5 * (budget - w * c - h);
    if rh >= 0.0 {
        out.push(Component::HorizontalStrip {
            lo: p.y.min(q.y) - rh,
            hi: p.y.max(q.y) + rh,
        });
    }
    let lo = Point::new(p.x.min(q.x) - budget, p.y.min(q.y) - budget);
    let hi = Point::new(p.x.max(q.x) + budget, p.y.max(q.y) + budget);
    let vh = [(1.0, true, p.x), (c, false, p.y), (c, true, q.x), (1.0, false, q.y)];
    let hv = [(1.0, false, p.y), (c, true, p.x), (c, false, q.y), (1.0, true, q.x)];
    for (kind, terms) in [(PathKind::VH, vh), (PathKind::HV, hv)] {
        let vertices = weighted_l1_polygon(&terms, budget, lo, hi);
        if !vertices.is_empty() {
            out.push(Component::Polygon { kind, vertices });
        }
    }
    out
}

/// Lower chain of a component in a frame, as segments over `t`.
fn lower_chain(comp: &Component, frame: &Frame, tag: usize, out: &mut Vec<Segment1D>) {
    let line = |slope: f64, intercept: f64| Segment1D {
        start: f64::NEG_INFINITY,
        end: f64::INFINITY,
        piece: Piece::Linear { slope, intercept },
        tag,
    };
    match *comp {
        // a = (u.x t + d.x s) / 2 >= lo, and d.x = +-1.
        Component::VerticalStrip { lo, hi } => {
            let (u, d) = (frame.u.x, frame.d.x);
            let bound = if d > 0.0 { lo } else { hi };
            out.push(line(-u / d, 2.0 * bound / d));
        }
        Component::HorizontalStrip { lo, hi } => {
            let (u, d) = (frame.u.y, frame.d.y);
            let bound = if d > 0.0 { lo } else { hi };
            out.push(line(-u / d, 2.0 * bound / d));
        }
        Component::Polygon { ref vertices, .. } => {
            let mut pts: Vec<Point> = vertices.iter().map(|&v| frame.to_frame(v)).collect();
            pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
            let mut hull: Vec<Point> = Vec::with_capacity(pts.len());
            for p in pts {
                while hull.len() >= 2 {
                    let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
                    if (b - a).cross(p - a) <= 0.0 {
                        hull.pop();
                    } else {
                        break;
                    }
                }
                hull.push(p);
            }
            for w in hull.windows(2) {
                let (a, b) = (w[0], w[1]);
                if b.x > a.x {
                    let slope = (b.y - a.y) / (b.x - a.x);
                    out.push(Segment1D {
                        start: a.x,
                        end: b.x,
                        piece: Piece::Linear {
                            slope,
                            intercept: a.y - slope * a.x,
                        },
                        tag,
                    });
                }
            }
        }
    }
}

/// The region of centers serving `(p, q)` within `delta`.
pub fn pair_region(p: Point, q: Point, delta: f64, speed: SpeedProfile) -> Result<PairRegion> {
    if !(delta >= 0.0 && delta.is_finite()) {
        return Err(Error::InvalidDelta(delta));
    }
    let case = RegionCase::classify(p, q, delta, &speed);
    let domain = Domain::real_line();
    let (components, boundaries) = match case {
        RegionCase::FullPlane => (
            vec![],
            std::array::from_fn(|_| PiecewiseFunction::constant(domain, f64::NEG_INFINITY)),
        ),
        RegionCase::Empty => (
            vec![],
            std::array::from_fn(|_| PiecewiseFunction::constant(domain, f64::INFINITY)),
        ),
        _ => {
            let comps = components(p, q, inflated(delta), &speed);
            let bounds = std::array::from_fn(|i| {
                let mut segs = Vec::new();
                for (k, c) in comps.iter().enumerate() {
                    lower_chain(c, &FRAMES[i], k, &mut segs);
                }
                lower_envelope(domain, &segs, None)
            });
            (comps, bounds)
        }
    };
    Ok(PairRegion {
        p,
        q,
        delta,
        case,
        components,
        boundaries,
    })
}
