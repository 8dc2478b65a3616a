//! Quickest-path travel times in the presence of a highway or a highway
//! cross, and travel-time diameters for a fixed facility.

use std::fmt;

use crate::geom::{HighwayLine, Point, PointSet, SpeedProfile};
use crate::{Error, Result};

/// The ground metric used off the highway.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    L1,
    L2,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::L1 => "l1",
            Metric::L2 => "l2",
        })
    }
}

/// Which kind of path realizes a travel time.
///
/// `Direct`/`Highway` are used for a single highway. For a cross, `N` uses
/// no highway, `V` and `H` ride only the vertical or horizontal highway, and
/// `VH`/`HV` ride both, switching at the center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathKind {
    Direct,
    Highway,
    N,
    V,
    H,
    VH,
    HV,
}

impl PathKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PathKind::Direct => "direct",
            PathKind::Highway => "highway",
            PathKind::N => "N",
            PathKind::V => "V",
            PathKind::H => "H",
            PathKind::VH => "VH",
            PathKind::HV => "HV",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TravelTimeResult {
    pub time: f64,
    pub path_kind: PathKind,
}

/// An axis-aligned highway cross: the vertical highway `x = a` and the
/// horizontal highway `y = b`, both with the same speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossCenter {
    pub a: f64,
    pub b: f64,
    pub speed: SpeedProfile,
}

impl CrossCenter {
    pub fn new(a: f64, b: f64, speed: SpeedProfile) -> Self {
        Self { a, b, speed }
    }

    pub fn center(&self) -> Point {
        Point::new(self.a, self.b)
    }
}

/// A travel-time diameter together with a pair attaining it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Diameter {
    pub value: f64,
    pub witness: (Point, Point),
}

fn is_angle(phi: f64, target: f64) -> bool {
    (phi - target).abs() < 1e-12
}

/// Travel time between `p` and `q` using at most the highway `h`.
///
/// Under L1 the highway must be horizontal or vertical; access to it is then
/// perpendicular. Under L2 a highway path enters and leaves at the access
/// angle and is only used when the projected distance allows it.
pub fn line_travel_time(
    p: Point,
    q: Point,
    h: &HighwayLine,
    metric: Metric,
) -> Result<TravelTimeResult> {
    let phi = h.orientation();
    let c = h.offset;
    let speed = h.speed;
    let (direct, hp, hq, along) = match metric {
        Metric::L1 => {
            let (pr, qr) = if is_angle(phi, 0.0) {
                (p, q)
            } else if is_angle(phi, std::f64::consts::FRAC_PI_2) {
                // Exact quarter turn: (x, y) -> (y, -x).
                (Point::new(p.y, -p.x), Point::new(q.y, -q.x))
            } else {
                return Err(Error::L1RequiresAxisAligned);
            };
            (p.l1_dist(q), (pr.y - c).abs(), (qr.y - c).abs(), (pr.x - qr.x).abs())
        }
        Metric::L2 => {
            let (pr, qr) = if phi == 0.0 {
                (p, q)
            } else {
                (p.rotated_into(phi), q.rotated_into(phi))
            };
            (p.dist(q), (pr.y - c).abs(), (qr.y - c).abs(), (pr.x - qr.x).abs())
        }
    };
    let access = hp + hq;
    let ride = match metric {
        Metric::L1 => Some(access + along * speed.inv_v()),
        Metric::L2 if speed.is_infinite() => Some(access),
        Metric::L2 => {
            let spread = access * speed.b_coef();
            (along >= spread).then(|| access * speed.a_coef() + (along - spread) * speed.inv_v())
        }
    };
    Ok(match ride {
        Some(t) if t < direct => TravelTimeResult {
            time: t,
            path_kind: PathKind::Highway,
        },
        _ => TravelTimeResult {
            time: direct,
            path_kind: PathKind::Direct,
        },
    })
}

/// Travel time between `p` and `q` under L1 with the cross `sigma`.
pub fn cross_travel_time(p: Point, q: Point, sigma: &CrossCenter) -> TravelTimeResult {
    let iv = sigma.speed.inv_v();
    let dx = (p.x - q.x).abs();
    let dy = (p.y - q.y).abs();
    let (pa, qa) = ((p.x - sigma.a).abs(), (q.x - sigma.a).abs());
    let (pb, qb) = ((p.y - sigma.b).abs(), (q.y - sigma.b).abs());
    let options = [
        (dx + dy, PathKind::N),
        (pa + qa + dy * iv, PathKind::V),
        (pb + qb + dx * iv, PathKind::H),
        (pa + pb * iv + qa * iv + qb, PathKind::VH),
        (pb + pa * iv + qb * iv + qa, PathKind::HV),
    ];
    let mut best = options[0];
    for &o in &options[1..] {
        if o.0 < best.0 {
            best = o;
        }
    }
    TravelTimeResult {
        time: best.0,
        path_kind: best.1,
    }
}

/// Travel time under the cross without the path label; the hot path of the
/// cross optimizers.
pub fn cross_time(p: Point, q: Point, a: f64, b: f64, inv_v: f64) -> f64 {
    let dx = (p.x - q.x).abs();
    let dy = (p.y - q.y).abs();
    let (pa, qa) = ((p.x - a).abs(), (q.x - a).abs());
    let (pb, qb) = ((p.y - b).abs(), (q.y - b).abs());
    let n = dx + dy;
    let v = pa + qa + dy * inv_v;
    let h = pb + qb + dx * inv_v;
    let vh = pa + qb + (pb + qa) * inv_v;
    let hv = pb + qa + (pa + qb) * inv_v;
    n.min(v).min(h).min(vh).min(hv)
}

fn max_over_pairs(ps: &PointSet, mut time: impl FnMut(Point, Point) -> Result<f64>) -> Result<Diameter> {
    let pts = ps.points();
    let mut best = Diameter {
        value: 0.0,
        witness: (pts[0], pts[0]),
    };
    for (i, &p) in pts.iter().enumerate() {
        for &q in &pts[i + 1..] {
            let t = time(p, q)?;
            if t > best.value {
                best = Diameter {
                    value: t,
                    witness: (p, q),
                };
            }
        }
    }
    Ok(best)
}

/// Largest pairwise travel time with the highway `h`, by enumeration.
pub fn diameter_given_line(ps: &PointSet, h: &HighwayLine, metric: Metric) -> Result<Diameter> {
    max_over_pairs(ps, |p, q| Ok(line_travel_time(p, q, h, metric)?.time))
}

/// Largest pairwise travel time with the cross `sigma`, by enumeration.
pub fn diameter_given_cross(ps: &PointSet, sigma: &CrossCenter) -> Diameter {
    let iv = sigma.speed.inv_v();
    max_over_pairs(ps, |p, q| Ok(cross_time(p, q, sigma.a, sigma.b, iv)))
        .expect("cross travel times never fail")
}
