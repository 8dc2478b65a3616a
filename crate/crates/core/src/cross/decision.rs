//! Is there a cross center serving every given pair within a budget?

use super::region::{clip_halfplane, pair_region, rectangle, RegionCase, FRAMES};
use crate::envelope::{upper_envelope, Domain, Piece, PiecewiseFunction, Segment1D};
use crate::geom::{Point, SpeedProfile};
use crate::travel::{cross_time, CrossCenter};
use crate::{Error, Result};

/// Tolerance, relative to `1 + delta`, for accepting a witness center.
pub const WITNESS_TOL: f64 = 1e-10;

/// `(slope, intercept)` of a finite linear piece.
fn linear(piece: &Piece) -> Option<(f64, f64)> {
    match *piece {
        Piece::Constant(c) if c.is_finite() => Some((0.0, c)),
        Piece::Linear { slope, intercept } => Some((slope, intercept)),
        _ => None,
    }
}

/// Upper envelope over `[lo, hi]` of the `frame`-th boundaries.
fn intersect_frame(boundaries: &[&PiecewiseFunction], lo: f64, hi: f64) -> PiecewiseFunction {
    let domain = Domain::Interval { start: lo, end: hi };
    let segs: Vec<Segment1D> = boundaries
        .iter()
        .enumerate()
        .flat_map(|(tag, g)| {
            g.spans().iter().map(move |s| Segment1D {
                start: s.start,
                end: s.end,
                piece: s.piece,
                tag,
            })
        })
        .collect();
    upper_envelope(domain, &segs, None)
}

/// Elementary intervals of two functions on the same domain, with both
/// pieces finite.
fn joint_pieces(f: &PiecewiseFunction, g: &PiecewiseFunction) -> Vec<(f64, f64, (f64, f64), (f64, f64))> {
    let (fs, gs) = (f.spans(), g.spans());
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < fs.len() && j < gs.len() {
        let start = fs[i].start.max(gs[j].start);
        let end = fs[i].end.min(gs[j].end);
        if end > start {
            if let (Some(a), Some(b)) = (linear(&fs[i].piece), linear(&gs[j].piece)) {
                out.push((start, end, a, b));
            }
        }
        if fs[i].end <= gs[j].end {
            i += 1;
        } else {
            j += 1;
        }
    }
    out
}

fn centroid(poly: &[Point]) -> Point {
    let k = poly.len() as f64;
    let (sx, sy) = poly.iter().fold((0.0, 0.0), |(x, y), p| (x + p.x, y + p.y));
    Point::new(sx / k, sy / k)
}

/// Whether every pair is served by the center within `delta` (up to the
/// witness tolerance).
pub fn serves_all(pairs: &[(Point, Point)], sigma: Point, delta: f64, inv_v: f64) -> bool {
    let limit = delta + WITNESS_TOL * (1.0 + delta.abs());
    pairs
        .iter()
        .all(|&(p, q)| cross_time(p, q, sigma.x, sigma.y, inv_v) <= limit)
}

/// Decides whether some cross center serves every pair within `delta`, and
/// returns one if so.
///
/// With `A = a - b` and `B = a + b`, the intersection of the four monotone
/// sets is `{ G_0(A) <= B <= -G_2(A) } ∩ { G_3(B) <= A <= -G_1(B) }`, where
/// `G_i` is the upper envelope of the pairs' `g_i`. The first set is a union
/// of trapezoids over the breakpoints in `A`, the second a union of slabs
/// over the breakpoints in `B`; overlapping trapezoids and slabs are
/// clipped against each other until a serving center turns up.
///
/// Centers can be restricted to the bounding box of the pairs: moving a
/// center into the box never lengthens a path.
pub fn cross_decision(
    pairs: &[(Point, Point)],
    delta: f64,
    speed: SpeedProfile,
) -> Result<Option<CrossCenter>> {
    if pairs.is_empty() {
        return Err(Error::NoPairs);
    }
    if !(delta >= 0.0 && delta.is_finite()) {
        return Err(Error::InvalidDelta(delta));
    }
    let inv_v = speed.inv_v();
    let (mut lo, mut hi) = (pairs[0].0, pairs[0].0);
    for &(p, q) in pairs {
        for r in [p, q] {
            if !r.is_finite() {
                return Err(Error::NonFinite(r.x, r.y));
            }
            lo = Point::new(lo.x.min(r.x), lo.y.min(r.y));
            hi = Point::new(hi.x.max(r.x), hi.y.max(r.y));
        }
    }
    let mut regions = Vec::with_capacity(pairs.len());
    for &(p, q) in pairs {
        match RegionCase::classify(p, q, delta, &speed) {
            RegionCase::Empty => return Ok(None),
            RegionCase::FullPlane => {}
            _ => regions.push(pair_region(p, q, delta, speed)?),
        }
    }
    let mid = Point::new(0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y));
    if regions.is_empty() || serves_all(pairs, mid, delta, inv_v) {
        return Ok(Some(CrossCenter::new(mid.x, mid.y, speed)));
    }
    let pad = 1e-9 * (1.0 + (hi.x - lo.x).max(hi.y - lo.y));
    let lo = Point::new(lo.x - pad, lo.y - pad);
    let hi = Point::new(hi.x + pad, hi.y + pad);

    // A = a - b, B = a + b.
    let (a_lo, a_hi) = (lo.x - hi.y, hi.x - lo.y);
    let (b_lo, b_hi) = (lo.x + lo.y, hi.x + hi.y);
    let frame = |i: usize, lo: f64, hi: f64| {
        let gs: Vec<&PiecewiseFunction> = regions.iter().map(|r| &r.boundaries[i]).collect();
        intersect_frame(&gs, lo, hi)
    };
    let g0 = frame(0, a_lo, a_hi);
    let g2 = frame(2, a_lo, a_hi);
    let g1 = frame(1, b_lo, b_hi);
    let g3 = frame(3, b_lo, b_hi);

    // Slabs over B: B_k <= B <= B_k+1 and G_3(B) <= A <= -G_1(B).
    let slabs = joint_pieces(&g3, &g1);
    // Polygons live in the (A, B) plane, stored as Point { x: A, y: B }.
    for (a0, a1, (m0, k0), (m2, k2)) in joint_pieces(&g0, &g2) {
        let mut poly = rectangle(Point::new(a0, b_lo), Point::new(a1, b_hi));
        // B >= m0 A + k0 and B <= -(m2 A + k2).
        poly = clip_halfplane(&poly, Point::new(m0, -1.0), -k0);
        poly = clip_halfplane(&poly, Point::new(m2, 1.0), -k2);
        if poly.is_empty() {
            continue;
        }
        let pb_lo = poly.iter().map(|p| p.y).fold(f64::INFINITY, f64::min);
        let pb_hi = poly.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max);
        let first = slabs.partition_point(|s| s.1 < pb_lo);
        for &(s0, s1, (m3, k3), (m1, k1)) in &slabs[first..] {
            if s0 > pb_hi {
                break;
            }
            let mut cell = clip_halfplane(&poly, Point::new(0.0, -1.0), -s0);
            cell = clip_halfplane(&cell, Point::new(0.0, 1.0), s1);
            // A >= m3 B + k3 and A <= -(m1 B + k1).
            cell = clip_halfplane(&cell, Point::new(-1.0, m3), -k3);
            cell = clip_halfplane(&cell, Point::new(1.0, m1), -k1);
            if cell.is_empty() {
                continue;
            }
            let c = centroid(&cell);
            let sigma = Point::new(0.5 * (c.x + c.y), 0.5 * (c.y - c.x));
            if serves_all(pairs, sigma, delta, inv_v) {
                return Ok(Some(CrossCenter::new(sigma.x, sigma.y, speed)));
            }
            for v in &cell {
                let sigma = Point::new(0.5 * (v.x + v.y), 0.5 * (v.y - v.x));
                if serves_all(pairs, sigma, delta, inv_v) {
                    return Ok(Some(CrossCenter::new(sigma.x, sigma.y, speed)));
                }
            }
        }
    }
    debug_assert!(FRAMES.len() == 4);
    Ok(None)
}
