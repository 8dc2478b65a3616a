//! Optimal placement of a single highway.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::enclosing::{smallest_strip, smallest_weighted_rhombus, Rhombus, RhombusFit};
use crate::envelope::{envelope_min, upper_envelope, Domain, Segment1D};
use crate::geom::{convex_hull, strip_at_orientation, width_function, HighwayLine, Point, PointSet, SpeedProfile};
use crate::report::{EnclosingShape, Facility, Guarantee, Method, SolveReport};
use crate::travel::{diameter_given_line, Metric};
use crate::{Error, Result};

/// Weights of the rhombus coordinates that lower-bound travel times.
fn rhombus_weights(metric: Metric, speed: &SpeedProfile) -> (f64, f64) {
    match metric {
        Metric::L1 => (speed.inv_v(), 1.0),
        Metric::L2 => (speed.cos_alpha(), speed.sin_alpha()),
    }
}

fn extreme_pair(ps: &PointSet, phi: f64) -> (Point, Point) {
    let n = crate::geom::unit_normal(phi);
    let key = |p: &&Point| p.dot(n);
    let lo = ps.iter().min_by(|a, b| key(a).total_cmp(&key(b))).unwrap();
    let hi = ps.iter().max_by(|a, b| key(a).total_cmp(&key(b))).unwrap();
    (*lo, *hi)
}

/// Highway of direction `phi` along the main diagonal of the smallest
/// weighted rhombus of the rotated point set, in O(n).
///
/// Requires a finite speed. The returned rhombus is expressed in the
/// original coordinates.
pub fn rhombus_placement(
    ps: &PointSet,
    phi: f64,
    metric: Metric,
    speed: SpeedProfile,
) -> Result<(HighwayLine, RhombusFit)> {
    if speed.is_infinite() {
        return Err(Error::InfiniteSpeed);
    }
    let (cx, cy) = rhombus_weights(metric, &speed);
    let rotated = if phi == 0.0 { ps.clone() } else { ps.rotated_into(phi) };
    let mut fit = smallest_weighted_rhombus(&rotated, cx, cy)?;
    let offset = fit.rhombus.center.y;
    if phi != 0.0 {
        let unrotate = |p: Point| p.rotated_out_of(phi);
        fit.rhombus.center = unrotate(fit.rhombus.center);
        fit.rhombus.orientation = phi;
        fit.witness = (unrotate(fit.witness.0), unrotate(fit.witness.1));
    }
    Ok((HighwayLine::new(phi, offset, speed), fit))
}

fn rhombus_report(
    ps: &PointSet,
    line: HighwayLine,
    rhombus: Rhombus,
    metric: Metric,
    guarantee: Guarantee,
    method: Method,
) -> Result<SolveReport> {
    let d = diameter_given_line(ps, &line, metric)?;
    Ok(SolveReport {
        facility: Facility::Line(line),
        metric,
        diameter: d.value,
        witness: d.witness,
        guarantee,
        method,
        shape: Some(EnclosingShape::Rhombus(rhombus)),
    })
}

/// Optimal horizontal highway.
///
/// With infinite speed it is the middle line of the smallest horizontal
/// strip. Otherwise it is the main diagonal of the smallest axis-aligned
/// rhombus in the coordinates `(x/v, y)` (L1) or `(x cos a, y sin a)` (L2),
/// `a` the access angle. Under L1 the rhombus width is the diameter; under
/// L2 the diameter is evaluated over all pairs, which costs O(n^2).
pub fn optimal_horizontal_line(
    ps: &PointSet,
    metric: Metric,
    speed: SpeedProfile,
) -> Result<SolveReport> {
    if speed.is_infinite() {
        let strip = strip_at_orientation(ps, 0.0);
        return Ok(SolveReport {
            facility: Facility::Line(HighwayLine::horizontal(strip.middle(), speed)),
            metric,
            diameter: strip.width(),
            witness: extreme_pair(ps, 0.0),
            guarantee: Guarantee::Exact,
            method: Method::HorizontalStrip,
            shape: Some(EnclosingShape::Strip(strip)),
        });
    }
    let (line, fit) = rhombus_placement(ps, 0.0, metric, speed)?;
    match metric {
        Metric::L1 => Ok(SolveReport {
            facility: Facility::Line(line),
            metric,
            diameter: fit.width,
            witness: fit.witness,
            guarantee: Guarantee::Exact,
            method: Method::HorizontalRhombus,
            shape: Some(EnclosingShape::Rhombus(fit.rhombus)),
        }),
        Metric::L2 => rhombus_report(
            ps,
            line,
            fit.rhombus,
            metric,
            Guarantee::Exact,
            Method::HorizontalRhombus,
        ),
    }
}

/// Optimal highway of the fixed direction `phi`. Under L1 only horizontal
/// and vertical directions are allowed.
pub fn optimal_line_at_orientation(
    ps: &PointSet,
    metric: Metric,
    speed: SpeedProfile,
    phi: f64,
) -> Result<SolveReport> {
    let phi = crate::geom::normalize_angle(phi);
    if phi == 0.0 {
        return optimal_horizontal_line(ps, metric, speed);
    }
    if metric == Metric::L1 && (phi - FRAC_PI_2).abs() > 1e-12 {
        return Err(Error::L1RequiresAxisAligned);
    }
    if metric == Metric::L1 {
        // A quarter turn maps L1 onto itself exactly.
        let turned = PointSet::new(ps.iter().map(|p| Point::new(p.y, -p.x)).collect())?;
        let mut r = optimal_horizontal_line(&turned, metric, speed)?;
        let back = |p: Point| Point::new(-p.y, p.x);
        let Facility::Line(h) = r.facility else {
            unreachable!()
        };
        r.facility = Facility::Line(HighwayLine::new(FRAC_PI_2, h.offset, speed));
        r.witness = (back(r.witness.0), back(r.witness.1));
        r.shape = r.shape.map(|s| match s {
            EnclosingShape::Rhombus(mut rh) => {
                rh.center = back(rh.center);
                rh.orientation = FRAC_PI_2;
                EnclosingShape::Rhombus(rh)
            }
            EnclosingShape::Strip(mut st) => {
                st.orientation = FRAC_PI_2;
                EnclosingShape::Strip(st)
            }
            other => other,
        });
        return Ok(r);
    }
    if speed.is_infinite() {
        let strip = strip_at_orientation(ps, phi);
        return Ok(SolveReport {
            facility: Facility::Line(HighwayLine::new(phi, strip.middle(), speed)),
            metric,
            diameter: strip.width(),
            witness: extreme_pair(ps, phi),
            guarantee: Guarantee::Exact,
            method: Method::HorizontalStrip,
            shape: Some(EnclosingShape::Strip(strip)),
        });
    }
    let (line, fit) = rhombus_placement(ps, phi, metric, speed)?;
    rhombus_report(ps, line, fit.rhombus, metric, Guarantee::Exact, Method::HorizontalRhombus)
}

/// Optimal infinite-speed highway of any direction: the middle line of the
/// narrowest enclosing strip.
pub fn optimal_line_free_infinite(ps: &PointSet) -> Result<SolveReport> {
    let (strip, phi) = smallest_strip(ps)?;
    Ok(SolveReport {
        facility: Facility::Line(HighwayLine::new(phi, strip.middle(), SpeedProfile::infinite())),
        metric: Metric::L2,
        diameter: strip.width(),
        witness: extreme_pair(ps, phi),
        guarantee: Guarantee::Exact,
        method: Method::FreeStrip,
        shape: Some(EnclosingShape::Strip(strip)),
    })
}

/// Width of the smallest rhombus with main diagonal at `phi`, as a function
/// of `phi`: the larger of the hull widths at `phi - gamma` and
/// `phi + gamma`, `gamma` the complement of the access angle.
pub fn rhombus_width_function(ps: &PointSet, speed: &SpeedProfile) -> Result<crate::envelope::PiecewiseFunction> {
    let hull = convex_hull(ps.points())?;
    let w = width_function(&hull)?;
    let g = speed.gamma();
    Ok(w.shifted(g).max_with(&w.shifted(-g)))
}

/// For every pair, its Euclidean distance over the open range of highway
/// directions that make an angle larger than the access angle with the
/// pair. There the highway cannot speed the pair up.
pub fn blocked_pair_segments(ps: &PointSet, speed: &SpeedProfile) -> Vec<Segment1D> {
    let pts = ps.points();
    let alpha = speed.alpha();
    let span = PI - 2.0 * alpha;
    let mut segs = Vec::with_capacity(pts.len() * pts.len().saturating_sub(1) / 2);
    let mut tag = 0;
    for (i, &p) in pts.iter().enumerate() {
        for &q in &pts[i + 1..] {
            let d = q - p;
            let len = d.norm();
            if len > 0.0 && span > 0.0 {
                let start = d.y.atan2(d.x) + alpha;
                segs.push(Segment1D::constant(start, start + span, len, tag));
            }
            tag += 1;
        }
    }
    segs
}

fn single_point_report(ps: &PointSet, speed: SpeedProfile, method: Method) -> SolveReport {
    let p = ps.points()[0];
    SolveReport {
        facility: Facility::Line(HighwayLine::horizontal(p.y, speed)),
        metric: Metric::L2,
        diameter: 0.0,
        witness: (p, p),
        guarantee: Guarantee::Exact,
        method,
        shape: None,
    }
}

/// Optimal L2 highway of any direction and finite speed, in O(n^2 log n).
///
/// For each direction the best diameter is the upper envelope of the
/// rhombus width function and, for each pair, its distance over the
/// directions where the highway is useless to it. The lowest point of the
/// envelope gives the direction; the rhombus diagonal gives the position.
pub fn optimal_line_l2_exact(ps: &PointSet, speed: SpeedProfile) -> Result<SolveReport> {
    if speed.is_infinite() {
        return Err(Error::InfiniteSpeed);
    }
    if ps.len() < 2 {
        return Ok(single_point_report(ps, speed, Method::EnvelopeExact));
    }
    let u = rhombus_width_function(ps, &speed)?;
    let segs = blocked_pair_segments(ps, &speed);
    let z = upper_envelope(Domain::Circular { period: PI }, &segs, Some(&u));
    let phi = envelope_min(&z).map_or(0.0, |m| m.x);
    let (line, fit) = rhombus_placement(ps, phi, Metric::L2, speed)?;
    rhombus_report(ps, line, fit.rhombus, Metric::L2, Guarantee::Exact, Method::EnvelopeExact)
}

/// Approximation factor of [`optimal_line_l2_approx`].
pub fn l2_approx_factor(speed: &SpeedProfile) -> f64 {
    speed.v().min(speed.a_coef())
}

/// Highway along the diagonal of the smallest rhombus over all directions,
/// in O(n log n). Its diameter is within `min(v, sqrt(v^2 / (v^2 - 1)))` of
/// the optimum.
pub fn optimal_line_l2_approx(ps: &PointSet, speed: SpeedProfile) -> Result<SolveReport> {
    if speed.is_infinite() {
        return Err(Error::InfiniteSpeed);
    }
    if ps.len() < 2 {
        return Ok(single_point_report(ps, speed, Method::RhombusApprox));
    }
    let u = rhombus_width_function(ps, &speed)?;
    let phi = envelope_min(&u).map_or(0.0, |m| m.x);
    let (line, fit) = rhombus_placement(ps, phi, Metric::L2, speed)?;
    rhombus_report(
        ps,
        line,
        fit.rhombus,
        Metric::L2,
        Guarantee::Factor(l2_approx_factor(&speed)),
        Method::RhombusApprox,
    )
}
