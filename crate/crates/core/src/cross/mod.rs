//! Axis-aligned highway crosses under the L1 metric.

mod decision;
pub mod region;

pub use decision::{cross_decision, serves_all, WITNESS_TOL};
pub use region::{pair_region, Component, Frame, PairRegion, RegionCase, FRAMES};

use crate::enclosing::{smallest_enclosing_cross, EnclosingCross};
use crate::geom::{Point, PointSet, SpeedProfile};
use crate::report::{EnclosingShape, Facility, Guarantee, Method, SolveReport};
use crate::travel::{cross_time, diameter_given_cross, CrossCenter, Diameter, Metric};
use crate::{Error, Result};

/// Default size limit of [`exact_cross_small`].
pub const EXACT_CROSS_LIMIT: usize = 12;

/// Above this many points the infinite-speed witness is searched among a
/// few extreme points only.
const WITNESS_SCAN_LIMIT: usize = 2048;

fn cross_report(
    ps: &PointSet,
    sigma: CrossCenter,
    guarantee: Guarantee,
    method: Method,
    shape: Option<EnclosingShape>,
) -> SolveReport {
    let d = diameter_given_cross(ps, &sigma);
    SolveReport {
        facility: Facility::Cross(sigma),
        metric: Metric::L1,
        diameter: d.value,
        witness: d.witness,
        guarantee,
        method,
        shape,
    }
}

fn all_pairs(ps: &PointSet) -> Vec<(Point, Point)> {
    let pts = ps.points();
    let mut pairs = Vec::with_capacity(pts.len() * pts.len().saturating_sub(1) / 2);
    for (i, &p) in pts.iter().enumerate() {
        for &q in &pts[i + 1..] {
            pairs.push((p, q));
        }
    }
    pairs
}

/// Largest infinite-speed travel time among the extreme points of the set
/// and of the cross's outside part; a lower bound for large inputs.
fn extreme_witness(ps: &PointSet, cross: &EnclosingCross) -> Diameter {
    let pts = ps.points();
    let mut picks: Vec<Point> = Vec::new();
    let mut extreme = |it: &mut dyn Iterator<Item = &Point>, key: fn(&Point) -> f64| {
        let v: Vec<&Point> = it.collect();
        if let Some(p) = v.iter().min_by(|a, b| key(a).total_cmp(&key(b))) {
            picks.push(**p);
        }
        if let Some(p) = v.iter().max_by(|a, b| key(a).total_cmp(&key(b))) {
            picks.push(**p);
        }
    };
    extreme(&mut pts.iter(), |p| p.x);
    extreme(&mut pts.iter(), |p| p.y);
    let (x_lo, x_hi) = (cross.x_lo, cross.x_hi);
    extreme(&mut pts.iter().filter(|p| p.x < x_lo || p.x > x_hi), |p| p.y);
    extreme(&mut pts.iter().filter(|p| p.x >= x_lo && p.x <= x_hi), |p| p.x);
    let c = cross.center();
    let mut best = Diameter {
        value: 0.0,
        witness: (pts[0], pts[0]),
    };
    for (i, &p) in picks.iter().enumerate() {
        for &q in &picks[i + 1..] {
            let t = cross_time(p, q, c.x, c.y, 0.0);
            if t > best.value {
                best = Diameter {
                    value: t,
                    witness: (p, q),
                };
            }
        }
    }
    best
}

/// Optimal infinite-speed cross: the middle lines of the smallest enclosing
/// strip cross, whose width is the diameter. O(n log n) plus the witness
/// search.
pub fn optimal_cross_infinite(ps: &PointSet) -> SolveReport {
    let cross = smallest_enclosing_cross(ps);
    let c = cross.center();
    let sigma = CrossCenter::new(c.x, c.y, SpeedProfile::infinite());
    let witness = if ps.len() <= WITNESS_SCAN_LIMIT {
        diameter_given_cross(ps, &sigma).witness
    } else {
        extreme_witness(ps, &cross).witness
    };
    SolveReport {
        facility: Facility::Cross(sigma),
        metric: Metric::L1,
        diameter: cross.width,
        witness,
        guarantee: Guarantee::Exact,
        method: Method::EnclosingCross,
        shape: Some(EnclosingShape::Cross(cross)),
    }
}

/// Approximation factor of the median highways.
pub fn median_factor(speed: &SpeedProfile) -> f64 {
    (2.0 + speed.inv_v()).min(speed.v())
}

/// The cross through the middle lines of the smallest enclosing strip
/// cross. Its diameter is within `min(2 + 1/v, v)` of the optimum.
pub fn median_highways(ps: &PointSet, speed: SpeedProfile) -> SolveReport {
    let cross = smallest_enclosing_cross(ps);
    let c = cross.center();
    let guarantee = if speed.is_infinite() {
        Guarantee::Exact
    } else {
        Guarantee::Factor(median_factor(&speed))
    };
    cross_report(
        ps,
        CrossCenter::new(c.x, c.y, speed),
        guarantee,
        Method::MedianHighways,
        Some(EnclosingShape::Cross(cross)),
    )
}

/// Constant-factor approximation, at most `1 + sqrt(2)` times the optimum;
/// this is the median cross.
pub fn approx_cross_const(ps: &PointSet, speed: SpeedProfile) -> SolveReport {
    median_highways(ps, speed)
}

fn check_epsilon(eps: f64) -> Result<()> {
    if eps > 0.0 && eps.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidEpsilon(eps))
    }
}

/// A `(2 + eps)`-approximation.
///
/// Minimizes the largest travel time from the first point over a grid of
/// budgets in `[0, 2 d_med]` with step `d_med * eps / 6`, using the decision
/// procedure on the `n - 1` pairs through that point. Any cross serving the
/// first point within `r` has diameter at most `2 r`.
pub fn approx_cross_2eps(ps: &PointSet, speed: SpeedProfile, eps: f64) -> Result<SolveReport> {
    check_epsilon(eps)?;
    let median = median_highways(ps, speed);
    let d_med = median.diameter;
    let guarantee = Guarantee::Factor(2.0 + eps);
    if ps.len() < 2 || d_med == 0.0 {
        return Ok(SolveReport {
            guarantee,
            method: Method::SingleSourceBisection,
            ..median
        });
    }
    let Facility::Cross(mut best) = median.facility else {
        unreachable!("median highways form a cross")
    };
    let anchor = ps.points()[0];
    let pairs: Vec<(Point, Point)> = ps.points()[1..].iter().map(|&q| (anchor, q)).collect();
    let step = d_med * (eps / 2.0) / 3.0;
    let steps = (2.0 * d_med / step).ceil() as usize;
    // Invariant: index `hi` is feasible (the median cross serves the anchor
    // within d_med), every index below `lo` is not.
    let (mut lo, mut hi) = (0usize, steps);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match cross_decision(&pairs, mid as f64 * step, speed)? {
            Some(c) => {
                best = c;
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    Ok(cross_report(ps, best, guarantee, Method::SingleSourceBisection, None))
}

/// Largest ride-only lower bound `(|dx| + |dy|) / v` over the pairs.
fn pair_lower_bound(pairs: &[(Point, Point)], speed: &SpeedProfile) -> f64 {
    pairs
        .iter()
        .map(|(p, q)| p.l1_dist(*q) * speed.inv_v())
        .fold(0.0, f64::max)
}

/// Bisection on the budget with the decision procedure over all pairs,
/// from `[lower bound, d_med]` until the bracket is at most `width`.
fn bisect_all_pairs(
    ps: &PointSet,
    speed: SpeedProfile,
    start: CrossCenter,
    hi: f64,
    width: impl Fn(f64) -> f64,
) -> Result<CrossCenter> {
    let pairs = all_pairs(ps);
    let mut best = start;
    let mut hi = hi;
    let mut lo = pair_lower_bound(&pairs, &speed).min(hi);
    if let Some(c) = cross_decision(&pairs, lo, speed)? {
        return Ok(c);
    }
    while hi - lo > width(hi) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        match cross_decision(&pairs, mid, speed)? {
            Some(c) => {
                best = c;
                hi = mid;
            }
            None => lo = mid,
        }
    }
    Ok(best)
}

/// A `(1 + eps)`-approximation by bisection over `[0, d_med]` with the
/// decision procedure on all pairs, stopping once the bracket is at most
/// `d_med * eps / 3`.
pub fn approx_cross_1eps(ps: &PointSet, speed: SpeedProfile, eps: f64) -> Result<SolveReport> {
    check_epsilon(eps)?;
    if speed.is_infinite() {
        return Err(Error::InfiniteSpeed);
    }
    let median = median_highways(ps, speed);
    let d_med = median.diameter;
    let guarantee = Guarantee::Epsilon(eps);
    if ps.len() < 2 || d_med == 0.0 {
        return Ok(SolveReport {
            guarantee,
            method: Method::AllPairsBisection,
            ..median
        });
    }
    let Facility::Cross(start) = median.facility else {
        unreachable!("median highways form a cross")
    };
    let best = bisect_all_pairs(ps, speed, start, d_med, |_| d_med * eps / 3.0)?;
    Ok(cross_report(ps, best, guarantee, Method::AllPairsBisection, None))
}

/// [`exact_cross_small_with_limit`] with the default limit.
pub fn exact_cross_small(ps: &PointSet, speed: SpeedProfile) -> Result<SolveReport> {
    exact_cross_small_with_limit(ps, speed, EXACT_CROSS_LIMIT)
}

/// Optimal cross for small inputs.
///
/// Bisects the budget with the decision procedure until the bracket is
/// below `1e-12` relative, then also tries every grid vertex `(x_i, y_j)`
/// and the median center and keeps the best cross found. The reported
/// diameter is evaluated over all pairs for the returned center.
pub fn exact_cross_small_with_limit(
    ps: &PointSet,
    speed: SpeedProfile,
    limit: usize,
) -> Result<SolveReport> {
    if ps.len() > limit {
        return Err(Error::InstanceTooLarge { n: ps.len(), limit });
    }
    if speed.is_infinite() {
        return Ok(SolveReport {
            method: Method::ExactSmall,
            ..optimal_cross_infinite(ps)
        });
    }
    let median = median_highways(ps, speed);
    let Facility::Cross(start) = median.facility else {
        unreachable!("median highways form a cross")
    };
    let mut best = (median.diameter, start);
    if ps.len() >= 2 && median.diameter > 0.0 {
        let c = bisect_all_pairs(ps, speed, start, median.diameter, |hi| 1e-12 * hi)?;
        let d = diameter_given_cross(ps, &c).value;
        if d < best.0 {
            best = (d, c);
        }
        for p in ps.iter() {
            for q in ps.iter() {
                let c = CrossCenter::new(p.x, q.y, speed);
                let d = diameter_given_cross(ps, &c).value;
                if d < best.0 {
                    best = (d, c);
                }
            }
        }
    }
    Ok(cross_report(ps, best.1, Guarantee::Exact, Method::ExactSmall, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(c: &[(f64, f64)]) -> PointSet {
        PointSet::from_coords(c).unwrap()
    }

    fn v(x: f64) -> SpeedProfile {
        SpeedProfile::new(x).unwrap()
    }

    fn diamond() -> PointSet {
        set(&[(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)])
    }

    #[test]
    fn diamond_median_and_exact() {
        // Neighboring corners ride both highways: 1/v + 1/v.
        let m = median_highways(&diamond(), v(2.0));
        assert!((m.diameter - 1.0).abs() < 1e-12);
        let e = exact_cross_small(&diamond(), v(2.0)).unwrap();
        assert!((e.diameter - 1.0).abs() < 1e-9);
    }

    #[test]
    fn single_point() {
        let one = set(&[(2.0, 3.0)]);
        let m = median_highways(&one, v(2.0));
        assert_eq!(m.diameter, 0.0);
        assert_eq!(exact_cross_small(&one, v(2.0)).unwrap().diameter, 0.0);
    }

    #[test]
    fn incremental_instance() {
        let r = optimal_cross_infinite(&set(&[(0.0, 9.0), (0.0, 11.0), (9.0, 0.0), (11.0, 0.0)]));
        assert_eq!(r.diameter, 0.0);
    }

    #[test]
    fn factors() {
        assert_eq!(median_factor(&v(2.0)), 2.0);
        assert!(median_factor(&v(1.01)) <= 1.01);
        let balance = v(1.0 + 2f64.sqrt());
        assert!((median_factor(&balance) - (1.0 + 2f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn two_point_approximations() {
        let ps = set(&[(0.0, 0.0), (6.0, 0.0)]);
        let r = approx_cross_2eps(&ps, v(2.0), 0.1).unwrap();
        assert!(r.diameter <= 2.1 * 3.0 + 1e-9);
        let r = approx_cross_1eps(&ps, v(2.0), 0.01).unwrap();
        assert!(r.diameter <= 1.01 * 3.0 + 1e-9);
    }

    #[test]
    fn too_large_for_exact() {
        let pts: Vec<(f64, f64)> = (0..13).map(|i| (i as f64, (i * i) as f64)).collect();
        assert_eq!(
            exact_cross_small(&set(&pts), v(2.0)).unwrap_err(),
            Error::InstanceTooLarge { n: 13, limit: 12 }
        );
    }

    #[test]
    fn epsilon_must_be_positive() {
        assert!(approx_cross_1eps(&diamond(), v(2.0), 0.0).is_err());
        assert!(approx_cross_2eps(&diamond(), v(2.0), -1.0).is_err());
    }
}
