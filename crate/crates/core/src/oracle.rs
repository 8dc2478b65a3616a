//! Brute-force graders: grid scans with local refinement.
//!
//! These only evaluate travel times of explicit facilities; they share no
//! code with the optimizers they are meant to check.

use std::f64::consts::PI;

use crate::geom::{unit_normal, HighwayLine, Point, PointSet, SpeedProfile};
use crate::report::Facility;
use crate::travel::{cross_time, diameter_given_cross, diameter_given_line, CrossCenter, Metric};
use crate::{Error, Result};

/// Grid scan parameters. The search box is the input bounding box scaled
/// by 1.5 about its center; each refinement round rescans boxes shrunk by 4
/// around the `keep` best grid points of the previous round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub resolution: usize,
    pub rounds: usize,
    pub keep: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            resolution: 200,
            rounds: 4,
            keep: 4,
        }
    }
}

impl GridSpec {
    pub fn new(resolution: usize, rounds: usize, keep: usize) -> Self {
        Self {
            resolution: resolution.max(2),
            rounds,
            keep: keep.max(1),
        }
    }
}

/// Which highway directions [`oracle_line`] may use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrientationSpec {
    Fixed(f64),
    Free,
}

/// The best facility found by a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleBest {
    pub facility: Facility,
    pub diameter: f64,
    pub witness: (Point, Point),
}

/// Minimizes `f` over the box `[lo, hi]` (in `dims` coordinates) by repeated
/// grid scans. Ties keep the lexicographically first grid point.
fn refine<const D: usize>(
    lo: [f64; D],
    hi: [f64; D],
    grid: &GridSpec,
    mut f: impl FnMut([f64; D]) -> f64,
) -> ([f64; D], f64) {
    let res = grid.resolution.max(2);
    let mut half = [0.0; D];
    let mut center = [0.0; D];
    for k in 0..D {
        half[k] = 0.5 * (hi[k] - lo[k]);
        center[k] = 0.5 * (hi[k] + lo[k]);
    }
    let mut windows = vec![center];
    let mut best = (center, f64::INFINITY);
    for _ in 0..=grid.rounds {
        let mut scored: Vec<([f64; D], f64)> = Vec::new();
        for c in &windows {
            let total = res.pow(D as u32);
            for idx in 0..total {
                let mut x = [0.0; D];
                let mut r = idx;
                for k in 0..D {
                    let i = r % res;
                    r /= res;
                    x[k] = c[k] - half[k] + 2.0 * half[k] * i as f64 / (res - 1) as f64;
                }
                let v = f(x);
                scored.push((x, v));
            }
        }
        scored.sort_by(|a, b| a.1.total_cmp(&b.1));
        if let Some(&(x, v)) = scored.first() {
            if v < best.1 {
                best = (x, v);
            }
        }
        let step: Vec<f64> = half.iter().map(|h| 2.0 * h / (res - 1) as f64).collect();
        let mut next: Vec<[f64; D]> = Vec::new();
        for (x, _) in scored {
            if next.len() >= grid.keep {
                break;
            }
            let distinct = next
                .iter()
                .all(|y| (0..D).any(|k| (x[k] - y[k]).abs() > 2.0 * step[k]));
            if distinct {
                next.push(x);
            }
        }
        windows = next;
        for h in &mut half {
            *h /= 4.0;
        }
    }
    best
}

fn scaled_box(ps: &PointSet) -> (Point, Point) {
    let (lo, hi) = ps.bbox();
    let c = Point::new(0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y));
    let hx = 0.75 * (hi.x - lo.x).max(1e-9);
    let hy = 0.75 * (hi.y - lo.y).max(1e-9);
    (Point::new(c.x - hx, c.y - hy), Point::new(c.x + hx, c.y + hy))
}

/// Best highway found by scanning offsets (and directions when free).
pub fn oracle_line(
    ps: &PointSet,
    metric: Metric,
    speed: SpeedProfile,
    orientation: OrientationSpec,
    grid: &GridSpec,
) -> Result<OracleBest> {
    let (lo, hi) = scaled_box(ps);
    let center = Point::new(0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y));
    let reach = 0.5 * (hi - lo).norm();
    let diameter = |phi: f64, s: f64| -> Result<_> {
        let h = HighwayLine::new(phi, center.dot(unit_normal(phi)) + s, speed);
        Ok((h, diameter_given_line(ps, &h, metric)?))
    };
    let (phi, s) = match orientation {
        OrientationSpec::Fixed(phi) => {
            // Surface the L1 restriction before scanning.
            diameter(phi, 0.0)?;
            let (x, _) = refine([-reach], [reach], grid, |[s]| {
                diameter(phi, s).map_or(f64::INFINITY, |d| d.1.value)
            });
            (phi, x[0])
        }
        OrientationSpec::Free => {
            if metric == Metric::L1 {
                return Err(Error::L1RequiresAxisAligned);
            }
            let (x, _) = refine([0.0, -reach], [PI, reach], grid, |[phi, s]| {
                diameter(phi.rem_euclid(PI), s).map_or(f64::INFINITY, |d| d.1.value)
            });
            (x[0].rem_euclid(PI), x[1])
        }
    };
    let (h, d) = diameter(phi, s)?;
    Ok(OracleBest {
        facility: Facility::Line(h),
        diameter: d.value,
        witness: d.witness,
    })
}

/// Best cross center found by a 2-D scan.
pub fn oracle_cross(ps: &PointSet, speed: SpeedProfile, grid: &GridSpec) -> OracleBest {
    let (lo, hi) = scaled_box(ps);
    let at = |a: f64, b: f64| diameter_given_cross(ps, &CrossCenter::new(a, b, speed));
    let (x, _) = refine([lo.x, lo.y], [hi.x, hi.y], grid, |[a, b]| at(a, b).value);
    let d = at(x[0], x[1]);
    OracleBest {
        facility: Facility::Cross(CrossCenter::new(x[0], x[1], speed)),
        diameter: d.value,
        witness: d.witness,
    }
}

/// Smallest budget, up to the scan's precision, for which one cross center
/// serves all `pairs`, together with that center.
pub fn oracle_pairs_threshold(
    pairs: &[(Point, Point)],
    speed: SpeedProfile,
    grid: &GridSpec,
) -> Result<(Point, f64)> {
    let first = pairs.first().ok_or(Error::NoPairs)?;
    let mut pts = vec![first.0];
    for &(p, q) in pairs {
        pts.push(p);
        pts.push(q);
    }
    let (lo, hi) = scaled_box(&PointSet::new(pts)?);
    let iv = speed.inv_v();
    let worst = |a: f64, b: f64| {
        pairs
            .iter()
            .map(|&(p, q)| cross_time(p, q, a, b, iv))
            .fold(0.0, f64::max)
    };
    let (x, v) = refine([lo.x, lo.y], [hi.x, hi.y], grid, |[a, b]| worst(a, b));
    Ok((Point::new(x[0], x[1]), v))
}

/// Membership of cell centers in `{ sigma : d_sigma(p, q) <= delta }`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bitmap {
    pub lo: Point,
    pub hi: Point,
    pub nx: usize,
    pub ny: usize,
    pub cells: Vec<bool>,
}

impl Bitmap {
    pub fn point(&self, i: usize, j: usize) -> Point {
        Point::new(
            self.lo.x + (self.hi.x - self.lo.x) * (i as f64 + 0.5) / self.nx as f64,
            self.lo.y + (self.hi.y - self.lo.y) * (j as f64 + 0.5) / self.ny as f64,
        )
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[j * self.nx + i]
    }

    pub fn count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// Number of 4-connected groups of set cells.
    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.cells.len()];
        let mut groups = 0;
        for start in 0..self.cells.len() {
            if !self.cells[start] || seen[start] {
                continue;
            }
            groups += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(k) = stack.pop() {
                let (i, j) = (k % self.nx, k / self.nx);
                let mut push = |ii: usize, jj: usize| {
                    let kk = jj * self.nx + ii;
                    if self.cells[kk] && !seen[kk] {
                        seen[kk] = true;
                        stack.push(kk);
                    }
                };
                if i > 0 {
                    push(i - 1, j);
                }
                if i + 1 < self.nx {
                    push(i + 1, j);
                }
                if j > 0 {
                    push(i, j - 1);
                }
                if j + 1 < self.ny {
                    push(i, j + 1);
                }
            }
        }
        groups
    }
}

/// Evaluates the pair's cross travel time at every cell center of an
/// `nx` by `ny` grid over `[lo, hi]`.
pub fn rasterize_region(
    p: Point,
    q: Point,
    delta: f64,
    speed: SpeedProfile,
    lo: Point,
    hi: Point,
    nx: usize,
    ny: usize,
) -> Bitmap {
    let mut map = Bitmap {
        lo,
        hi,
        nx,
        ny,
        cells: Vec::with_capacity(nx * ny),
    };
    let iv = speed.inv_v();
    for j in 0..ny {
        for i in 0..nx {
            let s = map.point(i, j);
            map.cells.push(cross_time(p, q, s.x, s.y, iv) <= delta);
        }
    }
    map
}

/// Points `(a, sqrt(1 - a^2))` for `a` in `A` and `(-b, -sqrt(1 - b^2))` for
/// `b` in `B` on the unit circle. Two of them are antipodal, and the
/// diameter with a horizontal highway reaches 2, exactly when `A` and `B`
/// share a value.
pub fn adversarial_diameter_instance(a: &[f64], b: &[f64]) -> Result<PointSet> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyGeneratorSet);
    }
    let mut pts = Vec::with_capacity(a.len() + b.len());
    for &x in a {
        if !(x.abs() < 1.0) {
            return Err(Error::GeneratorValue(x));
        }
        pts.push(Point::new(x, (1.0 - x * x).sqrt()));
    }
    for &x in b {
        if !(x.abs() < 1.0) {
            return Err(Error::GeneratorValue(x));
        }
        pts.push(Point::new(-x, -(1.0 - x * x).sqrt()));
    }
    PointSet::new(pts)
}
