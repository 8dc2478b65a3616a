//! Travel times checked against brute-force path searches that only know
//! the ground metric and the highway geometry.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use highway_core::travel::{cross_time, cross_travel_time, line_travel_time};
use highway_core::{CrossCenter, HighwayLine, Metric, Point, SpeedProfile};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Shortest time from `p` to `q` with entry and exit points on a dense grid
/// along the highway, in the highway's own frame.
fn sampled_line_time(p: Point, q: Point, phi: f64, offset: f64, v: f64, l1: bool) -> f64 {
    let (d, n) = ((phi.cos(), phi.sin()), (-phi.sin(), phi.cos()));
    let frame = |r: Point| (r.x * d.0 + r.y * d.1, r.x * n.0 + r.y * n.1 - offset);
    let (p, q) = (frame(p), frame(q));
    let ground = |a: (f64, f64), b: (f64, f64)| {
        let (dx, dy) = (a.0 - b.0, a.1 - b.1);
        if l1 {
            dx.abs() + dy.abs()
        } else {
            dx.hypot(dy)
        }
    };
    let lo = p.0.min(q.0) - 3.0 * (p.1.abs() + q.1.abs()) - 1.0;
    let hi = p.0.max(q.0) + 3.0 * (p.1.abs() + q.1.abs()) + 1.0;
    let steps = 40_000;
    let mut xs: Vec<f64> = (0..=steps).map(|i| lo + (hi - lo) * i as f64 / steps as f64).collect();
    // Perpendicular feet, where L1 access is optimal.
    xs.extend([p.0, q.0]);
    xs.sort_by(f64::total_cmp);
    let f: Vec<f64> = xs.iter().map(|&x| ground(p, (x, 0.0))).collect();
    let g: Vec<f64> = xs.iter().map(|&x| ground((x, 0.0), q)).collect();
    let mut best = ground(p, q);
    // Entry left of exit, then entry right of exit.
    let mut run = f64::INFINITY;
    for k in 0..xs.len() {
        run = run.min(f[k] - xs[k] / v);
        best = best.min(run + g[k] + xs[k] / v);
    }
    run = f64::INFINITY;
    for k in (0..xs.len()).rev() {
        run = run.min(f[k] + xs[k] / v);
        best = best.min(run + g[k] - xs[k] / v);
    }
    best
}

#[test]
fn l2_line_times_match_sampled_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let v = rng.gen_range(1.1..6.0);
        let phi = rng.gen_range(0.0..std::f64::consts::PI);
        let offset = rng.gen_range(-2.0..2.0);
        let p = Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let q = Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let h = HighwayLine::new(phi, offset, SpeedProfile::new(v).unwrap());
        let t = line_travel_time(p, q, &h, Metric::L2).unwrap().time;
        let brute = sampled_line_time(p, q, phi, offset, v, false);
        assert!((t - brute).abs() < 1e-5, "v={v} phi={phi} {p:?} {q:?}: {t} vs {brute}");
    }
}

#[test]
fn l1_line_times_match_sampled_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for i in 0..60 {
        let v = rng.gen_range(1.1..6.0);
        let phi = if i % 2 == 0 { 0.0 } else { std::f64::consts::FRAC_PI_2 };
        let offset = rng.gen_range(-2.0..2.0);
        let p = Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let q = Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let h = HighwayLine::new(phi, offset, SpeedProfile::new(v).unwrap());
        let t = line_travel_time(p, q, &h, Metric::L1).unwrap().time;
        let brute = sampled_line_time(p, q, phi, offset, v, true);
        assert!((t - brute).abs() < 1e-6, "v={v} phi={phi}: {t} vs {brute}");
    }
}

const R: i32 = 8;
const SIDE: usize = (2 * R + 1) as usize;

fn node(x: i32, y: i32) -> usize {
    ((y + R) as usize) * SIDE + (x + R) as usize
}

/// Single-source times on the integer lattice, where unit edges on the
/// lines `x = a` and `y = b` cost `inv_v` and all others cost 1.
fn lattice_times(src: (i32, i32), a: i32, b: i32, inv_v: f64) -> Vec<f64> {
    let mut dist = vec![f64::INFINITY; SIDE * SIDE];
    let mut heap = BinaryHeap::new();
    dist[node(src.0, src.1)] = 0.0;
    heap.push(Reverse((0u64, src.0, src.1)));
    while let Some(Reverse((key, x, y))) = heap.pop() {
        let d = f64::from_bits(key);
        if d > dist[node(x, y)] {
            continue;
        }
        for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let (nx, ny) = (x + dx, y + dy);
            if nx.abs() > R || ny.abs() > R {
                continue;
            }
            let on_highway = (dx == 0 && x == a) || (dy == 0 && y == b);
            let nd = d + if on_highway { inv_v } else { 1.0 };
            if nd < dist[node(nx, ny)] {
                dist[node(nx, ny)] = nd;
                // Nonnegative floats order like their bit patterns.
                heap.push(Reverse((nd.to_bits(), nx, ny)));
            }
        }
    }
    dist
}

#[test]
fn cross_times_match_lattice_shortest_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for round in 0..30 {
        let speed = if round % 5 == 0 {
            SpeedProfile::infinite()
        } else {
            SpeedProfile::new(rng.gen_range(1.2..5.0)).unwrap()
        };
        let (a, b) = (rng.gen_range(-5..=5), rng.gen_range(-5..=5));
        let src = (rng.gen_range(-6..=6), rng.gen_range(-6..=6));
        let dist = lattice_times(src, a, b, speed.inv_v());
        let sigma = CrossCenter::new(a as f64, b as f64, speed);
        let p = Point::new(src.0 as f64, src.1 as f64);
        for x in -6..=6 {
            for y in -6..=6 {
                let q = Point::new(x as f64, y as f64);
                let t = cross_travel_time(p, q, &sigma).time;
                let d = dist[node(x, y)];
                assert!((t - d).abs() < 1e-9, "{p:?} {q:?} center ({a},{b}): {t} vs {d}");
                assert!((t - cross_time(p, q, sigma.a, sigma.b, speed.inv_v())).abs() < 1e-12);
            }
        }
    }
}
