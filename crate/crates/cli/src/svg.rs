//! Figures: input points, the highways and the enclosing shape.

use std::fmt::Write;

use highway_core::{EnclosingShape, Facility, Point};

const SIZE: f64 = 800.0;

struct View {
    lo: Point,
    scale: f64,
    reach: f64,
}

impl View {
    /// Input bounding box padded by 10%, scaled uniformly into the canvas.
    fn new(points: &[Point]) -> Self {
        let (mut lo, mut hi) = (points[0], points[0]);
        for p in points {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
        let pad = 0.1 * span;
        let side = span + 2.0 * pad;
        let c = Point::new(0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y));
        View {
            lo: Point::new(c.x - 0.5 * side, c.y - 0.5 * side),
            scale: SIZE / side,
            reach: 4.0 * side,
        }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        ((p.x - self.lo.x) * self.scale, SIZE - (p.y - self.lo.y) * self.scale)
    }

    fn polygon(&self, pts: &[Point], style: &str) -> String {
        let coords: Vec<String> = pts
            .iter()
            .map(|&p| {
                let (x, y) = self.map(p);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        format!("  <polygon points=\"{}\" {style}/>\n", coords.join(" "))
    }

    /// A band `low <= n . p <= high` with direction `d`, long enough to
    /// leave the canvas.
    fn band(&self, d: Point, n: Point, low: f64, high: f64, style: &str) -> String {
        let r = self.reach;
        let at = |t: f64, s: f64| Point::new(d.x * t + n.x * s, d.y * t + n.y * s);
        let mid = Point::new(self.lo.x + 0.5 * SIZE / self.scale, self.lo.y + 0.5 * SIZE / self.scale);
        let t0 = mid.dot(d);
        self.polygon(
            &[at(t0 - r, low), at(t0 + r, low), at(t0 + r, high), at(t0 - r, high)],
            style,
        )
    }

    fn line(&self, through: Point, d: Point) -> String {
        let r = self.reach;
        let (x1, y1) = self.map(Point::new(through.x - r * d.x, through.y - r * d.y));
        let (x2, y2) = self.map(Point::new(through.x + r * d.x, through.y + r * d.y));
        format!(
            "  <line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"#c0392b\" stroke-width=\"2.5\"/>\n"
        )
    }
}

const SHADE: &str = "fill=\"#9ec5e8\" fill-opacity=\"0.45\" stroke=\"#4a7fb0\" stroke-width=\"1\"";

pub fn render(points: &[Point], facility: &Facility, shape: Option<&EnclosingShape>) -> String {
    let view = View::new(points);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    s.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    match shape {
        Some(EnclosingShape::Rhombus(r)) => s.push_str(&view.polygon(&r.corners(), SHADE)),
        Some(EnclosingShape::Strip(st)) => {
            let (sn, cs) = st.orientation.sin_cos();
            let d = Point::new(cs, sn);
            let n = Point::new(-sn, cs);
            s.push_str(&view.band(d, n, st.low, st.high, SHADE));
        }
        Some(EnclosingShape::Cross(c)) => {
            let (ex, ey) = (Point::new(1.0, 0.0), Point::new(0.0, 1.0));
            s.push_str(&view.band(ey, ex, c.x_lo, c.x_hi, SHADE));
            s.push_str(&view.band(ex, ey, c.y_lo, c.y_hi, SHADE));
        }
        None => {}
    }
    match facility {
        Facility::Line(h) => s.push_str(&view.line(h.anchor(), h.direction())),
        Facility::Cross(c) => {
            s.push_str(&view.line(c.center(), Point::new(0.0, 1.0)));
            s.push_str(&view.line(c.center(), Point::new(1.0, 0.0)));
        }
    }
    for &p in points {
        let (x, y) = view.map(p);
        let _ = writeln!(s, "  <circle class=\"point\" cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4\" fill=\"black\"/>");
    }
    s.push_str("</svg>\n");
    s
}
