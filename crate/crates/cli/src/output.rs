//! JSON reports. Every real is written with 17 significant digits so that a
//! report parses back to the exact same doubles.

use std::io;

use highway_core::{EnclosingShape, Facility, Guarantee, Point, SolveReport, SpeedProfile};
use serde::Serialize;
use serde_json::{json, ser::Formatter, Value};

pub const SCHEMA: u32 = 1;

struct Precise;

impl Formatter for Precise {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.16e}")
    }
}

/// Pretty-printed JSON with the 17-digit float format.
pub fn to_string(value: &Value) -> String {
    let mut buf = Vec::new();
    let fmt = PrettyPrecise::default();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
    value.serialize(&mut ser).expect("serializing a JSON value cannot fail");
    buf.push(b'\n');
    String::from_utf8(buf).expect("JSON output is UTF-8")
}

/// `PrettyFormatter` layout with [`Precise`] floats.
#[derive(Default)]
struct PrettyPrecise {
    pretty: serde_json::ser::PrettyFormatter<'static>,
}

macro_rules! delegate {
    ($($name:ident($($arg:ident: $ty:ty),*);)*) => {
        $(
            fn $name<W: ?Sized + io::Write>(&mut self, w: &mut W $(, $arg: $ty)*) -> io::Result<()> {
                self.pretty.$name(w $(, $arg)*)
            }
        )*
    };
}

impl Formatter for PrettyPrecise {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        Precise.write_f64(w, value)
    }

    delegate! {
        begin_array();
        end_array();
        begin_array_value(first: bool);
        end_array_value();
        begin_object();
        end_object();
        begin_object_key(first: bool);
        begin_object_value();
        end_object_value();
    }
}

pub fn point(p: Point) -> Value {
    // Adding zero turns -0.0 into 0.0.
    json!([p.x + 0.0, p.y + 0.0])
}

pub fn speed(s: &SpeedProfile) -> Value {
    if s.is_infinite() {
        json!("inf")
    } else {
        json!(s.v())
    }
}

pub fn facility(f: &Facility) -> Value {
    match f {
        Facility::Line(h) => json!({
            "kind": "line",
            "orientation": h.orientation(),
            "offset": h.offset,
            "anchor": point(h.anchor()),
        }),
        Facility::Cross(c) => json!({
            "kind": "cross",
            "center": point(c.center()),
        }),
    }
}

pub fn guarantee(g: Option<&Guarantee>) -> Value {
    match g {
        None => json!({ "kind": "none" }),
        Some(Guarantee::Exact) => json!({ "kind": "exact" }),
        Some(Guarantee::Factor(c)) => json!({ "kind": "factor", "value": c }),
        Some(Guarantee::Epsilon(e)) => json!({ "kind": "epsilon", "value": e }),
    }
}

fn shape(s: &EnclosingShape) -> Value {
    match s {
        EnclosingShape::Strip(st) => json!({
            "kind": "strip",
            "orientation": st.orientation,
            "low": st.low,
            "high": st.high,
        }),
        EnclosingShape::Rhombus(r) => json!({
            "kind": "rhombus",
            "corners": r.corners().iter().map(|&p| point(p)).collect::<Vec<_>>(),
        }),
        EnclosingShape::Cross(c) => json!({
            "kind": "cross",
            "x": [c.x_lo, c.x_hi],
            "y": [c.y_lo, c.y_hi],
            "width": c.width,
        }),
    }
}

/// The report of `solve`.
pub fn solve_report(r: &SolveReport, speed_profile: &SpeedProfile, n: usize, elapsed: f64) -> Value {
    json!({
        "schema": SCHEMA,
        "command": "solve",
        "points": n,
        "metric": r.metric.to_string(),
        "speed": speed(speed_profile),
        "facility": facility(&r.facility),
        "diameter": r.diameter,
        "witness": [point(r.witness.0), point(r.witness.1)],
        "guarantee": guarantee(Some(&r.guarantee)),
        "method": r.method.as_str(),
        "shape": r.shape.as_ref().map_or(Value::Null, shape),
        "elapsed_seconds": elapsed,
    })
}
