//! Plain-text point and pair files: one record per line, comma separated,
//! `#` starts a comment.

use std::fs;
use std::path::Path;

use highway_core::Point;

fn records(text: &str, width: usize) -> Result<Vec<Vec<f64>>, String> {
    let mut out = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != width {
            return Err(format!(
                "line {}: expected {width} comma-separated numbers, found {}",
                no + 1,
                fields.len()
            ));
        }
        let mut row = Vec::with_capacity(width);
        for f in fields {
            let x: f64 = f
                .parse()
                .map_err(|_| format!("line {}: cannot parse {f:?} as a number", no + 1))?;
            if !x.is_finite() {
                return Err(format!("line {}: non-finite value {f:?}", no + 1));
            }
            row.push(x);
        }
        out.push(row);
    }
    Ok(out)
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

pub fn parse_points(text: &str) -> Result<Vec<Point>, String> {
    let rows = records(text, 2)?;
    if rows.is_empty() {
        return Err("no points in input".into());
    }
    Ok(rows.iter().map(|r| Point::new(r[0], r[1])).collect())
}

pub fn parse_pairs(text: &str) -> Result<Vec<(Point, Point)>, String> {
    let rows = records(text, 4)?;
    if rows.is_empty() {
        return Err("no pairs in input".into());
    }
    Ok(rows
        .iter()
        .map(|r| (Point::new(r[0], r[1]), Point::new(r[2], r[3])))
        .collect())
}

pub fn read_points(path: &Path) -> Result<Vec<Point>, String> {
    parse_points(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn read_pairs(path: &Path) -> Result<Vec<(Point, Point)>, String> {
    parse_pairs(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn write_points(points: &[Point], header: &str) -> String {
    let mut s = format!("# {header}\n");
    for p in points {
        s.push_str(&format!("{},{}\n", p.x, p.y));
    }
    s
}
