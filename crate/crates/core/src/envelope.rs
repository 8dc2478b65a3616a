//! One-dimensional envelopes of piecewise functions and selection in
//! implicitly given sorted matrices.
//!
//! A [`PiecewiseFunction`] covers its whole [`Domain`] with contiguous
//! half-open spans. Places where an upper envelope has no input are stored
//! as the constant `-inf`; lower envelopes use `+inf` for the same purpose.

use std::cmp::Ordering;

use crate::{Error, Result};

/// Relative tolerance below which two envelope values count as equal.
const TIE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Piece {
    Constant(f64),
    /// `slope * x + intercept`.
    Linear { slope: f64, intercept: f64 },
    /// `amp * |cos(x - phase)|`; a negative `amp` flips the shape.
    Trig { amp: f64, phase: f64 },
}

impl Piece {
    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            Piece::Constant(c) => c,
            Piece::Linear { slope, intercept } => {
                if slope == 0.0 {
                    intercept
                } else {
                    slope * x + intercept
                }
            }
            Piece::Trig { amp, phase } => amp * (x - phase).cos().abs(),
        }
    }

    pub fn negate(&self) -> Piece {
        match *self {
            Piece::Constant(c) => Piece::Constant(-c),
            Piece::Linear { slope, intercept } => Piece::Linear {
                slope: -slope,
                intercept: -intercept,
            },
            Piece::Trig { amp, phase } => Piece::Trig { amp: -amp, phase },
        }
    }

    /// The piece `x -> self(x - delta)`.
    pub fn shift(&self, delta: f64) -> Piece {
        match *self {
            Piece::Constant(c) => Piece::Constant(c),
            Piece::Linear { slope, intercept } => Piece::Linear {
                slope,
                intercept: intercept - slope * delta,
            },
            Piece::Trig { amp, phase } => Piece::Trig {
                amp,
                phase: phase + delta,
            },
        }
    }

    fn is_infinite_constant(&self) -> bool {
        matches!(*self, Piece::Constant(c) if !c.is_finite())
    }

    fn as_linear(&self) -> Option<(f64, f64)> {
        match *self {
            Piece::Constant(c) => Some((0.0, c)),
            Piece::Linear { slope, intercept } => Some((slope, intercept)),
            Piece::Trig { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    /// `[start, end]`; either end may be infinite.
    Interval { start: f64, end: f64 },
    /// The circle `[0, period)`.
    Circular { period: f64 },
}

impl Domain {
    pub fn bounds(&self) -> (f64, f64) {
        match *self {
            Domain::Interval { start, end } => (start, end),
            Domain::Circular { period } => (0.0, period),
        }
    }

    pub fn real_line() -> Self {
        Domain::Interval {
            start: f64::NEG_INFINITY,
            end: f64::INFINITY,
        }
    }
}

/// One span `[start, end)` of a piecewise function. `tag` names the input
/// that realizes the span; `None` marks the base function or a gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Span {
    pub start: f64,
    pub end: f64,
    pub piece: Piece,
    pub tag: Option<usize>,
}

/// An input to an envelope computation. On a circular domain `end < start`
/// denotes a segment that wraps around the period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment1D {
    pub start: f64,
    pub end: f64,
    pub piece: Piece,
    pub tag: usize,
}

impl Segment1D {
    pub fn constant(start: f64, end: f64, value: f64, tag: usize) -> Self {
        Self {
            start,
            end,
            piece: Piece::Constant(value),
            tag,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseFunction {
    domain: Domain,
    spans: Vec<Span>,
}

impl PiecewiseFunction {
    pub fn constant(domain: Domain, value: f64) -> Self {
        let (start, end) = domain.bounds();
        Self {
            domain,
            spans: vec![Span {
                start,
                end,
                piece: Piece::Constant(value),
                tag: None,
            }],
        }
    }

    /// Builds a function from spans that tile the domain in order.
    pub fn from_spans(domain: Domain, spans: Vec<Span>) -> Self {
        debug_assert!(!spans.is_empty());
        debug_assert!(spans.windows(2).all(|w| w[0].end == w[1].start));
        Self { domain, spans }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn spans(&self) -> &[Span] {
        &self.spans
    }

    /// Interior breakpoints, strictly increasing.
    pub fn breakpoints(&self) -> Vec<f64> {
        self.spans.iter().skip(1).map(|s| s.start).collect()
    }

    fn reduce(&self, x: f64) -> f64 {
        match self.domain {
            Domain::Circular { period } => {
                let r = x.rem_euclid(period);
                if r >= period {
                    0.0
                } else {
                    r
                }
            }
            Domain::Interval { .. } => x,
        }
    }

    /// Index of the span containing `x`, if `x` lies in the domain.
    pub fn span_index(&self, x: f64) -> Option<usize> {
        let x = self.reduce(x);
        let (lo, hi) = self.domain.bounds();
        if !(x >= lo && x <= hi) {
            return None;
        }
        let i = self.spans.partition_point(|s| s.start <= x);
        Some(i.saturating_sub(1))
    }

    /// Value at `x`. Outside an interval domain this is `-inf`.
    pub fn eval(&self, x: f64) -> f64 {
        match self.span_index(x) {
            Some(i) => self.spans[i].piece.eval(self.reduce(x)),
            None => f64::NEG_INFINITY,
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            domain: self.domain,
            spans: self
                .spans
                .iter()
                .map(|s| Span {
                    piece: s.piece.negate(),
                    ..*s
                })
                .collect(),
        }
    }

    /// The function `x -> self(x - delta)` on a circular domain.
    pub fn shifted(&self, delta: f64) -> Self {
        let Domain::Circular { period } = self.domain else {
            let spans = self
                .spans
                .iter()
                .map(|s| Span {
                    start: s.start + delta,
                    end: s.end + delta,
                    piece: s.piece.shift(delta),
                    tag: s.tag,
                })
                .collect();
            let (a, b) = self.domain.bounds();
            return Self {
                domain: Domain::Interval {
                    start: a + delta,
                    end: b + delta,
                },
                spans,
            };
        };
        let mut parts = Vec::with_capacity(self.spans.len() + 1);
        for s in &self.spans {
            let piece = s.piece.shift(delta);
            for (a, b) in circular_parts(s.start + delta, s.end + delta, period) {
                parts.push(Span {
                    start: a,
                    end: b,
                    piece,
                    tag: s.tag,
                });
            }
        }
        parts.sort_by(|a, b| a.start.total_cmp(&b.start));
        // Rounding may leave hairline gaps or overlaps between neighbors.
        for i in 1..parts.len() {
            parts[i].start = parts[i - 1].end;
        }
        if let Some(first) = parts.first_mut() {
            first.start = 0.0;
        }
        if let Some(last) = parts.last_mut() {
            last.end = period;
        }
        parts.retain(|s| s.end > s.start);
        Self {
            domain: self.domain,
            spans: coalesce(parts),
        }
    }

    /// Pointwise maximum of two functions on the same domain.
    pub fn max_with(&self, other: &PiecewiseFunction) -> PiecewiseFunction {
        debug_assert_eq!(self.domain, other.domain);
        Self {
            domain: self.domain,
            spans: coalesce(merge_max(&self.spans, &other.spans)),
        }
    }
}

/// Splits `[a, b)` on a circle into at most two non-wrapping parts.
fn circular_parts(a: f64, b: f64, period: f64) -> Vec<(f64, f64)> {
    let len = if b >= a { b - a } else { b - a + period };
    if len >= period {
        return vec![(0.0, period)];
    }
    let s = a.rem_euclid(period);
    let s = if s >= period { 0.0 } else { s };
    let e = s + len;
    if e <= period {
        vec![(s, e)]
    } else {
        vec![(s, period), (0.0, e - period)]
    }
}

/// A point strictly inside `(a, b)` that is usable even for infinite ends.
pub fn probe_point(a: f64, b: f64) -> f64 {
    match (a.is_finite(), b.is_finite()) {
        (true, true) => 0.5 * (a + b),
        (true, false) => a + a.abs().max(1.0),
        (false, true) => b - b.abs().max(1.0),
        (false, false) => 0.0,
    }
}

fn tag_order(a: Option<usize>, b: Option<usize>) -> Ordering {
    a.cmp(&b)
}

/// Points in `(a, b)` where the trig piece has a kink.
fn trig_kinks(piece: &Piece, a: f64, b: f64, out: &mut Vec<f64>) {
    if let Piece::Trig { phase, .. } = *piece {
        use std::f64::consts::{FRAC_PI_2, PI};
        let base = phase + FRAC_PI_2;
        let mut k = ((a - base) / PI).floor();
        loop {
            let x = base + k * PI;
            if x >= b {
                break;
            }
            if x > a {
                out.push(x);
            }
            k += 1.0;
        }
    }
}

/// `(A, B)` with `piece(x) = A cos x + B sin x` near `x`, for a trig piece.
fn trig_coefficients(piece: &Piece, x: f64) -> (f64, f64) {
    match *piece {
        Piece::Trig { amp, phase } => {
            let sign = if (x - phase).cos() >= 0.0 { 1.0 } else { -1.0 };
            let (s, c) = phase.sin_cos();
            (amp * sign * c, amp * sign * s)
        }
        _ => (0.0, 0.0),
    }
}

/// Roots in `(a, b)` of `A cos x + B sin x + c = 0`.
fn harmonic_roots(ca: f64, cb: f64, c: f64, a: f64, b: f64, out: &mut Vec<f64>) {
    use std::f64::consts::TAU;
    let r = ca.hypot(cb);
    if r <= 1e-300 {
        return;
    }
    let t = -c / r;
    if t.abs() > 1.0 {
        return;
    }
    let theta = cb.atan2(ca);
    let d = t.acos();
    for root in [theta + d, theta - d] {
        let mut k = ((a - root) / TAU).floor();
        loop {
            let x = root + k * TAU;
            if x >= b {
                break;
            }
            if x > a {
                out.push(x);
            }
            k += 1.0;
        }
    }
}

/// Candidate crossings of two pieces inside `(a, b)`, unsorted.
fn crossings(p: &Piece, q: &Piece, a: f64, b: f64) -> Vec<f64> {
    let mut out = Vec::new();
    if p.is_infinite_constant() || q.is_infinite_constant() {
        return out;
    }
    if let (Some((s1, i1)), Some((s2, i2))) = (p.as_linear(), q.as_linear()) {
        if s1 != s2 {
            let x = (i2 - i1) / (s1 - s2);
            if x > a && x < b {
                out.push(x);
            }
        }
        return out;
    }
    if !(a.is_finite() && b.is_finite()) {
        // Trig pieces only live on bounded (circular) domains.
        return out;
    }
    let mut cuts = vec![a];
    trig_kinks(p, a, b, &mut cuts);
    trig_kinks(q, a, b, &mut cuts);
    cuts.push(b);
    cuts.sort_by(f64::total_cmp);
    out.extend_from_slice(&cuts[1..cuts.len() - 1]);
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if hi <= lo {
            continue;
        }
        let mid = 0.5 * (lo + hi);
        let linear_part = |piece: &Piece| piece.as_linear();
        match (linear_part(p), linear_part(q)) {
            (Some((0.0, c)), None) => {
                let (ca, cb) = trig_coefficients(q, mid);
                harmonic_roots(ca, cb, -c, lo, hi, &mut out);
            }
            (None, Some((0.0, c))) => {
                let (ca, cb) = trig_coefficients(p, mid);
                harmonic_roots(ca, cb, -c, lo, hi, &mut out);
            }
            (None, None) => {
                let (a1, b1) = trig_coefficients(p, mid);
                let (a2, b2) = trig_coefficients(q, mid);
                harmonic_roots(a1 - a2, b1 - b2, 0.0, lo, hi, &mut out);
            }
            _ => numeric_roots(p, q, lo, hi, &mut out),
        }
    }
    out
}

/// Sign changes of `p - q` on a smooth stretch, located by bisection.
fn numeric_roots(p: &Piece, q: &Piece, a: f64, b: f64, out: &mut Vec<f64>) {
    const SAMPLES: usize = 64;
    let f = |x: f64| p.eval(x) - q.eval(x);
    let mut x0 = a;
    let mut f0 = f(a);
    for k in 1..=SAMPLES {
        let x1 = a + (b - a) * k as f64 / SAMPLES as f64;
        let f1 = f(x1);
        if f0 * f1 < 0.0 {
            let (mut lo, mut hi, mut flo) = (x0, x1, f0);
            for _ in 0..100 {
                let m = 0.5 * (lo + hi);
                let fm = f(m);
                if fm * flo <= 0.0 {
                    hi = m;
                } else {
                    lo = m;
                    flo = fm;
                }
            }
            out.push(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
}

/// Pointwise max of two pieces on `[a, b)`, appended to `out`.
fn max_pieces(
    p: (Piece, Option<usize>),
    q: (Piece, Option<usize>),
    a: f64,
    b: f64,
    out: &mut Vec<Span>,
) {
    if p == q {
        out.push(Span {
            start: a,
            end: b,
            piece: p.0,
            tag: p.1,
        });
        return;
    }
    let mut cuts = crossings(&p.0, &q.0, a, b);
    cuts.push(a);
    cuts.push(b);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if hi <= lo {
            continue;
        }
        let x = probe_point(lo, hi);
        let (vp, vq) = (p.0.eval(x), q.0.eval(x));
        let scale = 1.0 + vp.abs().max(vq.abs());
        let tie = vp == vq || (scale.is_finite() && (vp - vq).abs() <= TIE_TOL * scale);
        let take_p = if tie {
            tag_order(p.1, q.1) != Ordering::Greater
        } else {
            vp > vq
        };
        let (piece, tag) = if take_p { p } else { q };
        out.push(Span {
            start: lo,
            end: hi,
            piece,
            tag,
        });
    }
}

/// Pointwise max of two sorted, disjoint span lists (gaps allowed).
fn merge_max(f: &[Span], g: &[Span]) -> Vec<Span> {
    let mut cuts: Vec<f64> = Vec::with_capacity(2 * (f.len() + g.len()));
    for s in f.iter().chain(g) {
        cuts.push(s.start);
        cuts.push(s.end);
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut out = Vec::with_capacity(cuts.len());
    let (mut i, mut j) = (0, 0);
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        while i < f.len() && f[i].end <= a {
            i += 1;
        }
        while j < g.len() && g[j].end <= a {
            j += 1;
        }
        let fa = f.get(i).filter(|s| s.start <= a);
        let ga = g.get(j).filter(|s| s.start <= a);
        match (fa, ga) {
            (Some(s), Some(t)) => max_pieces((s.piece, s.tag), (t.piece, t.tag), a, b, &mut out),
            (Some(s), None) | (None, Some(s)) => out.push(Span {
                start: a,
                end: b,
                ..*s
            }),
            (None, None) => {}
        }
    }
    out
}

/// Merges neighboring spans that carry the same piece and tag.
fn coalesce(spans: Vec<Span>) -> Vec<Span> {
    let mut out: Vec<Span> = Vec::with_capacity(spans.len());
    for s in spans {
        if s.end <= s.start {
            continue;
        }
        match out.last_mut() {
            Some(last) if last.end == s.start && last.piece == s.piece && last.tag == s.tag => {
                last.end = s.end;
            }
            _ => out.push(s),
        }
    }
    out
}

fn segment_spans(domain: Domain, seg: &Segment1D) -> Vec<Span> {
    let make = |(start, end): (f64, f64)| Span {
        start,
        end,
        piece: seg.piece,
        tag: Some(seg.tag),
    };
    match domain {
        Domain::Circular { period } => {
            let mut parts = circular_parts(seg.start, seg.end, period);
            parts.retain(|(a, b)| b > a);
            parts.sort_by(|x, y| x.0.total_cmp(&y.0));
            parts.into_iter().map(make).collect()
        }
        Domain::Interval { start, end } => {
            let a = seg.start.max(start);
            let b = seg.end.min(end);
            if b > a {
                vec![make((a, b))]
            } else {
                vec![]
            }
        }
    }
}

fn envelope_of(parts: Vec<Vec<Span>>) -> Vec<Span> {
    match parts.len() {
        0 => vec![],
        1 => parts.into_iter().next().unwrap(),
        n => {
            let mut parts = parts;
            let right = parts.split_off(n / 2);
            let l = envelope_of(parts);
            let r = envelope_of(right);
            coalesce(merge_max(&l, &r))
        }
    }
}

/// Pointwise maximum of `segments` and the optional `base` over `domain`.
/// Uncovered parts of the domain get the constant `-inf`.
pub fn upper_envelope(
    domain: Domain,
    segments: &[Segment1D],
    base: Option<&PiecewiseFunction>,
) -> PiecewiseFunction {
    let mut parts: Vec<Vec<Span>> = segments.iter().map(|s| segment_spans(domain, s)).collect();
    parts.retain(|p| !p.is_empty());
    parts.push(
        base.map(|b| b.spans.clone())
            .unwrap_or_else(|| PiecewiseFunction::constant(domain, f64::NEG_INFINITY).spans),
    );
    let spans = envelope_of(parts);
    PiecewiseFunction {
        domain,
        spans: coalesce(spans),
    }
}

/// Pointwise minimum; uncovered parts get the constant `+inf`.
pub fn lower_envelope(
    domain: Domain,
    segments: &[Segment1D],
    base: Option<&PiecewiseFunction>,
) -> PiecewiseFunction {
    let negated: Vec<Segment1D> = segments
        .iter()
        .map(|s| Segment1D {
            piece: s.piece.negate(),
            ..*s
        })
        .collect();
    let nbase = base.map(PiecewiseFunction::negate);
    upper_envelope(domain, &negated, nbase.as_ref()).negate()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeMin {
    pub x: f64,
    pub value: f64,
    /// Index of the span holding `x`.
    pub span: usize,
}

/// Global minimum over the finite-valued spans of `f`, or `None` when every
/// span is infinite. Ties resolve to the smallest `x`.
///
/// Candidates are span endpoints (as one-sided limits) and the kinks of
/// trigonometric pieces. If the value at an endpoint jumps up on the other
/// side, the returned `x` is moved just inside the span so that it is a
/// point where the reported value is actually taken.
pub fn envelope_min(f: &PiecewiseFunction) -> Option<EnvelopeMin> {
    let spans = &f.spans;
    let n = spans.len();
    let circular = matches!(f.domain, Domain::Circular { .. });
    let mut best: Option<EnvelopeMin> = None;
    for (idx, s) in spans.iter().enumerate() {
        if s.piece.is_infinite_constant() {
            continue;
        }
        let mut cands = vec![s.start, s.end];
        if let Piece::Trig { phase, .. } = s.piece {
            trig_kinks(&s.piece, s.start, s.end, &mut cands);
            // For a flipped trig piece the minima sit at the crests.
            let crest = Piece::Trig {
                amp: 1.0,
                phase: phase + std::f64::consts::FRAC_PI_2,
            };
            trig_kinks(&crest, s.start, s.end, &mut cands);
        }
        cands.sort_by(f64::total_cmp);
        for x in cands {
            let value = limit_value(&s.piece, x, s.start, s.end);
            if best.is_some_and(|b| value >= b.value - TIE_TOL * (1.0 + b.value.abs())) {
                continue;
            }
            let eta = {
                let len = s.end - s.start;
                let e = 1e-9 * x.abs().max(1.0);
                if len.is_finite() {
                    e.min(len / 4.0)
                } else {
                    e
                }
            };
            let higher = |v: f64| v > value + TIE_TOL * (1.0 + value.abs());
            let (x, span, value) = if x == s.start && x.is_finite() {
                let prev = if idx > 0 {
                    Some(&spans[idx - 1])
                } else if circular {
                    Some(&spans[n - 1])
                } else {
                    None
                };
                if prev.is_some_and(|p| higher(p.piece.eval(p.end))) {
                    (x + eta, idx, s.piece.eval(x + eta))
                } else {
                    (x, idx, value)
                }
            } else if x == s.end && x.is_finite() {
                let next = if idx + 1 < n {
                    Some(idx + 1)
                } else if circular {
                    Some(0)
                } else {
                    None
                };
                match next {
                    None => (x, idx, value),
                    Some(j) if !higher(spans[j].piece.eval(spans[j].start)) => {
                        (spans[j].start, j, value)
                    }
                    Some(_) => (x - eta, idx, s.piece.eval(x - eta)),
                }
            } else {
                (x, idx, value)
            };
            best = Some(EnvelopeMin { x, value, span });
        }
    }
    best
}

/// Value of `piece` at `x`, as a limit when `x` is an infinite end.
fn limit_value(piece: &Piece, x: f64, start: f64, end: f64) -> f64 {
    if x.is_finite() {
        return piece.eval(x);
    }
    match *piece {
        Piece::Linear { slope, .. } if slope != 0.0 => {
            if (slope > 0.0) == (x < 0.0) {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        }
        _ => piece.eval(probe_point(start, end)),
    }
}

/// A read-only matrix whose rows and columns are nondecreasing, given by an
/// entry accessor.
pub struct SortedMatrixView<F: Fn(usize, usize) -> f64> {
    pub rows: usize,
    pub cols: usize,
    pub entry: F,
}

impl<F: Fn(usize, usize) -> f64> SortedMatrixView<F> {
    pub fn new(rows: usize, cols: usize, entry: F) -> Self {
        Self { rows, cols, entry }
    }

    fn at(&self, i: usize, j: usize) -> f64 {
        (self.entry)(i, j)
    }

    /// Per row, the number of entries `< x` (or `<= x` when `inclusive`).
    /// Walks the staircase with `O(rows + cols)` accessor calls.
    fn counts(&self, x: f64, inclusive: bool, out: &mut [usize]) {
        let below = |v: f64| if inclusive { v <= x } else { v < x };
        let mut j = self.cols;
        for (i, slot) in out.iter_mut().enumerate() {
            while j > 0 && !below(self.at(i, j - 1)) {
                j -= 1;
            }
            *slot = j;
        }
    }
}

/// Weighted lower median of `(value, weight)` items; expected linear time.
fn weighted_median(items: &mut [(f64, usize)]) -> f64 {
    let total: usize = items.iter().map(|&(_, w)| w).sum();
    let mut target = total.div_ceil(2);
    let mut slice = items;
    loop {
        let mid = slice.len() / 2;
        slice.select_nth_unstable_by(mid, |a, b| a.0.total_cmp(&b.0));
        let left: usize = slice[..mid].iter().map(|&(_, w)| w).sum();
        if left >= target {
            slice = &mut slice[..mid];
        } else if left + slice[mid].1 >= target {
            return slice[mid].0;
        } else {
            target -= left + slice[mid].1;
            slice = &mut slice[mid + 1..];
        }
    }
}

/// Candidate bookkeeping shared by selection and search: per row the
/// surviving column range `[lo, hi)`.
struct Candidates {
    lo: Vec<usize>,
    hi: Vec<usize>,
}

impl Candidates {
    fn new<F: Fn(usize, usize) -> f64>(m: &SortedMatrixView<F>) -> Self {
        Self {
            lo: vec![0; m.rows],
            hi: vec![m.cols; m.rows],
        }
    }

    fn total(&self) -> usize {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(&l, &h)| h.saturating_sub(l))
            .sum()
    }

    fn pivot<F: Fn(usize, usize) -> f64>(&self, m: &SortedMatrixView<F>) -> f64 {
        let mut mids: Vec<(f64, usize)> = (0..m.rows)
            .filter(|&i| self.hi[i] > self.lo[i])
            .map(|i| {
                let (l, h) = (self.lo[i], self.hi[i]);
                (m.at(i, l + (h - l) / 2), h - l)
            })
            .collect();
        weighted_median(&mut mids)
    }

    fn keep_below(&mut self, counts: &[usize]) {
        for (h, &c) in self.hi.iter_mut().zip(counts) {
            *h = (*h).min(c);
        }
    }

    fn keep_above(&mut self, counts: &[usize]) {
        for (l, &c) in self.lo.iter_mut().zip(counts) {
            *l = (*l).max(c);
        }
    }

    fn materialize<F: Fn(usize, usize) -> f64>(&self, m: &SortedMatrixView<F>) -> Vec<f64> {
        let mut v = Vec::with_capacity(self.total());
        for i in 0..m.rows {
            for j in self.lo[i]..self.hi[i] {
                v.push(m.at(i, j));
            }
        }
        v.sort_by(f64::total_cmp);
        v
    }
}

fn small_enough(total: usize, rows: usize, cols: usize) -> bool {
    total <= (rows + cols).max(16)
}

/// The `k`-th smallest entry (1-based, counting multiplicity).
///
/// Repeatedly picks the weighted median of the row midpoints of the
/// surviving candidates as a pivot and discards at least a quarter of them,
/// so the accessor is called `O((rows + cols) log(rows + cols))` times.
pub fn sorted_matrix_select<F: Fn(usize, usize) -> f64>(
    m: &SortedMatrixView<F>,
    k: usize,
) -> Result<f64> {
    let len = m.rows * m.cols;
    if k == 0 || k > len {
        return Err(Error::RankOutOfRange { k, len });
    }
    let mut cand = Candidates::new(m);
    let mut below = 0usize;
    let mut lt = vec![0; m.rows];
    let mut le = vec![0; m.rows];
    while !small_enough(cand.total(), m.rows, m.cols) {
        let x = cand.pivot(m);
        m.counts(x, false, &mut lt);
        m.counts(x, true, &mut le);
        let n_lt: usize = lt.iter().sum();
        let n_le: usize = le.iter().sum();
        if k <= n_lt {
            cand.keep_below(&lt);
        } else if k <= n_le {
            return Ok(x);
        } else {
            below = n_le;
            cand.keep_above(&le);
        }
    }
    let rest = cand.materialize(m);
    Ok(rest[k - 1 - below])
}

/// The smallest entry for which the monotone predicate `accept` holds
/// (false on a prefix of the sorted entries, true afterwards), or `None`.
///
/// Same pruning as [`sorted_matrix_select`], with one predicate call per
/// round plus a binary search over the final candidates.
pub fn sorted_matrix_search<F, P>(m: &SortedMatrixView<F>, mut accept: P) -> Option<f64>
where
    F: Fn(usize, usize) -> f64,
    P: FnMut(f64) -> bool,
{
    if m.rows == 0 || m.cols == 0 {
        return None;
    }
    let mut cand = Candidates::new(m);
    let mut best: Option<f64> = None;
    let mut counts = vec![0; m.rows];
    while !small_enough(cand.total(), m.rows, m.cols) {
        let x = cand.pivot(m);
        if accept(x) {
            best = Some(x);
            m.counts(x, false, &mut counts);
            cand.keep_below(&counts);
        } else {
            m.counts(x, true, &mut counts);
            cand.keep_above(&counts);
        }
    }
    let mut rest = cand.materialize(m);
    rest.dedup();
    let (mut lo, mut hi) = (0usize, rest.len());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if accept(rest[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    rest.get(lo).copied().or(best)
}
