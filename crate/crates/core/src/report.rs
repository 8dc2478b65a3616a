//! The common result type of all optimizers.

use std::fmt;

use crate::enclosing::{EnclosingCross, Rhombus};
use crate::geom::{HighwayLine, Point, Strip};
use crate::travel::{CrossCenter, Metric};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Facility {
    Line(HighwayLine),
    Cross(CrossCenter),
}

/// How close the reported diameter is to the optimum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Guarantee {
    Exact,
    /// At most this factor times the optimum.
    Factor(f64),
    /// At most `1 + eps` times the optimum.
    Epsilon(f64),
}

impl Guarantee {
    /// The multiplicative bound relative to the optimum.
    pub fn factor(&self) -> f64 {
        match *self {
            Guarantee::Exact => 1.0,
            Guarantee::Factor(c) => c,
            Guarantee::Epsilon(e) => 1.0 + e,
        }
    }
}

impl fmt::Display for Guarantee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Guarantee::Exact => f.write_str("exact"),
            Guarantee::Factor(c) => write!(f, "factor({c})"),
            Guarantee::Epsilon(e) => write!(f, "epsilon({e})"),
        }
    }
}

/// The algorithm that produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    HorizontalStrip,
    HorizontalRhombus,
    FreeStrip,
    EnvelopeExact,
    RhombusApprox,
    EnclosingCross,
    MedianHighways,
    SingleSourceBisection,
    AllPairsBisection,
    ExactSmall,
    OracleLine,
    OracleCross,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::HorizontalStrip => "horizontal_strip",
            Method::HorizontalRhombus => "horizontal_rhombus",
            Method::FreeStrip => "free_strip",
            Method::EnvelopeExact => "envelope_exact",
            Method::RhombusApprox => "rhombus_approx",
            Method::EnclosingCross => "enclosing_cross",
            Method::MedianHighways => "median_highways",
            Method::SingleSourceBisection => "single_source_bisection",
            Method::AllPairsBisection => "all_pairs_bisection",
            Method::ExactSmall => "exact_small",
            Method::OracleLine => "oracle_line",
            Method::OracleCross => "oracle_cross",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The smallest enclosing shape an optimizer derived its facility from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EnclosingShape {
    Strip(Strip),
    Rhombus(Rhombus),
    Cross(EnclosingCross),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveReport {
    pub facility: Facility,
    pub metric: Metric,
    pub diameter: f64,
    pub witness: (Point, Point),
    pub guarantee: Guarantee,
    pub method: Method,
    pub shape: Option<EnclosingShape>,
}
