//! Placement of a single highway, or an axis-aligned highway cross, that
//! minimizes the travel-time diameter of a planar point set.
//!
//! Travel happens at unit speed in the underlying metric (L1 or L2) and at
//! speed `v > 1` along a highway. The crate provides:
//!
//! * [`geom`]: points, speed profiles, convex hull and the rotating-calipers
//!   width function;
//! * [`travel`]: closed-form quickest-path travel times and diameters for a
//!   fixed facility;
//! * [`enclosing`]: smallest enclosing strips, weighted rhombi and crosses;
//! * [`envelope`]: upper envelopes of 1-D pieces and sorted-matrix selection;
//! * [`line`]: single-highway optimizers;
//! * [`cross`]: highway-cross optimizers, the pair-region calculus and the
//!   decision procedure;
//! * [`oracle`]: brute-force graders used to cross-check everything above.

pub mod cross;
pub mod enclosing;
pub mod envelope;
mod error;
pub mod geom;
pub mod line;
pub mod oracle;
pub mod report;
pub mod travel;

pub use error::{Error, Result};
pub use geom::{HighwayLine, Point, PointSet, SpeedProfile, Strip};
pub use report::{EnclosingShape, Facility, Guarantee, Method, SolveReport};
pub use travel::{CrossCenter, Diameter, Metric, PathKind, TravelTimeResult};

/// Absolute comparison tolerance for coordinates and widths.
pub const TOLERANCE: f64 = 1e-9;
