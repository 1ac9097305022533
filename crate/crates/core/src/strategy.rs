//! The k-cut strategy family and the robots' piecewise trajectories.
//!
//! Both robots first walk the unit radius from the center to `I`, then search
//! the boundary in opposite directions. At arc position `p_i` each robot leaves
//! the boundary along a straight cut of depth `d_i`, returns to the same
//! boundary point and resumes the search. R1's cut direction at cut `i` is
//! `(cos α_i, sin α_i)`; R2's is the mirror image `(-cos α_i, sin α_i)`.

use std::f64::consts::PI;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{boundary_point, boundary_tangent, Point, Robot, Vec2};

/// Arc positions closer than this to a cut position count as that cut.
pub const CUT_POSITION_EPS: f64 = 1e-12;

/// A single boundary cut.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutSpec {
    /// Arc length from `I` at which the cut starts.
    pub p: f64,
    /// Cut angle in radians.
    pub alpha: f64,
    /// Cut depth: half the distance traveled along the cut.
    pub d: f64,
}

impl CutSpec {
    pub fn new(p: f64, alpha: f64, d: f64) -> Self {
        Self { p, alpha, d }
    }

    /// Unit direction in which `robot` leaves the boundary.
    pub fn direction(&self, robot: Robot) -> Vec2 {
        let (s, c) = self.alpha.sin_cos();
        match robot {
            Robot::R1 => Point::new(c, s),
            Robot::R2 => Point::new(-c, s),
        }
    }

    /// Boundary point where the cut starts (`C_i` / `C_i'`).
    pub fn corner(&self, robot: Robot) -> Point {
        boundary_point(self.p, robot)
    }

    /// Deepest point of the cut (`P_i` / `P_i'`).
    pub fn tip(&self, robot: Robot) -> Point {
        self.corner(robot) + self.direction(robot) * self.d
    }
}

/// An ordered list of cuts. `cuts = []` is the plain opposite-direction search.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct StrategyParams {
    pub cuts: Vec<CutSpec>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    NonFinite { cut: usize },
    PositionOutOfRange { cut: usize, p: f64 },
    AngleOutOfRange { cut: usize, alpha: f64 },
    NonPositiveDepth { cut: usize, d: f64 },
    TipOutsideDisk { cut: usize, radius: f64 },
    NotIncreasing { cut: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonFinite { cut } => write!(f, "cut {cut}: non-finite parameter"),
            Violation::PositionOutOfRange { cut, p } => {
                write!(f, "cut {cut}: position p = {p} not in (0, π)")
            }
            Violation::AngleOutOfRange { cut, alpha } => {
                write!(f, "cut {cut}: angle alpha = {alpha} not in (0, π)")
            }
            Violation::NonPositiveDepth { cut, d } => {
                write!(f, "cut {cut}: depth d = {d} must be positive")
            }
            Violation::TipOutsideDisk { cut, radius } => {
                write!(f, "cut {cut}: tip outside disk (|tip| = {radius})")
            }
            Violation::NotIncreasing { cut } => {
                write!(
                    f,
                    "cut {cut}: position not strictly greater than previous cut"
                )
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum StrategyError {
    #[error("invalid strategy parameters: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("arc position {0} is not a cut position; after-cut discovery is undefined")]
    NotACutPosition(f64),
    #[error("arc position {0} outside [0, π]")]
    ArcOutOfRange(f64),
    #[error("reading parameter file: {0}")]
    Io(#[from] std::io::Error),
    #[error("parsing parameter JSON: {0}")]
    Json(#[from] serde_json::Error),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

impl StrategyParams {
    pub fn new(cuts: Vec<CutSpec>) -> Self {
        Self { cuts }
    }

    /// The two-cut parameter set found by local search for the published bound.
    pub fn paper() -> Self {
        Self::new(vec![
            CutSpec::new(2.62666582851, 2.0 * PI / 9.0, 0.490011696287),
            CutSpec::new(2.97374843355, 0.05523991 * PI, 0.1670474016),
        ])
    }

    pub fn k(&self) -> usize {
        self.cuts.len()
    }

    /// Every violated invariant; empty means valid.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, c) in self.cuts.iter().enumerate() {
            if !(c.p.is_finite() && c.alpha.is_finite() && c.d.is_finite()) {
                out.push(Violation::NonFinite { cut: i });
                continue;
            }
            if !(c.p > 0.0 && c.p < PI) {
                out.push(Violation::PositionOutOfRange { cut: i, p: c.p });
            }
            if !(c.alpha > 0.0 && c.alpha < PI) {
                out.push(Violation::AngleOutOfRange {
                    cut: i,
                    alpha: c.alpha,
                });
            }
            if c.d <= 0.0 {
                out.push(Violation::NonPositiveDepth { cut: i, d: c.d });
            }
            let radius = c.tip(Robot::R1).norm();
            if radius >= 1.0 - crate::geom::GEOM_EPS {
                out.push(Violation::TipOutsideDisk { cut: i, radius });
            }
            if i > 0 && self.cuts[i - 1].p.is_finite() && c.p <= self.cuts[i - 1].p {
                out.push(Violation::NotIncreasing { cut: i });
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), StrategyError> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(StrategyError::Invalid(v))
        }
    }

    /// Total detour length `2 Σ d_i`.
    pub fn total_cut_travel(&self) -> f64 {
        self.cuts.iter().map(|c| 2.0 * c.d).sum()
    }

    /// Index of the cut at arc position `x`, if any.
    pub fn cut_at(&self, x: f64) -> Option<usize> {
        self.cuts
            .iter()
            .position(|c| (c.p - x).abs() <= CUT_POSITION_EPS)
    }

    /// Flattened `(p, alpha, d)` coordinates, cut by cut.
    pub fn to_vec(&self) -> Vec<f64> {
        self.cuts.iter().flat_map(|c| [c.p, c.alpha, c.d]).collect()
    }

    pub fn from_slice(v: &[f64]) -> Self {
        Self::new(
            v.chunks_exact(3)
                .map(|c| CutSpec::new(c[0], c[1], c[2]))
                .collect(),
        )
    }

    pub fn from_json(s: &str) -> Result<Self, StrategyError> {
        let p: StrategyParams = serde_json::from_str(s)?;
        p.validate()?;
        Ok(p)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, StrategyError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("params serialize")
    }
}

/// When R1 discovers an exit located exactly at a cut position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// First visit, before the cut is performed.
    #[default]
    BeforeCut,
    /// Second visit, on returning from the cut.
    AfterCut,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::BeforeCut => f.write_str("before_cut"),
            Variant::AfterCut => f.write_str("after_cut"),
        }
    }
}

/// Time at which R1 occupies the boundary point at arc `x` (first or second visit).
pub fn find_time(params: &StrategyParams, x: f64, variant: Variant) -> Result<f64, StrategyError> {
    if !(0.0..=PI).contains(&x) {
        return Err(StrategyError::ArcOutOfRange(x));
    }
    let mut t = 1.0 + x;
    for c in &params.cuts {
        if c.p < x - CUT_POSITION_EPS {
            t += 2.0 * c.d;
        }
    }
    if variant == Variant::AfterCut {
        let i = params.cut_at(x).ok_or(StrategyError::NotACutPosition(x))?;
        t += 2.0 * params.cuts[i].d;
    }
    Ok(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentKind {
    RadialStart,
    BoundaryArc,
    CutOut,
    CutBack,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geometry {
    /// Straight motion from `from` along unit `dir`.
    Line { from: Point, dir: Vec2 },
    /// Boundary motion starting at arc position `start_arc`.
    Arc { start_arc: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub kind: SegmentKind,
    pub start_time: f64,
    /// Infinite for the final boundary arc.
    pub duration: f64,
    pub geometry: Geometry,
    /// Index of the cut this segment belongs to, for cut segments.
    pub cut: Option<usize>,
}

impl Segment {
    pub fn end_time(&self) -> f64 {
        self.start_time + self.duration
    }

    fn position(&self, robot: Robot, tau: f64) -> Point {
        match self.geometry {
            Geometry::Line { from, dir } => from + dir * tau,
            Geometry::Arc { start_arc } => boundary_point(start_arc + tau, robot),
        }
    }

    fn direction(&self, robot: Robot, tau: f64) -> Vec2 {
        match self.geometry {
            Geometry::Line { dir, .. } => dir,
            Geometry::Arc { start_arc } => boundary_tangent(start_arc + tau, robot),
        }
    }
}

/// A robot's unit-speed piecewise path, contiguous in time from 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub robot: Robot,
    pub segments: Vec<Segment>,
}

/// Joint of two segments, where the motion is not differentiable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Corner {
    pub time: f64,
    pub position: Point,
    /// Index of the segment that starts at this corner.
    pub next_segment: usize,
}

pub fn build_trajectory(
    params: &StrategyParams,
    robot: Robot,
) -> Result<Trajectory, StrategyError> {
    params.validate()?;
    let mut segments = Vec::with_capacity(3 * params.k() + 2);
    segments.push(Segment {
        kind: SegmentKind::RadialStart,
        start_time: 0.0,
        duration: 1.0,
        geometry: Geometry::Line {
            from: Point::ORIGIN,
            dir: Point::new(0.0, 1.0),
        },
        cut: None,
    });
    let mut t = 1.0;
    let mut s = 0.0;
    for (i, c) in params.cuts.iter().enumerate() {
        let arc = c.p - s;
        segments.push(Segment {
            kind: SegmentKind::BoundaryArc,
            start_time: t,
            duration: arc,
            geometry: Geometry::Arc { start_arc: s },
            cut: None,
        });
        t += arc;
        s = c.p;
        let corner = c.corner(robot);
        let dir = c.direction(robot);
        segments.push(Segment {
            kind: SegmentKind::CutOut,
            start_time: t,
            duration: c.d,
            geometry: Geometry::Line { from: corner, dir },
            cut: Some(i),
        });
        t += c.d;
        segments.push(Segment {
            kind: SegmentKind::CutBack,
            start_time: t,
            duration: c.d,
            geometry: Geometry::Line {
                from: c.tip(robot),
                dir: -dir,
            },
            cut: Some(i),
        });
        t += c.d;
    }
    segments.push(Segment {
        kind: SegmentKind::BoundaryArc,
        start_time: t,
        duration: f64::INFINITY,
        geometry: Geometry::Arc { start_arc: s },
        cut: None,
    });
    Ok(Trajectory { robot, segments })
}

impl Trajectory {
    /// Index of the segment active at time `t` (the later one at a joint).
    pub fn segment_index(&self, t: f64) -> usize {
        // segments are sorted by start time; first segment starts at 0
        let idx = self.segments.partition_point(|s| s.start_time <= t);
        idx.saturating_sub(1)
    }

    pub fn position_at(&self, t: f64) -> Point {
        let t = t.max(0.0);
        let seg = &self.segments[self.segment_index(t)];
        let tau = (t - seg.start_time).min(seg.duration);
        seg.position(self.robot, tau)
    }

    /// One-sided forward direction of motion at time `t`.
    pub fn forward_direction(&self, t: f64) -> Vec2 {
        let seg = &self.segments[self.segment_index(t.max(0.0))];
        seg.direction(self.robot, (t - seg.start_time).max(0.0))
    }

    /// One-sided backward direction of motion (the direction it arrived with).
    pub fn backward_direction(&self, t: f64) -> Vec2 {
        let mut i = self.segment_index(t.max(0.0));
        if i > 0 && t <= self.segments[i].start_time {
            i -= 1;
        }
        let seg = &self.segments[i];
        seg.direction(self.robot, (t - seg.start_time).clamp(0.0, seg.duration))
    }

    /// All segment joints in time order.
    pub fn corners(&self) -> Vec<Corner> {
        self.segments
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, s)| Corner {
                time: s.start_time,
                position: self.position_at(s.start_time),
                next_segment: i,
            })
            .collect()
    }

    /// Time at which the robot arrives back on the boundary at `I'` for the first time.
    pub fn half_search_time(&self) -> f64 {
        let last = self.segments.last().expect("non-empty trajectory");
        let Geometry::Arc { start_arc } = last.geometry else {
            unreachable!("final segment is a boundary arc")
        };
        last.start_time + (PI - start_arc)
    }
}
