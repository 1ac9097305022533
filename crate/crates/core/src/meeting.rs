//! Meeting protocol: once R1 finds the exit at `E` at time `t0` it computes the
//! shortest extra time `t` such that R2, after `t0 + t` time units, stands at a
//! point `M` with `|EM| = t`. Evacuation then takes `t0 + 2t`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{boundary_point, Point, Robot};
use crate::strategy::{
    build_trajectory, find_time, SegmentKind, StrategyError, StrategyParams, Trajectory, Variant,
};

/// Absolute tolerance on the meeting time `t`.
pub const MEETING_TOL: f64 = 1e-12;
/// Joint-detection window for labeling a meeting as a corner meeting.
pub const CORNER_TOL: f64 = 1e-9;
/// Upper cap on the bracket for `t`.
pub const BRACKET_CAP: f64 = 8.0 * PI;

#[derive(Debug, Error)]
pub enum MeetingError {
    #[error("no meeting time below the bracket cap {cap} (t0 = {t0})")]
    NoRoot { t0: f64, cap: f64 },
    #[error("discovery time t0 = {0} is before the boundary search starts")]
    BadStartTime(f64),
    #[error(transparent)]
    Strategy(#[from] StrategyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeetingPhase {
    Boundary,
    CutOut,
    CutBack,
    /// Meeting at a joint between two trajectory segments.
    Corner,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeetingResult {
    /// Exit position.
    pub exit: Point,
    /// Discovery time.
    pub t0: f64,
    /// Additional time until pickup.
    pub t: f64,
    /// Meeting point.
    #[serde(rename = "M")]
    pub meeting_point: Point,
    /// `t0 + 2t`.
    pub evac: f64,
    pub meeting_phase: MeetingPhase,
}

impl MeetingResult {
    pub fn meeting_time(&self) -> f64 {
        self.t0 + self.t
    }
}

/// Shortest pickup for an exit `exit` discovered at `t0`, against the other robot's path.
///
/// `f(t) = |E - pos(t0 + t)| - t` is non-increasing, so `{t : f(t) <= 0}` is a
/// half-line and its left end is found by bisection of the predicate.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn solve_meeting(
    other: &Trajectory,
    t0: f64,
    exit: Point,
) -> Result<MeetingResult, MeetingError> {
    if !(t0 >= 1.0 - MEETING_TOL) {
        return Err(MeetingError::BadStartTime(t0));
    }
    let f = |t: f64| exit.distance(other.position_at(t0 + t)) - t;
    // The slack absorbs rounding when both robots reach the same point together;
    // without it a tangential approach would bisect to t ~ eps^(1/3).
    let met = |t: f64| f(t) <= MEETING_TOL;

    let t = if met(0.0) {
        0.0
    } else {
        let mut lo = 0.0;
        let mut hi = f(0.0) + 1.0;
        while !met(hi) {
            lo = hi;
            hi *= 2.0;
            if hi > BRACKET_CAP {
                if met(BRACKET_CAP) {
                    hi = BRACKET_CAP;
                    break;
                }
                return Err(MeetingError::NoRoot {
                    t0,
                    cap: BRACKET_CAP,
                });
            }
        }
        while hi - lo > MEETING_TOL {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if met(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    };

    let tm = t0 + t;
    Ok(MeetingResult {
        exit,
        t0,
        t,
        meeting_point: other.position_at(tm),
        evac: t0 + 2.0 * t,
        meeting_phase: phase_at(other, tm),
    })
}

/// Which part of the trajectory the robot is on at time `tm`.
pub fn phase_at(traj: &Trajectory, tm: f64) -> MeetingPhase {
    let i = traj.segment_index(tm);
    let seg = &traj.segments[i];
    let near_start = i > 0 && (tm - seg.start_time).abs() <= CORNER_TOL;
    let near_end = seg.duration.is_finite() && (seg.end_time() - tm).abs() <= CORNER_TOL;
    if near_start || near_end {
        return MeetingPhase::Corner;
    }
    match seg.kind {
        SegmentKind::BoundaryArc => MeetingPhase::Boundary,
        SegmentKind::CutOut => MeetingPhase::CutOut,
        SegmentKind::CutBack => MeetingPhase::CutBack,
        // unreachable for t0 >= 1, but harmless
        SegmentKind::RadialStart => MeetingPhase::Corner,
    }
}

/// A strategy with both trajectories prebuilt, for repeated evaluation.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub params: StrategyParams,
    pub r1: Trajectory,
    pub r2: Trajectory,
}

impl Scenario {
    pub fn new(params: StrategyParams) -> Result<Self, StrategyError> {
        let r1 = build_trajectory(&params, Robot::R1)?;
        let r2 = build_trajectory(&params, Robot::R2)?;
        Ok(Self { params, r1, r2 })
    }

    pub fn trajectory(&self, robot: Robot) -> &Trajectory {
        match robot {
            Robot::R1 => &self.r1,
            Robot::R2 => &self.r2,
        }
    }

    /// Evacuation when `finder` discovers the exit at arc `x` of its own search half.
    pub fn evac_by(
        &self,
        finder: Robot,
        x: f64,
        variant: Variant,
    ) -> Result<MeetingResult, MeetingError> {
        let t0 = find_time(&self.params, x, variant)?;
        solve_meeting(
            self.trajectory(finder.other()),
            t0,
            boundary_point(x, finder),
        )
    }

    /// Evacuation when R1 discovers the exit at arc `x`.
    pub fn evac(&self, x: f64, variant: Variant) -> Result<MeetingResult, MeetingError> {
        self.evac_by(Robot::R1, x, variant)
    }
}

/// One-shot evacuation time for an exit at arc `x` on R1's half.
pub fn evac_time(
    params: &StrategyParams,
    x: f64,
    variant: Variant,
) -> Result<MeetingResult, MeetingError> {
    Scenario::new(params.clone())?.evac(x, variant)
}
