//! Worst-case analysis over exit positions.
//!
//! An exit at `E` can only be a worst case if one of the robots moves
//! non-differentiably at `E` or at the matching meeting point `M`, or if the
//! angle criterion `2 cos β + cos γ` equals 1 there. Here `β` is the angle
//! between R1's direction `g` at `E` and the segment towards `M`, and `γ` the
//! angle between R2's direction `h` at `M` and the segment back towards `E`.
//! The candidate set collects all such exits; a dense scan of `T(x)` serves
//! as an independent check of the candidate maximum.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{
    angle_between, arc_of, boundary_point, boundary_tangent, line_circle_second_intersection,
    GeomError, Point, Robot, Vec2, GEOM_EPS,
};
use crate::meeting::{MeetingError, MeetingResult, Scenario, CORNER_TOL};
use crate::strategy::{CutSpec, SegmentKind, Trajectory, Variant};

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Meeting(#[from] MeetingError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("exit and meeting point coincide; angles are undefined")]
    Coincident,
}

/// How to pick a direction at a trajectory joint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Continuation {
    /// Use the boundary tangent, as if the robot kept searching the boundary.
    #[default]
    BoundaryContinue,
    /// Use the direction of the adjacent cut segment.
    CutContinue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Movement {
    Conform,
    Converse,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Directions {
    /// R1's direction of motion at the exit.
    pub g: Vec2,
    /// R2's direction of motion at the meeting point.
    pub h: Vec2,
    pub exit_nondiff: bool,
    pub meeting_nondiff: bool,
    pub meeting: MeetingResult,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngleReport {
    pub beta: f64,
    pub gamma: f64,
    pub movement: Movement,
    /// `2 cos β + cos γ`.
    pub criterion: f64,
}

impl AngleReport {
    pub fn from_angles(beta: f64, gamma: f64, movement: Movement) -> Self {
        Self {
            beta,
            gamma,
            movement,
            criterion: criterion(beta, gamma),
        }
    }
}

pub fn criterion(beta: f64, gamma: f64) -> f64 {
    2.0 * beta.cos() + gamma.cos()
}

/// Direction of `traj` at time `t`; joints are resolved by `cont`.
/// Returns the direction and whether `t` is a joint.
fn direction_on(traj: &Trajectory, t: f64, cont: Continuation) -> (Vec2, bool) {
    let i = traj.segment_index(t);
    let seg = &traj.segments[i];
    let (prev, next) = if i > 0 && (t - seg.start_time).abs() <= CORNER_TOL {
        (Some(i - 1), i)
    } else if seg.duration.is_finite() && (seg.end_time() - t).abs() <= CORNER_TOL {
        (Some(i), i + 1)
    } else {
        return (traj.forward_direction(t), false);
    };
    let prev = prev.expect("joint has a predecessor");
    let tj = traj.segments[next].start_time;
    let kind = |j: usize| traj.segments[j].kind;
    let is_cut = |k: SegmentKind| matches!(k, SegmentKind::CutOut | SegmentKind::CutBack);
    let use_next = match cont {
        Continuation::BoundaryContinue => {
            kind(next) == SegmentKind::BoundaryArc || kind(prev) != SegmentKind::BoundaryArc
        }
        Continuation::CutContinue => is_cut(kind(next)) || !is_cut(kind(prev)),
    };
    let dir = if use_next {
        traj.forward_direction(tj)
    } else {
        traj.backward_direction(tj)
    };
    (dir, true)
}

pub fn directions_at(
    sc: &Scenario,
    x: f64,
    variant: Variant,
    cont: Continuation,
) -> Result<Directions, AnalysisError> {
    let meeting = sc.evac(x, variant)?;
    let (g, exit_nondiff) = direction_on(&sc.r1, meeting.t0, cont);
    let (h, meeting_nondiff) = direction_on(&sc.r2, meeting.meeting_time(), cont);
    Ok(Directions {
        g,
        h,
        exit_nondiff,
        meeting_nondiff,
        meeting,
    })
}

/// Conform iff `E + g` and `M + h` lie on the same side of line `EM`.
/// Motion along the line counts as conform.
pub fn classify_movement(g: Vec2, h: Vec2, e: Point, m: Point) -> Result<Movement, AnalysisError> {
    let s = m - e;
    let len = s.norm();
    if len <= GEOM_EPS {
        return Err(AnalysisError::Coincident);
    }
    let sg = s.cross(g) / len;
    let sh = s.cross(h) / len;
    if sg.abs() <= GEOM_EPS || sh.abs() <= GEOM_EPS || sg.signum() == sh.signum() {
        Ok(Movement::Conform)
    } else {
        Ok(Movement::Converse)
    }
}

/// `β = ∠(g, M − E)`, `γ = ∠(h, E − M)`.
pub fn angles_from(d: &Directions) -> Result<AngleReport, AnalysisError> {
    let e = d.meeting.exit;
    let m = d.meeting.meeting_point;
    let movement = classify_movement(d.g, d.h, e, m)?;
    let beta = angle_between(d.g, m - e)?;
    let gamma = angle_between(d.h, e - m)?;
    Ok(AngleReport::from_angles(beta, gamma, movement))
}

pub fn angles(
    sc: &Scenario,
    x: f64,
    variant: Variant,
    cont: Continuation,
) -> Result<AngleReport, AnalysisError> {
    angles_from(&directions_at(sc, x, variant, cont)?)
}

/// Closed form of `β = γ` when both robots are on the boundary.
pub fn angles_boundary_formula(x: f64, y: f64) -> f64 {
    PI - (x + y) / 2.0
}

/// Angles for an arbitrary exit `X` and assumed meeting point `Y`:
/// `β' = ∠(g, Y − X)`, `γ' = ∠(h, X − Y)`.
pub fn decoupled_angles(x: Point, y: Point, g: Vec2, h: Vec2) -> Result<(f64, f64), AnalysisError> {
    if x.distance(y) <= GEOM_EPS {
        return Err(AnalysisError::Coincident);
    }
    Ok((angle_between(g, y - x)?, angle_between(h, x - y)?))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lemma3Violation {
    /// Fraction along the cut from tip (0) to boundary corner (1).
    pub s: f64,
    pub margin: f64,
    pub delta: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Lemma3Report {
    pub samples: usize,
    /// Samples where `2 sin β' − sin γ' > 0` and the increase was checked.
    pub checked: usize,
    /// Samples with `X` (numerically) on the cut line.
    pub skipped_collinear: usize,
    /// Samples where `2 sin β' − sin γ'` is not positive.
    pub precondition_false: usize,
    pub violations: Vec<Lemma3Violation>,
}

impl Lemma3Report {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Finite-difference step for [`lemma3_check`].
pub const LEMMA3_STEP: f64 = 1e-6;
/// Below this, `2 sin β' − sin γ'` is treated as zero.
const LEMMA3_MARGIN_FLOOR: f64 = 1e-9;

/// Along R2's return leg of `cut`, wherever `2 sin β' − sin γ' > 0`, moving the
/// assumed meeting point `Y` towards the boundary must increase `2 cos β' + cos γ'`.
pub fn lemma3_check(exit: Point, g: Vec2, cut: &CutSpec, samples: usize) -> Lemma3Report {
    let tip = cut.tip(Robot::R2);
    let corner = cut.corner(Robot::R2);
    let h = -cut.direction(Robot::R2);
    let mut rep = Lemma3Report {
        samples,
        ..Default::default()
    };
    for j in 0..samples {
        // keep Y + step strictly off the boundary
        let s = (j as f64 + 0.5) / samples as f64 * (1.0 - 2.0 * LEMMA3_STEP / cut.d);
        let y = tip + (corner - tip) * s;
        let xy = exit - y;
        if xy.norm() <= GEOM_EPS || (h.cross(xy) / xy.norm()).abs() <= 1e-9 {
            rep.skipped_collinear += 1;
            continue;
        }
        let Ok((b0, c0)) = decoupled_angles(exit, y, g, h) else {
            rep.skipped_collinear += 1;
            continue;
        };
        let margin = 2.0 * b0.sin() - c0.sin();
        if margin <= LEMMA3_MARGIN_FLOOR {
            rep.precondition_false += 1;
            continue;
        }
        let Ok((b1, c1)) = decoupled_angles(exit, y + h * LEMMA3_STEP, g, h) else {
            rep.skipped_collinear += 1;
            continue;
        };
        rep.checked += 1;
        let delta = criterion(b1, c1) - criterion(b0, c0);
        if delta <= 0.0 {
            rep.violations.push(Lemma3Violation { s, margin, delta });
        }
    }
    rep
}

/// Smooth piece `j` of R1's discovery time: `[0, p_1]`, `[p_1+, p_2]`, …, `[p_k+, π]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub index: usize,
    pub start: f64,
    pub end: f64,
}

impl Piece {
    /// Variant that keeps `x` inside this piece.
    pub fn variant_at(&self, x: f64) -> Variant {
        if self.index > 0 && x <= self.start {
            Variant::AfterCut
        } else {
            Variant::BeforeCut
        }
    }
}

pub fn pieces(sc: &Scenario) -> Vec<Piece> {
    let mut bounds = vec![0.0];
    bounds.extend(sc.params.cuts.iter().map(|c| c.p));
    bounds.push(PI);
    bounds
        .windows(2)
        .enumerate()
        .map(|(index, w)| Piece {
            index,
            start: w[0],
            end: w[1],
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CornerKind {
    /// R2 leaves the boundary at `C_i'`.
    Entry,
    /// R2 turns at the cut tip `P_i'`.
    Tip,
    /// R2 is back on the boundary at `C_i'`.
    Return,
}

/// An exit whose meeting point is a joint of R2's trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CornerExit {
    pub x: f64,
    pub variant: Variant,
    pub cut: usize,
    pub kind: CornerKind,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CutPoints {
    pub index: usize,
    /// Arc position of the cut (`E3`, `E5` for the two-cut algorithm).
    pub cut_arc: f64,
    /// R2's cut corner `C_i'` and tip `P_i'`.
    pub corner: Point,
    pub tip: Point,
    /// Exit whose meeting happens as R2 leaves the boundary (`E1`).
    pub entry_exit: Option<f64>,
    /// Exit whose meeting happens at the tip (`S_i`).
    pub tip_exit: Option<f64>,
    /// Exit whose meeting happens as R2 returns to the boundary (`E2`, `E4`).
    pub return_exit: Option<f64>,
    /// Second intersection of line `C_i' P_i'` with the circle (`Q_i`).
    pub q: Point,
    pub q_arc: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpecialPoints {
    pub cuts: Vec<CutPoints>,
    /// Every exit (on any piece) whose meeting happens at a joint of R2.
    pub corner_exits: Vec<CornerExit>,
}

impl SpecialPoints {
    /// `E1`: first exit whose meeting is at `C_1'`.
    pub fn e1(&self) -> Option<f64> {
        self.cuts.first()?.entry_exit
    }
    /// `E2`, `E4`, …: exit meeting R2 as it finishes cut `i` (0-based).
    pub fn return_exit(&self, i: usize) -> Option<f64> {
        self.cuts.get(i)?.return_exit
    }
    pub fn tip_exit(&self, i: usize) -> Option<f64> {
        self.cuts.get(i)?.tip_exit
    }
}

/// Monotone predicate bisection: smallest `x` in `[lo, hi]` with `pred(x)`.
fn bisect_predicate(mut lo: f64, mut hi: f64, tol: f64, pred: impl Fn(f64) -> bool) -> f64 {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

const SPECIAL_TOL: f64 = 1e-13;

/// Solves each joint-meeting equation `t0(x) + |E(x) − corner| = τ_corner` piece
/// by piece and keeps the roots whose actual meeting is that joint.
pub fn special_points(sc: &Scenario) -> Result<SpecialPoints, AnalysisError> {
    let pcs = pieces(sc);
    let mut corner_exits = Vec::new();
    let mut cuts = Vec::new();
    for (i, cut) in sc.params.cuts.iter().enumerate() {
        let seg_out = sc
            .r2
            .segments
            .iter()
            .position(|s| s.kind == SegmentKind::CutOut && s.cut == Some(i))
            .expect("cut-out segment exists");
        let out = sc.r2.segments[seg_out];
        let joints = [
            (CornerKind::Entry, out.start_time, cut.corner(Robot::R2)),
            (CornerKind::Tip, out.end_time(), cut.tip(Robot::R2)),
            (
                CornerKind::Return,
                out.end_time() + cut.d,
                cut.corner(Robot::R2),
            ),
        ];
        let mut found = [None; 3];
        for (slot, &(kind, tau, pos)) in joints.iter().enumerate() {
            for pc in &pcs {
                let g = |x: f64| {
                    let t0 = crate::strategy::find_time(&sc.params, x, pc.variant_at(x))
                        .expect("x inside a piece");
                    t0 + boundary_point(x, Robot::R1).distance(pos) - tau
                };
                if g(pc.start) > 0.0 || g(pc.end) < 0.0 {
                    continue;
                }
                let x = bisect_predicate(pc.start, pc.end, SPECIAL_TOL, |x| g(x) >= 0.0);
                let variant = pc.variant_at(x);
                let m = sc.evac(x, variant)?;
                if (m.meeting_time() - tau).abs() <= CORNER_TOL
                    && m.meeting_point.distance(pos) <= 1e-8
                {
                    corner_exits.push(CornerExit {
                        x,
                        variant,
                        cut: i,
                        kind,
                    });
                    if found[slot].is_none() {
                        found[slot] = Some(x);
                    }
                }
            }
        }
        let corner = cut.corner(Robot::R2);
        let tip = cut.tip(Robot::R2);
        let q = line_circle_second_intersection(corner, tip)?;
        cuts.push(CutPoints {
            index: i,
            cut_arc: cut.p,
            corner,
            tip,
            entry_exit: found[0],
            tip_exit: found[1],
            return_exit: found[2],
            q,
            q_arc: arc_of(q, Robot::R1),
        });
    }
    Ok(SpecialPoints { cuts, corner_exits })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateReason {
    R1Nondiff,
    R2NondiffAtMeeting,
    CriterionRoot,
    Endpoint,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub label: String,
    pub x: f64,
    pub variant: Variant,
    pub reason: CandidateReason,
    pub evac: f64,
    pub meeting: MeetingResult,
    pub angles: Option<AngleReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanMax {
    pub x: f64,
    pub variant: Variant,
    pub evac: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WorstCaseReport {
    pub candidates: Vec<Candidate>,
    pub certified_max: f64,
    /// Label of the candidate attaining the maximum.
    pub argmax: String,
    pub scan_max: Option<ScanMax>,
    /// `scan_max − certified_max` when it exceeds the refine tolerance.
    pub disagreement: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WorstCaseConfig {
    /// Dense-scan samples over `[0, π]`; 0 skips the scan.
    pub scan_grid: usize,
    /// Criterion samples per smooth piece used to bracket roots of `criterion − 1`.
    pub criterion_grid: usize,
    /// Allowed excess of the scan maximum over the candidate maximum.
    pub refine_tol: f64,
}

impl Default for WorstCaseConfig {
    fn default() -> Self {
        Self {
            scan_grid: 100_000,
            criterion_grid: 10_000,
            refine_tol: 1e-6,
        }
    }
}

fn cut_label(i: usize, kind: CornerKind) -> String {
    match kind {
        CornerKind::Entry => format!("entry{}", i + 1),
        CornerKind::Tip => format!("tip{}", i + 1),
        CornerKind::Return => format!("return{}", i + 1),
    }
}

fn candidate(
    sc: &Scenario,
    label: String,
    x: f64,
    variant: Variant,
    reason: CandidateReason,
) -> Result<Candidate, AnalysisError> {
    let d = directions_at(sc, x, variant, Continuation::BoundaryContinue)?;
    let angles = angles_from(&d).ok();
    Ok(Candidate {
        label,
        x,
        variant,
        reason,
        evac: d.meeting.evac,
        meeting: d.meeting,
        angles,
    })
}

fn criterion_at(sc: &Scenario, x: f64, variant: Variant) -> Option<f64> {
    angles(sc, x, variant, Continuation::BoundaryContinue)
        .ok()
        .map(|a| a.criterion - 1.0)
}

/// All worst-case candidates: endpoints, R1's cut corners (both visits),
/// joint meetings of R2, and roots of `criterion − 1` on each smooth piece.
pub fn candidates(sc: &Scenario, criterion_grid: usize) -> Result<Vec<Candidate>, AnalysisError> {
    let sp = special_points(sc)?;
    let mut out = vec![
        candidate(
            sc,
            "I".into(),
            0.0,
            Variant::BeforeCut,
            CandidateReason::Endpoint,
        )?,
        candidate(
            sc,
            "I'".into(),
            PI,
            Variant::BeforeCut,
            CandidateReason::Endpoint,
        )?,
    ];
    for (i, c) in sc.params.cuts.iter().enumerate() {
        out.push(candidate(
            sc,
            format!("cut{}", i + 1),
            c.p,
            Variant::BeforeCut,
            CandidateReason::R1Nondiff,
        )?);
        out.push(candidate(
            sc,
            format!("cut{}~", i + 1),
            c.p,
            Variant::AfterCut,
            CandidateReason::R1Nondiff,
        )?);
    }
    for ce in &sp.corner_exits {
        out.push(candidate(
            sc,
            cut_label(ce.cut, ce.kind),
            ce.x,
            ce.variant,
            CandidateReason::R2NondiffAtMeeting,
        )?);
    }

    // split every R1 piece at the joint-meeting exits, then bracket criterion roots
    let mut roots = Vec::new();
    for pc in pieces(sc) {
        let mut cuts_in: Vec<f64> = sp
            .corner_exits
            .iter()
            .map(|c| c.x)
            .filter(|&x| x > pc.start && x < pc.end)
            .collect();
        cuts_in.push(pc.start);
        cuts_in.push(pc.end);
        cuts_in.sort_by(f64::total_cmp);
        for w in cuts_in.windows(2) {
            let (a, b) = (w[0], w[1]);
            if b - a <= 1e-12 || criterion_grid == 0 {
                continue;
            }
            let n = criterion_grid;
            let xs: Vec<f64> = (1..=n)
                .map(|j| a + (b - a) * j as f64 / (n + 1) as f64)
                .collect();
            let vals: Vec<Option<f64>> = xs
                .par_iter()
                .map(|&x| criterion_at(sc, x, pc.variant_at(x)))
                .collect();
            for j in 1..n {
                let (Some(v0), Some(v1)) = (vals[j - 1], vals[j]) else {
                    continue;
                };
                if v0.signum() == v1.signum() && v0 != 0.0 {
                    continue;
                }
                let (mut lo, mut hi) = (xs[j - 1], xs[j]);
                for _ in 0..100 {
                    let mid = 0.5 * (lo + hi);
                    if mid <= lo || mid >= hi {
                        break;
                    }
                    match criterion_at(sc, mid, Variant::BeforeCut) {
                        Some(v) if v.signum() == v0.signum() && v != 0.0 => lo = mid,
                        Some(_) => hi = mid,
                        None => break,
                    }
                }
                roots.push(0.5 * (lo + hi));
            }
        }
    }
    for (j, x) in roots.into_iter().enumerate() {
        out.push(candidate(
            sc,
            format!("root{}", j + 1),
            x,
            Variant::BeforeCut,
            CandidateReason::CriterionRoot,
        )?);
    }
    Ok(out)
}

fn evac_or_nan(sc: &Scenario, x: f64, variant: Variant) -> f64 {
    sc.evac(x, variant).map(|m| m.evac).unwrap_or(f64::NAN)
}

/// Golden-section maximization of a unimodal function on `[a, b]`.
pub fn golden_max(mut a: f64, mut b: f64, tol: f64, f: impl Fn(f64) -> f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let mut best = (a, f(a));
    for x in [c, d, b] {
        let v = f(x);
        if v > best.1 {
            best = (x, v);
        }
    }
    best
}

/// Local maxima refined per piece.
const SCAN_REFINE_LIMIT: usize = 32;
const GOLDEN_TOL: f64 = 1e-10;

/// Dense evaluation of `T(x)` over `[0, π]` (both visits at cut positions),
/// with golden-section refinement of the largest local maxima of each piece.
// NaN samples must never count as local maxima
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn dense_scan(sc: &Scenario, grid: usize) -> ScanMax {
    let mut best = ScanMax {
        x: 0.0,
        variant: Variant::BeforeCut,
        evac: f64::NEG_INFINITY,
    };
    for pc in pieces(sc) {
        let mut xs: Vec<f64> = (0..=grid)
            .map(|j| PI * j as f64 / grid.max(1) as f64)
            .filter(|&x| x > pc.start && x < pc.end)
            .collect();
        xs.insert(0, pc.start);
        xs.push(pc.end);
        let vals: Vec<f64> = xs
            .par_iter()
            .map(|&x| evac_or_nan(sc, x, pc.variant_at(x)))
            .collect();
        let mut local: Vec<usize> = (0..xs.len())
            .filter(|&j| {
                let v = vals[j];
                v.is_finite()
                    && (j == 0 || !(vals[j - 1] > v))
                    && (j + 1 == xs.len() || !(vals[j + 1] > v))
            })
            .collect();
        local.sort_by(|&a, &b| vals[b].total_cmp(&vals[a]));
        local.truncate(SCAN_REFINE_LIMIT);
        for j in local {
            let mut cand = (xs[j], vals[j]);
            let a = xs[j.saturating_sub(1)];
            let b = xs[(j + 1).min(xs.len() - 1)];
            if b > a {
                let r = golden_max(a, b, GOLDEN_TOL, |x| {
                    let v = evac_or_nan(sc, x, pc.variant_at(x));
                    if v.is_nan() {
                        f64::NEG_INFINITY
                    } else {
                        v
                    }
                });
                if r.1 > cand.1 {
                    cand = r;
                }
            }
            if cand.1 > best.evac {
                best = ScanMax {
                    x: cand.0,
                    variant: pc.variant_at(cand.0),
                    evac: cand.1,
                };
            }
        }
    }
    best
}

pub fn worst_case(sc: &Scenario, cfg: &WorstCaseConfig) -> Result<WorstCaseReport, AnalysisError> {
    let candidates = candidates(sc, cfg.criterion_grid)?;
    let best = candidates
        .iter()
        .max_by(|a, b| a.evac.total_cmp(&b.evac))
        .expect("endpoint candidates always exist");
    let certified_max = best.evac;
    let argmax = best.label.clone();
    let scan_max = (cfg.scan_grid > 0).then(|| dense_scan(sc, cfg.scan_grid));
    let disagreement = scan_max
        .map(|s| s.evac - certified_max)
        .filter(|&d| d > cfg.refine_tol);
    Ok(WorstCaseReport {
        candidates,
        certified_max,
        argmax,
        scan_max,
        disagreement,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileSample {
    pub x: f64,
    pub criterion: f64,
    pub movement: Movement,
}

/// Criterion sampled at `samples` interior points of the arc `(from, to)`.
pub fn criterion_profile(
    sc: &Scenario,
    from: f64,
    to: f64,
    samples: usize,
) -> Result<Vec<ProfileSample>, AnalysisError> {
    (1..=samples)
        .map(|j| {
            let x = from + (to - from) * j as f64 / (samples + 1) as f64;
            let a = angles(sc, x, Variant::BeforeCut, Continuation::BoundaryContinue)?;
            Ok(ProfileSample {
                x,
                criterion: a.criterion,
                movement: a.movement,
            })
        })
        .collect()
}

/// R1's direction at boundary arc `x` while searching.
pub fn search_direction(x: f64) -> Vec2 {
    boundary_tangent(x, Robot::R1)
}
