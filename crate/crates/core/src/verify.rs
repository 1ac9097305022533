//! Golden-value verification suite for the published two-cut parameters,
//! plus generic consistency checks that apply to any strategy.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::analysis::{
    angles, criterion, criterion_profile, decoupled_angles, lemma3_check, special_points,
    worst_case, AnalysisError, Continuation, Movement, SpecialPoints, WorstCaseConfig,
};
use crate::geom::{angle_between, arc_of, boundary_point, boundary_tangent, Point, Robot};
use crate::meeting::Scenario;
use crate::strategy::{StrategyParams, Variant};

/// Published upper bound for the two-cut algorithm.
pub const PUBLISHED_BOUND: f64 = 5.6234;
/// Evacuation time shared by the five worst-case exits.
pub const TIE_VALUE: f64 = 5.62335779;
pub const TIE_VALUE_LAST: f64 = 5.62335778;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// `|expected − computed| ≤ tolerance`.
    Near,
    /// `computed < expected − tolerance`.
    Below,
    /// `computed > expected + tolerance`.
    Above,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyCheck {
    pub name: String,
    pub expected: f64,
    pub computed: f64,
    pub tolerance: f64,
    pub kind: CheckKind,
    pub source: String,
    pub pass: bool,
}

impl VerifyCheck {
    pub fn new(
        name: impl Into<String>,
        kind: CheckKind,
        expected: f64,
        computed: f64,
        tolerance: f64,
        source: &str,
    ) -> Self {
        let pass = match kind {
            CheckKind::Near => (expected - computed).abs() <= tolerance,
            CheckKind::Below => computed < expected - tolerance,
            CheckKind::Above => computed > expected + tolerance,
        };
        Self {
            name: name.into(),
            expected,
            computed,
            tolerance,
            kind,
            source: source.to_string(),
            pass,
        }
    }

    pub fn near(
        name: impl Into<String>,
        expected: f64,
        computed: f64,
        tolerance: f64,
        source: &str,
    ) -> Self {
        Self::new(name, CheckKind::Near, expected, computed, tolerance, source)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Dense-scan resolution for the worst-case checks.
    pub scan_grid: usize,
    pub criterion_grid: usize,
    /// Samples per arc for the criterion sign checks.
    pub profile_samples: usize,
    pub sign_margin: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            scan_grid: 1_000_000,
            criterion_grid: 10_000,
            profile_samples: 20,
            sign_margin: 1e-3,
        }
    }
}

/// Worst case of the plain search without cuts must be within `[5.73, 5.745]`.
pub fn baseline_check(cfg: &VerifyConfig) -> Result<VerifyCheck, AnalysisError> {
    let sc = Scenario::new(StrategyParams::default()).expect("empty strategy is valid");
    let wc = worst_case(
        &sc,
        &WorstCaseConfig {
            scan_grid: 0,
            criterion_grid: cfg.criterion_grid,
            refine_tol: 1e-6,
        },
    )?;
    Ok(VerifyCheck::near(
        "baseline k=0 worst case",
        5.7375,
        wc.certified_max,
        0.0075,
        "opposite-direction search without cuts: 5.74",
    ))
}

/// Runs every applicable check for `params`.
///
/// Two-cut strategies get the full golden-value suite (it fails for parameters
/// other than the published ones); every strategy gets the baseline check and
/// the scan-versus-candidates agreement check.
pub fn run(params: &StrategyParams, cfg: &VerifyConfig) -> Result<Vec<VerifyCheck>, AnalysisError> {
    let sc = Scenario::new(params.clone()).map_err(|e| AnalysisError::Meeting(e.into()))?;
    let mut checks = vec![baseline_check(cfg)?];
    let wc = worst_case(
        &sc,
        &WorstCaseConfig {
            scan_grid: cfg.scan_grid,
            criterion_grid: cfg.criterion_grid,
            refine_tol: 1e-6,
        },
    )?;
    if let Some(scan) = wc.scan_max {
        checks.push(VerifyCheck::new(
            "dense scan does not exceed candidate maximum",
            CheckKind::Below,
            wc.certified_max + 1e-6,
            scan.evac,
            0.0,
            "candidate completeness",
        ));
    }
    if params.k() == 2 {
        checks.extend(two_cut_suite(&sc, wc.certified_max, cfg)?);
    }
    Ok(checks)
}

fn nan_or(x: Option<f64>) -> f64 {
    x.unwrap_or(f64::NAN)
}

fn point_checks(
    out: &mut Vec<VerifyCheck>,
    name: &str,
    p: Option<Point>,
    expected: (f64, f64),
    source: &str,
) {
    let p = p.unwrap_or(Point::new(f64::NAN, f64::NAN));
    out.push(VerifyCheck::near(
        format!("{name}.x"),
        expected.0,
        p.x,
        1e-4,
        source,
    ));
    out.push(VerifyCheck::near(
        format!("{name}.y"),
        expected.1,
        p.y,
        1e-4,
        source,
    ));
}

fn sign_check(
    sc: &Scenario,
    name: &str,
    from: Option<f64>,
    to: Option<f64>,
    above: bool,
    cfg: &VerifyConfig,
) -> VerifyCheck {
    let computed = match (from, to) {
        (Some(a), Some(b)) => match criterion_profile(sc, a, b, cfg.profile_samples) {
            Ok(samples) => {
                let it = samples.iter().map(|s| s.criterion);
                if above {
                    it.fold(f64::INFINITY, f64::min)
                } else {
                    it.fold(f64::NEG_INFINITY, f64::max)
                }
            }
            Err(_) => f64::NAN,
        },
        _ => f64::NAN,
    };
    let kind = if above {
        CheckKind::Above
    } else {
        CheckKind::Below
    };
    let rel = if above { ">" } else { "<" };
    VerifyCheck::new(
        format!("criterion {rel} 1 on arc {name}"),
        kind,
        1.0,
        computed,
        cfg.sign_margin,
        "worst-case exclusion by the angle criterion",
    )
}

/// Named points of the two-cut analysis.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoCutPoints {
    pub e1: Option<f64>,
    pub e2: Option<f64>,
    pub e3: f64,
    pub e4: Option<f64>,
    pub e5: f64,
    pub s1: Option<f64>,
    pub s2: Option<f64>,
    pub q1: Point,
    pub q2: Point,
    pub special: SpecialPoints,
}

impl TwoCutPoints {
    pub fn new(sc: &Scenario) -> Result<Self, AnalysisError> {
        let sp = special_points(sc)?;
        assert_eq!(sp.cuts.len(), 2, "two-cut strategy expected");
        Ok(Self {
            e1: sp.e1(),
            e2: sp.return_exit(0),
            e3: sp.cuts[0].cut_arc,
            e4: sp.return_exit(1),
            e5: sp.cuts[1].cut_arc,
            s1: sp.tip_exit(0),
            s2: sp.tip_exit(1),
            q1: sp.cuts[0].q,
            q2: sp.cuts[1].q,
            special: sp,
        })
    }
}

fn two_cut_suite(
    sc: &Scenario,
    certified_max: f64,
    cfg: &VerifyConfig,
) -> Result<Vec<VerifyCheck>, AnalysisError> {
    const SRC_T: &str = "published two-cut analysis";
    let mut out = Vec::new();
    let params = &sc.params;
    let pts = TwoCutPoints::new(sc)?;
    let bp = |x: Option<f64>| x.map(|x| boundary_point(x, Robot::R1));
    let evac = |x: Option<f64>, v: Variant| x.and_then(|x| sc.evac(x, v).ok());

    out.push(VerifyCheck::near(
        "certified worst case",
        5.623375,
        certified_max,
        2.5e-5,
        SRC_T,
    ));
    out.push(VerifyCheck::new(
        "certified worst case below published bound",
        CheckKind::Below,
        PUBLISHED_BOUND,
        certified_max,
        0.0,
        SRC_T,
    ));

    // five-way tie
    let ties = [
        ("E1", pts.e1, Variant::BeforeCut, TIE_VALUE),
        ("E2", pts.e2, Variant::BeforeCut, TIE_VALUE),
        ("E3~", Some(pts.e3), Variant::AfterCut, TIE_VALUE),
        ("E4", pts.e4, Variant::BeforeCut, TIE_VALUE),
        ("E5~", Some(pts.e5), Variant::AfterCut, TIE_VALUE_LAST),
    ];
    for (name, x, v, expected) in ties {
        let computed = evac(x, v).map_or(f64::NAN, |m| m.evac);
        out.push(VerifyCheck::near(
            format!("evacuation time at {name}"),
            expected,
            computed,
            1e-6,
            SRC_T,
        ));
    }

    // arc partition
    out.push(VerifyCheck::near(
        "arc I-E1",
        0.629973871925,
        nan_or(pts.e1),
        1e-8,
        SRC_T,
    ));
    out.push(VerifyCheck::near(
        "arc I-E2",
        2.590020657077,
        nan_or(pts.e2),
        1e-8,
        SRC_T,
    ));
    out.push(VerifyCheck::near(
        "arc I-E3",
        2.62666582851,
        pts.e3,
        0.0,
        SRC_T,
    ));
    out.push(VerifyCheck::near(
        "arc I-E4",
        2.972352082515,
        nan_or(pts.e4),
        1e-8,
        SRC_T,
    ));
    out.push(VerifyCheck::near(
        "arc I-E5",
        2.97374843355,
        pts.e5,
        0.0,
        SRC_T,
    ));

    // coordinates
    let (c1, c2) = (params.cuts[0], params.cuts[1]);
    point_checks(&mut out, "E1", bp(pts.e1), (-0.58912, 0.80804), SRC_T);
    point_checks(&mut out, "E2", bp(pts.e2), (-0.52403, -0.85170), SRC_T);
    point_checks(&mut out, "Q1", Some(pts.q1), (-0.94262, 0.33386), SRC_T);
    point_checks(&mut out, "S1", bp(pts.s1), (-0.82098, -0.57096), SRC_T);
    point_checks(
        &mut out,
        "C1'",
        Some(c1.corner(Robot::R2)),
        (0.49247, -0.87033),
        SRC_T,
    );
    point_checks(
        &mut out,
        "P1'",
        Some(c1.tip(Robot::R2)),
        (0.11710, -0.55536),
        SRC_T,
    );
    point_checks(
        &mut out,
        "E3",
        bp(Some(pts.e3)),
        (-0.492471164, -0.870328761),
        SRC_T,
    );
    point_checks(&mut out, "E4", bp(pts.e4), (-0.16843, -0.98571), SRC_T);
    point_checks(
        &mut out,
        "Q2",
        Some(pts.q2),
        (-0.492471152, -0.870328768),
        SRC_T,
    );
    point_checks(&mut out, "S2", bp(pts.s2), (-0.26963, -0.96296), SRC_T);
    point_checks(
        &mut out,
        "C2'",
        Some(c2.corner(Robot::R2)),
        (0.16706, -0.98595),
        SRC_T,
    );
    point_checks(
        &mut out,
        "P2'",
        Some(c2.tip(Robot::R2)),
        (0.00252, -0.95710),
        SRC_T,
    );

    // angles at the tie points, R2 assumed to continue on the boundary
    let beta_at = |x: Option<f64>, v: Variant| {
        x.and_then(|x| angles(sc, x, v, Continuation::BoundaryContinue).ok())
            .map_or((f64::NAN, f64::NAN), |a| (a.beta, a.gamma))
    };
    for (name, x, v, expected) in [
        ("E1", pts.e1, Variant::BeforeCut, 1.51327),
        ("E2", pts.e2, Variant::BeforeCut, 0.53325),
        ("E4", pts.e4, Variant::BeforeCut, 0.16855),
        ("E5~", Some(pts.e5), Variant::AfterCut, 0.08398),
    ] {
        let (b, g) = beta_at(x, v);
        out.push(VerifyCheck::near(
            format!("beta at {name}"),
            expected,
            b,
            2e-5,
            SRC_T,
        ));
        out.push(VerifyCheck::near(
            format!("gamma at {name}"),
            expected,
            g,
            2e-5,
            SRC_T,
        ));
    }
    let e3 = boundary_point(pts.e3, Robot::R1);
    let t3 = boundary_tangent(pts.e3, Robot::R1);
    let c2p = c2.corner(Robot::R2);
    let p2p = c2.tip(Robot::R2);
    let beta_e3_c2 = angle_between(t3, c2p - e3).unwrap_or(f64::NAN);
    out.push(VerifyCheck::near(
        "beta' at (E3~, C2')",
        0.34139,
        beta_e3_c2,
        1e-4,
        SRC_T,
    ));

    // side evacuation times and meeting distances
    let e_s1 = evac(pts.s1, Variant::BeforeCut);
    let e_s2 = evac(pts.s2, Variant::BeforeCut);
    let e_ip = sc.evac(PI, Variant::BeforeCut).ok();
    let m3 = evac(Some(pts.e3), Variant::AfterCut);
    let m5 = evac(Some(pts.e5), Variant::AfterCut);
    out.push(VerifyCheck::near(
        "evacuation time at S1",
        5.05489,
        e_s1.map_or(f64::NAN, |m| m.evac),
        1e-4,
        SRC_T,
    ));
    out.push(VerifyCheck::near(
        "evacuation time at S2",
        5.39304,
        e_s2.map_or(f64::NAN, |m| m.evac),
        1e-4,
        SRC_T,
    ));
    out.push(VerifyCheck::near(
        "evacuation time at I'",
        5.45572,
        e_ip.map_or(f64::NAN, |m| m.evac),
        1e-4,
        SRC_T,
    ));
    out.push(VerifyCheck::near(
        "|C2' M3~|",
        0.161251676967,
        m3.map_or(f64::NAN, |m| m.meeting_point.distance(c2p)),
        1e-4,
        SRC_T,
    ));
    out.push(VerifyCheck::near(
        "arc I-M5~",
        3.141494005121,
        m5.map_or(f64::NAN, |m| arc_of(m.meeting_point, Robot::R2)),
        1e-4,
        SRC_T,
    ));

    // decoupled bounds used to exclude the S-arcs
    let c1p = c1.corner(Robot::R2);
    let p1p = c1.tip(Robot::R2);
    let back1 = -c1.direction(Robot::R2);
    let back2 = -c2.direction(Robot::R2);
    for (tag, x, corner, tip, back, vals) in [
        (
            "E2",
            pts.e2,
            c1p,
            p1p,
            back1,
            [1.01666, 0.90489, 1.72232, -0.77769],
        ),
        (
            "E4",
            pts.e4,
            c2p,
            p2p,
            back2,
            [0.33549, 0.33289, 1.971661, -0.985099],
        ),
    ] {
        let (xp, g) = match x {
            Some(x) => (boundary_point(x, Robot::R1), boundary_tangent(x, Robot::R1)),
            None => (
                Point::new(f64::NAN, f64::NAN),
                Point::new(f64::NAN, f64::NAN),
            ),
        };
        let at_corner = decoupled_angles(xp, corner, g, back).unwrap_or((f64::NAN, f64::NAN));
        let at_tip = decoupled_angles(xp, tip, g, back).unwrap_or((f64::NAN, f64::NAN));
        out.push(VerifyCheck::near(
            format!("2 sin beta' at ({tag}, corner)"),
            vals[0],
            2.0 * at_corner.0.sin(),
            1e-5,
            SRC_T,
        ));
        out.push(VerifyCheck::near(
            format!("sin gamma' at ({tag}, tip)"),
            vals[1],
            at_tip.1.sin(),
            1e-5,
            SRC_T,
        ));
        out.push(VerifyCheck::near(
            format!("2 cos beta' at ({tag}, corner)"),
            vals[2],
            2.0 * at_corner.0.cos(),
            1e-5,
            SRC_T,
        ));
        out.push(VerifyCheck::near(
            format!("cos gamma' at ({tag}, corner)"),
            vals[3],
            at_corner.1.cos(),
            1e-5,
            SRC_T,
        ));
    }

    // angle bounds on the E-Q and Q-S arcs
    let ang = |a: Point, vtx: Point, b: Point| angle_between(a - vtx, b - vtx).unwrap_or(f64::NAN);
    let e1p = bp(pts.e1).unwrap_or(Point::new(f64::NAN, f64::NAN));
    let s1p = bp(pts.s1).unwrap_or(Point::new(f64::NAN, f64::NAN));
    let s2p = bp(pts.s2).unwrap_or(Point::new(f64::NAN, f64::NAN));
    out.push(VerifyCheck::near(
        "angle E1 P1' Q1",
        0.39474,
        ang(e1p, p1p, pts.q1),
        1e-5,
        SRC_T,
    ));
    out.push(VerifyCheck::near(
        "angle Q1 P1' S1",
        0.71477,
        ang(pts.q1, p1p, s1p),
        1e-5,
        SRC_T,
    ));
    out.push(VerifyCheck::near(
        "angle Q2 P2' S2",
        0.195072,
        ang(pts.q2, p2p, s2p),
        1e-5,
        SRC_T,
    ));
    let q1_arc = pts.special.cuts[0].q_arc;
    let q2_arc = pts.special.cuts[1].q_arc;
    let beta_q = |q: Point, arc: f64, c: Point| {
        angle_between(boundary_tangent(arc, Robot::R1), c - q).unwrap_or(f64::NAN)
    };
    out.push(VerifyCheck::near(
        "beta' at (Q1, C1')",
        1.21306,
        beta_q(pts.q1, q1_arc, c1p),
        1e-5,
        SRC_T,
    ));
    out.push(VerifyCheck::near(
        "beta' at (Q2, C2')",
        0.34138552,
        beta_q(pts.q2, q2_arc, c2p),
        1e-7,
        SRC_T,
    ));
    out.push(VerifyCheck::near(
        "criterion bound on Q1-S1",
        1.45554,
        criterion(beta_q(pts.q1, q1_arc, c1p), ang(pts.q1, p1p, s1p)),
        1e-4,
        SRC_T,
    ));

    // sign claims, 20 interior samples per arc
    let (e1, e2, e4) = (pts.e1, pts.e2, pts.e4);
    let (q1, q2) = (Some(q1_arc), Some(q2_arc));
    let (e3, e5) = (Some(pts.e3), Some(pts.e5));
    out.push(sign_check(sc, "I-E1", Some(0.0), e1, false, cfg));
    out.push(sign_check(sc, "E1-Q1", e1, q1, true, cfg));
    out.push(sign_check(sc, "Q1-S1", q1, pts.s1, true, cfg));
    out.push(sign_check(sc, "S1-E2", pts.s1, e2, false, cfg));
    out.push(sign_check(sc, "E2-E3", e2, e3, true, cfg));
    out.push(sign_check(sc, "E3~-Q2", e3, q2, true, cfg));
    out.push(sign_check(sc, "Q2-S2", q2, pts.s2, true, cfg));
    out.push(sign_check(sc, "S2-E4", pts.s2, e4, false, cfg));
    out.push(sign_check(sc, "E4-E5", e4, e5, true, cfg));
    out.push(sign_check(sc, "E5~-I'", e5, Some(PI), true, cfg));

    // movement type on the Q-S arcs
    for (name, from, to) in [("Q1-S1", q1, pts.s1), ("Q2-S2", q2, pts.s2)] {
        let converse = match (from, to) {
            (Some(a), Some(b)) => criterion_profile(sc, a, b, cfg.profile_samples)
                .map(|s| {
                    s.iter()
                        .filter(|p| p.movement == Movement::Converse)
                        .count() as f64
                })
                .unwrap_or(f64::NAN),
            _ => f64::NAN,
        };
        out.push(VerifyCheck::near(
            format!("converse movement on arc {name}"),
            cfg.profile_samples as f64,
            converse,
            0.0,
            SRC_T,
        ));
    }

    // decoupled perturbation claim along each cut's return leg
    for (tag, x, cut) in [("E2", e2, c1), ("E4", e4, c2)] {
        let violations = match x {
            Some(x) => {
                let rep = lemma3_check(
                    boundary_point(x, Robot::R1),
                    boundary_tangent(x, Robot::R1),
                    &cut,
                    1000,
                );
                rep.violations.len() as f64
            }
            None => f64::NAN,
        };
        out.push(VerifyCheck::near(
            format!("return-leg perturbation check at {tag}"),
            0.0,
            violations,
            0.0,
            "decoupled meeting point moved towards the boundary",
        ));
    }

    Ok(out)
}

/// True iff every check passed.
pub fn all_pass(checks: &[VerifyCheck]) -> bool {
    checks.iter().all(|c| c.pass)
}
