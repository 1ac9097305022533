use std::f64::consts::PI;
use std::path::Path;

use anyhow::anyhow;
use rayon::prelude::*;
use serde::Serialize;

use evac_core::{Robot, Scenario, Variant};

use crate::commands::{emit, load_params, scenario, to_json};
use crate::{ExportKind, Failure, Format, EXIT_IO, EXIT_PARAMS, EXIT_SOLVER};

#[derive(Debug, Serialize)]
pub struct TrajectoryRow {
    pub t: f64,
    pub robot: Robot,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Serialize)]
pub struct ProfileRow {
    pub x: f64,
    pub evac: f64,
    pub variant: Variant,
}

/// Uniform samples of `[0, end]` with step `res`, both ends included.
fn grid(end: f64, res: f64) -> Vec<f64> {
    let n = (end / res).ceil() as usize;
    (0..n).map(|j| j as f64 * res).chain([end]).collect()
}

/// Both robots' positions on a time grid up to the end of the half search,
/// with every segment joint added so the polyline has exact corners.
pub fn trajectory_rows(sc: &Scenario, res: f64) -> Vec<TrajectoryRow> {
    let end = sc.r1.half_search_time();
    let mut times = grid(end, res);
    times.extend(sc.r1.corners().iter().map(|c| c.time).filter(|&t| t <= end));
    times.sort_by(f64::total_cmp);
    times.dedup();
    times
        .iter()
        .flat_map(|&t| {
            [Robot::R1, Robot::R2].map(|robot| {
                let p = sc.trajectory(robot).position_at(t);
                TrajectoryRow {
                    t,
                    robot,
                    x: p.x,
                    y: p.y,
                }
            })
        })
        .collect()
}

/// Evacuation time over `[0, π]`, plus the after-cut value at each cut position.
pub fn profile_rows(sc: &Scenario, res: f64) -> Result<Vec<ProfileRow>, Failure> {
    let mut pts: Vec<(f64, Variant)> = grid(PI, res)
        .into_iter()
        .map(|x| (x, Variant::BeforeCut))
        .collect();
    for c in &sc.params.cuts {
        pts.push((c.p, Variant::BeforeCut));
        pts.push((c.p, Variant::AfterCut));
    }
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then((a.1 as u8).cmp(&(b.1 as u8))));
    pts.dedup();
    pts.par_iter()
        .map(|&(x, variant)| {
            let m = sc
                .evac(x, variant)
                .map_err(|e| Failure::new(EXIT_SOLVER, e))?;
            Ok(ProfileRow {
                x,
                evac: m.evac,
                variant,
            })
        })
        .collect()
}

fn render<T: Serialize>(rows: &[T], format: Format) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(to_json(&rows)),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r).map_err(|e| Failure::new(EXIT_IO, e))?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| Failure::new(EXIT_IO, e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}

pub fn export(
    params: &str,
    what: ExportKind,
    format: Format,
    res: f64,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let sc = scenario(load_params(params)?)?;
    if !(res.is_finite() && res > 0.0) {
        return Err(Failure::new(
            EXIT_PARAMS,
            anyhow!("resolution {res} must be positive"),
        ));
    }
    let text = match what {
        ExportKind::Trajectory => render(&trajectory_rows(&sc, res), format)?,
        ExportKind::Profile => render(&profile_rows(&sc, res)?, format)?,
    };
    emit(out, &text)
}
