use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::anyhow;
use serde::Serialize;

use evac_core::analysis::{angles, AnalysisError, AngleReport, Continuation};
use evac_core::meeting::MeetingError;
use evac_core::optimize::{pattern_search, SearchConfig};
use evac_core::strategy::StrategyError;
use evac_core::verify::{self, VerifyConfig};
use evac_core::{MeetingResult, Scenario, StrategyParams, Variant, WorstCaseConfig};

use crate::{Failure, Format, EXIT_IO, EXIT_PARAMS, EXIT_SOLVER, EXIT_VERIFY};

/// `paper` selects the builtin parameters; anything else is a file path.
pub fn load_params(spec: &str) -> Result<StrategyParams, Failure> {
    if spec == "paper" {
        return Ok(StrategyParams::paper());
    }
    StrategyParams::load(spec).map_err(|e| match e {
        StrategyError::Io(_) => Failure::new(EXIT_IO, anyhow!("{spec}: {e}")),
        _ => Failure::new(EXIT_PARAMS, anyhow!("{spec}: {e}")),
    })
}

pub fn scenario(params: StrategyParams) -> Result<Scenario, Failure> {
    Scenario::new(params).map_err(|e| Failure::new(EXIT_PARAMS, e))
}

fn meeting_failure(e: MeetingError) -> Failure {
    match e {
        MeetingError::Strategy(e) => Failure::new(EXIT_PARAMS, e),
        other => Failure::new(EXIT_SOLVER, other),
    }
}

fn analysis_failure(e: AnalysisError) -> Failure {
    match e {
        AnalysisError::Meeting(e) => meeting_failure(e),
        other => Failure::new(EXIT_SOLVER, other),
    }
}

/// Writes `text` to `out`, or stdout when absent.
pub fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    let res = match out {
        Some(p) => fs::write(p, text).map_err(|e| anyhow!("{}: {e}", p.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(Into::into),
    };
    res.map_err(|e| Failure::new(EXIT_IO, e))
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct Evaluation {
    exit_arc: f64,
    variant: Variant,
    #[serde(flatten)]
    meeting: MeetingResult,
    /// Absent when the exit and meeting point coincide.
    angles: Option<AngleReport>,
}

pub fn evaluate(
    params: &str,
    exit_arc: Option<f64>,
    after_cut: Option<usize>,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let sc = scenario(load_params(params)?)?;
    let (x, variant) = match (exit_arc, after_cut) {
        (_, Some(i)) => {
            let cut = i
                .checked_sub(1)
                .and_then(|j| sc.params.cuts.get(j))
                .ok_or_else(|| {
                    Failure::new(
                        EXIT_PARAMS,
                        anyhow!("no cut {i}; strategy has {}", sc.params.k()),
                    )
                })?;
            (cut.p, Variant::AfterCut)
        }
        (Some(x), None) => (x, Variant::BeforeCut),
        (None, None) => unreachable!("clap requires one of --exit-arc/--after-cut"),
    };
    let meeting = sc.evac(x, variant).map_err(meeting_failure)?;
    let angles = angles(&sc, x, variant, Continuation::BoundaryContinue).ok();
    emit(
        out,
        &to_json(&Evaluation {
            exit_arc: x,
            variant,
            meeting,
            angles,
        }),
    )
}

pub fn worst_case(
    params: &str,
    grid: usize,
    criterion_grid: usize,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let sc = scenario(load_params(params)?)?;
    let cfg = WorstCaseConfig {
        scan_grid: grid,
        criterion_grid,
        ..Default::default()
    };
    let report = evac_core::worst_case(&sc, &cfg).map_err(analysis_failure)?;
    emit(out, &to_json(&report))
}

pub fn verify(
    params: &str,
    grid: usize,
    format: Format,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let params = load_params(params)?;
    scenario(params.clone())?;
    let cfg = VerifyConfig {
        scan_grid: grid,
        ..Default::default()
    };
    let checks = verify::run(&params, &cfg).map_err(analysis_failure)?;
    let text = match format {
        Format::Json => to_json(&checks),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for c in &checks {
                w.serialize(c).map_err(|e| Failure::new(EXIT_IO, e))?;
            }
            String::from_utf8(
                w.into_inner()
                    .map_err(|e| Failure::new(EXIT_IO, e.into_error()))?,
            )
            .expect("csv output is utf-8")
        }
    };
    emit(out, &text)?;
    let passed = checks.iter().filter(|c| c.pass).count();
    eprintln!("{passed}/{} checks passed", checks.len());
    for c in checks.iter().filter(|c| !c.pass) {
        eprintln!(
            "FAIL {}: expected {} got {} (tolerance {})",
            c.name, c.expected, c.computed, c.tolerance
        );
    }
    if passed == checks.len() {
        Ok(())
    } else {
        Err(Failure::new(
            EXIT_VERIFY,
            anyhow!("{} checks failed", checks.len() - passed),
        ))
    }
}

pub fn load_config(path: Option<&Path>) -> Result<SearchConfig, Failure> {
    let Some(path) = path else {
        return Ok(SearchConfig::default());
    };
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_IO, anyhow!("{}: {e}", path.display())))?;
    let cfg: SearchConfig = serde_json::from_str(&text)
        .map_err(|e| Failure::new(EXIT_PARAMS, anyhow!("{}: {e}", path.display())))?;
    cfg.validate().map_err(|e| Failure::new(EXIT_PARAMS, e))?;
    Ok(cfg)
}

#[derive(Serialize)]
struct OptimizeSummary {
    objective: f64,
    evals: usize,
    certified_max: f64,
    argmax: String,
    scan_max: Option<f64>,
    params: StrategyParams,
}

pub fn optimize(
    params: &str,
    config: Option<&Path>,
    out: &Path,
    log: Option<&Path>,
) -> Result<(), Failure> {
    let seed = load_params(params)?;
    scenario(seed.clone())?;
    let cfg = load_config(config)?;
    let res = pattern_search(&seed, &cfg).map_err(|e| Failure::new(EXIT_PARAMS, e))?;
    emit(Some(out), &format!("{}\n", res.params.to_json()))?;
    if let Some(log) = log {
        let io = |e: csv::Error| Failure::new(EXIT_IO, anyhow!("{}: {e}", log.display()));
        let mut w = csv::Writer::from_path(log).map_err(io)?;
        let mut header = vec!["eval".to_string()];
        for i in 1..=seed.k() {
            header.extend([format!("p{i}"), format!("alpha{i}"), format!("d{i}")]);
        }
        header.extend(["objective".to_string(), "accepted".to_string()]);
        w.write_record(&header).map_err(io)?;
        for e in &res.log {
            let mut row = vec![e.eval.to_string()];
            row.extend(e.params.iter().map(f64::to_string));
            row.extend([e.objective.to_string(), e.accepted.to_string()]);
            w.write_record(&row).map_err(io)?;
        }
        w.flush().map_err(|e| Failure::new(EXIT_IO, e))?;
    }
    emit(
        None,
        &to_json(&OptimizeSummary {
            objective: res.objective,
            evals: res.evals,
            certified_max: res.recertified.certified_max,
            argmax: res.recertified.argmax.clone(),
            scan_max: res.recertified.scan_max.map(|s| s.evac),
            params: res.params,
        }),
    )
}
