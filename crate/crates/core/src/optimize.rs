//! Compass (pattern) search over cut parameters, minimizing the certified
//! worst-case evacuation time.
//!
//! The objective is a maximum over finitely many candidate exits, so it is
//! only piecewise smooth. Polling uses function values only: each sweep tries
//! `+step` then `-step` on every coordinate in order and keeps the first
//! improvement per coordinate. A sweep without improvement falls back to
//! seeded random directions on the same mesh, and only then shrinks it. After
//! a success the displacement is repeated (Hooke-Jeeves pattern move). Once
//! the mesh is below `min_step` it can be reset to the initial steps a fixed
//! number of times.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{worst_case, WorstCaseConfig, WorstCaseReport};
use crate::meeting::Scenario;
use crate::strategy::StrategyParams;

#[derive(Debug, Error, PartialEq)]
pub enum SearchConfigError {
    #[error("shrink factor {0} not in (0, 1)")]
    Shrink(f64),
    #[error("min_step {min_step} must be positive and below every initial step")]
    MinStep { min_step: f64 },
    #[error("max_evals must be positive")]
    MaxEvals,
}

/// Initial poll step for each kind of cut coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StepSizes {
    pub p: f64,
    pub alpha: f64,
    pub d: f64,
}

impl Default for StepSizes {
    fn default() -> Self {
        Self {
            p: 0.1,
            alpha: 0.1,
            d: 0.01,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchConfig {
    pub initial_step: StepSizes,
    pub shrink: f64,
    pub min_step: f64,
    pub max_evals: usize,
    /// Criterion samples per smooth piece while polling.
    pub objective_grid: usize,
    /// Dense-scan samples while polling (0 disables).
    pub objective_scan_grid: usize,
    /// Criterion samples per piece for the final re-certification.
    pub final_criterion_grid: usize,
    /// Dense-scan resolution for the final re-certification (0 disables).
    pub final_scan_grid: usize,
    /// Extra random directions polled after a failed coordinate sweep.
    pub random_directions: usize,
    pub rng_seed: u64,
    /// Times the mesh is reset to the initial steps after converging. Each
    /// pass draws fresh random directions.
    pub restarts: usize,
    /// After an improving poll, retry the same displacement (Hooke-Jeeves).
    pub pattern_moves: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            initial_step: StepSizes::default(),
            shrink: 0.5,
            min_step: 1e-7,
            max_evals: 50_000,
            objective_grid: 50,
            objective_scan_grid: 500,
            final_criterion_grid: 10_000,
            final_scan_grid: 1_000_000,
            random_directions: 24,
            rng_seed: 0x5eed,
            restarts: 100,
            pattern_moves: true,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), SearchConfigError> {
        if !(self.shrink > 0.0 && self.shrink < 1.0) {
            return Err(SearchConfigError::Shrink(self.shrink));
        }
        let s = self.initial_step;
        if !(self.min_step > 0.0
            && self.min_step < s.p
            && self.min_step < s.alpha
            && self.min_step < s.d)
        {
            return Err(SearchConfigError::MinStep {
                min_step: self.min_step,
            });
        }
        if self.max_evals == 0 {
            return Err(SearchConfigError::MaxEvals);
        }
        Ok(())
    }
}

/// Worst case of `params`: the candidate maximum with `criterion_grid`
/// samples per piece, raised to the dense-scan maximum when a scan of
/// `scan_grid` points finds more. `+∞` for invalid parameters.
pub fn objective(params: &StrategyParams, criterion_grid: usize, scan_grid: usize) -> f64 {
    let Ok(sc) = Scenario::new(params.clone()) else {
        return f64::INFINITY;
    };
    let cfg = WorstCaseConfig {
        scan_grid,
        criterion_grid,
        refine_tol: f64::INFINITY,
    };
    match worst_case(&sc, &cfg) {
        Ok(r) => r
            .scan_max
            .map_or(r.certified_max, |s| s.evac.max(r.certified_max)),
        Err(_) => f64::INFINITY,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogEntry {
    pub eval: usize,
    pub params: Vec<f64>,
    pub objective: f64,
    pub accepted: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub params: StrategyParams,
    /// Objective of the incumbent at the polling resolution.
    pub objective: f64,
    pub evals: usize,
    pub final_steps: Vec<f64>,
    pub log: Vec<LogEntry>,
    /// High-resolution analysis of the incumbent.
    pub recertified: WorstCaseReport,
}

/// Incumbent bookkeeping shared by all poll kinds.
struct Poll<'a> {
    config: &'a SearchConfig,
    x: Vec<f64>,
    best: f64,
    evals: usize,
    log: Vec<LogEntry>,
}

impl Poll<'_> {
    fn exhausted(&self) -> bool {
        self.evals >= self.config.max_evals
    }

    /// Evaluates `y` and moves there if it strictly improves the incumbent.
    fn try_point(&mut self, y: Vec<f64>) -> bool {
        let fy = objective(
            &StrategyParams::from_slice(&y),
            self.config.objective_grid,
            self.config.objective_scan_grid,
        );
        let accepted = fy < self.best;
        self.log.push(LogEntry {
            eval: self.evals,
            params: y.clone(),
            objective: fy,
            accepted,
        });
        self.evals += 1;
        if accepted {
            self.x = y;
            self.best = fy;
        }
        accepted
    }
}

pub fn pattern_search(
    seed: &StrategyParams,
    config: &SearchConfig,
) -> Result<SearchResult, SearchConfigError> {
    config.validate()?;
    let n = seed.to_vec().len();
    let initial_steps: Vec<f64> = (0..n)
        .map(|i| match i % 3 {
            0 => config.initial_step.p,
            1 => config.initial_step.alpha,
            _ => config.initial_step.d,
        })
        .collect();
    let mut steps = initial_steps.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(config.rng_seed);
    let x0 = seed.to_vec();
    let f0 = objective(seed, config.objective_grid, config.objective_scan_grid);
    let mut poll = Poll {
        config,
        x: x0.clone(),
        best: f0,
        evals: 1,
        log: vec![LogEntry {
            eval: 0,
            params: x0,
            objective: f0,
            accepted: true,
        }],
    };

    let mut restarts_left = config.restarts;
    'outer: loop {
        if n == 0 {
            break;
        }
        if steps.iter().all(|&s| s < config.min_step) {
            if restarts_left == 0 {
                break;
            }
            restarts_left -= 1;
            steps.clone_from(&initial_steps);
        }
        let base = poll.x.clone();
        let mut improved = false;
        for i in 0..n {
            for sign in [1.0, -1.0] {
                if poll.exhausted() {
                    break 'outer;
                }
                let mut y = poll.x.clone();
                y[i] += sign * steps[i];
                if poll.try_point(y) {
                    improved = true;
                    break;
                }
            }
        }
        if !improved {
            // coordinate polls cannot follow ridges of the max; try random
            // directions on the same mesh before refining it
            'dirs: for _ in 0..config.random_directions {
                let dir = random_unit(&mut rng, n);
                for sign in [1.0, -1.0] {
                    if poll.exhausted() {
                        break 'outer;
                    }
                    let y = (0..n)
                        .map(|i| poll.x[i] + sign * dir[i] * steps[i])
                        .collect();
                    if poll.try_point(y) {
                        improved = true;
                        break 'dirs;
                    }
                }
            }
        }
        if !improved {
            for s in &mut steps {
                *s *= config.shrink;
            }
            continue;
        }
        if config.pattern_moves {
            // repeat the successful displacement, doubling it while it pays off
            let mut d: Vec<f64> = (0..n).map(|i| poll.x[i] - base[i]).collect();
            loop {
                if poll.exhausted() {
                    break 'outer;
                }
                let y = (0..n).map(|i| poll.x[i] + d[i]).collect();
                if !poll.try_point(y) {
                    break;
                }
                d.iter_mut().for_each(|v| *v *= 2.0);
            }
        }
    }

    let Poll {
        x,
        best,
        evals,
        log,
        ..
    } = poll;
    let params = StrategyParams::from_slice(&x);
    let sc = Scenario::new(params.clone()).expect("incumbent is always feasible");
    let recertified = worst_case(
        &sc,
        &WorstCaseConfig {
            scan_grid: config.final_scan_grid,
            criterion_grid: config.final_criterion_grid,
            refine_tol: 1e-6,
        },
    )
    .expect("incumbent analysis succeeded while polling");
    Ok(SearchResult {
        params,
        objective: best,
        evals,
        final_steps: steps,
        log,
        recertified,
    })
}

/// Uniform direction on the unit sphere.
fn random_unit(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm > 1e-3 && norm <= 1.0 {
            return v.into_iter().map(|a| a / norm).collect();
        }
    }
}
