//! Two-robot evacuation from the unit disk with boundary cuts.
//!
//! Both robots start at the center, walk to a common boundary point `I` and
//! search the boundary in opposite directions, interrupting the search with
//! straight detours ("cuts") into the interior. When one robot finds the exit
//! it intercepts the other via the meeting protocol; the engine computes
//! exact evacuation times, enumerates worst-case exit candidates with the
//! angle criterion and searches cut parameters that minimize the worst case.

pub mod analysis;
pub mod geom;
pub mod meeting;
pub mod optimize;
pub mod strategy;
pub mod verify;

pub use analysis::{worst_case, WorstCaseConfig, WorstCaseReport};
pub use geom::{Point, Robot};
pub use meeting::{evac_time, solve_meeting, MeetingResult, Scenario};
pub use strategy::{build_trajectory, find_time, CutSpec, StrategyParams, Trajectory, Variant};
