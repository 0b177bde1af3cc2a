use std::fmt;

use super::{check_collision, render_mask, WorldMap};
use crate::error::{Error, Result};
use crate::field::sedf_from_mask;
use crate::planner::{select_primitive, CameraModel, MotionPrimitive, PlannerConfig, Pose2, PrimitiveLibrary};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EpisodeConfig {
    pub alpha: f64,
    pub v_thres: usize,
    pub planner: PlannerConfig,
    /// `None` allows 60 steps per metre of arena side.
    pub max_steps: Option<usize>,
    pub robot_radius: f64,
    pub goal_tolerance: f64,
    /// Index of the primitive pose executed each cycle.
    pub commit: usize,
    /// Seed of the map the episode runs on.
    pub seed: u64,
}

impl Default for EpisodeConfig {
    fn default() -> Self {
        EpisodeConfig {
            alpha: 0.25,
            v_thres: 60,
            planner: PlannerConfig::default(),
            max_steps: None,
            robot_radius: 0.15,
            goal_tolerance: 0.3,
            commit: 1,
            seed: 0,
        }
    }
}

pub const STEPS_PER_METRE: f64 = 60.0;

impl EpisodeConfig {
    pub fn step_limit(&self, world: &WorldMap) -> usize {
        self.max_steps
            .unwrap_or_else(|| (STEPS_PER_METRE * world.size).round() as usize)
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(Error::param(format!("alpha must lie in [0, 1], got {}", self.alpha)));
        }
        if self.max_steps == Some(0) {
            return Err(Error::param("max_steps must be at least 1"));
        }
        if !(self.robot_radius > 0.0) {
            return Err(Error::param("robot_radius must be positive"));
        }
        if !(self.goal_tolerance > 0.0) {
            return Err(Error::param("goal_tolerance must be positive"));
        }
        if self.commit == 0 {
            return Err(Error::param("commit must be at least 1"));
        }
        self.planner.validate()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Success,
    Collision,
    Timeout,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Success => "success",
            Outcome::Collision => "collision",
            Outcome::Timeout => "timeout",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Outcome {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "success" => Ok(Outcome::Success),
            "collision" => Ok(Outcome::Collision),
            "timeout" => Ok(Outcome::Timeout),
            _ => Err(Error::param(format!("unknown outcome {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EpisodeResult {
    pub outcome: Outcome,
    pub steps: usize,
    /// Start pose followed by every committed pose.
    pub trajectory: Vec<Pose2>,
}

/// Moves the robot to pose `commit` of `prim` (pose 0 is the robot itself).
///
/// # Panics
///
/// If `commit` is not a pose index of `prim`.
pub fn step_dynamics(robot: &Pose2, prim: &MotionPrimitive, commit: usize) -> Pose2 {
    robot.compose(&prim.poses[commit])
}

/// Receding-horizon run from `world.start` to `world.goal`.
pub fn run_episode(
    world: &WorldMap,
    cam: &CameraModel,
    lib: &PrimitiveLibrary,
    cfg: &EpisodeConfig,
) -> Result<EpisodeResult> {
    cfg.validate()?;
    cam.validate()?;
    if cfg.commit >= lib.poses_per_primitive() {
        return Err(Error::param(format!(
            "commit {} exceeds the last pose index {}",
            cfg.commit,
            lib.poses_per_primitive() - 1
        )));
    }
    if cfg.v_thres > cam.height {
        return Err(Error::param(format!("v_thres {} exceeds image height {}", cfg.v_thres, cam.height)));
    }
    let limit = cfg.step_limit(world);
    let mut pose = world.start;
    let mut trajectory = vec![pose];
    let reached = |p: &Pose2| p.distance_to(&world.goal) <= cfg.goal_tolerance;
    if reached(&pose) {
        return Ok(EpisodeResult { outcome: Outcome::Success, steps: 0, trajectory });
    }
    for step in 1..=limit {
        let mask = render_mask(world, &pose, cam);
        let sedf = sedf_from_mask(&mask, cfg.alpha, cfg.v_thres)?;
        let choice = select_primitive(lib, &sedf, cam, &pose, &world.goal, &cfg.planner)?;
        pose = step_dynamics(&pose, lib.get(choice.index), cfg.commit);
        trajectory.push(pose);
        if check_collision(world, &pose, cfg.robot_radius) {
            return Ok(EpisodeResult { outcome: Outcome::Collision, steps: step, trajectory });
        }
        if reached(&pose) {
            return Ok(EpisodeResult { outcome: Outcome::Success, steps: step, trajectory });
        }
    }
    Ok(EpisodeResult { outcome: Outcome::Timeout, steps: limit, trajectory })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planner::{generate_primitives, LibraryParams};
    use crate::sim::Aabb;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn straight_step_advances_along_heading() {
        let prim = MotionPrimitive::arc(0.0, 5, 1.0);
        let p = step_dynamics(&Pose2::new(1.0, 2.0, FRAC_PI_2), &prim, 2);
        assert!((p.x - 1.0).abs() < 1e-12 && (p.y - 2.5).abs() < 1e-12);
        assert_eq!(p.psi, FRAC_PI_2);
    }

    #[test]
    fn quarter_circle_committed_fully() {
        let r = 2.0;
        let prim = MotionPrimitive::arc(1.0 / r, 9, std::f64::consts::PI * r / 2.0);
        let p = step_dynamics(&Pose2::origin(), &prim, 8);
        assert!((p.x - r).abs() < 1e-12 && (p.y - r).abs() < 1e-12);
        assert!((p.psi - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn two_steps_compose() {
        let prim = MotionPrimitive::arc(0.7, 6, 1.0);
        let start = Pose2::new(0.3, -0.2, 1.0);
        let twice = step_dynamics(&step_dynamics(&start, &prim, 1), &prim, 1);
        let once = start.compose(&prim.poses[1].compose(&prim.poses[1]));
        assert!((twice.x - once.x).abs() < 1e-12 && (twice.y - once.y).abs() < 1e-12);
    }

    #[test]
    fn empty_world_reaches_goal_in_expected_steps() {
        let world = WorldMap::empty(3.0);
        let lib = generate_primitives(&LibraryParams::default()).unwrap();
        let cfg = EpisodeConfig::default();
        let res = run_episode(&world, &CameraModel::default(), &lib, &cfg).unwrap();
        assert_eq!(res.outcome, Outcome::Success);
        let step_len = lib.get(lib.straight_index().unwrap()).poses[1].x;
        let d = world.start.distance_to(&world.goal) - cfg.goal_tolerance;
        let expected = (d / step_len).ceil();
        assert!((res.steps as f64 - expected).abs() <= 1.0, "{} vs {expected}", res.steps);
    }

    #[test]
    fn boxed_in_start_never_succeeds() {
        let mut world = WorldMap::empty(5.0);
        let (x, y) = (world.start.x, world.start.y);
        for b in [
            Aabb::new(x, y + 0.6, 0.7, 0.1),
            Aabb::new(x, y - 0.6, 0.7, 0.1),
            Aabb::new(x + 0.6, y, 0.1, 0.7),
            Aabb::new(x - 0.6, y, 0.1, 0.7),
        ] {
            world.obstacles.push(b);
        }
        let lib = generate_primitives(&LibraryParams::default()).unwrap();
        let cfg = EpisodeConfig { max_steps: Some(80), ..Default::default() };
        let res = run_episode(&world, &CameraModel::default(), &lib, &cfg).unwrap();
        assert_ne!(res.outcome, Outcome::Success);
        let again = run_episode(&world, &CameraModel::default(), &lib, &cfg).unwrap();
        assert_eq!(res, again);
    }
}
