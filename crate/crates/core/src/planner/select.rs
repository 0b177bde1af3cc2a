use super::{target_cost, CameraModel, MotionPrimitive, Pose2, PrimitiveLibrary, TargetCostParams};
use crate::error::{Error, Result};
use crate::field::{CollisionMode, Sedf};

/// Weights and options of the per-cycle cost `w1 C_c + w2 C_t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlannerConfig {
    pub w1: f64,
    pub w2: f64,
    pub target: TargetCostParams,
    pub collision_mode: CollisionMode,
}

impl Default for PlannerConfig {
    fn default() -> Self {
        PlannerConfig {
            w1: 0.5,
            w2: 0.5,
            target: TargetCostParams::default(),
            collision_mode: CollisionMode::Inverted,
        }
    }
}

impl PlannerConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.w1 >= 0.0 && self.w2 >= 0.0) || (self.w1 == 0.0 && self.w2 == 0.0) {
            return Err(Error::param(format!(
                "weights must be non-negative and not both zero, got w1 = {}, w2 = {}",
                self.w1, self.w2
            )));
        }
        if !(self.target.a > 0.0 && self.target.b > 0.0) {
            return Err(Error::param("target weights must be positive"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Selection {
    pub index: usize,
    pub cost: f64,
    pub collision_cost: f64,
    pub target_cost: f64,
}

/// Sum of per-pose costs read from the field at each pose's projection.
/// Poses the camera cannot see are charged `sedf.worst_cost(mode)`.
pub fn primitive_collision_cost(
    prim: &MotionPrimitive,
    sedf: &Sedf,
    cam: &CameraModel,
    mode: CollisionMode,
) -> f64 {
    prim.poses
        .iter()
        .map(|p| {
            cam.project_ground(p.x, p.y)
                .and_then(|(u, v)| sedf.sample_cost(u, v, mode))
                .unwrap_or_else(|| sedf.worst_cost(mode))
        })
        .sum()
}

/// Sum over the primitive's poses, placed at `robot`, of the pose distance
/// to `goal`.
pub fn primitive_target_cost(
    prim: &MotionPrimitive,
    robot: &Pose2,
    goal: &Pose2,
    params: &TargetCostParams,
) -> f64 {
    prim.poses
        .iter()
        .map(|p| target_cost(&robot.compose(p), goal, params))
        .sum()
}

/// Argmin of `w1 C_c + w2 C_t` over the library; ties go to the lowest index.
pub fn select_primitive(
    lib: &PrimitiveLibrary,
    sedf: &Sedf,
    cam: &CameraModel,
    robot: &Pose2,
    goal: &Pose2,
    cfg: &PlannerConfig,
) -> Result<Selection> {
    cfg.validate()?;
    if sedf.width() != cam.width || sedf.height() != cam.height {
        return Err(Error::dims(format!(
            "field is {}x{} but camera is {}x{}",
            sedf.width(),
            sedf.height(),
            cam.width,
            cam.height
        )));
    }
    let mut best: Option<Selection> = None;
    for (index, prim) in lib.iter().enumerate() {
        let collision_cost = primitive_collision_cost(prim, sedf, cam, cfg.collision_mode);
        let target_cost = primitive_target_cost(prim, robot, goal, &cfg.target);
        let cost = cfg.w1 * collision_cost + cfg.w2 * target_cost;
        if best.is_none_or(|b| cost < b.cost) {
            best = Some(Selection { index, cost, collision_cost, target_cost });
        }
    }
    Ok(best.expect("library is never empty"))
}
