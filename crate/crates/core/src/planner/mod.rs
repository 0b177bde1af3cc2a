//! Receding-horizon primitive selection in image space.

mod camera;
mod primitives;
mod rotation;
mod select;

pub use camera::CameraModel;
pub use primitives::{generate_primitives, LibraryParams, MotionPrimitive, PrimitiveLibrary};
pub use rotation::{rotation_geodesic, target_cost, yaw_rotation, TargetCostParams};
pub use select::{
    primitive_collision_cost, primitive_target_cost, select_primitive, PlannerConfig, Selection,
};

use std::f64::consts::{PI, TAU};

/// Wraps an angle into `(-pi, pi]`.
pub fn wrap_angle(a: f64) -> f64 {
    if a > -PI && a <= PI {
        return a;
    }
    let r = a.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Planar pose; `psi` is kept in `(-pi, pi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Pose2 {
    pub x: f64,
    pub y: f64,
    pub psi: f64,
}

impl Pose2 {
    pub fn new(x: f64, y: f64, psi: f64) -> Self {
        Pose2 { x, y, psi: wrap_angle(psi) }
    }

    pub const fn origin() -> Self {
        Pose2 { x: 0.0, y: 0.0, psi: 0.0 }
    }

    /// `self * local`: expresses a pose given in this pose's frame in the
    /// parent frame.
    pub fn compose(&self, local: &Pose2) -> Pose2 {
        let (s, c) = self.psi.sin_cos();
        Pose2::new(
            self.x + c * local.x - s * local.y,
            self.y + s * local.x + c * local.y,
            self.psi + local.psi,
        )
    }

    pub fn inverse(&self) -> Pose2 {
        let (s, c) = self.psi.sin_cos();
        Pose2::new(-(c * self.x + s * self.y), s * self.x - c * self.y, -self.psi)
    }

    pub fn distance_to(&self, other: &Pose2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}
