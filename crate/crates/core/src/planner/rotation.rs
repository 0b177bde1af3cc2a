use nalgebra::{Matrix3, Rotation3, Vector3};

use super::Pose2;
use crate::error::{Error, Result};

const ORTHONORMAL_TOL: f64 = 1e-9;

fn check_rotation(r: &Matrix3<f64>, name: &str) -> Result<()> {
    let err = (r.transpose() * r - Matrix3::identity()).abs().max();
    if err > ORTHONORMAL_TOL || r.determinant() <= 0.0 {
        return Err(Error::param(format!("{name} is not a rotation (orthonormality error {err:e})")));
    }
    Ok(())
}

/// Angle of `R1^T R2` in `[0, pi]`: the norm of its rotation vector.
pub fn rotation_geodesic(r1: &Matrix3<f64>, r2: &Matrix3<f64>) -> Result<f64> {
    check_rotation(r1, "R1")?;
    check_rotation(r2, "R2")?;
    Ok(relative_angle(r1, r2))
}

fn relative_angle(r1: &Matrix3<f64>, r2: &Matrix3<f64>) -> f64 {
    let m = r1.transpose() * r2;
    let cos = ((m.trace() - 1.0) / 2.0).clamp(-1.0, 1.0);
    // The skew part carries sin(theta) times the unit axis; atan2 keeps full
    // precision near 0 and pi where arccos alone does not.
    let sin = 0.5
        * Vector3::new(m[(2, 1)] - m[(1, 2)], m[(0, 2)] - m[(2, 0)], m[(1, 0)] - m[(0, 1)]).norm();
    sin.atan2(cos)
}

pub fn yaw_rotation(psi: f64) -> Matrix3<f64> {
    Rotation3::from_axis_angle(&Vector3::z_axis(), psi).into_inner()
}

/// Weights of the rotation and translation terms of the pose distance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TargetCostParams {
    pub a: f64,
    pub b: f64,
}

impl Default for TargetCostParams {
    fn default() -> Self {
        TargetCostParams { a: 1.0, b: 1.0 }
    }
}

impl TargetCostParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0) {
            return Err(Error::param(format!("target weights must be positive, got a = {a}, b = {b}")));
        }
        Ok(TargetCostParams { a, b })
    }
}

/// `sqrt(a d_rot^2 + b d_trans^2)` between two planar poses lifted to SE(3).
pub fn target_cost(pose: &Pose2, goal: &Pose2, params: &TargetCostParams) -> f64 {
    let d_rot = relative_angle(&yaw_rotation(pose.psi), &yaw_rotation(goal.psi));
    let d_trans = pose.distance_to(goal);
    (params.a * d_rot * d_rot + params.b * d_trans * d_trans).sqrt()
}
