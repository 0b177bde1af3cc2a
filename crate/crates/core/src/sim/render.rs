use super::WorldMap;
use crate::geometry::SegMask;
use crate::planner::{CameraModel, Pose2};

/// Synthetic segmentation seen from `robot`.
///
/// Boxes are taller than the camera, so a ground point is visible exactly
/// when the floor segment from the robot to it misses every box. A pixel
/// is navigable when its ground point is inside the arena and visible;
/// pixels at or above the horizon are not.
pub fn render_mask(world: &WorldMap, robot: &Pose2, cam: &CameraModel) -> SegMask {
    let (s, c) = robot.psi.sin_cos();
    let from = (robot.x, robot.y);
    SegMask::from_fn(cam.width, cam.height, |u, v| {
        let Some((bx, by)) = cam.back_project(u as f64, v as f64) else {
            return false;
        };
        let to = (robot.x + c * bx - s * by, robot.y + s * bx + c * by);
        world.in_bounds(to.0, to.1) && !world.obstacles.iter().any(|b| b.hits_segment(from, to))
    })
    .expect("camera image is at least 2x2")
}
