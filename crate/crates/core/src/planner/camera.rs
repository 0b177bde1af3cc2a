use crate::error::{Error, Result};

/// Pinhole camera mounted on the robot, looking along body +x and pitched
/// down towards a flat ground plane.
///
/// Image `u` grows to the robot's right and `v` grows downwards; pixel
/// centres sit on integer coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CameraModel {
    pub fx: f64,
    pub fy: f64,
    pub cx: f64,
    pub cy: f64,
    /// Metres above the ground.
    pub cam_height: f64,
    /// Downward tilt in radians.
    pub pitch: f64,
    pub width: usize,
    pub height: usize,
}

impl Default for CameraModel {
    /// 160x120, f = 120 px, mounted 0.5 m up and pitched 15 degrees down.
    fn default() -> Self {
        CameraModel {
            fx: 120.0,
            fy: 120.0,
            cx: 80.0,
            cy: 60.0,
            cam_height: 0.5,
            pitch: 15f64.to_radians(),
            width: 160,
            height: 120,
        }
    }
}

impl CameraModel {
    pub fn validate(&self) -> Result<()> {
        if !(self.fx > 0.0 && self.fy > 0.0) {
            return Err(Error::param("focal lengths must be positive"));
        }
        if !(self.cam_height > 0.0) {
            return Err(Error::param("camera height must be positive"));
        }
        if !(0.0..std::f64::consts::FRAC_PI_2).contains(&self.pitch) {
            return Err(Error::param("pitch must lie in [0, pi/2)"));
        }
        if self.width < 2 || self.height < 2 {
            return Err(Error::param("image must be at least 2x2"));
        }
        Ok(())
    }

    /// Row of the horizon (may lie outside the image).
    pub fn horizon_row(&self) -> f64 {
        self.cy - self.fy * self.pitch.tan()
    }

    /// Projects the body-frame ground point `(x, y, 0)` into the image.
    /// `None` when it is behind the camera or outside the image.
    pub fn project_ground(&self, x: f64, y: f64) -> Option<(f64, f64)> {
        let (s, c) = self.pitch.sin_cos();
        let h = self.cam_height;
        let z_c = x * c + h * s;
        if z_c <= 1e-12 {
            return None;
        }
        let y_c = -x * s + h * c;
        let x_c = -y;
        let u = self.cx + self.fx * x_c / z_c;
        let v = self.cy + self.fy * y_c / z_c;
        let inside = u >= 0.0 && v >= 0.0 && u <= (self.width - 1) as f64 && v <= (self.height - 1) as f64;
        (inside && v > self.horizon_row()).then_some((u, v))
    }

    /// Body-frame ground point seen through image position `(u, v)`, or
    /// `None` at or above the horizon.
    pub fn back_project(&self, u: f64, v: f64) -> Option<(f64, f64)> {
        let (s, c) = self.pitch.sin_cos();
        let a = (u - self.cx) / self.fx;
        let b = (v - self.cy) / self.fy;
        let down = s + b * c;
        if down <= 1e-12 {
            return None;
        }
        let t = self.cam_height / down;
        Some((t * (c - b * s), -t * a))
    }

    /// Ground point where every column's ground line meets: the foot of the
    /// image's downward vanishing direction, `h tan(pitch)` behind the camera.
    pub fn column_origin(&self) -> (f64, f64) {
        (-self.cam_height * self.pitch.tan(), 0.0)
    }

    /// Body-frame bearing, seen from `column_origin`, of the ground line
    /// imaged by column `u`.
    pub fn column_bearing(&self, u: f64) -> f64 {
        let a = (u - self.cx) / self.fx;
        (-a * self.pitch.cos()).atan2(1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::{Matrix3, Vector3};

    #[test]
    fn optical_axis_ground_point_hits_principal_point() {
        let cam = CameraModel::default();
        let x = cam.cam_height / cam.pitch.tan();
        let (u, v) = cam.project_ground(x, 0.0).unwrap();
        assert!((u - cam.cx).abs() < 1e-9 && (v - cam.cy).abs() < 1e-9);
    }

    #[test]
    fn left_of_robot_is_left_in_image() {
        let cam = CameraModel::default();
        let (u, _) = cam.project_ground(2.0, 0.3).unwrap();
        assert!(u < cam.cx);
    }

    #[test]
    fn behind_and_outside_are_out_of_view() {
        let cam = CameraModel::default();
        assert!(cam.project_ground(-1.0, 0.0).is_none());
        assert!(cam.project_ground(0.1, 0.0).is_none()); // below the bottom row
        assert!(cam.project_ground(1.0, 5.0).is_none());
    }

    #[test]
    fn matches_ground_plane_homography() {
        // Independent oracle: H = K [r1 r2 t] for the plane z = 0.
        let cam = CameraModel::default();
        let (s, c) = cam.pitch.sin_cos();
        let k = Matrix3::new(cam.fx, 0.0, cam.cx, 0.0, cam.fy, cam.cy, 0.0, 0.0, 1.0);
        // Rows: camera right, down, forward axes in body coordinates.
        let rot = Matrix3::new(0.0, -1.0, 0.0, -s, 0.0, -c, c, 0.0, -s);
        let cam_pos = Vector3::new(0.0, 0.0, cam.cam_height);
        let t = -(rot * cam_pos);
        let h = k * Matrix3::from_columns(&[rot.column(0).into(), rot.column(1).into(), t]);
        let p = h * Vector3::new(2.0, 0.0, 1.0);
        let (u, v) = cam.project_ground(2.0, 0.0).unwrap();
        assert!((u - p.x / p.z).abs() < 1e-6);
        assert!((v - p.y / p.z).abs() < 1e-6);
        let q = h * Vector3::new(1.3, -0.4, 1.0);
        let (u, v) = cam.project_ground(1.3, -0.4).unwrap();
        assert!((u - q.x / q.z).abs() < 1e-6 && (v - q.y / q.z).abs() < 1e-6);
    }

    #[test]
    fn back_projection_inverts_projection() {
        let cam = CameraModel::default();
        for &(x, y) in &[(0.8, 0.1), (2.5, -0.9), (5.0, 1.2)] {
            let (u, v) = cam.project_ground(x, y).unwrap();
            let (bx, by) = cam.back_project(u, v).unwrap();
            assert!((bx - x).abs() < 1e-9 && (by - y).abs() < 1e-9);
            let (ox, oy) = cam.column_origin();
            assert!((cam.column_bearing(u) - (y - oy).atan2(x - ox)).abs() < 1e-9);
        }
        assert!(cam.back_project(80.0, cam.horizon_row() - 1.0).is_none());
    }
}
