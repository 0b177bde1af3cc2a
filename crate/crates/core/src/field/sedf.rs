use super::{compute_edge_map, exact_edt, filter_sob, DistanceField};
use crate::error::{Error, Result};
use crate::geometry::SegMask;

/// How a pose's collision cost is read from the scaled field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CollisionMode {
    /// `alpha * d_max - E'`: zero outside the obstacle influence radius and
    /// largest on the boundary itself.
    #[default]
    Inverted,
    /// `E'` as is, which rewards approaching obstacles when minimised.
    Literal,
}

/// Distance field clamped at `clamp = alpha * d_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sedf {
    pub field: DistanceField,
    pub alpha: f64,
    pub clamp: f64,
    /// Smallest value of `field`; zero whenever the boundary set is non-empty.
    pub floor: f64,
}

impl Sedf {
    pub fn width(&self) -> usize {
        self.field.width()
    }

    pub fn height(&self) -> usize {
        self.field.height()
    }

    /// Per-pose cost at pixel `(u, v)`.
    pub fn cost_at(&self, u: usize, v: usize, mode: CollisionMode) -> Result<f64> {
        match mode {
            CollisionMode::Inverted => collision_potential(&self.field, self.clamp, u, v),
            CollisionMode::Literal => {
                check_bounds(&self.field, u, v)?;
                Ok(self.field.at(u, v))
            }
        }
    }

    /// Bilinearly interpolated cost at a continuous image position, `None`
    /// outside the image.
    pub fn sample_cost(&self, u: f64, v: f64, mode: CollisionMode) -> Option<f64> {
        let e = self.field.sample_bilinear(u, v)?;
        Some(match mode {
            CollisionMode::Inverted => (self.clamp - e).max(0.0),
            CollisionMode::Literal => e,
        })
    }

    /// Largest per-pose cost anywhere in the image, charged for poses the
    /// camera cannot see. Zero for the inverted potential of an obstacle-free
    /// field.
    pub fn worst_cost(&self, mode: CollisionMode) -> f64 {
        match mode {
            CollisionMode::Inverted => (self.clamp - self.floor).max(0.0),
            CollisionMode::Literal => self.clamp,
        }
    }
}

/// `E'[p] = min(E[p], alpha * d_max)` with `d_max` the field maximum.
pub fn apply_scale(field: &DistanceField, alpha: f64) -> Result<Sedf> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::param(format!("alpha must lie in [0, 1], got {alpha}")));
    }
    let d_max = field.max_value().max(0.0);
    let clamp = alpha * d_max;
    let field = field.map(|&e| e.min(clamp));
    let floor = field.as_slice().iter().copied().fold(f64::INFINITY, f64::min);
    Ok(Sedf { field, alpha, clamp, floor })
}

fn check_bounds(field: &DistanceField, u: usize, v: usize) -> Result<()> {
    if u >= field.width() || v >= field.height() {
        return Err(Error::OutOfRange(format!(
            "pixel ({u}, {v}) outside {}x{}",
            field.width(),
            field.height()
        )));
    }
    Ok(())
}

/// `clamp - E'[u, v]`: zero where the clamp is active, `clamp` on the
/// boundary set.
pub fn collision_potential(sedf: &DistanceField, clamp: f64, u: usize, v: usize) -> Result<f64> {
    check_bounds(sedf, u, v)?;
    Ok((clamp - sedf.at(u, v)).max(0.0))
}

/// Edge map, strong-boundary filter, exact EDT and scaling in one call.
pub fn sedf_from_mask(mask: &SegMask, alpha: f64, v_thres: usize) -> Result<Sedf> {
    if v_thres > mask.height() {
        return Err(Error::param(format!(
            "v_thres {v_thres} exceeds image height {}",
            mask.height()
        )));
    }
    let omega = filter_sob(&compute_edge_map(mask), v_thres);
    apply_scale(&exact_edt(&omega), alpha)
}
