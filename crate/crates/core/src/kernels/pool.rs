use nalgebra::DVector;

use crate::error::{Error, Result};

/// `width x height` grid of `dim`-vectors, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct FeatureMap {
    width: usize,
    height: usize,
    dim: usize,
    data: Vec<f64>,
}

impl FeatureMap {
    pub fn new(width: usize, height: usize, dim: usize, data: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 || dim == 0 {
            return Err(Error::param("feature map dimensions must be positive"));
        }
        if data.len() != width * height * dim {
            return Err(Error::dims(format!(
                "{width}x{height}x{dim} feature map needs {} values, got {}",
                width * height * dim,
                data.len()
            )));
        }
        Ok(FeatureMap { width, height, dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, u: usize, v: usize) -> &[f64] {
        let start = (v * self.width + u) * self.dim;
        &self.data[start..start + self.dim]
    }
}

/// Bilinear interpolation of the four grid vectors around `(u, v)`.
pub fn bilinear_pool(map: &FeatureMap, u: f64, v: f64) -> Result<DVector<f64>> {
    let (max_u, max_v) = ((map.width - 1) as f64, (map.height - 1) as f64);
    if !(u >= 0.0 && v >= 0.0 && u <= max_u && v <= max_v) {
        return Err(Error::OutOfRange(format!(
            "point ({u}, {v}) outside [0, {max_u}] x [0, {max_v}]"
        )));
    }
    let u0 = (u.floor() as usize).min(map.width - 1);
    let v0 = (v.floor() as usize).min(map.height - 1);
    let u1 = (u0 + 1).min(map.width - 1);
    let v1 = (v0 + 1).min(map.height - 1);
    let (fu, fv) = (u - u0 as f64, v - v0 as f64);
    let taps = [
        (u0, v0, (1.0 - fu) * (1.0 - fv)),
        (u1, v0, fu * (1.0 - fv)),
        (u0, v1, (1.0 - fu) * fv),
        (u1, v1, fu * fv),
    ];
    let mut out = DVector::zeros(map.dim);
    for (uu, vv, wgt) in taps {
        if wgt != 0.0 {
            for (o, x) in out.iter_mut().zip(map.at(uu, vv)) {
                *o += wgt * x;
            }
        }
    }
    Ok(out)
}
