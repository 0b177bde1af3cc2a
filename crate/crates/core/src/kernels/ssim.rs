use super::Image;
use crate::error::{Error, Result};

/// SSIM window and stabilising constants.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SsimParams {
    pub window: usize,
    pub c1: f64,
    pub c2: f64,
}

impl SsimParams {
    /// Standard constants `(0.01 L)^2` and `(0.03 L)^2` for dynamic range `L`.
    pub fn for_dynamic_range(range: f64) -> Self {
        SsimParams {
            window: 11,
            c1: (0.01 * range).powi(2),
            c2: (0.03 * range).powi(2),
        }
    }
}

impl Default for SsimParams {
    fn default() -> Self {
        Self::for_dynamic_range(1.0)
    }
}

/// Mean SSIM over all `window x window` positions, uniform weights.
pub fn ssim(a: &Image, b: &Image, params: &SsimParams) -> Result<f64> {
    if !a.same_shape(b) {
        return Err(Error::dims(format!(
            "ssim on {}x{} vs {}x{}",
            a.width(),
            a.height(),
            b.width(),
            b.height()
        )));
    }
    let w = params.window;
    if w == 0 || w.is_multiple_of(2) {
        return Err(Error::param(format!("ssim window must be odd, got {w}")));
    }
    if w > a.width().min(a.height()) {
        return Err(Error::param(format!(
            "ssim window {w} exceeds image {}x{}",
            a.width(),
            a.height()
        )));
    }
    let n = (w * w) as f64;
    let mut total = 0.0;
    let mut count = 0usize;
    for v0 in 0..=a.height() - w {
        for u0 in 0..=a.width() - w {
            let (mut sa, mut sb) = (0.0, 0.0);
            for v in v0..v0 + w {
                for u in u0..u0 + w {
                    sa += a.at(u, v);
                    sb += b.at(u, v);
                }
            }
            let (ma, mb) = (sa / n, sb / n);
            let (mut vaa, mut vbb, mut vab) = (0.0, 0.0, 0.0);
            for v in v0..v0 + w {
                for u in u0..u0 + w {
                    let da = a.at(u, v) - ma;
                    let db = b.at(u, v) - mb;
                    vaa += da * da;
                    vbb += db * db;
                    vab += da * db;
                }
            }
            let (vaa, vbb, vab) = (vaa / n, vbb / n, vab / n);
            let num = (2.0 * ma * mb + params.c1) * (2.0 * vab + params.c2);
            let den = (ma * ma + mb * mb + params.c1) * (vaa + vbb + params.c2);
            total += num / den;
            count += 1;
        }
    }
    Ok(total / count as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_similarity_is_one() {
        let img = Image::from_fn(16, 13, |u, v| ((u * 7 + v * 3) % 11) as f64 / 10.0);
        assert!((ssim(&img, &img, &SsimParams::default()).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn constant_images_closed_form() {
        let p = SsimParams::default();
        let a = Image::filled(12, 12, 0.2);
        let b = Image::filled(12, 12, 0.7);
        let expected = (2.0 * 0.2 * 0.7 + p.c1) / (0.2f64 * 0.2 + 0.7 * 0.7 + p.c1);
        assert!((ssim(&a, &b, &p).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_windows_and_shapes() {
        let a = Image::filled(8, 8, 0.0);
        let p = |window| SsimParams { window, ..SsimParams::default() };
        assert!(ssim(&a, &a, &p(4)).is_err());
        assert!(ssim(&a, &a, &p(9)).is_err());
        assert!(ssim(&a, &Image::filled(8, 9, 0.0), &p(3)).is_err());
    }
}
