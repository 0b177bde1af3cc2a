use super::{categorical_kl, ssim, Image, ProbVector, SsimParams};
use crate::error::{Error, Result};

/// Operating point of the appearance loss weights.
pub const DEFAULT_LAMBDA1: f64 = 0.8;
pub const DEFAULT_LAMBDA2: f64 = 0.2;

/// Constants of the categorical-VAE loss: Gaussian variance, Monte Carlo
/// sample count and pixel count.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Net1LossConfig {
    pub sigma_sq: f64,
    pub k_samples: usize,
    pub j_pixels: usize,
}

impl Net1LossConfig {
    pub fn new(sigma_sq: f64, k_samples: usize, j_pixels: usize) -> Result<Self> {
        if !(sigma_sq > 0.0) {
            return Err(Error::param(format!("sigma^2 must be positive, got {sigma_sq}")));
        }
        if k_samples == 0 || j_pixels == 0 {
            return Err(Error::param("sample and pixel counts must be at least 1"));
        }
        Ok(Net1LossConfig {
            sigma_sq,
            k_samples,
            j_pixels,
        })
    }

    /// sigma^2 = 1 and a single Monte Carlo sample.
    pub fn for_pixels(j_pixels: usize) -> Result<Self> {
        Self::new(1.0, 1, j_pixels)
    }
}

/// Per-image VAE loss:
/// `sum_j KL(q_j || prior) + 1/(2 K sigma^2) sum_k ||x - x_hat_k||^2 + J/2 ln sigma^2`.
pub fn net1_loss(
    x: &Image,
    x_hat_samples: &[Image],
    q_field: &[ProbVector],
    prior: &ProbVector,
    cfg: &Net1LossConfig,
) -> Result<f64> {
    let j = x.len();
    if cfg.j_pixels != j {
        return Err(Error::dims(format!("config has J = {}, image has {j} pixels", cfg.j_pixels)));
    }
    if x_hat_samples.len() != cfg.k_samples {
        return Err(Error::dims(format!(
            "config has K = {}, got {} reconstructions",
            cfg.k_samples,
            x_hat_samples.len()
        )));
    }
    if let Some(bad) = x_hat_samples.iter().position(|r| !r.same_shape(x)) {
        return Err(Error::dims(format!("reconstruction {bad} differs in shape from the input")));
    }
    if q_field.len() != j {
        return Err(Error::dims(format!("{} posteriors for {j} pixels", q_field.len())));
    }

    let mut kl = 0.0;
    for q in q_field {
        kl += categorical_kl(q, prior)?;
    }
    let sq_err: f64 = x_hat_samples
        .iter()
        .map(|r| {
            x.as_slice()
                .iter()
                .zip(r.as_slice())
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
        })
        .sum();
    let k = cfg.k_samples as f64;
    Ok(kl + sq_err / (2.0 * k * cfg.sigma_sq) + j as f64 / 2.0 * cfg.sigma_sq.ln())
}

/// Weights of the appearance loss; `lambda1 + lambda2` must be 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Net2LossConfig {
    pub lambda1: f64,
    pub lambda2: f64,
    pub ssim: SsimParams,
}

impl Default for Net2LossConfig {
    fn default() -> Self {
        Net2LossConfig {
            lambda1: DEFAULT_LAMBDA1,
            lambda2: DEFAULT_LAMBDA2,
            ssim: SsimParams::default(),
        }
    }
}

/// `lambda1 (1 - SSIM)/2 + lambda2 ||target - recon||^2 / J`.
///
/// The SSIM window shrinks to the largest odd size that fits the image.
pub fn net2_loss(target: &Image, recon: &Image, cfg: &Net2LossConfig) -> Result<f64> {
    if (cfg.lambda1 + cfg.lambda2 - 1.0).abs() > 1e-9 {
        return Err(Error::param(format!(
            "loss weights must sum to 1, got {} + {}",
            cfg.lambda1, cfg.lambda2
        )));
    }
    if !target.same_shape(recon) {
        return Err(Error::dims("target and reconstruction differ in shape"));
    }
    let fit = target.width().min(target.height());
    let window = cfg.ssim.window.min(if fit.is_multiple_of(2) { fit - 1 } else { fit });
    let s = ssim(target, recon, &SsimParams { window, ..cfg.ssim })?;
    let mse = target
        .as_slice()
        .iter()
        .zip(recon.as_slice())
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        / target.len() as f64;
    Ok(cfg.lambda1 * (1.0 - s) / 2.0 + cfg.lambda2 * mse)
}
