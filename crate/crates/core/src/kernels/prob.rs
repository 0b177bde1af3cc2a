use rand::Rng;

use crate::error::{Error, Result};

const SIMPLEX_TOL: f64 = 1e-9;

/// Categorical distribution over `len()` classes.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbVector(Vec<f64>);

impl ProbVector {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::param("probability vector must be non-empty"));
        }
        if probs.iter().any(|&p| !(p >= 0.0) || !p.is_finite()) {
            return Err(Error::param("probabilities must be finite and non-negative"));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > SIMPLEX_TOL {
            return Err(Error::param(format!("probabilities sum to {sum}, expected 1")));
        }
        Ok(ProbVector(probs))
    }

    pub fn uniform(categories: usize) -> Self {
        ProbVector(vec![1.0 / categories as f64; categories])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn argmax(&self) -> usize {
        argmax(&self.0)
    }
}

fn argmax(xs: &[f64]) -> usize {
    let mut best = 0;
    for (i, &x) in xs.iter().enumerate() {
        if x > xs[best] {
            best = i;
        }
    }
    best
}

/// Numerically stable softmax.
pub fn softmax(logits: &[f64]) -> Vec<f64> {
    let max = logits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = logits.iter().map(|&x| (x - max).exp()).collect();
    let sum: f64 = exps.iter().sum();
    exps.into_iter().map(|e| e / sum).collect()
}

/// One Gumbel(0, 1) draw per entry: `-ln(-ln U)`, `U` uniform on (0, 1).
pub fn gumbel_noise<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    (0..n)
        .map(|_| {
            let mut u: f64 = rng.gen();
            while u <= 0.0 {
                u = rng.gen();
            }
            -(-u.ln()).ln()
        })
        .collect()
}

/// `softmax((logits + noise) / tau)` with caller-supplied Gumbel noise.
///
/// Entries are floored at the smallest positive normal so a sample is never
/// exactly one-hot; the floor is far below the simplex tolerance.
pub fn gumbel_softmax_with_noise(logits: &[f64], noise: &[f64], tau: f64) -> Result<ProbVector> {
    if !(tau > 0.0) {
        return Err(Error::param(format!("temperature must be positive, got {tau}")));
    }
    if logits.len() != noise.len() {
        return Err(Error::dims(format!("{} logits vs {} noise values", logits.len(), noise.len())));
    }
    if logits.is_empty() || logits.iter().any(|x| !x.is_finite()) {
        return Err(Error::param("logits must be finite and non-empty"));
    }
    let scaled: Vec<f64> = logits.iter().zip(noise).map(|(l, g)| (l + g) / tau).collect();
    let probs = softmax(&scaled).into_iter().map(|p| p.max(f64::MIN_POSITIVE)).collect();
    Ok(ProbVector(probs))
}

pub fn gumbel_softmax_sample<R: Rng + ?Sized>(logits: &[f64], tau: f64, rng: &mut R) -> Result<ProbVector> {
    let noise = gumbel_noise(rng, logits.len());
    gumbel_softmax_with_noise(logits, &noise, tau)
}

/// `KL(q || p)` in nats with `0 ln 0 = 0`.
pub fn categorical_kl(q: &ProbVector, p: &ProbVector) -> Result<f64> {
    if q.len() != p.len() {
        return Err(Error::dims(format!("KL over {} vs {} categories", q.len(), p.len())));
    }
    let mut kl = 0.0;
    for (c, (&qc, &pc)) in q.as_slice().iter().zip(p.as_slice()).enumerate() {
        if qc == 0.0 {
            continue;
        }
        if pc == 0.0 {
            return Err(Error::OutOfSupport { category: c });
        }
        kl += qc * (qc.ln() - pc.ln());
    }
    // Rounding can leave a tiny negative residue for q ~ p.
    Ok(kl.max(0.0))
}
