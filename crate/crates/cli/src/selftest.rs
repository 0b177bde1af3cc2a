use nalgebra::{DMatrix, DVector};
use navspace::kernels::{
    categorical_kl, gcn_layer_forward, gumbel_noise, gumbel_softmax_with_noise, net1_loss, net2_loss, softmax, ssim,
    Activation, GcnLayerParams, GraphSpec, Image, Net1LossConfig, Net2LossConfig, ProbVector, SsimParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn random_probs(rng: &mut ChaCha8Rng, n: usize) -> ProbVector {
    let logits: Vec<f64> = (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect();
    ProbVector::new(softmax(&logits)).expect("softmax is a distribution")
}

fn random_image(rng: &mut ChaCha8Rng, w: usize, h: usize) -> Image {
    Image::from_fn(w, h, |_, _| rng.gen_range(0.0..1.0))
}

fn kl_check(rng: &mut ChaCha8Rng) -> Check {
    let mut worst_self = 0.0f64;
    let mut min_kl = f64::INFINITY;
    for _ in 0..500 {
        let n = rng.gen_range(2..8);
        let (q, p) = (random_probs(rng, n), random_probs(rng, n));
        min_kl = min_kl.min(categorical_kl(&q, &p).unwrap_or(f64::NAN));
        worst_self = worst_self.max(categorical_kl(&q, &q).unwrap_or(f64::NAN).abs());
    }
    Check {
        name: "kl divergence is non-negative and zero on equal inputs",
        passed: min_kl >= 0.0 && worst_self <= 1e-12,
        detail: format!("min {min_kl:.3e}, max self {worst_self:.3e}"),
    }
}

fn gumbel_check(rng: &mut ChaCha8Rng) -> Check {
    let logits = [0.5, -1.0, 1.5, 0.0];
    let target = softmax(&logits);
    let draws = 100_000;
    let mut counts = [0usize; 4];
    let mut simplex_err = 0.0f64;
    for _ in 0..draws {
        let g = gumbel_noise(rng, logits.len());
        let y = gumbel_softmax_with_noise(&logits, &g, 0.5).expect("valid logits");
        let sum: f64 = y.as_slice().iter().sum();
        simplex_err = simplex_err.max((sum - 1.0).abs());
        if y.as_slice().iter().any(|&v| v < 0.0) {
            simplex_err = f64::INFINITY;
        }
        counts[y.argmax()] += 1;
    }
    let freq_err = counts
        .iter()
        .zip(&target)
        .map(|(&c, &t)| (c as f64 / draws as f64 - t).abs())
        .fold(0.0, f64::max);
    Check {
        name: "gumbel-softmax stays on the simplex with softmax argmax frequencies",
        passed: simplex_err <= 1e-12 && freq_err <= 0.02,
        detail: format!("simplex error {simplex_err:.1e}, frequency error {freq_err:.4}"),
    }
}

fn ssim_check(rng: &mut ChaCha8Rng) -> Check {
    let params = SsimParams {
        window: 5,
        ..Default::default()
    };
    let mut err = 0.0f64;
    for _ in 0..20 {
        let (a, b) = (random_image(rng, 16, 12), random_image(rng, 16, 12));
        let same = ssim(&a, &a, &params).unwrap_or(f64::NAN);
        let ab = ssim(&a, &b, &params).unwrap_or(f64::NAN);
        let ba = ssim(&b, &a, &params).unwrap_or(f64::NAN);
        err = err.max((same - 1.0).abs()).max((ab - ba).abs());
    }
    Check {
        name: "ssim is one on identical images and symmetric",
        passed: err <= 1e-12,
        detail: format!("max error {err:.1e}"),
    }
}

fn loss_fixture_check() -> Check {
    // Two pixels, one reconstruction, uniform posteriors equal to the prior:
    // KL vanishes and the loss is ||x - x_hat||^2 / (2 sigma^2) + ln(sigma^2).
    let x = Image::from_vec(2, 1, vec![1.0, 0.0]).expect("2 pixels");
    let x_hat = Image::from_vec(2, 1, vec![0.5, 0.5]).expect("2 pixels");
    let prior = ProbVector::uniform(3);
    let cfg = Net1LossConfig::new(2.0, 1, 2).expect("valid config");
    let got = net1_loss(&x, &[x_hat], &[prior.clone(), prior.clone()], &prior, &cfg).unwrap_or(f64::NAN);
    let want = 0.5 / 4.0 + 2f64.ln();
    let n1 = (got - want).abs();

    let t = Image::from_fn(4, 4, |u, v| ((u + v) % 2) as f64);
    let r = t.map(|&p| p * 0.5);
    let n2 = net2_loss(&t, &t, &Net2LossConfig::default()).unwrap_or(f64::NAN).abs();
    let mse_only = Net2LossConfig {
        lambda1: 0.0,
        lambda2: 1.0,
        ..Default::default()
    };
    // Half the pixels are 1 and become 0.5: mean squared error 0.125.
    let n3 = (net2_loss(&t, &r, &mse_only).unwrap_or(f64::NAN) - 0.125).abs();
    let err = n1.max(n2).max(n3);
    Check {
        name: "reconstruction losses match hand-computed values",
        passed: err <= 1e-10,
        detail: format!("max error {err:.1e}"),
    }
}

fn gcn_check() -> Check {
    let graph = GraphSpec::chain([1.0, 2.0, 3.0].iter().map(|&x| DVector::from_element(1, x)).collect());
    let layer = GcnLayerParams::new(
        DMatrix::from_element(1, 1, 2.0),
        DMatrix::from_element(1, 1, 1.0),
        Activation::Identity,
    )
    .expect("matching shapes");
    let out: Vec<f64> = gcn_layer_forward(&graph, &layer)
        .map(|v| v.iter().map(|x| x[0]).collect())
        .unwrap_or_default();
    Check {
        name: "graph convolution on a three-node chain",
        passed: out == [4.0, 8.0, 8.0],
        detail: format!("{out:?}"),
    }
}

/// Property checks of the loss kernels, reproducible from `seed`.
pub fn run(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    vec![
        kl_check(&mut rng),
        gumbel_check(&mut rng),
        ssim_check(&mut rng),
        loss_fixture_check(),
        gcn_check(),
    ]
}
