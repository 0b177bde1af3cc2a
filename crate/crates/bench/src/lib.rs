//! Shared fixtures for the benchmarks.

use navspace::field::ObstacleBoundarySet;
use navspace::geometry::{ImagePoint, SegMask};
use navspace::kernels::Image;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` random boundary pixels in a `w x h` image.
pub fn scattered_omega(w: usize, h: usize, n: usize, seed: u64) -> ObstacleBoundarySet {
    let mut r = rng(seed);
    ObstacleBoundarySet::from_points(w, h, (0..n).map(|_| (r.gen_range(0..w), r.gen_range(0..h))))
        .expect("points inside the image")
}

pub fn random_points(n: usize, seed: u64) -> Vec<ImagePoint> {
    let mut r = rng(seed);
    (0..n)
        .map(|_| ImagePoint::new(r.gen_range(0.0..127.0), r.gen_range(0.0..127.0)))
        .collect()
}

/// Navigable below a wavy horizon with a rectangular obstacle.
pub fn road_mask(w: usize, h: usize) -> SegMask {
    SegMask::from_fn(w, h, |u, v| {
        let horizon = h as f64 * (0.45 + 0.1 * (u as f64 / w as f64 * 6.0).sin());
        let blocked = (w / 3..w / 2).contains(&u) && (h * 2 / 3..h * 5 / 6).contains(&v);
        v as f64 >= horizon && !blocked
    })
    .expect("non-empty mask")
}

pub fn noise_image(w: usize, h: usize, seed: u64) -> Image {
    let mut r = rng(seed);
    Image::from_fn(w, h, |_, _| r.gen_range(0.0..1.0))
}
