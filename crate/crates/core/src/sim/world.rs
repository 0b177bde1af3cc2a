use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::planner::Pose2;

/// Axis-aligned box footprint, metres.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Aabb {
    pub cx: f64,
    pub cy: f64,
    pub hx: f64,
    pub hy: f64,
}

impl Aabb {
    pub fn new(cx: f64, cy: f64, hx: f64, hy: f64) -> Self {
        Aabb { cx, cy, hx, hy }
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        (x - self.cx).abs() <= self.hx && (y - self.cy).abs() <= self.hy
    }

    /// Euclidean distance from `(x, y)` to the box; zero inside.
    pub fn distance_to(&self, x: f64, y: f64) -> f64 {
        let dx = ((x - self.cx).abs() - self.hx).max(0.0);
        let dy = ((y - self.cy).abs() - self.hy).max(0.0);
        dx.hypot(dy)
    }

    /// Gap between two boxes along the separating axis (negative when they
    /// overlap).
    pub fn gap(&self, other: &Aabb) -> f64 {
        let gx = (self.cx - other.cx).abs() - self.hx - other.hx;
        let gy = (self.cy - other.cy).abs() - self.hy - other.hy;
        gx.max(gy)
    }

    /// Whether the closed segment from `a` to `b` touches the box.
    pub fn hits_segment(&self, a: (f64, f64), b: (f64, f64)) -> bool {
        let (mut t0, mut t1) = (0.0f64, 1.0f64);
        for (p, d, c, h) in [(a.0, b.0 - a.0, self.cx, self.hx), (a.1, b.1 - a.1, self.cy, self.hy)] {
            let (lo, hi) = (c - h, c + h);
            if d == 0.0 {
                if p < lo || p > hi {
                    return false;
                }
                continue;
            }
            let (mut ta, mut tb) = ((lo - p) / d, (hi - p) / d);
            if ta > tb {
                std::mem::swap(&mut ta, &mut tb);
            }
            t0 = t0.max(ta);
            t1 = t1.min(tb);
            if t0 > t1 {
                return false;
            }
        }
        true
    }
}

/// Square arena `[0, size]^2` with box obstacles.
#[derive(Clone, Debug, PartialEq)]
pub struct WorldMap {
    pub size: f64,
    pub obstacles: Vec<Aabb>,
    pub start: Pose2,
    pub goal: Pose2,
}

impl WorldMap {
    /// Obstacle-free arena with the default start and goal corners.
    pub fn empty(size: f64) -> Self {
        let (start, goal) = corner_poses(size);
        WorldMap {
            size,
            obstacles: Vec::new(),
            start,
            goal,
        }
    }

    pub fn in_bounds(&self, x: f64, y: f64) -> bool {
        (0.0..=self.size).contains(&x) && (0.0..=self.size).contains(&y)
    }
}

/// Distance of the start and goal from their corners along each axis.
pub const CORNER_OFFSET: f64 = 0.5;

fn corner_poses(size: f64) -> (Pose2, Pose2) {
    let heading = std::f64::consts::FRAC_PI_4;
    (
        Pose2::new(CORNER_OFFSET, CORNER_OFFSET, heading),
        Pose2::new(size - CORNER_OFFSET, size - CORNER_OFFSET, heading),
    )
}

/// Arena side of environment `kind` (1, 2 or 3), metres.
pub fn env_size(kind: u8) -> Result<f64> {
    match kind {
        1 => Ok(3.0),
        2 => Ok(5.0),
        3 => Ok(7.0),
        _ => Err(Error::param(format!("environment kind must be 1, 2 or 3, got {kind}"))),
    }
}

/// Obstacle generator settings shared by all environment kinds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnvLayout {
    /// Box counts for kinds 1, 2 and 3.
    pub obstacle_counts: [usize; 3],
    pub half_extent: f64,
    /// Minimum distance from an obstacle to the start and goal positions.
    pub keep_out: f64,
    /// Minimum gap between two obstacles.
    pub min_gap: f64,
    /// Placement attempts per layout try.
    pub max_attempts: usize,
    pub max_restarts: usize,
}

impl Default for EnvLayout {
    fn default() -> Self {
        EnvLayout {
            obstacle_counts: [4, 9, 14],
            half_extent: 0.3,
            keep_out: 1.0,
            min_gap: 0.0,
            max_attempts: 2_000,
            max_restarts: 50,
        }
    }
}

impl EnvLayout {
    pub fn validate(&self) -> Result<()> {
        if !(self.half_extent > 0.0 && self.half_extent < 1.5) {
            return Err(Error::param("obstacle half extent must lie in (0, 1.5)"));
        }
        if !(self.keep_out >= 0.0 && self.min_gap >= 0.0) {
            return Err(Error::param("keep_out and min_gap must be non-negative"));
        }
        if self.max_attempts == 0 || self.max_restarts == 0 {
            return Err(Error::param("max_attempts and max_restarts must be positive"));
        }
        Ok(())
    }
}

pub fn build_env(kind: u8, seed: u64) -> Result<WorldMap> {
    build_env_with(kind, &EnvLayout::default(), seed)
}

/// Seeded rejection sampling of boxes inside the arena, clear of the start
/// and goal and of each other.
pub fn build_env_with(kind: u8, layout: &EnvLayout, seed: u64) -> Result<WorldMap> {
    layout.validate()?;
    let size = env_size(kind)?;
    let wanted = layout.obstacle_counts[kind as usize - 1];
    let h = layout.half_extent;
    let mut world = WorldMap::empty(size);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    // A greedy layout can paint itself into a corner, so start over a few
    // times before giving up.
    for _ in 0..layout.max_restarts {
        world.obstacles.clear();
        for _ in 0..layout.max_attempts {
            if world.obstacles.len() == wanted {
                return Ok(world);
            }
            let b = Aabb::new(rng.gen_range(h..=size - h), rng.gen_range(h..=size - h), h, h);
            let clear_of = |p: &Pose2| b.distance_to(p.x, p.y) >= layout.keep_out;
            if clear_of(&world.start)
                && clear_of(&world.goal)
                && world.obstacles.iter().all(|o| o.gap(&b) >= layout.min_gap)
            {
                world.obstacles.push(b);
            }
        }
        if world.obstacles.len() == wanted {
            return Ok(world);
        }
        best = best.max(world.obstacles.len());
    }
    Err(Error::EnvironmentTooDense { placed: best, wanted })
}

/// True iff the disc touches a box (closed contact) or leaves the arena.
pub fn check_collision(world: &WorldMap, robot: &Pose2, radius: f64) -> bool {
    let (x, y) = (robot.x, robot.y);
    if x - radius < 0.0 || y - radius < 0.0 || x + radius > world.size || y + radius > world.size {
        return true;
    }
    world.obstacles.iter().any(|b| b.distance_to(x, y) <= radius)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn env_sizes_and_counts() {
        for (kind, size, n) in [(1, 3.0, 4), (2, 5.0, 9), (3, 7.0, 14)] {
            let w = build_env(kind, 7).unwrap();
            assert_eq!(w.size, size);
            assert_eq!(w.obstacles.len(), n);
        }
        assert!(build_env(4, 0).is_err());
        assert_eq!(build_env(2, 11).unwrap(), build_env(2, 11).unwrap());
        assert_ne!(build_env(2, 11).unwrap(), build_env(2, 12).unwrap());
    }

    #[test]
    fn too_dense_is_reported() {
        let l = EnvLayout { obstacle_counts: [200, 9, 14], max_attempts: 500, max_restarts: 2, ..Default::default() };
        assert!(matches!(build_env_with(1, &l, 1), Err(Error::EnvironmentTooDense { .. })));
    }

    #[test]
    fn collision_cases() {
        let mut w = WorldMap::empty(3.0);
        w.obstacles.push(Aabb::new(1.5, 1.5, 0.3, 0.3));
        assert!(!check_collision(&w, &Pose2::new(0.5, 0.5, 0.0), 0.15));
        assert!(check_collision(&w, &Pose2::new(1.5, 1.6, 0.0), 0.15));
        // Tangent to the right face: distance exactly the radius.
        assert!(check_collision(&w, &Pose2::new(1.5 + 0.3 + 0.25, 1.5, 0.0), 0.25));
        assert!(!check_collision(&w, &Pose2::new(1.5 + 0.3 + 0.2501, 1.5, 0.0), 0.25));
        assert!(check_collision(&w, &Pose2::new(0.1, 1.0, 0.0), 0.15));
    }

    #[test]
    fn segment_box_intersection() {
        let b = Aabb::new(0.0, 0.0, 1.0, 1.0);
        assert!(b.hits_segment((-2.0, 0.0), (2.0, 0.0)));
        assert!(b.hits_segment((-2.0, 1.0), (2.0, 1.0)));
        assert!(!b.hits_segment((-2.0, 1.01), (2.0, 1.01)));
        assert!(!b.hits_segment((-3.0, 0.0), (-1.5, 0.0)));
        assert!(b.hits_segment((0.5, 0.5), (0.6, 0.6)));
        assert!(b.hits_segment((2.0, -2.0), (-2.0, 2.0)));
        assert!(!b.hits_segment((2.0, 0.5), (0.5, 2.0)));
    }
}
