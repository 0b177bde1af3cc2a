use std::fmt::Write as _;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use navspace::field::CollisionMode;
use navspace::geometry::DEFAULT_VERTEX_COUNT;
use navspace::planner::generate_primitives;
use navspace::sim::SweepConfig;

/// Every tunable of the command-line workflows.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub sweep: SweepConfig,
    /// Environment kind used by `episode`.
    pub env: u8,
    /// Trial index used by `episode` to derive its map seed.
    pub trial: usize,
    /// Polyline vertex count used by `geometry`.
    pub k: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            sweep: SweepConfig::default(),
            env: 1,
            trial: 0,
            k: DEFAULT_VERTEX_COUNT,
        }
    }
}

pub const KEYS: &[&str] = &[
    "alpha",
    "alphas",
    "envs",
    "trials",
    "seed",
    "env",
    "trial",
    "k",
    "v_thres",
    "w1",
    "w2",
    "target_a",
    "target_b",
    "collision_mode",
    "max_steps",
    "robot_radius",
    "goal_tolerance",
    "commit",
    "camera_fx",
    "camera_fy",
    "camera_cx",
    "camera_cy",
    "camera_height",
    "camera_pitch_deg",
    "image_width",
    "image_height",
    "n_curvatures",
    "m_poses",
    "arc_length",
    "kappa_max",
    "obstacle_counts",
    "obstacle_half_extent",
    "keep_out",
    "min_gap",
    "max_attempts",
    "max_restarts",
];

fn scalar<T: FromStr>(value: &str) -> Result<T>
where
    T::Err: std::error::Error + Send + Sync + 'static,
{
    Ok(value.parse::<T>()?)
}

fn list<T: FromStr>(value: &str) -> Result<Vec<T>>
where
    T::Err: std::error::Error + Send + Sync + 'static,
{
    value.split(',').map(|s| scalar(s.trim())).collect()
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

impl RunConfig {
    /// Parses `key = value` lines over the defaults. Blank lines and `#`
    /// comments are ignored; unknown or repeated keys are errors.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = RunConfig::default();
        let mut seen = std::collections::BTreeSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("line {}: expected key = value", i + 1))?;
            let (key, value) = (key.trim(), value.trim());
            if !seen.insert(key.to_string()) {
                bail!("line {}: duplicate key {key:?}", i + 1);
            }
            cfg.set(key, value).with_context(|| format!("line {}: {key}", i + 1))?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let s = &mut self.sweep;
        let ep = &mut s.episode;
        match key {
            "alpha" => ep.alpha = scalar(value)?,
            "alphas" => s.alphas = list(value)?,
            "envs" => s.envs = list(value)?,
            "trials" => s.trials = scalar(value)?,
            "seed" => s.base_seed = scalar(value)?,
            "env" => self.env = scalar(value)?,
            "trial" => self.trial = scalar(value)?,
            "k" => self.k = scalar(value)?,
            "v_thres" => ep.v_thres = scalar(value)?,
            "w1" => ep.planner.w1 = scalar(value)?,
            "w2" => ep.planner.w2 = scalar(value)?,
            "target_a" => ep.planner.target.a = scalar(value)?,
            "target_b" => ep.planner.target.b = scalar(value)?,
            "collision_mode" => {
                ep.planner.collision_mode = match value {
                    "inverted" => CollisionMode::Inverted,
                    "literal" => CollisionMode::Literal,
                    _ => bail!("expected inverted or literal, got {value:?}"),
                }
            }
            "max_steps" => {
                ep.max_steps = if value == "auto" { None } else { Some(scalar(value)?) }
            }
            "robot_radius" => ep.robot_radius = scalar(value)?,
            "goal_tolerance" => ep.goal_tolerance = scalar(value)?,
            "commit" => ep.commit = scalar(value)?,
            "camera_fx" => s.camera.fx = scalar(value)?,
            "camera_fy" => s.camera.fy = scalar(value)?,
            "camera_cx" => s.camera.cx = scalar(value)?,
            "camera_cy" => s.camera.cy = scalar(value)?,
            "camera_height" => s.camera.cam_height = scalar(value)?,
            "camera_pitch_deg" => s.camera.pitch = scalar::<f64>(value)?.to_radians(),
            "image_width" => s.camera.width = scalar(value)?,
            "image_height" => s.camera.height = scalar(value)?,
            "n_curvatures" => s.library.n_curvatures = scalar(value)?,
            "m_poses" => s.library.m_poses = scalar(value)?,
            "arc_length" => s.library.arc_length = scalar(value)?,
            "kappa_max" => s.library.kappa_max = scalar(value)?,
            "obstacle_counts" => {
                let counts: Vec<usize> = list(value)?;
                s.layout.obstacle_counts = counts
                    .try_into()
                    .map_err(|_| anyhow!("expected three counts"))?;
            }
            "obstacle_half_extent" => s.layout.half_extent = scalar(value)?,
            "keep_out" => s.layout.keep_out = scalar(value)?,
            "min_gap" => s.layout.min_gap = scalar(value)?,
            "max_attempts" => s.layout.max_attempts = scalar(value)?,
            "max_restarts" => s.layout.max_restarts = scalar(value)?,
            _ => bail!("unknown key"),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        let s = &self.sweep;
        if s.alphas.is_empty() || s.alphas.iter().any(|a| !(0.0..=1.0).contains(a)) {
            bail!("alphas must be a non-empty list of values in [0, 1]");
        }
        if s.envs.is_empty() || s.envs.iter().any(|e| !(1..=3).contains(e)) {
            bail!("envs must be a non-empty list drawn from 1, 2, 3");
        }
        if !(1..=3).contains(&self.env) {
            bail!("env must be 1, 2 or 3");
        }
        if s.trials == 0 {
            bail!("trials must be at least 1");
        }
        if self.k < 2 {
            bail!("k must be at least 2");
        }
        s.episode.validate()?;
        s.camera.validate()?;
        s.layout.validate()?;
        if s.episode.v_thres > s.camera.height {
            bail!("v_thres must not exceed image_height");
        }
        let lib = generate_primitives(&s.library)?;
        if s.episode.commit >= lib.poses_per_primitive() {
            bail!("commit must be below m_poses");
        }
        Ok(())
    }

    /// The configuration as parseable text, one key per line.
    pub fn to_text(&self) -> String {
        let s = &self.sweep;
        let ep = &s.episode;
        let mut out = String::new();
        let mut put = |k: &str, v: String| {
            let _ = writeln!(out, "{k} = {v}");
        };
        put("alpha", ep.alpha.to_string());
        put("alphas", join(&s.alphas));
        put("envs", join(&s.envs));
        put("trials", s.trials.to_string());
        put("seed", s.base_seed.to_string());
        put("env", self.env.to_string());
        put("trial", self.trial.to_string());
        put("k", self.k.to_string());
        put("v_thres", ep.v_thres.to_string());
        put("w1", ep.planner.w1.to_string());
        put("w2", ep.planner.w2.to_string());
        put("target_a", ep.planner.target.a.to_string());
        put("target_b", ep.planner.target.b.to_string());
        put(
            "collision_mode",
            match ep.planner.collision_mode {
                CollisionMode::Inverted => "inverted".into(),
                CollisionMode::Literal => "literal".into(),
            },
        );
        put("max_steps", ep.max_steps.map_or("auto".into(), |m| m.to_string()));
        put("robot_radius", ep.robot_radius.to_string());
        put("goal_tolerance", ep.goal_tolerance.to_string());
        put("commit", ep.commit.to_string());
        put("camera_fx", s.camera.fx.to_string());
        put("camera_fy", s.camera.fy.to_string());
        put("camera_cx", s.camera.cx.to_string());
        put("camera_cy", s.camera.cy.to_string());
        put("camera_height", s.camera.cam_height.to_string());
        put("camera_pitch_deg", ((s.camera.pitch.to_degrees() * 1e9).round() / 1e9).to_string());
        put("image_width", s.camera.width.to_string());
        put("image_height", s.camera.height.to_string());
        put("n_curvatures", s.library.n_curvatures.to_string());
        put("m_poses", s.library.m_poses.to_string());
        put("arc_length", s.library.arc_length.to_string());
        put("kappa_max", s.library.kappa_max.to_string());
        put("obstacle_counts", join(&s.layout.obstacle_counts));
        put("obstacle_half_extent", s.layout.half_extent.to_string());
        put("keep_out", s.layout.keep_out.to_string());
        put("min_gap", s.layout.min_gap.to_string());
        put("max_attempts", s.layout.max_attempts.to_string());
        put("max_restarts", s.layout.max_restarts.to_string());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_text_gives_defaults() {
        assert_eq!(RunConfig::parse("# nothing\n\n").unwrap(), RunConfig::default());
    }

    #[test]
    fn overrides_and_comments() {
        let cfg = RunConfig::parse("alpha = 0.4  # inline\nalphas=0.1, 0.2\nenvs = 3\nmax_steps = 25\n").unwrap();
        assert_eq!(cfg.sweep.episode.alpha, 0.4);
        assert_eq!(cfg.sweep.alphas, vec![0.1, 0.2]);
        assert_eq!(cfg.sweep.envs, vec![3]);
        assert_eq!(cfg.sweep.episode.max_steps, Some(25));
    }

    #[test]
    fn rejects_unknown_duplicate_and_out_of_range() {
        let err = RunConfig::parse("alpha = 0.1\nbogus = 1\n").unwrap_err();
        assert!(format!("{err:#}").contains("line 2"), "{err:#}");
        assert!(RunConfig::parse("alpha = 0.1\nalpha = 0.2\n").is_err());
        assert!(RunConfig::parse("alpha = 1.5\n").is_err());
        assert!(RunConfig::parse("envs = 1,4\n").is_err());
        assert!(RunConfig::parse("w1 = 0\nw2 = 0\n").is_err());
        assert!(RunConfig::parse("camera_pitch_deg = 95\n").is_err());
        assert!(RunConfig::parse("v_thres = 500\n").is_err());
        assert!(RunConfig::parse("commit = 10\n").is_err());
        assert!(RunConfig::parse("trials = -1\n").is_err());
        assert!(RunConfig::parse("obstacle_counts = 1,2\n").is_err());
        assert!(RunConfig::parse("just words\n").is_err());
    }

    #[test]
    fn text_round_trip_covers_every_key() {
        let mut cfg = RunConfig::default();
        cfg.sweep.episode.planner.collision_mode = CollisionMode::Literal;
        cfg.sweep.episode.max_steps = Some(99);
        let text = cfg.to_text();
        for key in KEYS {
            assert!(text.lines().any(|l| l.starts_with(&format!("{key} ="))), "{key}");
        }
        assert_eq!(text.lines().count(), KEYS.len());
        let back = RunConfig::parse(&text).unwrap();
        assert_eq!(back.to_text(), text);
        assert!((back.sweep.camera.pitch - cfg.sweep.camera.pitch).abs() < 1e-15);
    }
}
