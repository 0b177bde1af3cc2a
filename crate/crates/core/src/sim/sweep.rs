use std::io::Write;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{build_env_with, run_episode, EnvLayout, EpisodeConfig, Outcome};
use crate::error::{Error, Result};
use crate::planner::{generate_primitives, CameraModel, LibraryParams};

/// Scale factors swept by default.
pub const DEFAULT_ALPHAS: [f64; 11] = [0.01, 0.03, 0.05, 0.07, 0.10, 0.15, 0.20, 0.25, 0.35, 0.55, 1.00];

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub envs: Vec<u8>,
    pub alphas: Vec<f64>,
    pub trials: usize,
    pub base_seed: u64,
    /// Everything but `alpha` and `seed`, which the sweep fills in.
    pub episode: EpisodeConfig,
    pub camera: CameraModel,
    pub library: LibraryParams,
    pub layout: EnvLayout,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            envs: vec![1, 2, 3],
            alphas: DEFAULT_ALPHAS.to_vec(),
            trials: 10,
            base_seed: 0,
            episode: EpisodeConfig::default(),
            camera: CameraModel::default(),
            library: LibraryParams::default(),
            layout: EnvLayout::default(),
        }
    }
}

/// One row of the sweep table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRecord {
    pub env: u8,
    pub alpha: f64,
    pub trial: usize,
    pub outcome: Outcome,
    pub steps: usize,
    pub seed: u64,
}

/// Map seed of trial `trial` in environment `env`; every alpha of that
/// trial runs on the same map.
pub fn trial_seed(base_seed: u64, env: u8, trial: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(base_seed);
    rng.set_stream(((env as u64) << 32) | trial as u64);
    rng.next_u64()
}

/// Runs every `(env, alpha, trial)` episode. Rows come back ordered by env,
/// then alpha, then trial, whatever the thread schedule.
pub fn sweep_alpha(cfg: &SweepConfig) -> Result<Vec<SweepRecord>> {
    if cfg.envs.is_empty() || cfg.alphas.is_empty() || cfg.trials == 0 {
        return Err(Error::param("sweep needs at least one env, one alpha and one trial"));
    }
    let lib = generate_primitives(&cfg.library)?;
    let jobs: Vec<(u8, f64, usize)> = cfg
        .envs
        .iter()
        .flat_map(|&e| {
            cfg.alphas
                .iter()
                .flat_map(move |&a| (0..cfg.trials).map(move |t| (e, a, t)))
        })
        .collect();
    jobs.par_iter()
        .map(|&(env, alpha, trial)| {
            let seed = trial_seed(cfg.base_seed, env, trial);
            let world = build_env_with(env, &cfg.layout, seed)?;
            let ep = EpisodeConfig { alpha, seed, ..cfg.episode };
            let res = run_episode(&world, &cfg.camera, &lib, &ep)?;
            Ok(SweepRecord {
                env,
                alpha,
                trial,
                outcome: res.outcome,
                steps: res.steps,
                seed,
            })
        })
        .collect()
}

pub const CSV_HEADER: [&str; 6] = ["env", "alpha", "trial", "outcome", "steps", "seed"];

pub fn write_csv<W: Write>(records: &[SweepRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.env.to_string(),
            r.alpha.to_string(),
            r.trial.to_string(),
            r.outcome.to_string(),
            r.steps.to_string(),
            r.seed.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<SweepRecord>> {
    let mut rd = csv::Reader::from_reader(input);
    let mut out = Vec::new();
    for row in rd.records() {
        let row = row?;
        let offset = row.position().map_or(0, |p| p.byte() as usize);
        let field = |i: usize| row.get(i).ok_or_else(|| Error::Parse { offset, msg: format!("missing column {}", CSV_HEADER[i]) });
        let bad = |i: usize| Error::Parse { offset, msg: format!("bad {}", CSV_HEADER[i]) };
        out.push(SweepRecord {
            env: field(0)?.parse().map_err(|_| bad(0))?,
            alpha: field(1)?.parse().map_err(|_| bad(1))?,
            trial: field(2)?.parse().map_err(|_| bad(2))?,
            outcome: field(3)?.parse().map_err(|_| bad(3))?,
            steps: field(4)?.parse().map_err(|_| bad(4))?,
            seed: field(5)?.parse().map_err(|_| bad(5))?,
        });
    }
    Ok(out)
}

/// Per-(env, alpha) aggregate.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSummary {
    pub env: u8,
    pub alpha: f64,
    pub trials: usize,
    pub successes: usize,
    pub success_rate: f64,
    /// Mean and population standard deviation of steps over successes.
    pub mean_steps: Option<f64>,
    pub std_steps: Option<f64>,
}

/// Groups consecutive rows sharing `(env, alpha)`, as produced by
/// [`sweep_alpha`].
pub fn summarize(records: &[SweepRecord]) -> Vec<SweepSummary> {
    let mut out = Vec::new();
    for group in records.chunk_by(|a, b| a.env == b.env && a.alpha == b.alpha) {
        let steps: Vec<f64> = group
            .iter()
            .filter(|r| r.outcome == Outcome::Success)
            .map(|r| r.steps as f64)
            .collect();
        let (mean, std) = if steps.is_empty() {
            (None, None)
        } else {
            let n = steps.len() as f64;
            let m = steps.iter().sum::<f64>() / n;
            let var = steps.iter().map(|s| (s - m) * (s - m)).sum::<f64>() / n;
            (Some(m), Some(var.sqrt()))
        };
        out.push(SweepSummary {
            env: group[0].env,
            alpha: group[0].alpha,
            trials: group.len(),
            successes: steps.len(),
            success_rate: steps.len() as f64 / group.len() as f64,
            mean_steps: mean,
            std_steps: std,
        });
    }
    out
}

fn ranks(xs: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..xs.len()).collect();
    idx.sort_by(|&a, &b| xs[a].total_cmp(&xs[b]));
    let mut r = vec![0.0; xs.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && xs[idx[j + 1]] == xs[idx[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            r[k] = avg;
        }
        i = j + 1;
    }
    r
}

/// Spearman rank correlation with average ranks for ties. `None` when
/// either side is constant or the lengths differ.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Option<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return None;
    }
    let (rx, ry) = (ranks(xs), ranks(ys));
    let n = xs.len() as f64;
    let (mx, my) = (rx.iter().sum::<f64>() / n, ry.iter().sum::<f64>() / n);
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in rx.iter().zip(&ry) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}
