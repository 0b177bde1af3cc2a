use std::fmt::Write as _;

use anyhow::{Context, Result};
use navspace::field::sedf_from_mask;
use navspace::geometry::{reconstruct_mask, segmentation_metrics, Polyline, TriangleSet};
use navspace::planner::generate_primitives;
use navspace::pnm::{heatmap, mask_from_pgm, mask_to_pgm, write_matrix, write_ppm};
use navspace::sim::{
    build_env_with, run_episode, summarize, sweep_alpha, trial_seed, EpisodeConfig, EpisodeResult,
    SweepRecord, WorldMap,
};

use crate::RunConfig;

pub struct GeometryOutput {
    pub polyline: String,
    pub triangles: String,
    pub reconstruction: Vec<u8>,
    pub iou: Option<f64>,
}

pub fn polyline_text(p: &Polyline) -> String {
    let mut out = String::new();
    for v in p.vertices() {
        let _ = writeln!(out, "{} {}", v.u, v.v);
    }
    out
}

/// `points n`, `u v` lines, then `triangles m` and `i j k` lines.
pub fn triangles_text(t: &TriangleSet) -> String {
    let mut out = format!("points {}\n", t.points.len());
    for p in &t.points {
        let _ = writeln!(out, "{} {}", p.u, p.v);
    }
    let _ = writeln!(out, "triangles {}", t.triangles.len());
    for [a, b, c] in &t.triangles {
        let _ = writeln!(out, "{a} {b} {c}");
    }
    out
}

pub fn geometry(pgm: &[u8], k: usize) -> Result<GeometryOutput> {
    let mask = mask_from_pgm(pgm).context("reading mask")?;
    let (polyline, tris, rebuilt) = reconstruct_mask(&mask, k)?;
    let iou = segmentation_metrics(&rebuilt, &mask)?.iou;
    Ok(GeometryOutput {
        polyline: polyline_text(&polyline),
        triangles: triangles_text(&tris),
        reconstruction: mask_to_pgm(&rebuilt),
        iou,
    })
}

pub struct SedfOutput {
    pub heatmap: Vec<u8>,
    pub field: String,
    pub clamp: f64,
}

/// Heatmap of `E'` normalised by the clamp, and `E'` itself as text.
pub fn sedf(pgm: &[u8], alpha: f64, v_thres: usize) -> Result<SedfOutput> {
    let mask = mask_from_pgm(pgm).context("reading mask")?;
    let s = sedf_from_mask(&mask, alpha, v_thres)?;
    Ok(SedfOutput {
        heatmap: write_ppm(&heatmap(&s.field, s.clamp)),
        field: write_matrix(&s.field),
        clamp: s.clamp,
    })
}

pub fn episode_world(cfg: &RunConfig) -> Result<(WorldMap, EpisodeConfig)> {
    let seed = trial_seed(cfg.sweep.base_seed, cfg.env, cfg.trial);
    let world = build_env_with(cfg.env, &cfg.sweep.layout, seed)?;
    Ok((world, EpisodeConfig { seed, ..cfg.sweep.episode }))
}

pub fn episode(cfg: &RunConfig) -> Result<EpisodeResult> {
    let (world, ep) = episode_world(cfg)?;
    let lib = generate_primitives(&cfg.sweep.library)?;
    Ok(run_episode(&world, &cfg.sweep.camera, &lib, &ep)?)
}

pub fn trajectory_text(res: &EpisodeResult) -> String {
    let mut out = String::new();
    for p in &res.trajectory {
        let _ = writeln!(out, "{} {} {}", p.x, p.y, p.psi);
    }
    out
}

pub fn sweep(cfg: &RunConfig) -> Result<Vec<SweepRecord>> {
    Ok(sweep_alpha(&cfg.sweep)?)
}

/// One line per (env, alpha): success rate and step statistics.
pub fn summary_text(records: &[SweepRecord]) -> String {
    let mut out = String::from("env  alpha  success  mean_steps  std_steps\n");
    for s in summarize(records) {
        let fmt = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.1}"));
        let _ = writeln!(
            out,
            "{:<4} {:<6} {:<8.2} {:<11} {}",
            s.env,
            s.alpha,
            s.success_rate,
            fmt(s.mean_steps),
            fmt(s.std_steps)
        );
    }
    out
}
