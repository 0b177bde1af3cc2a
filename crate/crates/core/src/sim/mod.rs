//! Desk-scale arenas, synthetic segmentation and the alpha sweep.

mod episode;
mod render;
mod sweep;
mod world;

pub use episode::{run_episode, step_dynamics, EpisodeConfig, EpisodeResult, Outcome, STEPS_PER_METRE};
pub use render::render_mask;
pub use sweep::{
    read_csv, spearman, summarize, sweep_alpha, trial_seed, write_csv, SweepConfig, SweepRecord,
    SweepSummary, CSV_HEADER, DEFAULT_ALPHAS,
};
pub use world::{build_env, build_env_with, check_collision, env_size, Aabb, EnvLayout, WorldMap, CORNER_OFFSET};
