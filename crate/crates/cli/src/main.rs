use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use navspace::sim::write_csv;
use navspace_cli::{commands, selftest, RunConfig};

#[derive(Parser)]
#[command(name = "navspace", version, about = "Image-space navigation toolkit")]
struct Cli {
    /// key = value configuration file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Base seed (overrides the config)
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output file or prefix
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mask -> polyline -> triangles -> mask round trip
    Geometry {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Scaled distance field of a mask as a heatmap and a text matrix
    Sedf {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        v_thres: Option<usize>,
    },
    /// One navigation episode
    Episode {
        #[arg(long)]
        env: Option<u8>,
        #[arg(long)]
        trial: Option<usize>,
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Every (env, alpha, trial) episode, written as CSV
    Sweep,
    /// Property checks of the loss kernels
    Selftest,
    /// Print the effective configuration
    Config,
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn write(path: &Path, bytes: impl AsRef<[u8]>) -> Result<()> {
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

fn require_out(out: &Option<PathBuf>) -> Result<&Path> {
    match out {
        Some(p) => Ok(p),
        None => bail!("--out is required for this command"),
    }
}

fn run(cli: Cli) -> Result<bool> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            RunConfig::parse(&text).with_context(|| format!("in {}", path.display()))?
        }
        None => RunConfig::default(),
    };
    if let Some(seed) = cli.seed {
        cfg.sweep.base_seed = seed;
    }
    match cli.command {
        Command::Geometry { input, k } => {
            let out = require_out(&cli.out)?;
            let bytes = fs::read(&input).with_context(|| format!("reading {}", input.display()))?;
            let g = commands::geometry(&bytes, k.unwrap_or(cfg.k)).with_context(|| format!("in {}", input.display()))?;
            write(&with_suffix(out, ".polyline.txt"), g.polyline)?;
            write(&with_suffix(out, ".triangles.txt"), g.triangles)?;
            write(&with_suffix(out, ".recon.pgm"), g.reconstruction)?;
            match g.iou {
                Some(iou) => println!("iou {iou:.6}"),
                None => println!("iou undefined (both masks empty)"),
            }
        }
        Command::Sedf { input, alpha, v_thres } => {
            let out = require_out(&cli.out)?;
            let bytes = fs::read(&input).with_context(|| format!("reading {}", input.display()))?;
            let alpha = alpha.unwrap_or(cfg.sweep.episode.alpha);
            let v_thres = v_thres.unwrap_or(cfg.sweep.episode.v_thres);
            let s = commands::sedf(&bytes, alpha, v_thres).with_context(|| format!("in {}", input.display()))?;
            write(&with_suffix(out, ".ppm"), s.heatmap)?;
            write(&with_suffix(out, ".txt"), s.field)?;
            println!("clamp {:.6}", s.clamp);
        }
        Command::Episode { env, trial, alpha } => {
            if let Some(e) = env {
                cfg.env = e;
            }
            if let Some(t) = trial {
                cfg.trial = t;
            }
            if let Some(a) = alpha {
                cfg.sweep.episode.alpha = a;
            }
            cfg.validate()?;
            let res = commands::episode(&cfg)?;
            println!("{} {}", res.outcome, res.steps);
            if let Some(out) = &cli.out {
                write(out, commands::trajectory_text(&res))?;
            }
        }
        Command::Sweep => {
            let out = require_out(&cli.out)?;
            let records = commands::sweep(&cfg)?;
            let file = fs::File::create(out).with_context(|| format!("creating {}", out.display()))?;
            write_csv(&records, std::io::BufWriter::new(file)).with_context(|| format!("writing {}", out.display()))?;
            print!("{}", commands::summary_text(&records));
        }
        Command::Selftest => {
            let checks = selftest::run(cfg.sweep.base_seed);
            for c in &checks {
                println!("{} {} ({})", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            return Ok(checks.iter().all(|c| c.passed));
        }
        Command::Config => print!("{}", cfg.to_text()),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
