use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use navspace::geometry::SegMask;
use navspace::pnm::{mask_to_pgm, read_pgm, read_ppm};

fn navspace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_navspace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

/// Navigable below a piecewise-linear boundary `v = f(u)`.
fn ridge_mask(w: usize, h: usize) -> SegMask {
    SegMask::from_fn(w, h, |u, v| {
        let t = u as f64 / (w - 1) as f64;
        let b = if t < 0.5 { 60.0 - 60.0 * t } else { 30.0 + 40.0 * (t - 0.5) };
        v as f64 >= b
    })
    .unwrap()
}

#[test]
fn geometry_round_trip_prints_iou() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("mask.pgm");
    fs::write(&input, mask_to_pgm(&ridge_mask(128, 128))).unwrap();
    let prefix = dir.path().join("ridge");
    let o = navspace(&["geometry", "--input", p(&input), "--out", p(&prefix)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let iou: f64 = stdout(&o).trim().strip_prefix("iou ").unwrap().parse().unwrap();
    assert!(iou >= 0.98, "{iou}");
    let poly = fs::read_to_string(dir.path().join("ridge.polyline.txt")).unwrap();
    assert_eq!(poly.lines().count(), 16);
    let tris = fs::read_to_string(dir.path().join("ridge.triangles.txt")).unwrap();
    assert!(tris.starts_with("points "));
    let recon = read_pgm(&fs::read(dir.path().join("ridge.recon.pgm")).unwrap()).unwrap();
    assert_eq!((recon.width(), recon.height()), (128, 128));
}

#[test]
fn geometry_all_navigable() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("full.pgm");
    fs::write(&input, mask_to_pgm(&SegMask::filled(40, 30, true).unwrap())).unwrap();
    let prefix = dir.path().join("full");
    let o = navspace(&["geometry", "--input", p(&input), "--out", p(&prefix), "--k", "8"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let recon = read_pgm(&fs::read(dir.path().join("full.recon.pgm")).unwrap()).unwrap();
    assert!(recon.as_slice().iter().all(|&b| b == 255));
}

#[test]
fn truncated_pgm_names_the_offset() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.pgm");
    let mut bytes = mask_to_pgm(&SegMask::filled(8, 8, true).unwrap());
    bytes.truncate(bytes.len() - 5);
    fs::write(&input, &bytes).unwrap();
    let o = navspace(&["geometry", "--input", p(&input), "--out", p(&dir.path().join("x"))]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains(&format!("byte {}", bytes.len())), "{}", stderr(&o));
}

/// Squared distance from every pixel to the nearest strong edge pixel,
/// by exhaustive search.
fn oracle_field(mask: &SegMask, alpha: f64, v_thres: usize) -> (Vec<f64>, f64) {
    let (w, h) = (mask.width(), mask.height());
    let mut omega = Vec::new();
    for v in (v_thres + 1)..h {
        for u in 0..w {
            if mask.get(u, v) {
                continue;
            }
            let nav = |du: i64, dv: i64| {
                let (a, b) = (u as i64 + du, v as i64 + dv);
                a >= 0 && b >= 0 && (a as usize) < w && (b as usize) < h && mask.get(a as usize, b as usize)
            };
            if nav(-1, 0) || nav(1, 0) || nav(0, -1) || nav(0, 1) {
                omega.push((u as i64, v as i64));
            }
        }
    }
    let mut e = Vec::with_capacity(w * h);
    for v in 0..h as i64 {
        for u in 0..w as i64 {
            let d2 = omega.iter().map(|&(a, b)| (a - u) * (a - u) + (b - v) * (b - v)).min();
            e.push(d2.map_or((w + h) as f64, |d| (d as f64).sqrt()));
        }
    }
    let clamp = alpha * e.iter().cloned().fold(0.0, f64::max);
    (e.into_iter().map(|x| x.min(clamp)).collect(), clamp)
}

fn sedf_fixture() -> SegMask {
    SegMask::from_fn(48, 36, |u, v| {
        let box_hit = (14..22).contains(&u) && (18..30).contains(&v);
        v >= 10 + u / 6 && !box_hit
    })
    .unwrap()
}

#[test]
fn sedf_field_matches_exhaustive_oracle_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let mask = sedf_fixture();
    let input = dir.path().join("m.pgm");
    fs::write(&input, mask_to_pgm(&mask)).unwrap();
    for (alpha, v_thres) in [(0.25, 12usize), (1.0, 0), (0.55, 20)] {
        let prefix = dir.path().join(format!("f{alpha}"));
        let o = navspace(&[
            "sedf",
            "--input",
            p(&input),
            "--alpha",
            &alpha.to_string(),
            "--v-thres",
            &v_thres.to_string(),
            "--out",
            p(&prefix),
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
        let (field, _) = oracle_field(&mask, alpha, v_thres);
        let mut golden = format!("{} {}\n", mask.width(), mask.height());
        for row in field.chunks(mask.width()) {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:.5e}")).collect();
            golden.push_str(&cells.join(" "));
            golden.push('\n');
        }
        let written = fs::read_to_string(dir.path().join(format!("f{alpha}.txt"))).unwrap();
        assert_eq!(written, golden, "alpha {alpha}");
    }
}

#[test]
fn sedf_alpha_zero_is_uniformly_blue() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("m.pgm");
    fs::write(&input, mask_to_pgm(&sedf_fixture())).unwrap();
    let prefix = dir.path().join("zero");
    let o = navspace(&["sedf", "--input", p(&input), "--alpha", "0", "--v-thres", "10", "--out", p(&prefix)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let img = read_ppm(&fs::read(dir.path().join("zero.ppm")).unwrap()).unwrap();
    assert!(img.as_slice().iter().all(|&px| px == [0, 0, 255]));
    let text = fs::read_to_string(dir.path().join("zero.txt")).unwrap();
    assert!(text.lines().skip(1).flat_map(|l| l.split(' ')).all(|x| x == "0.00000e0"));
}

const SMALL_SWEEP: &str = "envs = 1,2\nalphas = 0.1,0.35\ntrials = 2\n";

#[test]
fn sweep_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("small.cfg");
    fs::write(&cfg, SMALL_SWEEP).unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for out in [&a, &b] {
        let o = navspace(&["--config", p(&cfg), "sweep", "--out", p(out)]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let text = fs::read(&a).unwrap();
    assert_eq!(text, fs::read(&b).unwrap());
    let text = String::from_utf8(text).unwrap();
    assert!(text.starts_with("env,alpha,trial,outcome,steps,seed\n"));
    assert_eq!(text.lines().count(), 1 + 2 * 2 * 2);

    let c = dir.path().join("c.csv");
    let o = navspace(&["--config", p(&cfg), "--seed", "9", "sweep", "--out", p(&c)]);
    assert!(o.status.success());
    assert_ne!(fs::read(&c).unwrap(), fs::read(&a).unwrap());
}

#[test]
fn smoke_sweep_is_fast() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("smoke.cfg");
    fs::write(&cfg, "trials = 1\n").unwrap();
    let out = dir.path().join("smoke.csv");
    let t = std::time::Instant::now();
    let o = navspace(&["--config", p(&cfg), "sweep", "--out", p(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(t.elapsed().as_secs_f64() < 30.0, "{:?}", t.elapsed());
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 1 + 33);
}

#[test]
fn default_sweep_has_330_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("default.csv");
    let o = navspace(&["sweep", "--out", p(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 331);
}

#[test]
fn unwritable_output_fails() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("tiny.cfg");
    fs::write(&cfg, "envs = 1\nalphas = 0.2\ntrials = 1\n").unwrap();
    let out = dir.path().join("missing").join("x.csv");
    let o = navspace(&["--config", p(&cfg), "sweep", "--out", p(&out)]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("missing"));
}

#[test]
fn bad_config_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    fs::write(&cfg, "alpha = 0.2\nspeed = 3\n").unwrap();
    let o = navspace(&["--config", p(&cfg), "episode"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn episode_writes_trajectory() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("traj.txt");
    let o = navspace(&["episode", "--env", "1", "--alpha", "0.35", "--out", p(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let line = stdout(&o);
    let mut parts = line.split_whitespace();
    let outcome = parts.next().unwrap();
    let steps: usize = parts.next().unwrap().parse().unwrap();
    assert!(["success", "collision", "timeout"].contains(&outcome));
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), steps + 1);
}

#[test]
fn selftest_passes() {
    let o = navspace(&["selftest"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 5);
}
