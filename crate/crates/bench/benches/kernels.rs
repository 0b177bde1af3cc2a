use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use navspace::field::{exact_sq_edt, sedf_from_mask};
use navspace::geometry::{delaunay_triangulate, reconstruct_mask};
use navspace::kernels::{ssim, SsimParams};
use navspace::planner::{generate_primitives, select_primitive, CameraModel, LibraryParams, PlannerConfig, Pose2};
use navspace::sim::{build_env, render_mask};
use navspace_bench::{noise_image, random_points, road_mask, scattered_omega};
use std::hint::black_box;

fn edt(c: &mut Criterion) {
    let mut g = c.benchmark_group("exact_sq_edt");
    for side in [64, 160, 320] {
        let omega = scattered_omega(side, side, side * 2, 1);
        g.bench_with_input(BenchmarkId::from_parameter(side), &omega, |b, o| b.iter(|| exact_sq_edt(black_box(o))));
    }
    g.finish();
}

fn delaunay(c: &mut Criterion) {
    let mut g = c.benchmark_group("delaunay");
    for n in [12, 64, 256] {
        let pts = random_points(n, 2);
        g.bench_with_input(BenchmarkId::from_parameter(n), &pts, |b, p| b.iter(|| delaunay_triangulate(black_box(p))));
    }
    g.finish();
}

fn round_trip(c: &mut Criterion) {
    let mask = road_mask(128, 128);
    c.bench_function("reconstruct_mask 128 k16", |b| b.iter(|| reconstruct_mask(black_box(&mask), 16)));
}

fn planning(c: &mut Criterion) {
    let cam = CameraModel::default();
    let lib = generate_primitives(&LibraryParams::default()).unwrap();
    let world = build_env(2, 7).unwrap();
    let robot = world.start;
    c.bench_function("render_mask 160x120", |b| b.iter(|| render_mask(black_box(&world), &robot, &cam)));
    let sedf = sedf_from_mask(&render_mask(&world, &robot, &cam), 0.25, 60).unwrap();
    let goal = Pose2::new(world.size - 0.5, world.size - 0.5, 0.0);
    let cfg = PlannerConfig::default();
    c.bench_function("select_primitive 15x10", |b| {
        b.iter(|| select_primitive(&lib, black_box(&sedf), &cam, &robot, &goal, &cfg))
    });
}

fn structural_similarity(c: &mut Criterion) {
    let (a, b2) = (noise_image(160, 120, 3), noise_image(160, 120, 4));
    let params = SsimParams::default();
    c.bench_function("ssim 160x120", |b| b.iter(|| ssim(black_box(&a), black_box(&b2), &params)));
}

criterion_group!(benches, edt, delaunay, round_trip, planning, structural_similarity);
criterion_main!(benches);
