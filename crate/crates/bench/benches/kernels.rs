use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use filtralab_bench::{marley, plane, sparse_plane};
use filtralab_core::filtration::{integral_closure_power, ratliff_rush_piece};
use filtralab_core::hilbert::fit;
use filtralab_core::{Filtration, FitConfig, RrConfig};

fn colength(c: &mut Criterion) {
    let mut g = c.benchmark_group("colength");
    let i = marley();
    for n in [2u32, 4, 8] {
        let p = i.power(n);
        g.bench_with_input(BenchmarkId::new("marley", n), &p, |b, p| b.iter(|| black_box(p).colength().unwrap()));
    }
    g.finish();
}

fn power(c: &mut Criterion) {
    let mut g = c.benchmark_group("power");
    let i = marley();
    for n in [2u32, 4, 8] {
        g.bench_with_input(BenchmarkId::new("marley", n), &n, |b, &n| b.iter(|| black_box(&i).power(n)));
    }
    g.finish();
}

fn closure(c: &mut Criterion) {
    let mut g = c.benchmark_group("integral_closure");
    let i = sparse_plane();
    for n in [1u32, 3, 6] {
        g.bench_with_input(BenchmarkId::new("x5_x2y2_y5", n), &n, |b, &n| {
            b.iter(|| integral_closure_power(black_box(&i), n).unwrap())
        });
    }
    g.finish();
}

fn ratliff_rush(c: &mut Criterion) {
    let f = Filtration::adic(&plane()).unwrap();
    c.bench_function("ratliff_rush/x4_x3y_xy3_y4", |b| {
        b.iter(|| ratliff_rush_piece(black_box(&f), &[2], RrConfig::default()).unwrap())
    });
}

fn fitting(c: &mut Criterion) {
    let mut g = c.benchmark_group("fit");
    g.sample_size(20);
    let adic = Filtration::adic(&marley()).unwrap();
    g.bench_function("marley_adic", |b| b.iter(|| fit(black_box(&adic), FitConfig::default()).unwrap()));
    let normal = Filtration::normal(&sparse_plane()).unwrap();
    g.bench_function("x5_x2y2_y5_normal", |b| b.iter(|| fit(black_box(&normal), FitConfig::default()).unwrap()));
    let product = Filtration::product(vec![
        (plane(), filtralab_core::AxisKind::Adic),
        (sparse_plane(), filtralab_core::AxisKind::Adic),
    ])
    .unwrap();
    g.bench_function("plane_product", |b| b.iter(|| fit(black_box(&product), FitConfig::default()).unwrap()));
    g.finish();
}

criterion_group!(benches, colength, power, closure, ratliff_rush, fitting);
criterion_main!(benches);
