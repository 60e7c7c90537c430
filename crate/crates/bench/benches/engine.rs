use criterion::{criterion_group, criterion_main, Criterion};
use jacsyz_bench::{curve, curve_text, BENCH_CURVES};
use jacsyz_core::{analyze_text, minimal_resolution, AnalysisOptions, CurveMeta};
use std::hint::black_box;

fn resolution(c: &mut Criterion) {
    let mut group = c.benchmark_group("resolution");
    for name in BENCH_CURVES {
        let cv = curve(name);
        group.bench_function(name, |b| b.iter(|| minimal_resolution(black_box(&cv)).unwrap()));
    }
    group.finish();
}

fn saturation(c: &mut Criterion) {
    let mut group = c.benchmark_group("saturation");
    for name in BENCH_CURVES {
        let cv = curve(name);
        group.bench_function(name, |b| b.iter(|| black_box(cv.jacobian()).saturate()));
    }
    group.finish();
}

fn full_analysis(c: &mut Criterion) {
    let mut group = c.benchmark_group("analysis");
    group.sample_size(10);
    let opts = AnalysisOptions::default();
    for name in BENCH_CURVES {
        let text = curve_text(name);
        group.bench_function(name, |b| {
            b.iter(|| analyze_text(name, black_box(&text), CurveMeta::default(), &opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, resolution, saturation, full_analysis);
criterion_main!(benches);
