use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use curv_bench::{float_tensor, rational_tensor};
use curv_core::verify::oracle::{oracle_dd_star_p, oracle_pq_curvature};
use curv_core::DoubleForm;

fn dd_star(c: &mut Criterion) {
    let mut group = c.benchmark_group("dd_star_p");
    for n in [4usize, 5, 6] {
        let r = float_tensor(n);
        let p = n / 2;
        group.bench_with_input(BenchmarkId::new("star", n), &n, |b, _| {
            b.iter(|| r.dd_star_p(black_box(p)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("contraction", n), &n, |b, _| {
            b.iter(|| r.dd_star_by_contraction(black_box(p)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("oracle", n), &n, |b, _| {
            b.iter(|| oracle_dd_star_p(&r, black_box(p)).unwrap())
        });
    }
    group.finish();
}

fn pq(c: &mut Criterion) {
    let mut group = c.benchmark_group("pq_curvature");
    let r = float_tensor(5);
    for p in [0usize, 1] {
        group.bench_with_input(BenchmarkId::new("star", p), &p, |b, &p| {
            b.iter(|| r.pq_curvature(p, 2).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("oracle", p), &p, |b, &p| {
            b.iter(|| oracle_pq_curvature(&r, p, 2).unwrap())
        });
    }
    group.finish();
}

fn products(c: &mut Criterion) {
    let mut group = c.benchmark_group("exterior_product");
    for n in [6usize, 8] {
        let r = float_tensor(n);
        let g2 = DoubleForm::<f64>::metric_power(n, 2).unwrap();
        group.bench_with_input(BenchmarkId::new("general", n), &n, |b, _| {
            b.iter(|| g2.exterior_product(black_box(r.form())).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("metric_fast_path", n), &n, |b, _| {
            b.iter(|| black_box(r.form()).metric_power_times(2).unwrap())
        });
    }
    group.finish();
}

fn exact(c: &mut Criterion) {
    let r = rational_tensor(6);
    c.bench_function("dd_star_p/rational_n6_p2", |b| {
        b.iter(|| r.dd_star_p(black_box(2)).unwrap())
    });
}

criterion_group!(benches, dd_star, pq, products, exact);
criterion_main!(benches);
