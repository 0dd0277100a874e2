use std::hint::black_box;

use coophunt::bifurcation::{bt_curves, cusp_locus_exact};
use coophunt::coeffs::qr;
use coophunt::dynamics::{detect_cycles, integrate, CycleOptions};
use coophunt::equilibria::{classify_region, positive_equilibria};
use coophunt::hopf::{focal_values, hopf_critical};
use coophunt::polyalg::{resultant_exact, Poly, DEFAULT_BIT_CAP};
use coophunt::State;
use coophunt_bench::{fold_grid, region_three, single_cycle};
use criterion::{criterion_group, criterion_main, Criterion};
use num_bigint::BigInt;

fn equilibria(c: &mut Criterion) {
    let grid = fold_grid();
    c.bench_function("positive_equilibria/grid256", |b| {
        b.iter(|| grid.iter().map(|p| positive_equilibria(black_box(p)).unwrap().len()).sum::<usize>())
    });
    c.bench_function("classify_region/grid256", |b| {
        b.iter(|| grid.iter().filter(|p| classify_region(black_box(p)).region.positive_count() == 2).count())
    });
}

fn normal_forms(c: &mut Criterion) {
    c.bench_function("cusp_locus_exact", |b| b.iter(|| cusp_locus_exact(black_box(&qr(1, 1)), &qr(1, 2), None).unwrap()));
    c.bench_function("bt_curves", |b| b.iter(|| bt_curves(black_box(1.0), 0.5).unwrap()));
    c.bench_function("focal_values", |b| {
        b.iter(|| focal_values(&hopf_critical(black_box(133.7629), 0.45, 1.0).unwrap()).unwrap())
    });
}

fn dynamics(c: &mut Criterion) {
    let p = region_three();
    c.bench_function("integrate/t100", |b| b.iter(|| integrate(&p, black_box(State::new(0.9, 0.08)), 100.0, 1e-9).unwrap()));
    let mut g = c.benchmark_group("detect_cycles");
    g.sample_size(10);
    for (name, p) in [("region_three", region_three()), ("single_cycle", single_cycle())] {
        let e1 = positive_equilibria(&p).unwrap()[0].clone();
        g.bench_function(name, |b| b.iter(|| detect_cycles(&p, &e1, &CycleOptions::default()).unwrap().cycles.len()));
    }
    g.finish();
}

fn resultants(c: &mut Criterion) {
    let poly = |cs: &[i64]| Poly::new(cs.iter().map(|&v| BigInt::from(v)).collect());
    let f = poly(&[3, -7, 11, 2, -5, 9, 1, -4, 6]);
    let g = poly(&[-2, 8, 1, -9, 4, 3, -6, 5]);
    c.bench_function("resultant_exact/8x7", |b| b.iter(|| resultant_exact(black_box(&f), &g, DEFAULT_BIT_CAP).unwrap()));
}

criterion_group!(benches, equilibria, normal_forms, dynamics, resultants);
criterion_main!(benches);
