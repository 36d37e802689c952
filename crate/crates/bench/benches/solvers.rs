use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use eds_bench::{degrees, planted};
use eds_core::eds::{brute_force_eds, OracleMode};
use eds_core::graph::square;
use eds_core::solvers::{dispatch, enumerate_s222_free, solve_p7_free, solve_s224_free, Strategy};

fn solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("solvers");
    group.sample_size(20);
    for count in [50, 200, 600] {
        let path = planted(&format!("planted:path:{}", degrees(&[2, 3, 1, 2], count)), 7);
        let star = planted(&format!("planted:star:{}", degrees(&[3, 2, 2], count)), 7);
        group.bench_with_input(BenchmarkId::new("s224", path.n()), &path, |b, g| {
            b.iter(|| solve_s224_free(g))
        });
        group.bench_with_input(BenchmarkId::new("s222_all", path.n()), &path, |b, g| {
            b.iter(|| enumerate_s222_free(g))
        });
        group.bench_with_input(BenchmarkId::new("p7", star.n()), &star, |b, g| {
            b.iter(|| solve_p7_free(g))
        });
        group.bench_with_input(BenchmarkId::new("auto", star.n()), &star, |b, g| b.iter(|| dispatch(g, Strategy::Auto)));
    }
    group.finish();
}

fn building_blocks(c: &mut Criterion) {
    let g = planted(&format!("planted:random:{}:0.05", degrees(&[2, 2, 3], 300)), 11);
    c.bench_function("square", |b| b.iter(|| square(&g)));
    let small = planted("planted:random:2,2,1,3,2,1,2:0.3", 5);
    c.bench_function("oracle_all", |b| {
        b.iter(|| brute_force_eds(&small, OracleMode::All, u64::MAX))
    });
}

criterion_group!(benches, solvers, building_blocks);
criterion_main!(benches);
