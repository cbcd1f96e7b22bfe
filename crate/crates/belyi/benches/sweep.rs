//! Compares the sequential and rayon-parallel verification sweeps on the
//! same workload. Run with `cargo bench` (parallel feature on by default)
//! and `cargo bench --no-default-features` for the sequential-only build.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use belyi::verify::{sweep_sequential, SweepOptions};

fn bench_options(max_n: u64) -> SweepOptions {
    SweepOptions {
        max_n,
        fuzz_words: 1_000,
        light_fuzz_words: 100,
        ..SweepOptions::default()
    }
}

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_sweep");
    group.sample_size(10);
    for max_n in [21u64, 31] {
        let opts = bench_options(max_n);
        group.bench_with_input(BenchmarkId::new("sequential", max_n), &opts, |b, opts| {
            b.iter(|| {
                let report = sweep_sequential(opts);
                assert!(report.ok());
                report.pairs_checked
            })
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", max_n), &opts, |b, opts| {
            b.iter(|| {
                let report = belyi::verify::sweep_parallel(opts);
                assert!(report.ok());
                report.pairs_checked
            })
        });
    }
    group.finish();
}

fn bench_single_pair(c: &mut Criterion) {
    use belyi::covering::lift_boundary_loop;
    use belyi::homology::{closed_form_delta, pfaffian_check};
    use belyi::words::magnus_class;
    use belyi::CurveParams;

    let p = CurveParams::new(101, 31).unwrap();
    c.bench_function("closed_form_delta_101_31", |b| {
        b.iter(|| closed_form_delta(&p))
    });
    c.bench_function("magnus_class_101_31", |b| {
        let (_, word) = lift_boundary_loop(&p);
        b.iter(|| magnus_class(&word).unwrap())
    });
    c.bench_function("pfaffian_check_101_31", |b| {
        let delta = closed_form_delta(&p);
        b.iter(|| pfaffian_check(&p, &delta))
    });
}

criterion_group!(benches, bench_sweep, bench_single_pair);
criterion_main!(benches);
