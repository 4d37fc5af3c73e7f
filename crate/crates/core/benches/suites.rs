//! Sequential versus rayon-parallel trial scheduling on a few suites.
//!
//! Without the `parallel` feature both variants run sequentially, which
//! gives the baseline for the comparison.

use std::hint::black_box;

use contactkit::verify::{run_suite_with, Execution, GenConfig};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const TRIALS: u64 = 64;

fn schedules(c: &mut Criterion) {
    for (suite, n) in [
        ("homomorphism", 3),
        ("realize-equivariance", 2),
        ("generic-field", 2),
    ] {
        let mut group = c.benchmark_group(format!("{suite}/n={n}"));
        group.sample_size(10);
        let cfg = GenConfig::new(42, n);
        for (label, exec) in [
            ("sequential", Execution::Sequential),
            ("parallel", Execution::Parallel),
        ] {
            group.bench_with_input(BenchmarkId::new(label, TRIALS), &exec, |b, &exec| {
                b.iter(|| {
                    let report = run_suite_with(suite, black_box(&cfg), TRIALS, exec).unwrap();
                    assert!(report.passed());
                    report
                })
            });
        }
        group.finish();
    }
}

fn arithmetic(c: &mut Criterion) {
    use contactkit::cli::parse_ratfn;
    let p = parse_ratfn("(x1 + 2*y1 - 3*z + x2*y2 - 1)^6", 2).unwrap();
    let q = parse_ratfn("(x1*y2 - x2*y1 + z^2 + 1)^5", 2).unwrap();
    c.bench_function("ratfn/mul-add", |b| {
        b.iter(|| &(black_box(&p) * black_box(&q)) + black_box(&p))
    });
    c.bench_function("ratfn/partial", |b| {
        let f = &p / &q;
        b.iter(|| black_box(&f).partial(4).unwrap())
    });
}

criterion_group!(benches, schedules, arithmetic);
criterion_main!(benches);
