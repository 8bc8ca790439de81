use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use cycpres::oracle::{abelianization, todd_coxeter_with, EnumOptions, Strategy, VerifyConfig};
use cycpres::par::{par_map, Execution};
use cycpres::record::RecordOptions;
use cycpres::sweep::{run_sweep, Span, SweepSpec};
use cycpres::words::e_presentation;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn coset_enumeration(c: &mut Criterion) {
    let pres = e_presentation(3, 7, -2, 1);
    let mut g = c.benchmark_group("coset_enumeration");
    for (name, strategy) in [("felsch", Strategy::Felsch), ("hlt", Strategy::Hlt)] {
        let opts = EnumOptions { max_cosets: 1 << 20, strategy };
        g.bench_function(name, |b| b.iter(|| todd_coxeter_with(black_box(&pres), &[], &opts).unwrap()));
    }
    g.finish();
}

fn snf(c: &mut Criterion) {
    let pres: Vec<_> = (2..40).map(|n| e_presentation(3, n, -2, 1)).collect();
    let mut g = c.benchmark_group("abelianization_batch");
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| par_map(exec, black_box(&pres), abelianization)));
    }
    g.finish();
}

fn enumeration_batch(c: &mut Criterion) {
    let pres: Vec<_> = (1..=6)
        .flat_map(|n| (-3..=3).map(move |s| e_presentation(3, n, s, 1)))
        .collect();
    let opts = EnumOptions::with_max(1 << 20);
    let mut g = c.benchmark_group("enumeration_batch");
    g.sample_size(20);
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| par_map(exec, black_box(&pres), |p| todd_coxeter_with(p, &[], &opts).map(|t| t.num_cosets())))
        });
    }
    g.finish();
}

fn sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweep");
    g.sample_size(10);
    for verify in [false, true] {
        for (name, exec) in MODES {
            let mut spec = SweepSpec::new(Span::new(1, 5), Span::new(0, 3), Span::new(-3, 3));
            spec.execution = exec;
            spec.record = RecordOptions {
                verify: verify.then(VerifyConfig::default),
                ..RecordOptions::default()
            };
            let id = BenchmarkId::new(if verify { "verified" } else { "classify" }, name);
            g.bench_with_input(id, &spec, |b, spec| b.iter(|| run_sweep(spec)));
        }
    }
    g.finish();
}

criterion_group!(benches, coset_enumeration, snf, enumeration_batch, sweep);
criterion_main!(benches);
