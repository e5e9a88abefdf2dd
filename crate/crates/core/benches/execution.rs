//! Sequential against rayon execution on the two parallel workloads:
//! candidate searches inside `lift_map` and the extension-field zero scan.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use finlift::exec::Execution;
use finlift::liftengine::{lift_map, PipelineConfig, Presentation, SelfMapOnA};
use finlift::oracle::{zero_locus_scan, OracleBudget};
use finlift::polyring::{parse_polynomial, VarContext, VariableMap};
use finlift::scalars::FieldSpec;
use finlift::stdbasis::{IdealData, Mode};

fn ideal(field: FieldSpec, names: &[&str], gens: &[&str]) -> IdealData {
    let ctx = VarContext::new(field, names.iter().copied()).unwrap();
    IdealData::new(&ctx, gens.iter().map(|g| parse_polynomial(g, &ctx).unwrap()).collect()).unwrap()
}

fn self_map(names: &[&str], gens: &[&str], images: &[&str]) -> SelfMapOnA {
    let ideal = ideal(FieldSpec::Rationals, names, gens);
    let ctx = ideal.context().clone();
    let map = VariableMap::new(&ctx, images.iter().map(|p| parse_polynomial(p, &ctx).unwrap()).collect()).unwrap();
    SelfMapOnA::new(Presentation::new(ideal, Mode::Local).unwrap(), map).unwrap()
}

const EXECUTIONS: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn lift(c: &mut Criterion) {
    let cases = [
        ("plane", self_map(&["X", "Y", "Z"], &["Z"], &["X^2", "Y^2", "0"])),
        ("cone", self_map(&["X", "Y", "Z"], &["Z^2 - X*Y"], &["X^2", "Y^2", "Z^2"])),
        ("lines", self_map(&["X", "Y", "Z"], &["X*Y", "X*Z"], &["X^2", "Y^2", "Z^2"])),
    ];
    let mut group = c.benchmark_group("lift_map");
    for (name, m) in &cases {
        for (label, execution) in EXECUTIONS {
            let config = PipelineConfig {
                execution,
                ..PipelineConfig::default()
            };
            group.bench_with_input(BenchmarkId::new(label, name), m, |b, m| {
                b.iter(|| lift_map(black_box(m), &config).unwrap())
            });
        }
    }
    group.finish();
}

fn zero_scan(c: &mut Criterion) {
    let f5 = FieldSpec::prime(5).unwrap();
    let f7 = FieldSpec::prime(7).unwrap();
    let cases = [
        ("F7 3 vars", ideal(f7, &["X", "Y", "Z"], &["X^2 + Y^2 + Z^2", "X*Y*Z", "X^3 - Y^3"])),
        ("F5 4 vars", ideal(f5, &["X", "Y", "Z", "W"], &["X^2 - Y*Z", "W^3", "X*W + Y^2", "Z^2"])),
    ];
    let budget = OracleBudget::default();
    let mut group = c.benchmark_group("zero_locus_scan");
    group.sample_size(10);
    for (name, ideal) in &cases {
        for (label, exec) in EXECUTIONS {
            group.bench_with_input(BenchmarkId::new(label, name), ideal, |b, ideal| {
                b.iter(|| zero_locus_scan(black_box(ideal), 2, &budget, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, lift, zero_scan);
criterion_main!(benches);
