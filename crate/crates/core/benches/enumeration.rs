use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use altgamma::egfseries::TruncatedSeries;
use altgamma::exactpoly::Poly;
use altgamma::grammar::{BuiltinGrammar, Grammar};
use altgamma::par::ExecMode;
use altgamma::permstats::{distribution_with, EnumCap, Statistic};

const MODES: [(&str, ExecMode); 2] = [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)];

fn enumeration(c: &mut Criterion) {
    let cap = EnumCap::default();
    let mut g = c.benchmark_group("altdesB_distribution_n7");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| distribution_with(Statistic::AltdesB, black_box(7), &cap, mode).unwrap())
        });
    }
    g.finish();
}

fn derivation(c: &mut Criterion) {
    let g3 = Grammar::builtin(BuiltinGrammar::G3);
    let seed = g3.derive_iter(&Poly::var("e"), 40).unwrap();
    let mut g = c.benchmark_group("g3_derive_step_40");
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| g3.derive_with(black_box(&seed), mode).unwrap())
        });
    }
    g.finish();
}

fn series(c: &mut Criterion) {
    let u = Poly::parse("1+x").unwrap();
    let a = TruncatedSeries::cos_like(24, &u);
    let b = TruncatedSeries::sinq_like(24, &u);
    let mut g = c.benchmark_group("series_mul_order24");
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |bch| {
            bch.iter(|| a.mul_with(black_box(&b), mode).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, enumeration, derivation, series);
criterion_main!(benches);
