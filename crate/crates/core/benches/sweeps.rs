//! Sequential against parallel execution of the main sweeps.

use std::hint::black_box;

use braided_core::hecke::{ph_series, Braiding};
use braided_core::re_weyl::build_weyl;
use braided_core::re_weyl::leibniz::{self, all_monomials};
use braided_core::u2::{DtReading, InvariantOp, IsotypicElement, SpectralMatrices, U2Calculus};
use braided_core::{exec, ExecMode, Scalar};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, ExecMode); 2] = [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)];

fn ph(c: &mut Criterion) {
    let mut g = c.benchmark_group("ph_series");
    g.sample_size(10);
    let r = Braiding::standard(2);
    for (name, mode) in MODES {
        g.bench_with_input(BenchmarkId::new(name, "std:d=2 kmax=4"), &mode, |b, &m| {
            b.iter(|| ph_series(black_box(&r), 4, m).unwrap())
        });
    }
    g.finish();
}

fn leibniz_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("leibniz_sweep");
    g.sample_size(10);
    let w = build_weyl(&Braiding::flip(2)).unwrap();
    let monos: Vec<_> = (0..=3).flat_map(|d| all_monomials(2, d)).collect();
    for (name, mode) in MODES {
        g.bench_with_input(BenchmarkId::new(name, "m=2 deg<=3"), &mode, |b, &m| {
            b.iter(|| leibniz::sweep(&w, black_box(&monos), m).unwrap())
        });
    }
    g.finish();
}

fn u2_sweeps(c: &mut Criterion) {
    let u = U2Calculus::new().unwrap();
    let sp = SpectralMatrices::new();
    let monos = u.pbw_monomials(3);
    let mut g = c.benchmark_group("u2");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_with_input(BenchmarkId::new(name, "derivatives_commute deg<=3"), &mode, |b, &m| {
            b.iter(|| u.derivatives_commute(black_box(&monos), m))
        });
        g.bench_with_input(BenchmarkId::new(name, "cas_exchange deg<=2"), &mode, |b, &m| {
            b.iter(|| u.cas_exchange(&sp, true, black_box(&monos[..15]), m))
        });
    }
    let jobs: Vec<_> = [InvariantOp::Dt, InvariantOp::Q, InvariantOp::Delta(1)]
        .into_iter()
        .flat_map(|op| (0..=2).map(move |k| (op, IsotypicElement::new(Scalar::var(braided_core::Var::T), k))))
        .collect();
    for (name, mode) in MODES {
        g.bench_with_input(BenchmarkId::new(name, "oracle crosscheck"), &mode, |b, &m| {
            b.iter(|| exec::map(m, &jobs, |(op, e)| u.oracle_crosscheck(&sp, *op, e, DtReading::Scaled).is_ok()))
        });
    }
    g.finish();
}

criterion_group!(benches, ph, leibniz_sweep, u2_sweeps);
criterion_main!(benches);
