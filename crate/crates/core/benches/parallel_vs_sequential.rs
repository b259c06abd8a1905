//! Compares the rayon fan-out against the sequential reference on the three
//! batch verification workloads. Build with the default `parallel` feature;
//! the sequential path is always compiled so both appear in one run.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lichcert::exec;
use lichcert::g2::{build_g2_structure, g2_identity_suite};
use lichcert::rep::{c2_char, principal_branch, C2Weight};
use lichcert::sampling;
use lichcert::sasaki;
use lichcert::scalar::rat;
use lichcert::spin::Spinor;
use lichcert::stability::function_spectrum_scan;

fn spinor_suite(spinors: &[Spinor]) -> usize {
    let run = |s: &Spinor| {
        let g = build_g2_structure(s).expect("unit spinor");
        g2_identity_suite(&g).pass as usize
    };
    exec::map_collect(spinors, run).into_iter().sum()
}

fn spinor_suite_seq(spinors: &[Spinor]) -> usize {
    let run = |s: &Spinor| {
        let g = build_g2_structure(s).expect("unit spinor");
        g2_identity_suite(&g).pass as usize
    };
    exec::map_collect_seq(spinors, run).into_iter().sum()
}

fn bench_identity_suites(c: &mut Criterion) {
    let mut rng = sampling::rng(7);
    let spinors: Vec<Spinor> = (0..10).map(|_| sampling::random_unit_spinor(&mut rng)).collect();
    let mut group = c.benchmark_group("g2_identity_suite_10_spinors");
    group.sample_size(10);
    group.bench_with_input(BenchmarkId::new("parallel", 10), &spinors, |b, s| {
        b.iter(|| spinor_suite(s))
    });
    group.bench_with_input(BenchmarkId::new("sequential", 10), &spinors, |b, s| {
        b.iter(|| spinor_suite_seq(s))
    });
    group.finish();
}

fn bench_sasaki_sweep(c: &mut Criterion) {
    let fibre = sasaki::build_fibre(4);
    let tensors = sasaki::phi_invariant_tracefree_sym(&fibre);
    let run_par = |tensors: &Vec<lichcert::multilinear::Mat>| {
        exec::map_collect(tensors, |m| {
            let h = sasaki::BasicTensor2::analyze(m.clone(), &fibre);
            sasaki::q_diff(&h, &fibre).is_ok() as usize
        })
        .into_iter()
        .sum::<usize>()
    };
    let run_seq = |tensors: &Vec<lichcert::multilinear::Mat>| {
        exec::map_collect_seq(tensors, |m| {
            let h = sasaki::BasicTensor2::analyze(m.clone(), &fibre);
            sasaki::q_diff(&h, &fibre).is_ok() as usize
        })
        .into_iter()
        .sum::<usize>()
    };
    let mut group = c.benchmark_group("sasaki_curvature_sweep_n4");
    group.sample_size(10);
    group.bench_with_input(BenchmarkId::new("parallel", 4), &tensors, |b, t| {
        b.iter(|| run_par(t))
    });
    group.bench_with_input(BenchmarkId::new("sequential", 4), &tensors, |b, t| {
        b.iter(|| run_seq(t))
    });
    group.finish();
}

fn bench_spectrum_and_branching(c: &mut Criterion) {
    let weights: Vec<C2Weight> = (0..=8u32)
        .flat_map(|k| (0..=k).map(move |l| C2Weight::new(k, l).unwrap()))
        .collect();
    let branch_all_par = |ws: &Vec<C2Weight>| {
        exec::map_collect(ws, |w| {
            principal_branch(&c2_char(*w).unwrap()).unwrap().total_dimension()
        })
        .into_iter()
        .sum::<u64>()
    };
    let branch_all_seq = |ws: &Vec<C2Weight>| {
        exec::map_collect_seq(ws, |w| {
            principal_branch(&c2_char(*w).unwrap()).unwrap().total_dimension()
        })
        .into_iter()
        .sum::<u64>()
    };
    let mut group = c.benchmark_group("branching_sweep");
    group.sample_size(20);
    group.bench_with_input(BenchmarkId::new("parallel", weights.len()), &weights, |b, w| {
        b.iter(|| branch_all_par(w))
    });
    group.bench_with_input(
        BenchmarkId::new("sequential", weights.len()),
        &weights,
        |b, w| b.iter(|| branch_all_seq(w)),
    );
    group.finish();

    // the spectrum scan itself fans out internally when `parallel` is on
    c.bench_function("function_spectrum_scan_bound_40_3", |b| {
        b.iter(|| function_spectrum_scan(&rat(40, 3)).unwrap().len())
    });
}

criterion_group!(
    benches,
    bench_identity_suites,
    bench_sasaki_sweep,
    bench_spectrum_and_branching
);
criterion_main!(benches);
