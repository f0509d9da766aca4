//! Benchmarks for the hot core operations: algebra construction, Jacobi
//! verification, the derivation solve, row reduction, and the filtration
//! round-trip.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use supergrade_core::catalog::cartan::{CartanFamily, CartanModel};
use supergrade_core::catalog::depthone::{spe_depth_one, SpeRow};
use supergrade_core::catalog::matrixfam::{psl, spe};
use supergrade_core::derivations::derivations;
use supergrade_core::filtration::{associated_graded, weisfeiler_filtration};
use supergrade_core::scalar;
use supergrade_core::subspace::Subspace;
use supergrade_core::svec::SVec;

fn construct(c: &mut Criterion) {
    c.bench_function("construct spe(4)", |b| b.iter(|| spe(4).unwrap().alg));
    c.bench_function("construct W(3)", |b| {
        b.iter(|| CartanModel::build(CartanFamily::W, 3).unwrap().alg)
    });
}

fn jacobi(c: &mut Criterion) {
    let alg = psl(3).unwrap().alg;
    c.bench_function("jacobi psl(3|3)", |b| b.iter(|| alg.check_jacobi().unwrap()));
}

fn derivation_solve(c: &mut Criterion) {
    let alg = spe(3).unwrap().alg;
    c.bench_function("derivations spe(3)", |b| b.iter(|| derivations(&alg)));
}

fn row_reduction(c: &mut Criterion) {
    // dense-ish random-looking rational rows, deterministic seed
    let dim = 40usize;
    let rows: Vec<SVec> = (0..30)
        .map(|i| {
            (0..dim)
                .filter(|j| (i * 7 + j * 13) % 3 != 0)
                .map(|j| (j, scalar::ratio((i * j + 1) as i64, (j + 2) as i64)))
                .collect()
        })
        .collect();
    c.bench_function("rref 30x40 rational", |b| {
        b.iter_batched(
            || rows.clone(),
            |rows| Subspace::from_rows(dim, rows),
            BatchSize::SmallInput,
        )
    });
}

fn filtration_round_trip(c: &mut Criterion) {
    let (r, g) = spe_depth_one(3, SpeRow::Node(1)).unwrap();
    c.bench_function("filtration round-trip spe(3)", |b| {
        b.iter(|| {
            let filt = weisfeiler_filtration(&r.alg, &g.nonneg_part());
            associated_graded(&r.alg, &filt).unwrap()
        })
    });
}

criterion_group!(
    benches,
    construct,
    jacobi,
    derivation_solve,
    row_reduction,
    filtration_round_trip
);
criterion_main!(benches);
