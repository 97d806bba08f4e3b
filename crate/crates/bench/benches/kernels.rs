use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use kulideal::algebra::examples::{all_fixtures, dual_numbers};
use kulideal::dualnumbers::{hk_tables, hom_basis, k_rs_tables, oracle_hom, IndecObj};
use kulideal::hochschild::HochschildComplex;
use kulideal::kulshammer::{fingerprint, ideal_chain};
use kulideal::{Fp, Matrix};

fn row_reduction(c: &mut Criterion) {
    let mut group = c.benchmark_group("rref");
    for n in [16usize, 64, 128] {
        let fp = Fp::new(3).unwrap();
        // deterministic dense matrix with full-ish rank
        let m = Matrix::from_fn(fp, n, n, |i, j| ((i * 7 + j * 13 + i * j) % 3) as u32);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| black_box(m.kernel())));
    }
    group.finish();
}

fn algebra_invariants(c: &mut Criterion) {
    let fixtures = all_fixtures();
    c.bench_function("ideal_chain/all_fixtures", |b| b.iter(|| fixtures.iter().map(|(_, a)| ideal_chain(a, 3).k.len()).sum::<usize>()));
    let m2: Vec<_> = fixtures.iter().map(|(_, a)| a.matrix_algebra(2)).collect();
    c.bench_function("fingerprint/matrix_algebras", |b| b.iter(|| m2.iter().map(fingerprint).count()));
}

fn hochschild(c: &mut Criterion) {
    let mut group = c.benchmark_group("hochschild/dual_numbers");
    for p in [2u64, 3] {
        let alg = dual_numbers(p).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(p), &alg, |b, alg| {
            b.iter(|| {
                let complex = HochschildComplex::of_algebra(alg);
                (0..=6).map(|l| complex.cohomology_dim(l).unwrap()).sum::<usize>()
            })
        });
    }
    group.finish();
}

fn dual_number_category(c: &mut Criterion) {
    let fp = Fp::new(3).unwrap();
    let objs: Vec<IndecObj> = (-3..=3).flat_map(|m| (m..=3).map(move |n| IndecObj::new(m, n).unwrap())).collect();
    c.bench_function("hom_basis/window3", |b| {
        b.iter(|| objs.iter().flat_map(|&x| objs.iter().map(move |&y| hom_basis(x, y, 1).len())).sum::<usize>())
    });
    c.bench_function("oracle_hom/window3", |b| {
        b.iter(|| objs.iter().flat_map(|&x| objs.iter().map(move |&y| oracle_hom(fp, x, y, 1).unwrap().dim)).sum::<usize>())
    });
    let mut group = c.benchmark_group("tables");
    group.sample_size(10);
    for w in [6, 8] {
        group.bench_with_input(BenchmarkId::new("k_rs", w), &w, |b, &w| b.iter(|| k_rs_tables(fp, 1, -4..=4, 0..=4, w).unwrap().len()));
        group.bench_with_input(BenchmarkId::new("hk", w), &w, |b, &w| b.iter(|| hk_tables(fp, 1, -4..=4, 4, w).unwrap().len()));
    }
    group.finish();
}

criterion_group!(benches, row_reduction, algebra_invariants, hochschild, dual_number_category);
criterion_main!(benches);
