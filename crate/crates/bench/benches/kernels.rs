//! Benchmarks for the hot kernels: dense elimination, normalization,
//! representation matrices and expansion assembly.

use criterion::{Criterion, criterion_group, criterion_main};
use std::hint::black_box;

use dendriform::freealg::tt_basis;
use dendriform::identities::build_expansion_matrix;
use dendriform::modlinalg::{Gf, ModMatrix};
use dendriform::products::{Expander, OperationKind};
use dendriform::symmetric::{NaturalRep, Partition, Perm};

fn gf() -> Gf {
    Gf::new(101, 7).unwrap()
}

fn random_matrix(rows: usize, cols: usize, seed: u64) -> ModMatrix {
    let mut m = ModMatrix::zeros(rows, cols, gf());
    let mut state = seed;
    for r in 0..rows {
        for c in 0..cols {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            m.set(r, c, ((state >> 33) % 101) as u8);
        }
    }
    m
}

fn bench_rcf(c: &mut Criterion) {
    let base = random_matrix(600, 900, 17);
    c.bench_function("rcf_600x900", |b| {
        b.iter(|| {
            let mut m = base.clone();
            black_box(m.rcf())
        })
    });
}

fn bench_normalize_degree7(c: &mut Criterion) {
    let basis = tt_basis(7).unwrap();
    let shape = basis.types()[40].clone();
    c.bench_function("expand_type_degree7", |b| {
        b.iter(|| {
            let mut ex = Expander::new(OperationKind::PreJordan, gf());
            black_box(ex.expansion_of_type(&shape).len())
        })
    });
}

fn bench_natural_rep(c: &mut Criterion) {
    let lambda = Partition::parse("421").unwrap();
    let perms: Vec<Perm> = (0..32)
        .map(|k| Perm::from_lex_rank(7, k * 157 % 5040))
        .collect();
    c.bench_function("natural_rep_421_32perms", |b| {
        b.iter(|| {
            let rep = NaturalRep::new(&lambda, gf()).unwrap();
            let mut acc = 0u64;
            for p in &perms {
                acc += rep.rep(p).get(0, 0) as u64;
            }
            black_box(acc)
        })
    });
}

fn bench_expansion_matrix_degree5(c: &mut Criterion) {
    c.bench_function("expansion_matrix_degree5_prelie", |b| {
        b.iter(|| {
            let m = build_expansion_matrix(5, OperationKind::PreLie, gf()).unwrap();
            black_box(m.rows())
        })
    });
}

criterion_group!(
    benches,
    bench_rcf,
    bench_normalize_degree7,
    bench_natural_rep,
    bench_expansion_matrix_degree5
);
criterion_main!(benches);
