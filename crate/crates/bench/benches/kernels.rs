//! Exact linear-algebra kernel benchmarks: matrix chains, row reduction,
//! characteristic polynomials, root isolation.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use ntpack::algebraic::largest_real_root_gt;
use ntpack::rational::{rat_int, Rat};
use ntpack::{char_poly, mat_mul, row_reduce, Poly, RatMatrix};

fn chain_matrices(n: usize) -> Vec<RatMatrix> {
    // alternate the two braid shears
    let a = RatMatrix::from_int_rows(&[&[1, 1], &[0, 1]]);
    let b = RatMatrix::from_int_rows(&[&[1, 0], &[1, 1]]);
    (0..n)
        .map(|i| if i % 2 == 0 { a.clone() } else { b.clone() })
        .collect()
}

fn bench_matrix_chain(c: &mut Criterion) {
    let chain = chain_matrices(256);
    c.bench_function("matrix_chain_256", |bench| {
        bench.iter(|| {
            let mut acc = RatMatrix::identity(2);
            for m in &chain {
                acc = mat_mul(m, &acc).unwrap();
            }
            black_box(acc)
        })
    });
}

fn bench_row_reduce(c: &mut Criterion) {
    let dim = 12;
    let m = RatMatrix::new(
        dim,
        dim,
        (0..dim * dim)
            .map(|i| Rat::new(rat_int((i * 37 % 19) as i64 - 9).numer().clone(), rat_int(1 + (i % 7) as i64).numer().clone()))
            .collect(),
    );
    c.bench_function("row_reduce_12x12", |bench| {
        bench.iter(|| black_box(row_reduce(&m)))
    });
}

fn bench_char_poly_and_roots(c: &mut Criterion) {
    let m = RatMatrix::from_int_rows(&[
        &[3, 5, 1, 0],
        &[1, 2, 0, 1],
        &[0, 1, 4, 1],
        &[2, 0, 1, 3],
    ]);
    c.bench_function("char_poly_4x4", |bench| {
        bench.iter(|| black_box(char_poly(&m).unwrap()))
    });
    let p = Poly::from_ints(&[1, -5, 1]);
    c.bench_function("largest_root_quadratic", |bench| {
        bench.iter(|| black_box(largest_real_root_gt(&p, &rat_int(1)).unwrap()))
    });
}

criterion_group!(benches, bench_matrix_chain, bench_row_reduce, bench_char_poly_and_roots);
criterion_main!(benches);
