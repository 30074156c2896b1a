//! Word-evaluation benchmarks: the per-letter cost grows with the bit
//! length of the coordinates, so iterating a word `m` times is quadratic in
//! `m` overall.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use ntpack::algorithms::{evaluate_point, guess_and_check};
use ntpack::{builtin_b3, builtin_ydelta, Word};

fn bench_word_powers(c: &mut Criterion) {
    let ledger = builtin_b3();
    let word = Word::parse("s2 s1' s2 s1 s1 s1", &ledger.generator_names()).unwrap();
    let mut group = c.benchmark_group("word_powers");
    group.sample_size(20);
    for m in [64usize, 128, 256, 512] {
        group.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, &m| {
            b.iter(|| {
                let mut p = ledger.basepoint.clone();
                for _ in 0..m {
                    p = evaluate_point(&ledger, &word, &p).unwrap();
                }
                black_box(p)
            })
        });
    }
    group.finish();
}

fn bench_analyses(c: &mut Criterion) {
    let b3 = builtin_b3();
    let w = Word::parse("s2 s1' s2 s1 s1 s1", &b3.generator_names()).unwrap();
    c.bench_function("guess_and_check_b3", |bench| {
        bench.iter(|| black_box(guess_and_check(&b3, &w, 8).unwrap()))
    });
    let y = builtin_ydelta();
    let g = Word::parse("b' a", &y.generator_names()).unwrap();
    c.bench_function("guess_and_check_ydelta", |bench| {
        bench.iter(|| black_box(guess_and_check(&y, &g, 8).unwrap()))
    });
}

criterion_group!(benches, bench_word_powers, bench_analyses);
criterion_main!(benches);
