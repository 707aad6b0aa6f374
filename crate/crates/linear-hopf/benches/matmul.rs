use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use linear_hopf::{fixtures, shear, Matrix, Which};

fn square_of(n: usize) -> Matrix {
    let data: Vec<i64> = (0..n * n).map(|k| ((k * 7 + 3) % 11) as i64 - 5).collect();
    Matrix::from_ints(n, n, &data)
}

fn bench_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("mul");
    for n in [16usize, 36, 64] {
        let a = square_of(n);
        group.bench_with_input(BenchmarkId::new("mul_seq", n), &a, |b, a| b.iter(|| black_box(a.mul_seq(a).unwrap())));
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("mul_par", n), &a, |b, a| b.iter(|| black_box(a.mul_par(a).unwrap())));
    }
    group.finish();

    // shear of Q[S₃]: 36 × 36 products of Kronecker factors
    let h = fixtures::s3();
    c.bench_function("shear_se_s3", |b| b.iter(|| black_box(shear(&h, Which::SE).unwrap())));
}

criterion_group!(benches, bench_mul);
criterion_main!(benches);
