//! Criterion suite comparing the sequential and data-parallel execution
//! paths of the compute-heavy inner loops.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ndarray::Array2;

fn bench_gemm(c: &mut Criterion) {
    let mut group = c.benchmark_group("dense/gemm");
    group.sample_size(10);
    for &(m, k, n) in &[(256usize, 1050usize, 1024usize), (3200, 1050, 1024)] {
        let a = Array2::<f64>::from_elem((m, k), 0.5);
        let b = Array2::<f64>::from_elem((k, n), 0.25);
        group.bench_with_input(
            BenchmarkId::new("single", format!("{m}x{k}x{n}")),
            &(&a, &b),
            |bench, (a, b)| bench.iter(|| a.dot(*b)),
        );
        #[cfg(feature = "parallel")]
        group.bench_with_input(
            BenchmarkId::new("row_chunked", format!("{m}x{k}x{n}")),
            &(&a, &b),
            |bench, (a, b)| bench.iter(|| soccer_core::linalg::matmul(a, b)),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_gemm);
criterion_main!(benches);
