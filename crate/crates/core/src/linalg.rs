//! Thin matrix-product helpers used by the dense-network stack.
//!
//! `matmul` splits the left operand into row blocks and multiplies the blocks
//! on the rayon pool when the `parallel` feature is enabled. Each output row
//! is produced by exactly one task with a fixed reduction order, so results
//! are bit-identical to the sequential path regardless of thread count.

use ndarray::{Array2, ArrayView2, Axis};

/// Minimum rows per parallel block; below this the plain product wins.
const MIN_BLOCK_ROWS: usize = 64;

pub fn matmul(a: &Array2<f64>, b: &Array2<f64>) -> Array2<f64> {
    matmul_view(a.view(), b.view())
}

#[cfg(feature = "parallel")]
pub fn matmul_view(a: ArrayView2<'_, f64>, b: ArrayView2<'_, f64>) -> Array2<f64> {
    use rayon::prelude::*;

    let m = a.nrows();
    let threads = rayon::current_num_threads();
    if threads <= 1 || m < 2 * MIN_BLOCK_ROWS {
        return a.dot(&b);
    }
    let block = (m / threads).max(MIN_BLOCK_ROWS);
    let chunks: Vec<_> = a.axis_chunks_iter(Axis(0), block).collect();
    let blocks: Vec<Array2<f64>> = chunks.into_par_iter().map(|rows| rows.dot(&b)).collect();
    let views: Vec<_> = blocks.iter().map(|c| c.view()).collect();
    ndarray::concatenate(Axis(0), &views).expect("row blocks share column count")
}

#[cfg(not(feature = "parallel"))]
pub fn matmul_view(a: ArrayView2<'_, f64>, b: ArrayView2<'_, f64>) -> Array2<f64> {
    a.dot(&b)
}
