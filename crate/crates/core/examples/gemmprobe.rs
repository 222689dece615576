use ndarray::Array2;
use soccer_core as _;
use std::time::Instant;
fn main() {
    for threads in ["1", "2"] {
        std::env::set_var("OPENBLAS_NUM_THREADS", threads);
        let m = 3200; let k = 1050; let n = 1024;
        let a = Array2::<f64>::from_elem((m, k), 0.5);
        let b = Array2::<f64>::from_elem((k, n), 0.25);
        let _ = a.dot(&b);
        let t = Instant::now();
        let reps = 5;
        for _ in 0..reps { let _ = a.dot(&b); }
        let dt = t.elapsed().as_secs_f64() / reps as f64;
        let gflops = 2.0 * (m*k*n) as f64 / dt / 1e9;
        println!("OPENBLAS_NUM_THREADS={threads}: {:.0} ms  {:.1} GFLOP/s", dt*1e3, gflops);
    }
}
