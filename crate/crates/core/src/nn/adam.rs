//! Adam with bias correction (beta1 0.9, beta2 0.999, eps 1e-8).

use ndarray::{Array1, Array2};

use super::mlp::{Grads, MlpParams};

const BETA1: f64 = 0.9;
const BETA2: f64 = 0.999;
const EPS: f64 = 1e-8;

/// First/second moment accumulators shaped like the parameters they track.
#[derive(Debug, Clone)]
pub struct AdamState {
    m_weights: Vec<Array2<f64>>,
    v_weights: Vec<Array2<f64>>,
    m_biases: Vec<Array1<f64>>,
    v_biases: Vec<Array1<f64>>,
    step: u64,
}

impl AdamState {
    pub fn new(params: &MlpParams) -> Self {
        let z = params.zeros_like();
        Self {
            m_weights: z.weights.clone(),
            v_weights: z.weights,
            m_biases: z.biases.clone(),
            v_biases: z.biases,
            step: 0,
        }
    }

    pub fn step_count(&self) -> u64 {
        self.step
    }
}

/// One Adam update in place.
pub fn adam_step(params: &mut MlpParams, grads: &Grads, state: &mut AdamState, lr: f64) {
    state.step += 1;
    let t = state.step as i32;
    let bc1 = 1.0 - BETA1.powi(t);
    let bc2 = 1.0 - BETA2.powi(t);

    for l in 0..params.weights.len() {
        ndarray::azip!((p in &mut params.weights[l], g in &grads.weights[l],
                        m in &mut state.m_weights[l], v in &mut state.v_weights[l]) {
            update(p, *g, m, v, lr, bc1, bc2)
        });
        ndarray::azip!((p in &mut params.biases[l], g in &grads.biases[l],
                        m in &mut state.m_biases[l], v in &mut state.v_biases[l]) {
            update(p, *g, m, v, lr, bc1, bc2)
        });
    }
}

#[inline]
fn update(p: &mut f64, g: f64, m: &mut f64, v: &mut f64, lr: f64, bc1: f64, bc2: f64) {
    *m = BETA1 * *m + (1.0 - BETA1) * g;
    *v = BETA2 * *v + (1.0 - BETA2) * g * g;
    let m_hat = *m / bc1;
    let v_hat = *v / bc2;
    *p -= lr * m_hat / (v_hat.sqrt() + EPS);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nn::MlpSpec;
    use crate::rng::{RngStream, StreamRole};

    fn small_params() -> MlpParams {
        let mut rng = RngStream::new(3, StreamRole::Learner, 0);
        MlpParams::init(MlpSpec::new(&[2, 4, 1]).unwrap(), &mut rng)
    }

    #[test]
    fn zero_gradient_leaves_params_unchanged() {
        let mut params = small_params();
        let before = params.clone();
        let grads = params.zeros_like();
        let mut state = AdamState::new(&params);
        adam_step(&mut params, &grads, &mut state, 1e-3);
        assert_eq!(params.weights[0], before.weights[0]);
        assert_eq!(params.biases[0], before.biases[0]);
    }

    #[test]
    fn first_step_moves_by_lr_times_sign() {
        let mut params = small_params();
        let before = params.clone();
        let mut grads = params.zeros_like();
        grads.weights[0][(0, 0)] = 0.7;
        grads.weights[0][(1, 2)] = -2.3;
        let mut state = AdamState::new(&params);
        let lr = 1e-2;
        adam_step(&mut params, &grads, &mut state, lr);
        // Bias-corrected first step: m_hat = g, v_hat = g^2, so the update is
        // -lr * g / (|g| + eps) ~ -lr * sign(g).
        let d00 = params.weights[0][(0, 0)] - before.weights[0][(0, 0)];
        let d12 = params.weights[0][(1, 2)] - before.weights[0][(1, 2)];
        assert!((d00 + lr).abs() < 1e-8);
        assert!((d12 - lr).abs() < 1e-8);
        assert_eq!(state.step_count(), 1);
    }

    #[test]
    fn quadratic_bowl_converges() {
        // Minimize |p|^2 over every parameter; gradients are 2p.
        let mut params = small_params();
        params.biases[0].fill(0.5);
        let mut state = AdamState::new(&params);
        for _ in 0..500 {
            let mut grads = params.zeros_like();
            for l in 0..params.weights.len() {
                grads.weights[l] = params.weights[l].mapv(|p| 2.0 * p);
                grads.biases[l] = params.biases[l].mapv(|p| 2.0 * p);
            }
            adam_step(&mut params, &grads, &mut state, 1e-2);
        }
        let norm_sq: f64 = params
            .weights
            .iter()
            .map(|w| w.iter().map(|v| v * v).sum::<f64>())
            .sum::<f64>()
            + params
                .biases
                .iter()
                .map(|b| b.iter().map(|v| v * v).sum::<f64>())
                .sum::<f64>();
        assert!(norm_sq.sqrt() < 1e-3, "|p| = {}", norm_sq.sqrt());
    }
}
