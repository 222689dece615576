//! ELU multilayer perceptron with manual forward/backward passes.
//!
//! Layout conventions:
//! - activations are row batches, `[batch, dim]`
//! - weights are stored `[fan_in, fan_out]`, so `z = a @ w + b`
//! - `backward` returns gradient SUMS over the batch; callers that want a
//!   mean scale the upstream seed instead.

use ndarray::{Array1, Array2, ArrayView2, Axis};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::matmul_view;
use crate::rng::RngStream;

/// ELU with alpha = 1.
#[inline]
pub fn elu(x: f64) -> f64 {
    if x > 0.0 {
        x
    } else {
        x.exp() - 1.0
    }
}

/// First derivative of ELU. Continuous at 0 (both branches give 1).
#[inline]
pub fn elu_prime(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else {
        x.exp()
    }
}

/// Second derivative of ELU, one-sided 0 at exactly 0.
#[inline]
pub fn elu_second(x: f64) -> f64 {
    if x >= 0.0 {
        0.0
    } else {
        x.exp()
    }
}

/// Network topology: `layer_sizes[0]` is the input width, the last entry the
/// output width, everything between a hidden layer. Hidden layers use ELU,
/// the output is linear.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MlpSpec {
    pub layer_sizes: Vec<usize>,
}

impl MlpSpec {
    pub fn new(layer_sizes: &[usize]) -> Result<Self, Error> {
        if layer_sizes.len() < 3 {
            return Err(Error::Shape(format!(
                "need at least one hidden layer, got sizes {layer_sizes:?}"
            )));
        }
        if layer_sizes.iter().any(|&w| w == 0) {
            return Err(Error::Shape("zero-width layer".into()));
        }
        Ok(Self {
            layer_sizes: layer_sizes.to_vec(),
        })
    }

    #[inline]
    pub fn input_dim(&self) -> usize {
        self.layer_sizes[0]
    }

    #[inline]
    pub fn output_dim(&self) -> usize {
        *self.layer_sizes.last().unwrap()
    }

    #[inline]
    pub fn n_layers(&self) -> usize {
        self.layer_sizes.len() - 1
    }
}

/// Dense parameters for one MLP.
#[derive(Debug, Clone)]
pub struct MlpParams {
    pub spec: MlpSpec,
    /// Per layer, `[fan_in, fan_out]`.
    pub weights: Vec<Array2<f64>>,
    pub biases: Vec<Array1<f64>>,
}

/// Parameter gradients, shaped like [`MlpParams`].
#[derive(Debug, Clone)]
pub struct Grads {
    pub weights: Vec<Array2<f64>>,
    pub biases: Vec<Array1<f64>>,
}

/// Stashed forward-pass intermediates for the backward pass.
pub struct Cache {
    /// `a[0]` is the input batch, `a[l]` the post-activation of layer l.
    activations: Vec<Array2<f64>>,
    /// Pre-activations of each layer.
    pre_activations: Vec<Array2<f64>>,
}

/// Result of the Lipschitz-penalty double-backprop.
pub struct PenaltyGrad {
    /// Mean of `(|grad_x D| - 1)^2` over the batch.
    pub penalty: f64,
    /// Gradient of that mean with respect to the parameters.
    pub grads: Grads,
}

impl MlpParams {
    /// Uniform `+-sqrt(6 / (fan_in + fan_out))` weights, zero biases.
    pub fn init(spec: MlpSpec, rng: &mut RngStream) -> Self {
        let mut weights = Vec::with_capacity(spec.n_layers());
        let mut biases = Vec::with_capacity(spec.n_layers());
        for l in 0..spec.n_layers() {
            let fan_in = spec.layer_sizes[l];
            let fan_out = spec.layer_sizes[l + 1];
            let bound = (6.0 / (fan_in + fan_out) as f64).sqrt();
            let w = Array2::from_shape_fn((fan_in, fan_out), |_| rng.random_range(-bound..bound));
            weights.push(w);
            biases.push(Array1::zeros(fan_out));
        }
        Self {
            spec,
            weights,
            biases,
        }
    }

    /// Scale the final layer in place (used to start policy heads near zero).
    pub fn scale_last_layer(&mut self, factor: f64) {
        let l = self.weights.len() - 1;
        self.weights[l].mapv_inplace(|w| w * factor);
        self.biases[l].mapv_inplace(|b| b * factor);
    }

    pub fn zeros_like(&self) -> Grads {
        Grads {
            weights: self
                .weights
                .iter()
                .map(|w| Array2::zeros(w.raw_dim()))
                .collect(),
            biases: self
                .biases
                .iter()
                .map(|b| Array1::zeros(b.raw_dim()))
                .collect(),
        }
    }

    pub fn n_params(&self) -> usize {
        self.weights.iter().map(|w| w.len()).sum::<usize>()
            + self.biases.iter().map(|b| b.len()).sum::<usize>()
    }

    /// Forward pass over a row batch.
    pub fn forward(&self, x: ArrayView2<'_, f64>) -> Result<(Array2<f64>, Cache), Error> {
        if x.ncols() != self.spec.input_dim() {
            return Err(Error::Shape(format!(
                "input width {} != spec input {}",
                x.ncols(),
                self.spec.input_dim()
            )));
        }
        let n_layers = self.spec.n_layers();
        let mut activations = Vec::with_capacity(n_layers + 1);
        let mut pre_activations = Vec::with_capacity(n_layers);
        activations.push(x.to_owned());
        for l in 0..n_layers {
            let mut z = matmul_view(activations[l].view(), self.weights[l].view());
            z += &self.biases[l];
            if l + 1 < n_layers {
                let a = z.mapv(elu);
                pre_activations.push(z);
                activations.push(a);
            } else {
                pre_activations.push(z.clone());
                activations.push(z);
            }
        }
        let y = activations.last().unwrap().clone();
        Ok((
            y,
            Cache {
                activations,
                pre_activations,
            },
        ))
    }

    /// Convenience single-sample forward.
    pub fn forward_one(&self, x: &[f64]) -> Result<Vec<f64>, Error> {
        let xa = Array2::from_shape_vec((1, x.len()), x.to_vec())
            .map_err(|e| Error::Shape(e.to_string()))?;
        let (y, _) = self.forward(xa.view())?;
        Ok(y.row(0).to_vec())
    }

    /// Backward pass. `dy` seeds the output gradient (same shape as the
    /// forward output); returns the input gradient and parameter gradient
    /// sums over the batch. Pass `want_dx = false` to skip the input-gradient
    /// product of the first layer when the caller does not need it.
    pub fn backward(
        &self,
        cache: &Cache,
        dy: ArrayView2<'_, f64>,
        want_dx: bool,
    ) -> Result<(Option<Array2<f64>>, Grads), Error> {
        let n_layers = self.spec.n_layers();
        if dy.ncols() != self.spec.output_dim() || dy.nrows() != cache.activations[0].nrows() {
            return Err(Error::Shape("dy shape mismatch".into()));
        }
        let mut grads = self.zeros_like();
        // dz of the current layer, starting from the linear output.
        let mut dz = dy.to_owned();
        for l in (0..n_layers).rev() {
            grads.weights[l] = matmul_view(cache.activations[l].t(), dz.view());
            grads.biases[l] = dz.sum_axis(Axis(0));
            if l > 0 {
                let mut da = matmul_view(dz.view(), self.weights[l].t());
                da.zip_mut_with(&cache.pre_activations[l - 1], |d, &z| *d *= elu_prime(z));
                dz = da;
            } else if want_dx {
                return Ok((Some(matmul_view(dz.view(), self.weights[0].t())), grads));
            }
        }
        Ok((None, grads))
    }

    /// Per-row gradient of a scalar-output network with respect to its input.
    pub fn input_gradient(&self, x: ArrayView2<'_, f64>) -> Result<Array2<f64>, Error> {
        if self.spec.output_dim() != 1 {
            return Err(Error::Shape(format!(
                "input_gradient needs a scalar output, got {}",
                self.spec.output_dim()
            )));
        }
        let (_, cache) = self.forward(x)?;
        let dy = Array2::ones((x.nrows(), 1));
        let (dx, _) = self.backward(&cache, dy.view(), true)?;
        Ok(dx.expect("want_dx"))
    }

    /// Mean Lipschitz penalty `(|grad_x D| - 1)^2` over the batch and its
    /// exact parameter gradient via analytic double-backprop.
    ///
    /// A tangent (directional-derivative) pass is threaded along each
    /// sample's own input gradient `g`; its scalar output is `|g|^2`.
    /// Backpropagating through the joint primal+tangent graph, with `g`
    /// frozen as the direction, yields the parameter gradient. ELU's
    /// one-sided second derivative enters wherever the tangent crosses a
    /// hidden activation.
    pub fn penalty_param_grad(&self, x: ArrayView2<'_, f64>) -> Result<PenaltyGrad, Error> {
        if self.spec.output_dim() != 1 {
            return Err(Error::Shape("penalty needs a scalar output".into()));
        }
        let batch = x.nrows();
        let n_layers = self.spec.n_layers();
        let (_, cache) = self.forward(x)?;

        // Per-sample input gradients; these are the tangent directions.
        let dy = Array2::ones((batch, 1));
        let (g, _) = self.backward(&cache, dy.view(), true)?;
        let g = g.expect("want_dx");

        // Tangent forward along u = g:
        //   t_0 = u, r_l = t_l w_l, t_{l+1} = elu'(z_l) * r_l (linear last).
        let mut tangents: Vec<Array2<f64>> = Vec::with_capacity(n_layers + 1);
        let mut tangent_pre: Vec<Array2<f64>> = Vec::with_capacity(n_layers);
        tangents.push(g.clone());
        for l in 0..n_layers {
            let r = matmul_view(tangents[l].view(), self.weights[l].view());
            if l + 1 < n_layers {
                let mut t = r.clone();
                t.zip_mut_with(&cache.pre_activations[l], |t, &z| *t *= elu_prime(z));
                tangent_pre.push(r);
                tangents.push(t);
            } else {
                tangent_pre.push(r.clone());
                tangents.push(r);
            }
        }

        // Penalty from |g| directly; seed d(mean penalty)/dS with S = u.g
        // evaluated at u frozen, which doubles the chain factor:
        //   dP/dtheta = 2 (n - 1)/n * dS/dtheta|_{u const}.
        // Degenerate |g| ~ 0 contributes penalty 1 with zero subgradient.
        let mut penalty = 0.0;
        let mut seed = Array2::zeros((batch, 1));
        for i in 0..batch {
            let n = g.row(i).dot(&g.row(i)).sqrt();
            penalty += (n - 1.0).powi(2);
            if n > 1e-12 {
                seed[(i, 0)] = 2.0 * (n - 1.0) / n / batch as f64;
            }
        }
        penalty /= batch as f64;

        // Reverse sweep. Adjoints per layer l:
        //   rho  = dS/dr_l, tau = dS/dt_l, zeta = dS/dz_l, alpha = dS/da_l.
        // Chain rules:
        //   r_l = t_l w_l        -> dW_l += t_l' rho;  tau_l = rho w_l'
        //   t_{l+1} = elu'(z_l) r_l (l < last)
        //                        -> rho_l += tau_{l+1} elu'(z_l)
        //                           zeta_l += tau_{l+1} r_l elu''(z_l)
        //   z_l = a_l w_l + b_l  -> dW_l += a_l' zeta; db_l += sum zeta;
        //                           alpha_l = zeta w_l'
        //   a_l = elu(z_{l-1})   -> zeta_{l-1} += alpha_l elu'(z_{l-1})
        let mut grads = self.zeros_like();
        let mut rho = seed;
        let mut zeta = Array2::zeros((batch, 1));
        for l in (0..n_layers).rev() {
            grads.weights[l] = matmul_view(tangents[l].t(), rho.view());
            grads.weights[l] += &matmul_view(cache.activations[l].t(), zeta.view());
            grads.biases[l] = zeta.sum_axis(Axis(0));
            if l == 0 {
                break;
            }
            let tau_below = matmul_view(rho.view(), self.weights[l].t());
            let alpha_below = matmul_view(zeta.view(), self.weights[l].t());

            let z_prev = &cache.pre_activations[l - 1];
            let mut rho_prev = tau_below.clone();
            rho_prev.zip_mut_with(z_prev, |v, &z| *v *= elu_prime(z));

            let mut zeta_prev = tau_below;
            zeta_prev.zip_mut_with(&tangent_pre[l - 1], |v, &r| *v *= r);
            zeta_prev.zip_mut_with(z_prev, |v, &z| *v *= elu_second(z));
            let mut alpha_term = alpha_below;
            alpha_term.zip_mut_with(z_prev, |v, &z| *v *= elu_prime(z));
            zeta_prev += &alpha_term;

            rho = rho_prev;
            zeta = zeta_prev;
        }

        Ok(PenaltyGrad { penalty, grads })
    }
}

impl Grads {
    pub fn scaled(mut self, factor: f64) -> Grads {
        for w in &mut self.weights {
            w.mapv_inplace(|v| v * factor);
        }
        for b in &mut self.biases {
            b.mapv_inplace(|v| v * factor);
        }
        self
    }

    pub fn add_scaled(&mut self, other: &Grads, factor: f64) {
        for (a, b) in self.weights.iter_mut().zip(&other.weights) {
            a.scaled_add(factor, b);
        }
        for (a, b) in self.biases.iter_mut().zip(&other.biases) {
            a.scaled_add(factor, b);
        }
    }
}

/// Build an exactly linear scalar network `y = w.x + b` out of one ELU hidden
/// layer: the hidden layer is the identity shifted into ELU's linear region,
/// and the shift is cancelled in the output bias. Exact for `|x_i| < shift`.
pub fn exact_linear_net(w: &[f64], b: f64, shift: f64) -> MlpParams {
    let dim = w.len();
    let spec = MlpSpec::new(&[dim, dim, 1]).unwrap();
    let mut w1 = Array2::zeros((dim, dim));
    for i in 0..dim {
        w1[(i, i)] = 1.0;
    }
    let b1 = Array1::from_elem(dim, shift);
    let w2 = Array2::from_shape_vec((dim, 1), w.to_vec()).unwrap();
    let b2 = Array1::from_elem(1, b - shift * w.iter().sum::<f64>());
    MlpParams {
        spec,
        weights: vec![w1, w2],
        biases: vec![b1, b2],
    }
}
