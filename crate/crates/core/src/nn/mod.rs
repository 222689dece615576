//! Minimal dense-network stack with hand-derived gradients.
//!
//! Fixed-topology ELU MLPs in double precision: batched forward/backward,
//! input gradients, analytic double-backprop for the Lipschitz penalty, and
//! Adam. No autodiff graph; every derivative here is validated against
//! central finite differences in the test suite.

mod adam;
mod checkpoint;
mod mlp;

pub use adam::{adam_step, AdamState};
pub use checkpoint::{load_checkpoint, save_checkpoint, CheckpointData, CheckpointMeta};
pub use mlp::{
    elu, elu_prime, elu_second, Cache, Grads, MlpParams, MlpSpec, PenaltyGrad,
};
