//! Seeded, stream-addressed randomness.
//!
//! Every consumer of randomness (each environment instance, its perception
//! channel, its event generator, the initializer, the learner) owns its own
//! `RngStream`, derived from the run seed plus a `(role, index)` address.
//! Draws therefore depend only on the seed and the stream address, never on
//! worker scheduling.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Roles carve the 64-bit stream id space so no two consumers collide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamRole {
    /// Episode initialization (poses, ball, friction).
    Init = 0,
    /// Perturbation events (ball impulse/teleport, robot push).
    Events = 1,
    /// Virtual perception (detection, noise, latency, frequency).
    Perception = 2,
    /// Dead-reckoning noise and particle-filter jitter/resampling.
    Odometry = 3,
    /// Policy action sampling.
    Policy = 4,
    /// Expert reference-motion generation.
    Expert = 5,
    /// Learner-side batching and interpolation draws.
    Learner = 6,
    /// Evaluation harness.
    Eval = 7,
}

/// A counter-based random stream: ChaCha8 keyed by the run seed with the
/// stream address in the cipher's stream field.
#[derive(Debug, Clone)]
pub struct RngStream {
    inner: ChaCha8Rng,
}

impl RngStream {
    /// Stream for a `(role, index)` pair under `seed`. `index` is typically
    /// an environment number; global consumers use index 0.
    pub fn new(seed: u64, role: StreamRole, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        debug_assert!(index < 1 << 56, "stream index overflows role tag");
        rng.set_stream(((role as u64) << 56) | index);
        Self { inner: rng }
    }
}

impl rand_chacha::rand_core::RngCore for RngStream {
    #[inline]
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    #[inline]
    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    #[inline]
    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.inner.fill_bytes(dest)
    }
}
