//! Planar soccer reinforcement-learning sandbox.
//!
//! A self-contained 2D soccer world with a calibrated virtual perception
//! channel, particle-filter field localization, and a multi-critic PPO +
//! adversarial-motion-prior training stack built on a small hand-rolled
//! dense-network core.

#[cfg(feature = "blas")]
extern crate blas_src;

pub mod config;
pub mod error;
pub mod field;
pub mod geom;
pub mod linalg;
pub mod nn;
pub mod rng;
