//! Planar soccer world: robot and ball dynamics, kick mechanics,
//! perturbation events, episode lifecycle, and reward computation.

mod reward;
mod state;
mod world;

pub use reward::{compute_rewards, RewardBreakdown, RewardWeights};
pub use state::{
    ActionVector, BallState, EpisodeState, EventCounters, KickEvent, RobotState, StepOutcome,
    TerminationReason, World,
};
pub use world::SoccerEnv;

use serde::{Deserialize, Serialize};

/// Simulator parameters. Defaults implement the documented planar dynamics
/// at 50 Hz with a 60 s episode budget.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct EnvConfig {
    /// Control interval, seconds.
    pub dt: f64,
    /// Episode time limit, seconds.
    pub time_limit: f64,

    /// Commanded body-velocity limits (|vx|, |vy|), m/s.
    pub vel_limit_x: f64,
    pub vel_limit_y: f64,
    /// Commanded yaw-rate limit, rad/s.
    pub yaw_rate_limit: f64,
    /// Head joint rate limit, rad/s.
    pub head_rate_limit: f64,
    /// Head yaw limit (symmetric), rad.
    pub head_yaw_limit: f64,
    /// Head pitch limits, rad.
    pub head_pitch_min: f64,
    pub head_pitch_max: f64,
    /// Gait cadence range, Hz.
    pub cadence_min: f64,
    pub cadence_max: f64,

    /// First-order velocity-tracking time constant, s.
    pub vel_tau: f64,
    /// Linear acceleration cap, m/s^2.
    pub accel_cap: f64,
    /// Cadence-tracking time constant, s.
    pub cadence_tau: f64,

    /// Ball friction deceleration range, m/s^2.
    pub ball_friction_min: f64,
    pub ball_friction_max: f64,
    /// Ball speed below which it stops, m/s.
    pub ball_stop_speed: f64,

    /// Kick contact radius, m.
    pub kick_radius: f64,
    /// Kick speed = base + gain * trigger, m/s.
    pub kick_speed_base: f64,
    pub kick_speed_gain: f64,
    /// Trigger threshold above which a kick fires.
    pub kick_trigger_threshold: f64,

    /// Per-step perturbation probabilities and magnitudes.
    pub p_ball_impulse: f64,
    pub ball_impulse_max_speed: f64,
    pub p_ball_teleport: f64,
    pub p_robot_push: f64,
    pub robot_push_max_speed: f64,
    /// Master switch; evaluation runs disable all three events.
    pub events_enabled: bool,

    /// Camera height used by the head-pitch alignment target, m.
    pub camera_height: f64,

    /// Stagnation detector: speed floor, window length in steps, and the
    /// robot-ball distance above which standing still is penalized.
    pub stagnation_speed: f64,
    pub stagnation_steps: u32,
    pub stagnation_distance: f64,

    pub reward: RewardWeights,
}

impl Default for EnvConfig {
    fn default() -> Self {
        Self {
            dt: 0.02,
            time_limit: 60.0,
            vel_limit_x: 1.2,
            vel_limit_y: 0.8,
            yaw_rate_limit: 2.5,
            head_rate_limit: 3.0,
            head_yaw_limit: 1.4,
            head_pitch_min: -1.0,
            head_pitch_max: 0.3,
            cadence_min: 1.0,
            cadence_max: 3.0,
            vel_tau: 0.15,
            accel_cap: 3.0,
            cadence_tau: 0.3,
            ball_friction_min: 0.3,
            ball_friction_max: 0.8,
            ball_stop_speed: 0.02,
            kick_radius: 0.35,
            kick_speed_base: 1.5,
            kick_speed_gain: 3.5,
            kick_trigger_threshold: 0.5,
            p_ball_impulse: 0.002,
            ball_impulse_max_speed: 2.0,
            p_ball_teleport: 0.001,
            p_robot_push: 0.002,
            robot_push_max_speed: 0.5,
            events_enabled: true,
            camera_height: 0.55,
            stagnation_speed: 0.05,
            stagnation_steps: 50,
            stagnation_distance: 0.5,
            reward: RewardWeights::default(),
        }
    }
}

/// Gait-phase windows (radians) during which a kick can fire: one per leg
/// swing, half a cycle apart.
pub const SWING_WINDOWS: [(f64, f64); 2] = [
    (0.3 * std::f64::consts::PI, 0.7 * std::f64::consts::PI),
    (1.3 * std::f64::consts::PI, 1.7 * std::f64::consts::PI),
];

/// True when the gait phase sits inside either swing window.
#[inline]
pub fn in_swing_window(phase: f64) -> bool {
    SWING_WINDOWS
        .iter()
        .any(|&(lo, hi)| phase >= lo && phase <= hi)
}
