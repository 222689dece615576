//! World-state containers and the action vector.

use serde::{Deserialize, Serialize};

use crate::geom::{Pose2, Vec2};
use crate::mirror::ACTION_DIM;

use super::EnvConfig;

/// Robot ground truth: planar base plus head joints and gait clock.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RobotState {
    pub pose: Pose2,
    /// Body-frame base velocity, m/s.
    pub vel_body: Vec2,
    /// Yaw rate, rad/s.
    pub yaw_rate: f64,
    /// Head yaw within symmetric limits, rad.
    pub head_yaw: f64,
    /// Head pitch, rad; negative looks down.
    pub head_pitch: f64,
    /// Gait phase in [0, 2*pi).
    pub gait_phase: f64,
    /// Step frequency, Hz.
    pub cadence: f64,
}

/// Ball ground truth.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BallState {
    pub position: Vec2,
    pub velocity: Vec2,
    /// Rolling deceleration, m/s^2; resampled on every ball reset.
    pub friction_decel: f64,
}

/// The 8-dimensional action. Components are clamped to the configured limits
/// before integration.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ActionVector {
    pub vx: f64,
    pub vy: f64,
    pub yaw_rate: f64,
    pub head_yaw_rate: f64,
    pub head_pitch_rate: f64,
    pub cadence: f64,
    pub kick_trigger: f64,
    pub kick_dir: f64,
}

impl ActionVector {
    pub fn from_array(a: &[f64; ACTION_DIM]) -> Self {
        Self {
            vx: a[0],
            vy: a[1],
            yaw_rate: a[2],
            head_yaw_rate: a[3],
            head_pitch_rate: a[4],
            cadence: a[5],
            kick_trigger: a[6],
            kick_dir: a[7],
        }
    }

    pub fn to_array(self) -> [f64; ACTION_DIM] {
        [
            self.vx,
            self.vy,
            self.yaw_rate,
            self.head_yaw_rate,
            self.head_pitch_rate,
            self.cadence,
            self.kick_trigger,
            self.kick_dir,
        ]
    }

    /// Clamp every channel to its configured limit.
    pub fn clamped(&self, cfg: &EnvConfig) -> ActionVector {
        let half_pi = std::f64::consts::FRAC_PI_2;
        ActionVector {
            vx: self.vx.clamp(-cfg.vel_limit_x, cfg.vel_limit_x),
            vy: self.vy.clamp(-cfg.vel_limit_y, cfg.vel_limit_y),
            yaw_rate: self.yaw_rate.clamp(-cfg.yaw_rate_limit, cfg.yaw_rate_limit),
            head_yaw_rate: self
                .head_yaw_rate
                .clamp(-cfg.head_rate_limit, cfg.head_rate_limit),
            head_pitch_rate: self
                .head_pitch_rate
                .clamp(-cfg.head_rate_limit, cfg.head_rate_limit),
            cadence: self.cadence.clamp(cfg.cadence_min, cfg.cadence_max),
            kick_trigger: self.kick_trigger.clamp(0.0, 1.0),
            kick_dir: self.kick_dir.clamp(-half_pi, half_pi),
        }
    }
}

/// Why an episode ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TerminationReason {
    /// Robot centre left the field by more than the boundary margin; the
    /// planar stand-in for a fall.
    FallAnalog,
    Timeout,
}

/// Counters of notable events within the current episode.
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct EventCounters {
    pub kicks: u32,
    pub goals: u32,
    pub ball_out: u32,
    pub ball_impulses: u32,
    pub ball_teleports: u32,
    pub robot_pushes: u32,
}

/// Episode clock and bookkeeping. `time` always equals `steps * dt`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EpisodeState {
    pub time: f64,
    pub steps: u64,
    pub terminated: Option<TerminationReason>,
    pub events: EventCounters,
    /// Consecutive steps the robot has been nearly motionless while far from
    /// the ball (feeds the stagnation penalty).
    pub stagnation_steps: u32,
}

impl EpisodeState {
    pub fn fresh() -> Self {
        Self {
            time: 0.0,
            steps: 0,
            terminated: None,
            events: EventCounters::default(),
            stagnation_steps: 0,
        }
    }
}

/// Full simulator state.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct World {
    pub robot: RobotState,
    pub ball: BallState,
    pub episode: EpisodeState,
}

/// A kick that fired this step, with the body-frame foot-velocity proxy.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct KickEvent {
    /// Ball launch speed, m/s.
    pub speed: f64,
    /// Kick direction relative to the body heading, rad.
    pub dir_body: f64,
    /// Forward foot-velocity proxy: speed * cos(dir).
    pub foot_forward_vel: f64,
    /// Lateral foot-velocity proxy: speed * sin(dir).
    pub foot_lateral_vel: f64,
}

/// Everything a single step reports besides the mutated state.
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct StepOutcome {
    pub kick: Option<KickEvent>,
    pub goal: bool,
    pub ball_out: bool,
    pub terminated: Option<TerminationReason>,
    pub head_yaw_clamped: bool,
    pub head_pitch_clamped: bool,
    pub ball_impulse: bool,
    pub ball_teleport: bool,
    pub robot_push: bool,
}
