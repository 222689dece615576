//! Episode lifecycle and the step function.

use rand::Rng;

use crate::error::Error;
use crate::field::FieldSpec;
use crate::geom::{wrap_angle, Vec2};
use crate::rng::RngStream;

use super::state::*;
use super::{in_swing_window, EnvConfig};

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// One independent environment instance. Owns its world state and the random
/// streams for initialization and perturbation events.
pub struct SoccerEnv {
    pub cfg: EnvConfig,
    pub field: FieldSpec,
    pub world: World,
    rng_init: RngStream,
    rng_events: RngStream,
}

impl SoccerEnv {
    pub fn new(cfg: EnvConfig, field: FieldSpec, rng_init: RngStream, rng_events: RngStream) -> Self {
        let mut env = Self {
            cfg,
            field,
            world: World {
                robot: RobotState {
                    pose: crate::geom::Pose2::new(0.0, 0.0, 0.0),
                    vel_body: Vec2::ZERO,
                    yaw_rate: 0.0,
                    head_yaw: 0.0,
                    head_pitch: 0.0,
                    gait_phase: 0.0,
                    cadence: 1.5,
                },
                ball: BallState {
                    position: Vec2::ZERO,
                    velocity: Vec2::ZERO,
                    friction_decel: 0.5,
                },
                episode: EpisodeState::fresh(),
            },
            rng_init,
            rng_events,
        };
        env.reset();
        env
    }

    /// Start a fresh episode: robot pose uniform over the field with uniform
    /// heading and gait phase, ball uniform at rest with a new friction draw.
    pub fn reset(&mut self) -> &World {
        let hl = self.field.half_length();
        let hw = self.field.half_width();
        let rng = &mut self.rng_init;
        let robot_pos = Vec2::new(rng.random_range(-hl..hl), rng.random_range(-hw..hw));
        let heading = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
        let gait_phase = rng.random_range(0.0..TWO_PI);
        let ball_pos = Vec2::new(rng.random_range(-hl..hl), rng.random_range(-hw..hw));
        let friction = rng.random_range(self.cfg.ball_friction_min..self.cfg.ball_friction_max);

        self.world = World {
            robot: RobotState {
                pose: crate::geom::Pose2::new(robot_pos.x, robot_pos.y, heading),
                vel_body: Vec2::ZERO,
                yaw_rate: 0.0,
                head_yaw: 0.0,
                head_pitch: 0.0,
                gait_phase,
                cadence: self.cfg.cadence_min,
            },
            ball: BallState {
                position: ball_pos,
                velocity: Vec2::ZERO,
                friction_decel: friction,
            },
            episode: EpisodeState::fresh(),
        };
        &self.world
    }

    /// Reposition the ball uniformly at rest with a fresh friction draw; the
    /// robot is untouched.
    pub fn ball_reset(&mut self) {
        let hl = self.field.half_length();
        let hw = self.field.half_width();
        let rng = &mut self.rng_init;
        self.world.ball = BallState {
            position: Vec2::new(rng.random_range(-hl..hl), rng.random_range(-hw..hw)),
            velocity: Vec2::ZERO,
            friction_decel: rng
                .random_range(self.cfg.ball_friction_min..self.cfg.ball_friction_max),
        };
    }

    /// Advance the world by one control interval.
    ///
    /// Order within a step: robot integration, ball integration and friction,
    /// kick, perturbation events, termination checks, then goal/out handling
    /// (which resets only the ball).
    pub fn step(&mut self, action: &ActionVector) -> Result<StepOutcome, Error> {
        if self.world.episode.terminated.is_some() {
            return Err(Error::EpisodeTerminated);
        }
        let cfg = &self.cfg;
        let dt = cfg.dt;
        let a = action.clamped(cfg);
        let mut outcome = StepOutcome::default();

        // (1) Robot base: first-order lag toward the commanded velocities
        // with a hard acceleration cap on the linear channel.
        let robot = &mut self.world.robot;
        let alpha_v = 1.0 - (-dt / cfg.vel_tau).exp();
        let v_des = Vec2::new(a.vx, a.vy);
        let mut dv = (v_des - robot.vel_body) * alpha_v;
        let dv_max = cfg.accel_cap * dt;
        if dv.norm() > dv_max {
            dv = dv.normalized() * dv_max;
        }
        robot.vel_body += dv;
        robot.yaw_rate += (a.yaw_rate - robot.yaw_rate) * alpha_v;
        robot.pose = robot
            .pose
            .compose(robot.vel_body * dt, robot.yaw_rate * dt);

        // Head joints integrate their commanded rates and clamp at limits.
        let raw_yaw = robot.head_yaw + a.head_yaw_rate * dt;
        robot.head_yaw = raw_yaw.clamp(-cfg.head_yaw_limit, cfg.head_yaw_limit);
        outcome.head_yaw_clamped = raw_yaw != robot.head_yaw;
        let raw_pitch = robot.head_pitch + a.head_pitch_rate * dt;
        robot.head_pitch = raw_pitch.clamp(cfg.head_pitch_min, cfg.head_pitch_max);
        outcome.head_pitch_clamped = raw_pitch != robot.head_pitch;

        // Gait clock.
        let alpha_c = 1.0 - (-dt / cfg.cadence_tau).exp();
        robot.cadence += (a.cadence - robot.cadence) * alpha_c;
        robot.cadence = robot.cadence.clamp(cfg.cadence_min, cfg.cadence_max);
        robot.gait_phase = (robot.gait_phase + TWO_PI * robot.cadence * dt).rem_euclid(TWO_PI);

        // (2) Ball: integrate, then decelerate along -velocity.
        let ball = &mut self.world.ball;
        let ball_from = ball.position;
        ball.position += ball.velocity * dt;
        let speed = ball.velocity.norm();
        if speed > 0.0 {
            let new_speed = (speed - ball.friction_decel * dt).max(0.0);
            ball.velocity = if new_speed < cfg.ball_stop_speed {
                Vec2::ZERO
            } else {
                ball.velocity * (new_speed / speed)
            };
        }
        let crossed_goal = goal_crossing(&self.field, ball_from, ball.position);

        // (3) Kick: contact radius, trigger, and a gait swing window must all
        // line up. The impulse replaces the ball velocity.
        let robot = &self.world.robot;
        let ball = &mut self.world.ball;
        if (ball.position - robot.pose.position).norm() < cfg.kick_radius
            && a.kick_trigger > cfg.kick_trigger_threshold
            && in_swing_window(robot.gait_phase)
        {
            let speed = cfg.kick_speed_base + cfg.kick_speed_gain * a.kick_trigger;
            let dir_world = wrap_angle(robot.pose.heading + a.kick_dir);
            ball.velocity = Vec2::from_angle(dir_world) * speed;
            outcome.kick = Some(KickEvent {
                speed,
                dir_body: a.kick_dir,
                foot_forward_vel: speed * a.kick_dir.cos(),
                foot_lateral_vel: speed * a.kick_dir.sin(),
            });
            self.world.episode.events.kicks += 1;
        }

        // (4) Perturbation events.
        if cfg.events_enabled {
            let hl = self.field.half_length();
            let hw = self.field.half_width();
            let rng = &mut self.rng_events;
            if rng.random_range(0.0..1.0) < cfg.p_ball_impulse {
                let angle = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
                let speed = rng.random_range(0.0..cfg.ball_impulse_max_speed);
                self.world.ball.velocity += Vec2::from_angle(angle) * speed;
                outcome.ball_impulse = true;
                self.world.episode.events.ball_impulses += 1;
            }
            if rng.random_range(0.0..1.0) < cfg.p_ball_teleport {
                self.world.ball.position =
                    Vec2::new(rng.random_range(-hl..hl), rng.random_range(-hw..hw));
                outcome.ball_teleport = true;
                self.world.episode.events.ball_teleports += 1;
            }
            if rng.random_range(0.0..1.0) < cfg.p_robot_push {
                let angle = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
                let speed = rng.random_range(0.0..cfg.robot_push_max_speed);
                self.world.robot.vel_body += Vec2::from_angle(angle) * speed;
                outcome.robot_push = true;
                self.world.episode.events.robot_pushes += 1;
            }
        }

        // (5) Clock and termination.
        let episode = &mut self.world.episode;
        episode.steps += 1;
        episode.time = episode.steps as f64 * dt;
        let robot_pos = self.world.robot.pose.position;
        if self
            .field
            .exceeds_margin(robot_pos, self.field.boundary_margin)
        {
            episode.terminated = Some(TerminationReason::FallAnalog);
        } else if episode.time >= cfg.time_limit {
            episode.terminated = Some(TerminationReason::Timeout);
        }
        outcome.terminated = episode.terminated;

        // Stagnation tracking for the reward.
        let near_ball = (self.world.ball.position - robot_pos).norm() <= cfg.stagnation_distance;
        if self.world.robot.vel_body.norm() < cfg.stagnation_speed && !near_ball {
            self.world.episode.stagnation_steps += 1;
        } else {
            self.world.episode.stagnation_steps = 0;
        }

        // (6) Goal / out handling: only the ball is reset.
        if crossed_goal {
            outcome.goal = true;
            self.world.episode.events.goals += 1;
            self.ball_reset();
        } else if !self.field.contains(self.world.ball.position) {
            outcome.ball_out = true;
            self.world.episode.events.ball_out += 1;
            self.ball_reset();
        }

        Ok(outcome)
    }
}

/// Did the segment `from -> to` cross the attacked goal line between the
/// posts? Crossings of the opposite goal line count as plain out-of-bounds.
fn goal_crossing(field: &FieldSpec, from: Vec2, to: Vec2) -> bool {
    let hl = field.half_length();
    if from.x <= hl && to.x > hl {
        let t = (hl - from.x) / (to.x - from.x);
        let y_cross = from.y + t * (to.y - from.y);
        y_cross.abs() <= field.goal_width / 2.0
    } else {
        false
    }
}
