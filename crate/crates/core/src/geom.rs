//! 2D vectors, planar poses, and angle utilities.
//!
//! Headings are always wrapped to `(-pi, pi]`; that convention is shared by
//! every angle-difference helper in the crate.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A 2D vector in meters (or meters/second for velocities).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    #[inline]
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    #[inline]
    pub fn dot(self, rhs: Vec2) -> f64 {
        self.x * rhs.x + self.y * rhs.y
    }

    /// Angle of the vector in radians, `atan2(y, x)`.
    #[inline]
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    #[inline]
    pub fn distance(self, other: Vec2) -> f64 {
        (self - other).norm()
    }

    /// Rotate counter-clockwise by `theta` radians.
    #[inline]
    pub fn rotated(self, theta: f64) -> Vec2 {
        let (s, c) = theta.sin_cos();
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Unit vector along `theta`.
    #[inline]
    pub fn from_angle(theta: f64) -> Vec2 {
        let (s, c) = theta.sin_cos();
        Vec2::new(c, s)
    }

    /// Zero-length vectors normalize to zero.
    #[inline]
    pub fn normalized(self) -> Vec2 {
        let n = self.norm();
        if n < 1e-12 {
            Vec2::ZERO
        } else {
            self * (1.0 / n)
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl AddAssign for Vec2 {
    #[inline]
    fn add_assign(&mut self, rhs: Vec2) {
        self.x += rhs.x;
        self.y += rhs.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Wrap an angle to `(-pi, pi]`.
#[inline]
pub fn wrap_angle(theta: f64) -> f64 {
    let mut a = theta.rem_euclid(2.0 * PI);
    if a > PI {
        a -= 2.0 * PI;
    }
    a
}

/// Signed smallest difference `a - b`, wrapped to `(-pi, pi]`.
#[inline]
pub fn angle_diff(a: f64, b: f64) -> f64 {
    wrap_angle(a - b)
}

/// Planar pose: world position plus heading in `(-pi, pi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pose2 {
    pub position: Vec2,
    pub heading: f64,
}

impl Pose2 {
    pub fn new(x: f64, y: f64, heading: f64) -> Self {
        Self {
            position: Vec2::new(x, y),
            heading: wrap_angle(heading),
        }
    }

    /// Express a world-frame point in this pose's local (robot) frame.
    #[inline]
    pub fn world_to_robot(&self, p_world: Vec2) -> Vec2 {
        (p_world - self.position).rotated(-self.heading)
    }

    /// Express a local (robot-frame) point in the world frame.
    #[inline]
    pub fn robot_to_world(&self, p_robot: Vec2) -> Vec2 {
        p_robot.rotated(self.heading) + self.position
    }

    /// Compose this pose with a body-frame increment (translation in the
    /// local frame followed by a heading change).
    #[inline]
    pub fn compose(&self, d_position: Vec2, d_heading: f64) -> Pose2 {
        Pose2 {
            position: self.position + d_position.rotated(self.heading),
            heading: wrap_angle(self.heading + d_heading),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn identity_pose_is_identity_transform() {
        let pose = Pose2::new(0.0, 0.0, 0.0);
        let p = pose.world_to_robot(Vec2::new(3.0, 4.0));
        assert_eq!(p, Vec2::new(3.0, 4.0));
    }

    #[test]
    fn quarter_turn_geometry() {
        // Robot at (1, 0) facing +y: world point (1, 2) sits 2 m straight
        // ahead, i.e. (2, 0) in the robot frame.
        let pose = Pose2::new(1.0, 0.0, PI / 2.0);
        let p = pose.world_to_robot(Vec2::new(1.0, 2.0));
        assert_abs_diff_eq!(p.x, 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.y, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn wrap_angle_convention() {
        assert_abs_diff_eq!(wrap_angle(PI), PI, epsilon = 1e-15);
        assert_abs_diff_eq!(wrap_angle(-PI), PI, epsilon = 1e-15);
        assert_abs_diff_eq!(wrap_angle(3.0 * PI), PI, epsilon = 1e-12);
        assert_abs_diff_eq!(wrap_angle(0.1 - 4.0 * PI), 0.1, epsilon = 1e-12);
    }

    proptest! {
        #[test]
        fn transform_round_trips(
            x in -20.0..20.0f64, y in -20.0..20.0f64, h in -10.0..10.0f64,
            px in -20.0..20.0f64, py in -20.0..20.0f64,
        ) {
            let pose = Pose2::new(x, y, h);
            let p = Vec2::new(px, py);
            let back = pose.robot_to_world(pose.world_to_robot(p));
            prop_assert!((back - p).norm() < 1e-12);
        }

        #[test]
        fn transform_preserves_distance(
            x in -20.0..20.0f64, y in -20.0..20.0f64, h in -10.0..10.0f64,
            ax in -20.0..20.0f64, ay in -20.0..20.0f64,
            bx in -20.0..20.0f64, by in -20.0..20.0f64,
        ) {
            let pose = Pose2::new(x, y, h);
            let a = Vec2::new(ax, ay);
            let b = Vec2::new(bx, by);
            let d0 = a.distance(b);
            let d1 = pose.world_to_robot(a).distance(pose.world_to_robot(b));
            prop_assert!((d0 - d1).abs() < 1e-12);
        }

        #[test]
        fn wrapped_angles_stay_in_range(theta in -100.0..100.0f64) {
            let w = wrap_angle(theta);
            prop_assert!(w > -PI && w <= PI);
        }
    }

    #[test]
    fn round_trip_matches_matrix_composition() {
        // Direct rotation-matrix composition as an independent route.
        let pose = Pose2::new(0.7, -2.3, 1.9);
        let p = Vec2::new(4.2, -0.4);
        let (s, c) = pose.heading.sin_cos();
        let dx = p.x - pose.position.x;
        let dy = p.y - pose.position.y;
        let expected = Vec2::new(c * dx + s * dy, -s * dx + c * dy);
        let got = pose.world_to_robot(p);
        assert_abs_diff_eq!(got.x, expected.x, epsilon = 1e-12);
        assert_abs_diff_eq!(got.y, expected.y, epsilon = 1e-12);
    }
}
