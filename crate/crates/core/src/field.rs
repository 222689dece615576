//! Field geometry and the global landmark map.
//!
//! The world frame has its origin at the field centre, +x toward the attacked
//! goal, +y to the left when facing it. The marking layout (penalty areas,
//! centre circle, penalty marks) is a documented stand-in scaled to the
//! 14 m x 9 m pitch; exact coordinates are listed in the README.

use serde::{Deserialize, Serialize};

use crate::geom::Vec2;

/// Landmark classes the detector reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LandmarkKind {
    /// Goal posts, two per goal.
    Goalpost,
    /// T-shaped line intersections.
    TJunction,
    /// X-shaped intersections (centre circle crossings, penalty marks).
    XJunction,
    /// L-shaped corners (field corners, penalty-area corners).
    LJunction,
}

/// One entry of the global field map.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Landmark {
    pub kind: LandmarkKind,
    pub position: Vec2,
}

/// Field dimensions and marking geometry.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct FieldSpec {
    /// Goal-to-goal extent (x axis), meters.
    pub length: f64,
    /// Touchline-to-touchline extent (y axis), meters.
    pub width: f64,
    /// Distance between the inner edges of the posts.
    pub goal_width: f64,
    /// Robots may leave the marked field by up to this margin before the
    /// episode counts it as a fall.
    pub boundary_margin: f64,
    /// Centre circle radius.
    pub centre_circle_radius: f64,
    /// Penalty area depth (along x, from the goal line).
    pub penalty_area_depth: f64,
    /// Penalty area width (along y, centred on the goal).
    pub penalty_area_width: f64,
    /// Penalty mark distance from the goal line.
    pub penalty_mark_distance: f64,
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self {
            length: 14.0,
            width: 9.0,
            goal_width: 2.6,
            boundary_margin: 1.0,
            centre_circle_radius: 0.75,
            penalty_area_depth: 2.0,
            penalty_area_width: 5.0,
            penalty_mark_distance: 1.5,
        }
    }
}

impl FieldSpec {
    #[inline]
    pub fn half_length(&self) -> f64 {
        self.length / 2.0
    }

    #[inline]
    pub fn half_width(&self) -> f64 {
        self.width / 2.0
    }

    /// Centre of the goal the robot attacks (+x end).
    #[inline]
    pub fn attacked_goal_centre(&self) -> Vec2 {
        Vec2::new(self.half_length(), 0.0)
    }

    /// Inward normal of the attacked goal, as a world-frame angle. The
    /// normal points from the goal back into the field.
    #[inline]
    pub fn attacked_goal_normal_angle(&self) -> f64 {
        std::f64::consts::PI
    }

    #[inline]
    pub fn contains(&self, p: Vec2) -> bool {
        p.x.abs() <= self.half_length() && p.y.abs() <= self.half_width()
    }

    /// True when `p` lies outside the field by more than `margin` on any axis.
    #[inline]
    pub fn exceeds_margin(&self, p: Vec2, margin: f64) -> bool {
        p.x.abs() > self.half_length() + margin || p.y.abs() > self.half_width() + margin
    }

    pub fn validate(&self) -> Result<(), crate::error::Error> {
        let ok = self.length > 0.0
            && self.width > 0.0
            && self.goal_width > 0.0
            && self.goal_width < self.width
            && self.boundary_margin >= 0.0
            && self.centre_circle_radius > 0.0
            && self.penalty_area_depth < self.half_length()
            && self.penalty_area_width < self.width;
        if ok {
            Ok(())
        } else {
            Err(crate::error::Error::Config(
                "inconsistent field dimensions".into(),
            ))
        }
    }
}

/// Deterministic global landmark map for a field spec.
///
/// Layout (for the default 14 x 9 spec):
/// - goalposts at (+-7, +-1.3)
/// - X: centre circle x centre line (0, +-0.75), penalty marks (+-5.5, 0)
/// - T: centre line x touchlines (0, +-4.5), penalty area x goal lines (+-7, +-2.5)
/// - L: field corners (+-7, +-4.5), penalty-area corners (+-5, +-2.5)
pub fn landmark_map(spec: &FieldSpec) -> Vec<Landmark> {
    let hl = spec.half_length();
    let hw = spec.half_width();
    let gw = spec.goal_width / 2.0;
    let cc = spec.centre_circle_radius;
    let pd = spec.penalty_area_depth;
    let pw = spec.penalty_area_width / 2.0;
    let pm = spec.penalty_mark_distance;

    let mut map = Vec::with_capacity(22);
    let mut push = |kind: LandmarkKind, x: f64, y: f64| {
        map.push(Landmark {
            kind,
            position: Vec2::new(x, y),
        });
    };

    for sx in [-1.0, 1.0] {
        for sy in [-1.0, 1.0] {
            push(LandmarkKind::Goalpost, sx * hl, sy * gw);
            push(LandmarkKind::TJunction, sx * hl, sy * pw);
            push(LandmarkKind::LJunction, sx * hl, sy * hw);
            push(LandmarkKind::LJunction, sx * (hl - pd), sy * pw);
        }
    }
    for sy in [-1.0, 1.0] {
        push(LandmarkKind::XJunction, 0.0, sy * cc);
        push(LandmarkKind::TJunction, 0.0, sy * hw);
    }
    for sx in [-1.0, 1.0] {
        push(LandmarkKind::XJunction, sx * (hl - pm), 0.0);
    }
    map
}
