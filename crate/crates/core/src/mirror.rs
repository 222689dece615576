//! Left-right mirror operators on observations and actions.
//!
//! Both operators are diagonal sign maps, hence exact involutions. The
//! observation layout is the one produced by the actor-observation assembly
//! (see `perception::build_actor_obs`); the gait phase is mirrored by a
//! half-cycle shift, which negates both its cosine and sine channels.

use crate::error::Error;

/// Actor observation width.
pub const ACTOR_OBS_DIM: usize = 21;
/// Action width.
pub const ACTION_DIM: usize = 8;

/// Actor observation layout, fixed across the crate.
pub mod obs_idx {
    pub const YAW_RATE: usize = 0;
    pub const HEAD_YAW: usize = 1;
    pub const HEAD_PITCH: usize = 2;
    pub const GAIT_COS: usize = 3;
    pub const GAIT_SIN: usize = 4;
    pub const CADENCE: usize = 5;
    pub const PREV_ACTION: usize = 6; // ..14
    pub const BALL_X: usize = 14;
    pub const BALL_Y: usize = 15;
    pub const BALL_MASK: usize = 16;
    pub const GOAL_X: usize = 17;
    pub const GOAL_Y: usize = 18;
    pub const GOAL_DIR_COS: usize = 19;
    pub const GOAL_DIR_SIN: usize = 20;
}

/// Action layout, fixed across the crate.
pub mod act_idx {
    pub const VX: usize = 0;
    pub const VY: usize = 1;
    pub const YAW_RATE: usize = 2;
    pub const HEAD_YAW_RATE: usize = 3;
    pub const HEAD_PITCH_RATE: usize = 4;
    pub const CADENCE: usize = 5;
    pub const KICK_TRIGGER: usize = 6;
    pub const KICK_DIR: usize = 7;
}

/// Sign of each action channel under the left-right mirror: lateral and
/// rotational channels flip, longitudinal ones do not.
pub const ACTION_MIRROR_SIGNS: [f64; ACTION_DIM] = [
    1.0,  // vx
    -1.0, // vy
    -1.0, // yaw rate
    -1.0, // head yaw rate
    1.0,  // head pitch rate
    1.0,  // cadence
    1.0,  // kick trigger
    -1.0, // kick direction
];

/// Sign of each observation channel under the left-right mirror.
pub const OBS_MIRROR_SIGNS: [f64; ACTOR_OBS_DIM] = [
    -1.0, // yaw rate
    -1.0, // head yaw
    1.0,  // head pitch
    -1.0, // gait cos (phase + pi)
    -1.0, // gait sin (phase + pi)
    1.0,  // cadence
    ACTION_MIRROR_SIGNS[0],
    ACTION_MIRROR_SIGNS[1],
    ACTION_MIRROR_SIGNS[2],
    ACTION_MIRROR_SIGNS[3],
    ACTION_MIRROR_SIGNS[4],
    ACTION_MIRROR_SIGNS[5],
    ACTION_MIRROR_SIGNS[6],
    ACTION_MIRROR_SIGNS[7],
    1.0,  // ball x
    -1.0, // ball y
    1.0,  // ball mask
    1.0,  // goal x
    -1.0, // goal y
    1.0,  // goal direction cos
    -1.0, // goal direction sin
];

/// Mirror an actor observation. Rejects vectors that do not match the layout
/// width.
pub fn mirror_obs(obs: &[f64]) -> Result<Vec<f64>, Error> {
    if obs.len() != ACTOR_OBS_DIM {
        return Err(Error::Shape(format!(
            "observation has width {}, layout expects {ACTOR_OBS_DIM}",
            obs.len()
        )));
    }
    Ok(obs
        .iter()
        .zip(OBS_MIRROR_SIGNS.iter())
        .map(|(v, s)| v * s)
        .collect())
}

/// Mirror an observation in place; `obs` must be a multiple of the layout
/// width (frame-wise application to stacked histories).
pub fn mirror_obs_frames_in_place(obs: &mut [f64]) -> Result<(), Error> {
    if obs.len() % ACTOR_OBS_DIM != 0 {
        return Err(Error::Shape(format!(
            "buffer length {} is not a multiple of the observation width",
            obs.len()
        )));
    }
    for frame in obs.chunks_exact_mut(ACTOR_OBS_DIM) {
        for (v, s) in frame.iter_mut().zip(OBS_MIRROR_SIGNS.iter()) {
            *v *= s;
        }
    }
    Ok(())
}

/// Mirror an action vector.
pub fn mirror_act(action: &[f64; ACTION_DIM]) -> [f64; ACTION_DIM] {
    let mut out = *action;
    for (v, s) in out.iter_mut().zip(ACTION_MIRROR_SIGNS.iter()) {
        *v *= s;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_vectors_are_fixed_points() {
        let obs = vec![0.0; ACTOR_OBS_DIM];
        assert_eq!(mirror_obs(&obs).unwrap(), obs);
        let act = [0.0; ACTION_DIM];
        assert_eq!(mirror_act(&act), act);
    }

    #[test]
    fn ball_lateral_component_inverts() {
        let mut obs = vec![0.0; ACTOR_OBS_DIM];
        obs[obs_idx::BALL_X] = 2.0;
        obs[obs_idx::BALL_Y] = 1.0;
        let m = mirror_obs(&obs).unwrap();
        assert_eq!(m[obs_idx::BALL_X], 2.0);
        assert_eq!(m[obs_idx::BALL_Y], -1.0);
    }

    #[test]
    fn action_sign_rule() {
        let a = [1.0, 0.5, -0.2, 0.1, 0.0, 2.0, 1.0, 0.3];
        let m = mirror_act(&a);
        assert_eq!(m, [1.0, -0.5, 0.2, -0.1, 0.0, 2.0, 1.0, -0.3]);
    }

    #[test]
    fn wrong_width_rejected() {
        assert!(mirror_obs(&[0.0; 5]).is_err());
        assert!(mirror_obs_frames_in_place(&mut [0.0; 22]).is_err());
    }

    proptest! {
        #[test]
        fn obs_mirror_is_exact_involution(vals in proptest::collection::vec(-10.0..10.0f64, ACTOR_OBS_DIM)) {
            let twice = mirror_obs(&mirror_obs(&vals).unwrap()).unwrap();
            prop_assert_eq!(twice, vals);
        }

        #[test]
        fn act_mirror_is_exact_involution(vals in proptest::collection::vec(-10.0..10.0f64, ACTION_DIM)) {
            let a: [f64; ACTION_DIM] = vals.clone().try_into().unwrap();
            let twice = mirror_act(&mirror_act(&a));
            prop_assert_eq!(twice.to_vec(), vals);
        }
    }

    #[test]
    fn frame_wise_history_mirror_matches_per_frame() {
        let frame: Vec<f64> = (0..ACTOR_OBS_DIM).map(|i| i as f64 - 10.0).collect();
        let mut hist: Vec<f64> = frame.iter().chain(frame.iter()).copied().collect();
        mirror_obs_frames_in_place(&mut hist).unwrap();
        let single = mirror_obs(&frame).unwrap();
        assert_eq!(&hist[..ACTOR_OBS_DIM], single.as_slice());
        assert_eq!(&hist[ACTOR_OBS_DIM..], single.as_slice());
    }
}
