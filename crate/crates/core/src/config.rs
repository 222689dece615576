//! Run configuration: a versioned JSON document covering the field, the
//! simulator, perception, localization, and training.

use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::error::Error;

pub const CONFIG_VERSION: u32 = 1;

/// Top-level configuration. All sections have defaults, so an empty
/// `{"version": 1}` document is a valid full configuration.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct Config {
    pub version: u32,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            version: CONFIG_VERSION,
            seed: 0,
        }
    }
}

impl Config {
    pub fn from_path(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        let cfg: Config = serde_json::from_str(text)?;
        if cfg.version != CONFIG_VERSION {
            return Err(Error::Config(format!(
                "unsupported config version {} (expected {})",
                cfg.version, CONFIG_VERSION
            )));
        }
        Ok(cfg)
    }
}
