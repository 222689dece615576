//! Checkpoint container: a JSON header followed by little-endian f64 blobs.
//!
//! Layout:
//! ```text
//! [8-byte magic "MLPCKPT1"][u32 LE header length][header JSON][f64 LE data]
//! ```
//! The header records the training step, free-form metadata, and the name and
//! shape of every array; the data section concatenates the arrays in header
//! order. Round-trips are bit-exact.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::Path;

use ndarray::{ArrayD, ArrayViewD, IxDyn};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;

const MAGIC: &[u8; 8] = b"MLPCKPT1";
const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct Header {
    version: u32,
    step: u64,
    meta: Value,
    arrays: Vec<ArrayInfo>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ArrayInfo {
    name: String,
    shape: Vec<usize>,
}

/// Header-level information of a loaded checkpoint.
#[derive(Debug, Clone)]
pub struct CheckpointMeta {
    pub step: u64,
    pub meta: Value,
}

/// A loaded checkpoint: metadata plus named arrays.
#[derive(Debug)]
pub struct CheckpointData {
    pub meta: CheckpointMeta,
    pub arrays: BTreeMap<String, ArrayD<f64>>,
}

impl CheckpointData {
    pub fn take(&mut self, name: &str) -> Result<ArrayD<f64>, Error> {
        self.arrays
            .remove(name)
            .ok_or_else(|| Error::Checkpoint(format!("missing array {name:?}")))
    }
}

pub fn save_checkpoint(
    path: &Path,
    step: u64,
    meta: Value,
    arrays: &[(String, ArrayViewD<'_, f64>)],
) -> Result<(), Error> {
    let header = Header {
        version: FORMAT_VERSION,
        step,
        meta,
        arrays: arrays
            .iter()
            .map(|(name, a)| ArrayInfo {
                name: name.clone(),
                shape: a.shape().to_vec(),
            })
            .collect(),
    };
    let header_bytes = serde_json::to_vec(&header)?;
    let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
    file.write_all(MAGIC)?;
    file.write_all(&(header_bytes.len() as u32).to_le_bytes())?;
    file.write_all(&header_bytes)?;
    for (_, a) in arrays {
        // Arrays may be views with arbitrary strides; iterate in logical order.
        for &v in a.iter() {
            file.write_all(&v.to_le_bytes())?;
        }
    }
    file.flush()?;
    Ok(())
}

pub fn load_checkpoint(path: &Path) -> Result<CheckpointData, Error> {
    let mut file = std::io::BufReader::new(std::fs::File::open(path)?);
    let mut magic = [0u8; 8];
    file.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(Error::Checkpoint("bad magic".into()));
    }
    let mut len_bytes = [0u8; 4];
    file.read_exact(&mut len_bytes)?;
    let header_len = u32::from_le_bytes(len_bytes) as usize;
    let mut header_bytes = vec![0u8; header_len];
    file.read_exact(&mut header_bytes)?;
    let header: Header = serde_json::from_slice(&header_bytes)?;
    if header.version != FORMAT_VERSION {
        return Err(Error::Checkpoint(format!(
            "unsupported checkpoint version {}",
            header.version
        )));
    }
    let mut arrays = BTreeMap::new();
    for info in &header.arrays {
        let n: usize = info.shape.iter().product();
        let mut buf = vec![0u8; n * 8];
        file.read_exact(&mut buf)?;
        let data: Vec<f64> = buf
            .chunks_exact(8)
            .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        let arr = ArrayD::from_shape_vec(IxDyn(&info.shape), data)
            .map_err(|e| Error::Checkpoint(e.to_string()))?;
        arrays.insert(info.name.clone(), arr);
    }
    Ok(CheckpointData {
        meta: CheckpointMeta {
            step: header.step,
            meta: header.meta,
        },
        arrays,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::{ArrayD, IxDyn};
    use serde_json::json;

    #[test]
    fn round_trip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ckpt.bin");
        // Include values that expose any lossy encoding.
        let a = ArrayD::from_shape_vec(
            IxDyn(&[2, 3]),
            vec![
                1.0 / 3.0,
                f64::MIN_POSITIVE,
                -0.0,
                1e300,
                std::f64::consts::PI,
                -7.25,
            ],
        )
        .unwrap();
        let b = ArrayD::from_shape_vec(IxDyn(&[4]), vec![0.1, 0.2, 0.3, 0.4]).unwrap();
        save_checkpoint(
            &path,
            1234,
            json!({"kind": "test", "layers": [2, 3]}),
            &[("w".to_string(), a.view()), ("b".to_string(), b.view())],
        )
        .unwrap();

        let mut loaded = load_checkpoint(&path).unwrap();
        assert_eq!(loaded.meta.step, 1234);
        assert_eq!(loaded.meta.meta["kind"], "test");
        let a2 = loaded.take("w").unwrap();
        let b2 = loaded.take("b").unwrap();
        assert_eq!(a2.shape(), &[2, 3]);
        for (x, y) in a.iter().zip(a2.iter()) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
        for (x, y) in b.iter().zip(b2.iter()) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
        assert!(loaded.take("w").is_err());
    }

    #[test]
    fn rejects_bad_magic() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("junk.bin");
        std::fs::write(&path, b"NOTMAGIC....").unwrap();
        assert!(load_checkpoint(&path).is_err());
    }
}
