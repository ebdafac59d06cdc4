//! JSON instance files: `{"n", "dmin", "dmax", "meta"?}`.
//!
//! Saved files are canonical (sorted, duplicate-free neighbour arrays,
//! compact encoding, trailing newline), so their SHA-256 identifies the
//! instance.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use super::{canonical_lists, Instance, NodeId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default)]
pub struct LoadOptions {
    /// Repair `dmin ⊄ dmax` by widening `dmax` instead of rejecting.
    pub normalize: bool,
}

/// What canonicalization silently dropped.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub self_loops_stripped: usize,
    pub duplicates_dropped: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    n: u64,
    dmin: Vec<Vec<u64>>,
    dmax: Vec<Vec<u64>>,
    #[serde(default)]
    meta: Option<Value>,
}

#[derive(Serialize)]
struct InstanceFileRef<'a> {
    n: usize,
    dmin: Vec<&'a [NodeId]>,
    dmax: Vec<&'a [NodeId]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    meta: Option<&'a Value>,
}

pub(crate) fn canonical_bytes(inst: &Instance) -> Vec<u8> {
    let file = InstanceFileRef {
        n: inst.n(),
        dmin: inst.dmin_relation().iter().collect(),
        dmax: inst.dmax_relation().iter().collect(),
        meta: inst.meta(),
    };
    let mut bytes = serde_json::to_vec(&file).expect("instance serialization is infallible");
    bytes.push(b'\n');
    bytes
}

pub(crate) fn digest_of(inst: &Instance) -> String {
    hex::encode(Sha256::digest(canonical_bytes(inst)))
}

impl Instance {
    /// Parses and canonicalizes without checking the standing assumptions.
    pub fn from_json_unchecked(text: &str) -> Result<(Instance, LoadReport)> {
        let file: InstanceFile = serde_json::from_str(text).map_err(|source| Error::Json {
            context: "instance".into(),
            source,
        })?;
        let n = usize::try_from(file.n).map_err(|_| Error::EmptyInstance)?;
        let mut report = LoadReport::default();
        let dmin = canonical_lists("dmin", n, narrow("dmin", n, file.dmin)?, &mut report)?;
        let dmax = canonical_lists("dmax", n, narrow("dmax", n, file.dmax)?, &mut report)?;
        Ok((Instance::from_parts(dmin, dmax, file.meta), report))
    }

    /// Parses, canonicalizes and validates.
    pub fn from_json(text: &str, opts: LoadOptions) -> Result<(Instance, LoadReport)> {
        let (mut inst, report) = Self::from_json_unchecked(text)?;
        if opts.normalize {
            inst = inst.normalized();
        }
        inst.ensure_valid()?;
        Ok((inst, report))
    }
}

fn narrow(field: &'static str, n: usize, lists: Vec<Vec<u64>>) -> Result<Vec<Vec<NodeId>>> {
    lists
        .into_iter()
        .enumerate()
        .map(|(node, l)| {
            l.into_iter()
                .enumerate()
                .map(|(index, value)| {
                    if value < n as u64 {
                        Ok(value as NodeId)
                    } else {
                        Err(Error::NodeOutOfRange {
                            field,
                            node,
                            index,
                            value,
                            n,
                        })
                    }
                })
                .collect()
        })
        .collect()
}

pub fn load(path: impl AsRef<Path>) -> Result<Instance> {
    load_with(path, LoadOptions::default()).map(|(inst, _)| inst)
}

pub fn load_with(path: impl AsRef<Path>, opts: LoadOptions) -> Result<(Instance, LoadReport)> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    Instance::from_json(&text, opts).map_err(|e| match e {
        Error::Json { source, .. } => Error::Json {
            context: path.display().to_string(),
            source,
        },
        other => other,
    })
}

pub fn save(inst: &Instance, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, inst.to_canonical_bytes()).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}
