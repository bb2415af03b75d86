//! Weight-distribution input files: `{"d": 7, "counts": ["1", ...], "size": "16"}`.

use std::path::Path;

use num_bigint::BigInt;
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWeights {
    d: u32,
    counts: Vec<String>,
    size: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightsFile {
    pub d: u32,
    pub counts: Vec<BigInt>,
    pub size: Option<BigInt>,
}

pub fn parse(text: &str) -> Result<WeightsFile, String> {
    let raw: RawWeights = serde_json::from_str(text).map_err(|e| format!("weights file: {e}"))?;
    let counts = raw
        .counts
        .iter()
        .enumerate()
        .map(|(i, c)| parse_natural(c).map_err(|e| format!("counts[{i}]: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    if counts.len() != raw.d as usize + 1 {
        return Err(format!(
            "counts: expected {} entries for d={}, got {}",
            raw.d as usize + 1,
            raw.d,
            counts.len()
        ));
    }
    let size = raw
        .size
        .as_deref()
        .map(|s| parse_natural(s).map_err(|e| format!("size: {e}")))
        .transpose()?;
    Ok(WeightsFile { d: raw.d, counts, size })
}

pub fn load(path: &Path) -> Result<WeightsFile, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn parse_natural(s: &str) -> Result<BigInt, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("{s:?} is not a non-negative decimal integer"));
    }
    s.parse::<BigInt>().map_err(|e| format!("{s:?}: {e}"))
}
