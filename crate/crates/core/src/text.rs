//! Text and JSON forms of partitions.
//!
//! Text form lists the parts separated by commas with marked parts suffixed
//! by `*`, e.g. `2,4,7*,13*`. JSON uses `{"parts":[...]}` for plain
//! partitions and `{"lambda":2,"parts":[...],"marked":[...]}` for marked ones.

use serde::{Deserialize, Serialize};

use crate::partition::{Lambda, MarkedPartition, Partition};
use crate::{Error, Result};

fn join(parts: impl Iterator<Item = String>) -> String {
    parts.collect::<Vec<_>>().join(",")
}

pub fn format_parts(parts: &[u32]) -> String {
    join(parts.iter().map(u32::to_string))
}

pub fn format_partition(p: &Partition) -> String {
    format_parts(p.parts())
}

pub fn format_marked(mp: &MarkedPartition) -> String {
    join(
        mp.flagged_parts()
            .map(|(p, m)| if m { format!("{p}*") } else { p.to_string() }),
    )
}

fn parse_err(input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        reason: reason.into(),
    }
}

/// Parses comma-separated entries into `(value, marked)` pairs in input order.
pub fn parse_flagged(input: &str) -> Result<Vec<(u32, bool)>> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (digits, marked) = match tok.strip_suffix('*') {
                Some(d) => (d.trim(), true),
                None => (tok, false),
            };
            let value = digits
                .parse::<u32>()
                .map_err(|e| parse_err(input, format!("bad part {tok:?}: {e}")))?;
            Ok((value, marked))
        })
        .collect()
}

/// Parses unmarked parts without imposing any order.
pub fn parse_parts(input: &str) -> Result<Vec<u32>> {
    let flagged = parse_flagged(input)?;
    if flagged.iter().any(|&(_, m)| m) {
        return Err(parse_err(input, "marks are not allowed here"));
    }
    Ok(flagged.into_iter().map(|(v, _)| v).collect())
}

/// Parses a distinct-part partition; the parts may be given in any order.
pub fn parse_partition(input: &str) -> Result<Partition> {
    Partition::from_unsorted(parse_parts(input)?)
}

pub fn parse_marked(lambda: Lambda, input: &str) -> Result<MarkedPartition> {
    let flagged = parse_flagged(input)?;
    let marks = flagged
        .iter()
        .filter(|(_, m)| *m)
        .map(|&(v, _)| v)
        .collect();
    let base = Partition::from_unsorted(flagged.into_iter().map(|(v, _)| v).collect())?;
    MarkedPartition::new(lambda, base, marks)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub parts: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedJson {
    pub lambda: u32,
    pub parts: Vec<u32>,
    pub marked: Vec<u32>,
}

pub fn partition_to_json(p: &Partition) -> String {
    serde_json::to_string(&PartitionJson {
        parts: p.parts().to_vec(),
    })
    .expect("plain struct serializes")
}

pub fn marked_to_json(mp: &MarkedPartition) -> String {
    serde_json::to_string(&MarkedJson {
        lambda: mp.lambda().get(),
        parts: mp.base().parts().to_vec(),
        marked: mp.marks().to_vec(),
    })
    .expect("plain struct serializes")
}

pub fn partition_from_json(input: &str) -> Result<Partition> {
    let raw: PartitionJson =
        serde_json::from_str(input).map_err(|e| parse_err(input, e.to_string()))?;
    Partition::new(raw.parts)
}

pub fn marked_from_json(input: &str) -> Result<MarkedPartition> {
    let raw: MarkedJson =
        serde_json::from_str(input).map_err(|e| parse_err(input, e.to_string()))?;
    MarkedPartition::new(
        Lambda::try_from(raw.lambda)?,
        Partition::new(raw.parts)?,
        raw.marked,
    )
}
