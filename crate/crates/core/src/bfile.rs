//! OEIS b-files: one `index value` pair per line, `#` comments and blank
//! lines ignored.

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BFile {
    entries: Vec<(i64, BigInt)>,
}

/// How a generated sequence lines up with a b-file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alignment {
    /// Generated term `i` is compared with b-file index `i + offset`.
    pub offset: i64,
    /// Number of terms compared.
    pub compared: usize,
}

pub const OFFSET_SEARCH: [i64; 5] = [0, -1, 1, -2, 2];

impl BFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: String| Error::MalformedBFile {
                line: lineno + 1,
                reason,
            };
            let mut fields = line.split_whitespace();
            let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(bad(format!("expected `index value`, got {line:?}")));
            };
            let idx = i64::from_str(idx).map_err(|e| bad(format!("index {idx:?}: {e}")))?;
            let val = BigInt::from_str(val).map_err(|e| bad(format!("value {val:?}: {e}")))?;
            if let Some((prev, _)) = entries.last() {
                if idx <= *prev {
                    return Err(bad(format!("index {idx} does not increase past {prev}")));
                }
            }
            entries.push((idx, val));
        }
        Ok(Self { entries })
    }

    pub fn read(path: &Path) -> std::io::Result<Result<Self>> {
        std::fs::read_to_string(path).map(|text| Self::parse(&text))
    }

    pub fn entries(&self) -> &[(i64, BigInt)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_index(&self) -> Option<i64> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn get(&self, index: i64) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    /// Compare `generated` (term `i` at position `i`) against the b-file at a
    /// single offset. Returns the overlap length if every overlapping term
    /// agrees and the overlap is non-empty.
    pub fn matches_at(&self, generated: &[BigInt], offset: i64) -> Option<usize> {
        let mut compared = 0;
        for (i, value) in generated.iter().enumerate() {
            if let Some(expected) = self.get(i as i64 + offset) {
                if expected != value {
                    return None;
                }
                compared += 1;
            }
        }
        (compared > 0).then_some(compared)
    }

    /// First offset in `0, −1, 1, −2, 2` at which `generated` agrees with the
    /// b-file over the full overlap.
    pub fn align(&self, generated: &[BigInt]) -> Option<Alignment> {
        OFFSET_SEARCH.iter().find_map(|&offset| {
            self.matches_at(generated, offset)
                .map(|compared| Alignment { offset, compared })
        })
    }
}
