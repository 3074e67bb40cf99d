//! Pattern-set documents.
//!
//! ```json
//! {
//!   "base": 3,
//!   "modulus": 3,
//!   "label": "optional",
//!   "patterns": [
//!     { "word": "12", "weight": 1 },
//!     { "word": [2, 2], "weight": -2 }
//!   ]
//! }
//! ```
//!
//! A word is either a digit string (only for `base <= 10`) or a list of
//! digits. Weights are JSON integers, or decimal strings for values outside
//! the 64-bit range. Each form is written back exactly as it was read.

use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::digits::Word;
use crate::error::{Error, Result};
use crate::weighted::WeightedSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WordRepr {
    Digits(String),
    List(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightRepr {
    Int(i64),
    Big(String),
}

impl WeightRepr {
    pub fn value(&self) -> Result<BigInt> {
        match self {
            WeightRepr::Int(v) => Ok(BigInt::from(*v)),
            WeightRepr::Big(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Spec(format!("weight {s:?} is not an integer"))),
        }
    }

    fn from_bigint(v: &BigInt) -> Self {
        i64::try_from(v).map_or_else(|_| WeightRepr::Big(v.to_string()), WeightRepr::Int)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternEntry {
    pub word: WordRepr,
    pub weight: WeightRepr,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternSpecFile {
    pub base: u32,
    pub modulus: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub patterns: Vec<PatternEntry>,
}

impl PatternSpecFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Spec(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Spec(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn to_weighted_set(&self) -> Result<WeightedSet> {
        let entries = self
            .patterns
            .iter()
            .map(|p| {
                let word = match &p.word {
                    WordRepr::Digits(s) => Word::parse(self.base, s)?,
                    WordRepr::List(d) => Word::new(self.base, d.clone())?,
                };
                if !word.is_valid_pattern() {
                    return Err(Error::ZeroPattern);
                }
                Ok((word, p.weight.value()?))
            })
            .collect::<Result<Vec<_>>>()?;
        WeightedSet::from_entries(self.base, self.modulus, entries)
    }

    /// Canonical document for a set: string words when `base <= 10`.
    pub fn from_weighted_set(s: &WeightedSet, label: Option<String>) -> Self {
        let patterns = s
            .iter()
            .map(|(w, c)| PatternEntry {
                word: if s.base() <= 10 {
                    WordRepr::Digits(w.to_string())
                } else {
                    WordRepr::List(w.digits().to_vec())
                },
                weight: WeightRepr::from_bigint(c),
            })
            .collect();
        PatternSpecFile {
            base: s.base(),
            modulus: s.modulus(),
            label,
            patterns,
        }
    }
}
