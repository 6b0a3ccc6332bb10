use enriques_fibers::{catalog, FiberTag};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::ConfigError;

pub const EULER_BUDGET: i64 = 12;
pub const SHIODA_TATE_ROOM: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CharMode {
    Generic,
    Char2Classical,
    Char2Ordinary,
    Char2Supersingular,
}

impl CharMode {
    pub fn allows_wild(self) -> bool {
        self != CharMode::Generic
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Marker {
    Simple,
    Double,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Entry {
    pub tag: FiberTag,
    pub marker: Marker,
    /// Wild contribution δ added to the tame Euler number.
    pub wild: u32,
}

impl Entry {
    pub fn simple(tag: FiberTag) -> Entry {
        Entry { tag, marker: Marker::Simple, wild: 0 }
    }

    pub fn components(&self) -> usize {
        catalog(self.tag).map(|c| c.m).unwrap_or(1)
    }

    pub fn euler(&self) -> i64 {
        catalog(self.tag).map(|c| c.euler_tame).unwrap_or(0) + self.wild as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Configuration {
    /// Kept sorted, so equal multisets compare equal.
    pub entries: Vec<Entry>,
    pub char_mode: CharMode,
}

impl Configuration {
    pub fn new(mut entries: Vec<Entry>, char_mode: CharMode) -> Result<Configuration, ConfigError> {
        entries.sort();
        let c = Configuration { entries, char_mode };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for e in &self.entries {
            e.tag.validate()?;
            if e.wild > 0 && !(self.char_mode.allows_wild() && e.tag.is_additive()) {
                return Err(ConfigError::Malformed(format!("wild term on {} in {:?} mode", e.tag, self.char_mode)));
            }
            if self.char_mode == CharMode::Char2Supersingular
                && e.marker == Marker::Double
                && !(e.tag.is_additive() || e.tag == FiberTag::Smooth)
            {
                return Err(ConfigError::Malformed(format!("double fiber {} on a supersingular surface", e.tag)));
            }
        }
        if self.m_sum() > SHIODA_TATE_ROOM {
            return Err(ConfigError::Malformed(format!("Σ(m − 1) = {} exceeds {SHIODA_TATE_ROOM}", self.m_sum())));
        }
        Ok(())
    }

    /// `Σ (m − 1)` over the entries.
    pub fn m_sum(&self) -> usize {
        self.entries.iter().map(|e| e.components() - 1).sum()
    }

    pub fn euler_sum(&self) -> i64 {
        self.entries.iter().map(Entry::euler).sum()
    }

    pub fn tags(&self) -> Vec<FiberTag> {
        self.entries.iter().map(|e| e.tag).collect()
    }

    pub fn is_extremal(&self) -> bool {
        self.m_sum() == SHIODA_TATE_ROOM
    }

    pub fn kodaira(&self) -> String {
        self.join(|e| e.tag.kodaira())
    }

    fn join(&self, name: impl Fn(&Entry) -> String) -> String {
        self.entries
            .iter()
            .map(|e| {
                let mut s = name(e);
                if e.marker == Marker::Double {
                    s.push_str(" (double)");
                }
                if e.wild > 0 {
                    s.push_str(&format!(" (δ={})", e.wild));
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Dynkin labels, largest fiber first and smooth fibers last.
impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut c = self.clone();
        c.entries.sort_by_key(|e| (e.tag == FiberTag::Smooth, std::cmp::Reverse((e.components(), e.tag))));
        f.write_str(&c.join(|e| e.tag.dynkin()))
    }
}
