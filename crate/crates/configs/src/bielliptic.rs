use enriques_fibers::{catalog, FiberTag};
use serde::{Deserialize, Serialize};

use crate::config::SHIODA_TATE_ROOM;
use crate::ConfigError;

pub const DEFICIT: &str = "extremality deficit";
pub const MULTIPLICATIVE_TOO_BIG: &str = "multiplicative with more than two components";
pub const CONNECTOR_TOO_HEAVY: &str = "connector multiplicity exceeds 2";

/// Reducible fibers of `|2F1|`, with the number of their components lying in
/// fibers of `|2F2|` and, per fiber, the multiplicity of the one component
/// that does not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharedPair {
    pub fibers: Vec<FiberTag>,
    pub shared: usize,
    pub connectors: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterVerdict {
    pub pass: bool,
    pub reasons: Vec<String>,
}

/// Necessary conditions on a pair of pencils whose bielliptic involution is
/// numerically trivial.
pub fn bielliptic_filter(pair: &SharedPair) -> Result<FilterVerdict, ConfigError> {
    if pair.fibers.is_empty() || pair.connectors.len() != pair.fibers.len() {
        return Err(ConfigError::Malformed("one connector multiplicity per fiber".into()));
    }
    let mut room = 0;
    let mut reasons = Vec::new();
    for (&tag, &mult) in pair.fibers.iter().zip(&pair.connectors) {
        let c = catalog(tag)?;
        if !c.model.multiplicities().contains(&mult) {
            return Err(ConfigError::Malformed(format!("{tag} has no component of multiplicity {mult}")));
        }
        room += c.m - 1;
        // m · (C · F2) = D · F2 = 2 with C · F2 > 0
        if 2 % mult != 0 && !reasons.iter().any(|r| r == CONNECTOR_TOO_HEAVY) {
            reasons.push(CONNECTOR_TOO_HEAVY.to_string());
        }
        if tag.is_multiplicative() && c.m > 2 && !reasons.iter().any(|r| r == MULTIPLICATIVE_TOO_BIG) {
            reasons.push(MULTIPLICATIVE_TOO_BIG.to_string());
        }
    }
    if room > SHIODA_TATE_ROOM || pair.shared > room {
        return Err(ConfigError::Malformed(format!("{} shared of {room} available components", pair.shared)));
    }
    if pair.shared < SHIODA_TATE_ROOM {
        reasons.insert(0, DEFICIT.to_string());
    }
    Ok(FilterVerdict { pass: reasons.is_empty(), reasons })
}
