//! Classification tables of automorphism groups as shipped data, with
//! arithmetic consistency checks against the group-theoretic bounds.

mod check;
mod group;

use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

pub use check::{
    consistency_check, consistency_check_of, quotient_is_two_elementary, Check, ConsistencyReport, CHAR_NOT_2,
    CLASSICAL_RANK, ELEMENT_ORDERS, ORDER_EXEMPT_FLAG, QUOTIENT, SUPERSINGULAR_LIST,
};
pub use group::GroupTag;

pub const SCHEMA: &str = "enriques-tables/1";
pub const FIGURE_UNAVAILABLE: &str = "figure content unavailable";

const DATA: &str = include_str!("../data/tables.json");

#[derive(Debug, Error)]
pub enum TablesError {
    #[error("malformed table data: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema {0}")]
    Schema(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    Classical,
    Ordinary,
    Supersingular,
    CharNot2,
}

impl SurfaceKind {
    /// Tag-level bookkeeping: in characteristic 2 only classical surfaces
    /// have `K_S ≠ 0`.
    pub fn canonical_nonzero(self) -> bool {
        self == SurfaceKind::Classical
    }

    pub fn is_char2(self) -> bool {
        self != SurfaceKind::CharNot2
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SurfaceKind::Classical => "classical",
            SurfaceKind::Ordinary => "ordinary",
            SurfaceKind::Supersingular => "supersingular",
            SurfaceKind::CharNot2 => "char ≠ 2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceClass {
    pub kind: SurfaceKind,
    pub type_tag: Option<String>,
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.type_tag {
            Some(t) => write!(f, "{} {}", self.kind, t),
            None => write!(f, "{}", self.kind),
        }
    }
}

/// A table entry: a single group or a printed disjunction of alternatives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupEntry {
    One(GroupTag),
    AnyOf { any_of: Vec<GroupTag> },
}

impl GroupEntry {
    pub fn alternatives(&self) -> Vec<GroupTag> {
        match self {
            GroupEntry::One(g) => vec![*g],
            GroupEntry::AnyOf { any_of } => any_of.clone(),
        }
    }

    pub fn is_disjunction(&self) -> bool {
        matches!(self, GroupEntry::AnyOf { .. })
    }
}

impl fmt::Display for GroupEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alts: Vec<String> = self.alternatives().iter().map(|g| g.to_string()).collect();
        f.write_str(&alts.join(" or "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    NumericallyTrivial,
    OddOrder,
    D4D4Example,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub surface: SurfaceClass,
    pub aut_ct: GroupEntry,
    /// Absent where only `Aut_ct` is tabulated.
    pub aut_nt: Option<GroupEntry>,
    pub source: Source,
}

impl TableRow {
    /// `Aut_nt` as used by the checks. Without a printed value it equals
    /// `Aut_ct` on supersingular surfaces, where `K_S = 0` and the torsion of
    /// `H²` is trivial.
    pub fn effective_aut_nt(&self) -> Option<GroupEntry> {
        match (&self.aut_nt, self.surface.kind) {
            (Some(g), _) => Some(g.clone()),
            (None, SurfaceKind::Supersingular) => Some(self.aut_ct.clone()),
            (None, _) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub supersingular_aut_ct: Vec<GroupTag>,
    pub char_not_2_aut_nt: Vec<GroupTag>,
    pub classical_aut_nt: Vec<GroupTag>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Figure {
    pub name: String,
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableData {
    pub schema: String,
    pub rows: Vec<TableRow>,
    pub bounds: Bounds,
    pub figures: Vec<Figure>,
}

pub fn parse(text: &str) -> Result<TableData, TablesError> {
    let data: TableData = serde_json::from_str(text)?;
    if data.schema != SCHEMA {
        return Err(TablesError::Schema(data.schema));
    }
    Ok(data)
}

/// The shipped data, parsed once.
pub fn data() -> &'static TableData {
    static DATA_CELL: OnceLock<TableData> = OnceLock::new();
    DATA_CELL.get_or_init(|| parse(DATA).expect("shipped table data parses"))
}

pub fn shipped_json() -> &'static str {
    DATA
}

pub fn table_rows() -> &'static [TableRow] {
    &data().rows
}
