use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::class::{aut_group, element_orders, fixed_count, Characteristic, CurveClass, JClass};
use crate::curve::{automorphisms, brute_force_count, representative};
use crate::field::Field;
use crate::EcError;

const DATA: &str = include_str!("../data/fixed_points.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrintedRow {
    pub characteristic: Characteristic,
    pub j: JClass,
    pub group: String,
    pub order: u32,
    pub fixed: u64,
}

impl PrintedRow {
    pub fn class(&self) -> CurveClass {
        CurveClass::new(self.characteristic, self.j)
    }
}

#[derive(Deserialize)]
struct DataFile {
    schema: String,
    rows: Vec<PrintedRow>,
}

/// The fixed-point tables as printed, one row per (class, element order).
pub fn printed_rows() -> Vec<PrintedRow> {
    let d: DataFile = serde_json::from_str(DATA).expect("bundled table data is valid JSON");
    assert_eq!(d.schema, "enriques-ecaut-fixed-points/1");
    d.rows
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReproStatus {
    /// Both engines agree with the printed value.
    Match,
    /// Not printed; both engines agree.
    Extra,
    /// Printed, but the group has no element of that order and neither engine finds one.
    NotRealized,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproRow {
    pub class: CurveClass,
    pub group: String,
    pub order: u32,
    pub printed: Option<u64>,
    pub norm_engine: Option<u64>,
    /// Fixed-point counts of every automorphism of this order on the representative.
    pub oracle: Vec<u64>,
    pub equation: String,
    pub degree: u32,
    pub status: ReproStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub ext_degree: u32,
    pub rows: Vec<ReproRow>,
    pub pass: bool,
}

/// Reproduces the fixed-point tables with both engines. `ext_degree` is the
/// extension degree used for the characteristic 2 and 3 representatives.
pub fn reproduce(ext_degree: u32) -> Result<TableReport, EcError> {
    let printed = printed_rows();
    let mut rows = Vec::new();
    for class in CurveClass::all() {
        let group = aut_group(&class)?;
        let rep = representative(&class, ext_degree);
        let field = Field::get(rep.curve.p, rep.degree)?;
        let auts = automorphisms(&field, &rep.curve);
        let mut orders: BTreeSet<u32> = element_orders(&class)?.into_iter().filter(|&o| o > 1).collect();
        orders.extend(printed.iter().filter(|r| r.class() == class).map(|r| r.order));
        for order in orders {
            let printed_value = printed.iter().find(|r| r.class() == class && r.order == order).map(|r| r.fixed);
            let norm_engine = match fixed_count(&class, order) {
                Ok(v) => Some(v),
                Err(EcError::OrderNotRealized(_)) => None,
                Err(e) => return Err(e),
            };
            let mut oracle = BTreeSet::new();
            for a in auts.iter().filter(|a| a.order(&field) == order) {
                oracle.insert(brute_force_count(&field, &rep.curve, a)?);
            }
            let oracle: Vec<u64> = oracle.into_iter().collect();
            let agree = match norm_engine {
                Some(v) => oracle == vec![v],
                None => oracle.is_empty(),
            };
            let status = match (printed_value, norm_engine) {
                _ if !agree => ReproStatus::Mismatch,
                (Some(p), Some(v)) if p == v => ReproStatus::Match,
                (Some(_), None) => ReproStatus::NotRealized,
                (None, Some(_)) => ReproStatus::Extra,
                _ => ReproStatus::Mismatch,
            };
            rows.push(ReproRow {
                class,
                group: group.structure.to_string(),
                order,
                printed: printed_value,
                norm_engine,
                oracle,
                equation: rep.equation.to_string(),
                degree: rep.degree,
                status,
            });
        }
    }
    let pass = rows.iter().all(|r| r.status != ReproStatus::Mismatch);
    Ok(TableReport { ext_degree, rows, pass })
}
