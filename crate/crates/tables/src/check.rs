use enriques_configs::odd_order_smooth_case;
use enriques_ecaut::{element_orders, Characteristic, CurveClass, JClass};
use serde::{Deserialize, Serialize};

use crate::{data, Figure, GroupTag, SurfaceKind, TableData, TableRow};

pub const ORDER_EXEMPT_FLAG: &str =
    "sourced from the classification tables, not derivable from elliptic-curve fixed-point counts";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub subject: String,
    pub pass: bool,
    pub detail: String,
    pub flag: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub schema: String,
    pub checks: Vec<Check>,
    pub figures: Vec<Figure>,
    pub pass: bool,
}

impl ConsistencyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn by_name<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a Check> {
        self.checks.iter().filter(move |c| c.name == name)
    }
}

pub const QUOTIENT: &str = "2-elementary quotient";
pub const SUPERSINGULAR_LIST: &str = "supersingular Aut_ct list";
pub const CLASSICAL_RANK: &str = "classical Aut_nt rank";
pub const CHAR_NOT_2: &str = "char ≠ 2 bound";
pub const ELEMENT_ORDERS: &str = "element orders";

fn check(name: &str, subject: String, pass: bool, detail: String) -> Check {
    Check { name: name.to_string(), subject, pass, detail, flag: None }
}

/// `nt / ct` is 2-elementary: the index is a power of 2 dividing 4 and every
/// square of `nt` lies in `ct`.
pub fn quotient_is_two_elementary(ct: GroupTag, nt: GroupTag) -> bool {
    let (c, n) = (ct.order(), nt.order());
    if n % c != 0 {
        return false;
    }
    let index = n / c;
    index.is_power_of_two() && 4 % index == 0 && c % nt.squares_subgroup_order() == 0
}

fn row_checks(row: &TableRow, d: &TableData, out: &mut Vec<Check>) {
    let subject = row.surface.to_string();
    let cts = row.aut_ct.alternatives();
    if let Some(nt) = row.effective_aut_nt() {
        let nts = nt.alternatives();
        let pairs: Vec<(GroupTag, GroupTag)> = if row.aut_nt.is_none() {
            cts.iter().map(|&c| (c, c)).collect()
        } else {
            cts.iter().flat_map(|&c| nts.iter().map(move |&n| (c, n))).collect()
        };
        for (c, n) in pairs {
            let pass = quotient_is_two_elementary(c, n);
            let detail = format!("|{n}| / |{c}| = {} / {}", n.order(), c.order());
            out.push(check(QUOTIENT, subject.clone(), pass, detail));
        }
    }
    if row.surface.kind == SurfaceKind::Supersingular {
        for &c in &cts {
            let pass = d.bounds.supersingular_aut_ct.contains(&c);
            out.push(check(SUPERSINGULAR_LIST, subject.clone(), pass, format!("{c}")));
        }
        element_order_checks(row, &subject, out);
    }
    if row.surface.kind == SurfaceKind::Classical {
        if let Some(nt) = &row.aut_nt {
            for n in nt.alternatives() {
                let rank = n.two_elementary_rank();
                let pass = matches!(rank, Some(b) if b <= 2);
                let detail = match rank {
                    Some(b) => format!("{n} = (Z/2)^{b}"),
                    None => format!("{n} is not 2-elementary"),
                };
                out.push(check(CLASSICAL_RANK, subject.clone(), pass, detail));
            }
        }
    }
}

/// Element orders of a supersingular `Aut_ct` against what the fixed fibers
/// allow: even orders must act on the supersingular elliptic curve, and odd
/// orders fixing a smooth fiber must yield a configuration.
fn element_order_checks(row: &TableRow, subject: &str, out: &mut Vec<Check>) {
    let curve = CurveClass::new(Characteristic::Two, JClass::J0);
    let on_curve = element_orders(&curve).unwrap_or_default();
    for c in row.aut_ct.alternatives() {
        for o in c.element_orders().into_iter().filter(|&o| o > 1) {
            let ch = if o % 2 == 0 {
                let pass = on_curve.contains(&o);
                check(ELEMENT_ORDERS, subject.to_string(), pass, format!("{c}: order {o} on the elliptic curve"))
            } else {
                match odd_order_smooth_case(o) {
                    Ok(v) if !v.is_empty() => check(
                        ELEMENT_ORDERS,
                        subject.to_string(),
                        true,
                        format!("{c}: order {o} has {} smooth-fiber configurations", v.len()),
                    ),
                    Ok(_) => {
                        let mut ch = check(
                            ELEMENT_ORDERS,
                            subject.to_string(),
                            true,
                            format!("{c}: order {o} fixes no smooth fiber"),
                        );
                        ch.flag = Some(ORDER_EXEMPT_FLAG.to_string());
                        ch
                    }
                    Err(e) => check(ELEMENT_ORDERS, subject.to_string(), false, format!("{c}: order {o}: {e}")),
                }
            };
            out.push(ch);
        }
    }
}

fn bound_checks(d: &TableData, out: &mut Vec<Check>) {
    for &g in &d.bounds.char_not_2_aut_nt {
        let pass = g.is_cyclic() && g.order() <= 4 && g.order().is_power_of_two();
        out.push(check(CHAR_NOT_2, format!("{g}"), pass, format!("cyclic: {}, order {}", g.is_cyclic(), g.order())));
    }
    for &g in &d.bounds.classical_aut_nt {
        let pass = matches!(g.two_elementary_rank(), Some(b) if b <= 2);
        let detail = match g.two_elementary_rank() {
            Some(b) => format!("{g} = (Z/2)^{b}"),
            None => format!("{g} is not 2-elementary"),
        };
        out.push(check(CLASSICAL_RANK, format!("bound {g}"), pass, detail));
    }
}

pub fn consistency_check_of(d: &TableData) -> ConsistencyReport {
    let mut checks = Vec::new();
    for row in &d.rows {
        row_checks(row, d, &mut checks);
    }
    bound_checks(d, &mut checks);
    let pass = checks.iter().all(|c| c.pass);
    ConsistencyReport { schema: d.schema.clone(), checks, figures: d.figures.clone(), pass }
}

pub fn consistency_check() -> ConsistencyReport {
    consistency_check_of(data())
}
