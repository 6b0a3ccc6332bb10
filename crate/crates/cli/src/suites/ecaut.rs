use enriques_ecaut::{reproduce, ReproStatus};

use super::SuiteResult;
use crate::report::{Section, Table};
use crate::RunConfig;

fn opt(v: Option<u64>) -> String {
    v.map_or("-".to_string(), |x| x.to_string())
}

pub fn tables(config: &RunConfig) -> SuiteResult {
    let mut s = Section::new("ecaut-tables");
    let rep = reproduce(config.ext_degree)?;
    let mut t = Table::new(
        "fixed points |E^g|",
        &["class", "Aut(E)", "order", "printed", "norm engine", "oracle", "curve", "field", "status"],
    );
    for r in &rep.rows {
        let field = match r.class.characteristic.prime() {
            Some(p) => format!("F_{p}^{}", r.degree),
            None => "F_13".to_string(),
        };
        let status = format!("{:?}", r.status);
        t.push([
            r.class.to_string(),
            r.group.clone(),
            r.order.to_string(),
            opt(r.printed),
            opt(r.norm_engine),
            format!("{:?}", r.oracle),
            r.equation.clone(),
            field,
            status,
        ]);
        if r.printed.is_some() {
            s.assert(
                format!("{} order {}", r.class, r.order),
                r.status != ReproStatus::Mismatch,
                format!(
                    "printed {}, norm {}, oracle {:?}: {:?}",
                    opt(r.printed),
                    opt(r.norm_engine),
                    r.oracle,
                    r.status
                ),
            );
        } else if r.status == ReproStatus::Mismatch {
            s.assert(format!("{} order {} (not printed)", r.class, r.order), false, "engines disagree");
        }
        if r.status == ReproStatus::NotRealized {
            s.note(format!(
                "{} order {}: printed, but {} has no element of that order; neither engine finds one",
                r.class, r.order, r.group
            ));
        }
    }
    s.tables.push(t);
    s.note(format!("characteristic 2 and 3 representatives over degree-{} extensions", config.ext_degree));
    Ok(s)
}
