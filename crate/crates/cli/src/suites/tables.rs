use enriques_tables::{consistency_check, table_rows};

use crate::report::{Section, Table};

pub fn consistency() -> Section {
    let mut s = Section::new("tables-consistency");
    let rep = consistency_check();
    for c in &rep.checks {
        let detail = match &c.flag {
            Some(f) => format!("{} [{f}]", c.detail),
            None => c.detail.clone(),
        };
        s.assert(format!("{}: {}", c.name, c.subject), c.pass, detail);
    }
    let mut t = Table::new("automorphism groups", &["surface", "Aut_ct", "Aut_nt"]);
    for r in table_rows() {
        let nt = r.aut_nt.as_ref().map_or_else(|| "-".to_string(), |g| g.to_string());
        t.push([r.surface.to_string(), r.aut_ct.to_string(), nt]);
    }
    s.tables.push(t);
    for f in &rep.figures {
        s.note(format!("{}: {}", f.name, f.status));
    }
    s
}
