use enriques_fibers::{catalog, euler, fixed_locus_check, two_connected_min, FiberTag};

use super::SuiteResult;
use crate::report::{Section, Table};
use crate::RunConfig;

pub const MAX_N: u32 = 9;
pub const TAME_ORDERS: [u32; 4] = [2, 3, 5, 7];

/// `I_n` and `I_n*` for `n ≤ MAX_N`, then `II, III, IV, IV*, III*, II*`.
pub fn tags() -> Vec<FiberTag> {
    let mut v: Vec<FiberTag> = (1..=MAX_N).map(FiberTag::i_n).collect();
    v.extend([FiberTag::A0ss, FiberTag::A1s, FiberTag::A2s]);
    v.extend((0..=MAX_N).map(FiberTag::i_n_star));
    v.extend([FiberTag::E6t, FiberTag::E7t, FiberTag::E8t]);
    v
}

/// Euler numbers as tabulated by Kodaira.
fn printed_euler(tag: FiberTag) -> i64 {
    match tag {
        FiberTag::A0s => 1,
        FiberTag::A(k) => k as i64 + 1,
        FiberTag::A0ss => 2,
        FiberTag::A1s => 3,
        FiberTag::A2s => 4,
        FiberTag::D(k) => k as i64 - 4 + 6,
        FiberTag::E6t => 8,
        FiberTag::E7t => 9,
        FiberTag::E8t => 10,
        FiberTag::Smooth => 0,
    }
}

pub fn euler_table() -> SuiteResult {
    let mut s = Section::new("fibers-euler");
    let mut t = Table::new("Euler numbers", &["Kodaira", "Dynkin", "components", "e (model)", "e (table)"]);
    let mut bad = Vec::new();
    for tag in tags() {
        let c = catalog(tag)?;
        let e = euler(&c.model);
        if e != printed_euler(tag) {
            bad.push(tag.kodaira());
        }
        t.push([tag.kodaira(), tag.dynkin(), c.m.to_string(), e.to_string(), printed_euler(tag).to_string()]);
    }
    s.assert(
        format!("e from incidence models, n ≤ {MAX_N}"),
        bad.is_empty(),
        if bad.is_empty() { format!("{} types agree", t.rows.len()) } else { format!("mismatch: {}", bad.join(", ")) },
    );
    s.tables.push(t);
    Ok(s)
}

pub fn two_connected() -> SuiteResult {
    let mut s = Section::new("fibers-2conn");
    let mut t = Table::new("numerical 2-connectedness", &["Kodaira", "multiplicities", "min D1·D2"]);
    for tag in tags() {
        let c = catalog(tag)?;
        if !c.model.is_reducible() {
            continue;
        }
        let k = two_connected_min(&c.model)?;
        s.assert(format!("{} is 2-connected", tag.kodaira()), k >= 2, format!("min = {k}"));
        t.push([tag.kodaira(), format!("{:?}", c.model.multiplicities()), k.to_string()]);
    }
    s.tables.push(t);
    Ok(s)
}

pub fn lefschetz(config: &RunConfig) -> SuiteResult {
    let mut s = Section::new("lefschetz");
    let orders: Vec<u32> = config.order.map(|o| vec![o]).unwrap_or_else(|| TAME_ORDERS.to_vec());
    let mut t = Table::new("fixed-locus Euler numbers", &["Kodaira", "order", "e(F)", "actions", "e(F^g)", "expected"]);
    for tag in tags() {
        let c = catalog(tag)?;
        if !c.model.is_reducible() {
            continue;
        }
        for &order in &orders {
            let r = fixed_locus_check(tag, order)?;
            let (pass, expected) = if tag == FiberTag::A(1) {
                let want: Vec<i64> = if order % 2 == 0 { vec![2, 4] } else { vec![2] };
                (r.values == want, format!("{want:?}"))
            } else {
                (r.pass, r.expected.clone())
            };
            s.assert(
                format!("{} order {order}", tag.kodaira()),
                pass,
                format!("values {:?}, expected {expected}", r.values),
            );
            t.push([
                tag.kodaira(),
                order.to_string(),
                r.euler.to_string(),
                r.actions.to_string(),
                format!("{:?}", r.values),
                expected,
            ]);
        }
    }
    s.tables.push(t);
    s.note("I2 is the only reducible type with an action where e(F^g) ≠ e(F).");
    Ok(s)
}
