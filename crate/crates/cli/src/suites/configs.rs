use enriques_configs::{
    enumerate_pairs, odd_order_alternatives, odd_order_smooth_case, pin_normalization, realizable_filter,
    shared_eight_search, CharMode, Configuration, ALLOW_LIST, FF_NORMALIZATION,
};
use enriques_fibers::FiberTag;
use std::collections::BTreeSet;

use super::SuiteResult;
use crate::report::{Section, Table};
use crate::RunConfig;

pub const SMOOTH_CASE_ORDER: u32 = 3;

fn tag_set(c: &Configuration) -> BTreeSet<FiberTag> {
    c.tags().into_iter().collect()
}

pub fn enumerate(config: &RunConfig) -> SuiteResult {
    let mut s = Section::new("configs-enumerate");
    let pairs = enumerate_pairs();
    s.assert("numerically consistent additive pairs", pairs.len() == 7, format!("{} pairs", pairs.len()));
    let outcome = realizable_filter(&pairs);
    let got: BTreeSet<BTreeSet<FiberTag>> = outcome.realizable.iter().map(tag_set).collect();
    let want: BTreeSet<BTreeSet<FiberTag>> = ALLOW_LIST.iter().map(|&(a, b)| BTreeSet::from([a, b])).collect();
    s.assert(
        "realizable pairs",
        got == want && outcome.realizable.len() == 5,
        format!("{} realizable, {} rejected", outcome.realizable.len(), outcome.rejected.len()),
    );
    let mut t = Table::new("additive pairs", &["pair", "Kodaira", "Σ(m−1)", "Σe", "verdict"]);
    for c in &pairs {
        let verdict = match outcome.rejected.iter().find(|r| &r.config == c) {
            Some(r) => r.reason.clone(),
            None => "realizable".to_string(),
        };
        t.push([c.to_string(), c.kodaira(), c.m_sum().to_string(), c.euler_sum().to_string(), verdict]);
    }
    s.tables.push(t);

    let order = config.order.unwrap_or(SMOOTH_CASE_ORDER);
    if CharMode::from(config.char_mode) != CharMode::Char2Supersingular {
        s.note(format!(
            "smooth-fiber case skipped: it needs a supersingular fixed fiber, char mode is {:?}",
            config.char_mode
        ));
        return Ok(s);
    }
    if order % 2 == 0 {
        s.note(format!("smooth-fiber case skipped: order {order} is even"));
        return Ok(s);
    }
    let smooth = odd_order_smooth_case(order)?;
    let mut t = Table::new(&format!("fixed smooth fiber, order {order}"), &["configuration", "Σe", "Σ(m−1)"]);
    for c in &smooth {
        t.push([c.to_string(), c.euler_sum().to_string(), c.m_sum().to_string()]);
    }
    s.tables.push(t);
    let budgets = smooth.iter().all(|c| c.euler_sum() == 12 && c.m_sum() <= 8);
    s.assert(
        format!("order {order}: Euler and Shioda–Tate budgets"),
        budgets,
        format!("{} configurations", smooth.len()),
    );
    if order == SMOOTH_CASE_ORDER {
        let main: BTreeSet<FiberTag> = smooth
            .iter()
            .filter_map(|c| c.tags().into_iter().find(|&t| t != FiberTag::Smooth && t != FiberTag::A0s))
            .collect();
        let want = BTreeSet::from([FiberTag::A(8), FiberTag::D(7), FiberTag::E7t]);
        let a8 = smooth.iter().find(|c| c.tags().contains(&FiberTag::A(8)));
        let nodal = a8.map_or(0, |c| c.tags().iter().filter(|&&t| t == FiberTag::A0s).count());
        s.assert(
            "order 3: Ã8 + 3Ã0*, D̃7, Ẽ7",
            smooth.len() == 3 && main == want && nodal == 3,
            smooth.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("; "),
        );
    }
    let alts = odd_order_alternatives(order)?;
    if !alts.is_empty() {
        let mut t = Table::new("readings of the remaining Euler budget", &["wild term", "moved nodal fibers"]);
        for (wild, nodal) in &alts {
            t.push([wild.to_string(), nodal.to_string()]);
        }
        s.tables.push(t);
    }
    Ok(s)
}

pub fn shared8() -> SuiteResult {
    let mut s = Section::new("configs-shared8");
    let (d, e) = (FiberTag::D(8), FiberTag::E8t);
    for (t1, t2, expect) in [(d, d, false), (d, e, true), (e, e, true)] {
        let r = shared_eight_search(t1, t2)?;
        let label = format!("({}, {})", t1.kodaira(), t2.kodaira());
        let word = |b: bool| if b { "satisfiable" } else { "unsatisfiable" };
        s.assert(
            format!("{label} {}", word(expect)),
            r.satisfiable == expect,
            format!("{}: {} overlays at F·F' = {}", word(r.satisfiable), r.overlays, r.normalization),
        );
        if let Some(w) = &r.witness {
            let mut t = Table::new(&format!("witness {label}"), &["curve", "in F", "in F'", "mult in F", "mult in F'"]);
            for i in 0..10 {
                let (a, b) = match i {
                    0..=7 => (w.matching[i].0.to_string(), w.matching[i].1.to_string()),
                    8 => (w.extra.0.to_string(), "-".to_string()),
                    _ => ("-".to_string(), w.extra.1.to_string()),
                };
                t.push([format!("C{}", i + 1), a, b, w.mult_f[i].to_string(), w.mult_f2[i].to_string()]);
            }
            s.tables.push(t);
            s.note(format!("{label} witness: C9·C10 = {}, F·F' = {}, det = {}", w.c9_c10, w.f_dot_f2, w.det));
        }
    }
    let pins = pin_normalization()?;
    s.note(format!(
        "normalization scan F·F' ∈ [1, 16] separating (I4*, I4*) from the II* cases: {}",
        if pins.is_empty() { "none".to_string() } else { format!("{pins:?}") }
    ));
    s.note(format!("searches use F·F' = {FF_NORMALIZATION} for fibers F ≡ 2F1, F' ≡ 2F2 with F1·F2 = 1"));
    Ok(s)
}
