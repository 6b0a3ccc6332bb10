use enriques_ecaut::{fixed_count, Characteristic, CurveClass, EcError, JClass};
use enriques_fibers::{catalog, FiberKind, FiberTag};

use crate::config::{CharMode, Configuration, Entry, Marker, EULER_BUDGET, SHIODA_TATE_ROOM};
use crate::ConfigError;

struct Case {
    f2: FiberTag,
    /// Euler number left after the two fixed fibers.
    rest: i64,
}

/// Fixed fibers when one of them is a smooth supersingular curve: the
/// automorphism fixes `|E^g|` points on it and `e(F2^g) = e(F2)` on the other.
fn cases(order: u32) -> Result<Vec<Case>, ConfigError> {
    if order < 3 || order % 2 == 0 {
        return Err(ConfigError::BadOrder(order));
    }
    let curve = CurveClass::new(Characteristic::Two, JClass::J0);
    let on_smooth = match fixed_count(&curve, order) {
        Ok(n) => n as i64,
        Err(EcError::OrderNotRealized(_)) => return Ok(vec![]),
        Err(e) => return Err(e.into()),
    };
    let target = EULER_BUDGET - on_smooth;
    let mut out = Vec::new();
    let mut candidates: Vec<FiberTag> = (1..=SHIODA_TATE_ROOM as u32).map(FiberTag::A).collect();
    candidates.extend((4..=4 + SHIODA_TATE_ROOM as u32).map(FiberTag::D));
    candidates.extend([FiberTag::E6t, FiberTag::E7t, FiberTag::E8t]);
    for f2 in candidates {
        let c = catalog(f2)?;
        if c.m > SHIODA_TATE_ROOM + 1 || c.euler_tame != target {
            continue;
        }
        let rest = EULER_BUDGET - c.euler_tame;
        out.push(Case { f2, rest });
    }
    Ok(out)
}

fn with_smooth(mut entries: Vec<Entry>) -> Result<Configuration, ConfigError> {
    entries.push(Entry { tag: FiberTag::Smooth, marker: Marker::Double, wild: 0 });
    Configuration::new(entries, CharMode::Char2Supersingular)
}

/// Configurations of a pencil with a smooth fixed fiber for an automorphism
/// of the given odd order. The rest of the Euler budget goes to moved nodal
/// fibers when the other fixed fiber is multiplicative, and to its wild term
/// when it is additive.
pub fn odd_order_smooth_case(order: u32) -> Result<Vec<Configuration>, ConfigError> {
    let mut out = Vec::new();
    for Case { f2, rest } in cases(order)? {
        let mut entries = vec![Entry::simple(f2)];
        if catalog(f2)?.kind == FiberKind::Multiplicative {
            if rest % order as i64 != 0 {
                continue;
            }
            entries.extend((0..rest).map(|_| Entry::simple(FiberTag::A0s)));
        } else {
            entries[0].wild = rest as u32;
        }
        out.push(with_smooth(entries)?);
    }
    out.sort();
    Ok(out)
}

/// Both readings of the additive cases: all of the remaining budget in the
/// wild term, or in one orbit of moved nodal fibers.
pub fn odd_order_alternatives(order: u32) -> Result<Vec<(Configuration, Configuration)>, ConfigError> {
    let mut out = Vec::new();
    for Case { f2, rest } in cases(order)? {
        if catalog(f2)?.kind == FiberKind::Multiplicative || rest % order as i64 != 0 {
            continue;
        }
        let wild = with_smooth(vec![Entry { tag: f2, marker: Marker::Simple, wild: rest as u32 }])?;
        let mut nodal = vec![Entry::simple(f2)];
        nodal.extend((0..rest).map(|_| Entry::simple(FiberTag::A0s)));
        out.push((wild, with_smooth(nodal)?));
    }
    Ok(out)
}
