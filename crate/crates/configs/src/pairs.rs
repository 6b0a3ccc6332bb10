use enriques_fibers::{catalog, FiberTag};
use serde::{Deserialize, Serialize};

use crate::config::{CharMode, Configuration, Entry, EULER_BUDGET, SHIODA_TATE_ROOM};

/// Pairs of additive fibers realized on extremal rational genus one fibrations
/// with an automorphism of odd order fixing both fibers.
pub const ALLOW_LIST: [(FiberTag, FiberTag); 5] = [
    (FiberTag::D(4), FiberTag::D(4)),
    (FiberTag::D(8), FiberTag::A0ss),
    (FiberTag::E6t, FiberTag::A2s),
    (FiberTag::E7t, FiberTag::A1s),
    (FiberTag::E8t, FiberTag::A0ss),
];

pub const NOT_IN_LIST: &str = "numerically consistent, not in the realizable list";

/// Additive types with at most `SHIODA_TATE_ROOM + 1` components.
fn additive_types() -> Vec<FiberTag> {
    let mut out = vec![FiberTag::A0ss, FiberTag::A1s, FiberTag::A2s];
    out.extend((4..=4 + SHIODA_TATE_ROOM as u32).map(FiberTag::D));
    out.extend([FiberTag::E6t, FiberTag::E7t, FiberTag::E8t]);
    out.retain(|&t| catalog(t).is_ok_and(|c| c.m <= SHIODA_TATE_ROOM + 1));
    out
}

/// Unordered pairs of additive types with `m1 + m2 = 10` and tame Euler
/// numbers summing to 12, in a fixed order.
pub fn enumerate_pairs() -> Vec<Configuration> {
    let types = additive_types();
    let mut out = Vec::new();
    for (i, &t1) in types.iter().enumerate() {
        for &t2 in &types[i..] {
            let (c1, c2) = (catalog(t1).unwrap(), catalog(t2).unwrap());
            if c1.m + c2.m == SHIODA_TATE_ROOM + 2 && c1.euler_tame + c2.euler_tame == EULER_BUDGET {
                let c = Configuration::new(vec![Entry::simple(t1), Entry::simple(t2)], CharMode::Generic)
                    .expect("pair within the Shioda–Tate room");
                out.push(c);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectedPair {
    pub config: Configuration,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterOutcome {
    pub realizable: Vec<Configuration>,
    pub rejected: Vec<RejectedPair>,
}

fn allowed(c: &Configuration) -> bool {
    let mut tags = c.tags();
    tags.sort();
    ALLOW_LIST.iter().any(|&(a, b)| {
        let mut want = vec![a, b];
        want.sort();
        want == tags
    })
}

pub fn realizable_filter(pairs: &[Configuration]) -> FilterOutcome {
    let (realizable, rejected): (Vec<_>, Vec<_>) = pairs.iter().cloned().partition(allowed);
    FilterOutcome {
        realizable,
        rejected: rejected.into_iter().map(|config| RejectedPair { config, reason: NOT_IN_LIST.into() }).collect(),
    }
}
