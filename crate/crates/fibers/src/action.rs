use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

use crate::model::{catalog, euler, FiberModel};
use crate::{FiberError, FiberTag};

/// A point on the normalization of a component: a branch of a singular point
/// or an anonymous smooth point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Slot {
    Branch { point: u32, index: u32 },
    Free(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentAction {
    /// Pointwise fixed.
    Identity,
    /// Nontrivial of the given order with exactly the two listed fixed points.
    Tame { order: u32, fixed: [Slot; 2] },
}

/// An automorphism of finite order restricted to a fiber, fixing every
/// component. `point_image[i]` is the id of the image of the `i`-th point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberAction {
    pub order: u32,
    pub point_image: Vec<u32>,
    pub branch_swaps: Vec<u32>,
    pub components: Vec<ComponentAction>,
}

fn divisors_above_one(n: u32) -> Vec<u32> {
    (2..=n).filter(|d| n % d == 0).collect()
}

/// Slots of the component at position `ci`, in point order.
fn singular_slots(model: &FiberModel, ci: usize) -> Vec<Slot> {
    let cid = model.components[ci].id;
    let mut out = Vec::new();
    for p in &model.points {
        for index in 0..p.count_on(cid) {
            out.push(Slot::Branch { point: p.id, index });
        }
    }
    out
}

struct SlotMotion {
    fixed: Vec<Slot>,
    cycle_lengths: BTreeSet<usize>,
}

fn slot_motion(model: &FiberModel, ci: usize, image: &BTreeMap<u32, u32>, swaps: &BTreeSet<u32>) -> SlotMotion {
    let cid = model.components[ci].id;
    let slots = singular_slots(model, ci);
    let map = |s: Slot| match s {
        Slot::Branch { point, index } => {
            let q = image[&point];
            let count = model.points.iter().find(|p| p.id == point).map(|p| p.count_on(cid)).unwrap_or(1);
            let index = if q == point && swaps.contains(&point) { count - 1 - index } else { index };
            Slot::Branch { point: q, index }
        }
        f => f,
    };
    let mut fixed = Vec::new();
    let mut cycle_lengths = BTreeSet::new();
    let mut seen = BTreeSet::new();
    for &s in &slots {
        if seen.contains(&s) {
            continue;
        }
        let mut len = 0;
        let mut t = s;
        loop {
            seen.insert(t);
            len += 1;
            t = map(t);
            if t == s {
                break;
            }
        }
        if len == 1 {
            fixed.push(s);
        } else {
            cycle_lengths.insert(len);
        }
    }
    SlotMotion { fixed, cycle_lengths }
}

fn point_signature(model: &FiberModel, i: usize) -> (Vec<(u32, u32)>, u32) {
    let p = &model.points[i];
    let mut b: Vec<(u32, u32)> = p.branches.iter().map(|b| (b.component, b.count)).collect();
    b.sort();
    (b, p.local_mult)
}

fn has_self_node(model: &FiberModel, i: usize) -> bool {
    model.points[i].branches.iter().any(|b| b.count == 2)
}

/// The options for one component under a fixed point permutation; empty when
/// none is consistent.
fn component_options(motion: &SlotMotion, order: u32) -> Vec<ComponentAction> {
    let mut out = Vec::new();
    if motion.cycle_lengths.is_empty() {
        out.push(ComponentAction::Identity);
    }
    if motion.fixed.len() > 2 {
        return out;
    }
    let orders = match motion.cycle_lengths.len() {
        0 => divisors_above_one(order),
        1 => {
            let k = *motion.cycle_lengths.iter().next().unwrap() as u32;
            if order % k == 0 {
                vec![k]
            } else {
                vec![]
            }
        }
        _ => vec![],
    };
    let mut slots = motion.fixed.clone();
    let mut free = 0;
    while slots.len() < 2 {
        slots.push(Slot::Free(free));
        free += 1;
    }
    for d in orders {
        out.push(ComponentAction::Tame { order: d, fixed: [slots[0], slots[1]] });
    }
    out
}

/// All actions of a tame automorphism of the given order that fix every
/// component, in a fixed enumeration order.
pub fn admissible_actions(model: &FiberModel, order: u32) -> Result<Vec<FiberAction>, FiberError> {
    if order < 2 {
        return Err(FiberError::BadOrder(order));
    }
    let np = model.points.len();
    let mut groups: BTreeMap<(Vec<(u32, u32)>, u32), Vec<usize>> = BTreeMap::new();
    for i in 0..np {
        groups.entry(point_signature(model, i)).or_default().push(i);
    }
    let group_perms: Vec<Vec<Vec<(usize, usize)>>> = groups
        .values()
        .map(|g| {
            g.iter()
                .permutations(g.len())
                .map(|img| g.iter().copied().zip(img.into_iter().copied()).collect())
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    for choice in group_perms.into_iter().multi_cartesian_product() {
        let mut img = vec![0usize; np];
        for pairs in &choice {
            for &(i, j) in pairs {
                img[i] = j;
            }
        }
        let image: BTreeMap<u32, u32> = (0..np).map(|i| (model.points[i].id, model.points[img[i]].id)).collect();
        let swappable: Vec<u32> = (0..np)
            .filter(|&i| img[i] == i && has_self_node(model, i) && order % 2 == 0)
            .map(|i| model.points[i].id)
            .collect();
        for swaps in swappable.iter().copied().powerset() {
            let swaps: BTreeSet<u32> = swaps.into_iter().collect();
            let options: Vec<Vec<ComponentAction>> = (0..model.components.len())
                .map(|ci| component_options(&slot_motion(model, ci, &image, &swaps), order))
                .collect();
            if options.iter().any(|o| o.is_empty()) {
                continue;
            }
            for comps in options.into_iter().multi_cartesian_product() {
                out.push(FiberAction {
                    order,
                    point_image: (0..np).map(|i| model.points[img[i]].id).collect(),
                    branch_swaps: swaps.iter().copied().collect(),
                    components: comps,
                });
            }
        }
    }
    Ok(out)
}

pub fn check_admissible(model: &FiberModel, action: &FiberAction) -> Result<(), FiberError> {
    let bad = |s: &str| Err(FiberError::Inadmissible(s.to_string()));
    if action.order < 2 {
        return Err(FiberError::BadOrder(action.order));
    }
    let np = model.points.len();
    if action.point_image.len() != np || action.components.len() != model.components.len() {
        return bad("shape does not match the model");
    }
    let pos = |id: u32| model.points.iter().position(|p| p.id == id);
    let mut image = BTreeMap::new();
    let mut targets = BTreeSet::new();
    for (i, &q) in action.point_image.iter().enumerate() {
        let Some(j) = pos(q) else { return bad("unknown point in permutation") };
        if point_signature(model, i) != point_signature(model, j) {
            return bad("point permutation does not preserve incidence");
        }
        image.insert(model.points[i].id, q);
        targets.insert(q);
    }
    if targets.len() != np {
        return bad("point map is not a permutation");
    }
    let swaps: BTreeSet<u32> = action.branch_swaps.iter().copied().collect();
    for &s in &swaps {
        let Some(i) = pos(s) else { return bad("unknown swapped point") };
        if image[&s] != s || !has_self_node(model, i) {
            return bad("branch swap away from a fixed self-node");
        }
        if action.order % 2 != 0 {
            return bad("branch swap needs even order");
        }
    }
    for (ci, ca) in action.components.iter().enumerate() {
        let motion = slot_motion(model, ci, &image, &swaps);
        match *ca {
            ComponentAction::Identity => {
                if !motion.cycle_lengths.is_empty() {
                    return bad("identity component with moved points");
                }
            }
            ComponentAction::Tame { order, fixed } => {
                if order < 2 || action.order % order != 0 {
                    return bad("component order does not divide the order");
                }
                if fixed[0] == fixed[1] {
                    return bad("fixed slots are not distinct");
                }
                if motion.cycle_lengths.iter().any(|&k| k as u32 != order) {
                    return bad("moved points do not form orbits of the component order");
                }
                if !motion.fixed.iter().all(|s| fixed.contains(s)) {
                    return bad("a fixed singular point is not among the two fixed slots");
                }
                for s in fixed {
                    if let Slot::Branch { .. } = s {
                        if !motion.fixed.contains(&s) {
                            return bad("declared fixed slot is moved or absent");
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Euler number of the fixed locus: the pointwise-fixed subcurve plus the
/// isolated fixed points.
pub fn fixed_euler(model: &FiberModel, action: &FiberAction) -> Result<i64, FiberError> {
    check_admissible(model, action)?;
    let identity: BTreeSet<u32> = model
        .components
        .iter()
        .zip(&action.components)
        .filter(|(_, a)| **a == ComponentAction::Identity)
        .map(|(c, _)| c.id)
        .collect();
    let mut e = 2 * identity.len() as i64;
    for (i, p) in model.points.iter().enumerate() {
        let b: i64 = p.branches.iter().filter(|b| identity.contains(&b.component)).map(|b| b.count as i64).sum();
        if b >= 1 {
            e -= b - 1;
        } else if action.point_image[i] == p.id {
            e += 1;
        }
    }
    for ca in &action.components {
        if let ComponentAction::Tame { fixed, .. } = ca {
            e += fixed.iter().filter(|s| matches!(s, Slot::Free(_))).count() as i64;
        }
    }
    Ok(e)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedLocusReport {
    pub tag: FiberTag,
    pub order: u32,
    pub euler: i64,
    pub actions: usize,
    pub values: Vec<i64>,
    pub expected: String,
    pub pass: bool,
}

/// Exhausts the admissible actions of the given order on the catalog model of
/// `tag` and compares the fixed-locus Euler numbers with `e(F)`.
pub fn fixed_locus_check(tag: FiberTag, order: u32) -> Result<FixedLocusReport, FiberError> {
    let entry = catalog(tag)?;
    let e = euler(&entry.model);
    let actions = admissible_actions(&entry.model, order)?;
    let mut values = BTreeSet::new();
    for a in &actions {
        values.insert(fixed_euler(&entry.model, a)?);
    }
    let (expected, pass) = if tag == FiberTag::A(1) {
        if order % 2 == 1 {
            ("{2}".to_string(), values == BTreeSet::from([2]))
        } else {
            ("⊆ {2, 4}".to_string(), values.is_subset(&BTreeSet::from([2, 4])))
        }
    } else if entry.model.is_reducible() {
        (format!("{{{e}}}"), values == BTreeSet::from([e]))
    } else {
        (format!("⊆ [0, {}]", e + 2), values.iter().all(|&v| (0..=e + 2).contains(&v)))
    };
    Ok(FixedLocusReport {
        tag,
        order,
        euler: e,
        actions: actions.len(),
        values: values.into_iter().collect(),
        expected,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(t: FiberTag) -> FiberModel {
        catalog(t).unwrap().model
    }

    #[test]
    fn i2_order3_fixes_nodes() {
        let m = model(FiberTag::A(1));
        let acts = admissible_actions(&m, 3).unwrap();
        assert!(!acts.is_empty());
        for a in &acts {
            assert_eq!(a.point_image, vec![0, 1]);
            assert_eq!(fixed_euler(&m, a).unwrap(), 2);
        }
    }

    #[test]
    fn i2_node_swap() {
        let m = model(FiberTag::A(1));
        let acts = admissible_actions(&m, 2).unwrap();
        let swap = acts.iter().find(|a| a.point_image == vec![1, 0]).unwrap();
        assert_eq!(fixed_euler(&m, swap).unwrap(), 4);
        let tame = FiberAction {
            order: 2,
            point_image: vec![0, 1],
            branch_swaps: vec![],
            components: vec![
                ComponentAction::Tame {
                    order: 2,
                    fixed: [Slot::Branch { point: 0, index: 0 }, Slot::Branch { point: 1, index: 0 }],
                };
                2
            ],
        };
        assert_eq!(fixed_euler(&m, &tame).unwrap(), 2);
    }

    #[test]
    fn cusp_actions() {
        let m = model(FiberTag::A0ss);
        let acts = admissible_actions(&m, 2).unwrap();
        assert_eq!(acts.len(), 2);
        for a in &acts {
            match a.components[0] {
                ComponentAction::Identity => {}
                ComponentAction::Tame { fixed, .. } => {
                    assert!(fixed.contains(&Slot::Branch { point: 0, index: 0 }))
                }
            }
        }
    }

    #[test]
    fn inadmissible_rejected() {
        let m = model(FiberTag::D(4));
        let mut a = admissible_actions(&m, 2).unwrap().remove(0);
        a.components[2] = ComponentAction::Tame { order: 2, fixed: [Slot::Free(0), Slot::Free(1)] };
        assert!(fixed_euler(&m, &a).is_err());
        assert_eq!(admissible_actions(&m, 1), Err(FiberError::BadOrder(1)));
    }

    #[test]
    fn fixed_locus_examples() {
        let r = fixed_locus_check(FiberTag::E7t, 2).unwrap();
        assert!(r.pass);
        assert_eq!(r.values, vec![9]);
        assert_eq!(fixed_locus_check(FiberTag::A(1), 2).unwrap().values, vec![2, 4]);
        assert_eq!(fixed_locus_check(FiberTag::A(1), 3).unwrap().values, vec![2]);
    }
}
