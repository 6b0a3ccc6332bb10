use enriques_fibers::*;
use proptest::prelude::*;
use std::collections::BTreeSet;

/// Kodaira's Euler numbers, kept only as an oracle.
fn kodaira_euler(tag: FiberTag) -> i64 {
    match tag {
        FiberTag::A0s => 1,
        FiberTag::A(k) => k as i64 + 1,
        FiberTag::D(k) => k as i64 - 4 + 6,
        FiberTag::A0ss => 2,
        FiberTag::A1s => 3,
        FiberTag::A2s => 4,
        FiberTag::E6t => 8,
        FiberTag::E7t => 9,
        FiberTag::E8t => 10,
        FiberTag::Smooth => 0,
    }
}

fn all_tags(max_n: u32) -> Vec<FiberTag> {
    let mut v: Vec<FiberTag> = (1..=max_n).map(FiberTag::i_n).collect();
    v.extend((0..=max_n).map(FiberTag::i_n_star));
    v.extend([FiberTag::A0ss, FiberTag::A1s, FiberTag::A2s, FiberTag::E6t, FiberTag::E7t, FiberTag::E8t]);
    v
}

/// Lefschetz number `Σ (-1)^i Tr(g* | H^i(F))` from the action of the point
/// and branch permutation on the component/point incidence graph.
fn lefschetz(model: &FiberModel, action: &FiberAction) -> i64 {
    let m = model.components.len() as i64;
    let mut fixed_points = 0;
    let mut fixed_edges = 0;
    for (i, p) in model.points.iter().enumerate() {
        if action.point_image[i] != p.id {
            continue;
        }
        fixed_points += 1;
        let swapped = action.branch_swaps.contains(&p.id);
        for b in &p.branches {
            fixed_edges += if swapped && b.count == 2 { 0 } else { b.count as i64 };
        }
    }
    // tr H^1 = tr C1 − tr C0 + 1, tr H^0 = 1, tr H^2 = m.
    let tr_h1 = fixed_edges - (m + fixed_points) + 1;
    1 - tr_h1 + m
}

#[test]
fn euler_table() {
    for tag in all_tags(9) {
        let entry = catalog(tag).unwrap();
        assert_eq!(entry.euler_tame, kodaira_euler(tag), "{tag}");
        assert_eq!(euler(&entry.model), entry.euler_tame);
    }
}

#[test]
fn component_counts() {
    for tag in all_tags(9) {
        let entry = catalog(tag).unwrap();
        let expected = match tag {
            FiberTag::A0s | FiberTag::A0ss => 1,
            FiberTag::A(k) => k as usize + 1,
            FiberTag::D(k) => k as usize + 1,
            FiberTag::A1s => 2,
            FiberTag::A2s => 3,
            FiberTag::E6t => 7,
            FiberTag::E7t => 8,
            FiberTag::E8t => 9,
            FiberTag::Smooth => 0,
        };
        assert_eq!(entry.m, expected, "{tag}");
        entry.model.validate().unwrap();
    }
}

#[test]
fn two_connected_everywhere() {
    for tag in all_tags(9) {
        let entry = catalog(tag).unwrap();
        if entry.model.is_reducible() {
            assert!(two_connected_min(&entry.model).unwrap() >= 2, "{tag}");
        }
    }
    let e8 = catalog(FiberTag::E8t).unwrap();
    let mut mults = e8.model.multiplicities();
    mults.sort();
    assert_eq!(mults, vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
    assert_eq!(two_connected_min(&e8.model).unwrap(), 2);
}

#[test]
fn fixed_locus_for_reducible_types() {
    for tag in all_tags(9) {
        let entry = catalog(tag).unwrap();
        if !entry.model.is_reducible() {
            continue;
        }
        for order in [2, 3, 5, 7] {
            let r = fixed_locus_check(tag, order).unwrap();
            assert!(r.pass, "{tag} order {order}: {:?}", r.values);
            if tag == FiberTag::A(1) {
                let want: Vec<i64> = if order % 2 == 0 { vec![2, 4] } else { vec![2] };
                assert_eq!(r.values, want);
            } else {
                assert_eq!(r.values, vec![entry.euler_tame], "{tag}");
            }
        }
    }
}

#[test]
fn fixed_locus_matches_lefschetz_number() {
    for tag in all_tags(6) {
        let model = catalog(tag).unwrap().model;
        for order in [2, 3, 4, 6] {
            for a in admissible_actions(&model, order).unwrap() {
                assert_eq!(fixed_euler(&model, &a).unwrap(), lefschetz(&model, &a), "{tag} {a:?}");
            }
        }
    }
}

#[test]
fn e8_nontrivial_actions() {
    let model = catalog(FiberTag::E8t).unwrap().model;
    let acts = admissible_actions(&model, 2).unwrap();
    assert!(acts.iter().any(|a| a.components.iter().any(|c| *c != ComponentAction::Identity)));
    for a in &acts {
        assert_eq!(fixed_euler(&model, a).unwrap(), 10);
    }
}

#[test]
fn fixed_slots_are_distinct_and_bounded() {
    for tag in all_tags(5) {
        let entry = catalog(tag).unwrap();
        for order in [2, 3, 4] {
            for a in admissible_actions(&entry.model, order).unwrap() {
                check_admissible(&entry.model, &a).unwrap();
                let v = fixed_euler(&entry.model, &a).unwrap();
                assert!(v >= 0 && v <= entry.euler_tame + 2, "{tag}");
                for c in &a.components {
                    if let ComponentAction::Tame { order: d, fixed } = c {
                        assert_ne!(fixed[0], fixed[1]);
                        assert_eq!(order % d, 0);
                    }
                }
            }
        }
    }
}

#[test]
fn smooth_has_no_model() {
    assert_eq!(catalog(FiberTag::Smooth).unwrap_err(), FiberError::Smooth);
}

#[test]
fn json_schema_round_trip() {
    let m = catalog(FiberTag::A1s).unwrap().model;
    let js = serde_json::to_value(&m).unwrap();
    assert_eq!(
        js,
        serde_json::json!({
            "components": [{"id": 0, "mult": 1}, {"id": 1, "mult": 1}],
            "points": [{"id": 0, "branches": [{"component": 0, "count": 1}, {"component": 1, "count": 1}], "local_mult": 2}]
        })
    );
    let back: FiberModel = serde_json::from_value(js).unwrap();
    assert_eq!(back, m);
    let tag: FiberTag = serde_json::from_str("\"I3*\"").unwrap();
    assert_eq!(tag, FiberTag::D(7));
}

fn tag_strategy() -> impl Strategy<Value = FiberTag> {
    prop_oneof![
        (1u32..=9).prop_map(FiberTag::i_n),
        (0u32..=5).prop_map(FiberTag::i_n_star),
        Just(FiberTag::A0ss),
        Just(FiberTag::A1s),
        Just(FiberTag::A2s),
        Just(FiberTag::E6t),
        Just(FiberTag::E7t),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fiber_condition_holds(tag in tag_strategy()) {
        let entry = catalog(tag).unwrap();
        if entry.model.is_reducible() {
            let g = entry.model.intersection_matrix();
            let m = entry.model.multiplicities();
            for row in &g {
                let fc: i64 = row.iter().zip(&m).map(|(x, &k)| x * k as i64).sum();
                prop_assert_eq!(fc, 0);
            }
        }
    }

    #[test]
    fn odd_orders_never_swap(tag in tag_strategy(), k in 1u32..4) {
        let order = 2 * k + 1;
        let model = catalog(tag).unwrap().model;
        let values: BTreeSet<i64> = admissible_actions(&model, order)
            .unwrap()
            .iter()
            .inspect(|a| assert!(a.branch_swaps.is_empty()))
            .map(|a| fixed_euler(&model, a).unwrap())
            .collect();
        prop_assert_eq!(values, BTreeSet::from([euler(&model)]));
    }
}
