use enriques_tables::{
    consistency_check, consistency_check_of, data, parse, quotient_is_two_elementary, shipped_json, table_rows,
    GroupEntry, GroupTag, SurfaceKind, TableRow, CHAR_NOT_2, ELEMENT_ORDERS, FIGURE_UNAVAILABLE, ORDER_EXEMPT_FLAG,
    QUOTIENT, SUPERSINGULAR_LIST,
};
use proptest::prelude::*;

use GroupTag::*;

fn row(kind: SurfaceKind, tag: &str) -> &'static TableRow {
    table_rows()
        .iter()
        .find(|r| r.surface.kind == kind && r.surface.type_tag.as_deref() == Some(tag))
        .unwrap_or_else(|| panic!("no row {kind} {tag}"))
}

#[test]
fn rows_as_printed() {
    let expected: Vec<(SurfaceKind, &str, Vec<GroupTag>, Option<GroupTag>)> = vec![
        (SurfaceKind::Classical, "Ẽ8", vec![Trivial], Some(Trivial)),
        (SurfaceKind::Supersingular, "Ẽ8", vec![Z11], Some(Z11)),
        (SurfaceKind::Classical, "D̃8", vec![Z2], Some(Z2)),
        (SurfaceKind::Supersingular, "D̃8", vec![Q8], Some(Q8)),
        (SurfaceKind::Classical, "Ẽ7¹", vec![Trivial], Some(Z2)),
        (SurfaceKind::Supersingular, "Ẽ7²", vec![Z7, Trivial], None),
        (SurfaceKind::Supersingular, "Ẽ6", vec![Z5], None),
        (SurfaceKind::Classical, "D̃4+D̃4", vec![Trivial], Some(Z2xZ2)),
    ];
    assert_eq!(table_rows().len(), expected.len());
    for (kind, tag, ct, nt) in expected {
        let r = row(kind, tag);
        assert_eq!(r.aut_ct.alternatives(), ct, "{kind} {tag}");
        assert_eq!(r.aut_nt.as_ref().map(|g| g.alternatives()), nt.map(|g| vec![g]), "{kind} {tag}");
    }
}

#[test]
fn examples() {
    let r = row(SurfaceKind::Supersingular, "Ẽ8");
    assert_eq!((r.aut_ct.clone(), r.aut_nt.clone()), (GroupEntry::One(Z11), Some(GroupEntry::One(Z11))));
    let r = row(SurfaceKind::Classical, "D̃8");
    assert_eq!(r.aut_nt, Some(GroupEntry::One(Z2)));
    let r = row(SurfaceKind::Classical, "D̃4+D̃4");
    assert_eq!(r.aut_ct, GroupEntry::One(Trivial));
    assert_eq!(r.aut_nt, Some(GroupEntry::One(Z2xZ2)));
}

#[test]
fn disjunction_is_kept() {
    let r = row(SurfaceKind::Supersingular, "Ẽ7²");
    assert!(r.aut_ct.is_disjunction());
    assert_eq!(r.aut_ct.to_string(), "Z/7 or 1");
    assert_eq!(table_rows().iter().filter(|r| r.aut_ct.is_disjunction()).count(), 1);
}

#[test]
fn classical_tag_bookkeeping() {
    for r in table_rows() {
        assert!(r.surface.kind.is_char2());
        assert_eq!(r.surface.kind.canonical_nonzero(), r.surface.kind == SurfaceKind::Classical);
    }
}

/// Orders and invariants from the standard presentations.
#[test]
fn group_tag_oracle() {
    let table: [(GroupTag, u32, bool, bool, Vec<u32>, Option<u32>); 9] = [
        (Trivial, 1, true, true, vec![1], Some(0)),
        (Z2, 2, true, true, vec![1, 2], Some(1)),
        (Z3, 3, true, true, vec![1, 3], None),
        (Z5, 5, true, true, vec![1, 5], None),
        (Z7, 7, true, true, vec![1, 7], None),
        (Z11, 11, true, true, vec![1, 11], None),
        (Q8, 8, false, false, vec![1, 2, 4], None),
        (Z2xZ2, 4, false, true, vec![1, 2], Some(2)),
        (Z4, 4, true, true, vec![1, 2, 4], None),
    ];
    for (g, order, cyclic, abelian, orders, rank) in table {
        assert_eq!(g.order(), order, "{g}");
        assert_eq!(g.is_cyclic(), cyclic, "{g}");
        assert_eq!(g.is_abelian(), abelian, "{g}");
        assert_eq!(g.element_orders(), orders, "{g}");
        assert_eq!(g.two_elementary_rank(), rank, "{g}");
    }
    assert_eq!(Q8.squares_subgroup_order(), 2);
    assert_eq!(Z4.squares_subgroup_order(), 2);
    assert_eq!(Z2xZ2.squares_subgroup_order(), 1);
}

#[test]
fn quotient_rule() {
    assert!(quotient_is_two_elementary(Z11, Z11));
    assert!(quotient_is_two_elementary(Trivial, Z2));
    assert!(quotient_is_two_elementary(Trivial, Z2xZ2));
    assert!(quotient_is_two_elementary(Z2, Q8));
    assert!(quotient_is_two_elementary(Z2, Z4));
    assert!(!quotient_is_two_elementary(Trivial, Z4));
    assert!(!quotient_is_two_elementary(Trivial, Q8));
    assert!(!quotient_is_two_elementary(Trivial, Z3));
    assert!(!quotient_is_two_elementary(Z2, Z3));
}

#[test]
fn shipped_data_is_consistent() {
    let rep = consistency_check();
    let failures: Vec<_> = rep.failures().collect();
    assert!(rep.pass, "{failures:?}");
    assert_eq!(rep.by_name(QUOTIENT).count(), 9);
    let supersingular: Vec<_> = rep.by_name(SUPERSINGULAR_LIST).map(|c| c.detail.as_str()).collect();
    assert_eq!(supersingular, ["Z/11", "Q8", "Z/7", "1", "Z/5"]);
    assert_eq!(rep.by_name(CHAR_NOT_2).count(), 3);
}

#[test]
fn odd_orders_beyond_three_are_flagged() {
    let rep = consistency_check();
    let mut flagged: Vec<u32> = rep
        .by_name(ELEMENT_ORDERS)
        .filter(|c| c.flag.as_deref() == Some(ORDER_EXEMPT_FLAG))
        .map(|c| c.detail.split("order ").nth(1).unwrap().split(' ').next().unwrap().parse().unwrap())
        .collect();
    flagged.sort_unstable();
    assert_eq!(flagged, [5, 7, 11]);
    assert!(rep.by_name(ELEMENT_ORDERS).filter(|c| c.detail.starts_with("Q8")).all(|c| c.flag.is_none()));
}

#[test]
fn figures_are_placeholders() {
    let d = data();
    assert_eq!(d.figures.len(), 8);
    assert!(d.figures.iter().all(|f| f.status == FIGURE_UNAVAILABLE));
}

#[test]
fn corrupted_data_fails_the_check() {
    let bad = shipped_json().replace(r#""aut_ct": "Q8""#, r#""aut_ct": "Z4""#);
    let rep = consistency_check_of(&parse(&bad).unwrap());
    assert!(!rep.pass);
    let bad = shipped_json().replace(r#""aut_nt": "Z2xZ2""#, r#""aut_nt": "Z4""#);
    assert!(!consistency_check_of(&parse(&bad).unwrap()).pass);
    let mut d = data().clone();
    d.bounds.char_not_2_aut_nt = vec![Z2xZ2];
    assert!(!consistency_check_of(&d).pass);
    let mut d = data().clone();
    d.rows[0].surface.kind = SurfaceKind::Supersingular;
    d.rows[0].aut_ct = GroupEntry::One(Z4);
    d.rows[0].aut_nt = None;
    assert!(!consistency_check_of(&d).pass);
    assert!(parse(&shipped_json().replace("enriques-tables/1", "enriques-tables/0")).is_err());
}

#[test]
fn json_round_trip() {
    let d = data();
    let s = serde_json::to_string(d).unwrap();
    assert_eq!(&parse(&s).unwrap(), d);
}

proptest! {
    #[test]
    fn quotient_rule_matches_orders(a in 0usize..9, b in 0usize..9) {
        let (c, n) = (GroupTag::ALL[a], GroupTag::ALL[b]);
        if quotient_is_two_elementary(c, n) {
            let index = n.order() / c.order();
            prop_assert!(n.order() % c.order() == 0 && (index == 1 || index == 2 || index == 4));
        }
        if c == n {
            prop_assert!(quotient_is_two_elementary(c, n));
        }
    }

    #[test]
    fn element_orders_divide_group_order(a in 0usize..9) {
        let g = GroupTag::ALL[a];
        for o in g.element_orders() {
            prop_assert_eq!(g.order() % o, 0);
        }
    }
}
