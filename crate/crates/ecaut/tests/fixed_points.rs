use enriques_ecaut::*;
use std::collections::BTreeMap;
use std::time::Instant;

#[test]
fn tables_reproduce() {
    let t = Instant::now();
    let rep = reproduce(12).unwrap();
    for r in &rep.rows {
        println!(
            "{} ord {} printed {:?} norm {:?} oracle {:?} {:?}",
            r.class, r.order, r.printed, r.norm_engine, r.oracle, r.status
        );
    }
    assert!(rep.pass);
    assert!(t.elapsed().as_secs() < 10);
    for p in printed_rows() {
        let row = rep.rows.iter().find(|r| r.class == p.class() && r.order == p.order).unwrap();
        match row.status {
            ReproStatus::Match => {
                assert_eq!(row.norm_engine, Some(p.fixed));
                assert_eq!(row.oracle, vec![p.fixed]);
            }
            ReproStatus::NotRealized => {
                // Only the order-4 entry printed for Z/6.
                assert_eq!((p.characteristic, p.j, p.order), (Characteristic::Large, JClass::J0, 4));
                assert!(row.oracle.is_empty());
            }
            s => panic!("unexpected status {s:?} for {p:?}"),
        }
    }
}

#[test]
fn counts_stabilize_between_degrees() {
    for class in CurveClass::all() {
        let (lo, hi) = match class.characteristic {
            Characteristic::Large => (1, 2),
            _ => (6, 12),
        };
        let count = |k: u32| {
            let rep = representative(&class, k);
            let f = Field::get(rep.curve.p, k).unwrap();
            let mut by_order: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
            for a in automorphisms(&f, &rep.curve).iter().filter(|a| a.order(&f) > 1) {
                by_order.entry(a.order(&f)).or_default().push(brute_force_count(&f, &rep.curve, a).unwrap());
            }
            for v in by_order.values_mut() {
                v.sort();
                v.dedup();
            }
            by_order
        };
        assert_eq!(count(lo), count(hi), "{class}");
    }
}

#[test]
fn oracle_group_sizes_match_unit_groups() {
    for class in CurveClass::all() {
        let rep = representative(&class, 12);
        let f = Field::get(rep.curve.p, rep.degree).unwrap();
        let auts = automorphisms(&f, &rep.curve);
        let g = aut_group(&class).unwrap();
        assert_eq!(auts.len() as u32, g.order, "{class}");
        let mut hist_oracle: BTreeMap<u32, usize> = BTreeMap::new();
        for a in &auts {
            assert!(preserves_curve(&f, &rep.curve, a));
            *hist_oracle.entry(a.order(&f)).or_default() += 1;
        }
        let us = units(&class).unwrap();
        let mut hist_units: BTreeMap<u32, usize> = BTreeMap::new();
        for u in &us {
            *hist_units.entry(u.order(24).unwrap()).or_default() += 1;
        }
        assert_eq!(hist_oracle, hist_units, "{class}");
    }
}

#[test]
fn norm_independent_of_root() {
    for class in CurveClass::all() {
        for o in element_orders(&class).unwrap() {
            let v = norm_values(&class, o).unwrap();
            assert!(v.iter().all(|&x| x == v[0]), "{class} order {o}: {v:?}");
        }
    }
}

#[test]
fn accepted_orders_divide_group_order() {
    for class in CurveClass::all() {
        let n = aut_group(&class).unwrap().order;
        for o in 1..=30 {
            if fixed_count(&class, o).is_ok() {
                assert_eq!(n % o, 0);
            }
        }
    }
}

#[test]
fn wild_rules_equal_prime_to_p_part_on_supersingular_curves() {
    for class in CurveClass::all() {
        let Some(p) = class.characteristic.prime() else { continue };
        if class.reduction != Some(Reduction::Supersingular) {
            continue;
        }
        for o in element_orders(&class).unwrap().into_iter().filter(|&o| o > 1) {
            let n = norm_values(&class, o).unwrap()[0];
            if n % p as u64 == 0 {
                let mut m = n;
                while m % p == 0 {
                    m /= p;
                }
                assert_eq!(separable_rule(&class, o), Some(m));
            }
        }
    }
}

#[test]
fn supersingular_char2_order4_agrees_with_order2() {
    let class = CurveClass::new(Characteristic::Two, JClass::J0);
    assert_eq!(fixed_count(&class, 2).unwrap(), fixed_count(&class, 4).unwrap());
    let rep = representative(&class, 4);
    let f = Field::get(2, 4).unwrap();
    for a in automorphisms(&f, &rep.curve) {
        if matches!(a.order(&f), 2 | 4) {
            assert_eq!(brute_force_count(&f, &rep.curve, &a).unwrap(), 1);
        }
    }
}

#[test]
fn spec_style_examples() {
    let f4 = Field::get(2, 2).unwrap();
    let e = Curve { p: 2, a: [0, 0, 1, 0, 0] };
    let w = f4.roots(&[1, 1, 1])[0];
    let rot = CurveAut { u: f4.mul(w, w), r: 0, s: 0, t: 0 };
    // The map is (ωx, y).
    assert_eq!(rot.apply(&f4, &Point::Affine(1, 0)), Point::Affine(w, 0));
    assert_eq!(brute_force_count(&f4, &e, &rot).unwrap(), 3);
    assert_eq!(brute_force_count(&f4, &e, &CurveAut { u: 1, r: 0, s: 0, t: 1 }).unwrap(), 1);
    let f13 = Field::get(13, 1).unwrap();
    assert_eq!(
        brute_force_count(&f13, &Curve { p: 13, a: [0, 0, 0, 1, 0] }, &CurveAut { u: 8, r: 0, s: 0, t: 0 }).unwrap(),
        2
    );
}
