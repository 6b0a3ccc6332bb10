use enriques_ecaut::*;
use proptest::prelude::*;

fn field_params() -> impl Strategy<Value = (u32, u32)> {
    prop_oneof![
        Just((2, 1)),
        Just((2, 4)),
        Just((2, 6)),
        Just((3, 2)),
        Just((3, 5)),
        Just((5, 3)),
        Just((13, 1)),
        Just((13, 2))
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn field_axioms((p, k) in field_params(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = Field::get(p, k).unwrap();
        let q = f.size() as u32;
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        prop_assert_eq!(f.pow(a, q as u64), a);
    }

    #[test]
    fn automorphisms_form_a_group(class_idx in 0usize..7, i in 0usize..24, j in 0usize..24, k in 0usize..24) {
        let class = CurveClass::all()[class_idx];
        let rep = representative(&class, 2);
        let f = Field::get(rep.curve.p, rep.degree).unwrap();
        let auts = automorphisms(&f, &rep.curve);
        let (g, h, l) = (auts[i % auts.len()], auts[j % auts.len()], auts[k % auts.len()]);
        let gh = g.compose(&f, &h);
        prop_assert!(auts.contains(&gh));
        prop_assert_eq!(gh.compose(&f, &l), g.compose(&f, &h.compose(&f, &l)));
        let pts: Vec<Point> = std::iter::once(Point::Infinity)
            .chain(f.elements().flat_map(|x| f.elements().map(move |y| Point::Affine(x, y))))
            .filter(|pt| rep.curve.contains(&f, pt))
            .collect();
        for pt in &pts {
            let img = g.apply(&f, pt);
            prop_assert!(rep.curve.contains(&f, &img));
            prop_assert_eq!(gh.apply(&f, pt), g.apply(&f, &h.apply(&f, pt)));
        }
        let fixed = pts.iter().filter(|pt| g.apply(&f, pt) == **pt).count() as u64;
        prop_assert_eq!(brute_force_count(&f, &rep.curve, &g).unwrap(), fixed);
    }
}
