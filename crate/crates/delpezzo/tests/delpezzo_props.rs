use enriques_delpezzo::*;
use enriques_ecaut::Field;
use proptest::prelude::*;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

fn p(v: Var) -> ParamPoly {
    ParamPoly::var(v)
}

fn lam(k: u8) -> ParamPoly {
    p(Var::Lambda(k))
}

fn families() -> Vec<(Kind, Params)> {
    vec![
        (Kind::D1, Params::torus(0)),
        (Kind::D2, Params::additive(0)),
        (Kind::D3, Params::additive(0)),
        (Kind::D3, Params::scale(0)),
    ]
}

fn m(i: u8, j: u8) -> Monomial {
    Monomial::raw(&[(Var::X(i), 1), (Var::X(j), 1)])
}

#[test]
fn surfaces() {
    assert_eq!(surface(Kind::D1).g1.to_string(), "x0² + x1x2");
    assert_eq!(surface(Kind::D1).g2.to_string(), "x0² + x3x4");
    assert!(surface(Kind::D3).g2.coeff(&m(0, 4)).is_zero());
    assert!(surface(Kind::D2).g2.coeff(&m(0, 4)).is_one());
    assert_eq!(surface(Kind::D3).g2.to_string(), "x1x3 + x2x4 + x4²");
}

#[test]
fn printed_formulas() {
    let id = aut(Kind::D1, &Params::Torus { lambda: ParamPoly::one(), mu: ParamPoly::one() }).unwrap();
    assert_eq!(id, ProjMap::identity());
    let (a, b) = (p(Var::Alpha(0)), p(Var::Beta(0)));
    let x1 = Monomial::var(Var::X(1));
    let d2 = aut(Kind::D2, &Params::additive(0)).unwrap();
    let want = &(&(&a * &b) + &(&a.pow(2) * &b)) + &b.pow(2);
    assert_eq!(d2.0[3].coeff(&x1), want);
    let d3 = aut(Kind::D3, &Params::additive(0)).unwrap();
    let c = d3.0[3].coeff(&x1);
    assert_eq!(c, &(&a.pow(2) * &b) + &b.pow(2));
    assert!(!c.terms().any(|t| ParamPoly::monomial(t.clone()) == &a * &b));
    assert!(matches!(aut(Kind::D1, &Params::additive(0)), Err(DpError::WrongArity { .. })));
    assert!(matches!(aut(Kind::D2, &Params::scale(0)), Err(DpError::WrongArity { .. })));
    assert!(matches!(aut(Kind::D3, &Params::torus(0)), Err(DpError::WrongArity { .. })));
    let t = aut(Kind::D3, &Params::scale(0)).unwrap();
    assert_eq!(t.to_string(), "(x0 : ℓx1 : λx2 : λ³x3 : λx4)");
}

#[test]
fn families_preserve_their_surfaces() {
    let t = Instant::now();
    for (kind, params) in families() {
        let map = aut(kind, &params).unwrap();
        let v = verify_preserves(&map, kind).unwrap();
        assert!(v.preserves, "{kind} {params}: {v:?}");
    }
    let d1 = verify_preserves(&aut(Kind::D1, &Params::torus(0)).unwrap(), Kind::D1).unwrap();
    assert!(d1.certificate[0][0].is_one() && d1.certificate[0][1].is_zero());
    assert!(d1.certificate[1][0].is_zero() && d1.certificate[1][1].is_one());
    let d3t = verify_preserves(&aut(Kind::D3, &Params::scale(0)).unwrap(), Kind::D3).unwrap();
    assert_eq!(d3t.certificate[1][1], lam(0).pow(2));
    assert!(t.elapsed().as_secs_f64() < 5.0);
}

#[test]
fn negative_controls() {
    let d2_on_d3 = verify_preserves(&aut(Kind::D2, &Params::additive(0)).unwrap(), Kind::D3).unwrap();
    assert!(!d2_on_d3.preserves);
    // The e-dependent terms that fail to cancel.
    assert_eq!(d2_on_d3.residuals[1].to_string(), "βx0x1 + αx1x4 + αβx1²");
    assert!(!verify_preserves(&aut(Kind::D3, &Params::additive(0)).unwrap(), Kind::D2).unwrap().preserves);
    assert!(!verify_preserves(&aut(Kind::D3, &Params::scale(0)).unwrap(), Kind::D2).unwrap().preserves);
    assert!(!verify_preserves(&aut(Kind::D1, &Params::torus(0)).unwrap(), Kind::D3).unwrap().preserves);
    let singular = ProjMap([ParamPoly::x(0), ParamPoly::x(1), ParamPoly::x(1), ParamPoly::x(3), ParamPoly::x(4)]);
    assert!(matches!(verify_preserves(&singular, Kind::D1), Err(DpError::NotInvertible(_))));
}

/// Points of `D` over `F_{2^k}` as representatives with first nonzero coordinate 1.
fn points(kind: Kind, f: &Arc<Field>) -> Vec<[u32; 5]> {
    let q = f.size() as u32;
    let q_s = surface(kind);
    let ev = |g: &ParamPoly, pt: &[u32; 5]| {
        let vals: BTreeMap<Var, u32> = (0..5).map(|i| (Var::X(i as u8), pt[i])).collect();
        eval(g, f, &vals).unwrap().value
    };
    let mut out = Vec::new();
    for lead in 0..5 {
        let free = 4 - lead;
        for code in 0..q.pow(free as u32) {
            let mut pt = [0u32; 5];
            pt[lead] = 1;
            let mut c = code;
            for slot in pt.iter_mut().skip(lead + 1) {
                *slot = c % q;
                c /= q;
            }
            if ev(&q_s.g1, &pt) == 0 && ev(&q_s.g2, &pt) == 0 {
                out.push(pt);
            }
        }
    }
    out
}

fn apply(mat: &[[Fq; 5]; 5], pt: &[u32; 5], f: &Field) -> [u32; 5] {
    std::array::from_fn(|j| (0..5).fold(0, |acc, i| f.add(acc, f.mul(mat[j][i].value, pt[i]))))
}

#[test]
fn families_map_points_to_points() {
    for k in [2, 3] {
        let f = Field::get(2, k).unwrap();
        let nonzero: Vec<u32> = (1..f.size() as u32).collect();
        for (kind, params) in families() {
            let pts = points(kind, &f);
            let on = |pt: &[u32; 5]| {
                let vals: BTreeMap<Var, u32> = (0..5).map(|i| (Var::X(i as u8), pt[i])).collect();
                let s = surface(kind);
                eval(&s.g1, &f, &vals).unwrap().value == 0 && eval(&s.g2, &f, &vals).unwrap().value == 0
            };
            let map = aut(kind, &params).unwrap();
            for (i, &u) in nonzero.iter().enumerate() {
                let w = nonzero[(i * 3 + 1) % nonzero.len()];
                let vals = BTreeMap::from([
                    (Var::Lambda(0), u),
                    (Var::Mu(0), w),
                    (Var::Alpha(0), u),
                    (Var::Beta(0), f.add(w, 1)),
                ]);
                let mat = sample_matrix(&map, &f, &vals).unwrap();
                for pt in &pts {
                    assert!(on(&apply(&mat, pt, &f)), "{kind} {params} {vals:?}");
                }
            }
        }
        // The negative control moves some point off D3.
        let pts = points(Kind::D3, &f);
        let map = aut(Kind::D2, &Params::additive(0)).unwrap();
        let vals = BTreeMap::from([(Var::Alpha(0), 1), (Var::Beta(0), 1)]);
        let mat = sample_matrix(&map, &f, &vals).unwrap();
        let s = surface(Kind::D3);
        assert!(pts.iter().any(|pt| {
            let img = apply(&mat, pt, &f);
            let v: BTreeMap<Var, u32> = (0..5).map(|i| (Var::X(i as u8), img[i])).collect();
            eval(&s.g2, &f, &v).unwrap().value != 0
        }));
    }
}

#[test]
fn torus_multiplicativity() {
    let c = compose(&aut(Kind::D1, &Params::torus(1)).unwrap(), &aut(Kind::D1, &Params::torus(2)).unwrap());
    let want = Params::Torus { lambda: &lam(1) * &lam(2), mu: &p(Var::Mu(1)) * &p(Var::Mu(2)) };
    assert_eq!(c, aut(Kind::D1, &want).unwrap());
    assert_eq!(recover(&c, Kind::D1), Some(want));
    let c3 = compose(&aut(Kind::D3, &Params::scale(1)).unwrap(), &aut(Kind::D3, &Params::scale(2)).unwrap());
    assert_eq!(recover(&c3, Kind::D3), Some(Params::Scale { lambda: &lam(1) * &lam(2) }));
}

#[test]
fn additive_two_torsion_and_group_law() {
    for kind in [Kind::D2, Kind::D3] {
        let g = aut(kind, &Params::additive(0)).unwrap();
        assert_eq!(compose(&g, &g), ProjMap::identity());
        let c = compose(&aut(kind, &Params::additive(1)).unwrap(), &aut(kind, &Params::additive(2)).unwrap());
        let want = Params::Additive {
            alpha: &p(Var::Alpha(1)) + &p(Var::Alpha(2)),
            beta: &p(Var::Beta(1)) + &p(Var::Beta(2)),
        };
        assert_eq!(recover(&c, kind), Some(want));
    }
}

#[test]
fn compose_with_identity() {
    for (kind, params) in families() {
        let g = aut(kind, &params).unwrap();
        assert_eq!(compose(&g, &ProjMap::identity()), g);
        assert_eq!(compose(&ProjMap::identity(), &g), g);
        assert_eq!(recover(&g, kind), Some(params));
    }
}

fn action(map: &ProjMap, pencil: &Pencil) -> [[ParamPoly; 2]; 2] {
    match pencil_action(map, pencil).unwrap() {
        PencilAction::Action(a) => a,
        PencilAction::NotPreserved => panic!("{} not preserved", pencil.name),
    }
}

#[test]
fn pencil_actions() {
    let t = Instant::now();
    let d3 = aut(Kind::D3, &Params::scale(0)).unwrap();
    let [first, second] = pencils(Kind::D3);
    let want = [[lam(0).pow(2), ParamPoly::zero()], [ParamPoly::zero(), ParamPoly::one()]];
    assert_eq!(action(&d3, &first), want);
    assert_eq!(action(&d3, &second), want);
    assert!(!is_identity_action(&action(&d3, &first)));
    let d1 = aut(Kind::D1, &Params::torus(0)).unwrap();
    let a = action(&d1, &pencils(Kind::D1)[0]);
    assert_eq!(a, [[ParamPoly::one(), ParamPoly::zero()], [ParamPoly::zero(), &lam(0) * &p(Var::Mu(0))]]);
    for kind in Kind::ALL {
        for pencil in pencils(kind) {
            assert!(is_identity_action(&action(&ProjMap::identity(), &pencil)));
        }
    }
    assert!(t.elapsed().as_secs_f64() < 5.0);
}

#[test]
fn d3_torus_trivial_on_pencils_exactly_at_one() {
    let d3 = aut(Kind::D3, &Params::scale(0)).unwrap();
    for k in [2, 3] {
        let f = Field::get(2, k).unwrap();
        for l in 1..f.size() as u32 {
            let mat = sample_matrix(&d3, &f, &BTreeMap::from([(Var::Lambda(0), l)])).unwrap();
            for pencil in pencils(Kind::D3) {
                let PencilAction::Action(a) = pencil_action_matrix(&mat, &pencil).unwrap() else { panic!() };
                assert_eq!(is_identity_action(&a), l == 1);
            }
        }
    }
}

#[test]
fn torus_functoriality_symbolic() {
    for (kind, mk) in [(Kind::D1, Params::torus as fn(u8) -> Params), (Kind::D3, Params::scale)] {
        let (g, h) = (aut(kind, &mk(1)).unwrap(), aut(kind, &mk(2)).unwrap());
        for pencil in pencils(kind) {
            let (ag, ah) = (action(&g, &pencil), action(&h, &pencil));
            let agh = action(&compose(&g, &h), &pencil);
            assert!(same_action(&agh, &mul_action(&ah, &ag)), "{}", pencil.name);
        }
    }
}

#[test]
fn functoriality_on_samples() {
    for k in [2, 3] {
        let f = Field::get(2, k).unwrap();
        let q = f.size() as u32;
        for kind in [Kind::D2, Kind::D3] {
            let g = aut(kind, &Params::additive(0)).unwrap();
            let mut preserved = 0;
            for a1 in 0..q {
                for (a2, b1, b2) in [(1, 0, 0), (q - 1, 0, 1), (a1, 1, q - 1)] {
                    let m1 = sample_matrix(&g, &f, &BTreeMap::from([(Var::Alpha(0), a1), (Var::Beta(0), b1)])).unwrap();
                    let m2 = sample_matrix(&g, &f, &BTreeMap::from([(Var::Alpha(0), a2), (Var::Beta(0), b2)])).unwrap();
                    let m12 = compose_matrix(&m1, &m2);
                    for pencil in pencils(kind) {
                        let r = |m| pencil_action_matrix(m, &pencil).unwrap();
                        if let (PencilAction::Action(x), PencilAction::Action(y)) = (r(&m1), r(&m2)) {
                            preserved += 1;
                            let PencilAction::Action(xy) = r(&m12) else { panic!("composite not preserved") };
                            assert!(same_action(&xy, &mul_action(&y, &x)));
                        }
                    }
                }
            }
            assert!(preserved > 0);
        }
        // Torus samples on D3 and D1.
        for (kind, params) in [(Kind::D3, Params::scale(0)), (Kind::D1, Params::torus(0))] {
            let g = aut(kind, &params).unwrap();
            for l1 in 1..q {
                let l2 = f.mul(l1, l1).max(1);
                let s = |l, mu| BTreeMap::from([(Var::Lambda(0), l), (Var::Mu(0), mu)]);
                let m1 = sample_matrix(&g, &f, &s(l1, l2)).unwrap();
                let m2 = sample_matrix(&g, &f, &s(l2, l1)).unwrap();
                for pencil in pencils(kind) {
                    let r = |m| match pencil_action_matrix(m, &pencil).unwrap() {
                        PencilAction::Action(a) => a,
                        PencilAction::NotPreserved => panic!(),
                    };
                    assert!(same_action(&r(&compose_matrix(&m1, &m2)), &mul_action(&r(&m2), &r(&m1))));
                }
            }
        }
    }
}

#[test]
fn symbolic_action_agrees_with_samples() {
    let f = Field::get(2, 3).unwrap();
    let d1 = aut(Kind::D1, &Params::torus(0)).unwrap();
    for l in 1..8 {
        for mu in 1..8 {
            let vals = BTreeMap::from([(Var::Lambda(0), l), (Var::Mu(0), mu)]);
            let mat = sample_matrix(&d1, &f, &vals).unwrap();
            for pencil in pencils(Kind::D1) {
                let sym = action(&d1, &pencil).map(|r| r.map(|e| eval(&e, &f, &vals).unwrap()));
                let PencilAction::Action(num) = pencil_action_matrix(&mat, &pencil).unwrap() else { panic!() };
                assert!(same_action(&sym, &num));
            }
        }
    }
}

#[test]
fn json_shapes() {
    let v =
        serde_json::to_value(verify_preserves(&aut(Kind::D3, &Params::scale(0)).unwrap(), Kind::D3).unwrap()).unwrap();
    assert_eq!(v["kind"], "D3");
    assert_eq!(v["preserves"], true);
    assert_eq!(v["certificate"][1][1], "λ²");
    let a = pencil_action(&aut(Kind::D3, &Params::scale(0)).unwrap(), &pencils(Kind::D3)[0]).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), r#"[["λ²","0"],["0","1"]]"#);
}

fn var_strategy() -> impl Strategy<Value = Var> {
    prop_oneof![
        (0u8..5).prop_map(Var::X),
        (0u8..2).prop_map(Var::Lambda),
        (0u8..2).prop_map(Var::LambdaInv),
        (0u8..2).prop_map(Var::Mu),
        (0u8..2).prop_map(Var::MuInv),
        (0u8..2).prop_map(Var::Alpha),
        (0u8..2).prop_map(Var::Beta),
    ]
}

fn raw_poly() -> impl Strategy<Value = ParamPoly> {
    proptest::collection::vec(proptest::collection::vec((var_strategy(), 1u32..4), 0..5), 1..6)
        .prop_map(|ts| ParamPoly::from_raw_terms(ts.iter().map(|t| Monomial::raw(t))))
}

proptest! {
    #[test]
    fn rewriting_is_confluent(poly in raw_poly(), choices in proptest::collection::vec((0usize..8, 0usize..4), 64)) {
        let mut cur = poly.clone();
        let mut steps = choices.iter().cycle();
        while let Some(next) = {
            let &(i, j) = steps.next().unwrap();
            cur.rewrite_step(i, j)
        } {
            cur = next;
        }
        prop_assert!(cur.is_canonical());
        prop_assert_eq!(cur, poly.canonical());
    }

    #[test]
    fn ring_laws(a in raw_poly(), b in raw_poly(), c in raw_poly()) {
        let (a, b, c) = (a.canonical(), b.canonical(), c.canonical());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a * &b).is_canonical());
    }

    #[test]
    fn sampled_torus_maps_compose((l1, l2, m1, m2) in (1u32..8, 1u32..8, 1u32..8, 1u32..8)) {
        let f = Field::get(2, 3).unwrap();
        let g = aut(Kind::D1, &Params::torus(0)).unwrap();
        let s = |l, m| BTreeMap::from([(Var::Lambda(0), l), (Var::Mu(0), m)]);
        let prod = compose_matrix(&sample_matrix(&g, &f, &s(l1, m1)).unwrap(), &sample_matrix(&g, &f, &s(l2, m2)).unwrap());
        let direct = sample_matrix(&g, &f, &s(f.mul(l1, l2), f.mul(m1, m2))).unwrap();
        prop_assert!(prod == direct);
    }
}
