use enriques_delpezzo::{
    aut, compose, is_identity_action, pencil_action, pencils, recover, verify_preserves, Kind, ParamPoly, Params,
    PencilAction, ProjMap, Var,
};

use super::SuiteResult;
use crate::report::{Section, Table};

fn families() -> [(Kind, Params, &'static str); 4] {
    [
        (Kind::D1, Params::torus(0), "torus (λ, μ)"),
        (Kind::D2, Params::additive(0), "additive (α, β)"),
        (Kind::D3, Params::additive(0), "additive (α, β)"),
        (Kind::D3, Params::scale(0), "torus (λ)"),
    ]
}

fn show(m: &[[ParamPoly; 2]; 2]) -> String {
    format!("[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
}

pub fn verify() -> SuiteResult {
    let mut s = Section::new("delpezzo-verify");
    let mut t = Table::new("generator families", &["surface", "family", "map", "preserves", "certificate"]);
    for (kind, params, family) in families() {
        let map = aut(kind, &params)?;
        let v = verify_preserves(&map, kind)?;
        s.assert(format!("{kind} {family} preserves {kind}"), v.preserves, show(&v.certificate));
        t.push([kind.to_string(), family.to_string(), map.to_string(), v.preserves.to_string(), show(&v.certificate)]);
    }
    s.tables.push(t);

    let control = verify_preserves(&aut(Kind::D2, &Params::additive(0))?, Kind::D3)?;
    s.assert(
        "D2 formula fails on D3",
        !control.preserves,
        format!("residuals: {}; {}", control.residuals[0], control.residuals[1]),
    );

    let (g1, g2) = (aut(Kind::D1, &Params::torus(1))?, aut(Kind::D1, &Params::torus(2))?);
    let lambda = &ParamPoly::var(Var::Lambda(1)) * &ParamPoly::var(Var::Lambda(2));
    let mu = &ParamPoly::var(Var::Mu(1)) * &ParamPoly::var(Var::Mu(2));
    let want = Params::Torus { lambda, mu };
    let c = compose(&g1, &g2);
    s.assert("D1 torus is multiplicative", recover(&c, Kind::D1).as_ref() == Some(&want), c.to_string());
    let (h1, h2) = (aut(Kind::D3, &Params::scale(1))?, aut(Kind::D3, &Params::scale(2))?);
    let want = Params::Scale { lambda: &ParamPoly::var(Var::Lambda(1)) * &ParamPoly::var(Var::Lambda(2)) };
    let c = compose(&h1, &h2);
    s.assert("D3 torus is multiplicative", recover(&c, Kind::D3).as_ref() == Some(&want), c.to_string());
    let a = aut(Kind::D2, &Params::additive(0))?;
    let sq = compose(&a, &a);
    s.assert("D2 additive family is 2-torsion", sq == ProjMap::identity(), sq.to_string());
    let (a1, a2) = (aut(Kind::D2, &Params::additive(1))?, aut(Kind::D2, &Params::additive(2))?);
    let want = Params::Additive {
        alpha: &ParamPoly::var(Var::Alpha(1)) + &ParamPoly::var(Var::Alpha(2)),
        beta: &ParamPoly::var(Var::Beta(1)) + &ParamPoly::var(Var::Beta(2)),
    };
    let c = compose(&a1, &a2);
    s.assert("D2 additive family is additive", recover(&c, Kind::D2) == Some(want), c.to_string());

    let d3 = aut(Kind::D3, &Params::scale(0))?;
    let mut t = Table::new("actions on the pencils of conics", &["surface", "map", "pencil", "action"]);
    for (kind, map) in [(Kind::D3, &d3), (Kind::D1, &aut(Kind::D1, &Params::torus(0))?)] {
        for pencil in pencils(kind) {
            let act = pencil_action(map, &pencil)?;
            let text = match &act {
                PencilAction::Action(m) => show(m),
                PencilAction::NotPreserved => "not preserved".to_string(),
            };
            if kind == Kind::D3 {
                let nontrivial = matches!(&act, PencilAction::Action(m) if !is_identity_action(m));
                s.assert(format!("D3 torus acts nontrivially on {}", pencil.name), nontrivial, text.clone());
            }
            t.push([kind.to_string(), map.to_string(), pencil.name.clone(), text]);
        }
    }
    s.tables.push(t);
    s.note("all computations are exact over F2 with symbolic unit parameters; λ ≠ 1 is symbolic");
    Ok(s)
}
