use serde::{Deserialize, Serialize};
use std::fmt;

use crate::poly::ParamPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    /// Classical: `x0² + x1x2 = x0² + x3x4 = 0`.
    D1,
    /// Ordinary, `e = 1`.
    D2,
    /// Supersingular, `e = 0`.
    D3,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::D1, Kind::D2, Kind::D3];

    /// The constant `e` in the second quadric of `D2`, `D3`.
    pub fn e(self) -> Option<u8> {
        match self {
            Kind::D1 => None,
            Kind::D2 => Some(1),
            Kind::D3 => Some(0),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadricPair {
    pub g1: ParamPoly,
    pub g2: ParamPoly,
}

fn x(i: u8) -> ParamPoly {
    ParamPoly::x(i)
}

fn xx(i: u8, j: u8) -> ParamPoly {
    &x(i) * &x(j)
}

/// `e·x0 + x2 + x4`.
fn shifted(e: u8) -> ParamPoly {
    let base = &x(2) + &x(4);
    if e == 1 {
        &base + &x(0)
    } else {
        base
    }
}

pub fn surface(kind: Kind) -> QuadricPair {
    let g1 = &xx(0, 0) + &xx(1, 2);
    let g2 = match kind.e() {
        None => &xx(0, 0) + &xx(3, 4),
        Some(e) => &xx(1, 3) + &(&x(4) * &shifted(e)),
    };
    QuadricPair { g1, g2 }
}

/// A pencil of planes `a·P_i + b·Q_i = 0`, `i = 1, 2`, cutting a conic on the
/// surface for each `(a : b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pencil {
    pub name: String,
    pub forms: [(ParamPoly, ParamPoly); 2],
}

/// The two pencils of conics on `D`, in the order they are listed for the surface.
pub fn pencils(kind: Kind) -> [Pencil; 2] {
    let p = |name: &str, a: (ParamPoly, ParamPoly), b: (ParamPoly, ParamPoly)| Pencil {
        name: format!("{kind} {name}"),
        forms: [a, b],
    };
    match kind.e() {
        None => [p("first", (x(2), x(3)), (x(4), x(1))), p("second", (x(2), x(4)), (x(3), x(1)))],
        Some(e) => [p("first", (x(3), shifted(e)), (x(4), x(1))), p("second", (shifted(e), x(1)), (x(3), x(4)))],
    }
}
