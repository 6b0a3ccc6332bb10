//! Weierstrass curves over finite fields, their automorphisms
//! `(x, y) ↦ (u²x + r, u³y + u²s·x + t)`, and fixed-point enumeration.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::class::{Characteristic, CurveClass, JClass};
use crate::field::{Elem, Field};
use crate::EcError;

/// `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6` with integer coefficients
/// read modulo `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Curve {
    pub p: u32,
    pub a: [i64; 5],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Infinity,
    Affine(Elem, Elem),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveAut {
    pub u: Elem,
    pub r: Elem,
    pub s: Elem,
    pub t: Elem,
}

impl Curve {
    pub fn coeffs(&self, f: &Field) -> [Elem; 5] {
        assert_eq!(f.characteristic(), self.p, "curve and field characteristics differ");
        self.a.map(|c| f.from_int(c))
    }

    pub fn discriminant(&self, f: &Field) -> Elem {
        let [a1, a2, a3, a4, a6] = self.coeffs(f);
        let n = |k: i64| f.from_int(k);
        let m = |x: Elem, y: Elem| f.mul(x, y);
        let b2 = f.add(m(a1, a1), m(n(4), a2));
        let b4 = f.add(m(n(2), a4), m(a1, a3));
        let b6 = f.add(m(a3, a3), m(n(4), a6));
        let b8 = f.sub(
            f.add(f.add(m(m(a1, a1), a6), m(n(4), m(a2, a6))), m(a2, m(a3, a3))),
            f.add(m(a1, m(a3, a4)), m(a4, a4)),
        );
        let t1 = f.neg(m(m(b2, b2), b8));
        let t2 = m(n(8), m(b4, m(b4, b4)));
        let t3 = m(n(27), m(b6, b6));
        let t4 = m(n(9), m(b2, m(b4, b6)));
        f.add(f.sub(f.sub(t1, t2), t3), t4)
    }

    pub fn contains(&self, f: &Field, p: &Point) -> bool {
        match *p {
            Point::Infinity => true,
            Point::Affine(x, y) => {
                let [a1, a2, a3, a4, a6] = self.coeffs(f);
                let lhs = f.add(f.mul(y, y), f.mul(y, f.add(f.mul(a1, x), a3)));
                lhs == rhs(f, [a2, a4, a6], x)
            }
        }
    }

    /// Number of `y` with `(x, y)` on the curve.
    fn fiber_size(&self, f: &Field, x: Elem) -> u64 {
        let [a1, a2, a3, a4, a6] = self.coeffs(f);
        let b = f.add(f.mul(a1, x), a3);
        let c = rhs(f, [a2, a4, a6], x);
        if f.characteristic() == 2 {
            if b == 0 {
                return 1;
            }
            let w = f.mul(c, f.inv(f.mul(b, b)).unwrap());
            return if f.trace(w) == 0 { 2 } else { 0 };
        }
        let d = f.add(f.mul(b, b), f.mul(f.from_int(4), c));
        if d == 0 {
            1
        } else if f.is_square(d) {
            2
        } else {
            0
        }
    }
}

fn rhs(f: &Field, [a2, a4, a6]: [Elem; 3], x: Elem) -> Elem {
    let x2 = f.mul(x, x);
    f.add(f.add(f.add(f.mul(x2, x), f.mul(a2, x2)), f.mul(a4, x)), a6)
}

impl CurveAut {
    pub fn identity() -> CurveAut {
        CurveAut { u: 1, r: 0, s: 0, t: 0 }
    }

    pub fn apply(&self, f: &Field, p: &Point) -> Point {
        match *p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => {
                let u2 = f.mul(self.u, self.u);
                let u3 = f.mul(u2, self.u);
                let xn = f.add(f.mul(u2, x), self.r);
                let yn = f.add(f.add(f.mul(u3, y), f.mul(f.mul(u2, self.s), x)), self.t);
                Point::Affine(xn, yn)
            }
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, f: &Field, other: &CurveAut) -> CurveAut {
        let (u1, r1, s1, t1) = (self.u, self.r, self.s, self.t);
        let (u2, r2, s2, t2) = (other.u, other.r, other.s, other.t);
        let u1sq = f.mul(u1, u1);
        CurveAut {
            u: f.mul(u1, u2),
            r: f.add(f.mul(u1sq, r2), r1),
            s: f.add(f.mul(u1, s2), s1),
            t: f.add(f.add(f.mul(f.mul(u1sq, u1), t2), f.mul(f.mul(u1sq, s1), r2)), t1),
        }
    }

    pub fn order(&self, f: &Field) -> u32 {
        let id = CurveAut::identity();
        let mut g = *self;
        let mut n = 1;
        while g != id {
            g = self.compose(f, &g);
            n += 1;
            assert!(n <= 1000, "automorphism of unbounded order");
        }
        n
    }
}

type BiPoly = BTreeMap<(u32, u32), Elem>;

fn bp_add(f: &Field, a: &BiPoly, b: &BiPoly) -> BiPoly {
    let mut out = a.clone();
    for (&m, &c) in b {
        let v = f.add(*out.get(&m).unwrap_or(&0), c);
        if v == 0 {
            out.remove(&m);
        } else {
            out.insert(m, v);
        }
    }
    out
}

fn bp_mul(f: &Field, a: &BiPoly, b: &BiPoly) -> BiPoly {
    let mut out = BiPoly::new();
    for (&(i, j), &c) in a {
        for (&(k, l), &d) in b {
            let term = BiPoly::from([((i + k, j + l), f.mul(c, d))]);
            out = bp_add(f, &out, &term);
        }
    }
    out
}

fn bp_scale(f: &Field, a: &BiPoly, c: Elem) -> BiPoly {
    a.iter().map(|(&m, &v)| (m, f.mul(v, c))).filter(|&(_, v)| v != 0).collect()
}

fn bp_const(c: Elem) -> BiPoly {
    if c == 0 {
        BiPoly::new()
    } else {
        BiPoly::from([((0, 0), c)])
    }
}

/// `y² + a1xy + a3y − x³ − a2x² − a4x − a6` evaluated on polynomial arguments.
fn weierstrass(f: &Field, a: [Elem; 5], x: &BiPoly, y: &BiPoly) -> BiPoly {
    let [a1, a2, a3, a4, a6] = a;
    let x2 = bp_mul(f, x, x);
    let x3 = bp_mul(f, &x2, x);
    let mut lhs = bp_mul(f, y, y);
    lhs = bp_add(f, &lhs, &bp_scale(f, &bp_mul(f, x, y), a1));
    lhs = bp_add(f, &lhs, &bp_scale(f, y, a3));
    let mut r = x3;
    r = bp_add(f, &r, &bp_scale(f, &x2, a2));
    r = bp_add(f, &r, &bp_scale(f, x, a4));
    r = bp_add(f, &r, &bp_const(a6));
    bp_add(f, &lhs, &bp_scale(f, &r, f.neg(1)))
}

/// Substitutes the map into the Weierstrass polynomial `W` and checks
/// `W(u²x + r, u³y + u²sx + t) = u⁶·W(x, y)` as polynomials.
pub fn preserves_curve(f: &Field, curve: &Curve, aut: &CurveAut) -> bool {
    if aut.u == 0 {
        return false;
    }
    let a = curve.coeffs(f);
    let x = BiPoly::from([((1, 0), 1)]);
    let y = BiPoly::from([((0, 1), 1)]);
    let u2 = f.mul(aut.u, aut.u);
    let u3 = f.mul(u2, aut.u);
    let xs = bp_add(f, &bp_scale(f, &x, u2), &bp_const(aut.r));
    let ys = bp_add(f, &bp_add(f, &bp_scale(f, &y, u3), &bp_scale(f, &x, f.mul(u2, aut.s))), &bp_const(aut.t));
    let lhs = weierstrass(f, a, &xs, &ys);
    let rhs = bp_scale(f, &weierstrass(f, a, &x, &y), f.mul(u3, u3));
    lhs == rhs
}

/// Counts the points of `E(F_q)`, including the point at infinity, fixed by `aut`.
pub fn brute_force_count(f: &Field, curve: &Curve, aut: &CurveAut) -> Result<u64, EcError> {
    if f.degree() > 12 {
        return Err(EcError::BadField { p: f.characteristic(), k: f.degree() });
    }
    if curve.discriminant(f) == 0 {
        return Err(EcError::Singular);
    }
    if !preserves_curve(f, curve, aut) {
        return Err(EcError::NotPreserved);
    }
    let u2 = f.mul(aut.u, aut.u);
    let u3 = f.mul(u2, aut.u);
    let c = f.sub(u3, 1);
    let mut count = 1;
    for x in f.elements() {
        if f.add(f.mul(u2, x), aut.r) != x {
            continue;
        }
        // (u³ − 1)·y = −(u²s·x + t)
        let rhs = f.neg(f.add(f.mul(f.mul(u2, aut.s), x), aut.t));
        if c != 0 {
            let y = f.mul(rhs, f.inv(c).unwrap());
            if curve.contains(f, &Point::Affine(x, y)) {
                count += 1;
            }
        } else if rhs == 0 {
            count += curve.fiber_size(f, x);
        }
    }
    Ok(count)
}

/// All automorphisms of the curve defined over `f`, found by solving the
/// coefficient-transformation equations for `(u, r, s, t)`.
pub fn automorphisms(f: &Field, curve: &Curve) -> Vec<CurveAut> {
    let [a1, a2, a3, a4, a6] = curve.coeffs(f);
    let p = f.characteristic();
    let n = |k: i64| f.from_int(k);
    let m = |x: Elem, y: Elem| f.mul(x, y);
    let div = |x: Elem, k: i64| m(x, f.inv(n(k)).unwrap());
    let mut out = Vec::new();
    for u in f.elements().filter(|&u| u != 0 && f.pow(u, 12) == 1) {
        let u2 = m(u, u);
        let u3 = m(u2, u);
        let u4 = m(u2, u2);
        let u6 = m(u3, u3);
        let ss: Vec<Elem> = if p != 2 {
            vec![div(f.sub(m(u, a1), a1), 2)]
        } else if m(u, a1) == a1 {
            f.elements().collect()
        } else {
            vec![]
        };
        for s in ss {
            // u²a2 = a2 − s·a1 + 3r − s²
            let base2 = f.sub(f.sub(a2, m(s, a1)), m(s, s));
            let rs: Vec<Elem> = if p != 3 {
                vec![div(f.sub(m(u2, a2), base2), 3)]
            } else if m(u2, a2) == base2 {
                f.elements().collect()
            } else {
                vec![]
            };
            for r in rs {
                // u³a3 = a3 + r·a1 + 2t
                let base3 = f.add(a3, m(r, a1));
                let ts: Vec<Elem> = if p != 2 {
                    vec![div(f.sub(m(u3, a3), base3), 2)]
                } else if m(u3, a3) != base3 {
                    vec![]
                } else {
                    // u⁴a4 = K − t·(a1 + 2s)
                    let k =
                        f.add(f.sub(f.add(f.sub(a4, m(s, a3)), m(n(2), m(r, a2))), m(m(r, s), a1)), m(n(3), m(r, r)));
                    let ct = f.add(a1, m(n(2), s));
                    let want = f.sub(k, m(u4, a4));
                    if ct != 0 {
                        vec![m(want, f.inv(ct).unwrap())]
                    } else if want == 0 {
                        f.elements().collect()
                    } else {
                        vec![]
                    }
                };
                for t in ts {
                    // u⁴a4 = a4 − s·a3 + 2r·a2 − (t + rs)·a1 + 3r² − 2st
                    let plus = f.add(f.add(a4, m(n(2), m(r, a2))), m(n(3), m(r, r)));
                    let minus = f.add(f.add(m(s, a3), m(f.add(t, m(r, s)), a1)), m(n(2), m(s, t)));
                    let e4 = f.sub(f.sub(plus, minus), m(u4, a4));
                    if e4 != 0 {
                        continue;
                    }
                    // u⁶a6 = a6 + r·a4 + r²a2 + r³ − t·a3 − t² − r·t·a1
                    let r2 = m(r, r);
                    let plus = f.add(f.add(f.add(a6, m(r, a4)), m(r2, a2)), m(r2, r));
                    let minus = f.add(f.add(m(t, a3), m(t, t)), m(m(r, t), a1));
                    let e6 = f.sub(f.sub(plus, minus), m(u6, a6));
                    if e6 == 0 {
                        out.push(CurveAut { u, r, s, t });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representative {
    pub curve: Curve,
    /// Extension degree at which all automorphisms and fixed points are rational.
    pub degree: u32,
    pub equation: &'static str,
}

/// Fixed representative curve of each class. For `p > 3` the prime 13 is used:
/// `13 ≡ 1 (mod 12)` puts `i` and `ω` in the prime field, and the curves are
/// chosen with their 2-torsion rational.
pub fn representative(c: &CurveClass, ext_degree: u32) -> Representative {
    use Characteristic::*;
    let (p, a, equation, degree) = match (c.characteristic, c.j) {
        (Large, JClass::Generic) => (13, [0, -4, 0, 3, 0], "y² = x(x−1)(x−3) over F13", 1),
        (Large, JClass::J1728) => (13, [0, 0, 0, 1, 0], "y² = x³ + x over F13", 1),
        (Large, JClass::J0) => (13, [0, 0, 0, 0, 1], "y² = x³ + 1 over F13", 1),
        (Three, JClass::Generic) => (3, [0, 1, 0, 0, 1], "y² = x³ + x² + 1 over F3", ext_degree),
        (Three, _) => (3, [0, 0, 0, -1, 0], "y² = x³ − x over F3", ext_degree),
        (Two, JClass::Generic) => (2, [1, 0, 0, 0, 1], "y² + xy = x³ + 1 over F2", ext_degree),
        (Two, _) => (2, [0, 0, 1, 0, 0], "y² + y = x³ over F2", ext_degree),
    };
    Representative { curve: Curve { p, a }, degree, equation }
}
