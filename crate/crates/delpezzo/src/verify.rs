use enriques_ecaut::Field;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::maps::{unit_normalizer, ProjMap};
use crate::poly::{Monomial, ParamPoly, Var};
use crate::surface::{surface, Kind, Pencil};
use crate::DpError;

/// The fifteen degree-2 monomials in `x0..x4`.
pub fn quadratic_monomials() -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in 0..5u8 {
        for j in i..5u8 {
            out.push(Monomial::raw(&[(Var::X(i), 1), (Var::X(j), 1)]));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub kind: Kind,
    pub preserves: bool,
    /// `pullback(g_i) = c[i][0]·g1 + c[i][1]·g2`.
    pub certificate: [[ParamPoly; 2]; 2],
    /// `pullback(g_i) − c[i][0]·g1 − c[i][1]·g2`.
    pub residuals: [ParamPoly; 2],
}

/// Checks that the pulled-back quadrics lie in the span of `g1, g2`, solving
/// for the coefficients on two pivot monomials and then comparing all fifteen.
pub fn verify_preserves(map: &ProjMap, kind: Kind) -> Result<Verification, DpError> {
    map.check_invertible()?;
    let q = surface(kind);
    let mons = quadratic_monomials();
    let bit = |g: &ParamPoly, m: &Monomial| !g.coeff(m).is_zero();
    let (pm, pn) = mons
        .iter()
        .enumerate()
        .flat_map(|(a, m)| mons[a + 1..].iter().map(move |n| (m, n)))
        .find(|(m, n)| (bit(&q.g1, m) && bit(&q.g2, n)) != (bit(&q.g1, n) && bit(&q.g2, m)))
        .expect("independent quadrics");
    let coeff = |g: &ParamPoly, m: &Monomial| g.coeff(m);
    let mut certificate: [[ParamPoly; 2]; 2] = Default::default();
    let mut residuals: [ParamPoly; 2] = Default::default();
    for (i, g) in [&q.g1, &q.g2].into_iter().enumerate() {
        let pb = map.pullback(g);
        // Cramer's rule over F2; the pivot determinant is 1.
        let c1 = &(&coeff(&pb, pm) * &coeff(&q.g2, pn)) + &(&coeff(&pb, pn) * &coeff(&q.g2, pm));
        let c2 = &(&coeff(&q.g1, pm) * &coeff(&pb, pn)) + &(&coeff(&q.g1, pn) * &coeff(&pb, pm));
        residuals[i] = &(&pb + &(&c1 * &q.g1)) + &(&c2 * &q.g2);
        certificate[i] = [c1, c2];
    }
    let preserves = residuals.iter().all(ParamPoly::is_zero)
        && !(&(&certificate[0][0] * &certificate[1][1]) + &(&certificate[0][1] * &certificate[1][0])).is_zero();
    Ok(Verification { kind, preserves, certificate, residuals })
}

/// Ring operations needed by the pencil solver.
pub trait Coeff: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl Coeff for ParamPoly {
    fn zero_like(&self) -> Self {
        ParamPoly::zero()
    }
    fn is_zero(&self) -> bool {
        ParamPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// An element of `F_{2^k}`.
#[derive(Debug, Clone)]
pub struct Fq {
    pub field: Arc<Field>,
    pub value: u32,
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Coeff for Fq {
    fn zero_like(&self) -> Self {
        Fq { field: self.field.clone(), value: 0 }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fq { field: self.field.clone(), value: self.field.add(self.value, other.value) }
    }
    fn mul(&self, other: &Self) -> Self {
        Fq { field: self.field.clone(), value: self.field.mul(self.value, other.value) }
    }
}

/// Induced action on `(a : b)`, or the pencil is not preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PencilAction<T> {
    /// `(a : b) ↦ (m00·a + m01·b : m10·a + m11·b)`.
    Action([[T; 2]; 2]),
    NotPreserved,
}

impl Serialize for PencilAction<ParamPoly> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            PencilAction::Action(m) => s.collect_seq(m.iter().map(|r| [r[0].to_string(), r[1].to_string()])),
            PencilAction::NotPreserved => s.serialize_str("NOT_PRESERVED"),
        }
    }
}

type Bits = [u8; 5];

fn linear_bits(f: &ParamPoly) -> Result<Bits, DpError> {
    let mut out = [0u8; 5];
    for (j, b) in out.iter_mut().enumerate() {
        let c = f.coeff(&Monomial::var(Var::X(j as u8)));
        *b = if c.is_zero() {
            0
        } else if c.is_one() {
            1
        } else {
            return Err(DpError::NotLinear(f.to_string()));
        };
    }
    if !f.is_homogeneous_in_x(1) {
        return Err(DpError::NotLinear(f.to_string()));
    }
    Ok(out)
}

/// Inverse over F2 of the matrix with the given rows.
fn invert_bits(rows: [Bits; 5]) -> Option<[Bits; 5]> {
    let mut a = rows;
    let mut inv = [[0u8; 5]; 5];
    for (i, r) in inv.iter_mut().enumerate() {
        r[i] = 1;
    }
    for col in 0..5 {
        let piv = (col..5).find(|&r| a[r][col] == 1)?;
        a.swap(col, piv);
        inv.swap(col, piv);
        for r in 0..5 {
            if r != col && a[r][col] == 1 {
                for c in 0..5 {
                    a[r][c] ^= a[col][c];
                    inv[r][c] ^= inv[col][c];
                }
            }
        }
    }
    Some(inv)
}

/// Basis `P1, Q1, P2, Q2, x_r` of the linear forms, `r` the first coordinate
/// completing it, as the inverse change of basis.
fn pencil_basis(p: &Pencil) -> Result<([Bits; 4], [Bits; 5]), DpError> {
    let f = [
        linear_bits(&p.forms[0].0)?,
        linear_bits(&p.forms[0].1)?,
        linear_bits(&p.forms[1].0)?,
        linear_bits(&p.forms[1].1)?,
    ];
    for r in 0..5 {
        let mut e = [0u8; 5];
        e[r] = 1;
        if let Some(inv) = invert_bits([f[0], f[1], f[2], f[3], e]) {
            return Ok((f, inv));
        }
    }
    Err(DpError::DegeneratePencil(p.name.clone()))
}

/// Solver shared by the symbolic and sampled paths. `m[j][i]` is the
/// coefficient of `x_i` in the image of `x_j`.
pub fn pencil_action_matrix<T: Coeff>(m: &[[T; 5]; 5], pencil: &Pencil) -> Result<PencilAction<T>, DpError> {
    let zero = m[0][0].zero_like();
    let (forms, inv) = pencil_basis(pencil)?;
    // Coordinates of the pullback of a constant form in the pencil basis.
    let coords = |f: &Bits| -> [T; 5] {
        let mut c: [T; 5] = std::array::from_fn(|_| zero.clone());
        for (j, &fj) in f.iter().enumerate() {
            if fj == 1 {
                for (i, ci) in c.iter_mut().enumerate() {
                    *ci = ci.add(&m[j][i]);
                }
            }
        }
        let mut w: [T; 5] = std::array::from_fn(|_| zero.clone());
        for (r, wr) in w.iter_mut().enumerate() {
            for (i, ci) in c.iter().enumerate() {
                if inv[i][r] == 1 {
                    *wr = wr.add(ci);
                }
            }
        }
        w
    };
    let mut blocks: Vec<[[T; 2]; 2]> = Vec::new();
    for k in 0..2 {
        let (u, v) = (coords(&forms[2 * k]), coords(&forms[2 * k + 1]));
        if !u[4].is_zero() || !v[4].is_zero() {
            return Ok(PencilAction::NotPreserved);
        }
        for j in 0..2 {
            blocks.push([[u[2 * j].clone(), v[2 * j].clone()], [u[2 * j + 1].clone(), v[2 * j + 1].clone()]]);
        }
    }
    let flat = |b: &[[T; 2]; 2]| [b[0][0].clone(), b[0][1].clone(), b[1][0].clone(), b[1][1].clone()];
    let Some(lead) = blocks.iter().find(|b| flat(b).iter().any(|e| !e.is_zero())).cloned() else {
        return Ok(PencilAction::NotPreserved);
    };
    let l = flat(&lead);
    // Every block must be a scalar multiple of the leading one.
    for b in &blocks {
        let f = flat(b);
        for p in 0..4 {
            for q in 0..4 {
                if l[p].mul(&f[q]) != l[q].mul(&f[p]) {
                    return Ok(PencilAction::NotPreserved);
                }
            }
        }
    }
    // The leading block must act invertibly on the pencil.
    if l[0].mul(&l[3]) == l[1].mul(&l[2]) {
        return Ok(PencilAction::NotPreserved);
    }
    Ok(PencilAction::Action(lead))
}

/// Action of the map on the parameter `(a : b)` of the pencil: the pullback of
/// the member `(a : b)` is the member `(a' : b')`. Normalized by a unit monomial.
pub fn pencil_action(map: &ProjMap, pencil: &Pencil) -> Result<PencilAction<ParamPoly>, DpError> {
    let m = map.matrix()?;
    Ok(match pencil_action_matrix(&m, pencil)? {
        PencilAction::Action(a) => {
            let s = unit_normalizer(&[&a[0][0], &a[0][1], &a[1][0], &a[1][1]]);
            PencilAction::Action(a.map(|r| r.map(|e| &e * &s)))
        }
        PencilAction::NotPreserved => PencilAction::NotPreserved,
    })
}

/// Projective equality of two 2×2 actions.
pub fn same_action<T: Coeff>(a: &[[T; 2]; 2], b: &[[T; 2]; 2]) -> bool {
    let fa = [&a[0][0], &a[0][1], &a[1][0], &a[1][1]];
    let fb = [&b[0][0], &b[0][1], &b[1][0], &b[1][1]];
    (0..4).all(|p| (0..4).all(|q| fa[p].mul(fb[q]) == fa[q].mul(fb[p])))
        && fa.iter().any(|e| !e.is_zero()) == fb.iter().any(|e| !e.is_zero())
}

pub fn is_identity_action<T: Coeff>(a: &[[T; 2]; 2]) -> bool {
    a[0][1].is_zero() && a[1][0].is_zero() && a[0][0] == a[1][1] && !a[0][0].is_zero()
}

/// `a · b` as 2×2 matrices.
pub fn mul_action<T: Coeff>(a: &[[T; 2]; 2], b: &[[T; 2]; 2]) -> [[T; 2]; 2] {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]))))
}

/// Evaluates a parameter polynomial at field values; inverse variables take
/// the inverse of the value of the variable.
pub fn eval(p: &ParamPoly, field: &Arc<Field>, values: &BTreeMap<Var, u32>) -> Result<Fq, DpError> {
    let mut acc = 0;
    for m in p.terms() {
        let mut t = 1;
        for (v, e) in m.vars() {
            let x = match values.get(&v) {
                Some(&x) => x,
                None => {
                    let base = v.inverse().and_then(|w| values.get(&w)).ok_or(DpError::Unassigned(format!("{v:?}")))?;
                    field.inv(*base).ok_or(DpError::NotAUnit("0".into()))?
                }
            };
            t = field.mul(t, field.pow(x, e as u64));
        }
        acc = field.add(acc, t);
    }
    Ok(Fq { field: field.clone(), value: acc })
}

/// The coefficient matrix of the map at the given parameter values.
pub fn sample_matrix(map: &ProjMap, field: &Arc<Field>, values: &BTreeMap<Var, u32>) -> Result<[[Fq; 5]; 5], DpError> {
    let m = map.matrix()?;
    let mut out: [[Fq; 5]; 5] = std::array::from_fn(|_| std::array::from_fn(|_| Fq { field: field.clone(), value: 0 }));
    for j in 0..5 {
        for i in 0..5 {
            out[j][i] = eval(&m[j][i], field, values)?;
        }
    }
    Ok(out)
}

/// `(m1 ∘ m2)` on coefficient matrices: the image of `x_j` under `m1 ∘ m2`
/// is `Σ_k m1[j][k]·m2(x_k)`.
pub fn compose_matrix<T: Coeff>(m1: &[[T; 5]; 5], m2: &[[T; 5]; 5]) -> [[T; 5]; 5] {
    let zero = m1[0][0].zero_like();
    std::array::from_fn(|j| {
        std::array::from_fn(|i| (0..5).fold(zero.clone(), |acc, k| acc.add(&m1[j][k].mul(&m2[k][i]))))
    })
}
