//! Polynomials over F2 in the coordinates `x0..x4` and the parameters, with
//! formal inverses `ℓ = λ⁻¹` and `ν = μ⁻¹` cancelled on multiplication.

use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul};

/// Variables. Parameters carry a family index so that two copies of a
/// family can be composed symbolically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(u8),
    Lambda(u8),
    LambdaInv(u8),
    Mu(u8),
    MuInv(u8),
    Alpha(u8),
    Beta(u8),
}

impl Var {
    pub fn inverse(self) -> Option<Var> {
        match self {
            Var::Lambda(k) => Some(Var::LambdaInv(k)),
            Var::LambdaInv(k) => Some(Var::Lambda(k)),
            Var::Mu(k) => Some(Var::MuInv(k)),
            Var::MuInv(k) => Some(Var::Mu(k)),
            _ => None,
        }
    }

    pub fn is_coordinate(self) -> bool {
        matches!(self, Var::X(_))
    }

    fn symbol(self) -> String {
        let (s, k) = match self {
            Var::X(i) => return format!("x{i}"),
            Var::Lambda(k) => ("λ", k),
            Var::LambdaInv(k) => ("ℓ", k),
            Var::Mu(k) => ("μ", k),
            Var::MuInv(k) => ("ν", k),
            Var::Alpha(k) => ("α", k),
            Var::Beta(k) => ("β", k),
        };
        if k == 0 {
            s.to_string()
        } else {
            format!("{s}{k}")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(BTreeMap<Var, u32>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(BTreeMap::from([(v, 1)]))
    }

    /// Exponents as given, without cancelling inverse pairs.
    pub fn raw(exps: &[(Var, u32)]) -> Monomial {
        let mut m = BTreeMap::new();
        for &(v, e) in exps {
            if e > 0 {
                *m.entry(v).or_insert(0) += e;
            }
        }
        Monomial(m)
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().map(|(&v, &e)| (v, e))
    }

    pub fn x_degree(&self) -> u32 {
        self.vars().filter(|(v, _)| v.is_coordinate()).map(|(_, e)| e).sum()
    }

    /// Drops the coordinate part.
    pub fn parameter_part(&self) -> Monomial {
        Monomial(self.0.iter().filter(|(v, _)| !v.is_coordinate()).map(|(&v, &e)| (v, e)).collect())
    }

    pub fn coordinate_part(&self) -> Monomial {
        Monomial(self.0.iter().filter(|(v, _)| v.is_coordinate()).map(|(&v, &e)| (v, e)).collect())
    }

    /// Inverse pairs present, as `(v, v⁻¹)` with `v` the positive variable.
    pub fn reducible_pairs(&self) -> Vec<(Var, Var)> {
        self.vars()
            .filter_map(|(v, _)| match v {
                Var::Lambda(_) | Var::Mu(_) => Some((v, v.inverse().unwrap())),
                _ => None,
            })
            .filter(|&(_, w)| self.exponent(w) > 0)
            .collect()
    }

    /// One application of `v·v⁻¹ → 1`.
    pub fn rewrite_once(&self, pair: (Var, Var)) -> Option<Monomial> {
        let (v, w) = pair;
        if self.exponent(v) == 0 || self.exponent(w) == 0 {
            return None;
        }
        let mut m = self.0.clone();
        for x in [v, w] {
            let e = m.get_mut(&x).unwrap();
            *e -= 1;
            if *e == 0 {
                m.remove(&x);
            }
        }
        Some(Monomial(m))
    }

    pub fn canonical(&self) -> Monomial {
        let mut m = self.0.clone();
        for (v, w) in self.reducible_pairs() {
            let k = m[&v].min(m[&w]);
            for x in [v, w] {
                let e = m.get_mut(&x).unwrap();
                *e -= k;
                if *e == 0 {
                    m.remove(&x);
                }
            }
        }
        Monomial(m)
    }

    pub fn is_canonical(&self) -> bool {
        self.reducible_pairs().is_empty()
    }

    fn mul_raw(&self, other: &Monomial) -> Monomial {
        let mut m = self.0.clone();
        for (&v, &e) in &other.0 {
            *m.entry(v).or_insert(0) += e;
        }
        Monomial(m)
    }

    /// The inverse, for monomials in `λ, ℓ, μ, ν` only.
    pub fn inverse(&self) -> Option<Monomial> {
        let mut m = BTreeMap::new();
        for (v, e) in self.vars() {
            m.insert(v.inverse()?, e);
        }
        Some(Monomial(m))
    }

    /// Net exponent of `λ_k` (resp. `μ_k`), counting inverses negatively.
    pub fn unit_exponent(&self, v: Var) -> i64 {
        let w = v.inverse().expect("unit variable");
        self.exponent(v) as i64 - self.exponent(w) as i64
    }

    pub fn is_unit(&self) -> bool {
        self.vars().all(|(v, _)| v.inverse().is_some())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        // Parameters first, then coordinates.
        let mut parts: Vec<(Var, u32)> = self.vars().filter(|(v, _)| !v.is_coordinate()).collect();
        parts.extend(self.vars().filter(|(v, _)| v.is_coordinate()));
        for (v, e) in parts {
            f.write_str(&v.symbol())?;
            if e > 1 {
                f.write_str(&superscript(e))?;
            }
        }
        Ok(())
    }
}

fn superscript(n: u32) -> String {
    const D: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| D[c.to_digit(10).unwrap() as usize]).collect()
}

/// Element of `F2[x0..x4, λ, ℓ, μ, ν, α, β] / (λℓ − 1, μν − 1)`, stored as the
/// set of canonical monomials with coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ParamPoly {
    terms: BTreeSet<Monomial>,
}

impl ParamPoly {
    pub fn zero() -> ParamPoly {
        ParamPoly::default()
    }

    pub fn one() -> ParamPoly {
        ParamPoly::monomial(Monomial::one())
    }

    pub fn var(v: Var) -> ParamPoly {
        ParamPoly::monomial(Monomial::var(v))
    }

    pub fn x(i: u8) -> ParamPoly {
        ParamPoly::var(Var::X(i))
    }

    pub fn monomial(m: Monomial) -> ParamPoly {
        ParamPoly::from_terms([m])
    }

    /// Sum of the given monomials, canonicalized and reduced mod 2.
    pub fn from_terms(ms: impl IntoIterator<Item = Monomial>) -> ParamPoly {
        let mut terms = BTreeSet::new();
        for m in ms {
            toggle(&mut terms, m.canonical());
        }
        ParamPoly { terms }
    }

    /// Sum of the given monomials reduced mod 2, left unrewritten.
    pub fn from_raw_terms(ms: impl IntoIterator<Item = Monomial>) -> ParamPoly {
        let mut terms = BTreeSet::new();
        for m in ms {
            toggle(&mut terms, m);
        }
        ParamPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.contains(&Monomial::one())
    }

    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(Monomial::is_canonical)
    }

    pub fn canonical(&self) -> ParamPoly {
        ParamPoly::from_terms(self.terms.iter().cloned())
    }

    /// Applies one rewrite `v·v⁻¹ → 1` to the `index`-th reducible term,
    /// or returns `None` at a fixpoint.
    pub fn rewrite_step(&self, index: usize, pair_choice: usize) -> Option<ParamPoly> {
        let reducible: Vec<&Monomial> = self.terms.iter().filter(|m| !m.is_canonical()).collect();
        if reducible.is_empty() {
            return None;
        }
        let m = reducible[index % reducible.len()];
        let pairs = m.reducible_pairs();
        let r = m.rewrite_once(pairs[pair_choice % pairs.len()]).unwrap();
        let mut terms = self.terms.clone();
        terms.remove(m);
        toggle(&mut terms, r);
        Some(ParamPoly { terms })
    }

    pub fn pow(&self, n: u32) -> ParamPoly {
        (0..n).fold(ParamPoly::one(), |acc, _| &acc * self)
    }

    /// The single monomial, if there is exactly one term.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Inverse of a unit monomial in `λ, ℓ, μ, ν`.
    pub fn unit_inverse(&self) -> Option<ParamPoly> {
        self.as_monomial().and_then(Monomial::inverse).map(ParamPoly::monomial)
    }

    pub fn is_unit(&self) -> bool {
        self.as_monomial().is_some_and(Monomial::is_unit)
    }

    /// Coefficient of a coordinate monomial, as a parameter polynomial.
    pub fn coeff(&self, coords: &Monomial) -> ParamPoly {
        ParamPoly::from_terms(
            self.terms.iter().filter(|m| &m.coordinate_part() == coords).map(Monomial::parameter_part),
        )
    }

    /// Coordinate monomials that occur.
    pub fn coordinate_support(&self) -> BTreeSet<Monomial> {
        self.terms.iter().map(Monomial::coordinate_part).collect()
    }

    pub fn is_homogeneous_in_x(&self, degree: u32) -> bool {
        self.terms.iter().all(|m| m.x_degree() == degree)
    }

    pub fn has_coordinates(&self) -> bool {
        self.terms.iter().any(|m| m.x_degree() > 0)
    }

    /// Substitutes `x_i ↦ images[i]`.
    pub fn substitute(&self, images: &[ParamPoly; 5]) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for m in &self.terms {
            let mut t = ParamPoly::monomial(m.parameter_part());
            for (v, e) in m.vars() {
                if let Var::X(i) = v {
                    t = &t * &images[i as usize].pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Substitutes parameters by polynomials; inverse variables map to the
    /// inverse of the image, which must then be a unit.
    pub fn substitute_params(&self, images: &BTreeMap<Var, ParamPoly>) -> Option<ParamPoly> {
        let mut out = ParamPoly::zero();
        for m in &self.terms {
            let mut t = ParamPoly::one();
            for (v, e) in m.vars() {
                let img = match images.get(&v) {
                    Some(p) => p.clone(),
                    None => match v.inverse().and_then(|w| images.get(&w)) {
                        Some(p) => p.unit_inverse()?,
                        None => ParamPoly::var(v),
                    },
                };
                t = &t * &img.pow(e);
            }
            out = &out + &t;
        }
        Some(out)
    }

    /// Minimum over the terms of the net exponent of the unit variable `v`.
    pub fn min_unit_exponent(&self, v: Var) -> Option<i64> {
        self.terms.iter().map(|m| m.unit_exponent(v)).min()
    }

    pub fn unit_vars(&self) -> BTreeSet<Var> {
        self.terms
            .iter()
            .flat_map(|m| m.vars().map(|(v, _)| v))
            .filter_map(|v| match v {
                Var::LambdaInv(k) => Some(Var::Lambda(k)),
                Var::MuInv(k) => Some(Var::Mu(k)),
                Var::Lambda(_) | Var::Mu(_) => Some(v),
                _ => None,
            })
            .collect()
    }
}

fn toggle(terms: &mut BTreeSet<Monomial>, m: Monomial) {
    if !terms.remove(&m) {
        terms.insert(m);
    }
}

/// `λ^e` for `e ∈ Z`, through `ℓ` when negative.
pub fn unit_power(v: Var, e: i64) -> ParamPoly {
    let (var, n) = if e >= 0 { (v, e as u32) } else { (v.inverse().unwrap(), (-e) as u32) };
    ParamPoly::monomial(Monomial::raw(&[(var, n)]))
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, other: &ParamPoly) -> ParamPoly {
        let mut terms = self.terms.clone();
        for m in &other.terms {
            toggle(&mut terms, m.clone());
        }
        ParamPoly { terms }
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, other: &ParamPoly) -> ParamPoly {
        let mut terms = BTreeSet::new();
        for a in &self.terms {
            for b in &other.terms {
                toggle(&mut terms, a.mul_raw(b).canonical());
            }
        }
        ParamPoly { terms }
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(self, other: ParamPoly) -> ParamPoly {
        &self + &other
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, other: ParamPoly) -> ParamPoly {
        &self * &other
    }
}

/// Terms in decreasing coordinate degree, then by coordinate monomial, then
/// by parameters, joined with `+`.
impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ts: Vec<&Monomial> = self.terms.iter().collect();
        ts.sort_by(|a, b| {
            b.x_degree()
                .cmp(&a.x_degree())
                .then_with(|| a.coordinate_part().cmp(&b.coordinate_part()))
                .then_with(|| a.cmp(b))
        });
        let s: Vec<String> = ts.iter().map(|m| m.to_string()).collect();
        f.write_str(&s.join(" + "))
    }
}

impl Serialize for ParamPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
