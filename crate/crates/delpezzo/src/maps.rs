use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

use crate::poly::{unit_power, Monomial, ParamPoly, Var};
use crate::surface::Kind;
use crate::DpError;

/// A linear map of `P⁴` given by the images of `x0..x4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjMap(pub [ParamPoly; 5]);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Params {
    /// `(λ, μ)` on `D1`.
    Torus { lambda: ParamPoly, mu: ParamPoly },
    /// `(α, β)` on `D2`, `D3`.
    Additive { alpha: ParamPoly, beta: ParamPoly },
    /// `λ` on `D3`.
    Scale { lambda: ParamPoly },
}

impl Params {
    pub fn torus(k: u8) -> Params {
        Params::Torus { lambda: ParamPoly::var(Var::Lambda(k)), mu: ParamPoly::var(Var::Mu(k)) }
    }

    pub fn additive(k: u8) -> Params {
        Params::Additive { alpha: ParamPoly::var(Var::Alpha(k)), beta: ParamPoly::var(Var::Beta(k)) }
    }

    pub fn scale(k: u8) -> Params {
        Params::Scale { lambda: ParamPoly::var(Var::Lambda(k)) }
    }

    pub fn arity(&self) -> usize {
        match self {
            Params::Scale { .. } => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::Torus { lambda, mu } => write!(f, "λ = {lambda}, μ = {mu}"),
            Params::Additive { alpha, beta } => write!(f, "α = {alpha}, β = {beta}"),
            Params::Scale { lambda } => write!(f, "λ = {lambda}"),
        }
    }
}

fn x(i: u8) -> ParamPoly {
    ParamPoly::x(i)
}

fn inv(p: &ParamPoly) -> Result<ParamPoly, DpError> {
    p.unit_inverse().ok_or_else(|| DpError::NotAUnit(p.to_string()))
}

/// The automorphism of `D` with the given parameters.
pub fn aut(kind: Kind, params: &Params) -> Result<ProjMap, DpError> {
    let m = match (kind, params) {
        (Kind::D1, Params::Torus { lambda, mu }) => {
            ProjMap([x(0), lambda * &x(1), &inv(lambda)? * &x(2), mu * &x(3), &inv(mu)? * &x(4)])
        }
        (Kind::D2, Params::Additive { alpha, beta }) => {
            let a2 = alpha.pow(2);
            let c1 = &(&(alpha * beta) + &(&a2 * beta)) + &beta.pow(2);
            ProjMap([
                &x(0) + &(alpha * &x(1)),
                x(1),
                &(&a2 * &x(1)) + &x(2),
                sum([beta * &x(0), &c1 * &x(1), beta * &x(2), x(3), &(alpha + &a2) * &x(4)]),
                &(beta * &x(1)) + &x(4),
            ])
        }
        (Kind::D3, Params::Additive { alpha, beta }) => {
            let a2 = alpha.pow(2);
            let c1 = &(&a2 * beta) + &beta.pow(2);
            ProjMap([
                &x(0) + &(alpha * &x(1)),
                x(1),
                &(&a2 * &x(1)) + &x(2),
                sum([&c1 * &x(1), beta * &x(2), x(3), &a2 * &x(4)]),
                &(beta * &x(1)) + &x(4),
            ])
        }
        (Kind::D3, Params::Scale { lambda }) => {
            ProjMap([x(0), &inv(lambda)? * &x(1), lambda * &x(2), &lambda.pow(3) * &x(3), lambda * &x(4)])
        }
        (kind, p) => return Err(DpError::WrongArity { kind, given: p.arity() }),
    };
    Ok(m)
}

fn sum<const N: usize>(ps: [ParamPoly; N]) -> ParamPoly {
    ps.iter().fold(ParamPoly::zero(), |acc, p| &acc + p)
}

impl ProjMap {
    pub fn identity() -> ProjMap {
        ProjMap([x(0), x(1), x(2), x(3), x(4)])
    }

    /// Entry `(i, j)` is the coefficient of `x_j` in the image of `x_i`.
    pub fn matrix(&self) -> Result<[[ParamPoly; 5]; 5], DpError> {
        let mut out: [[ParamPoly; 5]; 5] = Default::default();
        for (i, f) in self.0.iter().enumerate() {
            if !f.is_homogeneous_in_x(1) {
                return Err(DpError::NotLinear(f.to_string()));
            }
            for (j, slot) in out[i].iter_mut().enumerate() {
                *slot = f.coeff(&Monomial::var(Var::X(j as u8)));
            }
        }
        Ok(out)
    }

    pub fn determinant(&self) -> Result<ParamPoly, DpError> {
        Ok(det(&self.matrix()?))
    }

    /// Invertible when the determinant is a unit monomial in `λ, μ`.
    pub fn check_invertible(&self) -> Result<(), DpError> {
        let d = self.determinant()?;
        if d.is_unit() {
            Ok(())
        } else {
            Err(DpError::NotInvertible(d.to_string()))
        }
    }

    pub fn pullback(&self, f: &ParamPoly) -> ParamPoly {
        f.substitute(&self.0)
    }

    /// Divides every coordinate by the coefficient of `x0` in the first one
    /// when that coefficient is a unit.
    pub fn normalized(&self) -> ProjMap {
        let c = self.0[0].coeff(&Monomial::var(Var::X(0)));
        match c.unit_inverse() {
            Some(ci) if !c.is_one() => ProjMap(self.0.clone().map(|f| &f * &ci)),
            _ => self.clone(),
        }
    }

    /// Equality up to a common scalar, by cross-multiplying coefficients.
    pub fn projectively_eq(&self, other: &ProjMap) -> bool {
        let (ca, cb) = (coefficient_vector(&self.0), coefficient_vector(&other.0));
        let Some(k) = (0..ca.len()).find(|&k| !ca[k].is_zero()) else {
            return cb.iter().all(ParamPoly::is_zero);
        };
        (0..ca.len()).all(|l| &ca[k] * &cb[l] == &ca[l] * &cb[k])
    }

    pub fn specialize(&self, values: &BTreeMap<Var, ParamPoly>) -> Result<ProjMap, DpError> {
        let mut out: [ParamPoly; 5] = Default::default();
        for (o, f) in out.iter_mut().zip(&self.0) {
            *o = f.substitute_params(values).ok_or_else(|| DpError::NotAUnit(format!("{values:?}")))?;
        }
        Ok(ProjMap(out))
    }
}

fn coefficient_vector(a: &[ParamPoly; 5]) -> Vec<ParamPoly> {
    let mut v = Vec::with_capacity(25);
    for f in a {
        for j in 0..5 {
            v.push(f.coeff(&Monomial::var(Var::X(j))));
        }
    }
    v
}

/// Leibniz expansion.
fn det(m: &[[ParamPoly; 5]; 5]) -> ParamPoly {
    fn go(m: &[[ParamPoly; 5]; 5], row: usize, used: &mut [bool; 5], acc: ParamPoly, out: &mut ParamPoly) {
        if acc.is_zero() {
            return;
        }
        if row == 5 {
            *out = &*out + &acc;
            return;
        }
        for j in 0..5 {
            if !used[j] && !m[row][j].is_zero() {
                used[j] = true;
                go(m, row + 1, used, &acc * &m[row][j], out);
                used[j] = false;
            }
        }
    }
    let mut out = ParamPoly::zero();
    go(m, 0, &mut [false; 5], ParamPoly::one(), &mut out);
    out
}

/// `m1 ∘ m2`: substitutes the coordinates of `m2` into `m1`, then normalizes
/// the overall scalar.
pub fn compose(m1: &ProjMap, m2: &ProjMap) -> ProjMap {
    ProjMap(m1.0.clone().map(|f| f.substitute(&m2.0))).normalized()
}

/// Parameters of the family of `kind` that the map belongs to, checked by
/// rebuilding the map.
pub fn recover(map: &ProjMap, kind: Kind) -> Option<Params> {
    let m = map.normalized();
    let c = |i: usize, j: u8| m.0[i].coeff(&Monomial::var(Var::X(j)));
    let candidates = match kind {
        Kind::D1 => vec![Params::Torus { lambda: c(1, 1), mu: c(3, 3) }],
        Kind::D2 => vec![Params::Additive { alpha: c(0, 1), beta: c(4, 1) }],
        Kind::D3 => vec![Params::Additive { alpha: c(0, 1), beta: c(4, 1) }, Params::Scale { lambda: c(2, 2) }],
    };
    candidates.into_iter().find(|p| aut(kind, p).is_ok_and(|a| a.projectively_eq(&m)))
}

/// `λ^e μ^f` scaling that makes the smallest exponents of each unit variable zero.
pub fn unit_normalizer(entries: &[&ParamPoly]) -> ParamPoly {
    let mut vars = std::collections::BTreeSet::new();
    for e in entries {
        vars.extend(e.unit_vars());
    }
    let mut s = ParamPoly::one();
    for v in vars {
        let min = entries.iter().filter_map(|e| e.min_unit_exponent(v)).min().unwrap_or(0);
        s = &s * &unit_power(v, -min);
    }
    s
}

impl fmt::Display for ProjMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(" : "))
    }
}

impl Serialize for ProjMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|p| p.to_string()))
    }
}
