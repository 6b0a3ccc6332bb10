use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

use crate::order::{units_of, EndElt};
use crate::EcError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Characteristic {
    /// Any `p > 3` (also characteristic 0).
    Large,
    Three,
    Two,
}

impl Characteristic {
    pub fn prime(self) -> Option<u64> {
        match self {
            Characteristic::Large => None,
            Characteristic::Three => Some(3),
            Characteristic::Two => Some(2),
        }
    }
}

/// In characteristic 2 and 3 the values 0 and 1728 coincide; both are stored as `J0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum JClass {
    Generic,
    J1728,
    J0,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Reduction {
    Ordinary,
    Supersingular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveClass {
    pub characteristic: Characteristic,
    pub j: JClass,
    pub reduction: Option<Reduction>,
}

impl CurveClass {
    /// Builds a class, deriving the reduction type in characteristic 2 and 3.
    pub fn new(characteristic: Characteristic, j: JClass) -> CurveClass {
        let j = match (characteristic, j) {
            (Characteristic::Large, j) => j,
            (_, JClass::J1728) => JClass::J0,
            (_, j) => j,
        };
        let reduction = match (characteristic, j) {
            (Characteristic::Large, _) => None,
            (_, JClass::Generic) => Some(Reduction::Ordinary),
            _ => Some(Reduction::Supersingular),
        };
        CurveClass { characteristic, j, reduction }
    }

    pub fn validate(&self) -> Result<(), EcError> {
        let expected = CurveClass::new(self.characteristic, self.j);
        if *self != expected {
            return Err(EcError::InconsistentClass(format!("{self:?}")));
        }
        Ok(())
    }

    pub fn is_special(&self) -> bool {
        self.j != JClass::Generic
    }

    /// The seven rows of the automorphism tables.
    pub fn all() -> Vec<CurveClass> {
        use Characteristic::*;
        vec![
            CurveClass::new(Large, JClass::Generic),
            CurveClass::new(Large, JClass::J1728),
            CurveClass::new(Large, JClass::J0),
            CurveClass::new(Three, JClass::Generic),
            CurveClass::new(Three, JClass::J0),
            CurveClass::new(Two, JClass::Generic),
            CurveClass::new(Two, JClass::J0),
        ]
    }

    fn order_sample(&self) -> EndElt {
        match (self.characteristic, self.j) {
            (_, JClass::Generic) => EndElt::Integer(0),
            (Characteristic::Large, JClass::J1728) => EndElt::Gaussian { a: 0, b: 0 },
            (Characteristic::Large, JClass::J0) => EndElt::Eisenstein { a: 0, b: 0 },
            (Characteristic::Three, _) => EndElt::Quaternion { q: 3, doubled: [0; 4] },
            (Characteristic::Two, _) => EndElt::Quaternion { q: 1, doubled: [0; 4] },
        }
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.characteristic {
            Characteristic::Large => "p>3",
            Characteristic::Three => "p=3",
            Characteristic::Two => "p=2",
        };
        let j = match (self.characteristic, self.j) {
            (_, JClass::Generic) => "generic",
            (Characteristic::Large, JClass::J1728) => "j=1728",
            (Characteristic::Large, JClass::J0) => "j=0",
            _ => "j=0=1728",
        };
        write!(f, "{p}, {j}")?;
        if let Some(r) = self.reduction {
            write!(f, ", {}", if r == Reduction::Ordinary { "ordinary" } else { "supersingular" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupStructure {
    Cyclic(u32),
    /// `Z/3 ⋊ Z/4`, order 12.
    Dicyclic12,
    /// `Q8 ⋊ Z/3 ≅ SL(2, 3)`, order 24.
    BinaryTetrahedral,
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupStructure::Cyclic(n) => write!(f, "Z/{n}"),
            GroupStructure::Dicyclic12 => write!(f, "Z/3⋊Z/4"),
            GroupStructure::BinaryTetrahedral => write!(f, "Q8⋊Z/3"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutGroup {
    pub order: u32,
    pub structure: GroupStructure,
}

/// The unit group of the endomorphism order modelling `Aut(E)`.
pub fn units(c: &CurveClass) -> Result<Vec<EndElt>, EcError> {
    c.validate()?;
    Ok(units_of(c.order_sample()))
}

pub fn aut_group(c: &CurveClass) -> Result<AutGroup, EcError> {
    let us = units(c)?;
    let order = us.len() as u32;
    let cyclic = us.iter().any(|u| u.order(order) == Some(order));
    let structure = if cyclic {
        GroupStructure::Cyclic(order)
    } else if order == 12 {
        GroupStructure::Dicyclic12
    } else if order == 24 {
        GroupStructure::BinaryTetrahedral
    } else {
        return Err(EcError::InconsistentClass(format!("unexpected unit group of order {order}")));
    };
    Ok(AutGroup { order, structure })
}

pub fn element_orders(c: &CurveClass) -> Result<BTreeSet<u32>, EcError> {
    let us = units(c)?;
    let n = us.len() as u32;
    Ok(us.iter().filter_map(|u| u.order(n)).collect())
}

/// `N(1 − g)` over all units `g` of the given exact order.
pub fn norm_values(c: &CurveClass, element_order: u32) -> Result<Vec<u64>, EcError> {
    let us = units(c)?;
    let n = us.len() as u32;
    let vals: Vec<u64> =
        us.iter().filter(|u| u.order(n) == Some(element_order)).map(|u| u.one_minus().norm()).collect();
    if vals.is_empty() {
        return Err(EcError::OrderNotRealized(element_order));
    }
    Ok(vals)
}

/// Number of fixed points when the characteristic divides `deg(1 − g)`.
pub fn separable_rule(c: &CurveClass, element_order: u32) -> Option<u64> {
    use Characteristic::*;
    match (c.characteristic, c.reduction, element_order) {
        (Two, Some(Reduction::Ordinary), 2) => Some(2),
        (Two, Some(Reduction::Supersingular), 2 | 4) => Some(1),
        (Three, Some(Reduction::Supersingular), 3) => Some(1),
        _ => None,
    }
}

/// Number of fixed points of an automorphism of the given order: `N(1 − g)`
/// when that degree is prime to the characteristic, the separable degree from
/// the rule table otherwise.
pub fn fixed_count(c: &CurveClass, element_order: u32) -> Result<u64, EcError> {
    let vals = norm_values(c, element_order)?;
    let n = vals[0];
    if vals.iter().any(|&v| v != n) {
        return Err(EcError::NormNotConstant(vals));
    }
    match c.characteristic.prime() {
        Some(p) if n % p == 0 => separable_rule(c, element_order).ok_or(EcError::MissingRule(element_order)),
        _ => Ok(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Characteristic::*;

    #[test]
    fn groups() {
        let g = aut_group(&CurveClass::new(Large, JClass::J0)).unwrap();
        assert_eq!(g, AutGroup { order: 6, structure: GroupStructure::Cyclic(6) });
        assert_eq!(aut_group(&CurveClass::new(Two, JClass::J0)).unwrap().order, 24);
        assert_eq!(aut_group(&CurveClass::new(Three, JClass::J0)).unwrap().structure, GroupStructure::Dicyclic12);
        assert_eq!(aut_group(&CurveClass::new(Two, JClass::Generic)).unwrap().order, 2);
    }

    #[test]
    fn counts() {
        assert_eq!(fixed_count(&CurveClass::new(Large, JClass::Generic), 2).unwrap(), 4);
        assert_eq!(fixed_count(&CurveClass::new(Two, JClass::J0), 3).unwrap(), 3);
        assert_eq!(fixed_count(&CurveClass::new(Large, JClass::J0), 6).unwrap(), 1);
        assert_eq!(fixed_count(&CurveClass::new(Large, JClass::J0), 4), Err(EcError::OrderNotRealized(4)));
    }

    #[test]
    fn inconsistent_class() {
        let c = CurveClass { characteristic: Two, j: JClass::Generic, reduction: Some(Reduction::Supersingular) };
        assert!(matches!(aut_group(&c), Err(EcError::InconsistentClass(_))));
        let c = CurveClass::new(Three, JClass::J1728);
        assert_eq!(c.j, JClass::J0);
        assert_eq!(c.reduction, Some(Reduction::Supersingular));
    }
}
