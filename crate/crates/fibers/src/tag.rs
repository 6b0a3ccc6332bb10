use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::FiberError;

/// Fiber type, named by the affine Dynkin label.
///
/// `A(k)` is `Ã_k = I_{k+1}` for `k ≥ 1`; `D(k)` is `D̃_k = I_{k-4}*` for `k ≥ 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FiberTag {
    /// `Ã0*`, nodal rational curve `I1`.
    A0s,
    A(u32),
    D(u32),
    /// `Ã0**`, cuspidal rational curve `II`.
    A0ss,
    /// `Ã1*`, two tangent curves `III`.
    A1s,
    /// `Ã2*`, three concurrent curves `IV`.
    A2s,
    E6t,
    E7t,
    E8t,
    Smooth,
}

impl FiberTag {
    /// `I_n`, `n ≥ 1`.
    pub fn i_n(n: u32) -> FiberTag {
        if n == 1 {
            FiberTag::A0s
        } else {
            FiberTag::A(n - 1)
        }
    }

    /// `I_n*`, `n ≥ 0`.
    pub fn i_n_star(n: u32) -> FiberTag {
        FiberTag::D(n + 4)
    }

    pub fn validate(self) -> Result<FiberTag, FiberError> {
        match self {
            FiberTag::A(k) if k < 1 => Err(FiberError::InvalidTag(format!("A({k})"))),
            FiberTag::D(k) if k < 4 => Err(FiberError::InvalidTag(format!("D({k})"))),
            t => Ok(t),
        }
    }

    pub fn is_multiplicative(self) -> bool {
        matches!(self, FiberTag::A0s | FiberTag::A(_))
    }

    pub fn is_additive(self) -> bool {
        !self.is_multiplicative() && self != FiberTag::Smooth
    }

    pub fn kodaira(self) -> String {
        match self {
            FiberTag::A0s => "I1".into(),
            FiberTag::A(k) => format!("I{}", k + 1),
            FiberTag::D(k) => format!("I{}*", k.saturating_sub(4)),
            FiberTag::A0ss => "II".into(),
            FiberTag::A1s => "III".into(),
            FiberTag::A2s => "IV".into(),
            FiberTag::E6t => "IV*".into(),
            FiberTag::E7t => "III*".into(),
            FiberTag::E8t => "II*".into(),
            FiberTag::Smooth => "smooth".into(),
        }
    }

    pub fn dynkin(self) -> String {
        match self {
            FiberTag::A0s => "Ã0*".into(),
            FiberTag::A(k) => format!("Ã{k}"),
            FiberTag::D(k) => format!("D̃{k}"),
            FiberTag::A0ss => "Ã0**".into(),
            FiberTag::A1s => "Ã1*".into(),
            FiberTag::A2s => "Ã2*".into(),
            FiberTag::E6t => "Ẽ6".into(),
            FiberTag::E7t => "Ẽ7".into(),
            FiberTag::E8t => "Ẽ8".into(),
            FiberTag::Smooth => "smooth".into(),
        }
    }
}

impl fmt::Display for FiberTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.kodaira())
    }
}

impl FromStr for FiberTag {
    type Err = FiberError;

    /// Accepts Kodaira symbols (`I3`, `I2*`, `IV*`, ...) and ASCII Dynkin labels
    /// (`A2`, `D6`, `E8`, `A0*`, `A0**`, `A1*`, `A2*`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FiberError::InvalidTag(s.to_string());
        let t = match s {
            "smooth" => FiberTag::Smooth,
            "II" | "A0**" => FiberTag::A0ss,
            "III" | "A1*" => FiberTag::A1s,
            "IV" | "A2*" => FiberTag::A2s,
            "IV*" | "E6" => FiberTag::E6t,
            "III*" | "E7" => FiberTag::E7t,
            "II*" | "E8" => FiberTag::E8t,
            "A0*" => FiberTag::A0s,
            _ => {
                if let Some(rest) = s.strip_prefix('I') {
                    let (num, star) = match rest.strip_suffix('*') {
                        Some(r) => (r, true),
                        None => (rest, false),
                    };
                    let n: u32 = num.parse().map_err(|_| bad())?;
                    if star {
                        FiberTag::i_n_star(n)
                    } else if n >= 1 {
                        FiberTag::i_n(n)
                    } else {
                        return Err(bad());
                    }
                } else if let Some(k) = s.strip_prefix('A') {
                    FiberTag::A(k.parse().map_err(|_| bad())?)
                } else if let Some(k) = s.strip_prefix('D') {
                    FiberTag::D(k.parse().map_err(|_| bad())?)
                } else {
                    return Err(bad());
                }
            }
        };
        t.validate()
    }
}

impl TryFrom<String> for FiberTag {
    type Error = FiberError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<FiberTag> for String {
    fn from(t: FiberTag) -> String {
        t.kodaira()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        let tags = [
            FiberTag::A0s,
            FiberTag::A(1),
            FiberTag::A(8),
            FiberTag::D(4),
            FiberTag::D(8),
            FiberTag::A0ss,
            FiberTag::A1s,
            FiberTag::A2s,
            FiberTag::E6t,
            FiberTag::E7t,
            FiberTag::E8t,
            FiberTag::Smooth,
        ];
        for t in tags {
            assert_eq!(t.kodaira().parse::<FiberTag>().unwrap(), t);
        }
        assert_eq!("D8".parse::<FiberTag>().unwrap(), FiberTag::i_n_star(4));
        assert_eq!("A8".parse::<FiberTag>().unwrap(), FiberTag::i_n(9));
        assert!("I0".parse::<FiberTag>().is_err());
        assert!("D3".parse::<FiberTag>().is_err());
    }

    #[test]
    fn split() {
        assert!(FiberTag::A(3).is_multiplicative());
        assert!(FiberTag::A1s.is_additive());
        assert!(!FiberTag::Smooth.is_additive());
        assert_eq!(FiberTag::D(8).dynkin(), "D̃8");
    }
}
