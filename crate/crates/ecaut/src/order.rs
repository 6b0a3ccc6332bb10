use serde::{Deserialize, Serialize};
use std::fmt;

/// An element of an order used as a model of `End(E)`.
///
/// Quaternions live in the algebra with `i² = -1`, `j² = -q`, `k = ij`, and are
/// stored with doubled coordinates so that half-integral elements are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EndElt {
    Integer(i64),
    /// `a + b·i`, `i² = -1`.
    Gaussian {
        a: i64,
        b: i64,
    },
    /// `a + b·ω`, `ω² + ω + 1 = 0`.
    Eisenstein {
        a: i64,
        b: i64,
    },
    Quaternion {
        q: i64,
        doubled: [i64; 4],
    },
}

impl EndElt {
    pub fn one_like(&self) -> EndElt {
        match *self {
            EndElt::Integer(_) => EndElt::Integer(1),
            EndElt::Gaussian { .. } => EndElt::Gaussian { a: 1, b: 0 },
            EndElt::Eisenstein { .. } => EndElt::Eisenstein { a: 1, b: 0 },
            EndElt::Quaternion { q, .. } => EndElt::Quaternion { q, doubled: [2, 0, 0, 0] },
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    pub fn mul(&self, o: &EndElt) -> EndElt {
        match (*self, *o) {
            (EndElt::Integer(x), EndElt::Integer(y)) => EndElt::Integer(x * y),
            (EndElt::Gaussian { a, b }, EndElt::Gaussian { a: c, b: d }) => {
                EndElt::Gaussian { a: a * c - b * d, b: a * d + b * c }
            }
            (EndElt::Eisenstein { a, b }, EndElt::Eisenstein { a: c, b: d }) => {
                // ω² = -1 - ω
                EndElt::Eisenstein { a: a * c - b * d, b: a * d + b * c - b * d }
            }
            (EndElt::Quaternion { q, doubled: x }, EndElt::Quaternion { q: q2, doubled: y }) => {
                assert_eq!(q, q2, "quaternions from different algebras");
                let (al, be) = (-1, -q);
                let [a1, b1, c1, d1] = x;
                let [a2, b2, c2, d2] = y;
                let r = [
                    a1 * a2 + al * b1 * b2 + be * c1 * c2 - al * be * d1 * d2,
                    a1 * b2 + b1 * a2 - be * c1 * d2 + be * d1 * c2,
                    a1 * c2 + c1 * a2 + al * b1 * d2 - al * d1 * b2,
                    a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2,
                ];
                assert!(r.iter().all(|v| v % 2 == 0), "product left the doubled lattice");
                EndElt::Quaternion { q, doubled: r.map(|v| v / 2) }
            }
            _ => panic!("multiplying elements of different orders"),
        }
    }

    /// `1 - self`.
    pub fn one_minus(&self) -> EndElt {
        match *self {
            EndElt::Integer(x) => EndElt::Integer(1 - x),
            EndElt::Gaussian { a, b } => EndElt::Gaussian { a: 1 - a, b: -b },
            EndElt::Eisenstein { a, b } => EndElt::Eisenstein { a: 1 - a, b: -b },
            EndElt::Quaternion { q, doubled: [a, b, c, d] } => EndElt::Quaternion { q, doubled: [2 - a, -b, -c, -d] },
        }
    }

    /// Reduced norm, the degree of the corresponding isogeny.
    pub fn norm(&self) -> u64 {
        let n = match *self {
            EndElt::Integer(x) => x * x,
            EndElt::Gaussian { a, b } => a * a + b * b,
            EndElt::Eisenstein { a, b } => a * a - a * b + b * b,
            EndElt::Quaternion { q, doubled: [a, b, c, d] } => {
                let s = a * a + b * b + q * (c * c + d * d);
                debug_assert_eq!(s % 4, 0);
                s / 4
            }
        };
        n as u64
    }

    /// Multiplicative order, if finite and at most `limit`.
    pub fn order(&self, limit: u32) -> Option<u32> {
        let mut x = *self;
        for n in 1..=limit {
            if x.is_one() {
                return Some(n);
            }
            x = x.mul(self);
        }
        None
    }
}

impl fmt::Display for EndElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndElt::Integer(x) => write!(f, "{x}"),
            EndElt::Gaussian { a, b } => write!(f, "{a}{b:+}i"),
            EndElt::Eisenstein { a, b } => write!(f, "{a}{b:+}ω"),
            EndElt::Quaternion { doubled: [a, b, c, d], .. } => write!(f, "({a}{b:+}i{c:+}j{d:+}k)/2"),
        }
    }
}

/// Units of `Z`, `Z[i]`, `Z[ω]`, the Hurwitz order (`q = 1`) or the maximal
/// order `Z⟨1, i, (1+j)/2, (i+k)/2⟩` of the algebra with `j² = -3`.
pub(crate) fn units_of(sample: EndElt) -> Vec<EndElt> {
    let mut out = Vec::new();
    match sample {
        EndElt::Integer(_) => out.extend([EndElt::Integer(1), EndElt::Integer(-1)]),
        EndElt::Gaussian { .. } | EndElt::Eisenstein { .. } => {
            for a in -2..=2 {
                for b in -2..=2 {
                    let x = match sample {
                        EndElt::Gaussian { .. } => EndElt::Gaussian { a, b },
                        _ => EndElt::Eisenstein { a, b },
                    };
                    if x.norm() == 1 {
                        out.push(x);
                    }
                }
            }
        }
        EndElt::Quaternion { q, .. } => {
            for a in -2..=2i64 {
                for b in -2..=2i64 {
                    for c in -2..=2i64 {
                        for d in -2..=2i64 {
                            if a * a + b * b + q * (c * c + d * d) != 4 {
                                continue;
                            }
                            let member = match q {
                                1 => (a - b) % 2 == 0 && (b - c) % 2 == 0 && (c - d) % 2 == 0,
                                _ => (a - c) % 2 == 0 && (b - d) % 2 == 0,
                            };
                            if member {
                                out.push(EndElt::Quaternion { q, doubled: [a, b, c, d] });
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_counts() {
        assert_eq!(units_of(EndElt::Integer(0)).len(), 2);
        assert_eq!(units_of(EndElt::Gaussian { a: 0, b: 0 }).len(), 4);
        assert_eq!(units_of(EndElt::Eisenstein { a: 0, b: 0 }).len(), 6);
        assert_eq!(units_of(EndElt::Quaternion { q: 1, doubled: [0; 4] }).len(), 24);
        assert_eq!(units_of(EndElt::Quaternion { q: 3, doubled: [0; 4] }).len(), 12);
    }

    #[test]
    fn norms_are_multiplicative() {
        let us = units_of(EndElt::Quaternion { q: 1, doubled: [0; 4] });
        for x in &us {
            for y in &us {
                let p = x.mul(y);
                assert_eq!(p.norm(), 1);
                assert!(us.contains(&p));
            }
        }
        let w = EndElt::Eisenstein { a: 0, b: 1 };
        assert_eq!(w.order(12), Some(3));
        assert_eq!(w.one_minus().norm(), 3);
    }
}
