use serde::{Deserialize, Serialize};
use std::ops::ControlFlow;

use crate::vector::{e8_cartan, inner, validate_sequence, Vector10, RANK};
use crate::LatticeError;

pub const DEFAULT_CAP: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IsotropicSequence {
    pub vectors: Vec<Vector10>,
}

impl IsotropicSequence {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        validate_sequence(&self.vectors)
    }
}

pub fn search_sequences(n: usize, bound: i64) -> Result<Vec<IsotropicSequence>, LatticeError> {
    search_sequences_capped(n, bound, DEFAULT_CAP)
}

/// Depth-first search for isotropic sequences of length `n` with all coordinates
/// in `[-bound, bound]`. Each unordered set is reported once, listed in the
/// candidate order: `(a, b)` pairs sorted by `a·b` and size (so `e`, then `f`,
/// come first), then the `E8` part lexicographically.
pub fn search_sequences_capped(n: usize, bound: i64, cap: usize) -> Result<Vec<IsotropicSequence>, LatticeError> {
    if n == 0 || n > RANK {
        return Err(LatticeError::LengthOutOfRange(n));
    }
    if bound < 1 {
        return Err(LatticeError::BadBound(bound));
    }
    let s = Search::new(n, bound, cap);
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(n);
    let _ = s.extend(&mut stack, 0, None, &mut out);
    Ok(out)
}

struct Search {
    n: usize,
    bound: i64,
    cap: usize,
    pairs: Vec<(i64, i64)>,
    fp: FinckePohst,
}

impl Search {
    fn new(n: usize, bound: i64, cap: usize) -> Self {
        let mut pairs = Vec::new();
        for a in -bound..=bound {
            for b in -bound..=bound {
                if a * b >= 0 && (a, b) != (0, 0) {
                    pairs.push((a, b));
                }
            }
        }
        pairs.sort_by_key(|&(a, b)| (a * b, a.abs() + b.abs(), a < 0 || b < 0, -a, -b));
        Search { n, bound, cap, pairs, fp: FinckePohst::new() }
    }

    /// Whether a candidate with hyperbolic part `(a, b)` can pair to 1 with `s`.
    fn pair_feasible(a: i64, b: i64, s: &Vector10) -> bool {
        let (sa, sb) = (s.0[0], s.0[1]);
        let need = a * sb + sa * b - 1;
        let bound_sq = 4 * a * b * sa * sb;
        need * need <= bound_sq
    }

    fn extend(
        &self,
        stack: &mut Vec<Vector10>,
        start_pair: usize,
        after: Option<[i64; 8]>,
        out: &mut Vec<IsotropicSequence>,
    ) -> ControlFlow<()> {
        if stack.len() == self.n {
            out.push(IsotropicSequence { vectors: stack.clone() });
            return if out.len() >= self.cap { ControlFlow::Break(()) } else { ControlFlow::Continue(()) };
        }
        for (pi, &(a, b)) in self.pairs.iter().enumerate().skip(start_pair) {
            if !stack.iter().all(|s| Self::pair_feasible(a, b, s)) {
                continue;
            }
            let mut cands = Vec::new();
            self.fp.for_each(2 * a * b, self.bound, &mut |v| {
                let x = Vector10::from_parts(a, b, *v);
                if stack.iter().all(|s| inner(&x, s) == 1) {
                    cands.push(*v);
                }
            });
            cands.sort_unstable();
            for v in cands {
                if pi == start_pair {
                    if let Some(prev) = after {
                        if v <= prev {
                            continue;
                        }
                    }
                }
                stack.push(Vector10::from_parts(a, b, v));
                let r = self.extend(stack, pi, Some(v), out);
                stack.pop();
                r?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Enumeration of `E8` vectors of a given Cartan norm via the Fincke–Pohst
/// quadratic-completion of the Cartan matrix.
struct FinckePohst {
    q: [[f64; 8]; 8],
    cartan: [[i64; 8]; 8],
}

impl FinckePohst {
    fn new() -> Self {
        let cartan = e8_cartan();
        let mut q = [[0.0; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                q[i][j] = cartan[i][j] as f64;
            }
        }
        for i in 0..8 {
            for j in i + 1..8 {
                q[j][i] = q[i][j];
                q[i][j] /= q[i][i];
            }
            for k in i + 1..8 {
                for l in k..8 {
                    q[k][l] -= q[k][i] * q[i][l];
                }
            }
        }
        FinckePohst { q, cartan }
    }

    fn norm(&self, v: &[i64; 8]) -> i64 {
        let mut s = 0;
        for i in 0..8 {
            for j in 0..8 {
                s += v[i] * self.cartan[i][j] * v[j];
            }
        }
        s
    }

    /// Calls `f` on every `v` with `vᵀCv = norm` and `|v_i| ≤ bound`.
    fn for_each(&self, norm: i64, bound: i64, f: &mut dyn FnMut(&[i64; 8])) {
        if norm < 0 {
            return;
        }
        if norm == 0 {
            f(&[0; 8]);
            return;
        }
        let mut v = [0i64; 8];
        self.level(7, norm as f64, norm, bound, &mut v, f);
    }

    fn level(&self, i: usize, budget: f64, norm: i64, bound: i64, v: &mut [i64; 8], f: &mut dyn FnMut(&[i64; 8])) {
        let center: f64 = -(i + 1..8).map(|j| self.q[i][j] * v[j] as f64).sum::<f64>();
        let radius = (budget.max(0.0) / self.q[i][i]).sqrt() + 1e-9;
        let lo = ((center - radius).ceil() as i64).max(-bound);
        let hi = ((center + radius).floor() as i64).min(bound);
        for x in lo..=hi {
            v[i] = x;
            let d = x as f64 - center;
            let rest = budget - self.q[i][i] * d * d;
            if i == 0 {
                if self.norm(v) == norm {
                    f(v);
                }
            } else {
                self.level(i - 1, rest, norm, bound, v, f);
            }
        }
        v[i] = 0;
    }
}
