use enriques_fibers::{catalog, FiberModel, FiberTag};
use enriques_lattice::{determinant, signature};
use serde::{Deserialize, Serialize};

use crate::ConfigError;

/// `F · F'` for the simple fibers `F ≡ 2F1`, `F' ≡ 2F2` of a `U[2]`-pair.
pub const FF_NORMALIZATION: i64 = 4;

const MAX_INTERSECTION: i64 = 4;

/// Eight curves common to `F` and `F'`, plus `C9 ⊂ F` and `C10 ⊂ F'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Overlay {
    /// Component ids of `C9` in `F` and `C10` in `F'`.
    pub extra: (u32, u32),
    /// `(id in F, id in F')` for `C1..C8`.
    pub matching: Vec<(u32, u32)>,
    /// `C9 · C10`.
    pub c9_c10: i64,
    /// Gram matrix of `C1..C10`.
    pub gram: Vec<Vec<i64>>,
    pub mult_f: Vec<i64>,
    pub mult_f2: Vec<i64>,
    pub f_dot_f2: i64,
    pub det: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub t1: FiberTag,
    pub t2: FiberTag,
    pub normalization: i64,
    pub satisfiable: bool,
    pub witness: Option<Overlay>,
    pub overlays: usize,
}

struct Fiber {
    ids: Vec<u32>,
    gram: Vec<Vec<i64>>,
    mult: Vec<i64>,
}

fn nine(tag: FiberTag) -> Result<Fiber, ConfigError> {
    let c = catalog(tag)?;
    if !tag.is_additive() || c.m != 9 {
        return Err(ConfigError::NotNineComponents(tag.kodaira()));
    }
    let FiberModel { components, .. } = &c.model;
    Ok(Fiber {
        ids: components.iter().map(|x| x.id).collect(),
        gram: c.model.intersection_matrix(),
        mult: components.iter().map(|x| x.mult as i64).collect(),
    })
}

/// Exhaustive search over the choice of `C9`, `C10`, the identification of
/// the shared curves and `C9 · C10 ∈ [0, 4]`, in that order. The first
/// overlay found is the witness.
pub fn shared_eight_search(t1: FiberTag, t2: FiberTag) -> Result<SearchResult, ConfigError> {
    search(t1, t2, FF_NORMALIZATION)
}

/// Normalizations `c ∈ [1, 16]` for which `F · F' = c` rules out the
/// `(I4*, I4*)` overlay while keeping both cases involving `II*`.
pub fn pin_normalization() -> Result<Vec<i64>, ConfigError> {
    let (d, e) = (FiberTag::D(8), FiberTag::E8t);
    let mut out = Vec::new();
    for c in 1..=16 {
        let sat = |a, b| search(a, b, c).map(|r| r.satisfiable);
        if !sat(d, d)? && sat(d, e)? && sat(e, e)? {
            out.push(c);
        }
    }
    Ok(out)
}

pub fn search(t1: FiberTag, t2: FiberTag, normalization: i64) -> Result<SearchResult, ConfigError> {
    let (f, g) = (nine(t1)?, nine(t2)?);
    let mut found = Vec::new();
    for r1 in 0..9 {
        let s1: Vec<usize> = (0..9).filter(|&i| i != r1).collect();
        for r2 in 0..9 {
            let s2: Vec<usize> = (0..9).filter(|&i| i != r2).collect();
            let mut matches = Vec::new();
            extend_matching(&f, &g, &s1, &s2, &mut Vec::new(), &mut [false; 8], &mut matches);
            for perm in matches {
                for x in 0..=MAX_INTERSECTION {
                    if let Some(o) = overlay(&f, &g, r1, r2, &s1, &s2, &perm, x, normalization)? {
                        found.push(o);
                    }
                }
            }
        }
    }
    Ok(SearchResult {
        t1,
        t2,
        normalization,
        satisfiable: !found.is_empty(),
        overlays: found.len(),
        witness: found.into_iter().next(),
    })
}

/// Bijections `s1 → s2` preserving intersection numbers.
fn extend_matching(
    f: &Fiber,
    g: &Fiber,
    s1: &[usize],
    s2: &[usize],
    perm: &mut Vec<usize>,
    used: &mut [bool; 8],
    out: &mut Vec<Vec<usize>>,
) {
    let k = perm.len();
    if k == 8 {
        out.push(perm.clone());
        return;
    }
    for j in 0..8 {
        if used[j] {
            continue;
        }
        if (0..k).all(|a| f.gram[s1[a]][s1[k]] == g.gram[s2[perm[a]]][s2[j]]) {
            used[j] = true;
            perm.push(j);
            extend_matching(f, g, s1, s2, perm, used, out);
            perm.pop();
            used[j] = false;
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn overlay(
    f: &Fiber,
    g: &Fiber,
    r1: usize,
    r2: usize,
    s1: &[usize],
    s2: &[usize],
    perm: &[usize],
    x: i64,
    normalization: i64,
) -> Result<Option<Overlay>, ConfigError> {
    let mut gram = vec![vec![0i64; 10]; 10];
    for a in 0..8 {
        for b in 0..8 {
            gram[a][b] = f.gram[s1[a]][s1[b]];
        }
        gram[a][8] = f.gram[s1[a]][r1];
        gram[8][a] = gram[a][8];
        gram[a][9] = g.gram[s2[perm[a]]][r2];
        gram[9][a] = gram[a][9];
    }
    gram[8][8] = -2;
    gram[9][9] = -2;
    gram[8][9] = x;
    gram[9][8] = x;
    let mut mf: Vec<i64> = s1.iter().map(|&i| f.mult[i]).collect();
    mf.extend([f.mult[r1], 0]);
    let mut mg: Vec<i64> = perm.iter().map(|&j| g.mult[s2[j]]).collect();
    mg.extend([0, g.mult[r2]]);
    let dot = |v: &[i64]| -> Vec<i64> { (0..10).map(|i| (0..10).map(|j| gram[i][j] * v[j]).sum()).collect() };
    let (ff, fg) = (dot(&mf), dot(&mg));
    let f_dot_f2: i64 = ff.iter().zip(&mg).map(|(a, b)| a * b).sum();
    if f_dot_f2 != normalization || ff[9] < 0 || fg[8] < 0 {
        return Ok(None);
    }
    // F/2 and F'/2 must pair integrally with every curve.
    if ff.iter().chain(&fg).any(|v| v % 2 != 0) {
        return Ok(None);
    }
    let sig = signature(&gram)?;
    if sig.positive != 1 || sig.zero != 0 {
        return Ok(None);
    }
    // The lattice spanned by the curves and the half-fibers sits with finite
    // index in a unimodular lattice: its determinant is minus a square.
    let det = determinant(&gram)?;
    let halves = [&mf, &mg].map(|v| v.iter().map(|c| c.rem_euclid(2)).collect::<Vec<_>>());
    let sum: Vec<i64> = halves[0].iter().zip(&halves[1]).map(|(a, b)| (a + b) % 2).collect();
    let nonzero: std::collections::BTreeSet<&Vec<i64>> =
        [&halves[0], &halves[1], &sum].into_iter().filter(|v| v.iter().any(|&c| c != 0)).collect();
    let index = 1i128
        << if nonzero.is_empty() {
            0
        } else if nonzero.len() == 1 {
            1
        } else {
            2
        };
    if det % (index * index) != 0 || !is_neg_square(det / (index * index)) {
        return Ok(None);
    }
    Ok(Some(Overlay {
        extra: (f.ids[r1], g.ids[r2]),
        matching: (0..8).map(|a| (f.ids[s1[a]], g.ids[s2[perm[a]]])).collect(),
        c9_c10: x,
        gram,
        mult_f: mf,
        mult_f2: mg,
        f_dot_f2,
        det,
    }))
}

fn is_neg_square(d: i128) -> bool {
    if d >= 0 {
        return false;
    }
    let r = ((-d) as f64).sqrt().round() as i128;
    (r - 1..=r + 1).any(|s| s >= 0 && s * s == -d)
}
