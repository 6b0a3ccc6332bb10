use serde::{Deserialize, Serialize};

use crate::{FiberError, FiberTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub id: u32,
    pub mult: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub component: u32,
    pub count: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    pub id: u32,
    pub branches: Vec<Branch>,
    pub local_mult: u32,
}

impl SingularPoint {
    pub fn total_branches(&self) -> u32 {
        self.branches.iter().map(|b| b.count).sum()
    }

    pub fn count_on(&self, component: u32) -> u32 {
        self.branches.iter().filter(|b| b.component == component).map(|b| b.count).sum()
    }
}

/// A singular fiber: rational components with multiplicities and the singular
/// points of the reduced curve with their branches.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberModel {
    pub components: Vec<Component>,
    pub points: Vec<SingularPoint>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FiberKind {
    Additive,
    Multiplicative,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub tag: FiberTag,
    pub model: FiberModel,
    pub m: usize,
    pub euler_tame: i64,
    pub kind: FiberKind,
}

impl FiberModel {
    pub fn is_reducible(&self) -> bool {
        self.components.len() > 1
    }

    pub fn index_of(&self, id: u32) -> Option<usize> {
        self.components.iter().position(|c| c.id == id)
    }

    pub fn multiplicities(&self) -> Vec<u32> {
        self.components.iter().map(|c| c.mult).collect()
    }

    /// `C_i·C_j`: `-2` on the diagonal of reducible models, `0` for an
    /// irreducible fiber, and otherwise the branch counts at shared points
    /// weighted by the local intersection multiplicity.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.components.len();
        let mut g = vec![vec![0i64; n]; n];
        if n > 1 {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = -2;
            }
        }
        for p in &self.points {
            for (x, bx) in p.branches.iter().enumerate() {
                for by in &p.branches[x + 1..] {
                    if bx.component == by.component {
                        continue;
                    }
                    let (Some(i), Some(j)) = (self.index_of(bx.component), self.index_of(by.component)) else {
                        continue;
                    };
                    let v = (bx.count * by.count * p.local_mult) as i64;
                    g[i][j] += v;
                    g[j][i] += v;
                }
            }
        }
        g
    }

    /// Checks ids, branch references, and for reducible models the fiber
    /// condition `F·C_i = 0`.
    pub fn validate(&self) -> Result<(), FiberError> {
        let bad = |s: String| Err(FiberError::Malformed(s));
        if self.components.is_empty() {
            return bad("no components".into());
        }
        for (i, c) in self.components.iter().enumerate() {
            if c.mult == 0 {
                return bad(format!("component {} has multiplicity 0", c.id));
            }
            if self.components[..i].iter().any(|d| d.id == c.id) {
                return bad(format!("duplicate component id {}", c.id));
            }
        }
        for (i, p) in self.points.iter().enumerate() {
            if self.points[..i].iter().any(|q| q.id == p.id) {
                return bad(format!("duplicate point id {}", p.id));
            }
            if p.branches.is_empty() || p.local_mult == 0 {
                return bad(format!("point {} has no branches", p.id));
            }
            for b in &p.branches {
                if b.count == 0 || self.index_of(b.component).is_none() {
                    return bad(format!("point {} has a bad branch", p.id));
                }
            }
        }
        if self.is_reducible() {
            let g = self.intersection_matrix();
            let m = self.multiplicities();
            for (i, row) in g.iter().enumerate() {
                let fc: i64 = row.iter().zip(&m).map(|(x, &k)| x * k as i64).sum();
                if fc != 0 {
                    return bad(format!("F·C{} = {fc}", self.components[i].id));
                }
            }
        }
        Ok(())
    }
}

/// `2·#components − Σ_p (branches(p) − 1)`.
pub fn euler(model: &FiberModel) -> i64 {
    let c = model.components.len() as i64;
    let s: i64 = model.points.iter().map(|p| p.total_branches() as i64 - 1).sum();
    2 * c - s
}

/// Minimum of `D1·D2` over all splittings `F = D1 + D2` into nonzero effective
/// divisors supported on the components.
pub fn two_connected_min(model: &FiberModel) -> Result<i64, FiberError> {
    if !model.is_reducible() {
        return Err(FiberError::Irreducible);
    }
    let g = model.intersection_matrix();
    let m: Vec<i64> = model.multiplicities().iter().map(|&x| x as i64).collect();
    let n = m.len();
    let mut a = vec![0i64; n];
    let mut best = i64::MAX;
    loop {
        // Odometer increment over 0..=m_i.
        let mut i = 0;
        while i < n && a[i] == m[i] {
            a[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        a[i] += 1;
        if a == m {
            continue;
        }
        let mut v = 0;
        for x in 0..n {
            if a[x] == 0 {
                continue;
            }
            for y in 0..n {
                v += a[x] * g[x][y] * (m[y] - a[y]);
            }
        }
        best = best.min(v);
    }
    Ok(best)
}

struct Builder {
    components: Vec<Component>,
    points: Vec<SingularPoint>,
}

impl Builder {
    fn new(mults: &[u32]) -> Self {
        let components = mults.iter().enumerate().map(|(i, &m)| Component { id: i as u32, mult: m }).collect();
        Builder { components, points: Vec::new() }
    }

    fn point(&mut self, branches: &[(u32, u32)], local_mult: u32) -> &mut Self {
        let id = self.points.len() as u32;
        let branches = branches.iter().map(|&(component, count)| Branch { component, count }).collect();
        self.points.push(SingularPoint { id, branches, local_mult });
        self
    }

    fn edges(&mut self, edges: &[(u32, u32)]) -> &mut Self {
        for &(a, b) in edges {
            self.point(&[(a, 1), (b, 1)], 1);
        }
        self
    }

    fn build(&mut self) -> FiberModel {
        FiberModel { components: std::mem::take(&mut self.components), points: std::mem::take(&mut self.points) }
    }
}

fn model_for(tag: FiberTag) -> Result<FiberModel, FiberError> {
    let m = match tag.validate()? {
        FiberTag::Smooth => return Err(FiberError::Smooth),
        FiberTag::A0s => Builder::new(&[1]).point(&[(0, 2)], 1).build(),
        FiberTag::A(k) => {
            let n = k + 1;
            let mut b = Builder::new(&vec![1; n as usize]);
            for i in 0..n {
                let (x, y) = (i, (i + 1) % n);
                b.point(&[(x.min(y), 1), (x.max(y), 1)], 1);
            }
            b.build()
        }
        FiberTag::D(k) => {
            // Tails 0, 1 on chain start; chain 2..=2+n of multiplicity 2; tails at the end.
            let n = k - 4;
            let mut mults = vec![1, 1];
            mults.extend(std::iter::repeat_n(2, n as usize + 1));
            mults.extend([1, 1]);
            let first = 2;
            let last = 2 + n;
            let (t2, t3) = (last + 1, last + 2);
            let mut b = Builder::new(&mults);
            b.edges(&[(0, first), (1, first)]);
            for c in first..last {
                b.edges(&[(c, c + 1)]);
            }
            b.edges(&[(last, t2), (last, t3)]);
            b.build()
        }
        FiberTag::A0ss => Builder::new(&[1]).point(&[(0, 1)], 1).build(),
        FiberTag::A1s => Builder::new(&[1, 1]).point(&[(0, 1), (1, 1)], 2).build(),
        FiberTag::A2s => Builder::new(&[1, 1, 1]).point(&[(0, 1), (1, 1), (2, 1)], 1).build(),
        // Centre 0 with three arms (1, 2), (3, 4), (5, 6).
        FiberTag::E6t => {
            Builder::new(&[3, 2, 1, 2, 1, 2, 1]).edges(&[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).build()
        }
        // Chain 0..=6 with 7 attached to the centre 3.
        FiberTag::E7t => Builder::new(&[1, 2, 3, 4, 3, 2, 1, 2])
            .edges(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)])
            .build(),
        // Chain 0..=7 with 8 attached to the multiplicity-6 component 5.
        FiberTag::E8t => Builder::new(&[1, 2, 3, 4, 5, 6, 4, 2, 3])
            .edges(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)])
            .build(),
    };
    m.validate()?;
    Ok(m)
}

pub fn catalog(tag: FiberTag) -> Result<CatalogEntry, FiberError> {
    let model = model_for(tag)?;
    let kind = if tag.is_multiplicative() { FiberKind::Multiplicative } else { FiberKind::Additive };
    Ok(CatalogEntry { tag, m: model.components.len(), euler_tame: euler(&model), model, kind })
}
