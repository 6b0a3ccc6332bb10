use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::LatticeError;

pub const RANK: usize = 10;

/// Coordinates in the basis `(e, f, v1..v8)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector10(pub [i64; RANK]);

impl Vector10 {
    pub const ZERO: Vector10 = Vector10([0; RANK]);

    /// The `i`-th basis vector: 0 is `e`, 1 is `f`, `k + 1` is `v_k`.
    pub fn basis(i: usize) -> Vector10 {
        let mut c = [0; RANK];
        c[i] = 1;
        Vector10(c)
    }

    pub fn e() -> Vector10 {
        Self::basis(0)
    }

    pub fn f() -> Vector10 {
        Self::basis(1)
    }

    /// The simple root `v_k` of `E8`, `k` in `1..=8`.
    pub fn v(k: usize) -> Vector10 {
        assert!((1..=8).contains(&k), "E8 root index out of range");
        Self::basis(k + 1)
    }

    pub fn from_parts(a: i64, b: i64, v: [i64; 8]) -> Vector10 {
        let mut c = [0; RANK];
        c[0] = a;
        c[1] = b;
        c[2..].copy_from_slice(&v);
        Vector10(c)
    }

    pub fn coords(&self) -> &[i64; RANK] {
        &self.0
    }

    pub fn square(&self) -> i64 {
        inner(self, self)
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for Vector10 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Add for Vector10 {
    type Output = Vector10;
    fn add(self, o: Vector10) -> Vector10 {
        let mut c = self.0;
        for (x, y) in c.iter_mut().zip(o.0) {
            *x += y;
        }
        Vector10(c)
    }
}

impl Sub for Vector10 {
    type Output = Vector10;
    fn sub(self, o: Vector10) -> Vector10 {
        self + (-o)
    }
}

impl Neg for Vector10 {
    type Output = Vector10;
    fn neg(self) -> Vector10 {
        Vector10(self.0.map(|x| -x))
    }
}

impl Mul<Vector10> for i64 {
    type Output = Vector10;
    fn mul(self, v: Vector10) -> Vector10 {
        Vector10(v.0.map(|x| self * x))
    }
}

/// Bourbaki numbering: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
const E8_EDGES: [(usize, usize); 7] = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)];

/// Positive definite Cartan matrix of `E8`, indices `0..8` for nodes `1..=8`.
pub fn e8_cartan() -> [[i64; 8]; 8] {
    let mut c = [[0; 8]; 8];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in E8_EDGES {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    }
    c
}

/// Gram matrix of `U ⊕ E8(-1)`.
pub fn gram() -> [[i64; RANK]; RANK] {
    let mut g = [[0; RANK]; RANK];
    g[0][1] = 1;
    g[1][0] = 1;
    let c = e8_cartan();
    for i in 0..8 {
        for j in 0..8 {
            g[i + 2][j + 2] = -c[i][j];
        }
    }
    g
}

pub fn inner(u: &Vector10, v: &Vector10) -> i64 {
    let (a, b) = (&u.0, &v.0);
    let mut s = a[0] * b[1] + a[1] * b[0];
    for i in 0..8 {
        let ai = a[i + 2];
        if ai == 0 {
            continue;
        }
        s -= 2 * ai * b[i + 2];
    }
    for (x, y) in E8_EDGES {
        let (x, y) = (x + 1, y + 1);
        s += a[x] * b[y] + a[y] * b[x];
    }
    s
}

/// Reflection `x ↦ x + (x·r) r` in a `(-2)`-vector `r`.
pub fn reflect(r: &Vector10, x: &Vector10) -> Result<Vector10, LatticeError> {
    let rr = r.square();
    if rr != -2 {
        return Err(LatticeError::NotARoot(rr));
    }
    Ok(*x + inner(x, r) * *r)
}

/// True iff every vector is isotropic and distinct members pair to 1.
pub fn validate_sequence(seq: &[Vector10]) -> bool {
    seq.iter().enumerate().all(|(i, u)| u.square() == 0 && seq[i + 1..].iter().all(|v| inner(u, v) == 1))
}
