use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::LatticeError;

type Q = Ratio<i128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

fn to_rational<R: AsRef<[i64]>>(m: &[R]) -> Result<Vec<Vec<Q>>, LatticeError> {
    let n = m.len();
    if m.iter().any(|r| r.as_ref().len() != n) {
        return Err(LatticeError::NotSymmetric);
    }
    for (i, row) in m.iter().enumerate() {
        let row = row.as_ref();
        for j in 0..n {
            if row[j] != m[j].as_ref()[i] {
                return Err(LatticeError::NotSymmetric);
            }
        }
    }
    Ok(m.iter().map(|r| r.as_ref().iter().map(|&x| Q::from_integer(x as i128)).collect()).collect())
}

/// Diagonalizes a symmetric integer matrix by congruence `A ↦ P A Pᵀ` over the
/// rationals, using only row/column additions (so `det P = 1`).
pub fn congruence_diagonal<R: AsRef<[i64]>>(m: &[R]) -> Result<Vec<Ratio<i128>>, LatticeError> {
    let mut a = to_rational(m)?;
    let n = a.len();
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                add_row_col(&mut a, k, j, Q::one());
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // a[k][k] = a[j][j] = 0, so adding row j gives 2 a[k][j] on the diagonal.
                add_row_col(&mut a, k, j, Q::one());
            }
        }
        let p = a[k][k];
        if !p.is_zero() {
            for i in k + 1..n {
                let c = a[i][k] / p;
                if !c.is_zero() {
                    add_row_col(&mut a, i, k, -c);
                }
            }
        }
        diag.push(p);
    }
    Ok(diag)
}

/// Row `dst += c·row src`, then the same on columns.
fn add_row_col(a: &mut [Vec<Q>], dst: usize, src: usize, c: Q) {
    let n = a.len();
    for j in 0..n {
        let v = a[src][j] * c;
        a[dst][j] += v;
    }
    for i in 0..n {
        let v = a[i][src] * c;
        a[i][dst] += v;
    }
}

pub fn determinant<R: AsRef<[i64]>>(m: &[R]) -> Result<i128, LatticeError> {
    let d = congruence_diagonal(m)?;
    let p = d.iter().fold(Q::one(), |acc, x| acc * x);
    debug_assert!(p.is_integer());
    Ok(p.to_integer())
}

pub fn signature<R: AsRef<[i64]>>(m: &[R]) -> Result<Signature, LatticeError> {
    let d = congruence_diagonal(m)?;
    Ok(Signature {
        positive: d.iter().filter(|x| x.is_positive()).count(),
        negative: d.iter().filter(|x| x.is_negative()).count(),
        zero: d.iter().filter(|x| x.is_zero()).count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::{e8_cartan, gram};

    #[test]
    fn hyperbolic_plane() {
        let u = [[0i64, 1], [1, 0]];
        assert_eq!(determinant(&u).unwrap(), -1);
        let s = signature(&u).unwrap();
        assert_eq!((s.positive, s.negative), (1, 1));
    }

    #[test]
    fn cartan_determinant() {
        assert_eq!(determinant(&e8_cartan()).unwrap(), 1);
        assert_eq!(signature(&e8_cartan()).unwrap().positive, 8);
        let a2 = [[2i64, -1], [-1, 2]];
        assert_eq!(determinant(&a2).unwrap(), 3);
    }

    #[test]
    fn enriques_gram() {
        let g = gram();
        assert_eq!(determinant(&g).unwrap(), -1);
        let s = signature(&g).unwrap();
        assert_eq!(s, Signature { positive: 1, negative: 9, zero: 0 });
    }

    #[test]
    fn degenerate_and_asymmetric() {
        let m = [[1i64, 1], [1, 1]];
        assert_eq!(signature(&m).unwrap().zero, 1);
        assert_eq!(determinant(&m).unwrap(), 0);
        let bad = [[1i64, 2], [3, 1]];
        assert_eq!(signature(&bad), Err(LatticeError::NotSymmetric));
    }
}
