//! Finite fields `F_{p^k}` with log/antilog tables.
//!
//! Elements are `u32` codes: the code `Σ d_i p^i` stands for `Σ d_i t^i` in
//! `F_p[t]/(f)`, where `f` is the first primitive polynomial found in code order.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::EcError;

pub type Elem = u32;

#[derive(Debug)]
pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    /// `f = t^k + Σ modulus[i] t^i`.
    modulus: Vec<u32>,
    exp: Vec<Elem>,
    log: Vec<u32>,
}

const MAX_Q: u64 = 1 << 22;

impl Field {
    /// Shared instance of `F_{p^k}`; tables are built once per process.
    pub fn get(p: u32, k: u32) -> Result<Arc<Field>, EcError> {
        static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<Field>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(f) = cache.lock().unwrap().get(&(p, k)) {
            return Ok(f.clone());
        }
        let f = Arc::new(Field::new(p, k)?);
        cache.lock().unwrap().insert((p, k), f.clone());
        Ok(f)
    }

    pub fn new(p: u32, k: u32) -> Result<Field, EcError> {
        let bad = EcError::BadField { p, k };
        if k == 0 || !is_prime(p) || (p as u64).checked_pow(k).is_none_or(|q| q > MAX_Q) {
            return Err(bad);
        }
        let q = p.pow(k);
        for code in 0..q {
            let modulus = digits(code, p, k);
            if modulus[0] == 0 {
                continue;
            }
            if let Some((exp, log)) = tables(p, k, &modulus) {
                return Ok(Field { p, k, q, modulus, exp, log });
            }
        }
        Err(bad)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    /// Image of an integer under `Z → F_p ⊂ F_q`.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p as i64) as Elem
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut w) = (0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * w;
            a /= self.p;
            b /= self.p;
            w *= self.p;
        }
        out
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let (mut out, mut w) = (0, 1);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * w;
            a /= self.p;
            w *= self.p;
        }
        out
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(s % (self.q - 1)) as usize]
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        Some(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * (e % (self.q as u64 - 1));
        self.exp[(l % (self.q as u64 - 1)) as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(n / gcd(n, self.log[a as usize]))
    }

    pub fn is_square(&self, a: Elem) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize] % 2 == 0
    }

    /// Absolute trace to `F_p`, as an element of the prime field.
    pub fn trace(&self, a: Elem) -> Elem {
        let mut t = 0;
        let mut x = a;
        for _ in 0..self.k {
            t = self.add(t, x);
            x = self.pow(x, self.p as u64);
        }
        t
    }

    /// All roots in `F_q` of `Σ coeffs[i] X^i`.
    pub fn roots(&self, coeffs: &[Elem]) -> Vec<Elem> {
        self.elements()
            .filter(|&x| {
                let mut v = 0;
                for &c in coeffs.iter().rev() {
                    v = self.add(self.mul(v, x), c);
                }
                v == 0
            })
            .collect()
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn digits(code: u32, p: u32, k: u32) -> Vec<u32> {
    let mut c = code;
    (0..k)
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

/// Multiplies a residue by `t` modulo `f`.
fn times_t(v: &mut [u32], p: u32, modulus: &[u32]) {
    let k = v.len();
    let top = v[k - 1];
    for i in (1..k).rev() {
        v[i] = v[i - 1];
    }
    v[0] = 0;
    if top != 0 {
        for i in 0..k {
            v[i] = (v[i] + (p - top) * modulus[i]) % p;
        }
    }
}

/// Antilog/log tables if `t` generates `(F_p[t]/f)^*` of order `p^k − 1`.
fn tables(p: u32, k: u32, modulus: &[u32]) -> Option<(Vec<Elem>, Vec<u32>)> {
    let q = p.pow(k);
    let n = q - 1;
    let encode = |v: &[u32]| v.iter().rev().fold(0u32, |acc, &d| acc * p + d);
    let mut exp = Vec::with_capacity(n as usize);
    let mut log = vec![u32::MAX; q as usize];
    let mut v = vec![0u32; k as usize];
    v[0] = 1;
    for i in 0..n {
        let c = encode(&v);
        if log[c as usize] != u32::MAX || c == 0 {
            return None;
        }
        log[c as usize] = i;
        exp.push(c);
        // For k = 1 the residue of t is the constant -f(0).
        if k == 1 {
            v[0] = (v[0] * ((p - modulus[0]) % p)) % p;
        } else {
            times_t(&mut v, p, modulus);
        }
    }
    if encode(&v) != 1 {
        return None;
    }
    Some((exp, log))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields() {
        for (p, k) in [(2, 1), (2, 2), (2, 4), (3, 2), (13, 1), (13, 2), (2, 12), (3, 6)] {
            let f = Field::new(p, k).unwrap();
            let q = f.size();
            for a in (1..q).step_by(((q / 50).max(1)) as usize) {
                let ai = f.inv(a).unwrap();
                assert_eq!(f.mul(a, ai), 1);
                assert_eq!(f.pow(a, (q - 1) as u64), 1);
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
        }
        assert!(Field::new(4, 1).is_err());
    }

    #[test]
    fn distributive_f9() {
        let f = Field::new(3, 2).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                for c in f.elements() {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn cube_roots_of_unity_in_f4() {
        let f = Field::new(2, 2).unwrap();
        let w: Vec<_> = f.roots(&[1, 1, 1]);
        assert_eq!(w.len(), 2);
        assert!(w.iter().all(|&x| f.order(x) == Some(3)));
    }
}
