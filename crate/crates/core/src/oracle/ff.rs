//! Table-driven arithmetic in small finite fields.
//!
//! An element of `F_{p^m}` is stored as the integer `a_0 + a_1 p + ... +
//! a_{m-1} p^{m-1}` where `a_0 + a_1 t + ...` is its representative modulo
//! the fixed irreducible polynomial below. In particular `0` and `1` are the
//! field's zero and one.
//!
//! | field | modulus |
//! |-------|---------|
//! | F_4   | t^2 + t + 1 |
//! | F_8   | t^3 + t + 1 |
//! | F_16  | t^4 + t + 1 |
//! | F_9   | t^2 + 1 |

use crate::error::{Error, Result};

pub type Elem = u8;

/// Largest field order accepted.
pub const MAX_FIELD_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    m: u32,
    q: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    frob: Vec<Elem>,
    frob_inv: Vec<Elem>,
}

/// Low coefficients `c` of the monic modulus `t^m + c_{m-1} t^{m-1} + ... + c_0`.
fn modulus(p: u32, m: u32) -> Option<Vec<u32>> {
    match (p, m) {
        (_, 1) => Some(vec![0]),
        (2, 2) => Some(vec![1, 1]),
        (2, 3) => Some(vec![1, 1, 0]),
        (2, 4) => Some(vec![1, 1, 0, 0]),
        (3, 2) => Some(vec![1, 0]),
        _ => None,
    }
}

impl FiniteField {
    pub fn new(p: u32, m: u32) -> Result<Self> {
        if !crate::frobenius::is_prime(p as u64) || m == 0 {
            return Err(Error::input(format!("no field of order {p}^{m}")));
        }
        let q = (p as usize)
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| {
                Error::LimitExceeded(format!("field order {p}^{m} exceeds {MAX_FIELD_ORDER}"))
            })?;
        let low = modulus(p, m)
            .ok_or_else(|| Error::input(format!("no modulus configured for F_{p}^{m}")))?;
        let m_us = m as usize;
        let decode = |x: usize| -> Vec<u32> {
            let mut v = vec![0; m_us];
            let mut x = x;
            for c in v.iter_mut() {
                *c = (x % p as usize) as u32;
                x /= p as usize;
            }
            v
        };
        let encode = |v: &[u32]| -> Elem {
            v.iter()
                .rev()
                .fold(0usize, |acc, &c| acc * p as usize + c as usize) as Elem
        };
        let poly_mul = |a: &[u32], b: &[u32]| -> Vec<u32> {
            let mut prod = vec![0u32; 2 * m_us];
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            // reduce with t^m = -sum c_i t^i
            for k in (m_us..2 * m_us).rev() {
                let top = prod[k];
                if top == 0 {
                    continue;
                }
                prod[k] = 0;
                for (i, &c) in low.iter().enumerate() {
                    prod[k - m_us + i] = (prod[k - m_us + i] + (p - c % p) * top) % p;
                }
            }
            prod.truncate(m_us);
            prod
        };
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let va = decode(a);
            for b in 0..q {
                let vb = decode(b);
                let s: Vec<u32> = va.iter().zip(&vb).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&s);
                mul[a * q + b] = encode(&poly_mul(&va, &vb));
            }
        }
        let mut neg = vec![0; q];
        let mut inv = vec![0; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as Elem;
            if a != 0 {
                inv[a] = (0..q)
                    .find(|&b| mul[a * q + b] == 1)
                    .ok_or_else(|| Error::invariant(format!("modulus for F_{q} is reducible")))?
                    as Elem;
            }
        }
        let frob: Vec<Elem> = (0..q)
            .map(|a| (1..p).fold(a as Elem, |acc, _| mul[acc as usize * q + a]))
            .collect();
        let mut frob_inv = vec![0; q];
        for (a, &b) in frob.iter().enumerate() {
            frob_inv[b as usize] = a as Elem;
        }
        Ok(FiniteField {
            p,
            m,
            q,
            add,
            mul,
            neg,
            inv,
            frob,
            frob_inv,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q as Elem
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg[b as usize])
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: Elem) -> Elem {
        debug_assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    /// `a^(p^k)`, with negative `k` for inverse Frobenius.
    pub fn frob(&self, a: Elem, k: i32) -> Elem {
        let table = if k >= 0 { &self.frob } else { &self.frob_inv };
        (0..k.unsigned_abs()).fold(a, |x, _| table[x as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for (p, m) in [
            (2, 1),
            (3, 1),
            (2, 2),
            (2, 3),
            (2, 4),
            (3, 2),
            (5, 1),
            (13, 1),
        ] {
            let f = FiniteField::new(p, m).unwrap();
            let q = f.order();
            assert_eq!(q, (p as usize).pow(m));
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                assert_eq!(f.frob(f.frob(a, 1), -1), a);
                assert_eq!(f.frob(a, m as i32), a);
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    // Frobenius is additive
                    assert_eq!(f.frob(f.add(a, b), 1), f.add(f.frob(a, 1), f.frob(b, 1)));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn f4_generator() {
        // t * t = t + 1
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.frob(2, 1), 3);
    }

    #[test]
    fn rejects_large_or_unknown() {
        assert!(matches!(
            FiniteField::new(2, 5),
            Err(Error::LimitExceeded(_))
        ));
        assert!(FiniteField::new(4, 1).is_err());
        assert!(FiniteField::new(17, 1).is_err());
    }
}
