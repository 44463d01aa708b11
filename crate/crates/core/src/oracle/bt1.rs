//! Level-one truncations for split `GL_r` and their final types.

use std::collections::BTreeSet;

use serde::Serialize;

use super::ff::{Elem, FiniteField};
use super::linalg::{FMat, Semilinear, Subspace};
use crate::error::{Error, Result};

/// `(M, F, V)` over `F_q` with `F(x) = g · D · x^(p)` and
/// `V(x) = E · (g^{-1} x)^(1/p)`, where `D = diag(0^d, 1^(r-d))` and
/// `E = diag(1^d, 0^(r-d))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncationTriple {
    pub r: usize,
    pub d: usize,
    pub g: FMat,
    pub f: Semilinear,
    pub v: Semilinear,
}

fn split_diag(r: usize, d: usize, low: Elem) -> FMat {
    FMat::diagonal(
        &(0..r)
            .map(|i| if i < d { low } else { 1 - low })
            .collect::<Vec<_>>(),
    )
}

impl TruncationTriple {
    pub fn new(ff: &FiniteField, r: usize, d: usize, g: FMat) -> Result<Self> {
        if d > r || g.rows() != r || g.cols() != r {
            return Err(Error::input(format!("bad shape for r = {r}, d = {d}")));
        }
        let g_inv = g
            .inverse(ff)
            .ok_or_else(|| Error::input("matrix is not invertible"))?;
        let f = Semilinear {
            matrix: g.mul(ff, &split_diag(r, d, 0)),
            twist: 1,
        };
        // E · (g^{-1} x)^(1/p) = E · sigma^{-1}(g^{-1}) · x^(1/p)
        let v = Semilinear {
            matrix: split_diag(r, d, 1).mul(ff, &g_inv.frob(ff, -1)),
            twist: -1,
        };
        let t = TruncationTriple { r, d, g, f, v };
        let full = Subspace::full(r);
        let ker_f = t.f.kernel(ff);
        if ker_f != t.v.image(ff, &full) || t.f.image(ff, &full) != t.v.kernel(ff) {
            return Err(Error::invariant("Ker F = Im V or Im F = Ker V fails"));
        }
        if ker_f.dim() != d {
            return Err(Error::invariant("dim Ker F differs from d"));
        }
        Ok(t)
    }
}

/// Complete invariant of a truncation: the canonical flag `U_j` with
/// `dim U_j` and `dim F(U_j)` recorded for each member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FinalType {
    pub dims: Vec<usize>,
    pub f_dims: Vec<usize>,
}

impl std::fmt::Display for FinalType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .dims
            .iter()
            .zip(&self.f_dims)
            .map(|(a, b)| format!("{a}:{b}"))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Smallest set of subspaces containing `0` and `M` and closed under
/// `U -> F(U)` and `U -> V^{-1}(U)`, sorted by dimension. It is checked to
/// be a chain.
pub fn canonical_flag(ff: &FiniteField, t: &TruncationTriple) -> Result<Vec<Subspace>> {
    let mut seen: BTreeSet<Subspace> = BTreeSet::new();
    let mut work = vec![Subspace::zero(t.r), Subspace::full(t.r)];
    while let Some(u) = work.pop() {
        if !seen.insert(u.clone()) {
            continue;
        }
        for next in [t.f.image(ff, &u), t.v.preimage(ff, &u)] {
            if !seen.contains(&next) {
                work.push(next);
            }
        }
    }
    let mut flag: Vec<Subspace> = seen.into_iter().collect();
    flag.sort_by_key(Subspace::dim);
    for pair in flag.windows(2) {
        if pair[0].dim() == pair[1].dim() || !pair[1].contains(ff, &pair[0]) {
            return Err(Error::invariant("canonical filtration is not a chain"));
        }
    }
    Ok(flag)
}

pub fn bt1_final_type(ff: &FiniteField, t: &TruncationTriple) -> Result<FinalType> {
    let flag = canonical_flag(ff, t)?;
    Ok(FinalType {
        dims: flag.iter().map(Subspace::dim).collect(),
        f_dims: flag.iter().map(|u| t.f.image(ff, u).dim()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(ff: &FiniteField, d: usize, rows: &[Vec<Elem>]) -> TruncationTriple {
        TruncationTriple::new(ff, rows.len(), d, FMat::from_rows(rows)).unwrap()
    }

    #[test]
    fn ordinary_and_supersingular() {
        let f = FiniteField::new(2, 1).unwrap();
        let ord = triple(&f, 1, &[vec![1, 0], vec![0, 1]]);
        // F(e_2) spans an F-stable line
        let im = ord.f.image(&f, &Subspace::full(2));
        assert_eq!(ord.f.image(&f, &im), im);
        let ss = triple(&f, 1, &[vec![0, 1], vec![1, 0]]);
        let im = ss.f.image(&f, &Subspace::full(2));
        assert_eq!(ss.f.image(&f, &im).dim(), 0);
        let t_ord = bt1_final_type(&f, &ord).unwrap();
        let t_ss = bt1_final_type(&f, &ss).unwrap();
        assert_ne!(t_ord, t_ss);
        assert_eq!(t_ord.dims, vec![0, 1, 2]);
    }

    #[test]
    fn etale_case_has_one_type() {
        let f = FiniteField::new(3, 1).unwrap();
        let a = triple(&f, 0, &[vec![1, 0], vec![0, 1]]);
        let b = triple(&f, 0, &[vec![1, 2], vec![1, 1]]);
        assert_eq!(
            bt1_final_type(&f, &a).unwrap(),
            bt1_final_type(&f, &b).unwrap()
        );
        assert_eq!(bt1_final_type(&f, &a).unwrap().dims, vec![0, 2]);
    }

    #[test]
    fn rejects_singular() {
        let f = FiniteField::new(2, 1).unwrap();
        let g = FMat::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert!(TruncationTriple::new(&f, 2, 1, g).is_err());
    }
}
