//! The Frobenius automorphism `sigma` of the root datum, its action on the
//! Weyl group, the twisted permutation `pi_w = w ∘ sigma`, and the types of
//! the simple factors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{dot, IntMatrix, Vector};
use crate::rootdata::{LieType, MinusculeCocharacter, RootDatum};
use crate::weyl::{compose_perm, invert_perm, Perm, WeylElement, WeylGroup};

const MAX_SIGMA_ORDER: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Twist {
    #[default]
    None,
    Diagram,
}

/// How `sigma` acts on one factor: rotate the copies (Weil restriction) and
/// optionally apply the diagram automorphism once per full cycle.
///
/// Without rotation the twist, if any, is applied to every copy in place.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigmaSpec {
    pub rotate: bool,
    pub twist: Twist,
}

impl Default for SigmaSpec {
    fn default() -> Self {
        SigmaSpec {
            rotate: true,
            twist: Twist::None,
        }
    }
}

/// A finite-order automorphism of the character lattice preserving the
/// roots. It need not lie in the Weyl group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusDatum {
    pub perm: Perm,
    pub matrix: IntMatrix,
    pub comatrix: IntMatrix,
    pub order: usize,
}

impl FrobeniusDatum {
    pub fn identity(rd: &RootDatum) -> Self {
        let id = WeylElement::identity(rd);
        FrobeniusDatum {
            perm: id.perm,
            matrix: id.matrix,
            comatrix: id.comatrix,
            order: 1,
        }
    }

    /// Validates a raw matrix on `X^*`: it must have finite order, permute
    /// the roots, and its inverse transpose must permute the coroots
    /// compatibly.
    pub fn from_matrix(rd: &RootDatum, matrix: IntMatrix) -> Result<Self> {
        if matrix.dim() != rd.rank() {
            return Err(Error::input(format!(
                "sigma is {}x{}, lattice rank is {}",
                matrix.dim(),
                matrix.dim(),
                rd.rank()
            )));
        }
        let mut perm = Vec::with_capacity(rd.num_roots());
        for i in 0..rd.num_roots() {
            let img = matrix.apply(rd.root(i));
            let j = rd.find(&img).ok_or_else(|| {
                Error::input(format!(
                    "sigma does not preserve the roots: {:?} maps to {img:?}",
                    rd.root(i)
                ))
            })?;
            perm.push(j as u16);
        }
        let order = matrix.order(MAX_SIGMA_ORDER).ok_or_else(|| {
            Error::input(format!("sigma has no finite order up to {MAX_SIGMA_ORDER}"))
        })?;
        let comatrix = matrix.pow(order - 1).transpose();
        for (i, &j) in perm.iter().enumerate() {
            if comatrix.apply(rd.coroot(i)) != rd.coroot(j as usize) {
                return Err(Error::input("sigma does not preserve the coroots"));
            }
        }
        Ok(FrobeniusDatum {
            perm: perm.into_boxed_slice(),
            matrix,
            comatrix,
            order,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    pub fn act_cocharacter(&self, lam: &[i64]) -> Vector {
        self.comatrix.apply(lam)
    }
}

/// Diagram automorphism of one block of coordinates.
fn twist_block(lie_type: LieType, gl: bool, dim: usize) -> Result<IntMatrix> {
    let mut t = IntMatrix::zero(dim);
    match (lie_type, gl) {
        (LieType::A, false) => {
            for i in 0..dim {
                t.set(dim - 1 - i, i, 1);
            }
        }
        (LieType::A, true) => {
            // e_i -> -e_{r+1-i}, which sends alpha_i to alpha_{r-i}
            for i in 0..dim {
                t.set(dim - 1 - i, i, -1);
            }
        }
        (LieType::D, _) => {
            t = IntMatrix::identity(dim);
            t.set(dim - 2, dim - 2, 0);
            t.set(dim - 1, dim - 1, 0);
            t.set(dim - 2, dim - 1, 1);
            t.set(dim - 1, dim - 2, 1);
        }
        (t, _) => {
            return Err(Error::input(format!(
                "type {t} has no diagram automorphism"
            )))
        }
    }
    Ok(t)
}

/// Builds `sigma` from one [`SigmaSpec`] per factor.
pub fn build_sigma(rd: &RootDatum, specs: &[SigmaSpec]) -> Result<FrobeniusDatum> {
    if specs.len() != rd.factors().len() {
        return Err(Error::input(format!(
            "{} sigma specs for {} factors",
            specs.len(),
            rd.factors().len()
        )));
    }
    let mut m = IntMatrix::zero(rd.rank());
    for (f, spec) in rd.factors().iter().zip(specs) {
        let twist = match spec.twist {
            Twist::None => IntMatrix::identity(f.block_dim),
            Twist::Diagram => twist_block(f.lie_type, f.gl, f.block_dim)?,
        };
        let id = IntMatrix::identity(f.block_dim);
        for c in 0..f.copies {
            let (target, block) = if spec.rotate {
                let t = (c + 1) % f.copies;
                (t, if t == 0 { &twist } else { &id })
            } else {
                (c, &twist)
            };
            let src = f.coords(c);
            let dst = f.coords(target);
            for i in 0..f.block_dim {
                for j in 0..f.block_dim {
                    m.set(dst.start + i, src.start + j, block.get(i, j));
                }
            }
        }
    }
    FrobeniusDatum::from_matrix(rd, m)
}

/// `sigma ∘ w ∘ sigma^{-1}` as an index into `group`.
pub fn sigma_on_weyl(group: &WeylGroup, sigma: &FrobeniusDatum, w: usize) -> Result<usize> {
    let inv = invert_perm(&sigma.perm);
    let p = compose_perm(&compose_perm(&sigma.perm, &group.element(w).perm), &inv);
    group
        .find(&p)
        .ok_or_else(|| Error::invariant("conjugate by sigma leaves the Weyl group"))
}

/// `sigma(w)` for every element of `group`, indexed like `group`.
pub fn sigma_table(group: &WeylGroup, sigma: &FrobeniusDatum) -> Result<Vec<usize>> {
    (0..group.len())
        .map(|w| sigma_on_weyl(group, sigma, w))
        .collect()
}

/// The permutation `alpha -> w(sigma(alpha))` of root indices.
pub fn pi_w(w: &WeylElement, sigma: &FrobeniusDatum) -> Perm {
    compose_perm(&w.perm, &sigma.perm)
}

/// The combinatorial data of a Shimura F-crystal: root datum, minuscule
/// cocharacter, Frobenius automorphism, and the prime. The prime only
/// enters point counts.
#[derive(Debug, Clone)]
pub struct Quintuple {
    pub rd: RootDatum,
    pub mu: MinusculeCocharacter,
    pub sigma: FrobeniusDatum,
    pub p: u64,
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

impl Quintuple {
    pub fn new(
        rd: RootDatum,
        mu: MinusculeCocharacter,
        sigma: FrobeniusDatum,
        p: u64,
    ) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::input(format!("p = {p} is not prime")));
        }
        if mu.vector().len() != rd.rank() || sigma.matrix.dim() != rd.rank() {
            return Err(Error::input("quintuple components have mismatched ranks"));
        }
        Ok(Quintuple { rd, mu, sigma, p })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorKind {
    Trivial,
    A(usize),
    B(usize),
    C(usize),
    /// `D_n^H`
    DH(usize),
    /// `D_n^R`
    DR(usize),
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorKind::Trivial => f.write_str("trivial"),
            FactorKind::A(n) => write!(f, "A_{n}"),
            FactorKind::B(n) => write!(f, "B_{n}"),
            FactorKind::C(n) => write!(f, "C_{n}"),
            FactorKind::DH(n) => write!(f, "D_{n}^H"),
            FactorKind::DR(n) => write!(f, "D_{n}^R"),
        }
    }
}

/// Type of one sigma-orbit of copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorType {
    pub factor: usize,
    pub copies: Vec<usize>,
    pub kind: FactorKind,
}

/// Pairings of `lam` with the simple roots of one copy.
fn simple_pairings(rd: &RootDatum, factor: usize, copy: usize, lam: &[i64]) -> Vec<i64> {
    rd.factors()[factor].simple_roots[copy]
        .iter()
        .map(|&a| dot(rd.root(a), lam))
        .collect()
}

/// Pairings with the simple roots of the dominant conjugate of `lam`'s
/// component on one copy.
fn dominant_pairings(rd: &RootDatum, factor: usize, copy: usize, lam: &[i64]) -> Vec<i64> {
    let simple = &rd.factors()[factor].simple_roots[copy];
    let mut lam = lam.to_vec();
    while let Some(&a) = simple.iter().find(|&&a| dot(rd.root(a), &lam) < 0) {
        let k = dot(rd.root(a), &lam);
        for (x, c) in lam.iter_mut().zip(rd.coroot(a)) {
            *x -= k * c;
        }
    }
    simple_pairings(rd, factor, copy, &lam)
}

/// Classifies every sigma-orbit of factor copies.
pub fn simple_factor_types(q: &Quintuple) -> Vec<FactorType> {
    let rd = &q.rd;
    let mut iterates = vec![q.mu.vector().to_vec()];
    for _ in 1..q.sigma.order {
        let next = q.sigma.act_cocharacter(iterates.last().unwrap());
        iterates.push(next);
    }
    let mut out = Vec::new();
    for (fi, f) in rd.factors().iter().enumerate() {
        let mut done = vec![false; f.copies];
        for c0 in 0..f.copies {
            if done[c0] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut c = c0;
            while !done[c] {
                done[c] = true;
                orbit.push(c);
                let a = f.simple_roots[c][0];
                let (_, next) = rd.location(q.sigma.perm[a] as usize);
                c = next;
            }
            orbit.sort_unstable();
            let components: Vec<Vec<i64>> = orbit
                .iter()
                .flat_map(|&c| iterates.iter().map(move |lam| (c, lam)))
                .filter(|(c, lam)| simple_pairings(rd, fi, *c, lam).iter().any(|&x| x != 0))
                .map(|(c, lam)| dominant_pairings(rd, fi, c, lam))
                .collect();
            let n = f.rank;
            let kind = if components.is_empty() {
                FactorKind::Trivial
            } else {
                match f.lie_type {
                    LieType::A => FactorKind::A(n),
                    LieType::B => FactorKind::B(n),
                    LieType::C => FactorKind::C(n),
                    LieType::D => {
                        let mut w1 = vec![0; n];
                        w1[0] = 1;
                        if components.iter().all(|c| *c == w1) {
                            FactorKind::DR(n)
                        } else {
                            FactorKind::DH(n)
                        }
                    }
                }
            };
            out.push(FactorType {
                factor: fi,
                copies: orbit,
                kind,
            });
        }
    }
    out
}
