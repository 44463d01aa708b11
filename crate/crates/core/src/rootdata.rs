//! Root data of classical type, Weil-restriction copies, and the
//! three-way split of the roots induced by a minuscule cocharacter.
//!
//! Lattice models. For types A, B, C and D every copy is realized in the
//! adjoint lattice: the character lattice has the simple roots as basis and
//! the cocharacter lattice has the dual basis of fundamental coweights. All
//! minuscule coweights are then integral unit vectors and pairings are plain
//! dot products. A type A factor flagged `gl` is instead realized as `GL_r`
//! in `Z^r` with roots `e_i - e_j`, so the central direction is kept.
//!
//! Root order within a copy is by (height, lexicographic coordinates), so the
//! negative roots come first. Copies of a factor occupy consecutive
//! coordinate blocks and consecutive root ranges.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{dot, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieType::A => "A",
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
        };
        f.write_str(s)
    }
}

impl LieType {
    pub fn parse(s: &str) -> Option<LieType> {
        match s {
            "A" | "a" => Some(LieType::A),
            "B" | "b" => Some(LieType::B),
            "C" | "c" => Some(LieType::C),
            "D" | "d" => Some(LieType::D),
            _ => None,
        }
    }

    /// Number of roots of the irreducible system of this type and rank.
    pub fn root_count(self, n: usize) -> usize {
        match self {
            LieType::A => n * (n + 1),
            LieType::B | LieType::C => 2 * n * n,
            LieType::D => 2 * n * (n - 1),
        }
    }

    /// Order of the Weyl group, saturating on overflow.
    pub fn weyl_order(self, n: usize) -> u128 {
        let fact = |k: usize| (1..=k as u128).fold(1u128, |a, b| a.saturating_mul(b));
        match self {
            LieType::A => fact(n + 1),
            LieType::B | LieType::C => (1u128 << n.min(100)).saturating_mul(fact(n)),
            LieType::D => (1u128 << (n - 1).min(100)).saturating_mul(fact(n)),
        }
    }

    /// `<alpha_i, alpha_j^vee>` for Bourbaki-numbered simple roots, 0-based.
    fn cartan(self, n: usize, i: usize, j: usize) -> i64 {
        if i == j {
            return 2;
        }
        let adjacent_chain = i.abs_diff(j) == 1;
        match self {
            LieType::A => {
                if adjacent_chain {
                    -1
                } else {
                    0
                }
            }
            LieType::B | LieType::C => {
                if !adjacent_chain {
                    return 0;
                }
                // the double bond sits between nodes n-1 and n
                let double = i.max(j) == n - 1;
                if !double {
                    return -1;
                }
                let long_to_short = (self == LieType::B) == (i == n - 2);
                if long_to_short {
                    -2
                } else {
                    -1
                }
            }
            LieType::D => {
                let (lo, hi) = (i.min(j), i.max(j));
                // a chain 0..n-2 with node n-1 forked off node n-3
                if (hi <= n - 2 && hi - lo == 1) || (hi == n - 1 && lo == n - 3) {
                    -1
                } else {
                    0
                }
            }
        }
    }
}

/// One simple factor as requested by the caller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    pub lie_type: LieType,
    pub rank: usize,
    pub copies: usize,
    /// Realize a type A factor as `GL_{rank+1}` with its central line.
    #[serde(default)]
    pub gl: bool,
}

impl FactorSpec {
    pub fn new(lie_type: LieType, rank: usize, copies: usize) -> Self {
        FactorSpec {
            lie_type,
            rank,
            copies,
            gl: false,
        }
    }

    pub fn gl(r: usize) -> Self {
        FactorSpec {
            lie_type: LieType::A,
            rank: r - 1,
            copies: 1,
            gl: true,
        }
    }
}

/// A factor as laid out inside a [`RootDatum`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub lie_type: LieType,
    pub rank: usize,
    pub copies: usize,
    pub gl: bool,
    /// Lattice coordinates per copy.
    pub block_dim: usize,
    /// First lattice coordinate of copy 0.
    pub offset: usize,
    /// Root index range of each copy.
    pub root_ranges: Vec<Range<usize>>,
    /// Simple root indices of each copy, Bourbaki numbering.
    pub simple_roots: Vec<Vec<usize>>,
}

impl Factor {
    pub fn coords(&self, copy: usize) -> Range<usize> {
        let start = self.offset + copy * self.block_dim;
        start..start + self.block_dim
    }
}

#[derive(Debug, Clone)]
pub struct RootDatum {
    rank: usize,
    roots: Vec<Vector>,
    coroots: Vec<Vector>,
    heights: Vec<i64>,
    negation: Vec<usize>,
    /// (factor, copy) of every root.
    location: Vec<(usize, usize)>,
    factors: Vec<Factor>,
    index: HashMap<Vector, usize>,
}

struct Block {
    dim: usize,
    simple: Vec<Vector>,
    simple_co: Vec<Vector>,
    rho_co: Vector,
}

fn block(spec: &FactorSpec) -> Block {
    let n = spec.rank;
    if spec.gl {
        let r = n + 1;
        let unit_diff = |i: usize| {
            let mut v = vec![0; r];
            v[i] = 1;
            v[i + 1] = -1;
            v
        };
        let simple: Vec<Vector> = (0..n).map(unit_diff).collect();
        return Block {
            dim: r,
            simple_co: simple.clone(),
            simple,
            rho_co: (0..r).map(|k| (r - 1 - k) as i64).collect(),
        };
    }
    let t = spec.lie_type;
    let simple = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let simple_co = (0..n)
        .map(|j| (0..n).map(|i| t.cartan(n, i, j)).collect())
        .collect();
    Block {
        dim: n,
        simple,
        simple_co,
        rho_co: vec![1; n],
    }
}

/// Closure of the simple roots under simple reflections, carrying coroots.
fn close_roots(b: &Block) -> Vec<(Vector, Vector)> {
    let mut seen: HashMap<Vector, Vector> = HashMap::new();
    let mut queue = VecDeque::new();
    for (a, c) in b.simple.iter().zip(&b.simple_co) {
        seen.insert(a.clone(), c.clone());
        queue.push_back(a.clone());
    }
    while let Some(beta) = queue.pop_front() {
        let beta_co = seen[&beta].clone();
        for (a, a_co) in b.simple.iter().zip(&b.simple_co) {
            let k = dot(&beta, a_co);
            let l = dot(a, &beta_co);
            let img: Vector = beta.iter().zip(a).map(|(x, y)| x - k * y).collect();
            if seen.contains_key(&img) {
                continue;
            }
            let img_co: Vector = beta_co.iter().zip(a_co).map(|(x, y)| x - l * y).collect();
            seen.insert(img.clone(), img_co);
            queue.push_back(img);
        }
    }
    seen.into_iter().collect()
}

/// Builds the root datum of a product of classical factors.
pub fn build_root_datum(specs: &[FactorSpec]) -> Result<RootDatum> {
    if specs.is_empty() {
        return Err(Error::input("at least one factor is required"));
    }
    for (i, s) in specs.iter().enumerate() {
        if s.rank == 0 {
            return Err(Error::input(format!("factor {i}: rank must be at least 1")));
        }
        if s.copies == 0 {
            return Err(Error::input(format!(
                "factor {i}: copies must be at least 1"
            )));
        }
        if s.lie_type == LieType::D && s.rank < 4 {
            return Err(Error::input(format!(
                "factor {i}: type D requires rank at least 4, got {}",
                s.rank
            )));
        }
        if s.gl && s.lie_type != LieType::A {
            return Err(Error::input(format!(
                "factor {i}: the GL realization exists only for type A"
            )));
        }
    }

    let mut rank = 0;
    let mut factors = Vec::new();
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut heights = Vec::new();
    let mut location = Vec::new();
    let mut pending: Vec<(Vector, Vector, usize)> = Vec::new();

    for s in specs {
        let b = block(s);
        let mut local: Vec<(i64, Vector, Vector)> = close_roots(&b)
            .into_iter()
            .map(|(r, c)| (dot(&r, &b.rho_co), r, c))
            .collect();
        local.sort();
        if local.len() != s.lie_type.root_count(s.rank) {
            return Err(Error::invariant(format!(
                "{}{} produced {} roots",
                s.lie_type,
                s.rank,
                local.len()
            )));
        }
        let simple_local: Vec<usize> = b
            .simple
            .iter()
            .map(|a| local.iter().position(|(_, r, _)| r == a).unwrap())
            .collect();
        let offset = rank;
        let mut root_ranges = Vec::new();
        let mut simple_roots = Vec::new();
        for c in 0..s.copies {
            let start = roots.len() + pending.len();
            let shift = offset + c * b.dim;
            for (h, r, co) in &local {
                pending.push((r.clone(), co.clone(), shift));
                heights.push(*h);
                location.push((factors.len(), c));
            }
            root_ranges.push(start..start + local.len());
            simple_roots.push(simple_local.iter().map(|k| start + k).collect());
        }
        rank += s.copies * b.dim;
        factors.push(Factor {
            lie_type: s.lie_type,
            rank: s.rank,
            copies: s.copies,
            gl: s.gl,
            block_dim: b.dim,
            offset,
            root_ranges,
            simple_roots,
        });
    }
    for (r, co, shift) in pending {
        let mut v = vec![0; rank];
        let mut w = vec![0; rank];
        v[shift..shift + r.len()].copy_from_slice(&r);
        w[shift..shift + co.len()].copy_from_slice(&co);
        roots.push(v);
        coroots.push(w);
    }
    let index: HashMap<Vector, usize> = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.clone(), i))
        .collect();
    let negation = roots
        .iter()
        .map(|r| {
            let neg: Vector = r.iter().map(|x| -x).collect();
            index[&neg]
        })
        .collect();
    let rd = RootDatum {
        rank,
        roots,
        coroots,
        heights,
        negation,
        location,
        factors,
        index,
    };
    rd.validate()?;
    Ok(rd)
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn negate(&self, i: usize) -> usize {
        self.negation[i]
    }

    /// Height with respect to the standard (Bourbaki) positive system.
    pub fn height(&self, i: usize) -> i64 {
        self.heights[i]
    }

    pub fn is_standard_positive(&self, i: usize) -> bool {
        self.heights[i] > 0
    }

    /// (factor, copy) containing root `i`.
    pub fn location(&self, i: usize) -> (usize, usize) {
        self.location[i]
    }

    pub fn find(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Index of `alpha + beta` when it is a root.
    pub fn add(&self, a: usize, b: usize) -> Option<usize> {
        let sum: Vector = self.roots[a]
            .iter()
            .zip(&self.roots[b])
            .map(|(x, y)| x + y)
            .collect();
        self.find(&sum)
    }

    /// Index of `s_a(b)`.
    pub fn reflect(&self, a: usize, b: usize) -> usize {
        let k = dot(&self.roots[b], &self.coroots[a]);
        let img: Vector = self.roots[b]
            .iter()
            .zip(&self.roots[a])
            .map(|(x, y)| x - k * y)
            .collect();
        self.index[&img]
    }

    /// All simple roots of the standard positive system, copies in order.
    pub fn all_simple_roots(&self) -> Vec<usize> {
        self.factors
            .iter()
            .flat_map(|f| f.simple_roots.iter().flatten().copied())
            .collect()
    }

    /// Semisimple rank, i.e. the number of simple roots.
    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank * f.copies).sum()
    }

    /// Product of the Weyl group orders of all copies.
    pub fn weyl_order(&self) -> u128 {
        self.factors.iter().fold(1u128, |acc, f| {
            (0..f.copies).fold(acc, |a, _| a.saturating_mul(f.lie_type.weyl_order(f.rank)))
        })
    }

    /// Checks the root datum axioms this crate relies on.
    pub fn validate(&self) -> Result<()> {
        let n = self.num_roots();
        for i in 0..n {
            if self.negation[self.negation[i]] != i || self.negation[i] == i {
                return Err(Error::invariant(
                    "negation is not a fixed-point-free involution",
                ));
            }
            if dot(&self.roots[i], &self.coroots[i]) != 2 {
                return Err(Error::invariant(format!("<a, a^v> != 2 for root {i}")));
            }
        }
        for a in 0..n {
            let mut hit = vec![false; n];
            for b in 0..n {
                let k = dot(&self.roots[b], &self.coroots[a]);
                let img: Vector = self.roots[b]
                    .iter()
                    .zip(&self.roots[a])
                    .map(|(x, y)| x - k * y)
                    .collect();
                match self.find(&img) {
                    Some(j) if !hit[j] => hit[j] = true,
                    _ => {
                        return Err(Error::invariant(format!(
                            "reflection in root {a} does not permute the roots"
                        )))
                    }
                }
                if self.location[a] != self.location[b]
                    && dot(&self.roots[b], &self.coroots[a]) != 0
                {
                    return Err(Error::invariant(format!(
                        "roots {a} and {b} of distinct copies are not orthogonal"
                    )));
                }
            }
        }
        for f in &self.factors {
            for r in &f.root_ranges {
                if r.len() != f.lie_type.root_count(f.rank) {
                    return Err(Error::invariant("root count does not match the Lie type"));
                }
            }
        }
        Ok(())
    }

    /// Fundamental coweight `varpi_node^vee` (1-based node) of one copy.
    ///
    /// For a `gl` factor this is the cocharacter `(1^node, 0^(r-node))`.
    pub fn fundamental_coweight(&self, factor: usize, copy: usize, node: usize) -> Result<Vector> {
        let f = self
            .factors
            .get(factor)
            .ok_or_else(|| Error::input(format!("no factor {factor}")))?;
        if copy >= f.copies {
            return Err(Error::input(format!("factor {factor} has no copy {copy}")));
        }
        if node == 0 || node > f.rank {
            return Err(Error::input(format!(
                "node {node} out of range 1..={} for {}{}",
                f.rank, f.lie_type, f.rank
            )));
        }
        let mut v = vec![0; self.rank];
        let c = f.coords(copy);
        if f.gl {
            for k in 0..node {
                v[c.start + k] = 1;
            }
        } else {
            v[c.start + node - 1] = 1;
        }
        Ok(v)
    }
}

/// Standard pairing between `X^*` and `X_*`.
pub fn pairing(chi: &[i64], lam: &[i64]) -> Result<i64> {
    if chi.len() != lam.len() {
        return Err(Error::input(format!(
            "pairing of vectors of lengths {} and {}",
            chi.len(),
            lam.len()
        )));
    }
    Ok(dot(chi, lam))
}

/// A cocharacter whose pairing with every root lies in `{-1, 0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinusculeCocharacter(Vector);

impl MinusculeCocharacter {
    pub fn new(rd: &RootDatum, mu: Vector) -> Result<Self> {
        if mu.len() != rd.rank() {
            return Err(Error::input(format!(
                "cocharacter has length {}, lattice rank is {}",
                mu.len(),
                rd.rank()
            )));
        }
        for (i, a) in rd.roots().iter().enumerate() {
            let k = dot(a, &mu);
            if !(-1..=1).contains(&k) {
                return Err(Error::input(format!(
                    "cocharacter {mu:?} is not minuscule: pairing {k} with root {i} {a:?}"
                )));
            }
        }
        Ok(MinusculeCocharacter(mu))
    }

    pub fn trivial(rd: &RootDatum) -> Self {
        MinusculeCocharacter(vec![0; rd.rank()])
    }

    pub fn vector(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

/// The function `epsilon` and the sets `Phi_N`, `Phi_L`, `Phi_U`.
///
/// `epsilon(alpha) = -<alpha, mu>`; roots with value `-1` form `Phi_N`, value
/// `0` form `Phi_L` and value `+1` form `Phi_U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonPartition {
    pub epsilon: Vec<i8>,
    pub phi_n: Vec<usize>,
    pub phi_l: Vec<usize>,
    pub phi_u: Vec<usize>,
    rank: usize,
}

impl EpsilonPartition {
    pub fn eps(&self, i: usize) -> i8 {
        self.epsilon[i]
    }

    pub fn in_n(&self, i: usize) -> bool {
        self.epsilon[i] == -1
    }

    pub fn in_l(&self, i: usize) -> bool {
        self.epsilon[i] == 0
    }

    pub fn in_u(&self, i: usize) -> bool {
        self.epsilon[i] == 1
    }

    /// `Phi_P = Phi_L u Phi_U`.
    pub fn phi_p(&self) -> Vec<usize> {
        (0..self.epsilon.len())
            .filter(|&i| self.epsilon[i] >= 0)
            .collect()
    }

    /// `Phi_Q = Phi_L u Phi_N`.
    pub fn phi_q(&self) -> Vec<usize> {
        (0..self.epsilon.len())
            .filter(|&i| self.epsilon[i] <= 0)
            .collect()
    }

    pub fn dim_n(&self) -> usize {
        self.phi_n.len()
    }

    pub fn dim_p(&self) -> usize {
        self.rank + self.phi_l.len() + self.phi_u.len()
    }

    pub fn dim_g(&self) -> usize {
        self.rank + self.epsilon.len()
    }
}

pub fn epsilon_partition(rd: &RootDatum, mu: &MinusculeCocharacter) -> Result<EpsilonPartition> {
    let mut epsilon = Vec::with_capacity(rd.num_roots());
    let (mut phi_n, mut phi_l, mut phi_u) = (Vec::new(), Vec::new(), Vec::new());
    for (i, a) in rd.roots().iter().enumerate() {
        let k = pairing(a, mu.vector())?;
        let e = match k {
            1 => {
                phi_n.push(i);
                -1
            }
            0 => {
                phi_l.push(i);
                0
            }
            -1 => {
                phi_u.push(i);
                1
            }
            _ => {
                return Err(Error::input(format!(
                    "cocharacter is not minuscule: pairing {k} with root {i}"
                )))
            }
        };
        epsilon.push(e);
    }
    Ok(EpsilonPartition {
        epsilon,
        phi_n,
        phi_l,
        phi_u,
        rank: rd.rank(),
    })
}

/// Whether `set` is closed: `alpha, beta in set` and `alpha + beta` a root
/// imply `alpha + beta in set`.
pub fn is_closed_subset(rd: &RootDatum, set: &[usize]) -> bool {
    let mut member = vec![false; rd.num_roots()];
    for &i in set {
        member[i] = true;
    }
    set.iter()
        .all(|&a| set.iter().all(|&b| rd.add(a, b).is_none_or(|c| member[c])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rd(t: LieType, n: usize, copies: usize) -> RootDatum {
        build_root_datum(&[FactorSpec::new(t, n, copies)]).unwrap()
    }

    #[test]
    fn a1_has_two_roots() {
        let r = rd(LieType::A, 1, 1);
        assert_eq!(r.num_roots(), 2);
        assert_eq!(r.rank(), 1);
        assert_eq!(r.root(0), &[-1]);
        assert_eq!(r.root(1), &[1]);
        assert_eq!(pairing(r.root(1), r.coroot(1)).unwrap(), 2);
    }

    #[test]
    fn b4_counts() {
        let r = rd(LieType::B, 4, 1);
        assert_eq!(r.num_roots(), 32);
        assert_eq!(r.rank(), 4);
        assert_eq!((0..32).filter(|&i| r.is_standard_positive(i)).count(), 16);
    }

    #[test]
    fn a2_two_copies_are_orthogonal() {
        let r = rd(LieType::A, 2, 2);
        assert_eq!(r.num_roots(), 12);
        assert_eq!(r.rank(), 4);
        for a in 0..6 {
            for b in 6..12 {
                assert_eq!(pairing(r.root(a), r.coroot(b)).unwrap(), 0);
                assert_eq!(pairing(r.root(b), r.coroot(a)).unwrap(), 0);
            }
        }
        assert_eq!(r.factors()[0].coords(1), 2..4);
    }

    #[test]
    fn classical_root_counts() {
        for n in 1..=5 {
            assert_eq!(rd(LieType::A, n, 1).num_roots(), n * (n + 1));
            assert_eq!(rd(LieType::B, n, 1).num_roots(), 2 * n * n);
            assert_eq!(rd(LieType::C, n, 1).num_roots(), 2 * n * n);
        }
        for n in 4..=6 {
            assert_eq!(rd(LieType::D, n, 1).num_roots(), 2 * n * (n - 1));
        }
    }

    #[test]
    fn rejects_bad_factors() {
        assert!(build_root_datum(&[FactorSpec::new(LieType::D, 3, 1)]).is_err());
        assert!(build_root_datum(&[FactorSpec::new(LieType::A, 0, 1)]).is_err());
        assert!(build_root_datum(&[FactorSpec::new(LieType::B, 2, 0)]).is_err());
        assert!(build_root_datum(&[]).is_err());
        let mut s = FactorSpec::new(LieType::C, 2, 1);
        s.gl = true;
        assert!(build_root_datum(&[s]).is_err());
    }

    #[test]
    fn pairing_examples() {
        let r = rd(LieType::B, 4, 1);
        let mu = r.fundamental_coweight(0, 0, 1).unwrap();
        let a1 = r.factors()[0].simple_roots[0][0];
        assert_eq!(pairing(r.root(a1), &mu).unwrap(), 1);
        assert_eq!(pairing(r.root(a1), &[0, 0, 0, 0]).unwrap(), 0);
        assert!(pairing(&[1, 2], &[1]).is_err());
    }

    #[test]
    fn epsilon_partition_examples() {
        let r = rd(LieType::B, 4, 1);
        let zero = MinusculeCocharacter::trivial(&r);
        let e = epsilon_partition(&r, &zero).unwrap();
        assert!(e.phi_n.is_empty() && e.phi_u.is_empty());
        assert_eq!(e.phi_l.len(), 32);

        let mu = MinusculeCocharacter::new(&r, r.fundamental_coweight(0, 0, 1).unwrap()).unwrap();
        let e = epsilon_partition(&r, &mu).unwrap();
        assert_eq!(e.dim_n(), 7);
        assert_eq!(e.phi_u.len(), 7);
        assert_eq!(e.dim_g(), 36);

        let gl2 = build_root_datum(&[FactorSpec::gl(2)]).unwrap();
        let mu = MinusculeCocharacter::new(&gl2, vec![1, 0]).unwrap();
        let e = epsilon_partition(&gl2, &mu).unwrap();
        assert_eq!((e.phi_n.len(), e.phi_u.len()), (1, 1));
        assert_eq!(gl2.root(e.phi_n[0]), &[1, -1]);
    }

    #[test]
    fn non_minuscule_rejected() {
        let r = rd(LieType::B, 3, 1);
        let v = r.fundamental_coweight(0, 0, 3).unwrap();
        assert!(MinusculeCocharacter::new(&r, v).is_err());
        let c = rd(LieType::C, 3, 1);
        let v = c.fundamental_coweight(0, 0, 1).unwrap();
        assert!(MinusculeCocharacter::new(&c, v).is_err());
        let v = c.fundamental_coweight(0, 0, 3).unwrap();
        assert!(MinusculeCocharacter::new(&c, v).is_ok());
        assert!(MinusculeCocharacter::new(&c, vec![0, 1]).is_err());
    }

    #[test]
    fn closed_subsets() {
        let r = rd(LieType::A, 2, 1);
        assert!(is_closed_subset(&r, &[]));
        let s = &r.factors()[0].simple_roots[0];
        assert!(!is_closed_subset(&r, &[s[0], s[1]]));
        let sum = r.add(s[0], s[1]).unwrap();
        assert!(is_closed_subset(&r, &[s[0], s[1], sum]));

        let b = rd(LieType::B, 4, 1);
        let mu = MinusculeCocharacter::new(&b, b.fundamental_coweight(0, 0, 1).unwrap()).unwrap();
        let e = epsilon_partition(&b, &mu).unwrap();
        assert!(is_closed_subset(&b, &e.phi_p()));
        assert!(is_closed_subset(&b, &e.phi_q()));
    }
}
