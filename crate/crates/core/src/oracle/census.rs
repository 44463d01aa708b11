//! Point counts, the class-size identity, exhaustive censuses of final
//! types, and orbits of the twisted action on `GL_r(F_q)`.

use std::collections::{BTreeMap, HashMap};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use super::bt1::{bt1_final_type, FinalType, TruncationTriple};
use super::ff::{Elem, FiniteField};
use super::linalg::FMat;
use crate::error::{Error, Result};

/// Default cap on `|GL_r(F_q)|` for a census.
pub const DEFAULT_MAX_ORACLE_POINTS: u128 = 200_000;
/// Cap on `|GL_r(F_q)| · |H(F_q)|` for orbit enumeration.
pub const MAX_ORBIT_WORK: u128 = 1_000_000;

pub fn gl_order(r: usize, q: u128) -> u128 {
    let mut n = q.pow((r * r.saturating_sub(1) / 2) as u32);
    for i in 1..=r as u32 {
        n *= q.pow(i) - 1;
    }
    n
}

/// `(|GL_r(F_q)|, |H(F_q)|)` with `H = U x L x N`.
pub fn gl_point_counts(r: usize, d: usize, q: u128) -> (u128, u128) {
    let h = q.pow((2 * d * (r - d)) as u32) * gl_order(d, q) * gl_order(r - d, q);
    (gl_order(r, q), h)
}

/// `|G| = |H| · sum_i p^(-m S_i)` in exact rational arithmetic.
pub fn point_count_check(r: usize, d: usize, ff: &FiniteField, s_values: &[usize]) -> bool {
    let q = ff.order() as i128;
    let (g, h) = gl_point_counts(r, d, q as u128);
    let sum: Ratio<i128> = s_values
        .iter()
        .map(|&s| Ratio::new(1, q.pow(s as u32)))
        .sum();
    Ratio::from_integer(h as i128) * sum == Ratio::from_integer(g as i128)
}

/// `|H| / q^S` for each `S`, in decreasing order.
pub fn predicted_counts(r: usize, d: usize, q: u128, s_values: &[usize]) -> Vec<u128> {
    let (_, h) = gl_point_counts(r, d, q);
    let mut out: Vec<u128> = s_values.iter().map(|&s| h / q.pow(s as u32)).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn decode(ff: &FiniteField, r: usize, mut idx: u64) -> FMat {
    let q = ff.order() as u64;
    let data = (0..r * r)
        .map(|_| {
            let x = (idx % q) as Elem;
            idx /= q;
            x
        })
        .collect();
    FMat::from_entries(r, data)
}

/// All of `GL_r(F_q)` in a fixed order.
pub fn gl_elements(ff: &FiniteField, r: usize) -> Vec<FMat> {
    let total = (ff.order() as u64).pow((r * r) as u32);
    (0..total)
        .into_par_iter()
        .map(|i| decode(ff, r, i))
        .filter(|m| m.rank(ff) == r)
        .collect()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Final types of every point of `GL_r(F_q)`, with multiplicities.
pub fn type_census(
    ff: &FiniteField,
    r: usize,
    d: usize,
    max_points: u128,
) -> Result<BTreeMap<FinalType, u64>> {
    let size = gl_order(r, ff.order() as u128);
    if size > max_points {
        return Err(Error::LimitExceeded(format!(
            "|GL_{r}(F_{})| = {size} exceeds {max_points}",
            ff.order()
        )));
    }
    let types: Vec<FinalType> = gl_elements(ff, r)
        .into_par_iter()
        .map(|g| bt1_final_type(ff, &TruncationTriple::new(ff, r, d, g)?))
        .collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for t in types {
        *out.entry(t).or_insert(0) += 1;
    }
    if out.len() != binomial(r, d) {
        return Err(Error::invariant(format!(
            "{} final types, expected binomial({r}, {d}) = {}",
            out.len(),
            binomial(r, d)
        )));
    }
    Ok(out)
}

/// Bucket sizes sorted in decreasing order.
pub fn census_counts(census: &BTreeMap<FinalType, u64>) -> Vec<u128> {
    let mut v: Vec<u128> = census.values().map(|&c| c as u128).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn blocks(ff: &FiniteField, n: usize) -> Vec<FMat> {
    if n == 0 {
        return vec![FMat::zeros(0, 0)];
    }
    gl_elements(ff, n)
}

fn embed(r: usize, at: (usize, usize), m: &FMat, base: FMat) -> FMat {
    let mut out = base;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.set(at.0 + i, at.1 + j, m.get(i, j));
        }
    }
    debug_assert_eq!(out.rows(), r);
    out
}

fn rect_elements(ff: &FiniteField, rows: usize, cols: usize) -> Vec<FMat> {
    let q = ff.order() as u64;
    let total = q.pow((rows * cols) as u32);
    (0..total)
        .map(|mut idx| {
            let mut m = FMat::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, (idx % q) as Elem);
                    idx /= q;
                }
            }
            m
        })
        .collect()
}

/// Elements of `U`, `L` and `N` as `r x r` matrices: `U` is the unipotent
/// upper-right block, `L` the block diagonal `GL_d x GL_(r-d)`, `N` the
/// unipotent lower-left block.
pub fn h_factors(ff: &FiniteField, r: usize, d: usize) -> (Vec<FMat>, Vec<FMat>, Vec<FMat>) {
    let u = rect_elements(ff, d, r - d)
        .iter()
        .map(|b| embed(r, (0, d), b, FMat::identity(r)))
        .collect();
    let n = rect_elements(ff, r - d, d)
        .iter()
        .map(|b| embed(r, (d, 0), b, FMat::identity(r)))
        .collect();
    let mut l = Vec::new();
    for a in blocks(ff, d) {
        for b in blocks(ff, r - d) {
            let m = embed(r, (0, 0), &a, FMat::zeros(r, r));
            l.push(embed(r, (d, d), &b, m));
        }
    }
    (u, l, n)
}

/// `h1 · h2 · g · sigma(h2)^{-1} · sigma(h3)^{-1}` with `sigma` the entrywise
/// Frobenius.
pub fn twisted_move(ff: &FiniteField, g: &FMat, h1: &FMat, h2: &FMat, h3: &FMat) -> FMat {
    let s2 = h2.frob(ff, 1).inverse(ff).expect("h2 invertible");
    let s3 = h3.frob(ff, 1).inverse(ff).expect("h3 invertible");
    h1.mul(ff, h2).mul(ff, g).mul(ff, &s2).mul(ff, &s3)
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitPartition {
    /// Orbit sizes, each with the final type shared by its members.
    pub orbits: Vec<(FinalType, usize)>,
    /// Every orbit lies inside one final type.
    pub coarsens: bool,
    pub type_totals: BTreeMap<FinalType, u64>,
}

/// Orbits of `H(F_q)` on `GL_r(F_q)` under [`twisted_move`].
pub fn twisted_orbit_enumeration(ff: &FiniteField, r: usize, d: usize) -> Result<OrbitPartition> {
    let q = ff.order() as u128;
    let (g_size, h_size) = gl_point_counts(r, d, q);
    if g_size * h_size > MAX_ORBIT_WORK {
        return Err(Error::LimitExceeded(format!(
            "|G| |H| = {} exceeds {MAX_ORBIT_WORK}",
            g_size * h_size
        )));
    }
    let elems = gl_elements(ff, r);
    let index: HashMap<&FMat, usize> = elems.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let (us, ls, ns) = h_factors(ff, r, d);
    let mut orbit = vec![usize::MAX; elems.len()];
    let mut sizes = Vec::new();
    for start in 0..elems.len() {
        if orbit[start] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        let mut count = 0;
        let mut stack = vec![start];
        orbit[start] = id;
        while let Some(i) = stack.pop() {
            count += 1;
            for h1 in &us {
                for h2 in &ls {
                    for h3 in &ns {
                        let j = index[&twisted_move(ff, &elems[i], h1, h2, h3)];
                        if orbit[j] == usize::MAX {
                            orbit[j] = id;
                            stack.push(j);
                        }
                    }
                }
            }
        }
        sizes.push(count);
    }
    let types: Vec<FinalType> = elems
        .par_iter()
        .map(|g| bt1_final_type(ff, &TruncationTriple::new(ff, r, d, g.clone())?))
        .collect::<Result<_>>()?;
    let mut orbit_type: Vec<Option<FinalType>> = vec![None; sizes.len()];
    let mut coarsens = true;
    let mut type_totals = BTreeMap::new();
    for (i, t) in types.into_iter().enumerate() {
        match &orbit_type[orbit[i]] {
            Some(prev) if *prev != t => coarsens = false,
            Some(_) => {}
            None => orbit_type[orbit[i]] = Some(t.clone()),
        }
        *type_totals.entry(t).or_insert(0) += 1;
    }
    let orbits = orbit_type
        .into_iter()
        .map(Option::unwrap)
        .zip(sizes)
        .collect();
    Ok(OrbitPartition {
        orbits,
        coarsens,
        type_totals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_counts() {
        assert_eq!(gl_point_counts(2, 1, 2), (6, 4));
        assert_eq!(gl_point_counts(3, 1, 2), (168, 96));
        assert_eq!(gl_point_counts(2, 1, 4), (180, 144));
        assert_eq!(gl_order(3, 4), 181_440);
    }

    #[test]
    fn point_count_examples() {
        let f2 = FiniteField::new(2, 1).unwrap();
        let f4 = FiniteField::new(2, 2).unwrap();
        assert!(point_count_check(2, 1, &f2, &[0, 1]));
        assert!(point_count_check(3, 1, &f2, &[0, 1, 2]));
        assert!(point_count_check(2, 1, &f4, &[0, 1]));
        assert!(!point_count_check(2, 1, &f2, &[0, 2]));
    }

    #[test]
    fn census_gl2_f2() {
        let f = FiniteField::new(2, 1).unwrap();
        let c = type_census(&f, 2, 1, DEFAULT_MAX_ORACLE_POINTS).unwrap();
        assert_eq!(census_counts(&c), vec![4, 2]);
        assert_eq!(predicted_counts(2, 1, 2, &[0, 1]), vec![4, 2]);
    }

    #[test]
    fn census_limit() {
        let f = FiniteField::new(2, 2).unwrap();
        assert!(matches!(
            type_census(&f, 3, 1, 1000),
            Err(Error::LimitExceeded(_))
        ));
    }

    #[test]
    fn orbits_gl2_f2() {
        let f = FiniteField::new(2, 1).unwrap();
        let part = twisted_orbit_enumeration(&f, 2, 1).unwrap();
        assert!(part.coarsens);
        assert_eq!(census_counts(&part.type_totals), vec![4, 2]);
        let (u, l, n) = h_factors(&f, 2, 1);
        assert_eq!(u.len() * l.len() * n.len(), 4);
    }
}
