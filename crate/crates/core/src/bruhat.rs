//! Comparison with the classical Bruhat decomposition: `S^cl(w)`, `d_u`,
//! coset lengths, and the multiset match between the two sides.

use serde::Serialize;

use crate::classify::{ClassRecord, Model};
use crate::error::{Error, Result};

/// `|{alpha in Phi^+ : w(alpha) in Phi_P}|` for the canonical positive system.
pub fn s_classical(m: &Model, w: usize) -> usize {
    let we = m.group.element(w);
    m.positive
        .members()
        .into_iter()
        .filter(|&a| !m.eps.in_n(we.act_root(a)))
        .count()
}

/// `d_u = |Phi^+| - |Phi_N|`.
pub fn d_u_value(m: &Model) -> usize {
    m.positive.size() - m.eps.dim_n()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruhatRecord {
    /// Index into the coset table.
    pub coset: usize,
    pub min_rep: usize,
    pub length: usize,
    pub d_cl: usize,
    pub d: i64,
}

/// One record per right coset `W_P w`, in coset-table order.
pub fn bruhat_records(m: &Model) -> Vec<BruhatRecord> {
    let du = d_u_value(m) as i64;
    m.cosets
        .cosets
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let d_cl = s_classical(m, c.min_rep);
            BruhatRecord {
                coset: i,
                min_rep: c.min_rep,
                length: c.length,
                d_cl,
                d: d_cl as i64 - du,
            }
        })
        .collect()
}

/// `S^cl` of every minimal representative equals `|Phi^+| - l([w])`.
pub fn length_formula_holds(m: &Model, records: &[BruhatRecord]) -> bool {
    let n_pos = m.positive.size();
    records.iter().all(|r| r.d_cl + r.length == n_pos)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultisetMatch {
    pub holds: bool,
    /// `(class id, coset index)` pairs matched by sorted value; not unique
    /// when values repeat.
    pub pairing: Vec<(usize, usize)>,
}

/// Compares `{S}` over classes with `{S^cl - d_u}` over cosets.
pub fn s_multiset_match(
    classes: &[ClassRecord],
    records: &[BruhatRecord],
) -> Result<MultisetMatch> {
    if classes.len() != records.len() {
        return Err(Error::invariant(format!(
            "{} classes but {} cosets",
            classes.len(),
            records.len()
        )));
    }
    let mut lhs: Vec<(i64, usize)> = classes.iter().map(|c| (c.s_value as i64, c.id)).collect();
    let mut rhs: Vec<(i64, usize)> = records.iter().map(|r| (r.d, r.coset)).collect();
    lhs.sort_unstable();
    rhs.sort_unstable();
    let holds = lhs.iter().zip(&rhs).all(|(a, b)| a.0 == b.0);
    Ok(MultisetMatch {
        holds,
        pairing: if holds {
            lhs.iter().zip(&rhs).map(|(a, b)| (a.1, b.1)).collect()
        } else {
            Vec::new()
        },
    })
}

/// `{|Phi_N| - l([w])}` over cosets equals `{S}` over classes.
pub fn length_multiset_match(m: &Model, classes: &[ClassRecord], records: &[BruhatRecord]) -> bool {
    let dim_n = m.eps.dim_n() as i64;
    let mut lhs: Vec<i64> = classes.iter().map(|c| c.s_value as i64).collect();
    let mut rhs: Vec<i64> = records.iter().map(|r| dim_n - r.length as i64).collect();
    lhs.sort_unstable();
    rhs.sort_unstable();
    lhs == rhs
}
