//! The Weyl group as lattice automorphisms: enumeration, lengths, the
//! parabolic subgroup fixing a cocharacter, and right cosets with their
//! minimal-length representatives.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, Vector};
use crate::rootdata::{EpsilonPartition, MinusculeCocharacter, RootDatum};

/// Default cap on `|W_G|` for enumeration.
pub const DEFAULT_MAX_WEYL_ORDER: u128 = 1_000_000;

/// Permutation of root indices, `perm[i]` is the image of root `i`.
pub type Perm = Box<[u16]>;

/// `a ∘ b` for permutations stored as image tables.
pub fn compose_perm(a: &[u16], b: &[u16]) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn invert_perm(a: &[u16]) -> Perm {
    let mut out = vec![0u16; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u16;
    }
    out.into_boxed_slice()
}

/// A lattice automorphism preserving the roots.
///
/// `matrix` acts on characters, `comatrix` on cocharacters; the two are
/// inverse-transpose to each other so the pairing is preserved. The
/// permutation is the induced action on root indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub perm: Perm,
    pub matrix: IntMatrix,
    pub comatrix: IntMatrix,
}

impl WeylElement {
    pub fn identity(rd: &RootDatum) -> Self {
        WeylElement {
            perm: (0..rd.num_roots() as u16).collect(),
            matrix: IntMatrix::identity(rd.rank()),
            comatrix: IntMatrix::identity(rd.rank()),
        }
    }

    /// The reflection `s_alpha` for root index `a`.
    pub fn reflection(rd: &RootDatum, a: usize) -> Self {
        WeylElement {
            perm: (0..rd.num_roots())
                .map(|b| rd.reflect(a, b) as u16)
                .collect(),
            matrix: IntMatrix::reflection(rd.root(a), rd.coroot(a)),
            comatrix: IntMatrix::reflection(rd.coroot(a), rd.root(a)),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            perm: compose_perm(&self.perm, &other.perm),
            matrix: self.matrix.mul(&other.matrix),
            comatrix: self.comatrix.mul(&other.comatrix),
        }
    }

    pub fn act_root(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    pub fn act_character(&self, chi: &[i64]) -> Vector {
        self.matrix.apply(chi)
    }

    pub fn act_cocharacter(&self, lam: &[i64]) -> Vector {
        self.comatrix.apply(lam)
    }

    /// The permutation is induced by the matrix and the pairing is preserved.
    pub fn is_consistent(&self, rd: &RootDatum) -> bool {
        let perm_ok = (0..rd.num_roots())
            .all(|i| self.matrix.apply(rd.root(i)) == rd.root(self.perm[i] as usize));
        perm_ok && self.matrix.transpose().mul(&self.comatrix).is_identity()
    }
}

/// All elements of `W_G`, identity first, ordered by (standard length,
/// lexicographic matrix).
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<Perm, usize>,
    std_lengths: Vec<usize>,
}

impl WeylGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn find(&self, perm: &[u16]) -> Option<usize> {
        self.index.get(perm).copied()
    }

    /// Index of `a ∘ b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = compose_perm(&self.elements[a].perm, &self.elements[b].perm);
        self.index[&p]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.index[&invert_perm(&self.elements[a].perm)]
    }

    /// Length with respect to the standard positive system.
    pub fn standard_length(&self, a: usize) -> usize {
        self.std_lengths[a]
    }
}

pub fn enumerate_weyl(rd: &RootDatum, bound: u128) -> Result<WeylGroup> {
    let order = rd.weyl_order();
    if order > bound {
        return Err(Error::LimitExceeded(format!(
            "Weyl group order {order} exceeds the bound {bound}"
        )));
    }
    let gens: Vec<WeylElement> = rd
        .all_simple_roots()
        .into_iter()
        .map(|a| WeylElement::reflection(rd, a))
        .collect();
    let id = WeylElement::identity(rd);
    let mut seen: HashMap<Perm, WeylElement> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(id.perm.clone(), id.clone());
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        for s in &gens {
            let ws = w.compose(s);
            if !seen.contains_key(&ws.perm) {
                seen.insert(ws.perm.clone(), ws.clone());
                queue.push_back(ws);
            }
        }
    }
    if seen.len() as u128 != order {
        return Err(Error::invariant(format!(
            "enumerated {} Weyl elements, expected {order}",
            seen.len()
        )));
    }
    let std = PositiveSystem::standard(rd);
    let mut elements: Vec<(usize, WeylElement)> =
        seen.into_values().map(|w| (std.length(&w), w)).collect();
    elements.sort_by(|a, b| (a.0, &a.1.matrix).cmp(&(b.0, &b.1.matrix)));
    let std_lengths = elements.iter().map(|e| e.0).collect();
    let elements: Vec<WeylElement> = elements.into_iter().map(|e| e.1).collect();
    for w in &elements {
        if !w.is_consistent(rd) {
            return Err(Error::invariant(
                "Weyl element matrix and permutation disagree",
            ));
        }
    }
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, w)| (w.perm.clone(), i))
        .collect();
    Ok(WeylGroup {
        elements,
        index,
        std_lengths,
    })
}

/// A positive system of roots, stored as a membership mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveSystem {
    mask: Vec<bool>,
}

impl PositiveSystem {
    /// Validates that `roots` is a positive system: it contains exactly one
    /// of each pair `±alpha` and is closed under addition.
    pub fn new(rd: &RootDatum, roots: &[usize]) -> Result<Self> {
        let mut mask = vec![false; rd.num_roots()];
        for &i in roots {
            if i >= mask.len() {
                return Err(Error::input(format!("root index {i} out of range")));
            }
            mask[i] = true;
        }
        for i in 0..mask.len() {
            if mask[i] == mask[rd.negate(i)] {
                return Err(Error::input(
                    "not a positive system: must contain exactly one of each ±alpha",
                ));
            }
        }
        if !crate::rootdata::is_closed_subset(rd, roots) {
            return Err(Error::input(
                "not a positive system: not closed under addition",
            ));
        }
        Ok(PositiveSystem { mask })
    }

    pub fn standard(rd: &RootDatum) -> Self {
        PositiveSystem {
            mask: (0..rd.num_roots())
                .map(|i| rd.is_standard_positive(i))
                .collect(),
        }
    }

    /// `Phi_U` together with the lexicographically positive roots of `Phi_L`.
    pub fn canonical(rd: &RootDatum, eps: &EpsilonPartition) -> Self {
        let lex_positive = |v: &[i64]| v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0);
        PositiveSystem {
            mask: (0..rd.num_roots())
                .map(|i| eps.in_u(i) || (eps.in_l(i) && lex_positive(rd.root(i))))
                .collect(),
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask[i]
    }

    pub fn size(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.mask.len()).filter(|&i| self.mask[i]).collect()
    }

    /// `|{alpha > 0 : w(alpha) < 0}|`.
    pub fn length(&self, w: &WeylElement) -> usize {
        (0..self.mask.len())
            .filter(|&i| self.mask[i] && !self.mask[w.perm[i] as usize])
            .count()
    }
}

/// Length of `w` with respect to a positive system given as root indices.
pub fn length(rd: &RootDatum, w: &WeylElement, positive_system: &[usize]) -> Result<usize> {
    Ok(PositiveSystem::new(rd, positive_system)?.length(w))
}

/// `W_P` as the stabilizer of `mu` under the cocharacter action.
pub fn parabolic_subgroup(group: &WeylGroup, mu: &MinusculeCocharacter) -> Vec<usize> {
    (0..group.len())
        .filter(|&i| group.element(i).act_cocharacter(mu.vector()) == mu.vector())
        .collect()
}

/// The subgroup generated by the reflections in the roots of `Phi_L`.
pub fn levi_reflection_subgroup(
    rd: &RootDatum,
    group: &WeylGroup,
    eps: &EpsilonPartition,
) -> Vec<usize> {
    let gens: Vec<usize> = eps
        .phi_l
        .iter()
        .map(|&a| {
            group
                .find(&WeylElement::reflection(rd, a).perm)
                .expect("reflection lies in W")
        })
        .collect();
    let mut seen = vec![false; group.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(w) = queue.pop_front() {
        for &s in &gens {
            let ws = group.mul(w, s);
            if !seen[ws] {
                seen[ws] = true;
                queue.push_back(ws);
            }
        }
    }
    (0..group.len()).filter(|&i| seen[i]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    pub members: Vec<usize>,
    pub min_rep: usize,
    /// `l([w])`, the minimal length over the coset.
    pub length: usize,
}

/// Right cosets `W_P w`.
#[derive(Debug, Clone)]
pub struct CosetTable {
    pub parabolic: Vec<usize>,
    pub cosets: Vec<Coset>,
    pub coset_of: Vec<usize>,
}

pub fn coset_table(
    group: &WeylGroup,
    parabolic: &[usize],
    positive: &PositiveSystem,
) -> Result<CosetTable> {
    let mut assigned = vec![usize::MAX; group.len()];
    let mut cosets = Vec::new();
    for w in 0..group.len() {
        if assigned[w] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> = parabolic.iter().map(|&u| group.mul(u, w)).collect();
        members.sort_unstable();
        members.dedup();
        if members.len() != parabolic.len() {
            return Err(Error::invariant("coset size differs from |W_P|"));
        }
        let lengths: Vec<usize> = members
            .iter()
            .map(|&m| positive.length(group.element(m)))
            .collect();
        let min = *lengths.iter().min().unwrap();
        let minimal: Vec<usize> = members
            .iter()
            .zip(&lengths)
            .filter(|(_, &l)| l == min)
            .map(|(&m, _)| m)
            .collect();
        if minimal.len() != 1 {
            return Err(Error::invariant(format!(
                "coset of element {w} has {} minimal-length representatives",
                minimal.len()
            )));
        }
        for &m in &members {
            if assigned[m] != usize::MAX {
                return Err(Error::invariant("right cosets overlap"));
            }
            assigned[m] = cosets.len();
        }
        cosets.push(Coset {
            members,
            min_rep: minimal[0],
            length: min,
        });
    }
    let mut order: Vec<usize> = (0..cosets.len()).collect();
    order.sort_by_key(|&c| (cosets[c].length, cosets[c].min_rep));
    let mut renumber = vec![0; cosets.len()];
    for (new, &old) in order.iter().enumerate() {
        renumber[old] = new;
    }
    let coset_of = assigned.iter().map(|&c| renumber[c]).collect();
    let mut sorted: Vec<Option<Coset>> = cosets.into_iter().map(Some).collect();
    let cosets = order.iter().map(|&c| sorted[c].take().unwrap()).collect();
    Ok(CosetTable {
        parabolic: parabolic.to_vec(),
        cosets,
        coset_of,
    })
}

/// Reduced word of `w` over the standard simple reflections, one word per
/// copy in datum order, 1-based Bourbaki indices.
pub fn reduced_words(rd: &RootDatum, w: &WeylElement) -> Vec<Vec<usize>> {
    let mut cur: Vec<u16> = w.perm.to_vec();
    let mut out = Vec::new();
    for f in rd.factors() {
        for simple in &f.simple_roots {
            let refl: Vec<Perm> = simple
                .iter()
                .map(|&a| WeylElement::reflection(rd, a).perm)
                .collect();
            let mut word = Vec::new();
            'outer: loop {
                for (k, &a) in simple.iter().enumerate() {
                    if !rd.is_standard_positive(cur[a] as usize) {
                        word.push(k + 1);
                        cur = compose_perm(&cur, &refl[k]).to_vec();
                        continue 'outer;
                    }
                }
                break;
            }
            word.reverse();
            out.push(word);
        }
    }
    out
}
