//! Orbits of `pi_w`, slopes, `S(w)`, the subgroup `script_S(w)`, the
//! equivalence classes of Weyl elements and their numerical invariants.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frobenius::{pi_w, sigma_table, Quintuple};
use crate::rootdata::{epsilon_partition, is_closed_subset, EpsilonPartition};
use crate::weyl::{
    coset_table, enumerate_weyl, levi_reflection_subgroup, parabolic_subgroup, CosetTable, Perm,
    PositiveSystem, WeylGroup,
};

pub type Slope = Ratio<i64>;

/// Everything derived once from a quintuple: the enumerated Weyl group, the
/// epsilon partition, the canonical positive system, `W_P` and its cosets.
#[derive(Debug, Clone)]
pub struct Model {
    pub q: Quintuple,
    pub group: WeylGroup,
    pub eps: EpsilonPartition,
    pub positive: PositiveSystem,
    pub parabolic: Vec<usize>,
    pub cosets: CosetTable,
    /// `sigma(w)` for every `w`.
    pub sigma_w: Vec<usize>,
}

impl Model {
    pub fn new(q: Quintuple, max_weyl_order: u128) -> Result<Self> {
        let group = enumerate_weyl(&q.rd, max_weyl_order)?;
        let eps = epsilon_partition(&q.rd, &q.mu)?;
        let positive = PositiveSystem::canonical(&q.rd, &eps);
        PositiveSystem::new(&q.rd, &positive.members())
            .map_err(|e| Error::invariant(format!("canonical positive system: {e}")))?;
        let parabolic = parabolic_subgroup(&group, &q.mu);
        if levi_reflection_subgroup(&q.rd, &group, &eps) != parabolic {
            return Err(Error::invariant(
                "stabilizer of mu differs from the group generated by Phi_L reflections",
            ));
        }
        let cosets = coset_table(&group, &parabolic, &positive)?;
        let sigma_w = sigma_table(&group, &q.sigma)?;
        Ok(Model {
            q,
            group,
            eps,
            positive,
            parabolic,
            cosets,
            sigma_w,
        })
    }

    pub fn pi(&self, w: usize) -> Perm {
        pi_w(self.group.element(w), &self.q.sigma)
    }

    pub fn index(&self) -> usize {
        self.group.len() / self.parabolic.len()
    }

    /// `sigma_w(x) = w sigma(x) w^{-1}`.
    fn sigma_twist(&self, w: usize, w_inv: usize, x: usize) -> usize {
        self.group.mul(self.group.mul(w, self.sigma_w[x]), w_inv)
    }
}

/// One cycle of `pi_w` on the roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    /// Roots along the cycle, starting at the smallest index.
    pub roots: Vec<usize>,
    pub m_plus: usize,
    pub m_minus: usize,
    /// Lexicographically smallest rotation of the epsilon values.
    pub epsilon_string: Vec<i8>,
    #[serde(serialize_with = "ser_ratio")]
    pub slope: Slope,
    /// Contained in `Phi_L`.
    pub in_zero: bool,
    /// Meets `Phi_N^{+w}`.
    pub in_plus: bool,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

fn ser_ratio<S: serde::Serializer>(r: &Slope, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub orbits: Vec<Orbit>,
    pub orbit_of: Vec<usize>,
}

impl OrbitDecomposition {
    /// The sum over orbits of `m_plus - m_minus` vanishes.
    pub fn sum_rule_holds(&self) -> bool {
        self.orbits
            .iter()
            .map(|o| o.m_plus as i64 - o.m_minus as i64)
            .sum::<i64>()
            == 0
    }
}

/// Per-root data for `Phi_N` along `pi_w`: `w_alpha` and whether the first
/// exit from `Phi_L` lands in `Phi_U`.
fn exits(eps: &EpsilonPartition, pi: &[u16]) -> Vec<Option<(usize, bool)>> {
    (0..pi.len())
        .map(|a| {
            if !eps.in_n(a) {
                return None;
            }
            let mut b = pi[a] as usize;
            let mut j = 1;
            while eps.in_l(b) {
                b = pi[b] as usize;
                j += 1;
            }
            Some((j, eps.in_u(b)))
        })
        .collect()
}

fn min_rotation(s: &[i8]) -> Vec<i8> {
    (0..s.len().max(1))
        .map(|k| s[k..].iter().chain(&s[..k]).copied().collect::<Vec<i8>>())
        .min()
        .unwrap_or_default()
}

fn decompose(eps: &EpsilonPartition, pi: &[u16], plus: &[bool]) -> OrbitDecomposition {
    let n = pi.len();
    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let mut roots = Vec::new();
        let mut a = start;
        loop {
            orbit_of[a] = orbits.len();
            roots.push(a);
            a = pi[a] as usize;
            if a == start {
                break;
            }
        }
        let eps_seq: Vec<i8> = roots.iter().map(|&a| eps.eps(a)).collect();
        let m_plus = eps_seq.iter().filter(|&&e| e == 1).count();
        let m_minus = eps_seq.iter().filter(|&&e| e == -1).count();
        orbits.push(Orbit {
            slope: Ratio::new(m_plus as i64 - m_minus as i64, roots.len() as i64),
            in_zero: m_plus == 0 && m_minus == 0,
            in_plus: roots.iter().any(|&a| plus[a]),
            epsilon_string: min_rotation(&eps_seq),
            m_plus,
            m_minus,
            roots,
        });
    }
    OrbitDecomposition { orbits, orbit_of }
}

fn plus_mask(ex: &[Option<(usize, bool)>]) -> Vec<bool> {
    ex.iter().map(|e| matches!(e, Some((_, true)))).collect()
}

pub fn pi_orbits(m: &Model, w: usize) -> OrbitDecomposition {
    let pi = m.pi(w);
    let ex = exits(&m.eps, &pi);
    decompose(&m.eps, &pi, &plus_mask(&ex))
}

/// Smallest `j >= 1` with `pi_w^j(alpha)` outside `Phi_L`.
pub fn w_alpha(m: &Model, w: usize, alpha: usize) -> Result<usize> {
    if alpha >= m.q.rd.num_roots() || !m.eps.in_n(alpha) {
        return Err(Error::input(format!("root {alpha} is not in Phi_N")));
    }
    Ok(exits(&m.eps, &m.pi(w))[alpha].unwrap().0)
}

/// `Phi_N^{+w}`.
pub fn phi_n_plus(m: &Model, w: usize) -> Vec<usize> {
    let ex = exits(&m.eps, &m.pi(w));
    (0..ex.len())
        .filter(|&a| matches!(ex[a], Some((_, true))))
        .collect()
}

/// `S(w) = |Phi_N^{+w}|`.
pub fn s_value(m: &Model, w: usize) -> usize {
    phi_n_plus(m, w).len()
}

/// `script_S(w)`: elements fixing every `(w sigma)^i mu`, cross-checked
/// against the intersection of the conjugates `sigma_w^i(W_P)`.
pub fn script_s_subgroup(m: &Model, w: usize) -> Result<Vec<usize>> {
    let we = m.group.element(w);
    let step = |lam: &[i64]| we.act_cocharacter(&m.q.sigma.act_cocharacter(lam));
    let mu = m.q.mu.vector().to_vec();
    let mut coweights = vec![mu.clone()];
    loop {
        let next = step(coweights.last().unwrap());
        if next == mu {
            break;
        }
        coweights.push(next);
    }
    let by_stabilizer: Vec<usize> = (0..m.group.len())
        .filter(|&u| {
            let ue = m.group.element(u);
            coweights.iter().all(|l| ue.act_cocharacter(l) == *l)
        })
        .collect();

    let w_inv = m.group.inverse(w);
    let start: BTreeSet<usize> = m.parabolic.iter().copied().collect();
    let mut cur = start.clone();
    let mut inter = start.clone();
    loop {
        cur = cur.iter().map(|&x| m.sigma_twist(w, w_inv, x)).collect();
        if cur == start {
            break;
        }
        inter = inter.intersection(&cur).copied().collect();
    }
    let by_conjugates: Vec<usize> = inter.into_iter().collect();
    if by_conjugates != by_stabilizer {
        return Err(Error::invariant(format!(
            "the two descriptions of script_S({w}) disagree"
        )));
    }
    Ok(by_stabilizer)
}

/// `{w3 w4 w sigma(w3)^{-1} : w3 in W_P, w4 in script_S(w)}`, sorted.
pub fn r_class(m: &Model, w: usize) -> Result<Vec<usize>> {
    let s = script_s_subgroup(m, w)?;
    let g = &m.group;
    let mut out = BTreeSet::new();
    for &w3 in &m.parabolic {
        let tail = g.mul(w, g.inverse(m.sigma_w[w3]));
        for &w4 in &s {
            out.insert(g.mul(g.mul(w3, w4), tail));
        }
    }
    if out.len() != m.parabolic.len() {
        return Err(Error::invariant(format!(
            "class of element {w} has {} members, |W_P| = {}",
            out.len(),
            m.parabolic.len()
        )));
    }
    Ok(out.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroSpaceDims {
    pub dim_x_fp: usize,
    pub dim_y: usize,
    pub dim_y0: usize,
    pub dim_w_span: usize,
    /// `Phi_w`.
    pub support: Vec<usize>,
}

pub fn zero_space_dims(m: &Model, w: usize) -> Result<ZeroSpaceDims> {
    let rank = m.q.rd.rank();
    let pi = m.pi(w);
    let ex = exits(&m.eps, &pi);
    let dec = decompose(&m.eps, &pi, &plus_mask(&ex));
    let mut support = BTreeSet::new();
    let mut dim_x_fp = rank;
    let mut dim_w_span = rank;
    for o in &dec.orbits {
        if o.in_zero {
            dim_x_fp += o.len();
            dim_w_span += o.len();
            support.extend(o.roots.iter().copied());
        }
    }
    let mut dim_y = 0;
    let mut dim_y0 = 0;
    for (a, e) in ex.iter().enumerate() {
        if let Some((wa, true)) = *e {
            dim_y += 1;
            if wa == 1 {
                dim_y0 += 1;
            }
            dim_w_span += wa;
            let mut b = a;
            for _ in 0..wa {
                b = pi[b] as usize;
                support.insert(b);
            }
        }
    }
    let support: Vec<usize> = support.into_iter().collect();
    if !is_closed_subset(&m.q.rd, &support) {
        return Err(Error::invariant(format!(
            "Phi_w is not closed for element {w}"
        )));
    }
    Ok(ZeroSpaceDims {
        dim_x_fp,
        dim_y,
        dim_y0,
        dim_w_span,
        support,
    })
}

/// Newton slopes of the adjoint Lie algebra with multiplicities: each orbit
/// contributes its slope `|o|` times, the Cartan part contributes zero
/// `semisimple rank` times.
pub fn ad_slopes(m: &Model, dec: &OrbitDecomposition) -> BTreeMap<Slope, usize> {
    let mut out = BTreeMap::new();
    let ss = m.q.rd.semisimple_rank();
    if ss > 0 {
        out.insert(Ratio::from_integer(0), ss);
    }
    for o in &dec.orbits {
        *out.entry(o.slope).or_insert(0) += o.len();
    }
    out
}

/// Per-element invariants, used to check constancy on classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementData {
    pub s_value: usize,
    pub slopes: BTreeMap<Slope, usize>,
    pub sum_rule: bool,
}

pub fn element_data(m: &Model) -> Vec<ElementData> {
    (0..m.group.len())
        .into_par_iter()
        .map(|w| {
            let pi = m.pi(w);
            let plus = plus_mask(&exits(&m.eps, &pi));
            let dec = decompose(&m.eps, &pi, &plus);
            ElementData {
                s_value: plus.iter().filter(|&&b| b).count(),
                slopes: ad_slopes(m, &dec),
                sum_rule: dec.sum_rule_holds(),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    /// 1-based, in table order.
    pub id: usize,
    pub representative: usize,
    pub members: Vec<usize>,
    pub s_value: usize,
    pub dim_orbit: usize,
    pub dim_stratum_universal: usize,
    #[serde(serialize_with = "ser_slopes")]
    pub slopes: BTreeMap<Slope, usize>,
    pub pivotal: bool,
    pub open: bool,
    pub zero_space: ZeroSpaceDims,
}

impl ClassRecord {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

fn ser_slopes<S: serde::Serializer>(
    m: &BTreeMap<Slope, usize>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(m.len()))?;
    for (k, v) in m {
        map.serialize_entry(&k.to_string(), v)?;
    }
    map.end()
}

/// All classes, sorted by `S` and then by representative; pivotal and open
/// flags are set and checked.
pub fn enumerate_classes(m: &Model) -> Result<Vec<ClassRecord>> {
    let n = m.group.len();
    let mut assigned = vec![false; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for w in 0..n {
        if assigned[w] {
            continue;
        }
        let members = r_class(m, w)?;
        for &x in &members {
            if assigned[x] {
                return Err(Error::invariant("equivalence classes overlap"));
            }
            assigned[x] = true;
        }
        classes.push(members);
    }
    if classes.len() != m.index() {
        return Err(Error::invariant(format!(
            "{} classes, expected [W_G:W_P] = {}",
            classes.len(),
            m.index()
        )));
    }
    let dim_g = m.eps.dim_g();
    let dim_n = m.eps.dim_n();
    let mut records: Vec<ClassRecord> = classes
        .into_par_iter()
        .map(|members| {
            let rep = *members
                .iter()
                .min_by(|&&a, &&b| {
                    let key = |x: usize| {
                        (
                            m.positive.length(m.group.element(x)),
                            &m.group.element(x).matrix,
                        )
                    };
                    key(a).cmp(&key(b))
                })
                .unwrap();
            let s = s_value(m, rep);
            let dec = pi_orbits(m, rep);
            Ok(ClassRecord {
                id: 0,
                representative: rep,
                s_value: s,
                dim_orbit: dim_g - s,
                dim_stratum_universal: dim_n - s,
                slopes: ad_slopes(m, &dec),
                pivotal: s == dim_n,
                open: s == 0,
                zero_space: zero_space_dims(m, rep)?,
                members,
            })
        })
        .collect::<Result<_>>()?;
    records.sort_by(|a, b| {
        let key = |r: &ClassRecord| {
            let e = m.group.element(r.representative);
            (r.s_value, m.positive.length(e), e.matrix.clone())
        };
        key(a).cmp(&key(b))
    });
    for (i, r) in records.iter_mut().enumerate() {
        r.id = i + 1;
    }
    pivotal_and_open_flags(&records)?;
    Ok(records)
}

/// Checks that exactly one class is pivotal, exactly one is open, and the
/// pivotal class has only slope zero.
pub fn pivotal_and_open_flags(records: &[ClassRecord]) -> Result<()> {
    let pivotal: Vec<&ClassRecord> = records.iter().filter(|r| r.pivotal).collect();
    let open = records.iter().filter(|r| r.open).count();
    if pivotal.len() != 1 {
        return Err(Error::invariant(format!(
            "{} pivotal classes",
            pivotal.len()
        )));
    }
    if open != 1 {
        return Err(Error::invariant(format!("{open} open classes")));
    }
    if pivotal[0]
        .slopes
        .keys()
        .any(|s| *s != Ratio::from_integer(0))
    {
        return Err(Error::invariant("pivotal class has a nonzero slope"));
    }
    Ok(())
}

/// Index of the class containing each Weyl element.
pub fn class_of(records: &[ClassRecord], n: usize) -> Vec<usize> {
    let mut out = vec![usize::MAX; n];
    for (i, r) in records.iter().enumerate() {
        for &w in &r.members {
            out[w] = i;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::{build_sigma, SigmaSpec};
    use crate::rootdata::{build_root_datum, FactorSpec, LieType, MinusculeCocharacter};
    use crate::weyl::DEFAULT_MAX_WEYL_ORDER;

    fn model(specs: &[FactorSpec], mu: Option<(usize, usize, usize)>) -> Model {
        let rd = build_root_datum(specs).unwrap();
        let mu = match mu {
            Some((f, c, node)) => {
                MinusculeCocharacter::new(&rd, rd.fundamental_coweight(f, c, node).unwrap())
                    .unwrap()
            }
            None => MinusculeCocharacter::trivial(&rd),
        };
        let sigma = build_sigma(&rd, &vec![SigmaSpec::default(); specs.len()]).unwrap();
        Model::new(
            Quintuple::new(rd, mu, sigma, 2).unwrap(),
            DEFAULT_MAX_WEYL_ORDER,
        )
        .unwrap()
    }

    fn gl2() -> Model {
        model(&[FactorSpec::gl(2)], Some((0, 0, 1)))
    }

    #[test]
    fn gl2_orbits() {
        let m = gl2();
        let id = pi_orbits(&m, 0);
        assert_eq!(id.orbits.len(), 2);
        let mut slopes: Vec<Slope> = id.orbits.iter().map(|o| o.slope).collect();
        slopes.sort();
        assert_eq!(
            slopes,
            vec![Ratio::from_integer(-1), Ratio::from_integer(1)]
        );
        let s = pi_orbits(&m, 1);
        assert_eq!(s.orbits.len(), 1);
        assert_eq!((s.orbits[0].m_plus, s.orbits[0].m_minus), (1, 1));
        assert_eq!(s.orbits[0].slope, Ratio::from_integer(0));
        assert!(id.sum_rule_holds() && s.sum_rule_holds());
    }

    #[test]
    fn gl2_w_alpha_and_s() {
        let m = gl2();
        let a = m.eps.phi_n[0];
        assert_eq!(w_alpha(&m, 1, a).unwrap(), 1);
        assert_eq!(w_alpha(&m, 0, a).unwrap(), 1);
        assert!(w_alpha(&m, 0, m.eps.phi_u[0]).is_err());
        assert_eq!(s_value(&m, 0), 0);
        assert_eq!(s_value(&m, 1), 1);
    }

    #[test]
    fn gl2_classes_and_zero_spaces() {
        let m = gl2();
        assert_eq!(script_s_subgroup(&m, 1).unwrap(), vec![0]);
        let classes = enumerate_classes(&m).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0].members, vec![0]);
        assert!(classes[0].open && !classes[0].pivotal);
        assert_eq!(classes[1].members, vec![1]);
        assert!(classes[1].pivotal);
        let z_id = &classes[0].zero_space;
        assert_eq!((z_id.dim_x_fp, z_id.dim_y), (2, 0));
        let z_s = &classes[1].zero_space;
        assert_eq!((z_s.dim_w_span, z_s.dim_y0), (3, 1));
        assert_eq!(m.eps.dim_p(), 3);
    }

    #[test]
    fn trivial_mu() {
        let m = model(&[FactorSpec::new(LieType::B, 3, 1)], None);
        assert_eq!(script_s_subgroup(&m, 5).unwrap().len(), m.group.len());
        let classes = enumerate_classes(&m).unwrap();
        assert_eq!(classes.len(), 1);
        assert!(classes[0].pivotal && classes[0].open);
        assert_eq!(classes[0].s_value, 0);
        let z = zero_space_dims(&m, 3).unwrap();
        assert_eq!(z.dim_w_span, m.eps.dim_g());
        for w in 0..m.group.len() {
            let dec = pi_orbits(&m, w);
            assert!(dec
                .orbits
                .iter()
                .all(|o| o.in_zero && o.slope == Ratio::from_integer(0)));
        }
    }

    #[test]
    fn b4_classes() {
        let m = model(&[FactorSpec::new(LieType::B, 4, 1)], Some((0, 0, 1)));
        assert_eq!(script_s_subgroup(&m, 0).unwrap(), m.parabolic);
        let classes = enumerate_classes(&m).unwrap();
        let s: Vec<usize> = classes.iter().map(|c| c.s_value).collect();
        assert_eq!(s, (0..8).collect::<Vec<_>>());
        assert!(classes.iter().all(|c| c.size() == 48));
        assert!(classes.iter().all(|c| c.dim_orbit == 36 - c.s_value));
        assert_eq!(classes.iter().filter(|c| c.pivotal).count(), 1);
        assert_eq!(classes[7].s_value, 7);
    }

    #[test]
    fn gl3_classes() {
        let m = model(&[FactorSpec::gl(3)], Some((0, 0, 1)));
        let classes = enumerate_classes(&m).unwrap();
        let s: Vec<usize> = classes.iter().map(|c| c.s_value).collect();
        assert_eq!(s, vec![0, 1, 2]);
    }

    #[test]
    fn element_data_is_class_constant() {
        let m = model(&[FactorSpec::new(LieType::C, 3, 1)], Some((0, 0, 3)));
        let classes = enumerate_classes(&m).unwrap();
        let data = element_data(&m);
        for c in &classes {
            for &w in &c.members {
                assert_eq!(data[w].s_value, c.s_value);
                assert_eq!(data[w].slopes, c.slopes);
                assert!(data[w].sum_rule);
            }
        }
    }
}
