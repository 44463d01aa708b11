mod common;

use std::sync::OnceLock;

use fcrystal::classify::{
    class_of, enumerate_classes, pi_orbits, r_class, s_value, zero_space_dims, ClassRecord, Model,
};
use fcrystal::lattice::IntMatrix;
use fcrystal::oracle::census::h_factors;
use fcrystal::oracle::linalg::FMat;
use fcrystal::oracle::{bt1_final_type, twisted_move, FiniteField, TruncationTriple};
use proptest::prelude::*;

struct Prepared {
    model: Model,
    classes: Vec<ClassRecord>,
    class_of: Vec<usize>,
}

fn prepared() -> &'static Vec<Prepared> {
    static CELL: OnceLock<Vec<Prepared>> = OnceLock::new();
    CELL.get_or_init(|| {
        common::suite()
            .into_iter()
            .map(|(_, json)| {
                let model = common::model(&json);
                let classes = enumerate_classes(&model).unwrap();
                let class_of = class_of(&classes, model.group.len());
                Prepared {
                    model,
                    classes,
                    class_of,
                }
            })
            .collect()
    })
}

fn pick() -> impl Strategy<Value = (usize, usize, usize)> {
    let n = prepared().len();
    (
        0..n,
        any::<prop::sample::Index>(),
        any::<prop::sample::Index>(),
    )
        .prop_map(move |(c, a, b)| {
            let g = prepared()[c].model.group.len();
            (c, a.index(g), b.index(g))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn pi_w_commutes_with_negation((c, w, _) in pick()) {
        let m = &prepared()[c].model;
        let pi = m.pi(w);
        for a in 0..m.q.rd.num_roots() {
            prop_assert_eq!(pi[m.q.rd.negate(a)] as usize, m.q.rd.negate(pi[a] as usize));
        }
        // the lattice map sends roots to roots with the same pairing pattern
        let we = m.group.element(w);
        let sm: &IntMatrix = &m.q.sigma.matrix;
        for a in 0..m.q.rd.num_roots() {
            let img = we.matrix.apply(&sm.apply(m.q.rd.root(a)));
            prop_assert_eq!(img.as_slice(), m.q.rd.root(pi[a] as usize));
        }
    }

    #[test]
    fn orbit_statistics((c, w, _) in pick()) {
        let m = &prepared()[c].model;
        let dec = pi_orbits(m, w);
        prop_assert!(dec.sum_rule_holds());
        let total: usize = dec.orbits.iter().map(|o| o.len()).sum();
        prop_assert_eq!(total, m.q.rd.num_roots());
        prop_assert!(s_value(m, w) <= m.eps.dim_n());
        let z = zero_space_dims(m, w).unwrap();
        prop_assert!(z.dim_y0 <= z.dim_y && z.dim_y <= z.dim_w_span);
    }

    #[test]
    fn relation_is_an_equivalence((c, w1, w2) in pick()) {
        let p = &prepared()[c];
        let m = &p.model;
        let class1 = r_class(m, w1).unwrap();
        prop_assert!(class1.contains(&w1));
        let class2 = r_class(m, w2).unwrap();
        // symmetric, and the computed classes are equal or disjoint
        prop_assert_eq!(class1.contains(&w2), class2.contains(&w1));
        if class1.contains(&w2) {
            prop_assert_eq!(&class1, &class2);
        } else {
            prop_assert!(class1.iter().all(|x| !class2.contains(x)));
        }
        prop_assert_eq!(&p.classes[p.class_of[w1]].members, &class1);
    }

    #[test]
    fn twisted_moves_preserve_final_type(
        seed in prop::collection::vec(any::<prop::sample::Index>(), 4),
    ) {
        let ff = FiniteField::new(2, 2).unwrap();
        let (us, ls, ns) = h_factors(&ff, 2, 1);
        let gs = fcrystal::oracle::census::gl_elements(&ff, 2);
        let g: &FMat = seed[0].get(&gs);
        let moved = twisted_move(&ff, g, seed[1].get(&us), seed[2].get(&ls), seed[3].get(&ns));
        let t0 = bt1_final_type(&ff, &TruncationTriple::new(&ff, 2, 1, g.clone()).unwrap()).unwrap();
        let t1 = bt1_final_type(&ff, &TruncationTriple::new(&ff, 2, 1, moved).unwrap()).unwrap();
        prop_assert_eq!(t0, t1);
    }

    #[test]
    fn field_matrix_inverse(entries in prop::collection::vec(0u8..9, 9)) {
        let ff = FiniteField::new(3, 2).unwrap();
        let a = FMat::from_entries(3, entries);
        match a.inverse(&ff) {
            Some(inv) => {
                prop_assert_eq!(a.mul(&ff, &inv), FMat::identity(3));
                prop_assert_eq!(a.rank(&ff), 3);
            }
            None => prop_assert!(a.rank(&ff) < 3),
        }
    }
}

#[test]
fn generation_and_stabilizer_agree_up_to_rank_five() {
    for json in [
        r#"{"p":2,"factors":[{"lie_type":"B","rank":5}],"mu":[["w1"]]}"#,
        r#"{"p":2,"factors":[{"lie_type":"D","rank":5}],"mu":[["w5"]]}"#,
        r#"{"p":2,"factors":[{"lie_type":"A","rank":5}],"mu":[["w3"]]}"#,
        r#"{"p":2,"factors":[{"lie_type":"C","rank":4}],"mu":[["wn"]]}"#,
    ] {
        // Model::new fails unless the two descriptions of W_P coincide
        let m = common::model(json);
        assert_eq!(m.group.len() % m.parabolic.len(), 0);
    }
}

#[test]
fn reflections_permute_roots_up_to_rank_six() {
    for (t, n) in [("A", 6), ("B", 6), ("C", 6), ("D", 6), ("D", 4)] {
        let json = format!(r#"{{"p":2,"factors":[{{"lie_type":"{t}","rank":{n}}}]}}"#);
        let c = fcrystal::cli::parse_config(&json).unwrap();
        c.quintuple.rd.validate().unwrap();
    }
}
