#![allow(dead_code)]

use std::collections::HashMap;

use fcrystal::classify::Model;
use fcrystal::cli::{build_model, parse_config};

pub fn model(json: &str) -> Model {
    build_model(&parse_config(json).expect("config parses")).expect("model builds")
}

pub fn b_series(n: usize) -> Model {
    model(&format!(
        r#"{{"p":2,"factors":[{{"lie_type":"B","rank":{n}}}],"mu":[["w1"]]}}"#
    ))
}

pub fn gl(r: usize, d: usize) -> Model {
    model(&format!(
        r#"{{"p":2,"factors":[{{"lie_type":"GL","rank":{r}}}],"mu":[["w{d}"]]}}"#
    ))
}

/// Configurations on which all structural identities are checked.
pub fn suite() -> Vec<(&'static str, String)> {
    let mut v = Vec::new();
    for n in 2..=4 {
        v.push((
            "B_n w1",
            format!(r#"{{"p":2,"factors":[{{"lie_type":"B","rank":{n}}}],"mu":[["w1"]]}}"#),
        ));
    }
    for n in 2..=3 {
        v.push((
            "C_n wn",
            format!(r#"{{"p":2,"factors":[{{"lie_type":"C","rank":{n}}}],"mu":[["wn"]]}}"#),
        ));
    }
    v.push((
        "D_4 w1 split",
        r#"{"p":2,"factors":[{"lie_type":"D","rank":4}],"mu":[["w1"]]}"#.to_string(),
    ));
    v.push((
        "D_4 w3 fork swap",
        r#"{"p":2,"factors":[{"lie_type":"D","rank":4,"twist":"diagram"}],"mu":[["w3"]]}"#
            .to_string(),
    ));
    v.push((
        "A_2 two copies",
        r#"{"p":2,"factors":[{"lie_type":"A","rank":2,"copies":2}],"mu":[["w1","trivial"]]}"#
            .to_string(),
    ));
    for (r, d) in [(2, 1), (3, 1), (4, 2)] {
        v.push((
            "GL_r shadow",
            format!(r#"{{"p":2,"factors":[{{"lie_type":"GL","rank":{r}}}],"mu":[["w{d}"]]}}"#),
        ));
    }
    v
}

/// Epsilon-basis coordinates of a root given in simple-root coordinates,
/// with alpha_i = e_i - e_{i+1} and alpha_n = e_n.
pub fn eps_coords(c: &[i64]) -> Vec<i64> {
    (0..c.len())
        .map(|k| c[k] - if k > 0 { c[k - 1] } else { 0 })
        .collect()
}

/// The permutation of {0, ..., 2n} (0 fixed) attached to a Weyl element:
/// b_i carries e_i and b_{n+i} carries -e_i.
pub fn signed_perm(m: &Model, w: usize) -> Vec<usize> {
    let rd = &m.q.rd;
    let n = rd.rank();
    let by_eps: HashMap<Vec<i64>, usize> = (0..rd.num_roots())
        .map(|i| (eps_coords(rd.root(i)), i))
        .collect();
    let mut out = vec![0; 2 * n + 1];
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        let img = eps_coords(rd.root(m.group.element(w).act_root(by_eps[&e])));
        let j = img.iter().position(|&x| x != 0).unwrap();
        if img[j] == 1 {
            out[i + 1] = j + 1;
            out[n + i + 1] = n + j + 1;
        } else {
            out[i + 1] = n + j + 1;
            out[n + i + 1] = j + 1;
        }
    }
    out
}

/// `w_{j,eps}`: `s -> s+1` for `s < j`, fixes `s > j`, and sends `(j, n+j)`
/// to `(1, n+1)` or `(n+1, 1)`.
pub fn w_j(n: usize, j: usize, eps: i32) -> Vec<usize> {
    let mut w: Vec<usize> = (0..=2 * n).collect();
    for s in 1..j {
        w[s] = s + 1;
        w[n + s] = n + s + 1;
    }
    if eps == 1 {
        w[j] = 1;
        w[n + j] = n + 1;
    } else {
        w[j] = n + 1;
        w[n + j] = 1;
    }
    w
}

pub fn index_of(m: &Model) -> HashMap<Vec<usize>, usize> {
    (0..m.group.len()).map(|w| (signed_perm(m, w), w)).collect()
}
