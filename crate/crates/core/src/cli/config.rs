//! JSON configuration: factors, cocharacter, Frobenius, limits.
//!
//! ```json
//! {
//!   "p": 2,
//!   "factors": [{"lie_type": "B", "rank": 4, "copies": 1, "twist": "none"}],
//!   "mu": [["w1"]],
//!   "limits": {"max_weyl_order": 1000000, "max_oracle_points": 200000}
//! }
//! ```
//!
//! `lie_type` is one of `A`, `B`, `C`, `D`, or `GL` (then `rank` is `r` and
//! the factor is `GL_r` with its central direction). `mu` is either a flat
//! integer vector of full lattice rank, or one list per factor with one entry
//! per copy; an entry is `"trivial"`, `"wK"` (fundamental coweight of node
//! `K`, 1-based Bourbaki), `"wn"` (last node), or an integer vector of the
//! copy's coordinates. Each factor may set `"rotate": false` to keep its
//! copies fixed by the Frobenius. A raw `"sigma"` matrix on the character
//! lattice overrides the factor-wise description.

use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::frobenius::{build_sigma, is_prime, FrobeniusDatum, Quintuple, SigmaSpec, Twist};
use crate::lattice::{IntMatrix, Vector};
use crate::oracle::census::DEFAULT_MAX_ORACLE_POINTS;
use crate::rootdata::{build_root_datum, FactorSpec, LieType, MinusculeCocharacter, RootDatum};
use crate::weyl::DEFAULT_MAX_WEYL_ORDER;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    p: u64,
    factors: Vec<RawFactor>,
    #[serde(default)]
    mu: Option<Value>,
    #[serde(default)]
    sigma: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    limits: Limits,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFactor {
    lie_type: String,
    rank: usize,
    #[serde(default = "one")]
    copies: usize,
    #[serde(default)]
    twist: Twist,
    #[serde(default = "yes")]
    rotate: bool,
}

fn one() -> usize {
    1
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Limits {
    pub max_weyl_order: u128,
    pub max_oracle_points: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_weyl_order: DEFAULT_MAX_WEYL_ORDER,
            max_oracle_points: DEFAULT_MAX_ORACLE_POINTS,
        }
    }
}

/// A validated configuration.
#[derive(Debug, Clone)]
pub struct Config {
    pub quintuple: Quintuple,
    pub limits: Limits,
}

impl Config {
    pub fn from_path(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::config("$", format!("cannot read {}: {e}", path.display())))?;
        parse_config(&text)
    }

    /// `(r, d)` when the datum is a single split `GL_r` with `mu` conjugate
    /// to `(1^d, 0^(r-d))`.
    pub fn gl_shadow(&self) -> Option<(usize, usize)> {
        let q = &self.quintuple;
        let f = match q.rd.factors() {
            [f] if f.gl && f.copies == 1 => f,
            _ => return None,
        };
        if !q.sigma.is_identity() {
            return None;
        }
        let mu = q.mu.vector();
        if !mu.iter().all(|&x| x == 0 || x == 1) {
            return None;
        }
        Some((f.rank + 1, mu.iter().filter(|&&x| x == 1).count()))
    }
}

fn factor_spec(i: usize, f: &RawFactor) -> Result<FactorSpec> {
    let path = |field: &str| format!("factors[{i}].{field}");
    if f.rank == 0 {
        return Err(Error::config(path("rank"), "rank must be at least 1"));
    }
    if f.copies == 0 {
        return Err(Error::config(path("copies"), "copies must be at least 1"));
    }
    if f.lie_type == "GL" || f.lie_type == "gl" {
        if f.rank < 2 {
            return Err(Error::config(path("rank"), "GL_r needs r >= 2"));
        }
        let mut s = FactorSpec::gl(f.rank);
        s.copies = f.copies;
        return Ok(s);
    }
    let t = LieType::parse(&f.lie_type).ok_or_else(|| {
        Error::config(
            path("lie_type"),
            format!("unknown type `{}` (expected A, B, C, D or GL)", f.lie_type),
        )
    })?;
    if t == LieType::D && f.rank < 4 {
        return Err(Error::config(path("rank"), "type D needs rank >= 4"));
    }
    Ok(FactorSpec::new(t, f.rank, f.copies))
}

fn int_vector(v: &Value, path: &str) -> Result<Vector> {
    v.as_array()
        .ok_or_else(|| Error::config(path, "expected an integer vector"))?
        .iter()
        .enumerate()
        .map(|(k, x)| {
            x.as_i64()
                .ok_or_else(|| Error::config(format!("{path}[{k}]"), "expected an integer"))
        })
        .collect()
}

fn copy_component(
    rd: &RootDatum,
    factor: usize,
    copy: usize,
    v: &Value,
    path: &str,
) -> Result<Vector> {
    let f = &rd.factors()[factor];
    let mut out = vec![0; rd.rank()];
    match v {
        Value::String(s) if s == "trivial" => {}
        Value::String(s) if s.starts_with('w') => {
            let node = match &s[1..] {
                "n" => f.rank,
                k => k
                    .parse()
                    .map_err(|_| Error::config(path, format!("bad node name `{s}`")))?,
            };
            out = rd
                .fundamental_coweight(factor, copy, node)
                .map_err(|e| Error::config(path, e.to_string()))?;
        }
        Value::String(s) => {
            return Err(Error::config(
                path,
                format!("unknown cocharacter name `{s}`"),
            ))
        }
        _ => {
            let block = int_vector(v, path)?;
            if block.len() != f.block_dim {
                return Err(Error::config(
                    path,
                    format!("expected {} coordinates, got {}", f.block_dim, block.len()),
                ));
            }
            out[f.coords(copy)].copy_from_slice(&block);
        }
    }
    Ok(out)
}

fn parse_mu(rd: &RootDatum, v: Option<&Value>) -> Result<Vector> {
    let Some(v) = v else {
        return Ok(vec![0; rd.rank()]);
    };
    let arr = v
        .as_array()
        .ok_or_else(|| Error::config("mu", "expected a list"))?;
    if arr.iter().all(Value::is_i64) {
        let mu = int_vector(v, "mu")?;
        if mu.len() != rd.rank() {
            return Err(Error::config(
                "mu",
                format!("expected {} coordinates, got {}", rd.rank(), mu.len()),
            ));
        }
        return Ok(mu);
    }
    if arr.len() != rd.factors().len() {
        return Err(Error::config(
            "mu",
            format!("expected one entry per factor ({})", rd.factors().len()),
        ));
    }
    let mut mu = vec![0; rd.rank()];
    for (fi, entry) in arr.iter().enumerate() {
        let copies = rd.factors()[fi].copies;
        let path = format!("mu[{fi}]");
        let list = entry
            .as_array()
            .ok_or_else(|| Error::config(&path, "expected one entry per copy"))?;
        if list.len() != copies {
            return Err(Error::config(
                &path,
                format!("expected {copies} entries, got {}", list.len()),
            ));
        }
        for (c, item) in list.iter().enumerate() {
            let part = copy_component(rd, fi, c, item, &format!("{path}[{c}]"))?;
            for (x, y) in mu.iter_mut().zip(part) {
                *x += y;
            }
        }
    }
    Ok(mu)
}

pub fn parse_config(text: &str) -> Result<Config> {
    let raw: RawConfig =
        serde_json::from_str(text).map_err(|e| Error::config("$", e.to_string()))?;
    if !is_prime(raw.p) {
        return Err(Error::config("p", format!("{} is not prime", raw.p)));
    }
    if raw.limits.max_weyl_order == 0 || raw.limits.max_oracle_points == 0 {
        return Err(Error::config("limits", "limits must be positive"));
    }
    if raw.factors.is_empty() {
        return Err(Error::config("factors", "at least one factor is required"));
    }
    let specs = raw
        .factors
        .iter()
        .enumerate()
        .map(|(i, f)| factor_spec(i, f))
        .collect::<Result<Vec<_>>>()?;
    let rd = build_root_datum(&specs).map_err(|e| Error::config("factors", e.to_string()))?;
    let mu = parse_mu(&rd, raw.mu.as_ref())?;
    let mu = MinusculeCocharacter::new(&rd, mu).map_err(|e| Error::config("mu", e.to_string()))?;
    let sigma = match &raw.sigma {
        Some(rows) => {
            let m = IntMatrix::from_rows(rows)
                .ok_or_else(|| Error::config("sigma", "expected a square matrix"))?;
            FrobeniusDatum::from_matrix(&rd, m)
                .map_err(|e| Error::config("sigma", e.to_string()))?
        }
        None => {
            let sigma_specs: Vec<SigmaSpec> = raw
                .factors
                .iter()
                .map(|f| SigmaSpec {
                    rotate: f.rotate,
                    twist: f.twist,
                })
                .collect();
            build_sigma(&rd, &sigma_specs).map_err(|e| Error::config("factors", e.to_string()))?
        }
    };
    let quintuple = Quintuple::new(rd, mu, sigma, raw.p)?;
    Ok(Config {
        quintuple,
        limits: raw.limits,
    })
}
