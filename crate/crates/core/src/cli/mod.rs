//! Command-line front end: `classes`, `verify` and `oracle`.

pub mod config;
pub mod render;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bruhat::{
    bruhat_records, length_formula_holds, length_multiset_match, s_multiset_match,
};
use crate::classify::{class_of, element_data, enumerate_classes, zero_space_dims, Model};
use crate::error::{Error, Result};
use crate::oracle::census::{gl_point_counts, MAX_ORBIT_WORK};
use crate::oracle::{
    census_counts, point_count_check, predicted_counts, twisted_orbit_enumeration, type_census,
    FiniteField,
};
pub use config::{parse_config, Config, Limits};
pub use render::{class_table, render, ClassTable, Format};

#[derive(Debug, Parser)]
#[command(
    name = "fcrystal",
    version,
    about = "Classification tables for Shimura F-crystals mod p"
)]
pub struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the table of equivalence classes.
    Classes(CommonArgs),
    /// Check the structural identities; exit 1 if any fails.
    Verify(CommonArgs),
    /// Finite-field censuses for a split GL_r configuration.
    Oracle {
        #[command(flatten)]
        common: CommonArgs,
        /// Field degree: the census runs over F_{p^m}.
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[arg(long)]
    pub config: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Overrides `limits.max_weyl_order` from the config.
    #[arg(long)]
    pub max_weyl_order: Option<u128>,
}

impl CommonArgs {
    fn load(&self) -> Result<Config> {
        let mut c = Config::from_path(&self.config)?;
        if let Some(n) = self.max_weyl_order {
            if n == 0 {
                return Err(Error::config("--max-weyl-order", "must be positive"));
            }
            c.limits.max_weyl_order = n;
        }
        Ok(c)
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(p) => std::fs::write(p, text)
                .map_err(|e| Error::config("--out", format!("{}: {e}", p.display()))),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())
                    .and_then(|_| out.flush())
                    .map_err(|e| Error::input(format!("writing output: {e}")))
            }
        }
    }
}

pub fn build_model(c: &Config) -> Result<Model> {
    Model::new(c.quintuple.clone(), c.limits.max_weyl_order)
}

pub fn cmd_classes(c: &Config) -> Result<ClassTable> {
    let m = build_model(c)?;
    let records = enumerate_classes(&m)?;
    Ok(class_table(&m, &records))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name,
        passed,
        detail: detail.into(),
    }
}

/// Runs every structural identity on a model. An invariant failure
/// inside class enumeration is reported as a failed check.
pub fn run_checks(m: &Model) -> Vec<Check> {
    let mut out = Vec::new();
    let n = m.group.len();
    let index = m.index();
    let records = match enumerate_classes(m) {
        Ok(r) => r,
        Err(Error::InvariantViolation(msg)) => {
            out.push(check("class_enumeration", false, msg));
            return out;
        }
        Err(e) => {
            out.push(check("class_enumeration", false, e.to_string()));
            return out;
        }
    };
    out.push(check(
        "class_count",
        records.len() == index,
        format!("{} classes, [W_G:W_P] = {index}", records.len()),
    ));
    let total: usize = records.iter().map(|r| r.size()).sum();
    let sizes_ok = records.iter().all(|r| r.size() == m.parabolic.len()) && total == n;
    out.push(check(
        "class_sizes",
        sizes_ok,
        format!("|W_P| = {}, |W_G| = {n}", m.parabolic.len()),
    ));

    let data = element_data(m);
    let sum_rule = data.iter().all(|d| d.sum_rule);
    out.push(check("sum_rule", sum_rule, format!("{n} elements")));

    let pivotal = records.iter().filter(|r| r.pivotal).count();
    let open = records.iter().filter(|r| r.open).count();
    out.push(check(
        "pivotal_open_unique",
        pivotal == 1 && open == 1,
        format!("{pivotal} pivotal, {open} open"),
    ));

    let cls = class_of(&records, n);
    let constant = (0..n).all(|w| {
        let r = &records[cls[w]];
        data[w].s_value == r.s_value && data[w].slopes == r.slopes
    });
    out.push(check("class_constancy", constant, "S and slopes"));

    let mut closed = true;
    let mut formula = true;
    for w in 0..n {
        match zero_space_dims(m, w) {
            Ok(z) => {
                formula &=
                    z.dim_y == data[w].s_value && z.dim_y0 <= z.dim_y && z.dim_y <= z.dim_w_span;
            }
            Err(_) => closed = false,
        }
    }
    out.push(check("phi_w_closed", closed, format!("{n} elements")));
    out.push(check(
        "zero_space_dims",
        formula,
        "dim_y = S, dim_y0 <= dim_y <= dim_w_span",
    ));

    let brecs = bruhat_records(m);
    out.push(check(
        "length_formula",
        length_formula_holds(m, &brecs),
        "S^cl(min rep) = |Phi^+| - l([w])",
    ));
    let mm = s_multiset_match(&records, &brecs);
    out.push(match mm {
        Ok(mm) => check("multiset_match", mm.holds, "{S} = {S^cl - d_u}"),
        Err(e) => check("multiset_match", false, e.to_string()),
    });
    out.push(check(
        "length_multiset",
        length_multiset_match(m, &records, &brecs),
        "{S} = {|Phi_N| - l([w])}",
    ));
    out
}

pub fn cmd_verify(c: &Config) -> Result<Vec<Check>> {
    Ok(run_checks(&build_model(c)?))
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitCheck {
    pub orbits: usize,
    pub coarsens: bool,
    pub totals_match: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub r: usize,
    pub d: usize,
    pub p: u32,
    pub m: u32,
    pub s_values: Vec<usize>,
    pub census: Vec<u128>,
    pub predicted: Vec<u128>,
    pub census_match: bool,
    pub point_count: bool,
    /// Present when orbit enumeration is small enough to run.
    pub orbit_check: Option<OrbitCheck>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.census_match
            && self.point_count
            && self
                .orbit_check
                .as_ref()
                .is_none_or(|o| o.coarsens && o.totals_match)
    }
}

pub fn cmd_oracle(c: &Config, m: u32) -> Result<OracleReport> {
    let (r, d) = c.gl_shadow().ok_or_else(|| {
        Error::input("the oracle needs a single split GL_r factor with mu of 0/1 entries")
    })?;
    let p = u32::try_from(c.quintuple.p).map_err(|_| Error::input("p too large"))?;
    let ff = FiniteField::new(p, m)?;
    let model = build_model(c)?;
    let records = enumerate_classes(&model)?;
    let s_values: Vec<usize> = records.iter().map(|r| r.s_value).collect();
    // buckets are matched to classes by sorted counts, which needs distinct S
    let distinct: std::collections::BTreeSet<usize> = s_values.iter().copied().collect();
    if distinct.len() != s_values.len() {
        return Err(Error::invariant(
            "two classes share an S value; census matching is ambiguous",
        ));
    }
    let q = ff.order() as u128;
    let census = type_census(&ff, r, d, c.limits.max_oracle_points)?;
    let counts = census_counts(&census);
    let predicted = predicted_counts(r, d, q, &s_values);
    let (g, h) = gl_point_counts(r, d, q);
    let orbit_check = if g * h <= MAX_ORBIT_WORK {
        let part = twisted_orbit_enumeration(&ff, r, d)?;
        Some(OrbitCheck {
            orbits: part.orbits.len(),
            coarsens: part.coarsens,
            totals_match: part.type_totals == census,
        })
    } else {
        None
    };
    Ok(OracleReport {
        r,
        d,
        p,
        m,
        census_match: counts == predicted,
        point_count: point_count_check(r, d, &ff, &s_values),
        s_values,
        census: counts,
        predicted,
        orbit_check,
    })
}

fn checks_text(checks: &[Check]) -> String {
    checks
        .iter()
        .map(|c| {
            format!(
                "{} {}: {}\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )
        })
        .collect()
}

fn oracle_text(r: &OracleReport) -> String {
    let mut s = format!(
        "GL_{} d={} over F_{}^{}\nS values: {:?}\ncensus: {:?}\npredicted: {:?}\n",
        r.r, r.d, r.p, r.m, r.s_values, r.census, r.predicted
    );
    let flag = |b: bool| if b { "PASS" } else { "FAIL" };
    s += &format!(
        "{} census_match\n{} point_count\n",
        flag(r.census_match),
        flag(r.point_count)
    );
    match &r.orbit_check {
        Some(o) => {
            s += &format!(
                "{} orbit_coarsening: {} orbits\n{} orbit_totals\n",
                flag(o.coarsens),
                o.orbits,
                flag(o.totals_match)
            )
        }
        None => s += "SKIP orbit_coarsening: too large\n",
    }
    s
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Classes(a) => {
            let table = cmd_classes(&a.load()?)?;
            a.emit(&render(&table, a.format))?;
            Ok(0)
        }
        Command::Verify(a) => {
            let checks = cmd_verify(&a.load()?)?;
            let text = match a.format {
                Format::Json => to_json(&checks),
                _ => checks_text(&checks),
            };
            a.emit(&text)?;
            if let Some(first) = checks.iter().find(|c| !c.passed) {
                eprintln!("invariant failed: {}", first.name);
                return Ok(1);
            }
            Ok(0)
        }
        Command::Oracle { common, m } => {
            let report = cmd_oracle(&common.load()?, *m)?;
            let text = match common.format {
                Format::Json => to_json(&report),
                _ => oracle_text(&report),
            };
            common.emit(&text)?;
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

/// Runs the tool and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: thread pool: {e}");
            return 2;
        }
    }
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
