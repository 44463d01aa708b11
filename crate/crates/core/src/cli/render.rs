//! Class tables as CSV, JSON and Markdown.

use std::fmt::Write;

use serde::Serialize;

use crate::classify::{ClassRecord, Model};
use crate::weyl::reduced_words;

/// Fixed CSV column order.
pub const COLUMNS: [&str; 13] = [
    "class_id",
    "representative",
    "s_value",
    "dim_orbit",
    "dim_stratum_universal",
    "class_size",
    "slopes",
    "pivotal",
    "open",
    "dim_x_fp",
    "dim_y",
    "dim_y0",
    "dim_w_span",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Md,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlopeEntry {
    pub slope: String,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub class_id: usize,
    pub representative: String,
    pub s_value: usize,
    pub dim_orbit: usize,
    pub dim_stratum_universal: usize,
    pub class_size: usize,
    pub slopes: Vec<SlopeEntry>,
    pub pivotal: bool,
    pub open: bool,
    pub dim_x_fp: usize,
    pub dim_y: usize,
    pub dim_y0: usize,
    pub dim_w_span: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassTable {
    pub weyl_order: usize,
    pub parabolic_order: usize,
    pub dim_g: usize,
    pub dim_n: usize,
    pub classes: Vec<ClassRow>,
}

/// Reduced word over Bourbaki simple reflections per copy, copies separated
/// by `|`, `e` for an empty word.
pub fn word_string(m: &Model, w: usize) -> String {
    reduced_words(&m.q.rd, m.group.element(w))
        .iter()
        .map(|word| {
            if word.is_empty() {
                "e".to_string()
            } else {
                word.iter().map(|i| format!("s{i}")).collect()
            }
        })
        .collect::<Vec<_>>()
        .join("|")
}

pub fn class_table(m: &Model, records: &[ClassRecord]) -> ClassTable {
    let classes = records
        .iter()
        .map(|r| ClassRow {
            class_id: r.id,
            representative: word_string(m, r.representative),
            s_value: r.s_value,
            dim_orbit: r.dim_orbit,
            dim_stratum_universal: r.dim_stratum_universal,
            class_size: r.size(),
            slopes: r
                .slopes
                .iter()
                .map(|(s, &k)| SlopeEntry {
                    slope: s.to_string(),
                    multiplicity: k,
                })
                .collect(),
            pivotal: r.pivotal,
            open: r.open,
            dim_x_fp: r.zero_space.dim_x_fp,
            dim_y: r.zero_space.dim_y,
            dim_y0: r.zero_space.dim_y0,
            dim_w_span: r.zero_space.dim_w_span,
        })
        .collect();
    ClassTable {
        weyl_order: m.group.len(),
        parabolic_order: m.parabolic.len(),
        dim_g: m.eps.dim_g(),
        dim_n: m.eps.dim_n(),
        classes,
    }
}

fn slope_cell(slopes: &[SlopeEntry]) -> String {
    slopes
        .iter()
        .map(|e| format!("{}*{}", e.slope, e.multiplicity))
        .collect::<Vec<_>>()
        .join(";")
}

fn cells(r: &ClassRow) -> Vec<String> {
    vec![
        r.class_id.to_string(),
        r.representative.clone(),
        r.s_value.to_string(),
        r.dim_orbit.to_string(),
        r.dim_stratum_universal.to_string(),
        r.class_size.to_string(),
        slope_cell(&r.slopes),
        r.pivotal.to_string(),
        r.open.to_string(),
        r.dim_x_fp.to_string(),
        r.dim_y.to_string(),
        r.dim_y0.to_string(),
        r.dim_w_span.to_string(),
    ]
}

pub fn render(table: &ClassTable, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str(&COLUMNS.join(","));
            out.push('\n');
            for r in &table.classes {
                out.push_str(&cells(r).join(","));
                out.push('\n');
            }
        }
        Format::Json => {
            out = serde_json::to_string_pretty(table).expect("class table serializes");
            out.push('\n');
        }
        Format::Md => {
            let _ = writeln!(out, "| {} |", COLUMNS.join(" | "));
            let _ = writeln!(out, "|{}", "---|".repeat(COLUMNS.len()));
            for r in &table.classes {
                let _ = writeln!(out, "| {} |", cells(r).join(" | "));
            }
        }
    }
    out
}
