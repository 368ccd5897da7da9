//! Human and JSON renderings of a Ξ computation.

use serde::Serialize;
use serde_json::Value;
use xi_core::coloring::DihedralPermutation;
use xi_core::matrix::Matrix;
use xi_core::Rat;

use crate::problem::Outcome;
use crate::table::{rational_json, table_to_file, TableFile};

#[derive(Debug, Serialize)]
pub struct MonodromyRecord {
    pub curve: String,
    /// Cycle notation with the first transposition acting first.
    pub action: String,
    /// The same word multiplied with the last transposition acting first.
    pub word_product: String,
    pub images: Vec<u8>,
    pub c0_image: u8,
}

#[derive(Debug, Serialize)]
pub struct JsonReport {
    pub p: u32,
    pub provider: String,
    pub h1: Option<Vec<String>>,
    pub h1_source: &'static str,
    pub c0: u8,
    pub monodromies: Vec<MonodromyRecord>,
    pub basis: Vec<String>,
    pub m: Vec<Vec<Value>>,
    pub sigma_m: i64,
    pub sigma_w: i64,
    pub self_pairing: i64,
    pub term1: Value,
    pub term2: i64,
    pub xi: Value,
    pub verdict: &'static str,
    pub warnings: Vec<String>,
    pub blocks: TableFile,
}

fn monodromy_record(curve: &str, perm: &DihedralPermutation, c0: u8) -> MonodromyRecord {
    MonodromyRecord {
        curve: curve.to_string(),
        action: perm.cycle_notation(),
        word_product: perm.inverse().cycle_notation(),
        images: perm.images().to_vec(),
        c0_image: perm.apply(c0),
    }
}

fn rational_rows(m: &Matrix<Rat>) -> Vec<Vec<Value>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(rational_json).collect())
        .collect()
}

pub fn json_report(o: &Outcome) -> JsonReport {
    let r = &o.report;
    JsonReport {
        p: r.p,
        provider: o.provider.clone(),
        h1: r
            .h1
            .as_ref()
            .map(|v| v.iter().map(|x| x.to_string()).collect()),
        h1_source: o.h1_source.as_str(),
        c0: o.c0,
        monodromies: r
            .monodromies
            .iter()
            .map(|(c, m)| monodromy_record(c, m, o.c0))
            .collect(),
        basis: r.basis.iter().map(|b| b.to_string()).collect(),
        m: rational_rows(&r.m),
        sigma_m: r.sigma_m,
        sigma_w: r.sigma_w,
        self_pairing: r.self_pairing,
        term1: rational_json(&r.term1),
        term2: r.term2,
        xi: rational_json(&r.xi),
        verdict: r.verdict.as_str(),
        warnings: r.warnings.clone(),
        blocks: table_to_file(&o.blocks),
    }
}

fn format_matrix(m: &Matrix<Rat>) -> String {
    let rows = m.to_rows();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for r in &cells {
        let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str("  [");
        out.push_str(&line.join(" "));
        out.push_str("]\n");
    }
    out
}

pub fn human_report(o: &Outcome) -> String {
    let r = &o.report;
    let mut s = String::new();
    s.push_str(&format!("p = {}\n", r.p));
    s.push_str(&format!("provider: {}\n", o.provider));
    match &r.h1 {
        Some(v) if v.is_empty() => {
            s.push_str(&format!("H1 of cover: 0 ({})\n", o.h1_source.as_str()))
        }
        Some(v) => {
            let f: Vec<String> = v.iter().map(|x| format!("Z/{x}")).collect();
            s.push_str(&format!(
                "H1 of cover: {} ({})\n",
                f.join(" + "),
                o.h1_source.as_str()
            ));
        }
        None => s.push_str("H1 of cover: not known\n"),
    }
    s.push_str(&format!("c0 = {}\n", o.c0));
    for (c, m) in &r.monodromies {
        s.push_str(&format!(
            "monodromy {c}: {} (c0 -> {})\n",
            m.cycle_notation(),
            m.apply(o.c0)
        ));
    }
    let basis: Vec<String> = r.basis.iter().map(|b| b.to_string()).collect();
    s.push_str(&format!("basis: {{{}}}\n", basis.join(", ")));
    s.push_str("M =\n");
    s.push_str(&format_matrix(&r.m));
    s.push_str(&format!("sigma(M) = {}\n", r.sigma_m));
    s.push_str(&format!("sigma(W) = {}\n", r.sigma_w));
    s.push_str(&format!("L_V(beta, beta) = {}\n", r.self_pairing));
    s.push_str(&format!("linking term = {}\n", r.term1));
    s.push_str(&format!("signature sum = {}\n", r.term2));
    s.push_str(&format!("Xi = {}\n", r.xi));
    s.push_str(&format!("verdict: {}\n", r.verdict.as_str()));
    for w in &r.warnings {
        s.push_str(&format!("warning: {w}\n"));
    }
    s
}
