//! Serialization of sweeps and reports.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::Path;

use diracband_core::branches::{Branch, BranchPoint, StateClass};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const CSV_HEADER: [&str; 7] = ["mu", "E", "j", "p_sign", "state_class", "branch_id", "residual"];

/// 17 significant digits, enough to round-trip any f64.
pub fn fmt17(x: f64) -> String {
    // fold −0 into 0 so the output does not depend on how a zero was reached
    format!("{:.16e}", x + 0.0)
}

/// Writes points as CSV, sorted by (branch_id, μ).
pub fn write_sweep_csv<W: Write>(out: W, points: &[BranchPoint], two_j: u32) -> Result<(), CliError> {
    let mut rows = points.to_vec();
    rows.sort_by(|a, b| a.branch_id.cmp(&b.branch_id).then(a.mu.total_cmp(&b.mu)));
    let j = if two_j % 2 == 1 { format!("{}.5", two_j / 2) } else { (two_j / 2).to_string() };
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for p in &rows {
        w.write_record([
            fmt17(p.mu),
            fmt17(p.energy),
            j.clone(),
            p.p_sign.to_string(),
            p.state_class.as_str().to_string(),
            p.branch_id.to_string(),
            fmt17(p.residual),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Deserialize)]
struct Row {
    mu: f64,
    #[serde(rename = "E")]
    energy: f64,
    #[allow(dead_code)]
    j: f64,
    p_sign: i8,
    state_class: String,
    branch_id: usize,
    residual: f64,
}

/// Reads a sweep CSV back into branches ordered by id, each ordered by μ.
pub fn read_sweep_csv<R: Read>(input: R) -> Result<Vec<Branch>, CliError> {
    let mut reader = csv::Reader::from_reader(input);
    let headers = reader.headers()?.clone();
    if headers.iter().ne(CSV_HEADER) {
        return Err(CliError::Config(format!("unexpected CSV header {:?}, want {:?}", headers, CSV_HEADER)));
    }
    let mut by_id: BTreeMap<usize, Branch> = BTreeMap::new();
    for (line, row) in reader.deserialize::<Row>().enumerate() {
        let row = row?;
        let state_class = StateClass::parse(&row.state_class)
            .ok_or_else(|| CliError::Config(format!("row {}: unknown state_class {:?}", line + 2, row.state_class)))?;
        let branch = by_id.entry(row.branch_id).or_insert_with(|| Branch { id: row.branch_id, p_sign: row.p_sign, points: Vec::new() });
        if branch.p_sign != row.p_sign {
            return Err(CliError::Config(format!("row {}: branch {} changes p_sign", line + 2, row.branch_id)));
        }
        branch.points.push(BranchPoint {
            mu: row.mu,
            energy: row.energy,
            state_class,
            p_sign: row.p_sign,
            residual: row.residual,
            branch_id: row.branch_id,
        });
    }
    let mut branches: Vec<Branch> = by_id.into_values().collect();
    for b in &mut branches {
        b.points.sort_by(|a, c| a.mu.total_cmp(&c.mu));
    }
    Ok(branches)
}

/// gnuplot script drawing every branch of `csv_name` together with E = ±μ.
pub fn gnuplot_script(csv_name: &str, branch_ids: &[usize], title: &str) -> String {
    let mut s = String::new();
    s.push_str("set datafile separator ','\n");
    s.push_str(&format!("set title \"{}\"\n", title.replace('"', "'")));
    s.push_str("set xlabel 'mu'\nset ylabel 'E'\nset key off\nset grid\n");
    s.push_str("plot x with lines dashtype 2 lc rgb 'gray', -x with lines dashtype 2 lc rgb 'gray'");
    for id in branch_ids {
        s.push_str(&format!(
            ", \\\n     '{csv_name}' every ::1 using 1:($6 == {id} ? $2 : NaN) with lines lw 1.5"
        ));
    }
    s.push('\n');
    s
}

/// Pretty JSON followed by a newline.
pub fn write_json<W: Write, T: Serialize>(mut out: W, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn write_to(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, bytes)?,
        None => std::io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}
