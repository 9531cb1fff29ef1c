//! Plain-text emission of scan rows.

use super::ScanRow;

pub const CSV_HEADER: &str = "n,m,check,psi,phi,sdepth,depth,bound_lo,bound_hi,status,ms";

fn cell<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn cells(r: &ScanRow) -> [String; 11] {
    [
        r.n.to_string(),
        r.m.to_string(),
        r.check.clone(),
        r.psi.to_string(),
        r.phi.to_string(),
        cell(r.sdepth),
        cell(r.depth),
        cell(r.bound_lo),
        cell(r.bound_hi),
        r.status.as_str().to_string(),
        cell(r.ms),
    ]
}

pub fn to_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&cells(r).join(","));
        out.push('\n');
    }
    out
}

/// Markdown table with the CSV columns plus the note.
pub fn to_markdown(rows: &[ScanRow]) -> String {
    let mut out = format!("| {} | note |\n", CSV_HEADER.replace(',', " | "));
    out.push_str(&"|---".repeat(12));
    out.push_str("|\n");
    for r in rows {
        out.push_str(&format!("| {} | {} |\n", cells(r).join(" | "), r.note));
    }
    out
}
