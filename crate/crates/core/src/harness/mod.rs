//! Verification scans over the line and cycle path families, with
//! deterministic table output.

mod enumerate;
mod prop16;
mod sequence;
mod table;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::verify_decomposition;
use crate::error::{Error, Result};
use crate::families::{cycle_path_ideal, formula_table, line_path_ideal, phi, psi};
use crate::hochster::{hochster_betti, MAX_ORACLE_AMBIENT};
use crate::ideal::MonomialIdeal;
use crate::poset::build_poset_with;
use crate::quotient::QuotientPresentation;
use crate::solver::{sdepth_of_poset, SolverOptions};

pub use enumerate::{small_ideals, EnumerationBounds};
pub use prop16::{prop16_structure_check, ComponentReport, Prop16Report, MAX_STRUCTURE_N};
pub use sequence::{sequence_check, SequenceReport, SequenceStep};
pub use table::{to_csv, to_markdown, CSV_HEADER};

/// Scan kinds. The command-line names are given by [`Check::name`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// `psi <= sdepth(S/J) <= phi` and `depth(S/J) = psi`.
    CycleBounds,
    /// `sdepth(S/J) = depth(S/J) = phi` wherever `phi = psi`.
    EqualityCases,
    /// `sdepth(J/I) >= psi + m - 1`, plus the component structure.
    QuotientBound,
    /// `sdepth(S/J)` against `phi` for `n >= 3(m+1)+1`; report only.
    Conjecture,
    /// Closed depth formulas against the homological oracle.
    Formulas,
    /// `sdepth(S/I) = depth(S/I) = phi` for the line family.
    Line,
    /// Exact-sequence inequalities along the colon tower.
    Sequence,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::CycleBounds,
        Check::EqualityCases,
        Check::QuotientBound,
        Check::Conjecture,
        Check::Formulas,
        Check::Line,
        Check::Sequence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::CycleBounds => "thm14",
            Check::EqualityCases => "cor15",
            Check::QuotientBound => "prop16",
            Check::Conjecture => "conjecture",
            Check::Formulas => "formulas",
            Check::Line => "line",
            Check::Sequence => "sequence",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn default_n_max(self) -> usize {
        match self {
            Check::Formulas => 12,
            Check::Conjecture => 12,
            Check::QuotientBound | Check::Line => 9,
            Check::Sequence => 8,
            Check::CycleBounds | Check::EqualityCases => 10,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    /// A proved inequality failed with every input computed exactly.
    Violation,
    /// A time limit or size cap was hit.
    Unknown,
    /// Informational row; nothing is asserted.
    Skipped,
    /// Exploratory disagreement, flagged without failing.
    Review,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Violation => "violation",
            Status::Unknown => "unknown",
            Status::Skipped => "skipped",
            Status::Review => "review",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub n: usize,
    pub m: usize,
    pub check: String,
    pub psi: i64,
    pub phi: i64,
    pub sdepth: Option<usize>,
    pub depth: Option<usize>,
    pub bound_lo: Option<i64>,
    pub bound_hi: Option<i64>,
    pub status: Status,
    /// Wall time, only filled when timings are requested.
    pub ms: Option<u64>,
    pub note: String,
    /// Verified certificate for the `sdepth` column.
    #[serde(skip)]
    pub certificate: Option<String>,
}

impl ScanRow {
    fn new(n: usize, m: usize, check: &str) -> Self {
        ScanRow {
            n,
            m,
            check: check.to_string(),
            psi: psi(n, m),
            phi: phi(n, m),
            sdepth: None,
            depth: None,
            bound_lo: None,
            bound_hi: None,
            status: Status::Ok,
            ms: None,
            note: String::new(),
            certificate: None,
        }
    }

    fn fail(&mut self, status: Status, note: impl Into<String>) {
        if self.status < status || self.status == Status::Ok {
            self.status = status;
        }
        if !self.note.is_empty() {
            self.note.push_str("; ");
        }
        self.note.push_str(&note.into());
    }

    fn key(&self) -> (usize, usize, &str) {
        (self.n, self.m, &self.check)
    }
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub check: Check,
    pub n_max: usize,
    pub m_min: usize,
    /// Defaults to `n - 1` for each `n`.
    pub m_max: Option<usize>,
    /// Worker threads; `0` lets rayon decide.
    pub jobs: usize,
    pub solver: SolverOptions,
    pub timings: bool,
}

impl ScanConfig {
    pub fn new(check: Check) -> Self {
        ScanConfig {
            check,
            n_max: check.default_n_max(),
            m_min: 2,
            m_max: None,
            jobs: 0,
            solver: SolverOptions::default(),
            timings: false,
        }
    }

    /// The `(n, m)` grid with `2 <= m < n <= n_max`, restricted for the
    /// conjecture to `n >= 3(m+1)+1`.
    pub fn instances(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for n in 3..=self.n_max {
            let hi = self.m_max.unwrap_or(n - 1).min(n - 1);
            for m in self.m_min.max(2)..=hi {
                if self.check == Check::Conjecture && n < 3 * (m + 1) + 1 {
                    continue;
                }
                out.push((n, m));
            }
        }
        out
    }
}

/// Computed Stanley depth with a verified certificate.
pub struct VerifiedSdepth {
    pub value: usize,
    pub certificate: String,
}

/// Stanley depth of a presentation, rejecting any certificate that fails
/// verification.
pub fn verified_sdepth(pair: &QuotientPresentation, opts: &SolverOptions) -> Result<VerifiedSdepth> {
    let poset = build_poset_with(pair, &opts.poset)?;
    let upper = if pair.is_cyclic_quotient() { pair.ambient() - 1 } else { pair.ambient() };
    let r = sdepth_of_poset(&poset, upper, opts)?;
    let report = verify_decomposition(&poset, &r.certificate, r.value);
    if let Some(f) = report.failure {
        return Err(Error::InvalidPresentation(format!("solver certificate rejected: {f}")));
    }
    Ok(VerifiedSdepth { value: r.value, certificate: r.certificate.to_string() })
}

/// Oracle depth, or `None` beyond the oracle's ambient limit. Rows record an
/// Euler-characteristic mismatch as a violation.
fn oracle_depth(ideal: &MonomialIdeal, row: &mut ScanRow) -> Result<Option<usize>> {
    if ideal.ambient() > MAX_ORACLE_AMBIENT {
        return Ok(None);
    }
    let table = hochster_betti(ideal)?;
    if table.euler_failures > 0 {
        row.fail(Status::Violation, format!("{} Euler mismatches", table.euler_failures));
    }
    Ok(Some(table.depth()))
}

fn ring(ideal: MonomialIdeal) -> Result<QuotientPresentation> {
    QuotientPresentation::quotient_ring(ideal)
}

fn sdepth_into(row: &mut ScanRow, pair: &QuotientPresentation, opts: &SolverOptions) -> Result<usize> {
    let r = verified_sdepth(pair, opts)?;
    row.sdepth = Some(r.value);
    row.certificate = Some(r.certificate);
    Ok(r.value)
}

fn cycle_bounds(n: usize, m: usize, opts: &SolverOptions) -> Result<Vec<ScanRow>> {
    let mut row = ScanRow::new(n, m, "thm14");
    row.bound_lo = Some(row.psi);
    row.bound_hi = Some(row.phi);
    let j = cycle_path_ideal(n, m)?;
    row.depth = oracle_depth(&j, &mut row)?;
    if let Some(d) = row.depth {
        if d as i64 != row.psi {
            row.fail(Status::Violation, format!("depth {d} != psi"));
        }
    }
    let s = sdepth_into(&mut row, &ring(j)?, opts)? as i64;
    if s < row.psi || s > row.phi {
        row.fail(Status::Violation, format!("sdepth {s} outside [psi, phi]"));
    }
    Ok(vec![row])
}

fn equality_cases(n: usize, m: usize, opts: &SolverOptions) -> Result<Vec<ScanRow>> {
    let (p, q) = (phi(n, m), psi(n, m));
    let j = cycle_path_ideal(n, m)?;
    if p == q {
        let mut row = ScanRow::new(n, m, "cor15");
        row.bound_lo = Some(p);
        row.bound_hi = Some(p);
        row.depth = oracle_depth(&j, &mut row)?;
        if let Some(d) = row.depth {
            if d as i64 != p {
                row.fail(Status::Violation, format!("depth {d} != phi"));
            }
        }
        let s = sdepth_into(&mut row, &ring(j)?, opts)? as i64;
        if s != p {
            row.fail(Status::Violation, format!("sdepth {s} != phi"));
        }
        return Ok(vec![row]);
    }
    // Instances where m+1 divides neither n nor n+1: phi = psi + 1, so no
    // equality with phi can hold for depth. Reported without assertion.
    let mut row = ScanRow::new(n, m, "cor15:printed-cond");
    row.bound_lo = Some(q);
    row.bound_hi = Some(p);
    row.depth = oracle_depth(&j, &mut row)?;
    sdepth_into(&mut row, &ring(j)?, opts)?;
    if row.status == Status::Ok {
        row.status = Status::Skipped;
        row.note = "phi = psi + 1; informational".into();
    }
    Ok(vec![row])
}

fn quotient_bound(n: usize, m: usize, opts: &SolverOptions) -> Result<Vec<ScanRow>> {
    let mut row = ScanRow::new(n, m, "prop16");
    let bound = row.psi + m as i64 - 1;
    row.bound_lo = Some(bound);
    if n <= MAX_STRUCTURE_N {
        let report = prop16_structure_check(n, m)?;
        row.depth = usize::try_from(report.derived_depth).ok();
        for f in &report.failures {
            row.fail(Status::Violation, f.clone());
        }
        if !report.depth_matches() {
            row.fail(Status::Violation, format!("derived depth {} != psi+m-1", report.derived_depth));
        }
    }
    let pair = QuotientPresentation::new(cycle_path_ideal(n, m)?, line_path_ideal(n, m)?)?;
    let s = sdepth_into(&mut row, &pair, opts)? as i64;
    if s < bound {
        row.fail(Status::Violation, format!("sdepth {s} < psi+m-1"));
    } else if row.status == Status::Ok {
        row.note = if s == bound { "equal".into() } else { "strict".into() };
    }
    Ok(vec![row])
}

fn conjecture(n: usize, m: usize, opts: &SolverOptions) -> Result<Vec<ScanRow>> {
    let mut row = ScanRow::new(n, m, "conjecture");
    row.bound_lo = Some(row.phi);
    row.bound_hi = Some(row.phi);
    let s = sdepth_into(&mut row, &ring(cycle_path_ideal(n, m)?)?, opts)? as i64;
    if s == row.phi {
        row.note = "agrees".into();
    } else {
        row.fail(Status::Review, format!("sdepth {s} != phi"));
    }
    Ok(vec![row])
}

fn formulas(n: usize, m: usize) -> Result<Vec<ScanRow>> {
    let f = formula_table(n, m)?;
    let mut rows = Vec::with_capacity(2);
    for (check, ideal, expected, pd) in [
        ("formulas:cycle", cycle_path_ideal(n, m)?, f.psi, f.pd_cycle),
        ("formulas:line", line_path_ideal(n, m)?, f.phi, f.pd_line),
    ] {
        let mut row = ScanRow::new(n, m, check);
        row.bound_lo = Some(expected);
        row.bound_hi = Some(expected);
        if n as i64 - pd != expected {
            row.fail(Status::Violation, format!("n - pd {} != {expected}", n as i64 - pd));
        }
        row.depth = oracle_depth(&ideal, &mut row)?;
        match row.depth {
            Some(d) if d as i64 != expected => row.fail(Status::Violation, format!("oracle depth {d} != {expected}")),
            None => row.fail(Status::Skipped, "beyond oracle size"),
            _ => {}
        }
        rows.push(row);
    }
    Ok(rows)
}

fn line(n: usize, m: usize, opts: &SolverOptions) -> Result<Vec<ScanRow>> {
    let mut row = ScanRow::new(n, m, "line");
    row.bound_lo = Some(row.phi);
    row.bound_hi = Some(row.phi);
    let i = line_path_ideal(n, m)?;
    row.depth = oracle_depth(&i, &mut row)?;
    if let Some(d) = row.depth {
        if d as i64 != row.phi {
            row.fail(Status::Violation, format!("depth {d} != phi"));
        }
    }
    let s = sdepth_into(&mut row, &ring(i)?, opts)? as i64;
    if s != row.phi {
        row.fail(Status::Violation, format!("sdepth {s} != phi"));
    }
    Ok(vec![row])
}

fn sequence(n: usize, m: usize, opts: &SolverOptions) -> Result<Vec<ScanRow>> {
    let mut row = ScanRow::new(n, m, "sequence");
    let r = sequence_check(n, m, opts)?;
    row.sdepth = Some(r.sdepth_cycle);
    row.depth = r.steps.first().map(|s| s.depth_middle);
    for s in &r.steps {
        if !s.sdepth_ok {
            row.fail(Status::Violation, format!("k={}: sdepth inequality fails", s.k));
        }
        if !s.depth_ok {
            row.fail(Status::Violation, format!("k={}: depth inequality fails", s.k));
        }
    }
    if !r.final_ok {
        row.fail(Status::Violation, "last colon has smaller sdepth");
    }
    if r.relabel_ok == Some(false) {
        row.fail(Status::Violation, "colon does not relabel to the smaller cycle");
    }
    if row.status == Status::Ok {
        row.note = format!("{} steps", r.steps.len());
    }
    Ok(vec![row])
}

fn run_instance(check: Check, n: usize, m: usize, opts: &SolverOptions) -> Result<Vec<ScanRow>> {
    match check {
        Check::CycleBounds => cycle_bounds(n, m, opts),
        Check::EqualityCases => equality_cases(n, m, opts),
        Check::QuotientBound => quotient_bound(n, m, opts),
        Check::Conjecture => conjecture(n, m, opts),
        Check::Formulas => formulas(n, m),
        Check::Line => line(n, m, opts),
        Check::Sequence => sequence(n, m, opts),
    }
}

/// Row name used when an instance fails before producing its own rows.
fn primary_name(check: Check, n: usize, m: usize) -> &'static str {
    match check {
        Check::EqualityCases if phi(n, m) != psi(n, m) => "cor15:printed-cond",
        Check::Formulas => "formulas:cycle",
        c => c.name(),
    }
}

/// Runs one check over its grid. Time limits and size caps turn into
/// `unknown` rows; rows come back sorted by `(n, m, check)`.
pub fn run_scan(config: &ScanConfig) -> Result<Vec<ScanRow>> {
    let instances = config.instances();
    let work = || -> Vec<ScanRow> {
        instances
            .par_iter()
            .flat_map_iter(|&(n, m)| {
                let started = Instant::now();
                let mut rows = match run_instance(config.check, n, m, &config.solver) {
                    Ok(rows) => rows,
                    Err(e) => {
                        let mut row = ScanRow::new(n, m, primary_name(config.check, n, m));
                        let status = match e {
                            Error::TimeLimit { .. } | Error::PosetCap { .. } => Status::Unknown,
                            _ => Status::Violation,
                        };
                        row.fail(status, e.to_string());
                        vec![row]
                    }
                };
                if config.timings {
                    let ms = started.elapsed().as_millis() as u64;
                    rows.iter_mut().for_each(|r| r.ms = Some(ms));
                }
                rows
            })
            .collect()
    };
    let mut rows = if config.jobs == 0 {
        work()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::InvalidPresentation(e.to_string()))?
            .install(work)
    };
    rows.sort_by(|a, b| a.key().cmp(&b.key()));
    Ok(rows)
}

/// Whether any row should turn the process exit code to failure.
pub fn has_violation(rows: &[ScanRow]) -> bool {
    rows.iter().any(|r| r.status == Status::Violation)
}
