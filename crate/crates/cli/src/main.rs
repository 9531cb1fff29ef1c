use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use sdepthlab::decomposition::VerifyFailure;
use sdepthlab::families::FamilyInstance;
use sdepthlab::harness::{has_violation, to_csv, to_markdown, verified_sdepth, Check, ScanConfig, ScanRow};
use sdepthlab::poset::build_poset_with;
use sdepthlab::{
    formula_table, hochster_betti, parse_ideal, run_scan, verify_decomposition, Error, FamilyKind, Monomial,
    MonomialIdeal, QuotientPresentation, SolverOptions, StanleyDecomposition,
};

const EXIT_VIOLATION: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_RESOURCE: u8 = 4;

#[derive(Parser)]
#[command(name = "sdepthlab", version, about = "Stanley depth and depth of monomial quotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Line,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Out {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Thm14,
    Cor15,
    Prop16,
    Conjecture,
    Formulas,
    Line,
    Sequence,
}

impl From<CheckArg> for Check {
    fn from(c: CheckArg) -> Check {
        match c {
            CheckArg::Thm14 => Check::CycleBounds,
            CheckArg::Cor15 => Check::EqualityCases,
            CheckArg::Prop16 => Check::QuotientBound,
            CheckArg::Conjecture => Check::Conjecture,
            CheckArg::Formulas => Check::Formulas,
            CheckArg::Line => Check::Line,
            CheckArg::Sequence => Check::Sequence,
        }
    }
}

#[derive(clap::Args)]
struct Limits {
    /// Per-decision time limit in seconds.
    #[arg(long, default_value_t = 300.0)]
    time_limit_s: f64,
    /// Maximum number of characteristic poset elements.
    #[arg(long, default_value_t = sdepthlab::poset::DEFAULT_POSET_CAP)]
    max_poset: usize,
}

impl Limits {
    fn solver(&self) -> Result<SolverOptions, Failure> {
        if !(self.time_limit_s.is_finite() && self.time_limit_s >= 0.0) {
            return Err(Failure::input("--time-limit-s must be a nonnegative number"));
        }
        let mut opts = SolverOptions { time_limit: Duration::from_secs_f64(self.time_limit_s), ..Default::default() };
        opts.poset.cap = self.max_poset;
        Ok(opts)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a path ideal of the line or cycle graph with its closed formulas.
    Family {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "text")]
        out: Out,
    },
    /// Exact Stanley depth of S/I, or of I/G with --quotient-by.
    Sdepth {
        #[arg(long)]
        ideal_file: PathBuf,
        #[arg(long)]
        quotient_by: Option<PathBuf>,
        #[command(flatten)]
        limits: Limits,
        /// Write the verified decomposition here.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Depth of S/I for squarefree I via Hochster's formula.
    Depth {
        #[arg(long)]
        ideal_file: PathBuf,
        /// Print the nonzero multigraded Betti numbers as CSV.
        #[arg(long)]
        betti: bool,
    },
    /// Run a verification scan over the path ideal families.
    Scan {
        #[arg(long, value_enum)]
        check: CheckArg,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 2)]
        m_min: usize,
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Worker threads (0 for one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Fill the ms column with wall times.
        #[arg(long)]
        timings: bool,
        /// Write each row's certificate into this directory.
        #[arg(long)]
        cert_dir: Option<PathBuf>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Check a decomposition file against S/I (or I/G) at level k.
    VerifyDecomp {
        #[arg(long)]
        ideal_file: PathBuf,
        #[arg(long)]
        quotient_by: Option<PathBuf>,
        #[arg(long)]
        decomp_file: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn input(msg: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, msg: msg.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::PosetCap { .. } | Error::TimeLimit { .. } => EXIT_RESOURCE,
            _ => EXIT_INPUT,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_ideal(path: &Path) -> Result<MonomialIdeal, Failure> {
    parse_ideal(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn presentation(ideal_file: &Path, quotient_by: Option<&Path>) -> Result<QuotientPresentation, Failure> {
    let ideal = read_ideal(ideal_file)?;
    Ok(match quotient_by {
        Some(g) => QuotientPresentation::new(ideal, read_ideal(g)?)?,
        None => QuotientPresentation::quotient_ring(ideal)?,
    })
}

fn family(kind: Kind, n: usize, m: usize, out: Out) -> Result<u8, Failure> {
    let kind = match kind {
        Kind::Line => FamilyKind::Line,
        Kind::Cycle => FamilyKind::Cycle,
    };
    let inst = FamilyInstance::new(kind, n, m)?;
    let ideal = inst.ideal();
    let f = formula_table(n, m)?;
    match out {
        Out::Text => {
            println!("{ideal}");
            if let Some(d) = inst.degenerate() {
                println!("degenerate={}", serde_json::to_value(d).expect("enum").as_str().unwrap_or_default());
            }
            println!("phi={} psi={}", f.phi, f.psi);
            let (pd, depth) = match kind {
                FamilyKind::Line => (f.pd_line, f.depth_line),
                FamilyKind::Cycle => (f.pd_cycle, f.depth_cycle),
            };
            println!("pd={pd} depth={depth}");
        }
        Out::Json => {
            let value = json!({
                "kind": kind,
                "n": n,
                "m": m,
                "degenerate": inst.degenerate(),
                "generators": ideal.gens().iter().map(Monomial::to_string).collect::<Vec<_>>(),
                "formulas": f,
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        }
    }
    Ok(0)
}

fn sdepth(pair: &QuotientPresentation, opts: &SolverOptions, certificate: Option<&Path>) -> Result<u8, Failure> {
    let r = verified_sdepth(pair, opts)?;
    println!("sdepth={}", r.value);
    if let Some(path) = certificate {
        fs::write(path, &r.certificate).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    }
    Ok(0)
}

fn depth(ideal: &MonomialIdeal, betti: bool) -> Result<u8, Failure> {
    let table = hochster_betti(ideal)?;
    if betti {
        println!("i,F,rank");
        for (i, f, rank) in table.rows() {
            let label = Monomial::squarefree(ideal.ambient(), f).expect("indices in range");
            println!("{i},{label},{rank}");
        }
    } else {
        println!("depth={}", table.depth());
        println!("pd={}", table.projective_dimension());
    }
    if table.euler_failures > 0 {
        eprintln!("{} restrictions failed the Euler characteristic check", table.euler_failures);
        return Ok(EXIT_VIOLATION);
    }
    Ok(0)
}

fn write_certificates(dir: &Path, rows: &[ScanRow]) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure::input(format!("{}: {e}", dir.display())))?;
    for r in rows {
        if let Some(cert) = &r.certificate {
            let name = format!("{}_n{}_m{}.txt", r.check.replace(':', "_"), r.n, r.m);
            let path = dir.join(name);
            fs::write(&path, cert).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        }
    }
    Ok(())
}

fn scan(config: &ScanConfig, format: Format, cert_dir: Option<&Path>) -> Result<u8, Failure> {
    let rows = run_scan(config)?;
    match format {
        Format::Csv => print!("{}", to_csv(&rows)),
        Format::Md => print!("{}", to_markdown(&rows)),
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows).expect("serializable")),
    }
    if let Some(dir) = cert_dir {
        write_certificates(dir, &rows)?;
    }
    Ok(if has_violation(&rows) { EXIT_VIOLATION } else { 0 })
}

fn verify(pair: &QuotientPresentation, decomp_file: &Path, k: usize) -> Result<u8, Failure> {
    let decomp = StanleyDecomposition::parse(&read(decomp_file)?, pair.ambient())?;
    let poset = build_poset_with(pair, &Default::default())?;
    let report = verify_decomposition(&poset, &decomp, k);
    match &report.failure {
        None => {
            println!("valid pieces={} sdepth={}", decomp.len(), decomp.sdepth().unwrap_or(0));
            Ok(0)
        }
        Some(f) => {
            println!("invalid: {f}");
            Ok(match f {
                VerifyFailure::AmbientMismatch { .. } => EXIT_INPUT,
                _ => EXIT_VIOLATION,
            })
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Family { kind, n, m, out } => family(kind, n, m, out),
        Command::Sdepth { ideal_file, quotient_by, limits, certificate } => {
            let pair = presentation(&ideal_file, quotient_by.as_deref())?;
            sdepth(&pair, &limits.solver()?, certificate.as_deref())
        }
        Command::Depth { ideal_file, betti } => depth(&read_ideal(&ideal_file)?, betti),
        Command::Scan { check, n_max, m_min, m_max, format, jobs, timings, cert_dir, limits } => {
            let mut config = ScanConfig::new(check.into());
            if let Some(n) = n_max {
                config.n_max = n;
            }
            config.m_min = m_min;
            config.m_max = m_max;
            config.jobs = jobs;
            config.timings = timings;
            config.solver = limits.solver()?;
            scan(&config, format, cert_dir.as_deref())
        }
        Command::VerifyDecomp { ideal_file, quotient_by, decomp_file, k } => {
            verify(&presentation(&ideal_file, quotient_by.as_deref())?, &decomp_file, k)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
