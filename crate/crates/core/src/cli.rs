//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 unparseable input line,
//! 3 input graph below 3-connectivity, 4 a verification check failed.

use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_graph;
use crate::connectivity::{smallest_cuts, vertex_connectivity, CutRecord};
use crate::contraction::{classify, Classification};
use crate::enumerate::catalog::{write_catalog, CatalogKind};
use crate::enumerate::generate::MAX_ORDER;
use crate::enumerate::verify::{derive_catalogs_with, run_campaign, CampaignConfig, VerificationReport, MIN_N_MAX};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{emit_graph6_string, parse_line};
use crate::structure::{is_complete_minus_edge, is_wheel, FamilyTag};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_LOW_KAPPA: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

/// Lines analyzed per parallel batch.
const BATCH: usize = 256;

#[derive(Debug, Parser)]
#[command(name = "contracta", version, about = "Contractible non-edges of 3-connected graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// More progress output on stderr.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify graph6/sparse6 graphs, one per line, from files or stdin.
    Analyze {
        /// Stop at the first graph that is not 3-connected.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, env = "CONTRACTA_THREADS")]
        threads: Option<usize>,
        inputs: Vec<PathBuf>,
    },
    /// Enumerate every 3-connected graph up to --n-max and run all checks.
    Verify {
        #[arg(long)]
        n_max: usize,
        #[arg(long, env = "CONTRACTA_THREADS")]
        threads: Option<usize>,
        /// JSON report destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest order re-checked by contraction (default: min(n-max, 9)).
        #[arg(long)]
        dual_max: Option<usize>,
        /// Largest order whose cuts are audited (default: n-max).
        #[arg(long)]
        audit_max: Option<usize>,
        /// Also write the derived catalogs here.
        #[arg(long)]
        catalog_dir: Option<PathBuf>,
    },
    /// Catalog maintenance.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Derive the zero- and one-contractible catalogs up to --n-max.
    Derive {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, env = "CONTRACTA_THREADS")]
        threads: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Analyze,
    Verify,
    CatalogDerive,
}

/// Validated settings for one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub n_max: Option<usize>,
    pub inputs: Vec<PathBuf>,
    pub output: Option<PathBuf>,
    pub threads: Option<usize>,
    pub format: Format,
    pub verbosity: u8,
    pub strict: bool,
    pub dual_max: Option<usize>,
    pub audit_max: Option<usize>,
    pub catalog_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let mut cfg = RunConfig {
            command: CommandKind::Analyze,
            n_max: None,
            inputs: Vec::new(),
            output: None,
            threads: None,
            format: Format::Json,
            verbosity: cli.verbose,
            strict: false,
            dual_max: None,
            audit_max: None,
            catalog_dir: None,
        };
        match cli.command {
            Command::Analyze { strict, format, threads, inputs } => {
                cfg.strict = strict;
                cfg.format = format;
                cfg.threads = threads;
                cfg.inputs = inputs;
            }
            Command::Verify { n_max, threads, out, dual_max, audit_max, catalog_dir } => {
                cfg.command = CommandKind::Verify;
                cfg.n_max = Some(n_max);
                cfg.threads = threads;
                cfg.output = out;
                cfg.dual_max = dual_max;
                cfg.audit_max = audit_max;
                cfg.catalog_dir = catalog_dir;
            }
            Command::Catalog { action: CatalogCommand::Derive { n_max, out, threads } } => {
                cfg.command = CommandKind::CatalogDerive;
                cfg.n_max = Some(n_max);
                cfg.output = Some(out);
                cfg.threads = threads;
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Range and path checks, done before any work starts.
    pub fn validate(&self) -> Result<()> {
        if let Some(n) = self.n_max {
            if !(MIN_N_MAX..=MAX_ORDER).contains(&n) {
                return Err(Error::OrderOutOfRange { n, min: MIN_N_MAX, max: MAX_ORDER });
            }
        }
        if self.threads == Some(0) {
            return Err(Error::Io("thread count must be positive".into()));
        }
        for p in &self.inputs {
            if !p.is_file() {
                return Err(Error::Io(format!("input {} is not a readable file", p.display())));
            }
        }
        if self.command == CommandKind::Verify {
            if let Some(out) = &self.output {
                check_parent(out)?;
            }
        }
        Ok(())
    }
}

fn check_parent(path: &Path) -> Result<()> {
    match path.parent() {
        Some(dir) if !dir.as_os_str().is_empty() && !dir.is_dir() => {
            Err(Error::Io(format!("directory {} does not exist", dir.display())))
        }
        _ => Ok(()),
    }
}

/// Parses `args` and runs the command, writing to the given streams.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let cfg = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = match cfg.command {
        CommandKind::Analyze => cmd_analyze(&cfg, stdin, out, err),
        CommandKind::Verify => cmd_verify(&cfg, out, err),
        CommandKind::CatalogDerive => cmd_catalog_derive(&cfg, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct AnalyzeRecord {
    line: usize,
    g6: String,
    canonical: String,
    n: usize,
    kappa: usize,
    non_edges: usize,
    contractible_count: usize,
    contractible: Vec<(usize, usize)>,
    smallest_cuts: Vec<CutRecord>,
    component_counts: Vec<usize>,
    tags: Vec<FamilyTag>,
    catalog: Option<&'static str>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct RejectRecord {
    line: usize,
    g6: String,
    n: usize,
    kappa: usize,
    error: String,
}

enum Outcome {
    Blank,
    Parsed(Box<AnalyzeRecord>),
    LowKappa(RejectRecord),
    Unparsable(String),
}

fn analyze_line(line_no: usize, text: &str) -> Outcome {
    let t = text.trim();
    if t.is_empty() || t.starts_with('#') {
        return Outcome::Blank;
    }
    let g = match parse_line(t.as_bytes()) {
        Ok(g) => g,
        Err(e) => return Outcome::Unparsable(format!("line {line_no}: {e}")),
    };
    match analyze_graph(line_no, &g) {
        Ok(r) => Outcome::Parsed(Box::new(r)),
        Err(Error::ConnectivityTooLow { kappa, required }) | Err(Error::TooSmall { order: kappa, min: required })
            if kappa < 3 =>
        {
            Outcome::LowKappa(reject(line_no, &g, kappa, required))
        }
        Err(e) => {
            let kappa = vertex_connectivity(&g).unwrap_or(0);
            let mut r = reject(line_no, &g, kappa, 3);
            r.error = e.to_string();
            Outcome::LowKappa(r)
        }
    }
}

fn reject(line: usize, g: &Graph, kappa: usize, required: usize) -> RejectRecord {
    RejectRecord {
        line,
        g6: emit_graph6_string(g),
        n: g.order(),
        kappa,
        error: Error::ConnectivityTooLow { kappa, required }.to_string(),
    }
}

fn analyze_graph(line: usize, g: &Graph) -> Result<AnalyzeRecord> {
    if g.order() == 0 {
        return Err(Error::ConnectivityTooLow { kappa: 0, required: 3 });
    }
    let kappa = vertex_connectivity(g)?;
    if kappa < 3 {
        return Err(Error::ConnectivityTooLow { kappa, required: 3 });
    }
    let c: Classification = classify(g)?;
    let cuts = if g.is_complete() { Vec::new() } else { smallest_cuts(g)? };
    let count = c.contractible_count();
    let non_complete = c.non_edge_count > 0;
    let catalog = if g.order() >= 5 && count == 0 && non_complete && !is_wheel(g) {
        Some(CatalogKind::Zero.label())
    } else if g.order() >= 5 && count == 1 && !is_complete_minus_edge(g) {
        Some(CatalogKind::One.label())
    } else {
        None
    };
    Ok(AnalyzeRecord {
        line,
        g6: emit_graph6_string(g),
        canonical: emit_graph6_string(&canonical_graph(g)),
        n: c.n,
        kappa: c.kappa,
        non_edges: c.non_edge_count,
        contractible_count: count,
        component_counts: cuts.iter().map(|r| r.components.len()).collect(),
        smallest_cuts: cuts,
        contractible: c.contractible,
        tags: c.tags,
        catalog,
    })
}

fn tags_text(tags: &[FamilyTag]) -> String {
    tags.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(";")
}

fn render(format: Format, o: &Outcome) -> Option<String> {
    match (format, o) {
        (_, Outcome::Blank) | (_, Outcome::Unparsable(_)) => None,
        (Format::Json, Outcome::Parsed(r)) => serde_json::to_string(r).ok(),
        (Format::Json, Outcome::LowKappa(r)) => serde_json::to_string(r).ok(),
        (Format::Csv, Outcome::Parsed(r)) => Some(format!(
            "{},{},{},{},{},{},{},{},",
            r.line,
            r.g6,
            r.n,
            r.kappa,
            r.non_edges,
            r.contractible_count,
            tags_text(&r.tags),
            r.catalog.unwrap_or("")
        )),
        (Format::Csv, Outcome::LowKappa(r)) => Some(format!("{},{},{},{},,,,,{}", r.line, r.g6, r.n, r.kappa, r.error)),
        (Format::Text, Outcome::Parsed(r)) => Some(format!(
            "line {}: {} n={} kappa={} contractible={}/{} tags={}{}",
            r.line,
            r.g6,
            r.n,
            r.kappa,
            r.contractible_count,
            r.non_edges,
            tags_text(&r.tags),
            r.catalog.map(|c| format!(" catalog={c}")).unwrap_or_default()
        )),
        (Format::Text, Outcome::LowKappa(r)) => Some(format!("line {}: {} n={} {}", r.line, r.g6, r.n, r.error)),
    }
}

/// Streams graphs through classification; output order follows input order.
pub fn cmd_analyze(cfg: &RunConfig, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if cfg.format == Format::Csv {
        writeln!(out, "line,g6,n,kappa,non_edges,contractible_count,tags,catalog,error")?;
    }
    let pool = cfg.threads.and_then(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build().ok());
    let mut code = EXIT_OK;
    let mut sources: Vec<Box<dyn BufRead>> = Vec::new();
    for p in &cfg.inputs {
        sources.push(Box::new(BufReader::new(fs::File::open(p)?)));
    }
    let mut handle = |reader: &mut dyn BufRead, code: &mut i32| -> Result<bool> {
        let mut line_no = 0;
        let mut batch: Vec<(usize, String)> = Vec::with_capacity(BATCH);
        let mut lines = reader.lines();
        loop {
            batch.clear();
            for line in lines.by_ref().take(BATCH) {
                line_no += 1;
                batch.push((line_no, line?));
            }
            if batch.is_empty() {
                return Ok(true);
            }
            let work = || batch.par_iter().map(|(i, t)| analyze_line(*i, t)).collect::<Vec<Outcome>>();
            let outcomes = match &pool {
                Some(p) => p.install(work),
                None => work(),
            };
            for o in &outcomes {
                match o {
                    Outcome::Unparsable(msg) => {
                        writeln!(err, "error: {msg}")?;
                        *code = EXIT_PARSE;
                    }
                    Outcome::LowKappa(r) => {
                        if cfg.strict {
                            writeln!(err, "line {}: {}", r.line, r.error)?;
                            *code = EXIT_LOW_KAPPA;
                            return Ok(false);
                        }
                        if *code == EXIT_OK {
                            *code = EXIT_LOW_KAPPA;
                        }
                    }
                    _ => {}
                }
                if let Some(text) = render(cfg.format, o) {
                    writeln!(out, "{text}")?;
                }
            }
            if batch.len() < BATCH {
                return Ok(true);
            }
        }
    };
    if sources.is_empty() {
        handle(stdin, &mut code)?;
    } else {
        for s in sources.iter_mut() {
            if !handle(s.as_mut(), &mut code)? {
                break;
            }
        }
    }
    Ok(code)
}

fn campaign_config(cfg: &RunConfig) -> CampaignConfig {
    let n_max = cfg.n_max.unwrap_or(MIN_N_MAX);
    let mut c = CampaignConfig::new(n_max);
    c.threads = cfg.threads;
    if let Some(d) = cfg.dual_max {
        c.dual_max = d;
    }
    if let Some(a) = cfg.audit_max {
        c.audit_max = a;
    }
    c
}

fn write_catalogs(dir: &Path, report: &VerificationReport) -> Result<()> {
    fs::create_dir_all(dir)?;
    for kind in [CatalogKind::Zero, CatalogKind::One] {
        write_catalog(&dir.join(kind.file_name()), &report.catalog(kind).members)?;
    }
    Ok(())
}

/// Runs the full campaign; exit 0 iff every check passes.
pub fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let started = Instant::now();
    let report = run_campaign(&campaign_config(cfg))?;
    let json = report.to_json();
    let summary: &mut dyn Write = if cfg.output.is_some() { &mut *out } else { &mut *err };
    for line in report.summary_lines() {
        writeln!(summary, "{line}")?;
    }
    for kind in [CatalogKind::Zero, CatalogKind::One] {
        let c = report.catalog(kind);
        writeln!(
            summary,
            "{}-catalog: {} members, largest order {}, stable {}",
            kind.label(),
            c.size,
            c.largest_order.map_or("-".to_string(), |l| l.to_string()),
            c.stable
        )?;
    }
    writeln!(summary, "graphs processed: {}", report.graphs_processed)?;
    match &cfg.output {
        Some(path) => fs::write(path, &json)?,
        None => out.write_all(json.as_bytes())?,
    }
    if let Some(dir) = &cfg.catalog_dir {
        write_catalogs(dir, &report)?;
    }
    if cfg.verbosity > 0 {
        writeln!(err, "elapsed: {:.1?}", started.elapsed())?;
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED })
}

pub fn cmd_catalog_derive(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let started = Instant::now();
    let n_max = cfg.n_max.unwrap_or(MIN_N_MAX);
    let dir = cfg.output.clone().unwrap_or_else(|| PathBuf::from("."));
    let (zero, one) = derive_catalogs_with(n_max, cfg.threads)?;
    fs::create_dir_all(&dir)?;
    for (kind, entries) in [(CatalogKind::Zero, &zero), (CatalogKind::One, &one)] {
        let path = dir.join(kind.file_name());
        write_catalog(&path, entries)?;
        writeln!(out, "{}: {} entries", path.display(), entries.len())?;
    }
    if cfg.verbosity > 0 {
        writeln!(err, "elapsed: {:.1?}", started.elapsed())?;
    }
    Ok(EXIT_OK)
}

/// Entry point for the binary.
pub fn main_with_env() -> i32 {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let stderr = io::stderr();
    let mut err = stderr.lock();
    let code = run(std::env::args_os(), &mut input, &mut out, &mut err);
    let _ = out.flush();
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut stdin = input.as_bytes();
        let mut full = vec!["contracta"];
        full.extend_from_slice(args);
        let code = run(full, &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn analyze_k4() {
        let (code, out, _) = call(&["analyze"], "C~\n");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["tags"], serde_json::json!(["complete"]));
        assert_eq!(v["contractible"], serde_json::json!([]));
    }

    #[test]
    fn strict_low_kappa() {
        let c5 = emit_graph6_string(&Graph::cycle(5));
        let (code, _, err) = call(&["analyze", "--strict"], &format!("{c5}\n"));
        assert_eq!(code, EXIT_LOW_KAPPA);
        assert!(err.contains("kappa=2 < 3"), "{err}");
    }

    #[test]
    fn parse_error_has_line_number() {
        let (code, out, err) = call(&["analyze", "--format", "text"], "C~\nD?\n");
        assert_eq!(code, EXIT_PARSE);
        assert!(err.contains("line 2"), "{err}");
        assert!(out.starts_with("line 1: C~"));
    }

    #[test]
    fn verify_range_is_usage_error() {
        let (code, _, err) = call(&["verify", "--n-max", "3"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("outside supported range"), "{err}");
        assert_eq!(call(&["verify"], "").0, EXIT_USAGE);
    }
}
