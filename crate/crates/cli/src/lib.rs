//! Batch driver for the verification suites: runs them, renders deterministic
//! reports and writes them next to a metadata sidecar.

pub mod report;
mod suites;

use clap::ValueEnum;
use enriques_configs::CharMode;
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::time::Instant;
use thiserror::Error;

pub use report::{to_csv, to_json, to_markdown, Assertion, Report, Section, Table, REPORT_SCHEMA};

/// Directory for reports when `--out` is not given.
pub const OUT_DIR_ENV: &str = "ENRIQUES_REPORT_DIR";
pub const DEFAULT_OUT_DIR: &str = "reports";
pub const META_SCHEMA: &str = "enriques-report-meta/1";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    LatticeSelfcheck,
    FibersEuler,
    Fibers2conn,
    Lefschetz,
    ConfigsEnumerate,
    ConfigsShared8,
    EcautTables,
    DelpezzoVerify,
    TablesConsistency,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::LatticeSelfcheck,
        Suite::FibersEuler,
        Suite::Fibers2conn,
        Suite::Lefschetz,
        Suite::ConfigsEnumerate,
        Suite::ConfigsShared8,
        Suite::EcautTables,
        Suite::DelpezzoVerify,
        Suite::TablesConsistency,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LatticeSelfcheck => "lattice-selfcheck",
            Suite::FibersEuler => "fibers-euler",
            Suite::Fibers2conn => "fibers-2conn",
            Suite::Lefschetz => "lefschetz",
            Suite::ConfigsEnumerate => "configs-enumerate",
            Suite::ConfigsShared8 => "configs-shared8",
            Suite::EcautTables => "ecaut-tables",
            Suite::DelpezzoVerify => "delpezzo-verify",
            Suite::TablesConsistency => "tables-consistency",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Markdown => "md",
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CharModeArg {
    Generic,
    Char2Classical,
    Char2Ordinary,
    Char2Supersingular,
}

impl From<CharModeArg> for CharMode {
    fn from(c: CharModeArg) -> CharMode {
        match c {
            CharModeArg::Generic => CharMode::Generic,
            CharModeArg::Char2Classical => CharMode::Char2Classical,
            CharModeArg::Char2Ordinary => CharMode::Char2Ordinary,
            CharModeArg::Char2Supersingular => CharMode::Char2Supersingular,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub suite: Suite,
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    /// Coordinate bound of the isotropic-sequence search.
    pub bound: i64,
    /// Result cap of the isotropic-sequence search.
    pub cap: usize,
    /// Extension degree of the characteristic 2 and 3 curve representatives.
    pub ext_degree: u32,
    pub char_mode: CharModeArg,
    /// Restricts `lefschetz` to one order and selects the order of the
    /// smooth-fiber case in `configs-enumerate`.
    pub order: Option<u32>,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            suite: Suite::All,
            format: Format::Markdown,
            out: None,
            bound: 6,
            cap: enriques_lattice::DEFAULT_CAP,
            ext_degree: 12,
            char_mode: CharModeArg::Char2Supersingular,
            order: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Usage(String),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.bound < 1 {
            return Err(CliError::Usage(format!("--bound must be positive, got {}", self.bound)));
        }
        if self.cap < 1 {
            return Err(CliError::Usage("--cap must be positive".into()));
        }
        if !(1..=12).contains(&self.ext_degree) {
            return Err(CliError::Usage(format!("--ext-degree must lie in 1..=12, got {}", self.ext_degree)));
        }
        if let Some(o) = self.order {
            if o < 2 {
                return Err(CliError::Usage(format!("--order must be at least 2, got {o}")));
            }
        }
        Ok(())
    }

    /// `--out`, else `$ENRIQUES_REPORT_DIR/<suite>.<ext>`, else `reports/<suite>.<ext>`.
    pub fn report_path(&self) -> PathBuf {
        if let Some(p) = &self.out {
            return p.clone();
        }
        let dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(DEFAULT_OUT_DIR));
        dir.join(format!("{}.{}", self.suite.name(), self.format.extension()))
    }
}

pub fn meta_path(report: &Path) -> PathBuf {
    let mut s = report.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

/// Runs the configured suite (every suite for `all`, concurrently, assembled
/// in a fixed order).
pub fn execute(config: &RunConfig) -> Report {
    let echo = serde_json::to_value(config).expect("config serializes");
    let sections = match config.suite {
        Suite::All => std::thread::scope(|s| {
            let handles: Vec<_> =
                Suite::EACH.iter().map(|&suite| s.spawn(move || suites::run(suite, config))).collect();
            handles
                .into_iter()
                .zip(Suite::EACH)
                .map(|(h, suite)| h.join().unwrap_or_else(|_| Section::failed(suite.name(), "suite panicked")))
                .collect()
        }),
        suite => vec![suites::run(suite, config)],
    };
    Report::new(config.suite.name(), echo, sections)
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Markdown => to_markdown(report),
        Format::Csv => to_csv(report),
        Format::Json => to_json(report),
    }
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub report: Report,
    pub body: String,
    pub report_path: PathBuf,
    pub meta_path: PathBuf,
}

#[derive(Serialize)]
struct Meta<'a> {
    schema: &'a str,
    suite: &'a str,
    format: Format,
    generated_at: String,
    elapsed_ms: u128,
    exit_code: i32,
    version: &'a str,
}

/// Executes the suite and writes the report and its sidecar; the report is
/// written whether or not the suite passes.
pub fn run(config: &RunConfig) -> Result<RunOutcome, CliError> {
    config.validate()?;
    let start = Instant::now();
    let report = execute(config);
    let body = render(&report, config.format);
    let exit_code = if report.pass { EXIT_PASS } else { EXIT_FAIL };
    let report_path = config.report_path();
    if let Some(dir) = report_path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(&report_path, &body)?;
    let meta = Meta {
        schema: META_SCHEMA,
        suite: config.suite.name(),
        format: config.format,
        generated_at: chrono::Utc::now().to_rfc3339(),
        elapsed_ms: start.elapsed().as_millis(),
        exit_code,
        version: env!("CARGO_PKG_VERSION"),
    };
    let meta_path = meta_path(&report_path);
    std::fs::write(&meta_path, serde_json::to_string_pretty(&meta).expect("meta serializes") + "\n")?;
    Ok(RunOutcome { exit_code, report, body, report_path, meta_path })
}
