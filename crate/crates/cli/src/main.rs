use clap::Parser;
use enriques_verify::{run, CharModeArg, CliError, Format, RunConfig, Suite, EXIT_USAGE};
use std::path::PathBuf;
use std::process::ExitCode;

/// Runs a verification suite and writes its report.
#[derive(Debug, Parser)]
#[command(name = "enriques", version)]
struct Args {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    #[arg(long, value_enum, default_value = "markdown")]
    format: Format,
    /// Report file; defaults to `<dir>/<suite>.<ext>` with `<dir>` taken from
    /// `ENRIQUES_REPORT_DIR` or `reports`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Coordinate bound of the isotropic-sequence search.
    #[arg(long, default_value_t = 6, allow_negative_numbers = true)]
    bound: i64,
    /// Result cap of the isotropic-sequence search.
    #[arg(long, default_value_t = enriques_lattice_cap())]
    cap: usize,
    /// Extension degree for the characteristic 2 and 3 curves.
    #[arg(long, default_value_t = 12)]
    ext_degree: u32,
    #[arg(long, value_enum, default_value = "char2-supersingular")]
    char_mode: CharModeArg,
    /// Automorphism order for `lefschetz` and the smooth-fiber case.
    #[arg(long)]
    order: Option<u32>,
}

fn enriques_lattice_cap() -> usize {
    RunConfig::default().cap
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = RunConfig {
        suite: args.suite,
        format: args.format,
        out: args.out,
        bound: args.bound,
        cap: args.cap,
        ext_degree: args.ext_degree,
        char_mode: args.char_mode,
        order: args.order,
    };
    match run(&config) {
        Ok(outcome) => {
            for s in &outcome.report.sections {
                eprintln!("{}: {}", s.suite, if s.pass { "PASS" } else { "FAIL" });
            }
            eprintln!("report written to {}", outcome.report_path.display());
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e @ CliError::Usage(_)) | Err(e @ CliError::Io(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
