use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use repring_a4::report::{dump_representations, run, CheckGroup, Format, RunConfig};
use repring_a4::Error;

/// Verification report for the 2-local integral representations of A4.
#[derive(Parser, Debug)]
#[command(name = "repring-a4", version, args_override_self = true)]
struct Args {
    /// Depth of the Delta_n tower checks.
    #[arg(long, default_value_t = 6)]
    max_n: u32,
    /// Highest level k of the Delta_m x Delta_1 identities (3k <= m <= 3k+2).
    #[arg(long, default_value_t = 2)]
    max_k: u32,
    /// Last n of the syzygy complex certificates.
    #[arg(long, default_value_t = 30)]
    sweep: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Exhaustive mod-2 search up to this intertwiner rank.
    #[arg(long, default_value_t = 22)]
    exhaustive_cap: u32,
    /// Random draws above the exhaustive cap.
    #[arg(long, default_value_t = 1 << 20)]
    sample_cap: u64,
    /// Check group to run; repeatable. Defaults to all.
    #[arg(long = "check", value_parser = parse_check)]
    checks: Vec<CheckGroup>,
    /// text or json.
    #[arg(long, default_value = "text", value_parser = parse_format)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also dump the named modules to this directory.
    #[arg(long)]
    dump_reps: Option<PathBuf>,
    /// Level of the product table behind the algebra checks.
    #[arg(long, default_value_t = 2)]
    table_n: u32,
    /// Record per-check wall-clock times.
    #[arg(long)]
    timings: bool,
}

fn parse_check(s: &str) -> Result<CheckGroup, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("repring-a4: {}", msg);
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = RunConfig {
        max_n: args.max_n,
        max_k: args.max_k,
        syzygy_sweep: args.sweep,
        seed: args.seed,
        exhaustive_cap: args.exhaustive_cap,
        sample_cap: args.sample_cap,
        table_n: args.table_n,
        checks: if args.checks.is_empty() { CheckGroup::ALL.to_vec() } else { args.checks },
        format: args.format,
        timings: args.timings,
    };
    if let Err(e) = config.validate() {
        return fail(2, e);
    }
    if let Some(dir) = &args.dump_reps {
        if let Err(e) = dump_representations(dir, config.max_n) {
            return fail(2, e);
        }
    }
    let report = match run(&config) {
        Ok(r) => r,
        Err(e) => return fail(1, e),
    };
    let text = report.render();
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                return fail(2, format!("{}: {}", path.display(), e));
            }
        }
        None => print!("{}", text),
    }
    ExitCode::from(report.exit_code() as u8)
}
