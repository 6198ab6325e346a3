//! `gmdeform`: batch front-end over JSON files.

mod commands;
mod input;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::Options;
use crate::input::read_json;
use crate::report::{timestamp, write_atomic, CliError, Outcome, Report};

#[derive(Parser)]
#[command(name = "gmdeform", version, about = "Deformations of representations, Maurer-Cartan recursions and mixed Hodge checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group cohomology with adjoint coefficients and the cup obstruction
    Cohomology(Args),
    /// Kuranishi ring and obstruction ideal
    Cone(Args),
    /// Truncated graded algebra from generators and relations
    Artin(Args),
    /// Mixed Hodge structure checks
    MhsCheck(Args),
    /// Universal Maurer-Cartan series on a bigraded model
    Mc(Args),
    /// Mixed Hodge structure on the fibre of the universal family
    Vmhs(Args),
    /// Gauge between the two Maurer-Cartan series
    CompareGauge(Args),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args)]
struct Args {
    #[arg(long)]
    input: PathBuf,
    /// truncation order n
    #[arg(long, default_value_t = 2)]
    order: usize,
    #[arg(long)]
    respect_grading: bool,
    /// `hodge` or `file:PATH`
    #[arg(long, default_value = "hodge")]
    transversal: String,
    /// omit the timestamp so reruns are byte-identical
    #[arg(long)]
    deterministic: bool,
    /// directory for report.json and summary.txt
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn name(c: &Command) -> &'static str {
    match c {
        Command::Cohomology(_) => "cohomology",
        Command::Cone(_) => "cone",
        Command::Artin(_) => "artin",
        Command::MhsCheck(_) => "mhs-check",
        Command::Mc(_) => "mc",
        Command::Vmhs(_) => "vmhs",
        Command::CompareGauge(_) => "compare-gauge",
    }
}

fn args(c: &Command) -> &Args {
    match c {
        Command::Cohomology(a)
        | Command::Cone(a)
        | Command::Artin(a)
        | Command::MhsCheck(a)
        | Command::Mc(a)
        | Command::Vmhs(a)
        | Command::CompareGauge(a) => a,
    }
}

fn run(c: &Command) -> Result<Outcome, CliError> {
    let a = args(c);
    let path: &Path = &a.input;
    let opt = Options { order: a.order, respect_grading: a.respect_grading, transversal: input::read_transversal(&a.transversal)? };
    match c {
        Command::Cohomology(_) => commands::cohomology(&read_json(path)?),
        Command::Cone(_) => commands::cone(&read_json(path)?, &opt),
        Command::Artin(_) => commands::artin(&read_json(path)?, &opt),
        Command::MhsCheck(_) => commands::mhs_check(&read_json(path)?, &opt),
        Command::Mc(_) => commands::mc(&read_json(path)?, &opt),
        Command::Vmhs(_) => commands::vmhs(&read_json(path)?, &opt),
        Command::CompareGauge(_) => commands::compare_gauge(&read_json(path)?, &opt),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let a = args(&cli.command);
    let command = name(&cli.command);
    let outcome = run(&cli.command);
    let (passed, result, mut summary, error) = match &outcome {
        Ok(o) => (o.passed, Some(&o.result), o.summary.clone(), None),
        Err(e) => (false, None, vec![format!("error: {e}")], Some(e)),
    };
    summary.insert(0, format!("gmdeform {command} (order {})", a.order));
    summary.push(if passed { "PASS".into() } else { "FAIL".into() });
    let report = Report {
        tool: "gmdeform",
        version: env!("CARGO_PKG_VERSION"),
        generated_at: timestamp(a.deterministic),
        command,
        order: a.order,
        passed,
        result,
        error,
    };
    let body = serde_json::to_string_pretty(&report).expect("reports serialize") + "\n";
    let text = summary.join("\n") + "\n";
    let mut code = match &outcome {
        Ok(o) if o.passed => 0,
        Ok(_) => 2,
        Err(e) => e.exit_code(),
    };
    if let Some(dir) = &a.out {
        for (file, content) in [("report.json", &body), ("summary.txt", &text)] {
            if let Err(e) = write_atomic(dir, file, content) {
                eprintln!("error: {e}");
                code = 1;
            }
        }
    }
    match a.format {
        Format::Json => print!("{body}"),
        Format::Text => print!("{text}"),
    }
    if let Some(e) = error {
        eprintln!("error: {e}");
    }
    ExitCode::from(code as u8)
}
