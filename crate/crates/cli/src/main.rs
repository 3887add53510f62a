mod error;
mod report;
mod spec;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cyclograph_core::formulas::{
    delta_count_frobenius, delta_count_structured, delta_count_two_frobenius, gamma_count_two_frobenius, verify,
    VerificationReport,
};
use cyclograph_core::graphs::{delta_components, export_dot, gamma_components, DEFAULT_PAIR_CAP};
use cyclograph_core::group::DEFAULT_ENUM_CAP;
use cyclograph_core::structure::{detect_frobenius, detect_two_frobenius};
use cyclograph_core::{CountResult, GraphKind, Method};
use serde::Serialize;

use error::CliError;
use report::ComponentJson;
use spec::Loaded;

/// Cyclic and commuting graph components of finite permutation groups,
/// with closed-form counts for Frobenius and 2-Frobenius groups.
#[derive(Parser)]
#[command(name = "cyclograph", version)]
struct Cli {
    /// Refuse to enumerate groups larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_CAP)]
    enum_cap: usize,
    /// Refuse brute-force commuting graphs with more vertex pairs than this.
    #[arg(long, global = true, default_value_t = DEFAULT_PAIR_CAP)]
    pair_cap: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, detected structure, structural checks and component counts.
    Info { spec: String },
    /// Components of the cyclic graph.
    Delta {
        spec: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Components of the commuting graph.
    Gamma {
        spec: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Compare every applicable formula with brute force; exit 1 on a mismatch.
    Verify { spec: String },
    /// Write the cyclic or commuting graph in Graphviz DOT format.
    ExportDot {
        spec: String,
        #[arg(long, value_enum)]
        graph: GraphArg,
        #[arg(long)]
        out: std::path::PathBuf,
        /// Label vertices with cycle notation instead of element indices.
        #[arg(long)]
        labels: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Formula,
    Brute,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphArg {
    Cyclic,
    Commuting,
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> Result<(), CliError> {
    let body = if json {
        serde_json::to_string_pretty(value)? + "\n"
    } else {
        text()
    };
    match std::io::stdout().lock().write_all(body.as_bytes()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn full_report(loaded: &Loaded, pair_cap: u64) -> Result<VerificationReport, CliError> {
    if loaded.group.is_none() && loaded.source.affine().is_none() {
        loaded.require_group()?;
    }
    Ok(verify(loaded.group.as_ref(), loaded.source.affine(), pair_cap)?)
}

fn brute_force_note(loaded: &Loaded) -> String {
    match &loaded.enumeration_error {
        None => "computed".into(),
        Some(e) => format!("skipped: {e}"),
    }
}

fn delta_formula(loaded: &Loaded) -> Result<CountResult, CliError> {
    if let Some(g) = &loaded.group {
        if let Some(dec) = detect_two_frobenius(g)? {
            return Ok(delta_count_two_frobenius(g, &dec)?);
        }
        if let Some(dec) = detect_frobenius(g) {
            return Ok(delta_count_frobenius(&dec)?);
        }
        return Err(CliError::NoFormula("the group is neither Frobenius nor 2-Frobenius".into()));
    }
    match loaded.source.affine() {
        Some(spec) => Ok(delta_count_structured(spec)?),
        None => Err(loaded.require_group().expect_err("group absent")),
    }
}

fn gamma_formula(loaded: &Loaded) -> Result<CountResult, CliError> {
    if let Some(g) = &loaded.group {
        return match detect_two_frobenius(g)? {
            Some(dec) => Ok(gamma_count_two_frobenius(dec.k_order(), Method::Formula)),
            None => Err(CliError::NoFormula("commuting-graph formula needs a 2-Frobenius group".into())),
        };
    }
    match loaded.source.affine() {
        Some(spec) => Ok(gamma_count_two_frobenius(spec.k_order(), Method::Structured)),
        None => Err(loaded.require_group().expect_err("group absent")),
    }
}

fn components(loaded: &Loaded, kind: GraphKind, method: MethodArg, pair_cap: u64) -> Result<ComponentJson, CliError> {
    let brute = || -> Result<ComponentJson, CliError> {
        let g = loaded.require_group()?;
        let report = match kind {
            GraphKind::Cyclic => delta_components(g),
            GraphKind::Commuting => gamma_components(g, pair_cap)?,
        };
        Ok((&report).into())
    };
    let formula = || -> Result<ComponentJson, CliError> {
        let r = match kind {
            GraphKind::Cyclic => delta_formula(loaded)?,
            GraphKind::Commuting => gamma_formula(loaded)?,
        };
        Ok(ComponentJson::from_formula(&kind.to_string(), &r))
    };
    match method {
        MethodArg::Brute => brute(),
        MethodArg::Formula => formula(),
        MethodArg::Auto => match brute() {
            Err(CliError::CapExceeded(why)) => formula().map_err(|e| match e {
                CliError::NoFormula(_) => CliError::CapExceeded(why),
                other => other,
            }),
            other => other,
        },
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Info { spec } => {
            let loaded = Loaded::new(&spec, cli.enum_cap)?;
            let report = full_report(&loaded, cli.pair_cap)?;
            let brute = brute_force_note(&loaded);
            emit(cli.json, &report::report_json(&loaded.doc, &report, &brute, false), || {
                report::report_text(&report, &brute, false)
            })?;
        }
        Command::Verify { spec } => {
            let loaded = Loaded::new(&spec, cli.enum_cap)?;
            let report = full_report(&loaded, cli.pair_cap)?;
            let brute = brute_force_note(&loaded);
            emit(cli.json, &report::report_json(&loaded.doc, &report, &brute, true), || {
                report::report_text(&report, &brute, true)
            })?;
            if !report.all_match() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Delta { spec, method } => {
            let loaded = Loaded::new(&spec, cli.enum_cap)?;
            let out = components(&loaded, GraphKind::Cyclic, method, cli.pair_cap)?;
            emit(cli.json, &out, || format!("{}\n", out.text()))?;
        }
        Command::Gamma { spec, method } => {
            let loaded = Loaded::new(&spec, cli.enum_cap)?;
            let out = components(&loaded, GraphKind::Commuting, method, cli.pair_cap)?;
            emit(cli.json, &out, || format!("{}\n", out.text()))?;
        }
        Command::ExportDot {
            spec,
            graph,
            out,
            labels,
        } => {
            let loaded = Loaded::new(&spec, cli.enum_cap)?;
            let g = loaded.require_group()?;
            let kind = match graph {
                GraphArg::Cyclic => GraphKind::Cyclic,
                GraphArg::Commuting => GraphKind::Commuting,
            };
            let dot = export_dot(g, kind, labels, cli.pair_cap)?;
            std::fs::write(&out, dot)?;
            if !cli.json {
                println!("wrote {} graph to {}", kind, out.display());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
