//! `annsub`: build annihilating-submodule graphs, compute their parameters,
//! and run the claim suite.
//!
//! Exit status: 0 on success, 1 when the suite reports a failure or an
//! unlisted discrepancy, 2 on usage errors, malformed input or exceeded caps.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use annsub_core::suite::{self, Family, SuiteConfig};
use annsub_core::{
    build_ag, enumerate_submodules, export_graph, structure_report, Caps, ExportFormat, ModuleSpec, ParamReport,
    RingSpec, Variant, DEFAULT_EXACT_CAP,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "annsub", version, about = "Annihilating-submodule graphs of finite modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural facts about a module: annihilator, maximal submodules, J(M), ...
    Describe {
        #[command(flatten)]
        input: ModuleArgs,
        #[arg(long, value_enum, default_value_t = TextFormat::Json)]
        format: TextFormat,
    },
    /// Build AG(M) (or AG(M)* with --star) and export it.
    Graph {
        #[command(flatten)]
        input: ModuleArgs,
        #[arg(long)]
        star: bool,
        /// dot, json, or csv (edge list)
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// Metric, domination, irredundance and colouring parameters of AG(M).
    Params {
        #[command(flatten)]
        input: ModuleArgs,
        #[arg(long)]
        star: bool,
        #[arg(long, env = "ANNSUB_EXACT_CAP", default_value_t = DEFAULT_EXACT_CAP)]
        exact_cap: usize,
        #[arg(long, value_enum, default_value_t = TextFormat::Json)]
        format: TextFormat,
    },
    /// Claim suite over the generated module families.
    Suite {
        #[command(subcommand)]
        command: SuiteCommand,
    },
    /// Generated module families.
    Family {
        #[command(subcommand)]
        command: FamilyCommand,
    },
}

#[derive(Subcommand)]
enum SuiteCommand {
    /// Check every selected claim on every instance of the selected families.
    Run {
        /// Family to include; repeat or comma-separate. Default: all.
        #[arg(long, value_delimiter = ',')]
        family: Vec<String>,
        #[arg(long, default_value_t = suite::DEFAULT_BUDGET)]
        budget: u64,
        /// Comma-separated claim ids as they appear in the report; "C-<number>" also works.
        #[arg(long)]
        claims: Option<String>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, env = "ANNSUB_EXACT_CAP", default_value_t = DEFAULT_EXACT_CAP)]
        exact_cap: usize,
        #[command(flatten)]
        caps: CapArgs,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// List the module families and, with --budget, their instances.
    List {
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Args)]
struct ModuleArgs {
    /// Ring moduli, e.g. "12" or "2,4".
    #[arg(long)]
    ring: String,
    /// Components separated by ';', each a generator tuple of the ideal to
    /// factor out, e.g. "12" (R itself over Z_12) or "2;3". Default: R.
    #[arg(long)]
    module: Option<String>,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args)]
struct CapArgs {
    #[arg(long, default_value_t = Caps::default().max_order)]
    max_order: u64,
    #[arg(long, default_value_t = Caps::default().max_submodules)]
    max_submodules: usize,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            max_order: self.max_order,
            max_submodules: self.max_submodules,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TextFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Md,
}

/// Failure with the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<annsub_core::Error> for Failure {
    fn from(e: annsub_core::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 2, message }
}

fn with_input(what: &str, text: &str, e: annsub_core::Error) -> Failure {
    usage(format!("{what} {text:?}: {e}"))
}

fn load(input: &ModuleArgs) -> Result<annsub_core::SubmoduleLattice, Failure> {
    let ring: RingSpec = input.ring.parse().map_err(|e| with_input("ring", &input.ring, e))?;
    let module = match &input.module {
        Some(text) => ModuleSpec::parse(&ring, text).map_err(|e| with_input("module", text, e))?,
        None => ModuleSpec::regular(ring),
    };
    Ok(enumerate_submodules(&module, &input.caps.caps())?)
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn variant(star: bool) -> Variant {
    if star {
        Variant::AgStar
    } else {
        Variant::Ag
    }
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    match cli.command {
        Command::Describe { input, format } => {
            let lattice = load(&input)?;
            let report = structure_report(&lattice);
            let json = report.to_json(&lattice);
            let out = match format {
                TextFormat::Json => pretty(&json),
                TextFormat::Text => json
                    .as_object()
                    .expect("object")
                    .iter()
                    .map(|(k, v)| format!("{k:<20} {v}\n"))
                    .collect(),
            };
            Ok((out, 0))
        }
        Command::Graph { input, star, format } => {
            let format: ExportFormat = format.parse()?;
            let lattice = load(&input)?;
            Ok((export_graph(&build_ag(&lattice, variant(star)), format), 0))
        }
        Command::Params {
            input,
            star,
            exact_cap,
            format,
        } => {
            let lattice = load(&input)?;
            let g = build_ag(&lattice, variant(star));
            let report = ParamReport::compute(&g.graph, exact_cap)?;
            let out = match format {
                TextFormat::Json => {
                    let mut json = report.to_json(&g.labels);
                    json["variant"] = g.variant.as_str().into();
                    json["ring"] = g.module.ring().to_string().into();
                    json["module"] = g.module.to_string().into();
                    json["labels"] = g.labels.clone().into();
                    pretty(&json)
                }
                TextFormat::Text => report.to_table(&g.labels),
            };
            Ok((out, 0))
        }
        Command::Suite {
            command:
                SuiteCommand::Run {
                    family,
                    budget,
                    claims,
                    format,
                    output,
                    exact_cap,
                    caps,
                },
        } => {
            let families = if family.is_empty() {
                Family::ALL.to_vec()
            } else {
                family.iter().map(|f| f.trim().parse()).collect::<Result<Vec<Family>, _>>()?
            };
            let claims = match claims {
                Some(list) => suite::parse_claims(&list)?,
                None => suite::CLAIMS.to_vec(),
            };
            let config = SuiteConfig {
                families,
                budget,
                claims,
                exact_cap,
                caps: caps.caps(),
            };
            let report = suite::run_suite(&config)?;
            let text = match format {
                ReportFormat::Json => suite::render_json(&report),
                ReportFormat::Md => suite::render_markdown(&report),
            };
            let code = report.exit_code() as u8;
            for r in report.unknown_discrepancies() {
                eprintln!("unlisted discrepancy: {} [{}] on {}", r.claim, r.part, r.instance);
            }
            match output {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
                    Ok((String::new(), code))
                }
                None => Ok((text, code)),
            }
        }
        Command::Family {
            command: FamilyCommand::List { budget },
        } => {
            let mut out = String::new();
            for f in Family::ALL {
                out.push_str(&format!("{:<18} {}\n", f.name(), f.description()));
                if let Some(b) = budget {
                    let members: Vec<String> =
                        suite::generate_family(f, b)?.iter().map(|m| m.instance_label()).collect();
                    out.push_str(&format!("{:<18} {}\n", "", members.join("; ")));
                }
            }
            Ok((out, 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
