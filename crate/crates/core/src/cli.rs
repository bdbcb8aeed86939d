//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain error (printed as
//! `error[Name]: message`), 2 on a usage error.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::constructions::{construct_resolving, formula_metric_dim};
use crate::error::{Error, Result};
use crate::metric::{is_resolving, metric_dimension_exact, ResolvingReport, SolverConfig};
use crate::pis::{import_graph_json, Graph, PisGraph};
use crate::ring::RingSpec;
use crate::verify::{
    emit_report, run_counterexamples, run_family, Family, ReportFormat, VerifyOptions,
};

#[derive(Debug, Parser)]
#[command(
    name = "pisdim",
    version,
    about = "Prime ideal sum graphs and their metric dimension"
)]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write results here instead of standard output (`-` for stdout).
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the graph of a ring and export it.
    Build {
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Exact metric dimension of a ring's graph or of a graph file.
    Dim {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Resolving set built from the ring structure.
    Construct {
        #[arg(long)]
        ring: String,
    },
    /// Closed-form metric dimension and the family it comes from.
    Formula {
        #[arg(long)]
        ring: String,
    },
    /// Compare formula, construction and exact solver over a family of rings.
    Verify {
        /// reduced, three, chain, mixed or custom
        #[arg(long)]
        family: String,
        /// e.g. `n=3..6`, `values=4,5;max=80`, `max=2`, or `Z4 x Z2; [3,3]`
        #[arg(long)]
        params: Option<String>,
        #[arg(long, default_value = "csv", value_parser = parse_report_format)]
        format: ReportFormat,
        /// Skip the exact solver above this many vertices.
        #[arg(long, default_value_t = 100)]
        cap: u64,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// The two small mixed products outside every closed form.
    Counterexamples {
        #[arg(long, default_value = "md", value_parser = parse_report_format)]
        format: ReportFormat,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Ring such as `Z4 x Z2`, `GF(2) x GF(2) x GF(2)` or `[3,2]`.
    #[arg(long)]
    pub ring: Option<String>,
    /// Graph document in the JSON exchange format (`-` for stdin).
    #[arg(long, value_name = "FILE")]
    pub graph: Option<String>,
}

#[derive(Debug, Args)]
pub struct SolverArgs {
    /// Wall-clock budget in seconds.
    #[arg(long, default_value_t = 600)]
    pub budget: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub threads: Option<usize>,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        let mut config = SolverConfig::with_budget(Duration::from_secs(self.budget));
        if let Some(t) = self.threads {
            config.threads = t.max(1);
        }
        config
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

fn parse_report_format(s: &str) -> Result<ReportFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn read_input(path: &str) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)?;
    }
    Ok(text)
}

fn set_labels(graph: &Graph, set: &[usize]) -> String {
    let labels: Vec<&str> = set.iter().map(|&v| graph.label(v)).collect();
    format!("{{{}}}", labels.join(", "))
}

fn dim_text(ring: Option<&RingSpec>, graph: &Graph, r: &ResolvingReport) -> String {
    let mut out = String::new();
    if let Some(spec) = ring {
        let _ = writeln!(out, "ring       {spec}");
    }
    let _ = writeln!(out, "vertices   {}", graph.len());
    let _ = writeln!(out, "dimension  {} ({})", r.size(), r.status.as_str());
    let _ = writeln!(out, "basis      {}", set_labels(graph, &r.set));
    let _ = writeln!(
        out,
        "bounds     twin {}, info {}",
        r.bounds.twin, r.bounds.info
    );
    let _ = writeln!(
        out,
        "search     {} nodes, {} ms",
        r.nodes,
        r.elapsed.as_millis()
    );
    out
}

/// Runs one parsed command and returns its output.
pub fn execute(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Build { ring, format } => {
            let pis = PisGraph::build(&ring.parse()?)?;
            Ok(match (cli.json, format) {
                (true, _) | (_, GraphFormat::Json) => pis.to_json() + "\n",
                _ => pis.to_dot(),
            })
        }
        Command::Dim { input, solver } => {
            let (ring, graph) = match (&input.ring, &input.graph) {
                (Some(text), _) => {
                    let spec: RingSpec = text.parse()?;
                    let pis = PisGraph::build(&spec)?;
                    (Some(spec), pis.graph().clone())
                }
                (None, Some(path)) => {
                    let imported = import_graph_json(&read_input(path)?)?;
                    (imported.ring, imported.graph)
                }
                (None, None) => unreachable!("clap requires one input"),
            };
            let report = metric_dimension_exact(&graph, &solver.config())?;
            if cli.json {
                let mut value = report.to_json(&graph);
                value["vertices"] = json!(graph.len());
                if let Some(spec) = &ring {
                    value["ring"] = json!(spec);
                }
                Ok(serde_json::to_string_pretty(&value)? + "\n")
            } else {
                Ok(dim_text(ring.as_ref(), &graph, &report))
            }
        }
        Command::Construct { ring } => {
            let spec: RingSpec = ring.parse()?;
            let construction = construct_resolving(&spec)?;
            let pis = PisGraph::build(&spec)?;
            let set = pis.indices_of(&construction.set)?;
            let resolving = is_resolving(&pis.graph().distances(), &set);
            let labels: Vec<String> = construction.set.iter().map(|a| spec.label(a)).collect();
            if cli.json {
                let value = json!({
                    "ring": spec,
                    "theorem": construction.theorem,
                    "size": set.len(),
                    "set": construction.set,
                    "labels": labels,
                    "resolving": resolving,
                });
                return Ok(serde_json::to_string_pretty(&value)? + "\n");
            }
            Ok(format!(
                "ring       {spec}\ntheorem    {}\nsize       {}\nset        {{{}}}\nresolving  {resolving}\n",
                construction.theorem,
                set.len(),
                labels.join(", ")
            ))
        }
        Command::Formula { ring } => {
            let spec: RingSpec = ring.parse()?;
            let f = formula_metric_dim(&spec)?;
            if cli.json {
                let value = json!({
                    "ring": spec,
                    "value": f.value,
                    "theorem": f.theorem,
                    "hypothesis": f.hypothesis,
                });
                return Ok(serde_json::to_string_pretty(&value)? + "\n");
            }
            Ok(format!("{} ({}: {})\n", f.value, f.theorem, f.hypothesis))
        }
        Command::Verify {
            family,
            params,
            format,
            cap,
            solver,
        } => {
            let family = Family::parse(family, params.as_deref())?;
            let opts = VerifyOptions {
                solver: solver.config(),
                exact_cap: *cap,
            };
            let format = if cli.json {
                ReportFormat::Json
            } else {
                *format
            };
            emit_report(&run_family(&family, &opts), format)
        }
        Command::Counterexamples { format } => {
            let format = if cli.json {
                ReportFormat::Json
            } else {
                *format
            };
            emit_report(&run_counterexamples(&VerifyOptions::default()), format)
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return 2;
            }
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
    };
    let written = execute(&cli).and_then(|text| match &cli.out {
        Some(path) if path.as_os_str() != "-" => Ok(std::fs::write(path, text)?),
        _ => Ok(stdout.write_all(text.as_bytes())?),
    });
    match written {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error[{}]: {e}", e.name());
            1
        }
    }
}

pub fn main() -> ! {
    let code = run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code)
}
