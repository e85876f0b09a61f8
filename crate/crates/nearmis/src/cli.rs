//! Command-line surface.
//!
//! Every command prints one JSON [`RunReport`] on standard output. Exit
//! codes: 0 on success (and for a YES decision), 1 for a NO decision, 2 for
//! any error, with an [`ErrorReport`] on standard error.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nearmis_core::bounds::bounds_report;
use nearmis_core::extremal::{
    classify_extremal_with, enumerate_k1, generate_extremal, r_range, EdgeChoice, FamilyTag,
};
use nearmis_core::generate::Family;
use nearmis_core::kernel::kernelize;
use nearmis_core::oracle::{exact_alpha_with, exact_min_vc_with, OracleConfig, DEFAULT_CAP};
use nearmis_core::pipeline::{decide_with, Answer, DecideOptions};
use nearmis_core::vc::VcConfig;

use crate::family::parse_family;
use crate::format::{parse_graph, write_graph_file, FormatError, GraphFormat, LabeledGraph};
use crate::report::*;

#[derive(Debug, Parser)]
#[command(name = "nearmis", version, about = "Decide alpha(G) <= p - k near the size-based upper bound")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file (DIMACS `.col`/`.dimacs`/`.clq`, anything else is an edge list).
    pub input: PathBuf,
    /// Override the format guessed from the extension.
    #[arg(long, value_parser = parse_format)]
    pub format: Option<GraphFormat>,
}

fn parse_format(s: &str) -> Result<GraphFormat, String> {
    s.parse().map_err(|e: FormatError| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Upper bounds p, p1 (and p2 with --p2).
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        p2: bool,
    },
    /// Decide alpha(G) <= p - k with a certificate.
    Decide {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
        /// Go straight to kernelization (diagnostics).
        #[arg(long)]
        skip_bound_steps: bool,
        /// Search-tree node limit of the vertex-cover search.
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Build the kernel G_{p,k}.
    Kernel {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
        /// Write the kernel as an edge list (external ids) to this path.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Exact independence number and minimum vertex cover by brute force.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, conflicts_with = "vc")]
        alpha: bool,
        #[arg(long)]
        vc: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Write a graph from a named family.
    Gen {
        /// Family name (`empty`, `complete`, `cycle`, `path`, `petersen`,
        /// `h_np`, `gnp`) or an expression such as `join(complete(1),empty(4))`.
        #[arg(long)]
        family: String,
        /// Arguments of a bare family name.
        #[arg(long, num_args = 1..)]
        args: Vec<String>,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_parser = parse_format)]
        out_format: Option<GraphFormat>,
    },
    /// Extremal kernels for k = 1, 2, 3.
    Extremal {
        #[command(subcommand)]
        action: ExtremalCommand,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChoiceArg {
    Lower,
    Upper,
    Random,
}

#[derive(Debug, Subcommand)]
pub enum ExtremalCommand {
    /// Write one member of a family such as `k2_c1`.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value_t = ChoiceArg::Lower)]
        choice: ChoiceArg,
        /// Required with `--choice random`.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_parser = parse_format)]
        out_format: Option<GraphFormat>,
    },
    /// Match a kernel with alpha = p - k + 1 against the case list.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Exhaustive k = 1 check over all small labeled graphs.
    Enumerate {
        /// Values of p (default 3 4 5).
        #[arg(long, num_args = 1..)]
        p: Vec<usize>,
        /// Largest vertex count (default p + 1).
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Core(#[from] nearmis_core::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Format(FormatError::Io { .. }) => "io",
            CliError::Format(_) => "parse",
            CliError::Core(e) => e.kind(),
        }
    }

    pub fn to_report(&self) -> ErrorReport {
        let message = match self {
            CliError::Core(e) => e.message().to_string(),
            other => other.to_string(),
        };
        ErrorReport {
            error: ErrorBody {
                kind: self.kind().to_string(),
                message,
            },
        }
    }
}

/// Output of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub report: RunReport,
    pub exit_code: i32,
}

fn load(input: &InputArgs) -> Result<(LabeledGraph, InputInfo), CliError> {
    let format = input.format.unwrap_or_else(|| GraphFormat::from_path(&input.input));
    let g = parse_graph(&input.input, format)?;
    let info = InputInfo {
        path: input.input.display().to_string(),
        format: format.name().to_string(),
        n: g.graph.n(),
        m: g.graph.m(),
    };
    Ok((g, info))
}

fn out_format(path: &Path, explicit: Option<GraphFormat>) -> GraphFormat {
    explicit.unwrap_or_else(|| GraphFormat::from_path(path))
}

/// Runs a parsed command.
pub fn execute(cli: Cli) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let mut exit_code = 0;
    let mut params = Parameters::default();
    let (command, input, result) = match cli.command {
        Command::Bounds { input, p2 } => {
            let (g, info) = load(&input)?;
            params.with_p2 = p2;
            let b = bounds_report(&g.graph, p2);
            ("bounds", Some(info), Payload::Bounds((&b).into()))
        }
        Command::Decide {
            input,
            k,
            skip_bound_steps,
            node_limit,
        } => {
            let (g, info) = load(&input)?;
            params.k = Some(k);
            params.skip_bound_steps = skip_bound_steps;
            params.node_limit = node_limit;
            let mut opts = DecideOptions {
                skip_bound_steps,
                ..Default::default()
            };
            if let Some(limit) = node_limit {
                opts.vc = VcConfig { node_limit: limit };
            }
            let d = decide_with(&g.graph, k, &opts)?;
            if d.answer == Answer::No {
                exit_code = 1;
            }
            ("decide", Some(info), Payload::Decision(DecisionPayload::new(&d, &g)))
        }
        Command::Kernel { input, k, emit } => {
            let (g, info) = load(&input)?;
            params.k = Some(k);
            let kr = kernelize(&g.graph, k)?;
            let mut payload = KernelPayload::new(&kr, &g);
            if let Some(path) = emit {
                let labeled = LabeledGraph {
                    graph: kr.kernel.clone(),
                    labels: g.external(&kr.mapping),
                };
                write_graph_file(&path, &labeled, GraphFormat::Edgelist)?;
                payload.emitted = Some(path.display().to_string());
            }
            ("kernel", Some(info), Payload::Kernel(payload))
        }
        Command::Oracle {
            input,
            alpha,
            vc,
            cap,
        } => {
            let (g, info) = load(&input)?;
            params.cap = Some(cap);
            let cfg = OracleConfig { cap };
            let both = !alpha && !vc;
            let mut payload = OraclePayload {
                alpha: None,
                min_vc: None,
            };
            if alpha || both {
                let (value, w) = exact_alpha_with(&g.graph, &cfg)?;
                payload.alpha = Some(ExactValue {
                    value,
                    witness: g.external(&w),
                });
            }
            if vc || both {
                let (value, w) = exact_min_vc_with(&g.graph, &cfg)?;
                payload.min_vc = Some(ExactValue {
                    value,
                    witness: g.external(&w),
                });
            }
            ("oracle", Some(info), Payload::Oracle(payload))
        }
        Command::Gen {
            family,
            args,
            seed,
            out,
            out_format: fmt,
        } => {
            params.seed = Some(seed);
            let expr = if args.is_empty() {
                family
            } else {
                format!("{family}({})", args.join(","))
            };
            let fam: Family = parse_family(&expr).map_err(CliError::Usage)?;
            let graph = fam.build(seed)?;
            let fmt = out_format(&out, fmt);
            let labeled = LabeledGraph::identity(graph);
            write_graph_file(&out, &labeled, fmt)?;
            let payload = GeneratedPayload {
                family: expr,
                n: labeled.graph.n(),
                m: labeled.graph.m(),
                out: out.display().to_string(),
                format: fmt.name().to_string(),
            };
            ("gen", None, Payload::Generated(payload))
        }
        Command::Extremal { action } => match action {
            ExtremalCommand::Generate {
                family,
                p,
                choice,
                seed,
                out,
                out_format: fmt,
            } => {
                let tag = FamilyTag::parse(&family)
                    .filter(|t| *t != FamilyTag::Unmatched)
                    .ok_or_else(|| CliError::Usage(format!("unknown extremal family `{family}`")))?;
                let choice = match (choice, seed) {
                    (ChoiceArg::Lower, _) => EdgeChoice::Lower,
                    (ChoiceArg::Upper, _) => EdgeChoice::Upper,
                    (ChoiceArg::Random, Some(s)) => EdgeChoice::Random(s),
                    (ChoiceArg::Random, None) => {
                        return Err(CliError::Usage("--choice random needs --seed".into()))
                    }
                };
                params.p = Some(p);
                params.seed = seed;
                let graph = generate_extremal(tag, p, choice)?;
                let fmt = out_format(&out, fmt);
                let labeled = LabeledGraph::identity(graph);
                write_graph_file(&out, &labeled, fmt)?;
                let payload = GeneratedPayload {
                    family: tag.name().to_string(),
                    n: labeled.graph.n(),
                    m: labeled.graph.m(),
                    out: out.display().to_string(),
                    format: fmt.name().to_string(),
                };
                ("extremal generate", None, Payload::Generated(payload))
            }
            ExtremalCommand::Classify { input, p, k, cap } => {
                let (g, info) = load(&input)?;
                params.p = Some(p);
                params.k = Some(k);
                params.cap = Some(cap);
                let a = classify_extremal_with(&g.graph, p, k, &OracleConfig { cap })?;
                let range = r_range(p, k)?;
                let payload = ExtremalPayload::new(&a, [*range.start(), *range.end()], &g);
                ("extremal classify", Some(info), Payload::Extremal(payload))
            }
            ExtremalCommand::Enumerate { p, max_n } => {
                let ps = if p.is_empty() { vec![3, 4, 5] } else { p };
                let entries = ps
                    .iter()
                    .map(|&p| enumerate_k1(p, max_n.unwrap_or(p + 1)).map(|s| (&s).into()))
                    .collect::<Result<Vec<EnumerationEntry>, _>>()?;
                params.k = Some(1);
                (
                    "extremal enumerate",
                    None,
                    Payload::Enumeration(EnumerationPayload { k: 1, entries }),
                )
            }
        },
    };
    let report = RunReport {
        command: command.to_string(),
        input,
        parameters: params,
        result,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    Ok(Outcome { report, exit_code })
}

/// Parses arguments, runs the command and returns
/// `(stdout, stderr, exit code)`.
pub fn run<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (e.to_string(), String::new(), 0);
            }
            let err = CliError::Usage(e.to_string().trim().to_string());
            return (String::new(), error_json(&err), 2);
        }
    };
    match execute(cli) {
        Ok(out) => {
            let json = serde_json::to_string_pretty(&out.report).expect("report serializes");
            (json, String::new(), out.exit_code)
        }
        Err(err) => (String::new(), error_json(&err), 2),
    }
}

fn error_json(err: &CliError) -> String {
    serde_json::to_string(&err.to_report()).expect("error serializes")
}
