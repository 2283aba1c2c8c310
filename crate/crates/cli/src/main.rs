use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use chordal_contract::clique_tree::{to_dot, TreeDecomposition};
use chordal_contract::contractibility::{full_report, Method, ReportOptions};
use chordal_contract::generators::{Family, GenSpec};
use chordal_contract::separators::{
    compare_separator_sources, minimum_cutsets, vertex_connectivity, DEFAULT_ORACLE_BOUND,
};
use chordal_contract::verify::{self, VerifyConfig};
use chordal_contract::{
    build_clique_tree, is_chordal, parse_graph, serialize_graph, Chordality, CliqueTree, Error,
    Format, Graph,
};

#[derive(Parser)]
#[command(
    name = "chordal-contract",
    version,
    about = "Contractible edges in k-connected chordal graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Dimacs,
}

impl From<GraphFormat> for Format {
    fn from(f: GraphFormat) -> Format {
        match f {
            GraphFormat::Edgelist => Format::EdgeList,
            GraphFormat::Dimacs => Format::Dimacs,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Theorem,
    Oracle,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Chordal,
    Ktree,
    Split,
    AllGraphs,
}

#[derive(Args)]
struct Input {
    /// Graph file, or '-' for standard input.
    #[arg(default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: GraphFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Chordality verdict with a perfect elimination order or a chordless cycle.
    CheckChordal {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Clique tree of each connected component.
    CliqueTree {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "dot")]
        output: Output,
    },
    /// Tree-edge separators compared with the brute-force minimal separators.
    Separators {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        max_oracle_n: usize,
    },
    /// Vertex connectivity and, within the oracle bound, all minimum cut sets.
    Connectivity {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        max_oracle_n: usize,
    },
    /// Per-edge contractibility report.
    Contractible {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        max_oracle_n: usize,
    },
    /// Generate a seeded graph.
    Gen {
        #[arg(long, value_enum, default_value = "chordal")]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// k-tree width, or clique size for split graphs.
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: GraphFormat,
    },
    /// Run every property over exhaustive and seeded populations.
    Verify {
        #[arg(long, default_value_t = VerifyConfig::default().max_n)]
        max_n: usize,
        #[arg(long, default_value_t = VerifyConfig::default().samples)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        max_oracle_n: usize,
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    let text = if input.input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(&input.input)
            .map_err(|e| Failure::Usage(format!("reading {}: {e}", input.input)))?
    };
    Ok(parse_graph(&text, input.format.into())?)
}

enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Resource { .. } => Failure::Resource(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn unsupported(output: Output, command: &str) -> Failure {
    let name = match output {
        Output::Json => "json",
        Output::Text => "text",
        Output::Dot => "dot",
    };
    Failure::Usage(format!("{command} does not support --output {name}"))
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialize") + "\n"
}

fn join(items: impl IntoIterator<Item = usize>) -> String {
    items
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Clique trees per connected component, with labels in the input's ids.
fn component_trees(g: &Graph) -> Result<Vec<(Vec<usize>, CliqueTree)>, Error> {
    g.connected_components()
        .into_iter()
        .map(|component| {
            let others = (0..g.vertex_count())
                .filter(|v| component.binary_search(v).is_err())
                .collect();
            let (sub, _) = g.induced_delete(&others)?;
            Ok((component, build_clique_tree(&sub)?))
        })
        .collect()
}

fn tree_json(component: &[usize], t: &CliqueTree) -> serde_json::Value {
    let relabel =
        |s: &chordal_contract::VertexSet| s.iter().map(|&v| component[v]).collect::<Vec<usize>>();
    json!({
        "nodes": t.labels().iter().map(relabel).collect::<Vec<_>>(),
        "edges": t.tree_edges().iter().enumerate().map(|(i, &(x, y))| json!({
            "x": x,
            "y": y,
            "label": relabel(&t.edge_label(i)),
        })).collect::<Vec<_>>(),
    })
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    match cli.command {
        Command::CheckChordal { input, output } => {
            let g = read_graph(&input)?;
            let verdict = is_chordal(&g);
            let text = match (output, &verdict) {
                (Output::Json, Chordality::Chordal { peo }) => {
                    pretty(&json!({ "chordal": true, "peo": peo }))
                }
                (
                    Output::Json,
                    Chordality::NotChordal {
                        violating_vertex,
                        cycle,
                    },
                ) => pretty(&json!({
                    "chordal": false,
                    "violating_vertex": violating_vertex,
                    "cycle": cycle,
                })),
                (Output::Text, Chordality::Chordal { peo }) => {
                    format!(
                        "chordal\nperfect elimination order: {}\n",
                        join(peo.as_slice().iter().copied())
                    )
                }
                (Output::Text, Chordality::NotChordal { cycle, .. }) => {
                    format!(
                        "non-chordal\nchordless cycle: {}\n",
                        join(cycle.iter().copied())
                    )
                }
                (Output::Dot, _) => return Err(unsupported(output, "check-chordal")),
            };
            Ok((text, 0))
        }
        Command::CliqueTree { input, output } => {
            let g = read_graph(&input)?;
            let trees = component_trees(&g)?;
            let text = match output {
                Output::Dot if trees.len() == 1 => {
                    // Component ids coincide with graph ids for a connected graph.
                    to_dot(&trees[0].1)
                }
                Output::Dot => {
                    let mut out = String::new();
                    for (i, (component, t)) in trees.iter().enumerate() {
                        let dot = to_dot(t);
                        let body =
                            dot.replace("graph clique_tree", &format!("graph clique_tree_{i}"));
                        let _ = writeln!(
                            out,
                            "// component {{{}}}",
                            join(component.iter().copied()).replace(' ', ",")
                        );
                        out.push_str(&body);
                    }
                    out
                }
                Output::Json => pretty(&json!({
                    "trees": trees.iter().map(|(c, t)| tree_json(c, t)).collect::<Vec<_>>(),
                })),
                Output::Text => {
                    let mut out = String::new();
                    for (component, t) in &trees {
                        let v = tree_json(component, t);
                        let _ = writeln!(out, "nodes: {}", v["nodes"]);
                        let _ = writeln!(out, "edges: {}", v["edges"]);
                    }
                    out
                }
            };
            Ok((text, 0))
        }
        Command::Separators {
            input,
            output,
            max_oracle_n,
        } => {
            let g = read_graph(&input)?;
            let tree = build_clique_tree(&g)?;
            let (_, report) = compare_separator_sources(&g, &tree, max_oracle_n)?;
            let text = match output {
                Output::Json => pretty(&serde_json::to_value(&report).expect("report serializes")),
                Output::Text => {
                    let v = serde_json::to_value(&report).expect("report serializes");
                    let mut out = String::new();
                    for key in [
                        "kappa",
                        "m_prime",
                        "m_double_prime",
                        "oracle",
                        "missing_from_m2",
                        "extra_in_m2",
                        "m_prime_matches_oracle",
                    ] {
                        let _ = writeln!(out, "{key}: {}", v[key]);
                    }
                    out
                }
                Output::Dot => return Err(unsupported(output, "separators")),
            };
            Ok((text, 0))
        }
        Command::Connectivity {
            input,
            output,
            max_oracle_n,
        } => {
            let g = read_graph(&input)?;
            let kappa = vertex_connectivity(&g);
            let cutsets = if g.vertex_count() <= max_oracle_n.min(64) {
                Some(minimum_cutsets(&g, max_oracle_n)?.cutsets)
            } else {
                None
            };
            let text = match output {
                Output::Json => pretty(&json!({ "kappa": kappa, "cutsets": cutsets })),
                Output::Text => {
                    let mut out = format!("kappa: {kappa}\n");
                    match &cutsets {
                        Some(sets) => {
                            for s in sets {
                                let _ = writeln!(out, "cut set: {}", join(s.iter().copied()));
                            }
                        }
                        None => out.push_str(
                            "cut sets: not enumerated (graph exceeds the oracle bound)\n",
                        ),
                    }
                    out
                }
                Output::Dot => return Err(unsupported(output, "connectivity")),
            };
            Ok((text, 0))
        }
        Command::Contractible {
            input,
            output,
            method,
            max_oracle_n,
        } => {
            let g = read_graph(&input)?;
            let opts = ReportOptions {
                method: match method {
                    MethodArg::Theorem => Method::Theorem,
                    MethodArg::Oracle => Method::Oracle,
                    MethodArg::Both => Method::Both,
                },
                oracle_bound: max_oracle_n,
            };
            let report = full_report(&g, opts)?;
            let text = match output {
                Output::Json => pretty(&serde_json::to_value(&report).expect("report serializes")),
                Output::Text => {
                    let mut out = format!(
                        "kappa: {}\nn: {}\nm: {}\ncontractible: {}\n",
                        report.kappa, report.n, report.m, report.contractible_count
                    );
                    for v in &report.edges {
                        let _ = writeln!(
                            out,
                            "{}: theorem {} oracle {}",
                            v.edge,
                            serde_json::to_value(v.theorem).expect("verdict serializes"),
                            serde_json::to_value(v.oracle).expect("verdict serializes")
                        );
                    }
                    let _ = writeln!(out, "discrepancies: {}", report.discrepancies.len());
                    out
                }
                Output::Dot => return Err(unsupported(output, "contractible")),
            };
            Ok((text, 0))
        }
        Command::Gen {
            family,
            n,
            k,
            density,
            seed,
            format,
        } => {
            let spec = GenSpec {
                family: match family {
                    FamilyArg::Chordal => Family::Chordal,
                    FamilyArg::Ktree => Family::Ktree,
                    FamilyArg::Split => Family::Split,
                    FamilyArg::AllGraphs => Family::AllGraphs,
                },
                n,
                k,
                density,
                seed,
            };
            let g = spec.generate()?;
            let header = match format {
                GraphFormat::Edgelist => format!("# gen {}\n", spec.describe()),
                GraphFormat::Dimacs => format!("c gen {}\n", spec.describe()),
            };
            Ok((header + &serialize_graph(&g, format.into()), 0))
        }
        Command::Verify {
            max_n,
            samples,
            max_oracle_n,
            seed,
            output,
        } => {
            let config = VerifyConfig {
                max_n,
                samples,
                max_oracle_n,
                seed,
            };
            let report = verify::run(&config)?;
            let text = match output {
                Output::Json => {
                    eprint!("{}", report.summary());
                    report.to_json()
                }
                Output::Text => report.summary(),
                Output::Dot => return Err(unsupported(output, "verify")),
            };
            Ok((text, report.exit_code() as u8))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
