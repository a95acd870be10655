//! `bcast`: broadcast domination and multipacking from the command line.
//!
//! JSON goes to standard output (or `--output`); `--pretty` adds a
//! readable summary on standard error. Exit status is 0 on success, 1 when
//! a certificate or the reproduction suite fails, 2 on usage or input
//! errors.

mod cert;
mod input;
mod reproduce;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use broadcast_core::chordal::{strongly_chordal, Verdict};
use broadcast_core::exact::*;
use broadcast_core::farber::{farber_broadcast, farber_domination, FarberState};
use broadcast_core::generators::InstanceSpec;
use broadcast_core::lp::{fractional_multipacking_number, solve_lp, Sense};
use broadcast_core::matrix::extended_matrix;
use broadcast_core::treemp::find_tree_multipacking_traced;
use broadcast_core::LabeledGraph;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cert::*;
use input::{vertex, Input};

#[derive(Debug, Parser)]
#[command(name = "bcast", version, about = "Broadcast domination and multipacking solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print a readable summary to standard error.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Also write the graph in DOT format to this file.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Param {
    Gamma,
    Rho,
    Gammab,
    Mp,
    Mpf,
    Gammabf,
    Bounds,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a parameter exactly, with its certificate.
    Compute {
        param: Param,
        #[command(flatten)]
        input: Input,
        /// Horizon for `mp`; the diameter by default.
        #[arg(short)]
        k: Option<usize>,
        /// Write a standalone certificate file.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Check a certificate file against a graph.
    Verify {
        cert_file: PathBuf,
        #[command(flatten)]
        input: Input,
    },
    /// Primal-dual domination along a strong elimination ordering, or the
    /// broadcast variant on trees.
    Farber {
        #[command(flatten)]
        input: Input,
        /// Lines `name weight`; unlisted vertices weigh 1.
        #[arg(long, conflicts_with = "broadcast")]
        weights: Option<PathBuf>,
        /// Dominating broadcast and multipacking of a tree.
        #[arg(long)]
        broadcast: bool,
        /// Include the scan trace (labels are vertex ids).
        #[arg(long)]
        trace: bool,
    },
    /// Maximum multipacking of a tree by diametrical-path reduction.
    Treemp {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        trace: bool,
    },
    /// Strongly chordal recognition.
    Chordal {
        #[command(flatten)]
        input: Input,
    },
    /// Write a generated instance in graph-file format.
    Generate {
        family: String,
        params: Vec<usize>,
        /// Seed for `random-tree`.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Distance facts around a peripheral vertex.
    Facts {
        #[command(flatten)]
        input: Input,
        /// Name of a peripheral vertex.
        #[arg(long)]
        alpha: String,
    },
    /// Recompute the named-instance values and compare.
    Reproduce,
}

enum Output {
    Json { value: Value, ok: bool, summary: String },
    Text { text: String, summary: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(ok) => ExitCode::from(if ok { 0 } else { 1 }),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let (graph, output) = dispatch(&cli.command)?;
    if let (Some(path), Some(lg)) = (&cli.dot, graph.as_ref()) {
        write_file(path, &lg.graph.to_dot(Some(&lg.names)))?;
    }
    let (body, ok) = match output {
        Output::Json { value, ok, summary } => {
            if cli.pretty {
                eprint!("{summary}");
            }
            (serde_json::to_string_pretty(&value)? + "\n", ok)
        }
        Output::Text { text, summary } => {
            if cli.pretty {
                eprint!("{summary}");
            }
            (text, true)
        }
    };
    match &cli.output {
        Some(path) => write_file(path, &body)?,
        None => print!("{body}"),
    }
    Ok(ok)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// `key: value` lines for the top-level fields of an object.
fn summarize(value: &Value) -> String {
    match value.as_object() {
        Some(map) => map
            .iter()
            .map(|(k, v)| format!("{k:>20}: {}\n", serde_json::to_string(v).expect("value serializes")))
            .collect(),
        None => format!("{value}\n"),
    }
}

fn json_out(value: Value, ok: bool) -> Output {
    let summary = summarize(&value);
    Output::Json { value, ok, summary }
}

fn dispatch(command: &Command) -> Result<(Option<LabeledGraph>, Output)> {
    Ok(match command {
        Command::Compute { param, input, k, cert } => {
            let lg = input.load()?;
            let out = compute(&lg, *param, *k, cert.as_deref())?;
            (Some(lg), json_out(out, true))
        }
        Command::Verify { cert_file, input } => {
            let lg = input.load()?;
            let text = fs::read_to_string(cert_file).with_context(|| format!("reading {}", cert_file.display()))?;
            let verdict = match serde_json::from_str::<CertificateFile>(&text) {
                Ok(c) => cert::verify(&lg, &c),
                Err(e) => cert::Verdict {
                    valid: false,
                    report: json!({ "valid": false, "error": format!("malformed certificate: {e}") }),
                },
            };
            (Some(lg), json_out(verdict.report, verdict.valid))
        }
        Command::Farber { input, weights, broadcast, trace } => {
            let lg = input.load()?;
            let out = if *broadcast {
                farber_tree(&lg, *trace)?
            } else {
                farber_weighted(&lg, weights.as_deref(), *trace)?
            };
            (Some(lg), json_out(out, true))
        }
        Command::Treemp { input, trace } => {
            let lg = input.load()?;
            let out = treemp(&lg, *trace)?;
            (Some(lg), json_out(out, true))
        }
        Command::Chordal { input } => {
            let lg = input.load()?;
            let r = strongly_chordal(&lg.graph);
            let out = json!({
                "verdict": r.verdict,
                "ordering": r.ordering.map(|o| lg.names_of(o.order())),
                "witness": r.witness.map(|w| lg.names_of(&w)),
            });
            (Some(lg), json_out(out, true))
        }
        Command::Generate { family, params, seed } => {
            let spec = InstanceSpec {
                family: family.clone(),
                params: params.clone(),
                seed: *seed,
            };
            let lg = spec.build()?;
            let text = if lg.names.iter().enumerate().all(|(i, s)| *s == i.to_string()) {
                lg.graph.to_edge_list()
            } else {
                lg.to_text()
            };
            let summary = format!("{}: {} vertices, {} edges\n", spec, lg.graph.n(), lg.graph.edge_count());
            (Some(lg), Output::Text { text, summary })
        }
        Command::Facts { input, alpha } => {
            let lg = input.load()?;
            let r = extremal_facts_check(&lg.graph, vertex(&lg, alpha)?)?;
            let facts: Vec<Value> = r
                .facts
                .iter()
                .map(|f| json!({ "fact": f.fact, "passed": f.passed, "witness": f.witness.as_ref().map(|w| lg.names_of(w)) }))
                .collect();
            let out = json!({ "alpha": alpha, "diameter": r.diameter, "all_passed": r.all_passed(), "facts": facts });
            (Some(lg), json_out(out, true))
        }
        Command::Reproduce => {
            let rows = reproduce::run()?;
            let ok = rows.iter().all(|r| r.pass);
            let summary = reproduce::render(&rows);
            let value = json!({ "all_passed": ok, "rows": rows });
            (None, Output::Json { value, ok, summary })
        }
    })
}

fn write_cert(path: &Path, cert: &CertificateFile) -> Result<()> {
    write_file(path, &(serde_json::to_string_pretty(cert)? + "\n"))
}

fn compute(lg: &LabeledGraph, param: Param, k: Option<usize>, cert: Option<&Path>) -> Result<Value> {
    let g = &lg.graph;
    if k.is_some() && !matches!(param, Param::Mp) {
        bail!("-k only applies to mp");
    }
    let solved = |r: SolveResult, certificate: Value| {
        json!({ "parameter": r.parameter, "value": r.value, "certificate": certificate, "nodes_explored": r.nodes_explored })
    };
    let powers = |pairs: Vec<(usize, usize)>| -> BTreeMap<String, usize> {
        pairs.into_iter().map(|(v, p)| (lg.name(v).to_string(), p)).collect()
    };
    Ok(match param {
        Param::Gamma | Param::Gammab => {
            let r = match param {
                Param::Gamma => domination_number(g)?,
                _ => broadcast_number(g)?,
            };
            let pairs = match &r.certificate {
                Certificate::Broadcast(b) => b.support(),
                Certificate::VertexSet { vertices } => vertices.iter().map(|&v| (v, 1)).collect(),
                Certificate::Multipacking(_) => unreachable!("covering solvers return covers"),
            };
            let payload = BroadcastPayload { powers: powers(pairs) };
            if let Some(path) = cert {
                write_cert(path, &CertificateFile::new(lg, CertKind::Broadcast, &payload))?;
            }
            solved(r, json!(payload))
        }
        Param::Rho | Param::Mp => {
            let r = match param {
                Param::Rho => two_packing_number(g)?,
                _ => multipacking_number(g, k)?,
            };
            let (members, horizon) = match &r.certificate {
                Certificate::Multipacking(m) => (m.members().to_vec(), m.horizon()),
                Certificate::VertexSet { vertices } => (vertices.clone(), 1),
                Certificate::Broadcast(_) => unreachable!("packing solvers return packings"),
            };
            let payload = MultipackingPayload {
                members: lg.names_of(&members),
                k: Some(horizon),
            };
            if let Some(path) = cert {
                write_cert(path, &CertificateFile::new(lg, CertKind::Multipacking, &payload))?;
            }
            solved(r, json!(payload))
        }
        Param::Mpf => {
            let (value, y) = fractional_multipacking_number(g)?;
            let weights = (0..g.n())
                .filter(|&v| !y.weight(v).is_zero())
                .map(|v| (lg.name(v).to_string(), y.weight(v).clone()))
                .collect();
            let payload = FractionalPayload { weights };
            if let Some(path) = cert {
                write_cert(path, &CertificateFile::new(lg, CertKind::Fractional, &payload))?;
            }
            json!({ "parameter": "mp_f", "value": value, "certificate": payload })
        }
        Param::Gammabf => {
            if cert.is_some() {
                bail!("no certificate type for fractional broadcasts; use mpf");
            }
            let a = extended_matrix(g)?;
            let r = solve_lp(&a, Sense::Cover)?;
            let x: BTreeMap<String, _> = a
                .col_index
                .iter()
                .zip(&r.primal_solution)
                .filter(|(_, q)| !q.is_zero())
                .map(|(&(v, k), q)| (format!("{}:{k}", lg.name(v)), q.clone()))
                .collect();
            json!({ "parameter": "gamma_b_f", "value": r.optimum, "balls": x })
        }
        Param::Bounds => {
            if cert.is_some() {
                bail!("bounds has no certificate");
            }
            let mut report = serde_json::to_value(bound_report(g)?)?;
            report["mp_f"] = json!(fractional_multipacking_number(g)?.0);
            report
        }
    })
}

fn read_weights(lg: &LabeledGraph, path: &Path) -> Result<Vec<u64>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut w = vec![1; lg.graph.n()];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [name, weight] = fields[..] else {
            bail!("{}:{}: expected `name weight`", path.display(), i + 1);
        };
        w[vertex(lg, name)?] = weight
            .parse()
            .with_context(|| format!("{}:{}: bad weight {weight:?}", path.display(), i + 1))?;
    }
    Ok(w)
}

fn with_trace(mut out: Value, state: &FarberState, trace: bool) -> Value {
    if trace {
        out["trace"] = json!(state.trace);
    }
    out
}

fn farber_weighted(lg: &LabeledGraph, weights: Option<&Path>, trace: bool) -> Result<Value> {
    let g = &lg.graph;
    let w = match weights {
        Some(path) => read_weights(lg, path)?,
        None => vec![1; g.n()],
    };
    let report = strongly_chordal(g);
    let Some(ordering) = report.ordering else {
        debug_assert_eq!(report.verdict, Verdict::NotStronglyChordal);
        let witness = lg.names_of(&report.witness.unwrap_or_default());
        bail!("graph is not strongly chordal; no simple vertex among {}", witness.join(" "));
    };
    let out = farber_domination(g, ordering.order(), &w)?;
    let packing: BTreeMap<String, u64> = (0..g.n())
        .filter(|&v| !out.packing.weight(v).is_zero())
        .map(|v| (lg.name(v).to_string(), out.packing.weight(v).numer().try_into().expect("integral weight")))
        .collect();
    let value = json!({
        "ordering": lg.names_of(ordering.order()),
        "dominating": lg.names_of(&out.dominating),
        "packing": packing,
        "weight": out.dominating.iter().map(|&v| w[v]).sum::<u64>(),
    });
    Ok(with_trace(value, &out.state, trace))
}

fn farber_tree(lg: &LabeledGraph, trace: bool) -> Result<Value> {
    let out = farber_broadcast(&lg.graph)?;
    let powers: BTreeMap<String, usize> = out
        .broadcast
        .support()
        .into_iter()
        .map(|(v, p)| (lg.name(v).to_string(), p))
        .collect();
    let value = json!({
        "cost": out.broadcast.cost(),
        "broadcast": powers,
        "multipacking": lg.names_of(out.multipacking.members()),
    });
    Ok(with_trace(value, &out.state, trace))
}

fn treemp(lg: &LabeledGraph, trace: bool) -> Result<Value> {
    let run = find_tree_multipacking_traced(&lg.graph)?;
    let pairs = |edges: &[(usize, usize)]| -> Vec<[String; 2]> {
        edges.iter().map(|&(u, v)| [lg.name(u).to_string(), lg.name(v).to_string()]).collect()
    };
    let mut value = json!({
        "size": run.multipacking.len(),
        "multipacking": lg.names_of(run.multipacking.members()),
        "split": pairs(&run.split.edges),
    });
    if trace {
        let steps: Vec<Value> = run
            .trace
            .iter()
            .map(|s| {
                json!({
                    "iteration": s.iteration,
                    "op": s.op,
                    "multipacking": lg.names_of(&s.multipacking),
                    "split": pairs(&s.split),
                    "path": lg.names_of(&s.path),
                    "size": s.size,
                })
            })
            .collect();
        value["trace"] = json!(steps);
    }
    Ok(value)
}
