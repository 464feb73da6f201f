//! The `scoco` command line. [`run`] takes explicit streams so it can be
//! driven from tests; the binary only forwards the process's own.
//!
//! Exit codes: 0 member or success, 1 non-member (certificate or witness
//! printed), 2 usage or input error.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::builder::{recognize, strong_comparability_recognize};
use crate::classes::{
    bipartite_scc_check, caterpillar_ordering, find_asteroidal_triple, generate_replicated_caterpillar,
    interval_routes, is_chordal, is_cocomparability, is_comparability, simple_elimination_ordering, BipartiteVerdict,
    CaterpillarPlan, ChordalVerdict, ClassName,
};
use crate::error::{Error, Result};
use crate::format::{parse_graph, read_graph6_corpus, serialize, GraphFormat};
use crate::graph::{DiagonalMode, Graph, VertexOrdering};
use crate::implication::{verify_certificate, InvertiblePairCertificate};
use crate::oracle::{
    brute_force_ordering, cross_validate, minimal_obstructions, MinimalityConvention, OracleQuery, CORPUS_SIZE_8,
    CORPUS_SIZE_9,
};
use crate::pattern::{verify_scc_ordering, PatternKind};

const SCHEMA: &str = "1";

#[derive(Parser, Debug)]
#[command(
    name = "scoco",
    version,
    about = "Strong cocomparability recognition and related graph classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Graph file, or `-` for stdin.
    file: String,
    /// matrix, edge-list or graph6; inferred from the extension when omitted.
    #[arg(long)]
    format: Option<GraphFormat>,
    /// reflexive or irreflexive.
    #[arg(long)]
    mode: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide membership in a class.
    Recognize {
        #[arg(long, default_value = "strong-cocomparability")]
        class: String,
        #[command(flatten)]
        input: Input,
    },
    /// Emit a Slash-free symmetric ordering of a reflexive graph.
    Order {
        #[command(flatten)]
        input: Input,
    },
    /// Check an ordering (comma list) or a certificate against a graph.
    Certify {
        #[command(flatten)]
        input: Input,
        /// Vertex ordering, e.g. `2,0,1,3`.
        ordering: Option<String>,
        /// JSON certificate file, bare or as printed by `recognize`.
        #[arg(long, conflicts_with = "ordering")]
        certificate: Option<String>,
    },
    /// Exhaustive search for an ordering avoiding the given patterns.
    Oracle {
        /// Comma list of slash, gamma, i2, pslash, pgamma, pi2.
        #[arg(long, value_delimiter = ',', required = true)]
        patterns: Vec<PatternKind>,
        #[command(flatten)]
        input: Input,
    },
    /// Minimal cocomparability graphs that are not strong cocomparability.
    EnumerateMinimal {
        #[arg(short = 'n')]
        n: usize,
        /// graph6 file with every non-isomorphic graph of order n (required for n >= 8).
        #[arg(long)]
        corpus: Option<String>,
        /// any or connected; defaults to the convention matching the known counts.
        #[arg(long)]
        convention: Option<MinimalityConvention>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also write the obstructions, one graph6 per line, to this file.
        #[arg(long)]
        graph6_out: Option<String>,
    },
    /// Compare every recognizer with the brute-force oracle.
    CrossValidate {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Random graphs to draw for n = 8 or 9.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generate graphs.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// A caterpillar with replicated spine vertices.
    Caterpillar {
        /// Number of spine vertices.
        #[arg(long)]
        spine: usize,
        /// Leaf counts per spine vertex, e.g. `3,0,0,1`.
        #[arg(long, value_delimiter = ',')]
        leaves: Vec<usize>,
        /// Replications as `spine_index:count`, e.g. `1:2,4:1`.
        #[arg(long, value_delimiter = ',')]
        replicate: Vec<String>,
        #[arg(long, default_value = "matrix")]
        format: GraphFormat,
    },
}

enum Outcome {
    Yes(Value),
    No(Value),
    Text(String),
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return if code == 0 { 0 } else { 2 };
        }
    };
    let outcome = dispatch(cli.command, stdin, stderr);
    let (code, body) = match outcome {
        Ok(Outcome::Yes(v)) => (0, pretty(&v)),
        Ok(Outcome::No(v)) => (1, pretty(&v)),
        Ok(Outcome::Text(t)) => (0, t),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    if stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return 2;
    }
    code
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn read_source(path: &str, stdin: &mut dyn Read) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    let res = if path == "-" {
        stdin.read_to_end(&mut buf).map(|_| ())
    } else {
        std::fs::File::open(path)
            .and_then(|mut f| f.read_to_end(&mut buf))
            .map(|_| ())
    };
    res.map_err(|e| Error::Precondition(format!("cannot read {path}: {e}")))?;
    Ok(buf)
}

fn infer_format(path: &str) -> GraphFormat {
    match Path::new(path).extension().and_then(|e| e.to_str()) {
        Some("g6") | Some("graph6") => GraphFormat::Graph6,
        Some("el") | Some("edges") => GraphFormat::EdgeList,
        _ => GraphFormat::Matrix,
    }
}

fn parse_mode(s: &str) -> Result<DiagonalMode> {
    match s {
        "reflexive" => Ok(DiagonalMode::Reflexive),
        "irreflexive" => Ok(DiagonalMode::Irreflexive),
        other => Err(Error::Precondition(format!(
            "unknown mode `{other}` (expected reflexive or irreflexive)"
        ))),
    }
}

fn load(input: &Input, default_mode: DiagonalMode, stdin: &mut dyn Read) -> Result<Graph> {
    let mode = match &input.mode {
        Some(m) => parse_mode(m)?,
        None => default_mode,
    };
    let format = input.format.unwrap_or_else(|| infer_format(&input.file));
    parse_graph(&read_source(&input.file, stdin)?, format, mode)
}

fn parse_ordering(s: &str, n: usize) -> Result<VertexOrdering> {
    let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']');
    let perm = trimmed
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Precondition(format!("ordering entry `{t}` is not a vertex index")))
        })
        .collect::<Result<Vec<_>>>()?;
    VertexOrdering::new(perm, n)
}

fn dispatch(command: Command, stdin: &mut dyn Read, stderr: &mut dyn Write) -> Result<Outcome> {
    match command {
        Command::Recognize { class, input } => {
            let class: ClassName = class.parse()?;
            let g = load(&input, class.default_mode(), stdin)?;
            recognize_class(class, &g)
        }
        Command::Order { input } => {
            let g = load(&input, DiagonalMode::Reflexive, stdin)?;
            let verdict = recognize(&g)?;
            let mut body = json!({ "schema": SCHEMA, "class": ClassName::StrongCocomparability.name() });
            merge(&mut body, serde_json::to_value(&verdict).expect("verdict serializes"));
            Ok(if verdict.is_member() {
                Outcome::Yes(body)
            } else {
                Outcome::No(body)
            })
        }
        Command::Certify {
            input,
            ordering,
            certificate,
        } => {
            let g = load(&input, DiagonalMode::Reflexive, stdin)?;
            match (ordering, certificate) {
                (Some(o), None) => {
                    let ord = parse_ordering(&o, g.n())?;
                    let verdict = verify_scc_ordering(&g, &ord)?;
                    let mut body = json!({ "schema": SCHEMA, "kind": "ordering", "ordering": ord.as_slice() });
                    merge(&mut body, serde_json::to_value(&verdict).expect("verdict serializes"));
                    body["valid"] = json!(verdict.is_valid());
                    Ok(if verdict.is_valid() {
                        Outcome::Yes(body)
                    } else {
                        Outcome::No(body)
                    })
                }
                (None, Some(path)) => {
                    let text = read_source(&path, stdin)?;
                    let cert = parse_certificate(&text)?;
                    let valid = verify_certificate(&g, &cert);
                    let body = json!({ "schema": SCHEMA, "kind": "certificate", "valid": valid, "certificate": cert });
                    Ok(if valid { Outcome::Yes(body) } else { Outcome::No(body) })
                }
                _ => Err(Error::Precondition(
                    "certify needs an ordering or --certificate FILE".into(),
                )),
            }
        }
        Command::Oracle { patterns, input } => {
            let default_mode = if patterns.iter().all(|k| k.required_mode() == DiagonalMode::Irreflexive) {
                DiagonalMode::Irreflexive
            } else {
                DiagonalMode::Reflexive
            };
            let g = load(&input, default_mode, stdin)?;
            let q = OracleQuery::new(g, patterns.iter().copied())?;
            let found = brute_force_ordering(&q)?;
            let names: Vec<&str> = q.forbidden().iter().map(|k| k.name()).collect();
            let body = json!({
                "schema": SCHEMA,
                "patterns": names,
                "found": found.is_some(),
                "ordering": found.as_ref().map(VertexOrdering::as_slice),
            });
            Ok(if found.is_some() {
                Outcome::Yes(body)
            } else {
                Outcome::No(body)
            })
        }
        Command::EnumerateMinimal {
            n,
            corpus,
            convention,
            jobs,
            graph6_out,
        } => {
            let graphs = match &corpus {
                Some(path) => {
                    let text = read_source(path, stdin)?;
                    let text =
                        String::from_utf8(text).map_err(|_| Error::Graph6(format!("corpus {path} is not ASCII")))?;
                    let graphs = read_graph6_corpus(&text, DiagonalMode::Reflexive)?;
                    let expected = match n {
                        8 => Some(CORPUS_SIZE_8),
                        9 => Some(CORPUS_SIZE_9),
                        _ => None,
                    };
                    if let Some(e) = expected.filter(|&e| e != graphs.len()) {
                        let _ = writeln!(
                            stderr,
                            "warning: corpus has {} graphs, a complete one on {n} vertices has {e}",
                            graphs.len()
                        );
                    }
                    Some(graphs)
                }
                None => None,
            };
            let summary = minimal_obstructions(n, graphs.as_deref(), jobs)?;
            let convention = convention.unwrap_or(summary.default_convention);
            let report = summary.report(convention);
            if let Some(path) = graph6_out {
                let mut text = report.graphs.join("\n");
                text.push('\n');
                std::fs::write(&path, text).map_err(|e| Error::Precondition(format!("cannot write {path}: {e}")))?;
            }
            let counts: BTreeMap<_, _> = summary
                .reports
                .iter()
                .map(|r| {
                    (
                        serde_json::to_value(r.convention)
                            .unwrap()
                            .as_str()
                            .unwrap()
                            .to_string(),
                        r.count,
                    )
                })
                .collect();
            Ok(Outcome::Yes(json!({
                "schema": SCHEMA,
                "n": n,
                "convention": report.convention,
                "count": report.count,
                "graphs": report.graphs,
                "corpus_size": summary.corpus_size,
                "counts_by_convention": counts,
                "conventions_agree": summary.conventions_agree,
            })))
        }
        Command::CrossValidate { n, jobs, samples, seed } => {
            let report = cross_validate(n, samples, seed, jobs)?;
            let clean = report.mismatches.is_empty();
            let mut body = json!({ "schema": SCHEMA });
            merge(&mut body, serde_json::to_value(&report).expect("report serializes"));
            Ok(if clean { Outcome::Yes(body) } else { Outcome::No(body) })
        }
        Command::Gen {
            what:
                GenCommand::Caterpillar {
                    spine,
                    leaves,
                    replicate,
                    format,
                },
        } => {
            let replicate = replicate
                .iter()
                .map(|s| {
                    let (i, r) = s
                        .split_once(':')
                        .ok_or_else(|| Error::Precondition(format!("replication `{s}` is not index:count")))?;
                    let parse = |t: &str| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Precondition(format!("replication `{s}` is not index:count")))
                    };
                    Ok((parse(i)?, parse(r)?))
                })
                .collect::<Result<Vec<_>>>()?;
            let plan = CaterpillarPlan::from_counts(spine, &leaves, &replicate)?;
            let g = generate_replicated_caterpillar(&plan)?;
            Ok(Outcome::Text(serialize(&g, format)))
        }
    }
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn parse_certificate(text: &[u8]) -> Result<InvertiblePairCertificate> {
    let bad = |e: serde_json::Error| Error::Precondition(format!("certificate is not valid JSON: {e}"));
    let v: Value = serde_json::from_slice(text).map_err(bad)?;
    let inner = v.get("certificate").cloned().unwrap_or(v);
    serde_json::from_value(inner).map_err(bad)
}

fn recognize_class(class: ClassName, g: &Graph) -> Result<Outcome> {
    let mut body = json!({ "schema": SCHEMA, "class": class.name() });
    let member = match class {
        ClassName::StrongCocomparability | ClassName::StrongComparability => {
            let verdict = if class == ClassName::StrongCocomparability {
                recognize(g)?
            } else {
                strong_comparability_recognize(g)?
            };
            merge(&mut body, serde_json::to_value(&verdict).expect("verdict serializes"));
            verdict.is_member()
        }
        ClassName::Comparability => is_comparability(g)?,
        ClassName::Cocomparability => is_cocomparability(g)?,
        ClassName::Chordal => match is_chordal(g)? {
            ChordalVerdict::Chordal { elimination } => {
                body["ordering"] = json!(elimination.as_slice());
                true
            }
            ChordalVerdict::NotChordal { cycle } => {
                body["cycle"] = json!(cycle);
                false
            }
        },
        ClassName::StronglyChordal => match simple_elimination_ordering(g)? {
            Some(o) => {
                body["ordering"] = json!(o.as_slice());
                true
            }
            None => false,
        },
        ClassName::Interval => {
            let routes = interval_routes(g)?;
            if !routes.agree() {
                return Err(Error::InternalDefect(format!("interval routes disagree: {routes:?}")));
            }
            if let Some((a, b, c)) = find_asteroidal_triple(g)? {
                body["asteroidal_triple"] = json!([a, b, c]);
            }
            body["routes"] = serde_json::to_value(routes).expect("routes serialize");
            routes.strongly_chordal_and_scc
        }
        ClassName::BipartiteScc => match bipartite_scc_check(g)? {
            BipartiteVerdict::Yes => {
                if g.is_connected() {
                    body["ordering"] = json!(caterpillar_ordering(g)?.as_slice());
                }
                true
            }
            BipartiteVerdict::No { witness } => {
                body["witness"] = serde_json::to_value(witness).expect("witness serializes");
                false
            }
        },
    };
    body["member"] = json!(member);
    Ok(if member { Outcome::Yes(body) } else { Outcome::No(body) })
}
