//! Command-line front end: graph classification, cover/edge ideals and
//! their symbolic powers, Betti tables, verification checks, corpus
//! sweeps, and graph6 corpus generation. All results go to stdout as
//! JSON; diagnostics go to stderr.
//!
//! Exit codes: 0 computed (or verification passed), 1 verification
//! failure, 2 usage or size error.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use covertool::cache::{Cache, CacheKey};
use covertool::corpus::generate_corpus;
use covertool::formats::{parse_graph, write_graph6};
use coverideal::{
    betti, hochster_betti, verify_colon_identity, verify_deg_linear, verify_deletion_identity,
    verify_gk_identity, verify_main_theorem, verify_reg_monotone, verify_singdeg, verify_terai,
    Field, Graph, MonomialIdeal, Subject, VerificationReport,
};

#[derive(Parser)]
#[command(name = "covertool", version, about = "Exact cover-ideal computations on graphs")]
struct Cli {
    /// Worker threads for sweeps; results are independent of this.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Homology coefficient field: `q` (rationals) or `f<p>` for prime p.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdealKind {
    Cover,
    Edge,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    /// Equivalence of the five linearity conditions
    Main,
    /// reg(S/J^(k)) nondecreasing in k
    RegMonotone,
    /// deg(J^(k)) = k deg(J) for unmixed or claw-free graphs
    DegLinear,
    /// J^(k) + (x) = u^k J'^(k) + (x)
    Deletion,
    /// (J^(k) : x1...xn) = J^(k-2)
    Colon,
    /// single-degree symbolic powers force very well-covered
    Singdeg,
    /// reg J(G) = pd S/I(G)
    Terai,
    /// polarize(J^(r)) is the cover ideal of the layer graph
    Gk,
}

impl Theorem {
    fn tag(&self) -> &'static str {
        match self {
            Theorem::Main => "main",
            Theorem::RegMonotone => "reg-monotone",
            Theorem::DegLinear => "deg-linear",
            Theorem::Deletion => "deletion",
            Theorem::Colon => "colon",
            Theorem::Singdeg => "singdeg",
            Theorem::Terai => "terai",
            Theorem::Gk => "gk",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Structural flags: isolated vertices, bipartite, claw-free, unmixed,
    /// very well-covered
    Classify {
        /// Graph file (edge list or graph6), `-` for stdin
        #[arg(default_value = "-")]
        input: String,
    },
    /// Minimal generators of the cover or edge ideal
    Ideal {
        #[arg(value_enum)]
        kind: IdealKind,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Symbolic power of the cover (or edge) ideal
    Symbolic {
        #[arg(short)]
        k: u64,
        #[arg(long, value_enum, default_value = "cover")]
        ideal: IdealKind,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Graded Betti numbers with regularity and projective dimension
    Betti {
        /// Use the k-th symbolic power instead of the ideal itself
        #[arg(long)]
        symbolic: bool,
        #[arg(short, default_value_t = 2)]
        k: u64,
        #[arg(long, value_enum, default_value = "cover")]
        ideal: IdealKind,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Run one verification on one graph
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        #[arg(short)]
        k: Option<u64>,
        #[arg(long)]
        kmax: Option<u64>,
        /// Vertex for the deletion identity; all vertices when omitted
        #[arg(long)]
        vertex: Option<String>,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Run one verification over every labeled graph without isolated
    /// vertices on up to N vertices
    Sweep {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(short)]
        k: Option<u64>,
        #[arg(long)]
        kmax: Option<u64>,
        /// Collapse isomorphism classes
        #[arg(long)]
        dedup: bool,
        /// JSON-lines result cache (COVERTOOL_CACHE overrides)
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Emit the labeled graph corpus as graph6 strings
    Corpus {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        no_isolated: bool,
        #[arg(long)]
        dedup: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("covertool: {e:#}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("initializing thread pool")?;
    }
    let field = Field::parse(&cli.field).map_err(|e| anyhow!("--field: {e}"))?;

    match cli.command {
        Command::Classify { input } => {
            let g = read_graph(&input)?;
            emit(field, json!({ "graph": g.canonical_string(), "classes": g.classify() }));
            Ok(0)
        }
        Command::Ideal { kind, input } => {
            let g = read_graph(&input)?;
            let ideal = make_ideal(&g, kind);
            emit(
                field,
                json!({
                    "graph": g.canonical_string(),
                    "kind": kind_tag(kind),
                    "ideal": ideal.to_json(),
                }),
            );
            Ok(0)
        }
        Command::Symbolic { k, ideal, input } => {
            let g = read_graph(&input)?;
            let base = make_ideal(&g, ideal);
            let power = base.symbolic_power(k).map_err(|e| anyhow!("{e}"))?;
            emit(
                field,
                json!({
                    "graph": g.canonical_string(),
                    "kind": kind_tag(ideal),
                    "k": k,
                    "ideal": power.to_json(),
                }),
            );
            Ok(0)
        }
        Command::Betti { symbolic, k, ideal, input } => {
            let g = read_graph(&input)?;
            let base = make_ideal(&g, ideal);
            let base_name = match ideal {
                IdealKind::Cover => "J(G)",
                IdealKind::Edge => "I(G)",
            };
            let (subject_ideal, name) = if symbolic {
                (base.symbolic_power(k).map_err(|e| anyhow!("{e}"))?, format!("{base_name}^({k})"))
            } else {
                (base, base_name.to_string())
            };
            let table = if subject_ideal.is_squarefree() {
                hochster_betti(&subject_ideal, field)
            } else {
                betti(&subject_ideal, field)
            }
            .map_err(|e| anyhow!("{e}"))?
            .with_subject(Subject::Ideal(name));
            emit(field, json!({ "graph": g.canonical_string(), "betti": table.to_json() }));
            Ok(0)
        }
        Command::Verify { theorem, k, kmax, vertex, input } => {
            let g = read_graph(&input)?;
            let reports = run_verification(&g, theorem, k, kmax, vertex.as_deref(), field)?;
            let any_fail = reports.iter().any(VerificationReport::failed);
            emit(
                field,
                json!({
                    "graph": g.canonical_string(),
                    "theorem": theorem.tag(),
                    "reports": reports.iter().map(VerificationReport::to_json).collect::<Vec<_>>(),
                }),
            );
            Ok(if any_fail { 1 } else { 0 })
        }
        Command::Sweep { max_n, theorem, k, kmax, dedup, cache } => {
            sweep(max_n, theorem, k, kmax, dedup, cache, field)
        }
        Command::Corpus { max_n, no_isolated, dedup } => {
            let mut out = String::from("{\"version\":");
            out.push_str(&serde_json::to_string(env!("CARGO_PKG_VERSION"))?);
            out.push_str(",\"graphs\":[");
            print!("{out}");
            let mut count = 0usize;
            for g in generate_corpus(max_n, no_isolated, dedup)? {
                if count > 0 {
                    print!(",");
                }
                print!("{}", serde_json::to_string(&write_graph6(&g)?)?);
                count += 1;
            }
            println!("],\"count\":{count}}}");
            Ok(0)
        }
    }
}

fn kind_tag(kind: IdealKind) -> &'static str {
    match kind {
        IdealKind::Cover => "cover",
        IdealKind::Edge => "edge",
    }
}

fn make_ideal(g: &Graph, kind: IdealKind) -> MonomialIdeal {
    match kind {
        IdealKind::Cover => MonomialIdeal::cover_ideal(g),
        IdealKind::Edge => MonomialIdeal::edge_ideal(g),
    }
}

fn read_graph(input: &str) -> Result<Graph> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        buf
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    };
    parse_graph(&text)
}

/// Top-level JSON envelope: version and field stamps plus the payload.
fn emit(field: Field, payload: Value) {
    let mut obj = serde_json::Map::new();
    obj.insert("version".to_string(), json!(env!("CARGO_PKG_VERSION")));
    obj.insert("field".to_string(), json!(field.to_string()));
    if let Value::Object(map) = payload {
        for (k, v) in map {
            obj.insert(k, v);
        }
    }
    println!("{}", Value::Object(obj));
}

fn run_verification(
    g: &Graph,
    theorem: Theorem,
    k: Option<u64>,
    kmax: Option<u64>,
    vertex: Option<&str>,
    field: Field,
) -> Result<Vec<VerificationReport>> {
    let reports = match theorem {
        Theorem::Main => vec![verify_main_theorem(g, k.unwrap_or(2), field)],
        Theorem::RegMonotone => vec![verify_reg_monotone(g, kmax.unwrap_or(3), field)],
        Theorem::DegLinear => vec![verify_deg_linear(g, kmax.unwrap_or(3), field)],
        Theorem::Deletion => {
            let k = k.unwrap_or(2);
            match vertex {
                Some(x) => vec![verify_deletion_identity(g, x, k, field)],
                None => g
                    .vertex_names()
                    .to_vec()
                    .iter()
                    .map(|x| verify_deletion_identity(g, x, k, field))
                    .collect(),
            }
        }
        Theorem::Colon => vec![verify_colon_identity(g, k.unwrap_or(2), field)],
        Theorem::Singdeg => vec![verify_singdeg(g, k.unwrap_or(2), field)],
        Theorem::Terai => vec![verify_terai(g, field)],
        Theorem::Gk => vec![verify_gk_identity(g, k.unwrap_or(2), field)],
    };
    reports
        .into_iter()
        .collect::<coverideal::Result<Vec<_>>>()
        .map_err(|e| anyhow!("{e}"))
}

fn sweep(
    max_n: usize,
    theorem: Theorem,
    k: Option<u64>,
    kmax: Option<u64>,
    dedup: bool,
    cache_flag: Option<PathBuf>,
    field: Field,
) -> Result<i32> {
    let cache_path = std::env::var_os("COVERTOOL_CACHE")
        .map(PathBuf::from)
        .or(cache_flag);
    let cache = match &cache_path {
        Some(p) => {
            let c = Cache::open(p)?;
            for w in &c.warnings {
                eprintln!("covertool: {w}");
            }
            Some(c)
        }
        None => None,
    };
    let cache_k = k.or(kmax).unwrap_or(0);

    let results: Vec<Result<Vec<Value>>> = generate_corpus(max_n, true, dedup)?
        .par_bridge()
        .map(|g| -> Result<Vec<Value>> {
            let compute = || -> Result<Value> {
                let reports = run_verification(&g, theorem, k, kmax, None, field)?;
                Ok(Value::Array(
                    reports.iter().map(VerificationReport::to_json).collect(),
                ))
            };
            let value = match &cache {
                Some(c) => {
                    let key = CacheKey {
                        graph: g.canonical_string(),
                        kind: format!("verify:{}", theorem.tag()),
                        k: cache_k,
                        field: field.to_string(),
                    };
                    c.get_or_compute(&key, compute)?
                }
                None => compute()?,
            };
            match value {
                Value::Array(reports) => Ok(reports),
                other => Ok(vec![other]),
            }
        })
        .collect();

    let mut pass = 0usize;
    let mut fail = 0usize;
    let mut skipped = 0usize;
    let mut failures: Vec<Value> = Vec::new();
    let mut skip_reasons: BTreeMap<String, usize> = BTreeMap::new();
    for graph_reports in results {
        for report in graph_reports? {
            match report.get("verdict").and_then(|v| v.get("status")).and_then(Value::as_str) {
                Some("pass") => pass += 1,
                Some("fail") => {
                    fail += 1;
                    failures.push(report);
                }
                Some("skipped") => {
                    skipped += 1;
                    let reason = report
                        .get("verdict")
                        .and_then(|v| v.get("reason"))
                        .and_then(Value::as_str)
                        .unwrap_or("unknown")
                        .to_string();
                    *skip_reasons.entry(reason).or_insert(0) += 1;
                }
                _ => return Err(anyhow!("malformed report in sweep results: {report}")),
            }
        }
    }

    // failures sort by graph for reproducible output
    failures.sort_by_key(|r| r.get("graph").and_then(Value::as_str).unwrap_or("").to_string());
    emit(
        field,
        json!({
            "theorem": theorem.tag(),
            "max_n": max_n,
            "dedup": dedup,
            "summary": { "pass": pass, "fail": fail, "skipped": skipped },
            "skip_reasons": skip_reasons,
            "failures": failures,
        }),
    );
    Ok(if fail > 0 { 1 } else { 0 })
}
