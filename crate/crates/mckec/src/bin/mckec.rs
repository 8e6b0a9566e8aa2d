//! Thin command-line shell over the library: every subcommand parses its
//! inputs, calls one library entry point, and prints a single JSON document
//! on stdout.
//!
//! Exit codes: 0 success, 1 verification/assertion failure, 2 input error,
//! 3 budget exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use mckec::coloring::{self, EdgeColoring};
use mckec::constructions;
use mckec::error::Error;
use mckec::format;
use mckec::generate::{self, CactusPart};
use mckec::graph::Graph;
use mckec::harness::{self, ConjectureRecord, HarnessBudget};
use mckec::kecss::{self, KecssBudget};
use mckec::search::{self, SearchBudget};
use mckec::tree_packing::{self, PsiBudget};

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "mckec",
    about = "Monochromatic k-edge-connection colorings: verify, search, construct, sweep",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Mc,
    Umc,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    /// K_{2n+1} as n Hamiltonian cycles
    WaleckiOdd,
    /// K_{2n+2} as n Hamiltonian cycles plus a perfect matching
    WaleckiEven,
    /// K_{s,s} as Hamiltonian cycles (plus a matching when s is odd)
    Bipartite,
    /// the k/2-color coloring of K_{k,n}, k even
    Kkn,
    /// k edge-disjoint spanning trees colored 1..k, leftovers rainbow
    Packing,
    /// cactus graph from a cycle/bridge spec
    Cactus,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a coloring file against a graph file
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
    /// Exact mc_k by exhaustive partition search
    Mc {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = SearchBudget::default().max_edges)]
        max_edges: usize,
        #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
        max_nodes: u64,
    },
    /// Exact umc_k by exhaustive partition search
    Umc {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = SearchBudget::default().max_edges)]
        max_edges: usize,
        #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
        max_nodes: u64,
    },
    /// Minimum (or greedy minimal) k-edge-connected spanning subgraph
    MinKecss {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// exact branch-and-bound (default)
        #[arg(long, conflicts_with = "minimal")]
        exact: bool,
        /// greedy deletion instead of the exact solver
        #[arg(long)]
        minimal: bool,
        #[arg(long, default_value_t = KecssBudget::default().max_edges)]
        max_edges: usize,
    },
    /// Exact partition ratio ψ and its witness partition
    Psi {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = PsiBudget::default().max_vertices)]
        max_vertices: usize,
    },
    /// Maximum family of edge-disjoint spanning trees
    PackTrees {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Build a decomposition or coloring and emit it (with its graph)
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        /// kind-specific parameters, e.g. "3" (walecki), "2,odd" (bipartite),
        /// "4,6" (kkn), "4@0,4@0" (cactus)
        #[arg(long)]
        params: Option<String>,
        /// host graph for `packing`
        #[arg(long)]
        graph: Option<PathBuf>,
        /// tree count for `packing`
        #[arg(long)]
        k: Option<usize>,
        /// write the graph in edge-list format (the format that pins the
        /// edge order the coloring file refers to)
        #[arg(long)]
        out_graph: Option<PathBuf>,
        #[arg(long)]
        out_coloring: Option<PathBuf>,
    },
    /// Sweep a graph6 corpus against the color-count formulas
    Conjecture {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        k: usize,
        /// worker threads (default: rayon's choice)
        #[arg(long)]
        jobs: Option<usize>,
        /// append one JSON record per graph
        #[arg(long)]
        out: Option<PathBuf>,
        /// write records as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = SearchBudget::default().max_edges)]
        search_max_edges: usize,
        #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
        search_max_nodes: u64,
        #[arg(long, default_value_t = KecssBudget::default().max_edges)]
        kecss_max_edges: usize,
    },
    /// Hamiltonicity via umc_2 = e - n + 1, cross-checked by backtracking
    Hamiltonicity {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = KecssBudget::default().max_edges)]
        max_edges: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::BudgetExceeded(_) => EXIT_BUDGET,
                _ => EXIT_INPUT,
            };
            ExitCode::from(code)
        }
    }
}

/// Reads the first graph of a file; edge-list when the first line looks like
/// "n m", graph6 otherwise.
fn read_graph(path: &Path) -> Result<Graph, Error> {
    let text = fs::read_to_string(path)?;
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let tokens: Vec<&str> = first.split_whitespace().collect();
    if tokens.len() == 2 && tokens.iter().all(|t| t.parse::<usize>().is_ok()) {
        format::parse_edge_list(&text)
    } else {
        let graphs = format::parse_graph6_file(&text)?;
        graphs
            .into_iter()
            .next()
            .map(|(_, g)| g)
            .ok_or_else(|| Error::InvalidInput(format!("{}: no graph found", path.display())))
    }
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn coloring_line(c: &EdgeColoring) -> String {
    c.assignment()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn graph_json(g: &Graph) -> serde_json::Value {
    json!({
        "graph6": format::encode_graph6(g),
        "n": g.n(),
        "m": g.m(),
        "edges": g.edges(),
    })
}

fn run_search(
    graph: &Path,
    k: usize,
    max_edges: usize,
    max_nodes: u64,
    umc: bool,
) -> Result<u8, Error> {
    let g = read_graph(graph)?;
    let budget = SearchBudget {
        max_edges,
        max_nodes,
    };
    let t0 = std::time::Instant::now();
    let r = if umc {
        search::exact_umc_k(&g, k, budget)?
    } else {
        search::exact_mc_k(&g, k, budget)?
    };
    print_json(&json!({
        "kind": if umc { "umc" } else { "mc" },
        "k": k,
        "value": r.value,
        "exact": r.exact,
        "witness": r.witness.assignment(),
        "explored": r.explored,
        "ms": t0.elapsed().as_millis() as u64,
    }));
    Ok(if r.exact { EXIT_OK } else { EXIT_BUDGET })
}

fn parse_params<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, Error> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<T>()
                .map_err(|_| Error::InvalidInput(format!("bad parameter `{tok}`")))
        })
        .collect()
}

fn run(cmd: Cmd) -> Result<u8, Error> {
    match cmd {
        Cmd::Verify {
            graph,
            coloring: coloring_path,
            k,
            mode,
        } => {
            let g = read_graph(&graph)?;
            let text = fs::read_to_string(&coloring_path)?;
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| Error::Coloring("empty coloring file".into()))?;
            let raw = format::parse_coloring_line(line)?;
            if raw.len() != g.m() {
                return Err(Error::Coloring(format!(
                    "coloring has {} entries, graph has {} edges",
                    raw.len(),
                    g.m()
                )));
            }
            if !EdgeColoring::is_normalized(&raw) {
                eprintln!(
                    "warning: coloring not normalized; renumbering colors by first occurrence"
                );
            }
            let c = EdgeColoring::new(&raw);
            let report = match mode {
                ModeArg::Mc => coloring::is_mc_k_detailed(&g, &c, k)?,
                ModeArg::Umc => coloring::is_umc_k_detailed(&g, &c, k)?,
            };
            let pass = report.pass;
            print_json(&serde_json::to_value(&report).expect("serializable"));
            Ok(if pass { EXIT_OK } else { EXIT_FAIL })
        }

        Cmd::Mc {
            graph,
            k,
            max_edges,
            max_nodes,
        } => run_search(&graph, k, max_edges, max_nodes, false),

        Cmd::Umc {
            graph,
            k,
            max_edges,
            max_nodes,
        } => run_search(&graph, k, max_edges, max_nodes, true),

        Cmd::MinKecss {
            graph,
            k,
            exact: _,
            minimal,
            max_edges,
        } => {
            let g = read_graph(&graph)?;
            let t0 = std::time::Instant::now();
            let r = if minimal {
                kecss::minimalize(&g, k)?
            } else {
                kecss::minimum_kecss(&g, k, KecssBudget { max_edges })?
            };
            let mut doc = serde_json::to_value(&r).expect("serializable");
            doc["ms"] = json!(t0.elapsed().as_millis() as u64);
            print_json(&doc);
            Ok(EXIT_OK)
        }

        Cmd::Psi {
            graph,
            max_vertices,
        } => {
            let g = read_graph(&graph)?;
            let r = tree_packing::psi_oracle(&g, PsiBudget { max_vertices })?;
            print_json(&json!({
                "psi": r.psi.to_string(),
                "Psi": r.psi_floor,
                "witness": r.witness.blocks(),
            }));
            Ok(EXIT_OK)
        }

        Cmd::PackTrees { graph } => {
            let g = read_graph(&graph)?;
            let (k, packing) = tree_packing::tree_packing_number(&g)?;
            print_json(&json!({
                "k": k,
                "trees": packing.trees,
            }));
            Ok(EXIT_OK)
        }

        Cmd::Construct {
            kind,
            params,
            graph,
            k,
            out_graph,
            out_coloring,
        } => {
            let (g, c, parts_json) = build_construction(kind, params.as_deref(), graph, k)?;
            if let Some(path) = &out_graph {
                fs::write(path, format::format_edge_list(&g))?;
            }
            if let Some(path) = &out_coloring {
                fs::write(path, coloring_line(&c) + "\n")?;
            }
            let mut doc = graph_json(&g);
            doc["coloring"] = json!(coloring_line(&c));
            doc["colors"] = json!(c.num_colors());
            if let Some(parts) = parts_json {
                doc["parts"] = parts;
            }
            print_json(&doc);
            Ok(EXIT_OK)
        }

        Cmd::Conjecture {
            corpus,
            k,
            jobs,
            out,
            csv,
            search_max_edges,
            search_max_nodes,
            kecss_max_edges,
        } => {
            let text = fs::read_to_string(&corpus)?;
            let graphs = harness::load_corpus(&text)?;
            let budget = HarnessBudget {
                search: SearchBudget {
                    max_edges: search_max_edges,
                    max_nodes: search_max_nodes,
                },
                kecss: KecssBudget {
                    max_edges: kecss_max_edges,
                },
            };
            let only_graphs: Vec<Graph> = graphs.into_iter().map(|(_, g)| g).collect();
            let sweep = match jobs {
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?
                    .install(|| harness::run_conjecture(&only_graphs, k, budget)),
                None => harness::run_conjecture(&only_graphs, k, budget),
            }?;
            if let Some(path) = &out {
                let mut file = fs::OpenOptions::new()
                    .create(true)
                    .append(true)
                    .open(path)?;
                for record in &sweep.records {
                    writeln!(
                        file,
                        "{}",
                        serde_json::to_string(record).expect("serializable")
                    )?;
                }
            }
            if let Some(path) = &csv {
                fs::write(path, records_csv(&sweep.records))?;
            }
            let counterexamples: Vec<&ConjectureRecord> =
                sweep.records.iter().filter(|r| r.counterexample).collect();
            let has_counterexample = !counterexamples.is_empty();
            print_json(&json!({
                "k": k,
                "summary": sweep.summary,
                "counterexamples": counterexamples,
                "skipped": sweep.skipped,
                "records": sweep.records,
            }));
            Ok(if has_counterexample {
                EXIT_FAIL
            } else {
                EXIT_OK
            })
        }

        Cmd::Hamiltonicity { graph, max_edges } => {
            let g = read_graph(&graph)?;
            let r = harness::hamiltonicity_via_umc2(&g, KecssBudget { max_edges })?;
            let agree = r.agree;
            print_json(&serde_json::to_value(&r).expect("serializable"));
            Ok(if agree { EXIT_OK } else { EXIT_FAIL })
        }
    }
}

#[allow(clippy::type_complexity)]
fn build_construction(
    kind: ConstructKind,
    params: Option<&str>,
    graph: Option<PathBuf>,
    k: Option<usize>,
) -> Result<(Graph, EdgeColoring, Option<serde_json::Value>), Error> {
    fn need(p: Option<&str>) -> Result<&str, Error> {
        p.ok_or_else(|| Error::InvalidInput("this construction needs --params".into()))
    }
    match kind {
        ConstructKind::WaleckiOdd => {
            let v: Vec<usize> = parse_params(need(params)?)?;
            let [n] = v[..] else {
                return Err(Error::InvalidInput("expected --params N".into()));
            };
            let (g, d) = constructions::decompose_complete_odd(n)?;
            d.validate(&g)?;
            let c = d.to_coloring(&g);
            let parts = serde_json::to_value(&d.parts).expect("serializable");
            Ok((g, c, Some(parts)))
        }
        ConstructKind::WaleckiEven => {
            let v: Vec<usize> = parse_params(need(params)?)?;
            let [n] = v[..] else {
                return Err(Error::InvalidInput("expected --params N".into()));
            };
            let (g, d) = constructions::decompose_complete_even(n)?;
            d.validate(&g)?;
            let c = d.to_coloring(&g);
            let parts = serde_json::to_value(&d.parts).expect("serializable");
            Ok((g, c, Some(parts)))
        }
        ConstructKind::Bipartite => {
            let raw = need(params)?;
            let parts: Vec<&str> = raw.split(',').map(str::trim).collect();
            let [n_str, parity] = parts[..] else {
                return Err(Error::InvalidInput("expected --params N,odd|even".into()));
            };
            let n: usize = n_str
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad parameter `{n_str}`")))?;
            let odd = match parity {
                "odd" => true,
                "even" => false,
                other => {
                    return Err(Error::InvalidInput(format!(
                        "expected odd or even, got `{other}`"
                    )))
                }
            };
            let (g, d) = constructions::decompose_bipartite(n, odd)?;
            d.validate(&g)?;
            let c = d.to_coloring(&g);
            let parts = serde_json::to_value(&d.parts).expect("serializable");
            Ok((g, c, Some(parts)))
        }
        ConstructKind::Kkn => {
            let v: Vec<usize> = parse_params(need(params)?)?;
            let [kk, n] = v[..] else {
                return Err(Error::InvalidInput("expected --params K,N".into()));
            };
            let (g, c) = constructions::kkn_mc_coloring(kk, n)?;
            Ok((g, c, None))
        }
        ConstructKind::Packing => {
            let path = graph
                .ok_or_else(|| Error::InvalidInput("construct packing needs --graph".into()))?;
            let k = k.ok_or_else(|| Error::InvalidInput("construct packing needs --k".into()))?;
            let g = read_graph(&path)?;
            let c = tree_packing::packing_coloring(&g, k)?;
            Ok((g, c, None))
        }
        ConstructKind::Cactus => {
            // "4@0,5@2,b@1": cycles len@attach, bridges b@attach
            let raw = need(params)?;
            let mut spec = Vec::new();
            for tok in raw.split(',') {
                let tok = tok.trim();
                let (head, attach) = match tok.split_once('@') {
                    Some((h, a)) => (
                        h,
                        a.parse::<usize>()
                            .map_err(|_| Error::InvalidInput(format!("bad attach `{a}`")))?,
                    ),
                    None => (tok, 0),
                };
                if head == "b" {
                    spec.push(CactusPart::Bridge { attach });
                } else {
                    let len = head
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidInput(format!("bad cycle length `{head}`")))?;
                    spec.push(CactusPart::Cycle { attach, len });
                }
            }
            let g = generate::cactus(&spec)?;
            let c = EdgeColoring::monochromatic(g.m());
            Ok((g, c, None))
        }
    }
}

fn records_csv(records: &[ConjectureRecord]) -> String {
    let mut s = String::from(
        "graph6,n,m,k,e_h,e_h_exact,mc,mc_exact,umc,umc_exact,formula_mc,formula_umc,\
         mc_match,umc_match,counterexample,e_h_ms,mc_ms,umc_ms\n",
    );
    for r in records {
        let flag = |f| match f {
            harness::MatchFlag::Match => "match",
            harness::MatchFlag::Mismatch => "mismatch",
            harness::MatchFlag::Inconclusive => "inconclusive",
        };
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.graph6,
            r.n,
            r.m,
            r.k,
            r.e_h,
            r.e_h_exact,
            r.mc,
            r.mc_exact,
            r.umc,
            r.umc_exact,
            r.formula_mc,
            r.formula_umc,
            flag(r.mc_match),
            flag(r.umc_match),
            r.counterexample,
            r.e_h_ms,
            r.mc_ms,
            r.umc_ms,
        ));
    }
    s
}
