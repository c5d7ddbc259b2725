use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qgain::format::{fixed12, sig12};
use qgain::verify::{self, VerificationReport};
use qgain::{Error, GraphDocument};
use qgain_core::reductions::{
    classify, det_laplacian_combinatorial, det_laplacian_direct, det_reduction_direct,
    enumerate_full_vertex_reductions, product_of_contributions,
};
use qgain_core::{ComponentKind, Config, GainGraph, Quaternion};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(
    name = "qgain",
    version,
    about = "Laplacian determinants of quaternion unit gain graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Determinant of the graph Laplacian.
    Det {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Largest accepted discrepancy between methods.
        #[arg(long, default_value_t = verify::DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
        /// Largest matrix order handled by permutation expansion.
        #[arg(long)]
        cap: Option<usize>,
        /// Largest number of reductions enumerated.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Report whether every cycle of the graph is neutral.
    Balanced {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = verify::DEFAULT_TOL)]
        tol: f64,
    },
    /// List the full-vertex reductions and their contributions.
    Reductions {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check an input graph and run the randomized lemma suite.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Combinatorial,
    Both,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Det {
            input,
            method,
            tol,
            json,
            cap,
            budget,
        } => {
            let mut cfg = Config::default();
            if let Some(cap) = cap {
                cfg.size_cap = cap;
            }
            if let Some(budget) = budget {
                cfg.subset_budget = budget;
            }
            cmd_det(&load(&input)?, method, tol, json, &cfg)
        }
        Command::Balanced { input, tol } => {
            let balanced = load(&input)?.is_balanced(tol);
            println!("{}", if balanced { "balanced" } else { "unbalanced" });
            Ok(if balanced { 0 } else { 1 })
        }
        Command::Reductions { input, json } => cmd_reductions(&load(&input)?, json),
        Command::Verify {
            seed,
            trials,
            input,
            json,
        } => cmd_verify(seed, trials, input.as_deref(), json),
    }
}

fn load(path: &Path) -> Result<GainGraph, Error> {
    GraphDocument::read(path)?.to_graph()
}

fn cmd_det(g: &GainGraph, method: Method, tol: f64, json: bool, cfg: &Config) -> Result<u8, Error> {
    let direct = match method {
        Method::Direct | Method::Both => Some(det_laplacian_direct(g, cfg)?),
        Method::Combinatorial => None,
    };
    let combinatorial = match method {
        Method::Combinatorial | Method::Both => Some(det_laplacian_combinatorial(g, cfg)?),
        Method::Direct => None,
    };
    let discrepancy = direct.zip(combinatorial).map(|(a, b)| (a - b).abs());
    let agree = discrepancy.is_none_or(|d| d <= tol);
    if json {
        let out = json!({
            "graph": verify::describe(g),
            "direct": direct.map(sig12),
            "combinatorial": combinatorial.map(sig12),
            "discrepancy": discrepancy.map(sig12),
            "agree": agree,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializable")
        );
    } else {
        if let Some(d) = direct {
            println!("direct         {}", fixed12(d));
        }
        if let Some(c) = combinatorial {
            println!("combinatorial  {}", fixed12(c));
        }
        if let Some(d) = discrepancy {
            println!("discrepancy    {}", sig12(d));
        }
    }
    if !agree {
        eprintln!("error: methods disagree by more than {tol:e}");
        return Ok(5);
    }
    Ok(0)
}

fn kind_name(kind: ComponentKind) -> &'static str {
    match kind {
        ComponentKind::Unicyclic => "unicyclic",
        ComponentKind::HalfEdgeTree => "half-edge-tree",
        ComponentKind::Deficient => "deficient",
        ComponentKind::Excessive => "excessive",
    }
}

fn gain_strings(q: Quaternion) -> Vec<String> {
    q.components().iter().map(|&c| sig12(c)).collect()
}

fn cmd_reductions(g: &GainGraph, json: bool) -> Result<u8, Error> {
    let cfg = Config::default();
    let labels = g.labels();
    let edge_ids =
        |cols: &[usize]| -> Vec<String> { cols.iter().map(|&k| g.edges()[k].id.clone()).collect() };
    let vertex_names =
        |vs: &[usize]| -> Vec<String> { vs.iter().map(|&v| labels[v].clone()).collect() };

    let mut rows = Vec::new();
    let mut total = 0.0;
    for r in enumerate_full_vertex_reductions(g, cfg.subset_budget)? {
        let comps = classify(&r, g)?;
        let contribution = product_of_contributions(&comps);
        let det = det_reduction_direct(&r, g, &cfg)?;
        total += contribution;
        let components: Vec<Value> = comps
            .iter()
            .map(|c| {
                json!({
                    "kind": kind_name(c.kind),
                    "vertices": vertex_names(&c.vertices),
                    "edges": edge_ids(&c.edges),
                    "halfEdges": c.half_edges,
                    "cycle": c.cycle.as_ref().map(|cy| json!({
                        "vertices": vertex_names(&cy.vertices),
                        "gain": gain_strings(cy.gain),
                        "contribution": sig12(cy.contribution),
                    })),
                })
            })
            .collect();
        rows.push((edge_ids(r.cols()), components, contribution, det));
    }

    if json {
        let out = json!({
            "reductions": rows.iter().map(|(edges, comps, contribution, det)| json!({
                "edges": edges,
                "components": comps,
                "contribution": sig12(*contribution),
                "det": sig12(*det),
            })).collect::<Vec<_>>(),
            "total": sig12(total),
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializable")
        );
        return Ok(0);
    }
    for (k, (edges, comps, contribution, det)) in rows.iter().enumerate() {
        println!(
            "R{:<3} edges {{{}}}  contribution {}  det {}",
            k + 1,
            edges.join(","),
            fixed12(*contribution),
            fixed12(*det)
        );
        for c in comps {
            let mut line = format!("       {}", c["kind"].as_str().unwrap_or_default());
            if let Some(cy) = c["cycle"].as_object() {
                let vs: Vec<&str> = cy["vertices"]
                    .as_array()
                    .into_iter()
                    .flatten()
                    .filter_map(Value::as_str)
                    .collect();
                let gain: Vec<&str> = cy["gain"]
                    .as_array()
                    .into_iter()
                    .flatten()
                    .filter_map(Value::as_str)
                    .collect();
                line.push_str(&format!(
                    "  cycle {}  gain [{}]",
                    vs.join("-"),
                    gain.join(", ")
                ));
            }
            println!("{line}");
        }
    }
    println!("total  {}", fixed12(total));
    Ok(0)
}

fn cmd_verify(seed: u64, trials: usize, input: Option<&Path>, json: bool) -> Result<u8, Error> {
    let mut report = verify::run_lemma_suite(seed, trials);
    if let Some(path) = input {
        report = verify::cross_check(&load(path)?, verify::DEFAULT_TOL)?.merge(report);
    }
    if json {
        println!("{}", report.to_json());
    } else {
        print_report(&report);
    }
    Ok(if report.passed { 0 } else { 1 })
}

fn print_report(report: &VerificationReport) {
    println!("{}", report.graph_descriptor);
    let fields = [
        ("det direct", report.det_direct),
        ("det combinatorial", report.det_combinatorial),
        ("det oracle squared", report.det_oracle_squared),
    ];
    for (name, value) in fields {
        if let Some(v) = value {
            println!("{name:<20} {}", sig12(v));
        }
    }
    println!(
        "{:<20} {}",
        "max discrepancy",
        sig12(report.max_discrepancy)
    );
    for lemma in &report.lemma_results {
        println!(
            "{} {}",
            if lemma.passed { "PASS" } else { "FAIL" },
            lemma.name
        );
        if let Some(w) = &lemma.witness {
            println!("     witness {w}");
        }
    }
    println!("{}", if report.passed { "pass" } else { "fail" });
}
