use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use fracdomatic::certificate::{classification_json, Certificate};
use fracdomatic::decomposition::dumbbell_decomposition;
use fracdomatic::formats::{parse_graph, parse_graph6_lines};
use fracdomatic::generate::{labeled_graphs_up_to, RandomGraphs, EXHAUSTIVE_LIMIT};
use fracdomatic::oracle::{conjecture_scan, exact_fd_with_limit, DEFAULT_LIMIT, HARD_LIMIT};
use fracdomatic::rational::format as fmt_q;
use fracdomatic::{classify, Graph, Verdict};

const LIMIT_VAR: &str = "FRACDOM_ORACLE_LIMIT";

#[derive(Parser)]
#[command(name = "fracdom", version, about = "Fractional domatic number: classify, certify, compute exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether FD is 1, 2 or above 2.
    Classify {
        graph: PathBuf,
        /// Include the certificate and re-verify it before printing.
        #[arg(long)]
        certify: bool,
    },
    /// Exact FD by linear programming (small graphs only).
    Fd {
        graph: PathBuf,
        /// Vertex limit for the oracle (default 12, at most 16).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check a certificate against a graph.
    Verify { certificate: PathBuf, graph: PathBuf },
    /// 2-connected or dumbbell structure of a connected graph with minimum degree 2.
    Decompose { graph: PathBuf },
    /// Look for graphs with 2 < FD < 7/3.
    Scan {
        #[arg(long, value_enum, default_value_t = Source::Exhaustive)]
        source: Source,
        /// Largest vertex count generated (exhaustive default 6).
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Smallest vertex count for random graphs.
        #[arg(long, default_value_t = 7)]
        min_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random graphs.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// graph6 file, one graph per line.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Exhaustive,
    Random,
    File,
}

/// Failure classes with their exit codes.
enum Failure {
    /// The checked object is wrong (exit 1).
    Rejected(String),
    /// Input could not be read or violates a precondition (exit 2).
    Input(anyhow::Error),
    /// A produced certificate failed its own check (exit 3).
    Internal(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify { graph, certify } => cmd_classify(&graph, certify),
        Command::Fd { graph, limit } => cmd_fd(&graph, limit),
        Command::Verify { certificate, graph } => cmd_verify(&certificate, &graph),
        Command::Decompose { graph } => cmd_decompose(&graph),
        Command::Scan {
            source,
            max_n,
            min_n,
            seed,
            count,
            file,
            limit,
        } => cmd_scan(source, max_n, min_n, seed, count, file.as_deref(), limit),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected(msg)) => {
            eprintln!("rejected: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("internal error: {e:#}");
            ExitCode::from(3)
        }
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_json(v: &serde_json::Value) {
    let mut out = io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = writeln!(out, "{v}");
}

fn oracle_limit(flag: Option<usize>) -> anyhow::Result<usize> {
    let limit = match flag {
        Some(l) => l,
        None => match std::env::var(LIMIT_VAR) {
            Ok(v) => v.trim().parse().with_context(|| format!("{LIMIT_VAR}={v:?}"))?,
            Err(_) => DEFAULT_LIMIT,
        },
    };
    if limit > HARD_LIMIT {
        bail!("oracle limit {limit} exceeds the hard cap of {HARD_LIMIT}");
    }
    Ok(limit)
}

fn cmd_classify(path: &Path, certify: bool) -> Result<(), Failure> {
    let g = read_graph(path)?;
    let c = classify(&g).map_err(|e| match e {
        fracdomatic::synthesis::SynthesisError::EmptyGraph => Failure::Input(anyhow!(e)),
        other => Failure::Internal(anyhow!(other)),
    })?;
    let record = classification_json(&c, certify);
    if certify {
        if let Some(cert) = &c.certificate {
            let text = Certificate::from_configuration(cert).to_json();
            let back = Certificate::from_json(&text).map_err(|e| Failure::Internal(anyhow!(e)))?;
            back.check(&g).map_err(|e| Failure::Internal(anyhow!("certificate failed self-check: {e}")))?;
        }
    }
    let summary = match (&c.verdict, &c.certificate) {
        (Verdict::FdAboveTwo, Some(cert)) => format!("FD > 2, certified FD >= {}", fmt_q(&cert.value())),
        (Verdict::FdTwo, _) => format!("FD = 2 ({})", c.reason.tag()),
        _ => format!("FD = 1 ({})", c.reason.tag()),
    };
    eprintln!("{summary}");
    print_json(&record);
    Ok(())
}

fn cmd_fd(path: &Path, limit: Option<usize>) -> Result<(), Failure> {
    let g = read_graph(path)?;
    let limit = oracle_limit(limit)?;
    let fd = exact_fd_with_limit(&g, limit).map_err(|e| Failure::Input(anyhow!(e)))?;
    let weights: Vec<serde_json::Value> = fd
        .sets
        .iter()
        .zip(&fd.weights)
        .map(|(d, w)| json!({ "set": d.to_vec(), "weight": fmt_q(w) }))
        .collect();
    let prices: Vec<String> = fd.prices.iter().map(fmt_q).collect();
    eprintln!("FD = {}", fmt_q(&fd.value));
    print_json(&json!({
        "fd": fmt_q(&fd.value),
        "weights": weights,
        "prices": prices,
        "k": fd.configuration.k(),
        "s": fd.configuration.s(),
    }));
    Ok(())
}

fn cmd_verify(cert_path: &Path, graph_path: &Path) -> Result<(), Failure> {
    let text = fs::read_to_string(cert_path).with_context(|| format!("reading {}", cert_path.display()))?;
    let cert = Certificate::from_json(&text).map_err(|e| Failure::Input(anyhow!(e)))?;
    let g = read_graph(graph_path)?;
    match cert.check(&g) {
        Ok(c) => {
            eprintln!("valid ({}, {})-configuration, FD >= {}", c.k(), c.s(), fmt_q(&c.value()));
            Ok(())
        }
        Err(e) if e.is_malformed() => Err(Failure::Input(anyhow!(e))),
        Err(e) => Err(Failure::Rejected(e.to_string())),
    }
}

fn cmd_decompose(path: &Path) -> Result<(), Failure> {
    let g = read_graph(path)?;
    let report = dumbbell_decomposition(&g).map_err(|e| Failure::Input(anyhow!(e)))?;
    report.validate(&g).map_err(|e| Failure::Internal(anyhow!(e)))?;
    print_json(&serde_json::to_value(&report).expect("report serializes"));
    Ok(())
}

fn cmd_scan(
    source: Source,
    max_n: usize,
    min_n: usize,
    seed: u64,
    count: usize,
    file: Option<&Path>,
    limit: Option<usize>,
) -> Result<(), Failure> {
    let limit = oracle_limit(limit)?;
    let graphs: Vec<Graph> = match source {
        Source::Exhaustive => {
            if max_n > EXHAUSTIVE_LIMIT {
                return Err(anyhow!("exhaustive scans stop at {EXHAUSTIVE_LIMIT} vertices").into());
            }
            labeled_graphs_up_to(max_n).map_err(|e| anyhow!(e))?.collect()
        }
        Source::Random => {
            if min_n < 3 || min_n > max_n {
                return Err(anyhow!("need 3 <= min-n <= max-n").into());
            }
            if max_n > limit {
                return Err(anyhow!("max-n {max_n} exceeds the oracle limit {limit}").into());
            }
            RandomGraphs::new(seed, min_n, max_n).take(count).collect()
        }
        Source::File => {
            let path = file.ok_or_else(|| anyhow!("--source file needs --file"))?;
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            parse_graph6_lines(&text).with_context(|| format!("parsing {}", path.display()))?
        }
    };
    let report = conjecture_scan(graphs, limit);
    {
        let mut out = io::stdout().lock();
        for r in &report.records {
            let _ = writeln!(out, "{}", serde_json::to_string(r).expect("record serializes"));
        }
    }
    print_json(&report.footer());
    eprintln!(
        "scanned {}, skipped {}, flagged {}, smallest FD above 2: {}",
        report.scanned,
        report.skipped,
        report.flagged.len(),
        report.min_above_two.as_ref().map(fmt_q).unwrap_or_else(|| "none".into())
    );
    if !report.confirmed.is_empty() {
        eprintln!("COUNTEREXAMPLE to the 7/3 conjecture at stream positions {:?}", report.confirmed);
    }
    Ok(())
}
