use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use bek_core::betti::{formula_table, strand_prediction};
use bek_core::format::{parse_document, render, GraphDocument};
use bek_core::verify::{verify_closed_strand, verify_lollipop};
use bek_core::{
    classify_pure, closed_strand_check, find_closed_labeling, has_linear_resolution, hochster_betti, in_graph,
    is_closed, ClosedLabeling, Coefficients, Edge, Format, HochsterConfig,
};

#[derive(Parser)]
#[command(name = "bek", version, about = "Betti tables of binomial edge ideals from graph data")]
struct Cli {
    /// Input format; guessed from the file extension when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<InputFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    EdgeList,
    Json,
    Graph6,
}

impl From<InputFormat> for Format {
    fn from(f: InputFormat) -> Self {
        match f {
            InputFormat::EdgeList => Format::EdgeList,
            InputFormat::Json => Format::Json,
            InputFormat::Graph6 => Format::Graph6,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Closedness, linear resolution, and pure-resolution class.
    Classify { file: String },
    /// Graded Betti table of S/J_G.
    Betti {
        file: String,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
        /// Compute the oracle over Z/p instead of the rationals.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Predicted linear strand, checked against the oracle for closed graphs.
    Strand { file: String },
    /// Replace one free cut edge by another.
    Switch {
        file: String,
        #[arg(long, value_parser = parse_edge)]
        remove: Edge,
        #[arg(long, value_parser = parse_edge)]
        add: Edge,
    },
    /// Free cut edges and the reduced graph.
    Reduce { file: String },
    /// Batch checks over generated graphs.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// Strand identity on every closed graph up to max-n vertices.
    ClosedStrand {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Closed-form lollipop tables against the oracle.
    Lollipop {
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        #[arg(long, default_value_t = 3)]
        max_t: usize,
    },
}

fn parse_edge(s: &str) -> Result<Edge, String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected u,v but got {s:?}"))?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad vertex {x:?}"));
    let (u, v) = (parse(a)?, parse(b)?);
    if u == v {
        return Err(format!("{u},{v} is a loop"));
    }
    Ok(Edge::new(u, v))
}

fn hochster_config(prime: Option<u64>) -> Result<HochsterConfig> {
    let mut config = HochsterConfig::default();
    if let Ok(cap) = std::env::var("BEK_SUBSET_CAP") {
        config.vertex_cap = cap
            .parse()
            .with_context(|| format!("BEK_SUBSET_CAP must be a vertex count, got {cap:?}"))?;
    }
    if let Some(p) = prime {
        config.coefficients = Coefficients::prime(p)?;
    }
    Ok(config)
}

fn load(path: &str, format: Option<InputFormat>) -> Result<GraphDocument> {
    let bytes = if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        buf
    } else {
        std::fs::read(path).with_context(|| format!("cannot read {path}"))?
    };
    let format = format.map(Format::from).unwrap_or_else(|| Format::from_path(path));
    parse_document(&bytes, format).with_context(|| format!("cannot parse {path} as {format}"))
}

/// The labeling carried by the document if it is closed, else a fresh search.
fn labeling_for(doc: &GraphDocument) -> Result<ClosedLabeling> {
    match &doc.labeling {
        Some(order) => ClosedLabeling::new(&doc.graph, order.clone())
            .map_err(|_| anyhow!("the supplied labeling is not a closed labeling")),
        None => find_closed_labeling(&doc.graph).ok_or_else(|| anyhow!("graph is not closed")),
    }
}

fn classify(doc: &GraphDocument) -> Result<()> {
    let g = &doc.graph;
    let class = classify_pure(g)?;
    let out = json!({
        "closed": is_closed(g),
        "linear": has_linear_resolution(g)?,
        "pure": class.to_json(),
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(())
}

fn betti(doc: &GraphDocument, method: Method, prime: Option<u64>) -> Result<()> {
    let table = match method {
        Method::Formula => formula_table(&doc.graph)?,
        Method::Oracle => {
            if !is_closed(&doc.graph) {
                bail!("the oracle needs a closed graph");
            }
            let labeling = labeling_for(doc)?;
            let h = in_graph(&doc.graph, &labeling)?.to_graph()?;
            hochster_betti(&h, &hochster_config(prime)?)?
        }
    };
    print!("{}", table.diagram());
    println!();
    println!("{}", table.to_json());
    if method == Method::Oracle {
        println!(
            "note: this is the table of the initial ideal; it equals the table of J_G \
             when S/J_G is Cohen-Macaulay"
        );
    }
    Ok(())
}

fn strand(doc: &GraphDocument) -> Result<()> {
    let g = &doc.graph;
    let prediction = strand_prediction(g);
    println!("status: {:?}", prediction.status);
    for (i, v) in prediction.values.iter().enumerate() {
        println!("beta_{{{i},{}}} = {v}", i + 2);
    }
    if is_closed(g) {
        let report = closed_strand_check(g, &hochster_config(None)?)?;
        println!("oracle (i: strand sum, homology, clique count):");
        for r in &report.rows {
            let mark = if r.agrees() { "" } else { "  MISMATCH" };
            println!("  {}: {} {} {}{mark}", r.i, r.roth_van_tuyl, r.hochster, r.clique_count);
        }
        if !report.is_consistent() {
            bail!("oracle values disagree");
        }
    }
    Ok(())
}

fn switch(doc: &GraphDocument, remove: Edge, add: Edge) -> Result<()> {
    let g = &doc.graph;
    let h = g.switch_free_cut_edge(remove, add)?;
    let (before, after) = (g.clique_census(), h.clique_census());
    if before != after {
        bail!("clique census changed: {before:?} -> {after:?}");
    }
    let counts: Vec<String> = after.iter().map(|(i, k)| format!("k_{i}={k}")).collect();
    eprintln!("clique census unchanged: {}", counts.join(" "));
    print!("{}", with_newline(render(&h, doc.format)));
    Ok(())
}

fn reduce(doc: &GraphDocument) -> Result<()> {
    let g = &doc.graph;
    let free: Vec<String> = g.free_cut_edges().iter().map(Edge::to_string).collect();
    println!("free cut edges: {}", if free.is_empty() { "none".into() } else { free.join(" ") });
    println!("reduced graph:");
    print!("{}", with_newline(render(&g.reduced_graph(), doc.format)));
    Ok(())
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn verify(suite: Suite) -> Result<bool> {
    let config = hochster_config(None)?;
    match suite {
        Suite::ClosedStrand { max_n } => {
            let s = verify_closed_strand(max_n, &config)?;
            println!("{} graphs, {} closed, {} mismatches", s.graphs, s.closed, s.failures.len());
            for f in &s.failures {
                println!("mismatch: {}", f.graph);
            }
            Ok(s.passed())
        }
        Suite::Lollipop { max_m, max_t } => {
            if 2 * (max_m + max_t) > config.vertex_cap {
                bail!(
                    "L_{{{max_m},{max_t}}} needs {} oracle vertices, above the cap of {} (set BEK_SUBSET_CAP)",
                    2 * (max_m + max_t),
                    config.vertex_cap
                );
            }
            let s = verify_lollipop(max_m, max_t, &config)?;
            for c in &s.cases {
                let status = if c.passed() { "ok" } else { "MISMATCH" };
                println!("L_{{{},{}}}: pd {} reg {} {status}", c.m, c.t, c.formula.pd(), c.formula.reg());
            }
            let bad: Vec<_> = s.compositions.iter().filter(|c| !c.passed()).collect();
            println!("{} handle splittings, {} mismatches", s.compositions.len(), bad.len());
            for c in bad {
                println!("mismatch: m = {}, handles {:?}", c.m, c.handles);
            }
            Ok(s.passed())
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Classify { file } => classify(&load(&file, cli.format)?)?,
        Command::Betti { file, method, prime } => betti(&load(&file, cli.format)?, method, prime)?,
        Command::Strand { file } => strand(&load(&file, cli.format)?)?,
        Command::Switch { file, remove, add } => switch(&load(&file, cli.format)?, remove, add)?,
        Command::Reduce { file } => reduce(&load(&file, cli.format)?)?,
        Command::Verify { suite } => return verify(suite),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
