//! Command-line front end: reads a graph file and answers questions about
//! the labels of its Eulerian trails.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gainwalk::brute::{distinct_labels, enumerate_trails, DEFAULT_CAP};
use gainwalk::cores::{core_partition, extract_valid_instance};
use gainwalk::decide::{normalized_shifting, CoreReport};
use gainwalk::euler::{find_trail, trail_exists, trail_label};
use gainwalk::format::parse_with_base;
use gainwalk::{
    decide, find_witness, Error, GroupOracle, LabeledGraph, ParsedInput, Shifting, Trail, Verdict,
    Violation, Word,
};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "gainwalk", version, about = "Do all Eulerian trails of a group-labeled graph share one label?")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether every Eulerian trail between two vertices has the same label.
    Decide {
        #[command(flatten)]
        ends: Ends,
        /// Print oracle query statistics.
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print two Eulerian trails with different labels.
    Witness {
        #[command(flatten)]
        ends: Ends,
        #[arg(long)]
        json: bool,
    },
    /// Print the 3-cores and the instance each one induces.
    Cores {
        file: PathBuf,
        /// Trail start; defaults to an odd-degree vertex or the first vertex with an edge.
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate every Eulerian trail and list the distinct labels.
    Enumerate {
        #[command(flatten)]
        ends: Ends,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Relabel so that a breadth-first spanning tree carries empty labels.
    Normalize {
        file: PathBuf,
        #[arg(long)]
        root: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Ends {
    file: PathBuf,
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
}

enum Failure {
    Input(String),
    Precondition(String),
    Overflow(usize),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Precondition(_) => 2,
            Failure::Overflow(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Precondition(msg) => Failure::Precondition(msg),
            Error::Disconnected => Failure::Precondition(e.to_string()),
            Error::Overflow { cap } => Failure::Overflow(cap),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Decide { ends, stats, json } => run_decide(&ends, stats, json),
        Command::Witness { ends, json } => run_witness(&ends, json),
        Command::Cores { file, from, to, json } => run_cores(&file, from, to, json),
        Command::Enumerate { ends, cap, json } => run_enumerate(&ends, cap, json),
        Command::Normalize { file, root, json } => run_normalize(&file, &root, json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Input(msg) => eprintln!("error: {msg}"),
                Failure::Precondition(msg) => eprintln!("precondition violated: {msg}"),
                Failure::Overflow(cap) => eprintln!("more than {cap} trails; raise --cap or shrink the graph"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn load(file: &Path) -> Result<ParsedInput, Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure::Input(format!("cannot read `{}`: {e}", file.display())))?;
    let base = file.parent().unwrap_or(Path::new("."));
    parse_with_base(&text, base).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))
}

fn load_ends(ends: &Ends) -> Result<ParsedInput, Failure> {
    let input = load(&ends.file)?;
    for v in [&ends.from, &ends.to] {
        if !input.graph.contains_vertex(v) {
            return Err(Failure::Input(format!("unknown vertex `{v}`")));
        }
    }
    Ok(input)
}

fn tokens(o: &GroupOracle, w: &Word) -> Vec<String> {
    o.format_word(w).split_whitespace().map(str::to_string).collect()
}

fn bracketed(o: &GroupOracle, w: &Word) -> String {
    let s = o.format_word(w);
    if s.is_empty() {
        "[ ]".into()
    } else {
        format!("[ {s} ]")
    }
}

fn trail_tokens(t: &Trail) -> Vec<String> {
    t.arcs().iter().map(ToString::to_string).collect()
}

fn block_text(block: &BTreeSet<String>) -> String {
    format!("{{{}}}", block.iter().cloned().collect::<Vec<_>>().join(", "))
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn shifting_json(o: &GroupOracle, s: &Shifting) -> Value {
    let map: Map<String, Value> = s.iter().map(|(v, w)| (v.clone(), json!(tokens(o, w)))).collect();
    Value::Object(map)
}

fn core_json(c: &CoreReport) -> Value {
    json!({
        "block": c.block,
        "start": c.start,
        "end": c.end,
        "vertices": c.vertex_count,
        "edges": c.edge_count,
    })
}

fn core_line(c: &CoreReport) -> String {
    format!(
        "core {}: |V(H)|={} |E(H)|={} a'={} b'={}",
        block_text(&c.block),
        c.vertex_count,
        c.edge_count,
        c.start,
        c.end
    )
}

fn run_decide(ends: &Ends, stats: bool, json: bool) -> Outcome {
    let ParsedInput { oracle, graph, .. } = load_ends(ends)?;
    oracle.reset_stats();
    let verdict = decide(&graph, &oracle, &ends.from, &ends.to)?;
    let st = oracle.stats();
    let bound = 12 * graph.total_word_length() as u64;
    if json {
        let mut out = json!({ "schema": 1 });
        match &verdict {
            Verdict::VacuousYes => out["verdict"] = json!("vacuous-yes"),
            Verdict::Yes { shifting, cores } => {
                out["verdict"] = json!("yes");
                out["shifting"] = shifting_json(&oracle, shifting);
                out["cores"] = cores.iter().map(core_json).collect();
            }
            Verdict::No { core, violation, cores } => {
                out["verdict"] = json!("no");
                out["core"] = json!(core);
                out["violation"] = match violation {
                    Violation::NotInvolution { edge, label } => json!({
                        "kind": "not-involution",
                        "edge": edge,
                        "label": tokens(&oracle, label),
                    }),
                    Violation::NotCommuting { first_edge, first, second_edge, second } => json!({
                        "kind": "not-commuting",
                        "edges": [first_edge, second_edge],
                        "labels": [tokens(&oracle, first), tokens(&oracle, second)],
                    }),
                };
                out["cores"] = cores.iter().map(core_json).collect();
            }
        }
        if stats {
            out["stats"] = json!({
                "queries": st.query_count,
                "max_query_length": st.max_query_length,
                "total_query_length": st.total_query_length,
                "length_bound": bound,
            });
        }
        print_json(&out);
        return Ok(());
    }
    match &verdict {
        Verdict::VacuousYes => println!("vacuous-yes"),
        Verdict::Yes { shifting, .. } => {
            println!("yes");
            for (v, w) in shifting.iter() {
                println!("shift {v} {}", bracketed(&oracle, w));
            }
        }
        Verdict::No { core, violation, .. } => {
            println!("no");
            println!("core {}", block_text(core));
            match violation {
                Violation::NotInvolution { edge, label } => {
                    println!("label of {edge} {} is not an involution", bracketed(&oracle, label));
                }
                Violation::NotCommuting { first_edge, first, second_edge, second } => println!(
                    "labels of {first_edge} {} and {second_edge} {} do not commute",
                    bracketed(&oracle, first),
                    bracketed(&oracle, second)
                ),
            }
        }
    }
    if stats {
        println!("queries {}", st.query_count);
        println!("max-query-length {}", st.max_query_length);
        println!("length-bound {bound}");
    }
    Ok(())
}

fn run_witness(ends: &Ends, json: bool) -> Outcome {
    let ParsedInput { oracle, graph, .. } = load_ends(ends)?;
    let search = find_witness(&graph, &oracle, &ends.from, &ends.to)?;
    let w = &search.witness;
    let (first, second) = (w.trail(), w.flipped());
    let first_label = trail_label(&graph, &first)?;
    let second_label = trail_label(&graph, &second)?;
    if json {
        print_json(&json!({
            "schema": 1,
            "circuit": trail_tokens(&w.circuit),
            "prefix": trail_tokens(&w.prefix),
            "suffix": trail_tokens(&w.suffix),
            "trails": [trail_tokens(&first), trail_tokens(&second)],
            "labels": [tokens(&oracle, &first_label), tokens(&oracle, &second_label)],
            "decide_calls": search.decide_calls,
            "splits": search.splits,
        }));
        return Ok(());
    }
    println!("L: {}", w.circuit);
    println!("T1: {}", w.prefix);
    println!("T2: {}", w.suffix);
    println!("trail: {first}");
    println!("label: {}", bracketed(&oracle, &first_label));
    println!("flipped: {second}");
    println!("label: {}", bracketed(&oracle, &second_label));
    Ok(())
}

/// Endpoints of some Eulerian trail: the odd-degree pair if there is one,
/// else the smallest vertex that has an edge.
fn default_ends(g: &LabeledGraph) -> Option<(String, String)> {
    let odd: Vec<&String> = g.vertices().filter(|v| g.degree(v) % 2 == 1).collect();
    match odd.as_slice() {
        [a, b] => Some((a.to_string(), b.to_string())),
        [] => {
            let v = g.edges().map(|e| &e.u).min().or_else(|| g.vertices().next())?;
            Some((v.clone(), v.clone()))
        }
        _ => None,
    }
}

fn run_cores(file: &Path, from: Option<String>, to: Option<String>, json: bool) -> Outcome {
    let ParsedInput { graph, .. } = load(file)?;
    let partition = core_partition(&graph);
    let ends = match (from, to) {
        (Some(a), Some(b)) => Some((a, b)),
        (None, None) => default_ends(&graph),
        _ => return Err(Failure::Input("give both --from and --to or neither".into())),
    };
    let mut reports = Vec::new();
    if let Some((a, b)) = &ends {
        if !trail_exists(&graph, a, b)? {
            return Err(Failure::Precondition(format!("no Eulerian trail from `{a}` to `{b}`")));
        }
        let trail = find_trail(&graph, a, b)?;
        for block in partition.blocks() {
            let inst = extract_valid_instance(&graph, &trail, block)?;
            reports.push(CoreReport {
                block: block.clone(),
                start: inst.start.clone(),
                end: inst.end.clone(),
                vertex_count: inst.graph.vertex_count(),
                edge_count: inst.graph.edge_count(),
            });
        }
    }
    if json {
        let mut out = json!({ "schema": 1, "blocks": partition.blocks() });
        if let Some((a, b)) = &ends {
            out["from"] = json!(a);
            out["to"] = json!(b);
            out["cores"] = reports.iter().map(core_json).collect();
        }
        print_json(&out);
        return Ok(());
    }
    if reports.is_empty() {
        for block in partition.blocks() {
            println!("core {}", block_text(block));
        }
    } else {
        for r in &reports {
            println!("{}", core_line(r));
        }
    }
    Ok(())
}

fn run_enumerate(ends: &Ends, cap: usize, json: bool) -> Outcome {
    if cap == 0 {
        return Err(Failure::Input("--cap must be at least 1".into()));
    }
    let ParsedInput { oracle, graph, .. } = load_ends(ends)?;
    let trails = enumerate_trails(&graph, &ends.from, &ends.to, cap)?;
    let labels = distinct_labels(&graph, &oracle, &trails)?;
    if json {
        let labels: Vec<Vec<String>> = labels.iter().map(|w| tokens(&oracle, w)).collect();
        print_json(&json!({ "schema": 1, "trails": trails.len(), "distinct_labels": labels }));
        return Ok(());
    }
    println!("trails {}", trails.len());
    println!("distinct-labels {}", labels.len());
    for w in &labels {
        println!("{}", bracketed(&oracle, w));
    }
    Ok(())
}

fn run_normalize(file: &Path, root: &str, json: bool) -> Outcome {
    let ParsedInput { oracle, graph, .. } = load(file)?;
    if !graph.contains_vertex(root) {
        return Err(Failure::Input(format!("unknown vertex `{root}`")));
    }
    let n = normalized_shifting(&graph, root)?;
    if json {
        let edges: Vec<Value> = n
            .graph
            .edges()
            .map(|e| json!({ "id": e.id, "u": e.u, "v": e.v, "label": tokens(&oracle, &e.label) }))
            .collect();
        print_json(&json!({
            "schema": 1,
            "root": root,
            "difference": n.shifting.difference(),
            "tree": n.tree,
            "shifting": shifting_json(&oracle, &n.shifting),
            "edges": edges,
        }));
        return Ok(());
    }
    println!("# difference {}", n.shifting.difference());
    println!("# tree {}", n.tree.iter().cloned().collect::<Vec<_>>().join(" "));
    for (v, w) in n.shifting.iter() {
        println!("# shift {v} {}", bracketed(&oracle, w));
    }
    print!("{}", gainwalk::format::print(&oracle, &n.graph));
    Ok(())
}
