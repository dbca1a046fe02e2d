use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cluster_finite::diagram::{Diagram, EdgeMark};
use cluster_finite::orient::{
    assign_signs, brute_force_orientable, check_edge_ordering_criterion, check_exact_sequence,
    construct_orientation, is_cyclically_orientable_count, BRUTE_FORCE_EDGE_CAP,
};
use cluster_finite::quasi_cartan::{companion_from_signs, is_positive};
use cluster_finite::recognizer::{
    class_type, explore_class, Caps, ExplorationStatus, Witness, DEFAULT_MAX_VISITED,
};
use cluster_finite::sweep::{criteria_sweep, oracle_sweep, series_check, CheckReport};
use cluster_finite::{recognize, ChordlessCycle, Error, SimpleGraph, SkewSymmetrizableMatrix, Verdict};
use cluster_finite_cli::{document_json, parse, parse_edge_list, render, render_text, Format, MatrixDocument};
use serde_json::json;

#[derive(Parser)]
#[command(name = "cluster-finite", version, about = "Finite-type recognition for skew-symmetrizable matrices")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing on success; the exit code carries the answer.
    #[arg(long, global = true)]
    quiet: bool,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Cap on matrices visited by the mutation-class explorer.
    #[arg(long, global = true, env = "CLUSTER_FINITE_MAX_VISITED", default_value_t = DEFAULT_MAX_VISITED)]
    max_visited: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide finite type; exit 0 finite, 1 not finite, 2 bad input.
    Recognize { input: PathBuf },
    /// Apply mutations at the given 1-based indices, left to right.
    Mutate {
        input: PathBuf,
        #[arg(required = true)]
        indices: Vec<usize>,
    },
    /// List the edges of the diagram.
    Diagram {
        input: PathBuf,
        /// Graphviz output.
        #[arg(long)]
        dot: bool,
    },
    /// List the chordless cycles of the diagram and whether each is oriented.
    Cycles { input: PathBuf },
    /// Orientability of a graph given as an edge list "i j [weight]".
    Orient { input: PathBuf },
    /// The companion whose signs multiply to -1 around every chordless cycle.
    Companion { input: PathBuf },
    /// Cartan-Killing type of the mutation class.
    Type { input: PathBuf },
    /// Breadth-first search of the mutation class.
    Explore { input: PathBuf },
    /// Built-in checks.
    Selftest {
        #[command(subcommand)]
        which: Selftest,
    },
}

#[derive(Subcommand)]
enum Selftest {
    /// Determinants and types of A(n), the frontier of B(n), periodicity of det A(n).
    Series,
    /// Agreement of the orientability criteria on small graphs.
    Criteria {
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        /// Random graphs on 7 or 8 vertices.
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Recognizer against the explorer on all small matrices.
    Oracle {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotSkewSymmetrizable { reason } => Failure(format!("input is not skew-symmetrizable: {}", reason)),
            other => Failure(other.to_string()),
        }
    }
}

type Outcome = Result<u8, Failure>;

struct Out {
    json: bool,
    quiet: bool,
}

impl Out {
    fn text(&self, s: impl AsRef<str>) {
        if !self.quiet && !self.json {
            println!("{}", s.as_ref());
        }
    }

    fn raw(&self, s: &str) {
        if !self.quiet {
            print!("{}", s);
        }
    }

    fn value(&self, v: serde_json::Value) {
        if !self.quiet && self.json {
            println!("{}", serde_json::to_string_pretty(&v).expect("plain JSON values"));
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure(format!("cannot read standard input: {}", e)))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {}: {}", path.display(), e)))
}

fn load(path: &PathBuf) -> Result<(MatrixDocument, SkewSymmetrizableMatrix), Failure> {
    let text = read_input(path)?;
    let doc = parse(&text).map_err(|e| Failure(format!("{}: {}", path.display(), e)))?;
    let b = match &doc.symmetrizer {
        Some(d) => SkewSymmetrizableMatrix::with_declared_symmetrizer(doc.matrix.clone(), d)?,
        None => SkewSymmetrizableMatrix::new(doc.matrix.clone())?,
    };
    Ok((doc, b))
}

fn cycle_label(c: &ChordlessCycle) -> String {
    let v: Vec<String> = c.vertices().iter().map(|v| (v + 1).to_string()).collect();
    v.join("-")
}

fn one_based(c: &ChordlessCycle) -> Vec<usize> {
    c.vertices().iter().map(|v| v + 1).collect()
}

fn cmd_recognize(out: &Out, input: &PathBuf) -> Outcome {
    let (_, b) = load(input)?;
    let report = recognize(&b);
    if out.json {
        out.value(serde_json::to_value(&report).expect("serializable report"));
    } else {
        let line = match (&report.verdict, &report.witness) {
            (Verdict::Finite, _) => format!(
                "Finite, type {}",
                report.cartan_type.as_ref().map_or("?".to_string(), |t| t.to_string())
            ),
            (_, Witness::NonOrientableCycle { cycle }) => format!(
                "NotFinite (chordless cycle {} is not cyclically oriented)",
                cycle_label(cycle)
            ),
            (_, Witness::NonPositiveCompanion { minor_index, minor_value, .. }) => format!(
                "NotFinite (companion not positive: leading principal minor of order {} of DA is {})",
                minor_index, minor_value
            ),
            (_, _) => "NotFinite".to_string(),
        };
        out.text(line);
    }
    Ok(if report.verdict == Verdict::Finite { EXIT_YES } else { EXIT_NO })
}

fn cmd_mutate(out: &Out, input: &PathBuf, indices: &[usize]) -> Outcome {
    let (doc, b) = load(input)?;
    let n = b.n();
    let mut ks = Vec::with_capacity(indices.len());
    for &k in indices {
        if k == 0 || k > n {
            return Err(Failure(format!("index {} is out of range 1..={}", k, n)));
        }
        ks.push(k - 1);
    }
    let mb = b.mutate_seq(&ks)?;
    let result = MatrixDocument {
        matrix: mb.matrix().clone(),
        symmetrizer: doc.symmetrizer.as_ref().map(|_| mb.symmetrizer().clone()),
        name: doc.name.clone(),
        format: if out.json { Format::Json } else { doc.format },
    };
    out.raw(&render(&result));
    Ok(EXIT_YES)
}

fn cmd_diagram(out: &Out, input: &PathBuf, dot: bool) -> Outcome {
    let (_, b) = load(input)?;
    let d = Diagram::of_skew(&b);
    if dot && !out.json {
        out.raw(&d.to_dot());
        return Ok(EXIT_YES);
    }
    let mut edges = Vec::new();
    for e in d.edges() {
        let (tail, head) = match e.mark {
            EdgeMark::Arrow { tail, head } => (tail, head),
            _ => (e.u, e.v),
        };
        out.text(format!("{} -> {}  weight {}", tail + 1, head + 1, e.weight));
        edges.push(json!({ "tail": tail + 1, "head": head + 1, "weight": e.weight.to_string() }));
    }
    if d.edge_count() == 0 {
        out.text("no edges");
    }
    out.value(json!({ "n": d.n(), "edges": edges }));
    Ok(EXIT_YES)
}

fn cmd_cycles(out: &Out, input: &PathBuf) -> Outcome {
    let (_, b) = load(input)?;
    let d = Diagram::of_skew(&b);
    let cycles = d.chordless_cycles();
    let mut list = Vec::new();
    let mut oriented_count = 0;
    for c in &cycles {
        let oriented = d.is_cyclically_oriented(c);
        oriented_count += oriented as usize;
        out.text(format!(
            "{}  {}",
            cycle_label(c),
            if oriented { "oriented" } else { "not oriented" }
        ));
        list.push(json!({ "vertices": one_based(c), "oriented": oriented }));
    }
    out.text(format!(
        "{} chordless cycles, {} cyclically oriented",
        cycles.len(),
        oriented_count
    ));
    out.value(json!({ "cycles": list }));
    Ok(EXIT_YES)
}

fn cmd_orient(out: &Out, input: &PathBuf) -> Outcome {
    let text = read_input(input)?;
    let el = parse_edge_list(&text).map_err(|e| Failure(format!("{}: {}", input.display(), e)))?;
    if el.weighted {
        // weights must satisfy the perfect-square condition on cycles
        Diagram::weighted(el.n, &el.edges)?;
    }
    let pairs: Vec<(usize, usize)> = el.edges.iter().map(|&(u, v, _)| (u, v)).collect();
    let g = SimpleGraph::from_edges(el.n, &pairs)?;
    let count = is_cyclically_orientable_count(&g);
    let exact = check_exact_sequence(&g);
    let ordering = check_edge_ordering_criterion(&g);
    let brute = if g.edge_count() <= BRUTE_FORCE_EDGE_CAP {
        Some(brute_force_orientable(&g)?)
    } else {
        None
    };
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    out.text(format!("counting criterion:       {}", yes_no(count)));
    out.text(format!("exact sequence criterion: {}", yes_no(exact)));
    out.text(format!("edge ordering criterion:  {}", yes_no(ordering)));
    out.text(format!(
        "exhaustive search:        {}",
        brute.map_or("skipped (too many edges)".to_string(), |b| yes_no(b).to_string())
    ));
    let orientable = count;
    let mut report = json!({
        "vertices": g.n(),
        "edges": g.edge_count(),
        "criteria": { "counting": count, "exact_sequence": exact, "edge_ordering": ordering, "exhaustive": brute },
        "orientable": orientable,
    });
    if !orientable {
        out.text("not cyclically orientable");
        out.value(report);
        return Ok(EXIT_NO);
    }
    out.text("cyclically orientable");
    let orientation = construct_orientation(&g)?;
    let signs = assign_signs(&g)?;
    out.text("orientation:");
    for &(t, h) in orientation.arcs() {
        out.text(format!("  {} -> {}", t + 1, h + 1));
    }
    out.text("signs:");
    for (&(u, v), s) in signs.edges.iter().zip(&signs.signs) {
        out.text(format!("  {} {}  {}", u + 1, v + 1, if s.is_minus() { "-" } else { "+" }));
    }
    report["orientation"] = json!(orientation.arcs().iter().map(|&(t, h)| [t + 1, h + 1]).collect::<Vec<_>>());
    report["signs"] = json!(signs
        .edges
        .iter()
        .zip(&signs.signs)
        .map(|(&(u, v), s)| json!([u + 1, v + 1, s.to_i64()]))
        .collect::<Vec<_>>());
    out.value(report);
    Ok(EXIT_YES)
}

fn cmd_companion(out: &Out, input: &PathBuf) -> Outcome {
    let (doc, b) = load(input)?;
    let g = Diagram::of_skew(&b).graph();
    let signs = match assign_signs(&g) {
        Ok(s) => s,
        Err(Error::NotOrientable { .. }) => {
            out.text("the diagram is not cyclically orientable; no sign choice works on every cycle");
            out.value(json!({ "companion": null }));
            return Ok(EXIT_NO);
        }
        Err(e) => return Err(e.into()),
    };
    let cert = companion_from_signs(&b, &signs)?;
    let positive = is_positive(&cert.companion);
    if out.json {
        let doc = MatrixDocument {
            matrix: cert.companion.matrix().clone(),
            symmetrizer: Some(cert.companion.symmetrizer().clone()),
            name: doc.name.clone(),
            format: Format::Json,
        };
        out.value(json!({ "companion": document_json(&doc), "positive": positive }));
    } else {
        out.raw(&render_text(cert.companion.matrix()));
        let d: Vec<String> = cert.companion.symmetrizer().diag().iter().map(|x| x.to_string()).collect();
        out.text(format!("symmetrizer: {}", d.join(" ")));
        out.text(format!("positive: {}", if positive { "yes" } else { "no" }));
    }
    Ok(if positive { EXIT_YES } else { EXIT_NO })
}

fn cmd_type(out: &Out, input: &PathBuf) -> Outcome {
    let (_, b) = load(input)?;
    match class_type(&b) {
        Ok(t) => {
            out.text(t.to_string());
            out.value(json!({ "type": t.to_string() }));
            Ok(EXIT_YES)
        }
        Err(Error::NotFinite) => {
            out.text("not of finite type");
            out.value(json!({ "type": null }));
            Ok(EXIT_NO)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_explore(out: &Out, input: &PathBuf, max_visited: usize) -> Outcome {
    let (_, b) = load(input)?;
    let r = explore_class(&b, &Caps::with_max_visited(max_visited));
    let status = match r.status {
        ExplorationStatus::ClassClosed => "class closed",
        ExplorationStatus::WeightExceeded => "found a diagram weight above 3",
        ExplorationStatus::CapExceeded => "stopped at the visit cap",
    };
    out.text(format!("{} after {} matrices", status, r.visited));
    let mut report = json!({ "status": r.status, "visited": r.visited });
    if let Some(w) = &r.witness {
        let path: Vec<usize> = w.path.iter().map(|k| k + 1).collect();
        let p: Vec<String> = path.iter().map(|k| k.to_string()).collect();
        out.text(format!(
            "reached by mutations: {}",
            if p.is_empty() { "(none)".to_string() } else { p.join(" ") }
        ));
        out.text(render_text(w.matrix.matrix()).trim_end());
        report["witness"] = json!({ "path": path, "rows": w.matrix.matrix() });
    }
    out.value(report);
    Ok(match r.status {
        ExplorationStatus::ClassClosed => EXIT_YES,
        ExplorationStatus::WeightExceeded => EXIT_NO,
        ExplorationStatus::CapExceeded => EXIT_UNKNOWN,
    })
}

fn finish_check(out: &Out, name: &str, r: &CheckReport, extra: serde_json::Value) -> Outcome {
    for f in &r.failures {
        out.text(format!("  {}", f));
    }
    out.text(format!(
        "{}: {} ({} checks)",
        name,
        if r.passed() { "pass" } else { "FAIL" },
        r.checked
    ));
    out.value(json!({
        "selftest": name,
        "passed": r.passed(),
        "checked": r.checked,
        "failures": r.failures,
        "details": extra,
    }));
    Ok(if r.passed() { EXIT_YES } else { EXIT_NO })
}

fn cmd_selftest(out: &Out, which: &Selftest, seed: u64, max_visited: usize) -> Outcome {
    match which {
        Selftest::Series => finish_check(out, "series", &series_check(40), json!({})),
        Selftest::Criteria { max_vertices, samples } => {
            let r = criteria_sweep(*max_vertices, *samples, seed);
            finish_check(out, "criteria", &r, json!({ "max_vertices": max_vertices, "samples": samples, "seed": seed }))
        }
        Selftest::Oracle { n } => {
            let r = oracle_sweep(*n, &Caps::with_max_visited(max_visited));
            out.text(format!(
                "finite {}, not finite {}, unknown {}",
                r.finite, r.not_finite, r.unknown
            ));
            let details = json!({ "finite": r.finite, "not_finite": r.not_finite, "unknown": r.unknown });
            finish_check(out, "oracle", &r.check, details)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Out {
        json: cli.json,
        quiet: cli.quiet,
    };
    let result = match &cli.command {
        Command::Recognize { input } => cmd_recognize(&out, input),
        Command::Mutate { input, indices } => cmd_mutate(&out, input, indices),
        Command::Diagram { input, dot } => cmd_diagram(&out, input, *dot),
        Command::Cycles { input } => cmd_cycles(&out, input),
        Command::Orient { input } => cmd_orient(&out, input),
        Command::Companion { input } => cmd_companion(&out, input),
        Command::Type { input } => cmd_type(&out, input),
        Command::Explore { input } => cmd_explore(&out, input, cli.max_visited),
        Command::Selftest { which } => cmd_selftest(&out, which, cli.seed, cli.max_visited),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(EXIT_INPUT)
        }
    }
}
