mod source;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pstrd::bounds::bounds_report;
use pstrd::families::{value_bistar, value_complete_bipartite, value_universal, FamilyValue};
use pstrd::graph::{generate, metrics, write_graph, FamilySpec, Graph, GraphFormat};
use pstrd::heuristics::{randomized_construction, tighten};
use pstrd::model::{classify_p, validate, LabelFunction};
use pstrd::par::Executor;
use pstrd::reduction::{
    build_reduction, parse_x3c, verify_reduction_equivalence, x3c_has_exact_cover, Variant, X3CInstance,
};
use pstrd::solver::{solve, Algorithm, SolverConfig};
use pstrd::suite::{self, reduction_order, CriterionResult};
use source::{load_graph, GRAPH_HELP};

#[derive(Parser)]
#[command(
    name = "pstrd",
    version,
    about = "Exact values, bounds and reductions for p-strong Roman domination"
)]
struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Report wall-clock time as elapsed_ms.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct GraphArgs {
    #[arg(long, long_help = GRAPH_HELP)]
    graph: String,
    /// Input format for graph files: edgelist or dimacs.
    #[arg(long)]
    format: Option<GraphFormat>,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Subcommand)]
enum Command {
    /// Compute γ_StR^p exactly, with an optimal labeling.
    Solve {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
        /// Seconds; on expiry the best labeling so far is reported with optimal=false.
        #[arg(long)]
        time_limit: Option<f64>,
        /// Use exhaustive labeling enumeration (at most 12 vertices).
        #[arg(long)]
        naive: bool,
    },
    /// Check a labeling file (whitespace-separated labels, one per vertex).
    Validate {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        labels: PathBuf,
    },
    /// Evaluate every bound, with applicability verdicts.
    Bounds {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        p: u64,
        /// Also compute γ, γ_R and an optimal labeling for the solver-assisted bounds.
        #[arg(long)]
        with_solver: bool,
    },
    /// Randomized construction from the probabilistic bound.
    Heuristic {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Inclusion probability; defaults to the minimizer of the bound.
        #[arg(long)]
        xi: Option<f64>,
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
        /// Post-process the best labeling with the greedy tightening pass.
        #[arg(long)]
        tighten: bool,
    },
    /// Closed-form value for a graph family.
    Family {
        #[arg(long)]
        name: FamilyName,
        /// Comma-separated: r,s for kbip and bistar, n for universal.
        #[arg(long)]
        params: String,
        #[arg(long)]
        p: u64,
        /// Also solve the generated graph exactly and compare.
        #[arg(long)]
        check: bool,
    },
    /// Build the reduction graph of an X3C instance and write it out.
    Reduce {
        #[arg(long)]
        x3c: PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        variant: Variant,
        #[arg(long)]
        out: PathBuf,
        /// Output format; by default taken from the file extension.
        #[arg(long)]
        out_format: Option<GraphFormat>,
    },
    /// Find an exact cover of an X3C instance.
    X3cSolve {
        #[arg(long)]
        x3c: PathBuf,
    },
    /// Check cover ⟺ γ_StR^p ≤ 2q + 3t on a small instance.
    VerifyReduction {
        #[arg(long)]
        x3c: PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        variant: Variant,
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
    },
    /// Run a fixture suite and print a pass/fail table.
    Bench {
        #[arg(long)]
        suite: SuiteName,
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Kbip,
    Bistar,
    Universal,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Paper,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Compute(e.to_string())
    }
}

/// A finished command: the JSON payload, its text rendering, and whether
/// the command reports a negative outcome (exit code 1).
struct Outcome {
    payload: Value,
    text: String,
    error: Option<String>,
}

impl Outcome {
    fn ok(payload: Value, text: String) -> Self {
        Outcome {
            payload,
            text,
            error: None,
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Solve { .. } => "solve",
        Command::Validate { .. } => "validate",
        Command::Bounds { .. } => "bounds",
        Command::Heuristic { .. } => "heuristic",
        Command::Family { .. } => "family",
        Command::Reduce { .. } => "reduce",
        Command::X3cSolve { .. } => "x3c-solve",
        Command::VerifyReduction { .. } => "verify-reduction",
        Command::Bench { .. } => "bench",
    }
}

fn graph_of(a: &GraphArgs) -> Result<Graph, Failure> {
    if let Some(Err(e)) = source::builtin(&a.graph) {
        return Err(Failure::Usage(e));
    }
    load_graph(&a.graph, a.format).map_err(Failure::Compute)
}

fn need_p(p: u64) -> Result<u64, Failure> {
    if p == 0 {
        return Err(Failure::Usage("--p must be a positive integer".into()));
    }
    Ok(p)
}

fn need_workers(w: usize) -> Result<usize, Failure> {
    if w == 0 {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }
    Ok(w)
}

fn read_x3c(path: &Path) -> Result<X3CInstance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Compute(format!("{}: {e}", path.display())))?;
    parse_x3c(&text).map_err(|e| Failure::Compute(format!("{}: {e}", path.display())))
}

fn labels_text(f: &LabelFunction) -> String {
    f.to_text().trim_end().to_string()
}

fn solve_cmd(
    graph: &GraphArgs,
    p: u64,
    workers: usize,
    time_limit: Option<f64>,
    naive: bool,
) -> Result<Outcome, Failure> {
    let p = need_p(p)?;
    let g = graph_of(graph)?;
    let time_limit = match time_limit {
        Some(s) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => {
            return Err(Failure::Usage(format!(
                "--time-limit must be a non-negative number, got {s}"
            )))
        }
        None => None,
    };
    let cfg = SolverConfig {
        worker_count: need_workers(workers)?,
        time_limit,
        algorithm: if naive {
            Algorithm::Naive
        } else {
            Algorithm::B0Enumeration
        },
    };
    let r = solve(&g, p, &cfg)?;
    let payload = json!({
        "graph": graph.graph,
        "p": p,
        "n": g.n(),
        "m": g.m(),
        "model": classify_p(g.max_degree(), p),
        "value": r.value,
        "optimal": r.optimal,
        "witness": r.witness,
        "stats": r.stats,
    });
    let text = format!(
        "value: {}{}\nwitness: {}\nzero sets examined: {}, pruned: {}",
        r.value,
        if r.optimal {
            ""
        } else {
            " (not proven optimal: time limit reached)"
        },
        labels_text(&r.witness),
        r.stats.subsets_examined,
        r.stats.pruned
    );
    Ok(Outcome::ok(payload, text))
}

fn validate_cmd(graph: &GraphArgs, p: u64, labels: &Path) -> Result<Outcome, Failure> {
    let p = need_p(p)?;
    let g = graph_of(graph)?;
    let text = fs::read_to_string(labels).map_err(|e| Failure::Compute(format!("{}: {e}", labels.display())))?;
    let f = LabelFunction::parse(&text)?;
    let rep = validate(&g, p, &f)?;
    let mut out = format!(
        "valid: {}\nweight: {}\nmax label: {}",
        rep.valid, rep.weight, rep.max_label
    );
    for v in &rep.violations {
        out.push_str(&format!("\nvertex {}: {:?}", v.vertex, v.reason));
    }
    let payload = json!({
        "graph": graph.graph,
        "p": p,
        "labels": f,
        "valid": rep.valid,
        "weight": rep.weight,
        "max_label": rep.max_label,
        "violations": rep.violations,
    });
    Ok(Outcome::ok(payload, out))
}

fn bounds_cmd(graph: &GraphArgs, p: u64, with_solver: bool) -> Result<Outcome, Failure> {
    let p = need_p(p)?;
    let g = graph_of(graph)?;
    let rep = bounds_report(&g, p, with_solver)?;
    let mut text = String::new();
    for e in &rep.entries {
        let value = match e.value {
            Some(pstrd::bounds::BoundValue::Integer(v)) => v.to_string(),
            Some(pstrd::bounds::BoundValue::Real(x)) => format!("{x:.6}"),
            None => "-".into(),
        };
        text.push_str(&format!(
            "{:<15} {:<5} {:>10}  {}  [{}]\n",
            e.name,
            format!("{:?}", e.direction).to_lowercase(),
            value,
            if e.applicable { "applies" } else { "n/a    " },
            e.reason
        ));
    }
    let show = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
    text.push_str(&format!(
        "best lower: {}, best upper: {}",
        show(rep.best_lower),
        show(rep.best_upper)
    ));
    let payload = json!({
        "graph": graph.graph,
        "p": p,
        "metrics": metrics(&g),
        "with_solver": with_solver,
        "entries": rep.entries,
        "best_lower": rep.best_lower,
        "best_upper": rep.best_upper,
    });
    Ok(Outcome::ok(payload, text))
}

#[allow(clippy::too_many_arguments)]
fn heuristic_cmd(
    graph: &GraphArgs,
    p: u64,
    trials: usize,
    seed: u64,
    xi: Option<f64>,
    workers: usize,
    tight: bool,
) -> Result<Outcome, Failure> {
    let p = need_p(p)?;
    let g = graph_of(graph)?;
    let ex = Executor::new(need_workers(workers)?);
    let s = randomized_construction(&g, p, trials, seed, xi, &ex)?;
    let tightened = if tight { Some(tighten(&g, p, &s.best)?) } else { None };
    let mut text = format!(
        "xi: {:.6}\ntrials: {}, seed: {}\nmean weight: {:.4} (stderr {:.4})\nbest weight: {}\nbest: {}",
        s.xi,
        s.trials,
        s.seed,
        s.mean_weight,
        s.std_error,
        s.best_weight,
        labels_text(&s.best)
    );
    if let Some(t) = &tightened {
        text.push_str(&format!(
            "\ntightened weight: {}\ntightened: {}",
            t.weight(),
            labels_text(t)
        ));
    }
    let payload = json!({
        "graph": graph.graph,
        "p": p,
        "seed": seed,
        "stats": s,
        "tightened": tightened.as_ref().map(|t| json!({"weight": t.weight(), "labels": t})),
    });
    Ok(Outcome::ok(payload, text))
}

fn family_cmd(name: FamilyName, params: &str, p: u64, check: bool) -> Result<Outcome, Failure> {
    let nums: Vec<u64> = params
        .split(',')
        .map(|w| w.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("--params must be comma-separated integers, got {params:?}")))?;
    let arity = match name {
        FamilyName::Universal => 1,
        _ => 2,
    };
    if nums.len() != arity {
        return Err(Failure::Usage(format!("this family takes {arity} parameter(s)")));
    }
    let (fv, spec): (FamilyValue, FamilySpec) = match name {
        FamilyName::Kbip => (
            value_complete_bipartite(nums[0], nums[1], p),
            FamilySpec::CompleteBipartite(nums[0] as usize, nums[1] as usize),
        ),
        FamilyName::Bistar => (
            value_bistar(nums[0], nums[1], p),
            FamilySpec::DoubleStar(nums[0] as usize, nums[1] as usize),
        ),
        FamilyName::Universal => (value_universal(nums[0], p), FamilySpec::Star(nums[0] as usize)),
    };
    let solved = if check {
        let g = generate(&spec)?;
        Some(solve(&g, need_p(p)?, &SolverConfig::with_workers(default_workers()))?.value)
    } else {
        None
    };
    let mut text = match fv.value {
        Some(v) => format!("value: {v}"),
        None => format!("inapplicable: {}", fv.reason),
    };
    if let Some(v) = solved {
        text.push_str(&format!("\nsolver: {v}"));
    }
    let payload = json!({ "family": fv, "solver_value": solved });
    Ok(Outcome::ok(payload, text))
}

fn reduce_cmd(
    x3c: &Path,
    p: u64,
    variant: Variant,
    out: &Path,
    out_format: Option<GraphFormat>,
) -> Result<Outcome, Failure> {
    let inst = read_x3c(x3c)?;
    let res = build_reduction(&inst, p, variant)?;
    let format = out_format.unwrap_or_else(|| source::guess_format(out));
    fs::write(out, write_graph(&res.graph, format)).map_err(|e| Failure::Compute(format!("{}: {e}", out.display())))?;
    let m = metrics(&res.graph);
    let text = format!(
        "wrote {} ({} vertices, {} edges)\nthreshold 2q+3t: {}\nbipartite: {}, chordal: {}",
        out.display(),
        m.n,
        m.m,
        res.r_threshold,
        m.bipartite,
        m.chordal
    );
    let payload = json!({
        "x3c": x3c.display().to_string(),
        "p": p,
        "variant": variant,
        "out": out.display().to_string(),
        "n": m.n,
        "m": m.m,
        "bipartite": m.bipartite,
        "chordal": m.chordal,
        "r_threshold": res.r_threshold,
        "roles": res.roles,
    });
    Ok(Outcome::ok(payload, text))
}

fn x3c_solve_cmd(x3c: &Path) -> Result<Outcome, Failure> {
    let inst = read_x3c(x3c)?;
    let cover = x3c_has_exact_cover(&inst);
    let text = match &cover {
        Some(c) => {
            let parts: Vec<String> = c
                .iter()
                .map(|&j| {
                    let [a, b, d] = inst.clauses()[j];
                    format!("{j}: ({a}, {b}, {d})")
                })
                .collect();
            format!("exact cover: {}", parts.join(", "))
        }
        None => "no exact cover".into(),
    };
    let payload = json!({
        "x3c": x3c.display().to_string(),
        "q": inst.q(),
        "t": inst.t(),
        "cover": cover,
    });
    Ok(Outcome::ok(payload, text))
}

fn verify_payload(inst: &X3CInstance, p: u64, variant: Variant, workers: usize) -> Result<(Value, bool), Failure> {
    let rep = verify_reduction_equivalence(inst, p, variant, &SolverConfig::with_workers(need_workers(workers)?))?;
    let holds = rep.holds;
    Ok((serde_json::to_value(rep)?, holds))
}

fn verify_cmd(x3c: &Path, p: u64, variant: Variant, workers: usize) -> Result<Outcome, Failure> {
    let inst = read_x3c(x3c)?;
    let (mut payload, holds) = verify_payload(&inst, p, variant, workers)?;
    payload["x3c"] = json!(x3c.display().to_string());
    let text = format!(
        "cover: {}\nγ: {} (threshold {})\nequivalence holds: {holds}",
        match &payload["cover"] {
            Value::Null => "none".to_string(),
            c => c.to_string(),
        },
        payload["gamma"],
        payload["r_threshold"]
    );
    Ok(Outcome {
        payload,
        text,
        error: (!holds).then(|| "cover existence and γ <= 2q+3t disagree".to_string()),
    })
}

/// Serialized solve and verify-reduction payloads are identical for one and
/// four workers.
fn determinism() -> CriterionResult {
    let mut f = Vec::new();
    let rob = GraphArgs {
        graph: "robertson".into(),
        format: None,
    };
    let render = |o: Result<Outcome, Failure>| o.ok().map(|o| o.payload.to_string());
    if render(solve_cmd(&rob, 3, 1, None, false)) != render(solve_cmd(&rob, 3, 4, None, false)) {
        f.push("solve robertson differs".to_string());
    }
    let mut runs = 1;
    for (i, inst) in suite::x3c_corpus().iter().enumerate() {
        for p in [3, 4] {
            if reduction_order(inst, p) > pstrd::reduction::VERIFY_MAX_N {
                continue;
            }
            for variant in [Variant::Bipartite, Variant::Chordal] {
                let one = verify_payload(inst, p, variant, 1).ok().map(|v| v.0.to_string());
                let four = verify_payload(inst, p, variant, 4).ok().map(|v| v.0.to_string());
                runs += 1;
                if one.is_none() || one != four {
                    f.push(format!("verify-reduction instance {i} p = {p} {variant} differs"));
                }
            }
        }
    }
    CriterionResult {
        id: 11,
        name: "determinism",
        passed: f.is_empty(),
        detail: if f.is_empty() {
            format!("{runs} payloads identical for 1 and 4 workers")
        } else {
            f.join("; ")
        },
    }
}

fn bench_cmd(workers: usize) -> Result<Outcome, Failure> {
    let cfg = SolverConfig::with_workers(need_workers(workers)?);
    let mut results = suite::run_all(&cfg);
    results.push(determinism());
    let failed = results.iter().filter(|r| !r.passed).count();
    let mut text: Vec<String> = results.iter().map(CriterionResult::line).collect();
    text.push(format!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    ));
    Ok(Outcome {
        payload: json!({ "suite": "paper", "results": results, "failed": failed }),
        text: text.join("\n"),
        error: (failed > 0).then(|| format!("{failed} criteria failed")),
    })
}

fn run(cmd: &Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Solve {
            graph,
            p,
            workers,
            time_limit,
            naive,
        } => solve_cmd(graph, *p, *workers, *time_limit, *naive),
        Command::Validate { graph, p, labels } => validate_cmd(graph, *p, labels),
        Command::Bounds { graph, p, with_solver } => bounds_cmd(graph, *p, *with_solver),
        Command::Heuristic {
            graph,
            p,
            trials,
            seed,
            xi,
            workers,
            tighten,
        } => heuristic_cmd(graph, *p, *trials, *seed, *xi, *workers, *tighten),
        Command::Family { name, params, p, check } => family_cmd(*name, params, *p, *check),
        Command::Reduce {
            x3c,
            p,
            variant,
            out,
            out_format,
        } => reduce_cmd(x3c, *p, *variant, out, *out_format),
        Command::X3cSolve { x3c } => x3c_solve_cmd(x3c),
        Command::VerifyReduction {
            x3c,
            p,
            variant,
            workers,
        } => verify_cmd(x3c, *p, *variant, *workers),
        Command::Bench {
            suite: SuiteName::Paper,
            workers,
        } => bench_cmd(*workers),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let start = Instant::now();
    let outcome = run(&cli.command);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    let (mut payload, text, error, code) = match outcome {
        Ok(o) => {
            let code = if o.error.is_some() { 1 } else { 0 };
            (o.payload, o.text, o.error, code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Compute(msg)) => (json!({}), String::new(), Some(msg), 1),
    };
    if cli.json {
        let mut doc = serde_json::Map::new();
        doc.insert("command".into(), json!(name));
        if let Value::Object(fields) = payload.take() {
            doc.extend(fields);
        }
        if let Some(e) = &error {
            doc.insert("error".into(), json!(e));
        }
        if cli.timings {
            doc.insert("elapsed_ms".into(), json!(elapsed_ms));
        }
        let doc = serde_json::to_string(&Value::Object(doc)).expect("payload serializes");
        let _ = writeln!(io::stdout(), "{doc}");
    } else {
        let mut out = io::stdout().lock();
        if !text.is_empty() {
            let _ = writeln!(out, "{text}");
        }
        if cli.timings {
            let _ = writeln!(out, "elapsed: {elapsed_ms:.1} ms");
        }
        if let Some(e) = &error {
            eprintln!("error: {e}");
        }
    }
    ExitCode::from(code)
}
