mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use aalpha_core::check::{all_pass, Check};
use aalpha_core::oracle::dense_a_alpha_radius;
use aalpha_core::quotient::{quad_join_lambda, quotient_perron, symmetric_join_lambda};
use aalpha_core::search::{search, verify_theorem_bounds_on_argmax, Mode, SearchParams, SearchReport};
use aalpha_core::spectra::{spectral_radius_with, PowerOptions};
use aalpha_core::verify::{run_suite, Suite, VerifyOptions};
use aalpha_core::{parse_graph6, sequential_join, theorem_bounds, Alpha, Error, Graph, JoinSpec};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use output::{envelope, fmt_float, print_checks};

const EXIT_INPUT: u8 = 2;
const EXIT_MISMATCH: u8 = 3;
const EXIT_INFEASIBLE: u8 = 4;
const EXIT_USAGE: u8 = 5;

#[derive(Parser)]
#[command(
    name = "aalpha",
    version,
    about = "A_alpha spectral radii, sequential clique joins and extremal search"
)]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius and Perron vector of one graph.
    Lambda(LambdaArgs),
    /// Spectral data of a sequential join of cliques, e.g. "1,2,4,2,1".
    Join(JoinArgs),
    /// Search the class of k-connected graphs of order n and diameter d.
    Search(SearchArgs),
    /// Run a seeded verification suite.
    Verify(VerifyArgs),
    /// Sandwich bounds for the predicted extremal graph.
    Bounds(BoundsArgs),
}

#[derive(Args)]
struct AlphaArg {
    /// One alpha in [0, 1) or a comma-separated list.
    #[arg(long, default_value = "0")]
    alpha: String,
}

#[derive(Args)]
struct LambdaArgs {
    #[arg(long, conflicts_with = "edges", required_unless_present = "edges")]
    graph6: Option<String>,
    /// Edge-list file: an "n m" header, then m lines "u v" with 0-based vertices.
    #[arg(long)]
    edges: Option<PathBuf>,
    #[command(flatten)]
    alpha: AlphaArg,
    /// Residual tolerance of the power iteration.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct JoinArgs {
    spec: String,
    #[command(flatten)]
    alpha: AlphaArg,
    /// Agreement tolerance between quotient and full graph.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args)]
struct ClassArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    class: ClassArgs,
    #[command(flatten)]
    alpha: AlphaArg,
    #[arg(long, default_value = "critical")]
    mode: String,
    /// Write the (composition, lambda) table of a critical-class run as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 700)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Print every check, not only failures and notes.
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    class: ClassArgs,
    #[command(flatten)]
    alpha: AlphaArg,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Infeasible { .. } => EXIT_INFEASIBLE,
            Error::NoConvergence { .. } | Error::SymmetryViolation { .. } => 1,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn input(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

fn parse_alphas(text: &str) -> Result<Vec<Alpha>, Failure> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<Alpha>()
                .map_err(|e| input(format!("--alpha {s:?}: {e}")))
        })
        .collect()
}

fn load_graph(args: &LambdaArgs) -> Result<Graph, Failure> {
    if let Some(text) = &args.graph6 {
        return Ok(parse_graph6(text)?);
    }
    let path = args.edges.as_ref().expect("clap requires one input");
    let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    Ok(Graph::parse_edge_list(&text)?)
}

fn emit(json: bool, command: &str, params: impl Serialize, results: impl Serialize, checks: &[Check]) {
    if json {
        println!("{}", envelope(command, params, results, checks));
    }
}

fn cmd_lambda(args: &LambdaArgs, json: bool) -> Outcome {
    let g = load_graph(args)?;
    let alphas = parse_alphas(&args.alpha.alpha)?;
    let mut opts = PowerOptions::default();
    if let Some(tol) = args.tol {
        if tol.is_nan() || tol <= 0.0 {
            return Err(input("--tol must be positive"));
        }
        opts.tolerance = tol;
    }
    let mut results = Vec::new();
    let mut checks = Vec::new();
    for a in &alphas {
        let r = spectral_radius_with(&g, *a, opts)?;
        let dense = dense_a_alpha_radius(&g, *a);
        checks.push(Check::close(
            format!("n={} m={}", g.order(), g.edge_count()),
            Some(a.value()),
            "power iteration = dense eigensolve",
            r.lambda,
            dense,
            1e-8 * r.lambda.max(1.0),
        ));
        if !json {
            println!(
                "alpha={} lambda={} residual={:.3e} iterations={}",
                fmt_float(a.value()),
                fmt_float(r.lambda),
                r.residual,
                r.iterations
            );
        }
        results.push(json!({
            "alpha": a.value(),
            "lambda": r.lambda,
            "residual": r.residual,
            "iterations": r.iterations,
            "perron": r.perron,
        }));
    }
    let params = json!({"n": g.order(), "edges": g.edge_count(), "alpha": alphas, "tolerance": opts.tolerance});
    emit(json, "lambda", params, results, &checks);
    Ok(if all_pass(&checks) { 0 } else { 1 })
}

/// Closed form for the symmetric three- and four-cell families.
fn closed_form(spec: &JoinSpec, a: Alpha) -> Option<(&'static str, f64)> {
    match *spec.parts() {
        [n1, n2, n3] if n1 == n3 => Some(("symmetric triple", symmetric_join_lambda(n1, n2, a))),
        [n1, n2, n3, n4] if n1 == n4 && n2 == n3 => Some(("symmetric quadruple", quad_join_lambda(n1, n2, a))),
        _ => None,
    }
}

fn cmd_join(args: &JoinArgs, json: bool) -> Outcome {
    let spec: JoinSpec = args.spec.parse()?;
    let alphas = parse_alphas(&args.alpha.alpha)?;
    let full_graph = match sequential_join(&spec) {
        Ok(g) if g.order() >= 2 => Some(g),
        _ => None,
    };
    let mut results = Vec::new();
    let mut checks = Vec::new();
    for a in &alphas {
        let (lambda, cells) = quotient_perron(&spec, *a);
        let al = Some(a.value());
        let full = match &full_graph {
            Some(g) => Some(spectral_radius_with(g, *a, PowerOptions::default())?.lambda),
            None => None,
        };
        if let Some(f) = full {
            checks.push(Check::close(
                spec.to_string(),
                al,
                "quotient = full radius",
                lambda,
                f,
                args.tol,
            ));
        }
        let closed = closed_form(&spec, *a);
        if let Some((family, value)) = closed {
            checks.push(Check::close(
                spec.to_string(),
                al,
                format!("{family} closed form = quotient"),
                value,
                lambda,
                args.tol,
            ));
        }
        if !json {
            print!("{spec} alpha={} lambda={}", fmt_float(a.value()), fmt_float(lambda));
            if let Some(f) = full {
                print!(" full={}", fmt_float(f));
            }
            println!();
            let cells: Vec<String> = cells.iter().map(|x| fmt_float(*x)).collect();
            println!("  cell entries: {}", cells.join(" "));
        }
        results.push(json!({
            "alpha": a.value(),
            "lambda": lambda,
            "full_lambda": full,
            "closed_form": closed.map(|(_, v)| v),
            "cell_entries": cells,
        }));
    }
    if !json {
        print_checks(&checks);
    }
    let params = json!({"spec": spec, "order": spec.order(), "alpha": alphas, "tolerance": args.tol});
    emit(json, "join", params, results, &checks);
    Ok(if all_pass(&checks) { 0 } else { EXIT_MISMATCH })
}

fn write_csv(path: &PathBuf, reports: &[SearchReport]) -> Result<(), Failure> {
    let mut out = String::from("alpha,composition,lambda\n");
    for r in reports {
        for (spec, lam) in &r.table {
            let parts: Vec<String> = spec.parts().iter().map(usize::to_string).collect();
            out.push_str(&format!("{},{},{}\n", r.params.alpha, parts.join(" "), fmt_float(*lam)));
        }
    }
    fs::write(path, out).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn cmd_search(args: &SearchArgs, json: bool) -> Outcome {
    let mode: Mode = args.mode.parse().map_err(|e: Error| usage(e.to_string()))?;
    if args.csv.is_some() && mode != Mode::CriticalClass {
        return Err(usage("--csv needs --mode critical"));
    }
    let alphas = parse_alphas(&args.alpha.alpha)?;
    let ClassArgs { n, k, d } = args.class;
    let mut reports = Vec::new();
    for a in &alphas {
        let p = SearchParams::new(n, k, d, *a, mode)?;
        reports.push(search(&p)?);
    }
    if let Some(path) = &args.csv {
        write_csv(path, &reports)?;
    }
    let checks: Vec<Check> = reports
        .iter()
        .map(|r| {
            let label = format!("n={n} k={k} d={d} predicted {}", r.predicted_spec);
            let check = Check::holds(
                label,
                Some(r.params.alpha.value()),
                "argmax matches prediction",
                r.matches_prediction,
            );
            if r.in_theorem_scope {
                check
            } else {
                check.exploratory()
            }
        })
        .collect();
    if json {
        let results: Vec<SearchReport> = reports
            .iter()
            .map(|r| SearchReport {
                table: Vec::new(),
                ..r.clone()
            })
            .collect();
        emit(
            true,
            "search",
            json!({"n": n, "k": k, "d": d, "mode": mode, "alpha": alphas}),
            results,
            &checks,
        );
    } else {
        for r in &reports {
            println!(
                "alpha={} mode={mode} n={n} k={k} d={d}",
                fmt_float(r.params.alpha.value())
            );
            match r.best_lambda {
                Some(lam) => println!("  best lambda: {}", fmt_float(lam)),
                None => println!("  class is empty"),
            }
            for s in &r.best_specs {
                println!("  best spec: {s}");
            }
            for g in &r.best_graphs {
                println!("  best graph6: {g}");
            }
            println!(
                "  predicted: {} lambda {}",
                r.predicted_spec,
                fmt_float(r.predicted_lambda)
            );
            println!("  n_mid: {} in theorem scope: {}", r.n_mid, r.in_theorem_scope);
            println!("  matches prediction: {}", r.matches_prediction);
            if let Some(gap) = r.runner_up_gap {
                println!("  gap to runner-up: {:.3e}", gap);
            }
            let s = &r.stats;
            println!(
                "  visited {} connected {} diameter {} k-connected {} pruned {} evaluated {}",
                s.visited, s.connected, s.right_diameter, s.k_connected, s.pruned_by_bound, s.spectral_evaluations
            );
        }
    }
    Ok(if all_pass(&checks) { 0 } else { EXIT_MISMATCH })
}

fn cmd_bounds(args: &BoundsArgs, json: bool) -> Outcome {
    let alphas = parse_alphas(&args.alpha.alpha)?;
    let ClassArgs { n, k, d } = args.class;
    let mut checks = Vec::new();
    let mut results = Vec::new();
    for a in &alphas {
        let p = SearchParams::new(n, k, d, *a, Mode::CriticalClass)?;
        let (lower, upper) = theorem_bounds(p.n_mid(), k, *a)?;
        let found = verify_theorem_bounds_on_argmax(&p)?;
        let lambda = found[0].rhs;
        if !json {
            println!(
                "alpha={} lower={} lambda={} upper={}",
                fmt_float(a.value()),
                fmt_float(lower),
                fmt_float(lambda),
                fmt_float(upper)
            );
        }
        results.push(json!({"alpha": a.value(), "lower": lower, "lambda": lambda, "upper": upper, "n_mid": p.n_mid()}));
        checks.extend(found);
    }
    if !json {
        print_checks(&checks);
    }
    emit(
        json,
        "bounds",
        json!({"n": n, "k": k, "d": d, "alpha": alphas}),
        results,
        &checks,
    );
    Ok(if all_pass(&checks) { 0 } else { EXIT_MISMATCH })
}

fn cmd_verify(args: &VerifyArgs, json: bool) -> Outcome {
    let suite: Suite = args.suite.parse().map_err(|e: Error| usage(e.to_string()))?;
    let opts = VerifyOptions {
        seed: args.seed,
        trials: args.trials,
    };
    let reports = run_suite(suite, opts)?;
    let checks: Vec<Check> = reports.iter().flat_map(|r| r.checks.iter().cloned()).collect();
    if json {
        let results: Vec<_> = reports
            .iter()
            .map(|r| json!({"suite": r.suite, "checks": r.checks.len(), "failures": r.failures().count(), "redrawn": r.redrawn}))
            .collect();
        emit(
            true,
            "verify",
            json!({"suite": suite, "trials": args.trials, "seed": args.seed}),
            results,
            &checks,
        );
    } else {
        for r in &reports {
            let failures = r.failures().count();
            let status = if failures == 0 { "pass" } else { "FAIL" };
            println!(
                "{}: {status} ({} checks, {failures} failures, {} redrawn)",
                r.suite,
                r.checks.len(),
                r.redrawn
            );
            let notes = r.checks.iter().filter(|c| c.exploratory && !c.pass).count();
            if notes > 0 {
                println!("  {notes} exploratory records did not hold");
            }
            let shown: Vec<Check> = if args.verbose {
                r.checks.clone()
            } else {
                r.failures().cloned().collect()
            };
            print_checks(&shown);
        }
    }
    Ok(if all_pass(&checks) { 0 } else { EXIT_MISMATCH })
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("AALPHA_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| usage(format!("AALPHA_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = configure_threads().and_then(|()| match &cli.command {
        Command::Lambda(a) => cmd_lambda(a, cli.json),
        Command::Join(a) => cmd_join(a, cli.json),
        Command::Search(a) => cmd_search(a, cli.json),
        Command::Verify(a) => cmd_verify(a, cli.json),
        Command::Bounds(a) => cmd_bounds(a, cli.json),
    });
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
