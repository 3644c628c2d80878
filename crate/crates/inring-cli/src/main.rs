//! Command line front door for the inring library: build inclusion ideal
//! graphs, compute metric and strong metric dimension, check the closed
//! forms, or sweep a whole grid of specs.
//!
//! Exit codes: 0 success (verify/sweep PASS), 1 verification FAIL,
//! 2 usage error, 3 work budget exhausted.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use inring::metric::{
    is_resolving, metric_dimension_exact, predicted_basis, predicted_metric_dimension, WorkBudget,
    DEFAULT_SEARCH_BUDGET,
};
use inring::strong::{
    build_srg_definitional, independence_number, predicted_strong_metric_dimension,
    strong_resolving_witness, StrongResolvingGraph,
};
use inring::verify::{sweep_with, verify_spec, Scoped, SweepGrid, VerificationReport, VerifyConfig};
use inring::{Error, IdealGraph, IdealVector, RingSpec};

const GRAMMAR: &str = "spec grammar: comma separated components, F for a field, C<k> for a chain \
ring with k proper nonzero ideals (so C2 means 0 < I1 < I2 < R); example: C2,F,F";

#[derive(Parser)]
#[command(
    name = "inring",
    version,
    about = "inclusion ideal graphs of finite ring products",
    after_help = GRAMMAR
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex count, connectivity, diameter
    Info(SpecArgs),
    /// Emit the inclusion ideal graph
    Graph(SpecArgs),
    /// Exact metric dimension with a minimum basis
    Dim(SpecArgs),
    /// Exact strong metric dimension with a minimum strong resolving set
    Sdim(SpecArgs),
    /// Emit the strong resolving graph
    Srg(SpecArgs),
    /// Check one spec against every applicable closed form
    Verify(SpecArgs),
    /// Check a whole grid of specs, streaming one report per line
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct SpecArgs {
    /// Ring spec, e.g. C2,F,F
    #[arg(long)]
    spec: String,
    /// Output format; dot applies to graph and srg only
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Work cap for the exact searches
    #[arg(long)]
    budget: Option<u64>,
    /// Write the document here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Output format; json emits one report object per line
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Work cap for the exact searches, per spec
    #[arg(long)]
    budget: Option<u64>,
    /// Field-only specs get up to this many components
    #[arg(long)]
    sweep_max_fields: Option<usize>,
    /// Chain lengths range up to this value
    #[arg(long)]
    sweep_max_chain: Option<u32>,
    /// Write the reports here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Anything that should stop the run, tagged with its exit code.
enum Failure {
    Usage(String),
    Budget,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded => Failure::Budget,
            other => Failure::Lib(other),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("{GRAMMAR}");
            2
        }
        Err(Failure::Budget) => {
            eprintln!("error: work budget exhausted; raise --budget");
            3
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Info(args) => cmd_info(&args),
        Command::Graph(args) => cmd_graph(&args),
        Command::Dim(args) => cmd_dim(&args),
        Command::Sdim(args) => cmd_sdim(&args),
        Command::Srg(args) => cmd_srg(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Sweep(args) => cmd_sweep(&args),
    }
}

fn parse_spec(text: &str) -> Result<RingSpec, Failure> {
    RingSpec::parse(text).map_err(|e| Failure::Usage(format!("bad spec `{text}`: {e}")))
}

fn forbid_dot(args: &SpecArgs) -> Result<(), Failure> {
    if args.format == Format::Dot {
        return Err(Failure::Usage(
            "dot output is only available for graph and srg".into(),
        ));
    }
    Ok(())
}

fn emit(doc: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, doc)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = writeln!(stdout, "{}", doc.trim_end_matches('\n')) {
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    // reader went away (inring ... | head); not an error
                    std::process::exit(0);
                }
                return Err(Failure::Usage(format!("cannot write to standard output: {e}")));
            }
            Ok(())
        }
    }
}

/// Short name for a vertex. In a product of fields the nonzero ideals
/// with a single nonzero slot are the minimal ones, written X1, X2, ...;
/// everything else is spelled out componentwise.
fn vertex_name(v: &IdealVector, spec: &RingSpec) -> String {
    if spec.non_field_count() == 0 {
        let lv = v.levels();
        let mut nz = (0..lv.len()).filter(|&i| lv[i] != 0);
        if let (Some(i), None) = (nz.next(), nz.next()) {
            return format!("X{}", i + 1);
        }
    }
    v.render(spec, " x ")
}

fn braces(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

/// Reading order for witness sets: by the first nonzero slot, then by level
/// vector. Puts X1 before X2 and "I1 x 0" before "R x 0".
fn display_key(v: &IdealVector) -> (usize, Vec<u32>) {
    let lv = v.levels().to_vec();
    let lead = lv.iter().position(|&x| x != 0).unwrap_or(lv.len());
    (lead, lv)
}

fn scoped_u64(s: &Scoped<u64>) -> String {
    match s {
        Scoped::Value(v) => v.to_string(),
        Scoped::OutOfScope => "out_of_scope".into(),
        Scoped::Skipped => "skipped".into(),
    }
}

fn cmd_info(args: &SpecArgs) -> Result<i32, Failure> {
    forbid_dot(args)?;
    let spec = parse_spec(&args.spec)?;
    let graph = IdealGraph::build(&spec);
    let dist = graph.distances();
    let connected = graph.vertex_count() > 0 && graph.is_connected();
    let diameter = if connected { Some(graph.diameter(&dist)?) } else { None };

    let doc = match args.format {
        Format::Json => serde_json::json!({
            "spec": spec.chain_lengths(),
            "spec_display": spec.display(),
            "vertices": graph.vertex_count(),
            "edges": graph.edge_count(),
            "connected": connected,
            "diameter": diameter,
        })
        .to_string(),
        _ => format!(
            "spec={}\nvertices={}\nedges={}\nconnected={}\ndiameter={}",
            spec.display(),
            graph.vertex_count(),
            graph.edge_count(),
            connected,
            diameter.map_or("inf".to_string(), |d| d.to_string()),
        ),
    };
    emit(&doc, &args.out)?;
    Ok(0)
}

fn cmd_graph(args: &SpecArgs) -> Result<i32, Failure> {
    let spec = parse_spec(&args.spec)?;
    let graph = IdealGraph::build(&spec);
    let doc = match args.format {
        Format::Json => graph.to_json(),
        Format::Dot => graph.to_dot(),
        Format::Text => {
            let mut lines = vec![format!(
                "spec={} vertices={} edges={}",
                spec.display(),
                graph.vertex_count(),
                graph.edge_count()
            )];
            for (i, v) in graph.vertices().iter().enumerate() {
                lines.push(format!("{i}: {}", v.render(&spec, " x ")));
            }
            for (u, v) in graph.edges() {
                lines.push(format!("{u} -- {v}"));
            }
            lines.join("\n")
        }
    };
    emit(&doc, &args.out)?;
    Ok(0)
}

fn cmd_dim(args: &SpecArgs) -> Result<i32, Failure> {
    forbid_dot(args)?;
    let spec = parse_spec(&args.spec)?;
    let graph = IdealGraph::build(&spec);
    let dist = graph.distances();
    let mut budget = WorkBudget::new(args.budget.unwrap_or(DEFAULT_SEARCH_BUDGET));
    let exact = metric_dimension_exact(&graph, &dist, &mut budget)?;

    let predicted = match predicted_metric_dimension(&spec) {
        Ok(v) => Scoped::Value(v),
        Err(Error::OutOfTheoremScope) => Scoped::OutOfScope,
        Err(e) => return Err(e.into()),
    };

    // print the closed-form construction when it really is a minimum basis,
    // otherwise the lexicographically least basis from the search
    let mut shown: Vec<IdealVector> = exact
        .basis
        .iter()
        .map(|&i| graph.vertex(i).clone())
        .collect();
    if predicted == Scoped::Value(exact.dimension as u64) {
        if let Ok(cand) = predicted_basis(&spec) {
            if cand.len() == exact.dimension {
                let idx: Option<Vec<usize>> =
                    cand.iter().map(|v| graph.index_of(v)).collect();
                if let Some(idx) = idx {
                    if is_resolving(&idx, &dist) == Ok(true) {
                        shown = cand;
                    }
                }
            }
        }
    }
    shown.sort_by_key(display_key);
    let names: Vec<String> = shown.iter().map(|v| vertex_name(v, &spec)).collect();

    let doc = match args.format {
        Format::Json => serde_json::json!({
            "spec": spec.chain_lengths(),
            "spec_display": spec.display(),
            "dim": exact.dimension,
            "predicted": predicted,
            "basis": shown.iter().map(|v| v.levels().to_vec()).collect::<Vec<_>>(),
            "basis_rendered": names,
            "work_used": budget.used(),
        })
        .to_string(),
        _ => format!(
            "dim={} predicted={} basis={}",
            exact.dimension,
            scoped_u64(&predicted),
            braces(&names)
        ),
    };
    emit(&doc, &args.out)?;
    Ok(0)
}

fn cmd_sdim(args: &SpecArgs) -> Result<i32, Failure> {
    forbid_dot(args)?;
    let spec = parse_spec(&args.spec)?;
    let graph = IdealGraph::build(&spec);
    let dist = graph.distances();
    let srg = build_srg_definitional(&graph, &dist)?;
    let mut budget = WorkBudget::new(args.budget.unwrap_or(DEFAULT_SEARCH_BUDGET));
    let mis = independence_number(&srg, &mut budget)?;
    let sdim = srg.vertex_count() - mis.size;
    let mut witness = strong_resolving_witness(&srg, &mis);
    witness.sort_by_key(|&i| display_key(graph.vertex(i)));
    let names: Vec<String> = witness
        .iter()
        .map(|&i| vertex_name(graph.vertex(i), &spec))
        .collect();

    let predicted = match predicted_strong_metric_dimension(&spec) {
        Ok(v) => Scoped::Value(v),
        Err(Error::OutOfTheoremScope) => Scoped::OutOfScope,
        Err(e) => return Err(e.into()),
    };

    let doc = match args.format {
        Format::Json => serde_json::json!({
            "spec": spec.chain_lengths(),
            "spec_display": spec.display(),
            "sdim": sdim,
            "predicted": predicted,
            "witness": witness,
            "witness_rendered": names,
            "work_used": budget.used(),
        })
        .to_string(),
        _ => format!(
            "sdim={} predicted={} witness={}",
            sdim,
            scoped_u64(&predicted),
            braces(&names)
        ),
    };
    emit(&doc, &args.out)?;
    Ok(0)
}

fn srg_text(srg: &StrongResolvingGraph, spec: &RingSpec) -> String {
    let mut lines = vec![format!(
        "spec={} srg_vertices={} srg_edges={}",
        spec.display(),
        srg.vertex_count(),
        srg.edge_count()
    )];
    for (a, v) in srg.vectors().iter().enumerate() {
        lines.push(format!("{a}: {}", v.render(spec, " x ")));
    }
    for (a, b) in srg.edges() {
        lines.push(format!("{a} -- {b}"));
    }
    lines.join("\n")
}

fn cmd_srg(args: &SpecArgs) -> Result<i32, Failure> {
    let spec = parse_spec(&args.spec)?;
    let graph = IdealGraph::build(&spec);
    let dist = graph.distances();
    let srg = build_srg_definitional(&graph, &dist)?;
    let doc = match args.format {
        Format::Json => srg.to_json(),
        Format::Dot => srg.to_dot(),
        Format::Text => srg_text(&srg, &spec),
    };
    emit(&doc, &args.out)?;
    Ok(0)
}

fn verify_text(report: &VerificationReport) -> String {
    fn line<T: std::fmt::Debug>(out: &mut Vec<String>, key: &str, s: &Scoped<T>) {
        let val = match s {
            Scoped::Value(v) => format!("{v:?}"),
            Scoped::OutOfScope => "out_of_scope".into(),
            Scoped::Skipped => "skipped".into(),
        };
        out.push(format!("{key}={val}"));
    }
    let mut out = vec![
        format!("spec={}", report.spec_display),
        format!("vertices={}", report.vertex_count),
        format!("edges={}", report.edge_count),
        format!("connected={}", report.connected),
        format!(
            "diameter={}",
            report.diameter.map_or("inf".to_string(), |d| d.to_string())
        ),
    ];
    line(&mut out, "dim_exact", &report.dim_exact);
    line(&mut out, "dim_predicted", &report.dim_predicted);
    line(&mut out, "basis_witness_valid", &report.basis_witness_valid);
    line(&mut out, "srg_vertex_count", &report.srg_vertex_count);
    line(
        &mut out,
        "srg_vertex_count_predicted",
        &report.srg_vertex_count_predicted,
    );
    line(
        &mut out,
        "srg_structural_matches",
        &report.srg_structural_matches,
    );
    line(&mut out, "srg_component_sizes", &report.srg_component_sizes);
    line(
        &mut out,
        "srg_components_expected",
        &report.srg_components_expected,
    );
    line(&mut out, "beta_exact", &report.beta_exact);
    line(&mut out, "beta_predicted", &report.beta_predicted);
    line(&mut out, "mis_witness_valid", &report.mis_witness_valid);
    line(&mut out, "sdim_reduction", &report.sdim_reduction);
    line(&mut out, "sdim_oracle", &report.sdim_oracle);
    line(&mut out, "sdim_predicted", &report.sdim_predicted);
    line(
        &mut out,
        "distance_three_rule_holds",
        &report.distance_three_rule_holds,
    );
    for f in &report.failures {
        out.push(format!("failure: {f}"));
    }
    out.push(format!(
        "result={}",
        if report.pass { "PASS" } else { "FAIL" }
    ));
    out.join("\n")
}

fn verify_config(budget: Option<u64>) -> VerifyConfig {
    let mut config = VerifyConfig::default();
    if let Some(b) = budget {
        config.metric_budget = b;
        config.mis_budget = b;
        config.sdim_oracle_budget = b;
    }
    config
}

fn cmd_verify(args: &SpecArgs) -> Result<i32, Failure> {
    forbid_dot(args)?;
    let spec = parse_spec(&args.spec)?;
    let report = verify_spec(&spec, &verify_config(args.budget))?;
    let doc = match args.format {
        Format::Json => serde_json::to_string_pretty(&report)
            .expect("report serialization is infallible"),
        _ => verify_text(&report),
    };
    emit(&doc, &args.out)?;
    Ok(if report.pass { 0 } else { 1 })
}

fn cmd_sweep(args: &SweepArgs) -> Result<i32, Failure> {
    if args.format == Format::Dot {
        return Err(Failure::Usage(
            "dot output is only available for graph and srg".into(),
        ));
    }
    let mut grid = SweepGrid::default();
    if let Some(n) = args.sweep_max_fields {
        grid.max_fields = n;
    }
    if let Some(k) = args.sweep_max_chain {
        grid.max_chain_len = k;
    }
    let config = verify_config(args.budget);
    let total = grid.specs().len();

    let to_stdout = args.out.is_none();
    let mut sink: Box<dyn std::io::Write> = match &args.out {
        Some(path) => Box::new(fs::File::create(path).map_err(|e| {
            Failure::Usage(format!("cannot write {}: {e}", path.display()))
        })?),
        None => Box::new(std::io::stdout()),
    };
    let mut done = 0usize;
    let mut io_err: Option<std::io::Error> = None;
    let as_json = args.format == Format::Json;

    let reports = sweep_with(&grid, &config, |report| {
        done += 1;
        let status = if report.pass { "pass" } else { "FAIL" };
        eprintln!("[{done}/{total}] {} {status}", report.spec_display);
        let line = if as_json {
            serde_json::to_string(report).expect("report serialization is infallible")
        } else if report.pass {
            format!("{} pass", report.spec_display)
        } else {
            format!("{} FAIL ({})", report.spec_display, report.failures.join("; "))
        };
        if io_err.is_none() {
            if let Err(e) = writeln!(sink, "{line}") {
                if to_stdout && e.kind() == std::io::ErrorKind::BrokenPipe {
                    // reader went away mid-sweep; stop instead of computing on
                    std::process::exit(0);
                }
                io_err = Some(e);
            }
        }
    })?;
    if let Some(e) = io_err {
        return Err(Failure::Usage(format!("cannot write reports: {e}")));
    }

    let failed = reports.iter().filter(|r| !r.pass).count();
    eprintln!("sweep: {}/{} pass, {} fail", total - failed, total, failed);
    Ok(if failed == 0 { 0 } else { 1 })
}
