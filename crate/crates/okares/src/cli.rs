//! The `okares` command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 mathematical
//! obstruction, 3 verification mismatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use okares_core::catalog::{expected_graph, verify_family, FamilyReport, RtpFamily};
use okares_core::error::{CatalogError, GraphError, NewtonError, OkaError};
use okares_core::nondeg::{check_newton_nondegenerate_with, SystemMode};
use okares_core::okagraph::{graph_from_fan, oka_resolve, AbstractFan};
use okares_core::poly::{parse_poly, MultiPoly};
use okares_core::resgraph::ResolutionGraph;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::formats::{cone_table, fan_from_json, pretty, render_graph, Format};
use crate::report::{family_value, verdict_value};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_OBSTRUCTION: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<OkaError> for Failure {
    fn from(e: OkaError) -> Self {
        let code = match e {
            OkaError::InvalidFan(_)
            | OkaError::Newton(NewtonError::ZeroPolynomial | NewtonError::WrongVariableCount(_)) => EXIT_USAGE,
            _ => EXIT_OBSTRUCTION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure {
            code: EXIT_OBSTRUCTION,
            message: e.to_string(),
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Oka(e) => e.into(),
            CatalogError::Graph(e) => e.into(),
            other => Failure::usage(other.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "okares", version, about = "Resolution graphs of surface singularities via Newton polyhedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Resolve a polynomial in x, y, z, or an abstract fan.
    Resolve(ResolveArgs),
    /// Decide Newton non-degeneracy of a polynomial.
    Nondeg(NondegArgs),
    /// Run a family instance, or `all`, through the pipeline.
    Verify(VerifyArgs),
    /// Cone determinants and graph of an abstract fan file.
    FanGraph(FanGraphArgs),
    /// Write a graph to a file or stdout.
    Export(ExportArgs),
}

#[derive(Args, Debug)]
struct GraphOpts {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Contract (-1)-curves (default).
    #[arg(long, overrides_with = "no_blowdown")]
    blowdown: bool,
    /// Keep the graph from Oka's process as is.
    #[arg(long = "no-blowdown", overrides_with = "blowdown")]
    no_blowdown: bool,
}

impl GraphOpts {
    fn minimize(&self) -> bool {
        !self.no_blowdown
    }
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").required(true).args(["expr", "fan"])))]
struct ResolveArgs {
    expr: Option<String>,
    /// Abstract fan JSON file instead of a polynomial.
    #[arg(long)]
    fan: Option<PathBuf>,
    #[command(flatten)]
    opts: GraphOpts,
}

#[derive(Args, Debug)]
struct NondegArgs {
    expr: String,
    /// Use only the torus Jacobian system.
    #[arg(long)]
    jacobian_only: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// `all`, or a selector such as `E60`, `B:3,4`, `A:4,3,2`, `H:5`.
    selector: String,
    /// Largest family parameter swept by `all`.
    #[arg(long, default_value_t = 6)]
    max: u32,
    /// Largest `n` of the H series swept by `all`.
    #[arg(long, default_value_t = 10)]
    h_max: u32,
}

#[derive(Args, Debug)]
struct FanGraphArgs {
    path: PathBuf,
    #[command(flatten)]
    opts: GraphOpts,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["expr", "fan", "family"])))]
struct ExportArgs {
    expr: Option<String>,
    #[arg(long)]
    fan: Option<PathBuf>,
    /// Family selector; the graph from Oka's process on its cubic.
    #[arg(long)]
    family: Option<String>,
    /// With --family: the expected minimal graph instead.
    #[arg(long)]
    expected: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    opts: GraphOpts,
}

/// Runs the command line on `args` (including the program name), writing
/// results to `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Resolve(a) => resolve(a, out),
        Command::Nondeg(a) => nondeg(a, out),
        Command::Verify(a) => verify(a, out, err),
        Command::FanGraph(a) => fan_graph(a, out),
        Command::Export(a) => export(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::usage(format!("write failed: {e}")))
}

fn parse_expr(expr: &str) -> Result<MultiPoly, Failure> {
    parse_poly(expr, 3).map_err(|e| Failure::usage(e.to_string()))
}

fn read_fan(path: &Path) -> Result<AbstractFan, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    fan_from_json(&text).map_err(Failure::usage)
}

fn finish(graph: ResolutionGraph, opts: &GraphOpts) -> Result<ResolutionGraph, Failure> {
    Ok(if opts.minimize() { graph.blow_down()?.graph } else { graph })
}

fn polynomial_graph(expr: &str, opts: &GraphOpts) -> Result<ResolutionGraph, Failure> {
    let p = parse_expr(expr)?;
    finish(oka_resolve(&p)?.graph, opts)
}

fn fan_graph_of(path: &Path, opts: &GraphOpts) -> Result<ResolutionGraph, Failure> {
    finish(graph_from_fan(&read_fan(path)?)?.graph, opts)
}

fn resolve(a: ResolveArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let g = match (&a.expr, &a.fan) {
        (Some(e), _) => polynomial_graph(e, &a.opts)?,
        (None, Some(path)) => fan_graph_of(path, &a.opts)?,
        (None, None) => return Err(Failure::usage("no input")),
    };
    emit(out, &render_graph(&g, a.opts.format))?;
    Ok(EXIT_OK)
}

fn nondeg(a: NondegArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let p = parse_expr(&a.expr)?;
    if p.is_zero() {
        return Err(Failure::usage("the zero polynomial has no Newton polyhedron"));
    }
    let mode = if a.jacobian_only { SystemMode::JacobianOnly } else { SystemMode::Full };
    let v = check_newton_nondegenerate_with(&p, mode);
    emit(out, &pretty(&verdict_value(&v)))?;
    Ok(if v.is_nondegenerate() { EXIT_OK } else { EXIT_MISMATCH })
}

fn verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, Failure> {
    if a.selector != "all" {
        let fam = RtpFamily::parse(&a.selector)?;
        let r = verify_family(&fam)?;
        emit(out, &pretty(&family_value(&r)))?;
        return Ok(if r.passed() { EXIT_OK } else { EXIT_MISMATCH });
    }
    let instances = RtpFamily::sweep(a.max, a.h_max);
    let results: Vec<Result<FamilyReport, (RtpFamily, Failure)>> = instances
        .par_iter()
        .map(|f| verify_family(f).map_err(|e| (*f, Failure::from(e))))
        .collect();
    let mut values = Vec::new();
    let mut failed = Vec::new();
    let mut obstructed = false;
    for r in &results {
        match r {
            Ok(rep) => {
                if !rep.passed() {
                    failed.push(rep.family.to_string());
                }
                values.push(family_value(rep));
            }
            Err((fam, f)) => {
                obstructed = true;
                failed.push(fam.to_string());
                let _ = writeln!(err, "error: {fam}: {}", f.message);
                values.push(json!({ "family": fam.to_string(), "error": f.message }));
            }
        }
    }
    let doc = json!({
        "instances": values,
        "total": results.len(),
        "passed": results.len() - failed.len(),
        "failed": failed,
    });
    emit(out, &pretty(&doc))?;
    Ok(if obstructed {
        EXIT_OBSTRUCTION
    } else if failed.is_empty() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

fn fan_graph(a: FanGraphArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let fan = read_fan(&a.path)?;
    let cones = cone_table(&fan);
    let graph = graph_from_fan(&fan).map_err(Failure::from).and_then(|g| finish(g.graph, &a.opts));
    match a.opts.format {
        Format::Json => {
            let mut doc = json!({ "cones": cones });
            match &graph {
                Ok(g) => doc["graph"] = crate::formats::graph_value(g),
                Err(f) => doc["error"] = Value::from(f.message.clone()),
            }
            emit(out, &pretty(&doc))?;
        }
        fmt => {
            let comment = if fmt == Format::Dot { "//" } else { "#" };
            let mut text = String::new();
            for c in &cones {
                text.push_str(&format!("{comment} cone {} det {}\n", c["cone"], c["det"]));
            }
            if let Ok(g) = &graph {
                text.push_str(&render_graph(g, fmt));
            }
            emit(out, &text)?;
        }
    }
    graph.map(|_| EXIT_OK)
}

fn export(a: ExportArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    if a.expected && a.family.is_none() {
        return Err(Failure::usage("--expected needs --family"));
    }
    let g = if let Some(sel) = &a.family {
        let fam = RtpFamily::parse(sel)?;
        if a.expected {
            expected_graph(&fam)?
        } else {
            finish(oka_resolve(&fam.nonisolated_form()?)?.graph, &a.opts)?
        }
    } else if let Some(path) = &a.fan {
        fan_graph_of(path, &a.opts)?
    } else if let Some(e) = &a.expr {
        polynomial_graph(e, &a.opts)?
    } else {
        return Err(Failure::usage("no input"));
    };
    let text = render_graph(&g, a.opts.format);
    match &a.output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
        None => emit(out, &text)?,
    }
    Ok(EXIT_OK)
}
