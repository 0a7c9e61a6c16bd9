//! Command-line front end: invariant reports, reference tables, volume
//! formulas and oracle cross-checks.

use std::fs;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use eigenweights::classical::{closed_form, fundamental_index};
use eigenweights::invariants::{b_minuscule_closed, epsilon1_closed, EigenweightReport, Engine, ReportOptions};
use eigenweights::rootdata::{CartanType, RootDatum};
use eigenweights::scalar::{big, format_rational};
use eigenweights::tables::{self, TableRoute};
use eigenweights::volume::{apply_operators, empty_product_value, single_leg_form, VolumeOptions, ZetaCurve};
use eigenweights::Error;

const THREADS_ENV: &str = "EIGENWEIGHTS_THREADS";

#[derive(Parser)]
#[command(name = "eigenweights", version, about = "Exact eigenweights, b-constants and volume formulas")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant report for one dominant weight.
    Invariants(InvariantsArgs),
    /// Regenerate the reference tables, optionally checking every cell.
    Tables(TablesArgs),
    /// Evaluate a volume formula for a curve.
    Volume(VolumeArgs),
    /// Run the built-in oracle cross-checks.
    Selfcheck(SelfcheckArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Matrix,
    ClosedForm,
    Both,
}

impl RouteArg {
    fn routes(self) -> Vec<TableRoute> {
        match self {
            RouteArg::Matrix => vec![TableRoute::Matrix],
            RouteArg::ClosedForm => vec![TableRoute::ClosedForm],
            RouteArg::Both => vec![TableRoute::Matrix, TableRoute::ClosedForm],
        }
    }
}

#[derive(Args)]
struct GroupArgs {
    /// Type of the dual group, e.g. B3.
    #[arg(long = "dual-type", conflicts_with = "group_type")]
    dual_type: Option<String>,
    /// Type of G itself; B and C are swapped.
    #[arg(long = "type")]
    group_type: Option<String>,
}

impl GroupArgs {
    fn resolve(&self) -> anyhow::Result<CartanType> {
        match (&self.dual_type, &self.group_type) {
            (Some(t), _) => Ok(t.parse()?),
            (None, Some(t)) => Ok(t.parse::<CartanType>()?.dual()),
            (None, None) => Err(Error::InvalidInput("one of --dual-type or --type is required".into()).into()),
        }
    }
}

#[derive(Args)]
struct WeightArgs {
    /// Dominant weight in fundamental-weight coordinates, e.g. 0,1,0,0.
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    #[arg(long, conflicts_with_all = ["weight", "adjoint", "minuscule"])]
    quasi_minuscule: bool,
    #[arg(long, conflicts_with_all = ["weight", "minuscule"])]
    adjoint: bool,
    #[arg(long, conflicts_with = "weight")]
    minuscule: bool,
}

impl WeightArgs {
    fn resolve(&self, datum: &RootDatum) -> anyhow::Result<Vec<i64>> {
        let name = if self.quasi_minuscule {
            "quasi-minuscule"
        } else if self.adjoint {
            "adjoint"
        } else if self.minuscule {
            "minuscule"
        } else {
            let w = self.weight.as_deref().ok_or_else(|| Error::InvalidInput("a weight is required".into()))?;
            return parse_weight(datum, w);
        };
        Ok(tables::resolve_weight(datum, name)?)
    }
}

fn parse_weight(datum: &RootDatum, s: &str) -> anyhow::Result<Vec<i64>> {
    let w = s
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::InvalidWeight(format!("cannot parse weight {:?}", s)))?;
    datum.check_weight(&w)?;
    if w.iter().any(|&x| x < 0) {
        return Err(Error::InvalidWeight(format!("{:?} is not dominant", w)).into());
    }
    Ok(w)
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    group: GroupArgs,
    #[command(flatten)]
    weight: WeightArgs,
    #[arg(long, value_enum, default_value = "matrix")]
    route: RouteArg,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long = "dim-cap", default_value_t = eigenweights::repbuilder::DEFAULT_DIM_CAP)]
    dim_cap: usize,
    /// Skip b_λ.
    #[arg(long)]
    no_b: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TablesArgs {
    /// Restrict to the named tables (repeatable); all by default.
    #[arg(long = "table")]
    tables: Vec<String>,
    #[arg(long, value_enum, default_value = "both")]
    route: RouteArg,
    /// Compare every cell with the embedded reference values.
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long = "dim-cap", default_value_t = eigenweights::repbuilder::DEFAULT_DIM_CAP)]
    dim_cap: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VolumeArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Curve as JSON {"q": .., "genus": .., "numerator": [..]}.
    #[arg(long, conflicts_with = "q")]
    curve: Option<PathBuf>,
    /// Use the projective line over F_q.
    #[arg(long)]
    q: Option<u64>,
    /// Leg weights; repeat the flag or separate weights with ';'.
    #[arg(long, allow_hyphen_values = true)]
    legs: Vec<String>,
    /// Single weight repeated --order times.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "legs")]
    weight: Option<String>,
    #[arg(long, requires = "weight")]
    order: Option<usize>,
    /// Overrides |π₁(G)|.
    #[arg(long)]
    pi1: Option<i64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long = "dim-cap", default_value_t = eigenweights::repbuilder::DEFAULT_DIM_CAP)]
    dim_cap: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SelfcheckArgs {
    /// Highest classical rank for the route comparison.
    #[arg(long, default_value_t = 4)]
    max_rank: usize,
}

/// A failure with a specific process exit code.
#[derive(Debug)]
struct Exit {
    code: u8,
    message: String,
}

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Exit {}

fn mismatch(message: String) -> anyhow::Error {
    Exit { code: 4, message }.into()
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<Exit>() {
        return e.code;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::DimensionCap { .. }) => 3,
        Some(Error::Internal(_)) | Some(Error::NotInCentralizer(_)) => 5,
        Some(_) => 2,
        None => {
            if err.downcast_ref::<std::io::Error>().is_some() || err.downcast_ref::<serde_json::Error>().is_some() {
                2
            } else {
                5
            }
        }
    }
}

fn emit(sink: &mut String, out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            sink.push_str(text);
            Ok(())
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn human_report(r: &EigenweightReport) -> String {
    let provenance = serde_json::to_value(r.provenance).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
    let mut s = format!("type {}  lambda {:?}  ({})\n", r.cartan_type, r.lambda, provenance);
    s.push_str(&format!("  d       = {}\n  deg     = {}\n", r.d, r.deg));
    let eps: Vec<String> = r.epsilon.iter().map(|e| e.to_string()).collect();
    s.push_str(&format!("  epsilon = ({})\n", eps.join(", ")));
    if let Some(b) = &r.block {
        let row = |i: usize| b.matrix[i].iter().map(format_rational).collect::<Vec<_>>().join(", ");
        s.push_str(&format!("  block   = slots ({}, {}) [[{}], [{}]]\n", b.slots.0 + 1, b.slots.1 + 1, row(0), row(1)));
    }
    if let Some(b) = &r.b {
        s.push_str(&format!("  b       = {}\n", format_rational(b)));
    }
    s
}

fn csv_report(r: &EigenweightReport) -> String {
    let eps: Vec<String> = r.epsilon.iter().map(|e| e.to_string()).collect();
    let lambda: Vec<String> = r.lambda.iter().map(|x| x.to_string()).collect();
    format!(
        "type,lambda,d,deg,epsilon,b\n{},{},{},{},\"({})\",{}\n",
        r.cartan_type,
        lambda.join(" "),
        r.d,
        r.deg,
        eps.join(","),
        r.b.as_ref().map(format_rational).unwrap_or_default()
    )
}

/// Differences in d, deg, ε and the raw block between two reports.
fn report_diff(a: &EigenweightReport, b: &EigenweightReport) -> Vec<String> {
    let mut out = Vec::new();
    if a.d != b.d {
        out.push(format!("d: {} vs {}", a.d, b.d));
    }
    if a.deg != b.deg {
        out.push(format!("deg: {} vs {}", a.deg, b.deg));
    }
    for (j, (x, y)) in a.epsilon.iter().zip(&b.epsilon).enumerate() {
        if x != y {
            out.push(format!("epsilon[{}]: {} vs {}", j + 1, x, y));
        }
    }
    if a.block != b.block {
        out.push("raw block differs".into());
    }
    out
}

fn cmd_invariants(sink: &mut String, args: InvariantsArgs) -> anyhow::Result<()> {
    let t = args.group.resolve()?;
    let datum = RootDatum::new(t);
    let lambda = args.weight.resolve(&datum)?;
    let opts = ReportOptions { dim_cap: args.dim_cap, with_b: !args.no_b };
    let matrix = || -> anyhow::Result<EigenweightReport> { Ok(Engine::new(t)?.report(&lambda, opts)?) };
    let closed = || -> anyhow::Result<EigenweightReport> {
        let k = fundamental_index(&lambda)
            .ok_or_else(|| Error::InvalidInput("closed forms cover fundamental weights only".into()))?;
        Ok(closed_form(t, k)?.to_report())
    };
    let report = match args.route {
        RouteArg::Matrix => matrix()?,
        RouteArg::ClosedForm => closed()?,
        RouteArg::Both => {
            let m = matrix()?;
            let c = closed()?;
            let diff = report_diff(&m, &c);
            if !diff.is_empty() {
                return Err(mismatch(format!("matrix and closed-form routes disagree:\n  {}", diff.join("\n  "))));
            }
            m
        }
    };
    let text = match args.format {
        Format::Json => pretty(&report.to_json()),
        Format::Human => human_report(&report),
        Format::Csv => csv_report(&report),
    };
    emit(sink, &args.out, &text)
}

fn cmd_tables(sink: &mut String, args: TablesArgs) -> anyhow::Result<()> {
    let opts = ReportOptions { dim_cap: args.dim_cap, with_b: true };
    let regenerated = tables::regenerate(&args.tables, &args.route.routes(), opts)?;
    if !args.check {
        let text = match args.format {
            Format::Json => pretty(&tables::to_json(&regenerated)),
            _ => tables::to_csv(&regenerated),
        };
        return emit(sink, &args.out, &text);
    }
    let cells = tables::check(&regenerated);
    let failed: Vec<_> = cells.iter().filter(|c| !c.pass).collect();
    let text = match args.format {
        Format::Json => pretty(&serde_json::json!({
            "cells": cells.len(),
            "passed": cells.len() - failed.len(),
            "failed": failed,
        })),
        _ => {
            let mut s = String::new();
            for c in &cells {
                s.push_str(&format!(
                    "{} {} {} {} {} [{}] expected {} got {}{}\n",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.table,
                    c.cartan_type,
                    c.weight,
                    c.column,
                    c.route,
                    c.expected,
                    c.actual,
                    c.erratum.as_ref().map(|e| format!(" ({})", e)).unwrap_or_default()
                ));
            }
            s.push_str(&format!("{} of {} cells pass\n", cells.len() - failed.len(), cells.len()));
            s
        }
    };
    emit(sink, &args.out, &text)?;
    if !failed.is_empty() {
        let list: Vec<String> = failed
            .iter()
            .map(|c| format!("{} {} {} {} [{}]", c.table, c.cartan_type, c.weight, c.column, c.route))
            .collect();
        return Err(mismatch(format!("{} cell(s) differ: {}", failed.len(), list.join("; "))));
    }
    Ok(())
}

fn cmd_volume(sink: &mut String, warnings: &mut Vec<String>, args: VolumeArgs) -> anyhow::Result<()> {
    let t = args.group.resolve()?;
    let curve = match (&args.curve, args.q) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            #[derive(serde::Deserialize)]
            struct CurveFile {
                q: u64,
                genus: u32,
                numerator: Vec<i64>,
            }
            let c: CurveFile = serde_json::from_str(&text).map_err(|e| Error::InvalidCurve(e.to_string()))?;
            ZetaCurve::new(c.q, c.genus, c.numerator)?
        }
        (None, Some(q)) => ZetaCurve::projective_line(q)?,
        (None, None) => bail!(Error::InvalidInput("one of --curve or --q is required".into())),
    };
    for w in curve.warnings() {
        warnings.push(format!("warning: {}", w));
    }
    let engine = Engine::new(t)?;
    let datum = engine.datum().clone();
    let mut legs: Vec<Vec<i64>> = Vec::new();
    for group in &args.legs {
        for w in group.split(';').filter(|s| !s.trim().is_empty()) {
            legs.push(parse_weight(&datum, w)?);
        }
    }
    if let Some(w) = &args.weight {
        let w = parse_weight(&datum, w)?;
        legs = vec![w; args.order.unwrap_or(1)];
    }
    let opts = ReportOptions { dim_cap: args.dim_cap, with_b: true };
    let mut reports = Vec::new();
    for l in &legs {
        reports.push(engine.report(l, opts)?);
    }
    let vopts = VolumeOptions { pi1_order: args.pi1, extra_order: 0 };
    let result = apply_operators(&reports, &curve, &datum, &vopts)?;
    let mut consistency = None;
    if let Some(first) = reports.first() {
        if reports.iter().all(|r| r.lambda == first.lambda) {
            let single = single_leg_form(first, &curve, &datum, reports.len(), &vopts)?;
            if single.value != result.value {
                return Err(mismatch(format!(
                    "theorem forms disagree: {} vs {}",
                    format_rational(&result.value),
                    format_rational(&single.value)
                )));
            }
            consistency = Some(true);
        }
    } else {
        let direct = empty_product_value(&curve, &datum, &vopts)?;
        if direct != result.value {
            return Err(mismatch("empty product differs from direct evaluation".into()));
        }
        consistency = Some(true);
    }
    let text = match args.format {
        Format::Json => {
            let mut v = result.to_json();
            v["forms_agree"] = serde_json::json!(consistency);
            pretty(&v)
        }
        _ => format!("{}\n", result),
    };
    emit(sink, &args.out, &text)
}

fn cmd_selfcheck(sink: &mut String, args: SelfcheckArgs) -> anyhow::Result<()> {
    let mut failures = Vec::new();
    let mut checks = 0usize;
    let opts = ReportOptions::default();
    for series in ["A", "B", "C", "D"] {
        let lo = match series {
            "D" => 4,
            "B" | "C" => 2,
            _ => 1,
        };
        for n in lo..=args.max_rank.max(lo) {
            let t: CartanType = format!("{}{}", series, n).parse()?;
            let engine = Engine::new(t)?;
            for k in 1..=n {
                let lambda = engine.datum().fundamental_weight(k - 1);
                let m = engine.report(&lambda, opts)?;
                let c = closed_form(t, k)?.to_report();
                checks += 1;
                let diff = report_diff(&m, &c);
                if !diff.is_empty() || m.s != c.s || m.t != c.t {
                    failures.push(format!("{} w{}: routes disagree {:?}", t, k, diff));
                }
                checks += 1;
                let eps1 = epsilon1_closed(engine.datum(), m.d, &big(&m.deg));
                if m.epsilon[0].a != eps1 || !m.epsilon[0].is_rational() {
                    failures.push(format!("{} w{}: epsilon_1 formula gives {}", t, k, eps1));
                }
                if engine.datum().is_minuscule(&lambda) {
                    checks += 1;
                    let b = b_minuscule_closed(engine.datum(), &lambda, &big(&m.deg))?;
                    if m.b.as_ref() != Some(&b) {
                        failures.push(format!("{} w{}: minuscule b formula gives {}", t, k, format_rational(&b)));
                    }
                }
            }
        }
    }
    for t in ["A1", "A2"] {
        let engine = Engine::new(t.parse()?)?;
        let lambda = engine.datum().fundamental_weight(0);
        let rep = engine.report(&lambda, opts)?;
        for q in [2, 3] {
            let curve = ZetaCurve::projective_line(q)?;
            for r in 1..=3 {
                checks += 1;
                let vopts = VolumeOptions::default();
                let a = apply_operators(&vec![rep.clone(); r], &curve, engine.datum(), &vopts)?;
                let s = single_leg_form(&rep, &curve, engine.datum(), r, &vopts)?;
                if a.value != s.value {
                    failures.push(format!("{} q={} r={}: theorem forms disagree", t, q, r));
                }
            }
        }
    }
    sink.push_str(&format!("{} of {} checks pass\n", checks - failures.len(), checks));
    if failures.is_empty() {
        Ok(())
    } else {
        Err(mismatch(failures.join("\n")))
    }
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| anyhow!(Error::InvalidInput(format!("{} must be a positive integer", THREADS_ENV))))?;
        // a second configuration in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

/// Result of one command-line invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command, capturing output.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut stdout = String::new();
    let mut warnings = Vec::new();
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Invariants(a) => cmd_invariants(&mut stdout, a),
        Command::Tables(a) => cmd_tables(&mut stdout, a),
        Command::Volume(a) => cmd_volume(&mut stdout, &mut warnings, a),
        Command::Selfcheck(a) => cmd_selfcheck(&mut stdout, a),
    });
    let mut stderr: String = warnings.iter().map(|w| format!("{}\n", w)).collect();
    let code = match result {
        Ok(()) => 0,
        Err(e) => {
            stderr.push_str(&format!("error: {:#}\n", e));
            exit_code(&e)
        }
    };
    Outcome { code, stdout, stderr }
}
