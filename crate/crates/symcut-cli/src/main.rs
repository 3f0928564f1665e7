//! `symcut`: exact cut-locus geometry of compact symmetric spaces.
//!
//! Subcommands: `info` inspects one space and deck group, `table`
//! reproduces the two summary tables, `verify` runs the self-check
//! battery, and `list` dumps the bundled catalog.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad input,
//! 3 enumeration cap exceeded.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_traits::Signed;

use symcut::catalog::{
    analyze, catalog_listing, enumerate_forms, resolve_space, spaces, table_rows_filtered,
    SpaceEntry, TableFilter, TableId,
};
use symcut::killing::epsilon_from_ricci;
use symcut::report::{render_info, render_listing, render_table, render_verify, Format};
use symcut::roots::RootSystemType;
use symcut::verify::run_all;
use symcut::{rat, Error, Rat, Result};

#[derive(Parser)]
#[command(
    name = "symcut",
    version,
    about = "Exact injectivity radii, diameters, and cut-locus polytopes of compact symmetric spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect one space: deck group, cut polytope, injectivity radius, diameter.
    Info(InfoArgs),
    /// Emit a summary table: 8.1 (quotient spaces) or 8.2 (group manifolds).
    Table(TableArgs),
    /// Run the verification battery and report each check.
    Verify(VerifyArgs),
    /// List every bundled space with its center and quotient forms.
    List(ListArgs),
}

#[derive(Args)]
struct OutputOpts {
    /// Output format.
    #[arg(long, default_value = "text", value_parser = ["json", "csv", "md", "text"])]
    format: String,
    /// Largest restricted rank allowed in exact vertex enumeration.
    #[arg(long, env = "SYMCUT_MAX_RANK", default_value_t = symcut::DEFAULT_RANK_CAP)]
    max_rank: u32,
}

impl OutputOpts {
    fn format(&self) -> Result<Format> {
        Format::parse(&self.format)
    }
}

#[derive(Args)]
struct MetricOpts {
    /// Metric scale as a rational p/q; lengths are pi*sqrt(epsilon q).
    #[arg(long, conflicts_with = "ricci")]
    epsilon: Option<String>,
    /// Ricci curvature as a rational p/q; sets epsilon = 1/(2 Ric).
    #[arg(long)]
    ricci: Option<String>,
}

fn parse_rat(name: &str, text: &str) -> Result<Rat> {
    text.trim()
        .parse::<Rat>()
        .map_err(|_| Error::BadQuery(format!("--{name} wants a rational like 3 or 3/2, got {text:?}")))
}

impl MetricOpts {
    fn epsilon(&self) -> Result<Rat> {
        match (&self.epsilon, &self.ricci) {
            (Some(e), None) => {
                let eps = parse_rat("epsilon", e)?;
                if !eps.is_positive() {
                    return Err(Error::BadQuery(format!("--epsilon must be positive, got {eps}")));
                }
                Ok(eps)
            }
            (None, Some(r)) => epsilon_from_ricci(&parse_rat("ricci", r)?),
            (None, None) => Ok(rat(1)),
            (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
        }
    }
}

#[derive(Args)]
struct InfoArgs {
    /// Space label with parameters, e.g. "E I", "A I" with --n, "Spin(8)", "S^4".
    space: Option<String>,
    /// Raw restricted root system such as A1 or C3, read as a group manifold.
    #[arg(long, conflicts_with = "space")]
    sigma: Option<String>,
    /// Deck transformation subgroup: Z<k>, full, trivial, gen=e<j>, half-spin, vector.
    #[arg(long, default_value = "full")]
    gamma: String,
    /// Family parameter n.
    #[arg(long)]
    n: Option<u32>,
    /// Family parameter p.
    #[arg(long)]
    p: Option<u32>,
    /// Family parameter q.
    #[arg(long)]
    q: Option<u32>,
    #[command(flatten)]
    metric: MetricOpts,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct TableArgs {
    /// Table id: 8.1 (quotient spaces) or 8.2 (group manifolds).
    id: String,
    /// Comma-separated family labels or space names to keep.
    #[arg(long)]
    only: Option<String>,
    /// Inclusive range a..b (or a single value) replacing the default n values.
    #[arg(long)]
    n: Option<String>,
    /// Inclusive range a..b (or a single value) replacing the default p values.
    #[arg(long)]
    p: Option<String>,
    /// Inclusive range a..b (or a single value) replacing the default q values.
    #[arg(long)]
    q: Option<String>,
    #[command(flatten)]
    metric: MetricOpts,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct ListArgs {
    #[command(flatten)]
    output: OutputOpts,
}

fn parse_range(name: &str, text: &str) -> Result<(u32, u32)> {
    let bad = || {
        Error::BadQuery(format!(
            "--{name} wants a value like 4 or an inclusive range like 2..4, got {text:?}"
        ))
    };
    let t = text.trim();
    if let Some((lo, hi)) = t.split_once("..") {
        let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok((lo, hi))
    } else {
        let v: u32 = t.parse().map_err(|_| bad())?;
        Ok((v, v))
    }
}

fn resolve_entry(args: &InfoArgs) -> Result<SpaceEntry> {
    match (&args.space, &args.sigma) {
        (Some(label), None) => resolve_space(label, args.n, args.p, args.q),
        (None, Some(sigma)) => spaces::from_sigma(RootSystemType::parse(sigma)?),
        (None, None) => Err(Error::BadQuery(
            "name a space (e.g. \"E I\", \"Spin(8)\") or pass --sigma".to_string(),
        )),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    }
}

fn cmd_info(args: InfoArgs) -> Result<String> {
    let format = args.output.format()?;
    let epsilon = args.metric.epsilon()?;
    let entry = resolve_entry(&args)?;
    let cap = args.output.max_rank;
    let set = enumerate_forms(&entry)?;
    let rank = set.datum.rank as u32;
    if rank > cap {
        return Err(Error::RankCapExceeded { rank, cap });
    }
    let analysis = analyze(&entry, &args.gamma, cap)?;
    Ok(render_info(&analysis, &epsilon, format))
}

fn cmd_table(args: TableArgs) -> Result<String> {
    let format = args.output.format()?;
    let epsilon = args.metric.epsilon()?;
    let id = TableId::parse(&args.id)?;
    let mut filter = match &args.only {
        Some(list) => TableFilter::with_only(list),
        None => TableFilter::default(),
    };
    if let Some(n) = &args.n {
        filter.n = Some(parse_range("n", n)?);
    }
    if let Some(p) = &args.p {
        filter.p = Some(parse_range("p", p)?);
    }
    if let Some(q) = &args.q {
        filter.q = Some(parse_range("q", q)?);
    }
    let rows = table_rows_filtered(id, &filter, args.output.max_rank)?;
    Ok(render_table(id.id(), &rows, &epsilon, format))
}

fn cmd_verify(args: VerifyArgs) -> Result<(String, bool)> {
    let format = args.output.format()?;
    let cap = args.output.max_rank;
    let checks = run_all(cap);
    let ok = checks.iter().all(|c| c.passed || c.skipped);
    Ok((render_verify(cap, &checks, format), ok))
}

fn cmd_list(args: ListArgs) -> Result<String> {
    let format = args.output.format()?;
    let entries = catalog_listing()?;
    Ok(render_listing(&entries, format))
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::RankCapExceeded { .. } => 3,
        _ => 2,
    }
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn main() {
    let cli = Cli::parse();
    let outcome: Result<(String, i32)> = match cli.command {
        Command::Info(args) => cmd_info(args).map(|text| (text, 0)),
        Command::Table(args) => cmd_table(args).map(|text| (text, 0)),
        Command::Verify(args) => {
            cmd_verify(args).map(|(text, ok)| (text, if ok { 0 } else { 1 }))
        }
        Command::List(args) => cmd_list(args).map(|text| (text, 0)),
    };
    match outcome {
        Ok((text, code)) => {
            emit(&text);
            std::process::exit(code);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(exit_code(&err));
        }
    }
}
