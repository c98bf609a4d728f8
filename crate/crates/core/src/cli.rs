//! The `hatgame` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical guarantee
//! is violated, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{
    default_workers, exhaustive_worst_case_with, identity_check, lower_bound_loss, monte_carlo, search_optimal,
    RedCount, WorstCaseReport,
};
use crate::game::{evaluate, Color, HatDistribution, PlayerSet, Strategy};
use crate::strategies::{
    guarantee_bound, make_partition, CompositeStrategy, MajorityStrategy, Pairing, PairingStrategy, PartialParams,
    PartialStrategy,
};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hatgame", version, about = "Strategies and worst-case checks for the hat guessing game")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score one strategy on one distribution.
    Eval(EvalArgs),
    /// Evaluate a strategy on every distribution of n hats.
    Sweep(SweepArgs),
    /// Check the exact binomial identity for even n.
    Identity(NArgs),
    /// Tabulate the loss bounds for a range of n.
    Bounds(BoundsArgs),
    /// Enumerate every strategy profile for n <= 3.
    SearchOptimal(NArgs),
    /// Evaluate a strategy on seeded random distributions.
    Sample(SampleArgs),
    /// Print the block partition used by the composite strategy.
    Plan(NArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyName {
    Pairing,
    Majority,
    Composite,
    Partial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct StrategyArgs {
    #[arg(long, value_enum)]
    pub strategy: StrategyName,
    /// Majority tie-break (`R` or `B`); majority and composite only.
    #[arg(long, value_parser = parse_color)]
    pub tie_break: Option<Color>,
    /// Blue threshold of the partial strategy.
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<i64>,
    /// Red threshold of the partial strategy.
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<i64>,
    /// Block of the composite partition used as `T` (default: all players).
    #[arg(long)]
    pub block: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub strategy: StrategyArgs,
    /// Hat distribution over {R, B}, player 1 first.
    #[arg(long)]
    pub omega: String,
    /// Optional; must equal the length of `--omega`.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub strategy: StrategyArgs,
    /// Number of players (at most 24).
    #[arg(long)]
    pub n: usize,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub strategy: StrategyArgs,
    /// Number of players.
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    /// Output does not depend on `--workers` for a fixed seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Exact number of red hats, or `uniform`.
    #[arg(long, default_value = "uniform", value_parser = parse_red_count)]
    pub red_count: RedCount,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct NArgs {
    /// Number of players.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Last n of the table.
    #[arg(long)]
    pub n: usize,
    /// First n of the table.
    #[arg(long, default_value_t = 2)]
    pub n_min: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

fn parse_color(s: &str) -> std::result::Result<Color, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_red_count(s: &str) -> std::result::Result<RedCount, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}

/// Build the strategy named on the command line for `n` players.
pub fn build_strategy(args: &StrategyArgs, n: usize) -> Result<Box<dyn Strategy>> {
    let partial_only = args.a.is_some() || args.b.is_some() || args.block.is_some();
    if partial_only && args.strategy != StrategyName::Partial {
        return Err(usage("--a, --b and --block only apply to --strategy partial"));
    }
    if args.tie_break.is_some() && matches!(args.strategy, StrategyName::Pairing | StrategyName::Partial) {
        return Err(usage("--tie-break only applies to majority and composite"));
    }
    let tie = args.tie_break.unwrap_or(Color::Red);
    Ok(match args.strategy {
        StrategyName::Pairing => Box::new(PairingStrategy::canonical(n)?),
        StrategyName::Majority => Box::new(MajorityStrategy::new(n, tie)?),
        StrategyName::Composite => Box::new(CompositeStrategy::with_tie_break(n, tie)?),
        StrategyName::Partial => {
            let (Some(a), Some(b)) = (args.a, args.b) else {
                return Err(usage("--strategy partial needs --a and --b"));
            };
            let pairing = Pairing::canonical(n)?;
            let block = match args.block {
                None => PlayerSet::full(n),
                Some(i) => {
                    let plan = make_partition(n)?;
                    if i == 0 || i > plan.k() {
                        return Err(usage(format!("--block must be in 1..={} for n = {n}", plan.k())));
                    }
                    plan.block(i).clone()
                }
            };
            Box::new(PartialStrategy::new(PartialParams::new(block, a, b, pairing)?))
        }
    })
}

/// One named pass/fail comparison.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub observed: Value,
    pub limit: Value,
}

fn report_checks(strategy: &StrategyArgs, report: &WorstCaseReport) -> Vec<Check> {
    let n = report.n;
    let mut checks = Vec::new();
    if let Some(total) = &report.total_correct {
        let expected = num_bigint::BigUint::from(n) << (n - 1);
        checks.push(Check {
            name: "average_is_half",
            passed: *total == expected,
            observed: json!(total.to_string()),
            limit: json!(expected.to_string()),
        });
        let lb = lower_bound_loss(n as u64);
        checks.push(Check {
            name: "lower_bound_respected",
            passed: report.worst_loss as f64 >= lb,
            observed: json!(report.worst_loss),
            limit: json!(lb),
        });
    }
    match strategy.strategy {
        StrategyName::Pairing => checks.push(Check {
            name: "pairing_exact",
            passed: report.min_correct == n / 2 && report.max_correct() == n / 2,
            observed: json!([report.min_correct, report.max_correct()]),
            limit: json!(n / 2),
        }),
        StrategyName::Composite => {
            let composite = CompositeStrategy::new(n).expect("already built");
            checks.push(Check {
                name: "structural_loss",
                passed: report.worst_loss <= composite.loss_bound() as i64,
                observed: json!(report.worst_loss),
                limit: json!(composite.loss_bound()),
            });
            let bound = guarantee_bound(n, None).expect("n >= 2");
            checks.push(Check {
                name: "theorem_loss",
                passed: report.worst_loss as f64 <= bound.theorem_loss(),
                observed: json!(report.worst_loss),
                limit: json!(bound.theorem_loss()),
            });
        }
        StrategyName::Majority | StrategyName::Partial => {}
    }
    checks
}

struct Rendered {
    value: Value,
    csv: Option<Vec<u8>>,
    exit: i32,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn report_csv(report: &WorstCaseReport) -> Vec<u8> {
    let mut buf = Vec::new();
    report.write_csv(&mut buf).expect("writing to memory");
    buf
}

fn verdict(checks: &[Check]) -> i32 {
    if checks.iter().all(|c| c.passed) {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn workers(w: Option<usize>) -> usize {
    w.unwrap_or_else(default_workers).max(1)
}

fn dispatch(command: &Command) -> Result<(Rendered, Format)> {
    match command {
        Command::Eval(args) => {
            let omega: HatDistribution = args.omega.parse()?;
            if let Some(n) = args.n {
                if n != omega.n() {
                    return Err(usage(format!("--n {n} does not match the {} hats in --omega", omega.n())));
                }
            }
            let strategy = build_strategy(&args.strategy, omega.n())?;
            let record = evaluate(&strategy, &omega)?;
            let value = json!({
                "command": "eval",
                "strategy": strategy.name(),
                "n": omega.n(),
                "omega": omega.to_string(),
                "majority_target": omega.majority_target(),
                "record": record,
            });
            Ok((Rendered { value, csv: None, exit: EXIT_OK }, args.format))
        }
        Command::Sweep(args) => {
            let strategy = build_strategy(&args.strategy, args.n)?;
            let report = exhaustive_worst_case_with(&strategy, args.n, workers(args.workers))?;
            let checks = report_checks(&args.strategy, &report);
            let plan = (args.n % 2 == 0).then(|| make_partition(args.n)).transpose()?;
            let bound = guarantee_bound(args.n, plan.as_ref())?;
            let exit = verdict(&checks);
            let value = json!({
                "command": "sweep",
                "report": to_value(&report),
                "bound": to_value(&bound),
                "checks": to_value(&checks),
                "passed": exit == EXIT_OK,
            });
            Ok((Rendered { value, csv: Some(report_csv(&report)), exit }, args.format))
        }
        Command::Sample(args) => {
            let strategy = build_strategy(&args.strategy, args.n)?;
            let report =
                monte_carlo(&strategy, args.n, args.trials, args.red_count, args.seed, workers(args.workers))?;
            let checks = report_checks(&args.strategy, &report);
            let exit = verdict(&checks);
            let value = json!({
                "command": "sample",
                "seed": args.seed,
                "trials": args.trials,
                "red_count": args.red_count.to_string(),
                "report": to_value(&report),
                "bound": to_value(&guarantee_bound(args.n, None)?),
                "checks": to_value(&checks),
                "passed": exit == EXIT_OK,
            });
            Ok((Rendered { value, csv: Some(report_csv(&report)), exit }, args.format))
        }
        Command::Identity(args) => {
            let check = identity_check(args.n as u64)?;
            let exit = if check.equal { EXIT_OK } else { EXIT_VIOLATION };
            let mut value = to_value(&check);
            value["command"] = json!("identity");
            Ok((Rendered { value, csv: None, exit }, args.format))
        }
        Command::Bounds(args) => bounds_table(args).map(|r| (r, args.format)),
        Command::SearchOptimal(args) => {
            let report = search_optimal(args.n)?;
            let mut value = to_value(&report);
            value["command"] = json!("search-optimal");
            Ok((Rendered { value, csv: None, exit: EXIT_OK }, args.format))
        }
        Command::Plan(args) => {
            let plan = make_partition(args.n)?;
            Ok((Rendered { value: to_value(&plan), csv: None, exit: EXIT_OK }, args.format))
        }
    }
}

fn bounds_table(args: &BoundsArgs) -> Result<Rendered> {
    if args.n_min < 2 || args.n_min > args.n {
        return Err(usage(format!("need 2 <= --n-min <= --n, got {}..={}", args.n_min, args.n)));
    }
    let header = [
        "n",
        "k",
        "max_block",
        "composite_loss_bound",
        "theorem_loss_even",
        "theorem_loss_general",
        "lower_bound_loss",
        "within_theorem",
    ];
    let mut rows = Vec::new();
    let mut csv = csv::Writer::from_writer(Vec::new());
    csv.write_record(header).map_err(|e| usage(e.to_string()))?;
    let mut all_ok = true;
    for n in args.n_min..=args.n {
        let composite = CompositeStrategy::new(n)?;
        let bound = guarantee_bound(n, None)?;
        let loss = composite.loss_bound();
        let ok = loss as f64 <= bound.theorem_loss();
        all_ok &= ok;
        let row = json!({
            "n": n,
            "k": composite.plan().k(),
            "max_block": composite.plan().max_block_size(),
            "composite_loss_bound": loss,
            "theorem_loss_even": bound.theorem_loss_even,
            "theorem_loss_general": bound.theorem_loss_general,
            "lower_bound_loss": lower_bound_loss(n as u64),
            "within_theorem": ok,
        });
        csv.write_record(header.iter().map(|h| scalar_text(&row[*h])))
            .map_err(|e| usage(e.to_string()))?;
        rows.push(row);
    }
    let csv = csv.into_inner().map_err(|e| usage(e.to_string()))?;
    let exit = if all_ok { EXIT_OK } else { EXIT_VIOLATION };
    let value = json!({ "command": "bounds", "rows": rows, "passed": all_ok });
    Ok(Rendered { value, csv: Some(csv), exit })
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// `path = value` lines, one per JSON leaf, so text output carries exactly
/// the keys of the JSON output.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&join(k), child, out);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
            for (i, child) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), child, out);
            }
        }
        Value::Array(items) => {
            let joined: Vec<String> = items.iter().map(scalar_text).collect();
            out.push((prefix.to_string(), joined.join(",")));
        }
        scalar => out.push((prefix.to_string(), scalar_text(scalar))),
    }
}

fn render<W: Write>(rendered: &Rendered, format: Format, out: &mut W) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rendered.value)?;
            writeln!(out)
        }
        Format::Text => {
            let mut lines = Vec::new();
            flatten("", &rendered.value, &mut lines);
            for (k, v) in lines {
                writeln!(out, "{k} = {v}")?;
            }
            Ok(())
        }
        Format::Csv => match &rendered.csv {
            Some(bytes) => out.write_all(bytes),
            None => {
                let mut lines = Vec::new();
                flatten("", &rendered.value, &mut lines);
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(["key", "value"])?;
                for (k, v) in lines {
                    w.write_record([k, v])?;
                }
                w.flush()
            }
        },
    }
}

/// Run a parsed configuration, writing results to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn execute<W: Write, E: Write>(config: &RunConfig, out: &mut W, err: &mut E) -> i32 {
    match dispatch(&config.command) {
        Ok((rendered, format)) => match render(&rendered, format, out) {
            Ok(()) => rendered.exit,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Parse `args` (program name first) and run.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => execute(&config, out, err),
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                EXIT_OK
            } else {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            }
        }
    }
}
