//! `reduct-forge <significance|reduct|partition|base> [--builtin NAME | INPUT.csv] ...`
//!
//! Exit codes: 0 success, 2 input or usage error, 3 enumeration cap exceeded.

use std::fs::File;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use reduct_core::partition::ind_partition;
use reduct_core::reduct::{
    core_attributes, eliminate_ranked, exhaustive_reducts, DEFAULT_MAX_ATTRS,
};
use reduct_core::significance::{rank_attributes, split_groups};
use reduct_core::topology::{base_alg1_traced, minimal_neighborhoods, subbase_of};
use reduct_core::{
    builtin_seven_segment, Decision, Error, GroupPolicy, InformationSystem, Rational,
};

use crate::load::{load_csv, LoadError, LoadOptions};
use crate::report::{
    decision_label, ArgsEcho, BasePayload, DatasetSummary, PartitionPayload, Payload,
    ReductPayload, Report, SignificancePayload,
};

/// Overrides the attribute cap of `reduct --exhaustive`.
pub const MAX_ATTRS_ENV: &str = "REDUCT_FORGE_MAX_ATTRS";

pub const BUILTIN_SEVEN_SEGMENT: &str = "seven-segment";

#[derive(Debug, Parser)]
#[command(
    name = "reduct-forge",
    version,
    about = "Attribute reducts of categorical decision tables"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank conditional attributes by positive-region significance.
    Significance(CommonArgs),
    /// Compute a reduct by significance-ordered elimination.
    Reduct(CommonArgs),
    /// Print indiscernibility partitions.
    Partition(CommonArgs),
    /// Print the sub-base and the base of the generated topology.
    Base(CommonArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// CSV file to load.
    #[arg(required_unless_present = "builtin")]
    pub input: Option<PathBuf>,
    /// Use a bundled table instead of a file (`seven-segment`).
    #[arg(long, conflicts_with = "input")]
    pub builtin: Option<String>,
    /// Decision column name, or `identity`.
    #[arg(long, default_value = "identity")]
    pub decision: String,
    /// Low/high grouping: `threshold`, `threshold:P/Q`, or `count:N`.
    #[arg(long, default_value = "threshold", value_parser = parse_group)]
    pub group: GroupArg,
    /// Also enumerate every reduct (reduct command).
    #[arg(long)]
    pub exhaustive: bool,
    /// Include the per-attribute elimination log (reduct command).
    #[arg(long)]
    pub trace: bool,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// The first CSV row is data, not attribute names.
    #[arg(long)]
    pub no_header: bool,
    /// Comma-separated attribute subset (partition and base commands).
    #[arg(long, value_delimiter = ',')]
    pub attrs: Option<Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct GroupArg {
    pub policy: GroupPolicy,
    pub text: String,
}

fn parse_rational(s: &str) -> Option<Rational> {
    if let Some((n, d)) = s.split_once('/') {
        let d: u64 = d.trim().parse().ok()?;
        let n: u64 = n.trim().parse().ok()?;
        return (d > 0).then(|| Rational::new(n, d));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let den = 10u64.pow(frac.len() as u32);
    let int: u64 = if int.is_empty() { 0 } else { int.parse().ok()? };
    let frac: u64 = if frac.is_empty() {
        0
    } else {
        frac.parse().ok()?
    };
    Some(Rational::new(int.checked_mul(den)?.checked_add(frac)?, den))
}

fn parse_group(s: &str) -> Result<GroupArg, String> {
    let policy = match s.split_once(':') {
        None if s == "threshold" => GroupPolicy::BelowMax,
        Some(("threshold", t)) => GroupPolicy::Threshold(
            parse_rational(t).ok_or_else(|| format!("invalid threshold `{t}`"))?,
        ),
        Some(("count", n)) => {
            GroupPolicy::Count(n.parse().map_err(|_| format!("invalid count `{n}`"))?)
        }
        _ => {
            return Err(format!(
                "expected threshold, threshold:P/Q or count:N, got `{s}`"
            ))
        }
    };
    Ok(GroupArg {
        policy,
        text: s.to_owned(),
    })
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::TooManyAttributes { .. } => CliError::Cap(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

/// Result of one invocation, ready to print.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I, max_attrs_env: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    match execute(&cli.command, max_attrs_env) {
        Ok((report, json)) => Outcome {
            code: 0,
            stdout: if json {
                let mut s = report.to_json();
                s.push('\n');
                s
            } else {
                report.to_text()
            },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("reduct-forge: {e}\n"),
        },
    }
}

fn load_input(args: &CommonArgs) -> Result<(String, InformationSystem), CliError> {
    let decision = Decision::parse(&args.decision);
    match (&args.builtin, &args.input) {
        (Some(name), _) if name == BUILTIN_SEVEN_SEGMENT => {
            let is = builtin_seven_segment().with_decision(decision)?;
            Ok((format!("builtin:{name}"), is))
        }
        (Some(name), _) => Err(CliError::Input(format!(
            "unknown builtin `{name}` (available: {BUILTIN_SEVEN_SEGMENT})"
        ))),
        (None, Some(path)) => {
            let shown = path.display().to_string();
            let file = File::open(path)
                .map_err(|e| CliError::Input(format!("cannot open {shown}: {e}")))?;
            let options = LoadOptions {
                has_header: !args.no_header,
                decision,
            };
            let is = load_csv(file, &options).map_err(|e| match e {
                LoadError::Table(t) => CliError::Input(format!("{shown}: {t}")),
                other => CliError::Input(format!("{shown}: {other}")),
            })?;
            Ok((shown, is))
        }
        (None, None) => Err(CliError::Input("no input given".into())),
    }
}

fn max_attrs(env: Option<&str>) -> Result<usize, CliError> {
    match env {
        None => Ok(DEFAULT_MAX_ATTRS),
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{MAX_ATTRS_ENV}: not a count: `{v}`"))),
    }
}

fn selected_attrs(args: &CommonArgs, is: &InformationSystem) -> Vec<String> {
    match &args.attrs {
        Some(a) => a.clone(),
        None => is
            .conditional_attributes()
            .iter()
            .map(|s| s.to_string())
            .collect(),
    }
}

fn execute(command: &Command, env_cap: Option<&str>) -> Result<(Report, bool), CliError> {
    let start = Instant::now();
    let (name, args) = match command {
        Command::Significance(a) => ("significance", a),
        Command::Reduct(a) => ("reduct", a),
        Command::Partition(a) => ("partition", a),
        Command::Base(a) => ("base", a),
    };
    let (source, is) = load_input(args)?;

    let payload = match command {
        Command::Significance(_) => {
            let table = split_groups(rank_attributes(&is), args.group.policy);
            Payload::Significance(SignificancePayload::from(&table))
        }
        Command::Reduct(_) => {
            let table = split_groups(rank_attributes(&is), args.group.policy);
            let result = eliminate_ranked(&is, &table);
            let mut payload = ReductPayload::new(&result, args.trace);
            if args.exhaustive {
                let all = exhaustive_reducts(&is, max_attrs(env_cap)?)?;
                payload.heuristic_is_minimal = Some(all.contains(&result.reduct));
                payload.core = Some(core_attributes(&is));
                payload.all_reducts = Some(all);
            }
            Payload::Reduct(payload)
        }
        Command::Partition(_) => {
            let attrs = selected_attrs(args, &is);
            let joint = ind_partition(&is, &attrs)?;
            let singles = attrs
                .iter()
                .map(|a| Ok((a.clone(), ind_partition(&is, &[a])?)))
                .collect::<Result<Vec<_>, Error>>()?;
            Payload::Partition(PartitionPayload::new(&attrs, &joint, &singles))
        }
        Command::Base(_) => {
            let attrs = selected_attrs(args, &is);
            let subbase = subbase_of(&is, &attrs)?;
            let direct = minimal_neighborhoods(&subbase)?;
            let run = base_alg1_traced(&subbase)?;
            Payload::Base(BasePayload::new(&attrs, &subbase, &direct, &run))
        }
    };

    let report = Report {
        command: name.to_owned(),
        args: ArgsEcho {
            input: source.clone(),
            decision: decision_label(is.decision()),
            group: args.group.text.clone(),
            attrs: args.attrs.clone(),
            header: !args.no_header,
            exhaustive: args.exhaustive,
            trace: args.trace,
        },
        dataset: DatasetSummary::new(&source, &is),
        payload,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    Ok((report, args.json))
}
