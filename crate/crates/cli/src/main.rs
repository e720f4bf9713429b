//! `gtfs`: batch computations on group-theoretical data described by a
//! JSON problem document.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use gtfs::adaptation::adapt;
use gtfs::cohomology::CochainLiteral;
use gtfs::indicators::{
    cyclic_twist_check, double_indicator_table, full_indicator_table, index_two_twist_check, simple_objects,
    IndicatorTable, TableOptions,
};
use gtfs::problem::{Pipeline, ProblemSpec};
use gtfs::Error;

#[derive(Parser, Debug)]
#[command(name = "gtfs", version, about = "Frobenius-Schur indicators of group-theoretical fusion categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Problem document (JSON).
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    #[arg(long, global = true)]
    m_max: Option<usize>,
    /// auto, adapted, general, trivialRestriction or double.
    #[arg(long, global = true)]
    pipeline: Option<String>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write `<command>.<format>` into this directory instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Character table cache directory.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Check dω = 1, dψ = ω on H³, normalization and adaptedness.
    Validate,
    /// List the simple objects with their projective characters.
    Simples,
    /// Indicator table of C(G, H, ω, ψ).
    Indicators,
    /// Indicator table of the twisted double D^ω(G), from `group` and `omega`.
    Double,
    /// Replace ω by a cohomologous cocycle adapted to H.
    Adapt,
    /// Compare indicators before and after multiplying ω by the cyclic cocycle in `twist`.
    PredictTwist,
    /// Sign behaviour of double indicators under the class of G/N, N = `normal_subgroup`.
    IndexTwo,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Simples => "simples",
            Command::Indicators => "indicators",
            Command::Double => "double",
            Command::Adapt => "adapt",
            Command::PredictTwist => "predict-twist",
            Command::IndexTwo => "index-two",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

enum Failure {
    Validation(String),
    Degenerate(String),
    Parse(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 1,
            Failure::Degenerate(_) => 2,
            Failure::Parse(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Validation(m) | Failure::Degenerate(m) | Failure::Parse(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Parse(e.to_string()),
            Error::NumericalDegeneracy(_) => Failure::Degenerate(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("gtfs {}: {}", cli.command.name(), f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let spec = load_spec(cli)?;
    if cli.format == Format::Csv && !matches!(cli.command, Command::Indicators | Command::Double) {
        return Err(Failure::Parse("csv output is only available for indicator tables".into()));
    }
    let (body, ok) = match cli.command {
        Command::Validate => validate(&spec),
        Command::Simples => simples(cli, &spec),
        Command::Indicators => indicators(cli, &spec),
        Command::Double => double(cli, &spec),
        Command::Adapt => adapt_cmd(&spec),
        Command::PredictTwist => predict_twist(cli, &spec),
        Command::IndexTwo => index_two(cli, &spec),
    }?;
    emit(cli, &body)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Validation("some checks failed, see the report".into()))
    }
}

fn load_spec(cli: &Cli) -> Result<ProblemSpec, Failure> {
    let path = cli.spec.as_ref().ok_or_else(|| Failure::Parse("--spec <file> is required".into()))?;
    let text = fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    let mut spec: ProblemSpec = text.parse()?;
    if let Some(m) = cli.m_max {
        spec.options.m_max = m;
    }
    if let Some(p) = &cli.pipeline {
        spec.options.pipeline = p.parse::<Pipeline>()?;
    }
    if cli.seed.is_some() {
        spec.options.seed = cli.seed;
    }
    Ok(spec)
}

fn table_options(cli: &Cli, spec: &ProblemSpec) -> TableOptions {
    TableOptions {
        seed: spec.options.seed,
        eigen_gap: Some(spec.options.eigen_gap),
        cache_dir: cli.cache.clone(),
        ..TableOptions::default()
    }
}

fn emit(cli: &Cli, body: &str) -> Result<(), Failure> {
    match &cli.out {
        None => {
            print!("{body}");
            Ok(())
        }
        Some(dir) => {
            let ext = match cli.format {
                Format::Json => "json",
                Format::Csv => "csv",
            };
            write_file(dir, &format!("{}.{ext}", cli.command.name()), body)
        }
    }
}

fn write_file(dir: &Path, name: &str, body: &str) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Validation(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    fs::write(dir.join(name), body).map_err(io)
}

fn to_json<S: Serialize>(v: &S) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn render(cli: &Cli, table: &IndicatorTable<f64>) -> Result<String, Failure> {
    Ok(match cli.format {
        Format::Json => {
            let mut s = table.to_json();
            s.push('\n');
            s
        }
        Format::Csv => table.to_csv()?,
    })
}

fn validate(spec: &ProblemSpec) -> Outcome {
    let problem = spec.bind()?;
    let report = problem.data.check();
    let ok = report.passed();
    if let Err(e) = report.clone().into_result() {
        eprintln!("{e}");
    }
    Ok((to_json(&json!({ "passed": ok, "report": report })), ok))
}

fn simples(cli: &Cli, spec: &ProblemSpec) -> Outcome {
    let problem = spec.bind()?;
    let families = simple_objects::<f64>(&problem.data, &table_options(cli, spec))?;
    let count: usize = families.iter().map(|f| f.characters.len()).sum();
    Ok((to_json(&json!({ "count": count, "families": families })), true))
}

fn indicators(cli: &Cli, spec: &ProblemSpec) -> Outcome {
    let problem = spec.bind()?;
    let table = full_indicator_table::<f64>(
        &problem.data,
        spec.options.m_max,
        spec.options.pipeline,
        &table_options(cli, spec),
    )?;
    Ok((render(cli, &table)?, true))
}

fn double(cli: &Cli, spec: &ProblemSpec) -> Outcome {
    let omega = spec.omega()?;
    let table = double_indicator_table::<f64>(&omega, spec.options.m_max, &table_options(cli, spec))?;
    Ok((render(cli, &table)?, true))
}

fn adapt_cmd(spec: &ProblemSpec) -> Outcome {
    let problem = spec.bind()?;
    let result = adapt(&problem.data)?;
    let mut adapted = spec.clone();
    adapted.omega = CochainLiteral::from_cochain(result.omega_adapted());
    adapted.psi = CochainLiteral::Trivial;
    Ok((to_json(&json!({ "adaptation": result.to_json(), "problem": adapted })), true))
}

fn predict_twist(cli: &Cli, spec: &ProblemSpec) -> Outcome {
    let twist = spec.twist.as_ref().ok_or_else(|| Failure::Parse("the document has no `twist` section".into()))?;
    let problem = spec.bind()?;
    let p = twist.hom(problem.data.group())?;
    let rows = cyclic_twist_check::<f64>(
        &problem.data,
        &p,
        twist.t,
        spec.options.m_max,
        spec.options.pipeline,
        &table_options(cli, spec),
    )?;
    let ok = rows.iter().all(|r| r.holds);
    Ok((to_json(&json!({ "holds": ok, "rows": rows })), ok))
}

fn index_two(cli: &Cli, spec: &ProblemSpec) -> Outcome {
    let n = spec
        .normal_subgroup
        .as_ref()
        .ok_or_else(|| Failure::Parse("the document has no `normal_subgroup` section".into()))?;
    let group = spec.group()?;
    let n = n.build(&group)?;
    let omega = spec.omega()?;
    let rows = index_two_twist_check::<f64>(&omega, &n, spec.options.m_max, &table_options(cli, spec))?;
    let ok = rows.iter().all(|r| r.holds);
    let affected: Vec<_> = rows.iter().filter(|r| !r.flipped().is_empty()).map(|r| (r.g, r.character.clone())).collect();
    Ok((to_json(&json!({ "holds": ok, "affected": affected, "rows": rows })), ok))
}
