use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use tbh_core::algebra::DEFAULT_TOLERANCE;
use tbh_core::bratteli::build_diagram;
use tbh_core::oracle::run_oracle;
use tbh_core::partitions::{enum_pk, in_pk, tableaux, HeckeParams, Partition};
use tbh_core::seminormal::{self, Backend};
use tbh_core::Error;

/// Exit codes.
const EXIT_INTERNAL: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_NOT_IN_PK: u8 = 3;
const EXIT_CAP: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "tbh", version, about = "Two-boundary Hecke algebra combinatorics, seminormal modules and a gl_n oracle")]
struct Cli {
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the Bratteli diagram up to rank k+1.
    Bratteli {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Json)]
        format: DiagramFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build seminormal modules and verify criteria, relations and simplicity.
    Seminormal {
        #[command(flatten)]
        params: ParamArgs,
        /// Target shape, e.g. "3,1".
        #[arg(long, conflicts_with = "all_lambda", required_unless_present = "all_lambda")]
        lambda: Option<String>,
        /// Iterate over every λ ∈ 𝒫_k.
        #[arg(long)]
        all_lambda: bool,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        #[arg(long, value_enum, default_value_t = BackendArg::ApproxSqrt)]
        backend: BackendArg,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Write the JSON report, including matrices, to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the gl_n tensor-space oracle.
    Oracle {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print |𝒯_λ| for each λ ∈ 𝒫_k, with Weyl dimensions when n is given.
    Dims {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Args, Debug, Clone)]
struct ParamArgs {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    #[arg(long, default_value_t = 1)]
    k: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DiagramFormat {
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BackendArg {
    #[value(name = "approx_sqrt")]
    ApproxSqrt,
}

/// A failed command: exit code plus message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvalidParams(_) | Error::Parse(_) => EXIT_VALIDATION,
            Error::NotInP(_) | Error::NotInP1(_) | Error::NotInPk { .. } => EXIT_NOT_IN_PK,
            Error::CapExceeded(_) | Error::HeightExceeded { .. } => EXIT_CAP,
            _ => EXIT_INTERNAL,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = Result<(), Failure>;

fn checks_failed(what: &str) -> Failure {
    Failure { code: EXIT_INTERNAL, message: format!("{what} failed") }
}

fn params(args: &ParamArgs) -> Result<HeckeParams, Failure> {
    let hp = HeckeParams::new(args.a, args.b, args.p, args.q, args.k)?;
    if hp.swapped {
        eprintln!(
            "note: parameters normalized to (a,b,p,q) = ({},{},{},{}) so that p ≥ q",
            hp.a, hp.b, hp.p, hp.q
        );
    }
    Ok(hp)
}

fn emit(text: &str, output: Option<&PathBuf>) -> CmdResult {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure { code: EXIT_INTERNAL, message: e.to_string() }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON value serializes") + "\n"
}

fn cmd_bratteli(args: &ParamArgs, format: DiagramFormat, output: Option<&PathBuf>) -> CmdResult {
    let hp = params(args)?;
    let d = build_diagram(&hp);
    let sizes: Vec<String> = d.level_sizes().iter().map(usize::to_string).collect();
    let top = d.num_ranks() - 1;
    let body = match format {
        DiagramFormat::Json => d.to_json()? + "\n",
        DiagramFormat::Dot => d.to_dot(),
    };
    let mut summary = format!("level sizes: {}\ndimension vector at rank {top}:\n", sizes.join(" "));
    for (lam, count) in d.dimension_vector(top)? {
        summary += &format!("  {lam}: {count}\n");
    }
    // Keep stdout machine-readable when the diagram itself goes there.
    emit(&body, output)?;
    if output.is_some() {
        print!("{summary}");
    } else {
        eprint!("{summary}");
    }
    Ok(())
}

fn seminormal_report(lambda: &Partition, hp: &HeckeParams, tol: f64, backend: Backend) -> Result<(Value, bool), Error> {
    let module = seminormal::build_module(lambda, hp, backend)?;
    let criteria = seminormal::check_criteria(&module)?;
    let relations = seminormal::check_full_relations(&module, tol)?;
    let spectra = seminormal::check_spectra(&module, tol)?;
    let simplicity = seminormal::check_simplicity(&module);
    let simple_ok = simplicity.is_ok();
    let ok = criteria.all_pass() && relations.all_pass() && spectra.all_pass() && simple_ok;
    let report = json!({
        "lambda": lambda,
        "dim": module.dim(),
        "pass": ok,
        "criteria": criteria,
        "relations": relations,
        "spectra": spectra,
        "simplicity": match simplicity {
            Ok(c) => serde_json::to_value(c)?,
            Err(e) => json!({"error": e.to_string()}),
        },
        "module": module.to_json(),
    });
    Ok((report, ok))
}

fn summarize_seminormal(r: &Value) -> String {
    let count = |key: &str, list: &str| {
        let items = r[key][list].as_array().cloned().unwrap_or_default();
        let pass = items.iter().filter(|c| c["pass"].as_bool() == Some(true)).count();
        (pass, items.len())
    };
    let max_dev = |key: &str| {
        r[key]["results"]
            .as_array()
            .map(|v| v.iter().filter_map(|x| x["max_deviation"].as_f64()).fold(0.0, f64::max))
            .unwrap_or(0.0)
    };
    let (cp, cn) = count("criteria", "criteria");
    let (rp, rn) = count("relations", "results");
    let (sp, sn) = count("spectra", "results");
    let simplicity = match r["simplicity"]["error"].as_str() {
        Some(e) => format!("FAIL ({e})"),
        None => format!("pass ({} witnesses)", r["simplicity"]["witnesses"].as_array().map_or(0, Vec::len)),
    };
    format!(
        "λ={} dim={} {}\n  criteria:   {cp}/{cn} pass\n  relations:  {rp}/{rn} pass (max deviation {})\n  spectra:    {sp}/{sn} pass\n  simplicity: {simplicity}\n",
        r["lambda"].as_array().map(|a| a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).unwrap_or_default(),
        r["dim"],
        if r["pass"].as_bool() == Some(true) { "PASS" } else { "FAIL" },
        format!("{:.11e}", max_dev("relations")),
    )
}

#[allow(clippy::too_many_arguments)]
fn cmd_seminormal(
    args: &ParamArgs,
    lambda: Option<&str>,
    all: bool,
    tol: f64,
    _backend: BackendArg,
    format: ReportFormat,
    output: Option<&PathBuf>,
) -> CmdResult {
    let hp = params(args)?;
    if !(tol > 0.0) {
        return Err(Failure { code: EXIT_VALIDATION, message: "tolerance must be positive".into() });
    }
    let shapes = if all {
        enum_pk(&hp, hp.k)
    } else {
        let lam: Partition = lambda.expect("clap enforces --lambda").parse()?;
        if !in_pk(&lam, &hp, hp.k) {
            return Err(Error::NotInPk { partition: lam, level: hp.k }.into());
        }
        vec![lam]
    };
    let results = shapes
        .par_iter()
        .map(|lam| seminormal_report(lam, &hp, tol, Backend::ApproxSqrt))
        .collect::<Result<Vec<_>, Error>>()?;
    let ok = results.iter().all(|(_, ok)| *ok);
    let reports: Vec<Value> = results.into_iter().map(|(r, _)| r).collect();
    let doc = json!({
        "params": {"a": hp.a, "b": hp.b, "p": hp.p, "q": hp.q, "k": hp.k},
        "modules": reports,
    });
    if let Some(path) = output {
        emit(&pretty(&doc), Some(path))?;
    }
    match format {
        ReportFormat::Json if output.is_none() => emit(&pretty(&doc), None)?,
        ReportFormat::Json => {}
        ReportFormat::Text => {
            for r in doc["modules"].as_array().expect("array") {
                print!("{}", summarize_seminormal(r));
            }
        }
    }
    if ok { Ok(()) } else { Err(checks_failed("seminormal checks")) }
}

fn cmd_oracle(args: &ParamArgs, n: usize, format: ReportFormat, output: Option<&PathBuf>) -> CmdResult {
    let hp = params(args)?;
    let report = run_oracle(&hp, n)?;
    let value = serde_json::to_value(&report).map_err(Error::from)?;
    if let Some(path) = output {
        emit(&pretty(&value), Some(path))?;
    }
    match format {
        ReportFormat::Json if output.is_none() => emit(&pretty(&value), None)?,
        ReportFormat::Json => {}
        ReportFormat::Text => {
            println!("oracle {hp}, n={n}, carrier dimension {}", report.carrier_dim);
            for c in &report.checks {
                let status = if c.pass { "PASS" } else { "FAIL" };
                match &c.detail {
                    Some(d) => println!("  {:<24} {status}  {d}", c.name),
                    None => println!("  {:<24} {status}", c.name),
                }
            }
            for e in &report.spectra.entries {
                let eig: Vec<String> =
                    e.eigenvalues.iter().map(|(v, m, _)| format!("{}:{m}", v)).collect();
                println!("  spectrum {:<15} {} (value:multiplicity)", e.generator, eig.join(" "));
            }
        }
    }
    if report.all_pass() { Ok(()) } else { Err(checks_failed("oracle checks")) }
}

fn cmd_dims(args: &ParamArgs, n: Option<usize>, format: ReportFormat) -> CmdResult {
    let hp = params(args)?;
    let mut rows = Vec::new();
    let mut square_sum: u128 = 0;
    let mut weighted: u128 = 0;
    for lam in enum_pk(&hp, hp.k) {
        let count = tableaux(&lam, &hp)?.len() as u128;
        square_sum += count * count;
        let weyl = n.map(|n| lam.weyl_dim(n));
        weighted += count * weyl.unwrap_or(0);
        rows.push((lam, count, weyl));
    }
    match format {
        ReportFormat::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(lam, c, w)| json!({"lambda": lam, "tableaux": *c as u64, "weyl_dim": w.map(|w| w as u64)}))
                .collect();
            let mut doc = json!({"k": hp.k, "shapes": items, "sum_of_squares": square_sum as u64});
            if let Some(n) = n {
                doc["n"] = json!(n);
                doc["weighted_sum"] = json!(weighted as u64);
            }
            emit(&pretty(&doc), None)?;
        }
        ReportFormat::Text => {
            for (lam, c, w) in &rows {
                match w {
                    Some(w) => println!("{lam}\t{c}\t{w}"),
                    None => println!("{lam}\t{c}"),
                }
            }
            println!("sum of |T_λ|^2: {square_sum}");
            if let Some(n) = n {
                println!("sum of |T_λ|·dim L(λ) for n={n}: {weighted}");
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(Failure { code: EXIT_VALIDATION, message: "--jobs must be positive".into() });
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| Failure { code: EXIT_INTERNAL, message: e.to_string() })?;
    }
    match &cli.command {
        Command::Bratteli { params, format, output } => cmd_bratteli(params, *format, output.as_ref()),
        Command::Seminormal { params, lambda, all_lambda, tolerance, backend, format, output } => {
            cmd_seminormal(params, lambda.as_deref(), *all_lambda, *tolerance, *backend, *format, output.as_ref())
        }
        Command::Oracle { params, n, format, output } => cmd_oracle(params, *n, *format, output.as_ref()),
        Command::Dims { params, n, format } => cmd_dims(params, *n, *format),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("TBH_LOG")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
