use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use toric_nash::algebra::OrderKind;
use toric_nash::fixtures::{bundled, check_all, load_dir};
use toric_nash::input::InputSpec;
use toric_nash::report::{run, PipelineError};
use toric_nash::semigroup::validate;
use toric_nash::toric::Family;

const PARSE_ERROR: u8 = 1;
const VALIDATION_FAILURE: u8 = 2;
const VIOLATION: u8 = 3;

/// Toric surface singularities: toric ideals, Jacobian minors and singular loci.
#[derive(Parser, Debug)]
#[command(name = "toric-nash", version)]
struct Cli {
    /// Worker threads for the subset search (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the generators and print the block structure.
    Validate(InputArgs),
    /// Run the whole pipeline and print the report.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Also write the report as JSON to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        order: Option<OrderKind>,
        #[arg(long)]
        family: Option<Family>,
    },
    /// Check the bundled worked examples.
    Examples {
        /// Read fixtures from this directory instead of the bundled ones.
        #[arg(long, value_name = "DIR")]
        examples: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input JSON document, or `-` for standard input.
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
}

enum Failure {
    Parse(String),
    Validation(String),
    Violation(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => PARSE_ERROR,
            Failure::Validation(_) => VALIDATION_FAILURE,
            Failure::Violation(_) => VIOLATION,
        }
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Validation(_) => Failure::Validation(e.to_string()),
            other => Failure::Violation(other.to_string()),
        }
    }
}

fn read_input(path: &Path) -> Result<InputSpec, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Parse(format!("standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?
    };
    InputSpec::from_json(&text).map_err(|e| Failure::Parse(e.to_string()))
}

fn cmd_validate(args: &InputArgs) -> Result<(), Failure> {
    let spec = read_input(&args.input)?;
    let gens = spec.generator_set().map_err(PipelineError::from)?;
    let vs = validate(&gens).map_err(PipelineError::from)?;
    let names = spec.variable_names(&vs);
    println!(
        "l={} m={} n={} N={} r={}",
        vs.l(),
        vs.m(),
        vs.n(),
        vs.nvars(),
        vs.codim()
    );
    let order: Vec<String> = vs
        .generators()
        .iter()
        .zip(vs.permutation())
        .zip(names.as_slice())
        .map(|((g, i), name)| format!("{name}=({},{})#{}", g.u, g.v, i + 1))
        .collect();
    println!("canonical order: {}", order.join(" "));
    Ok(())
}

fn cmd_analyze(
    input: &InputArgs,
    out: Option<&Path>,
    order: Option<OrderKind>,
    family: Option<Family>,
) -> Result<(), Failure> {
    let spec = read_input(&input.input)?;
    let report = run(&spec, order, family)?;
    print!("{report}");
    if let Some(path) = out {
        std::fs::write(path, report.to_json())
            .map_err(|e| Failure::Parse(format!("cannot write {}: {e}", path.display())))?;
    }
    if !report.verdict.consistent {
        return Err(Failure::Violation(format!(
            "prediction {} does not match observation {}",
            report.verdict.predicted, report.verdict.observed
        )));
    }
    Ok(())
}

fn cmd_examples(dir: Option<&Path>) -> Result<(), Failure> {
    let fixtures = match dir {
        Some(d) => load_dir(d).map_err(|e| Failure::Parse(e.to_string()))?,
        None => bundled(),
    };
    let outcomes = check_all(&fixtures);
    for o in &outcomes {
        println!("{o}");
    }
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    println!("{passed}/{} fixtures pass", outcomes.len());
    if passed != outcomes.len() {
        return Err(Failure::Violation("fixture mismatch".into()));
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(PARSE_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.jobs {
        pool = pool.num_threads(jobs.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker threads: {e}");
            return ExitCode::from(PARSE_ERROR);
        }
    };
    let result = pool.install(|| match &cli.command {
        Command::Validate(input) => cmd_validate(input),
        Command::Analyze {
            input,
            out,
            order,
            family,
        } => cmd_analyze(input, out.as_deref(), *order, *family),
        Command::Examples { examples } => cmd_examples(examples.as_deref()),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Parse(msg) | Failure::Validation(msg) | Failure::Violation(msg)) = &f;
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
