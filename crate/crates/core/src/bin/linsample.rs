use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use linsample::algorithms::{Problem, SolveConfig};
use linsample::decompose::DecompositionConstants;
use linsample::experiments::{
    cmd_appendix_demo, cmd_bench_queries, cmd_hardness_demo, cmd_sample, cmd_solve, AppendixRequest, Assertion,
    BenchRequest, BetaRule, ExperimentReport, Family, HardnessRequest, SampleRequest, Scale, SolveRequest,
};
use linsample::oracle::{validate_lambda_metric, InstanceSpec, MetricCheck};
use linsample::{Error, Result};

#[derive(Parser)]
#[command(name = "linsample", version, about = "Linear sampling of lambda-metric graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw one linear sample and write it as CSV with a JSON sidecar.
    Sample {
        #[arg(long)]
        instance: InstanceSpec,
        #[arg(long, conflicts_with = "alpha", required_unless_present = "alpha")]
        beta: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value_t = 2.0)]
        gamma: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        constants: ConstantsArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a sparsify-and-solve pipeline over seeded trials.
    Solve {
        #[arg(long)]
        instance: InstanceSpec,
        /// avg, densest, maxcut or hypermatching:<k>
        #[arg(long)]
        problem: Problem,
        #[arg(long)]
        epsilon: f64,
        #[arg(long, default_value_t = 2.0)]
        gamma: f64,
        /// Replace the tabulated sample size.
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long, default_value_t = 4)]
        restarts: usize,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        constants: ConstantsArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Measure sample-construction queries across instance sizes.
    BenchQueries {
        /// uniform:<dim>, line, g1 or star
        #[arg(long, default_value = "uniform:2")]
        family: Family,
        #[arg(long, value_delimiter = ',', default_value = "512,1024,2048")]
        sizes: Vec<usize>,
        /// nlogn or a fixed number
        #[arg(long, default_value = "nlogn")]
        beta_rule: BetaRule,
        #[arg(long, default_value_t = 5)]
        seeds: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2.0)]
        gamma: f64,
        #[command(flatten)]
        constants: ConstantsArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Uniform against linear sampling for densest subgraph on the heavy star.
    AppendixDemo {
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 0.05)]
        p: f64,
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        constants: ConstantsArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Distinguish the all-zero instance from a hidden star on a query budget.
    HardnessDemo {
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the relaxed triangle inequality over every triple.
    Validate {
        #[arg(long)]
        instance: InstanceSpec,
    },
}

#[derive(Args)]
struct ConstantsArg {
    /// Decomposition constant overrides, e.g. `c_sample=8`.
    #[arg(long, value_delimiter = ',')]
    constants: Vec<String>,
}

impl ConstantsArg {
    fn parse(&self) -> Result<DecompositionConstants> {
        let mut constants = DecompositionConstants::GUARANTEED;
        for item in &self.constants {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("constant `{item}` is not key=value")))?;
            let value: f64 = value
                .parse()
                .map_err(|_| Error::Parse(format!("constant `{item}` has a non-numeric value")))?;
            match key {
                "c_sample" => constants.c_sample = value,
                "threshold_frac" => constants.threshold_frac = value,
                _ => return Err(Error::Parse(format!("unknown constant `{key}`"))),
            }
        }
        Ok(constants)
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
}

impl OutputArgs {
    fn sink(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(path) => Box::new(std::fs::File::create(path)?),
            None => Box::new(std::io::stdout().lock()),
        })
    }

    fn emit(&self, report: &ExperimentReport) -> Result<()> {
        let mut sink = self.sink()?;
        if self.csv {
            report.write_csv(sink)
        } else {
            sink.write_all(report.to_json()?.as_bytes())?;
            Ok(())
        }
    }
}

/// Exit 0 when every assertion held, 2 otherwise.
fn outcome(assertions: &[Assertion]) -> ExitCode {
    let failed: Vec<&Assertion> = assertions.iter().filter(|a| !a.passed).collect();
    for a in &failed {
        eprintln!("assertion failed: {}", a.description);
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Sample {
            instance,
            beta,
            alpha,
            gamma,
            seed,
            constants,
            out,
        } => {
            let scale = match (beta, alpha) {
                (Some(b), _) => Scale::Beta(b),
                (None, Some(a)) => Scale::Alpha(a),
                (None, None) => unreachable!("clap requires one of --beta/--alpha"),
            };
            let req = SampleRequest {
                instance,
                scale,
                gamma,
                constants: constants.parse()?,
                seed,
            };
            let h = cmd_sample(&req, Some(&out))?;
            eprintln!(
                "{} edges, total weight {}, {} queries -> {}",
                h.edges.len(),
                h.total_weight(),
                h.queries_used,
                out.display()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve {
            instance,
            problem,
            epsilon,
            gamma,
            beta,
            restarts,
            trials,
            seed,
            constants,
            output,
        } => {
            let config = SolveConfig {
                epsilon,
                gamma,
                constants: constants.parse()?,
                beta_override: beta,
                restarts,
            };
            let report = cmd_solve(&SolveRequest {
                instance,
                problem,
                config,
                trials,
                seed,
            })?;
            output.emit(&report)?;
            Ok(outcome(&report.assertions))
        }
        Command::BenchQueries {
            family,
            sizes,
            beta_rule,
            seeds,
            seed,
            gamma,
            constants,
            output,
        } => {
            let report = cmd_bench_queries(&BenchRequest {
                family,
                sizes,
                beta_rule,
                seeds,
                seed,
                gamma,
                constants: constants.parse()?,
            })?;
            let mut sink = output.sink()?;
            if output.csv {
                report.write_csv(sink)?;
            } else {
                sink.write_all(report.to_json()?.as_bytes())?;
            }
            Ok(outcome(&report.assertions))
        }
        Command::AppendixDemo {
            n,
            p,
            epsilon,
            trials,
            seed,
            constants,
            output,
        } => {
            let report = cmd_appendix_demo(&AppendixRequest {
                n,
                p,
                epsilon,
                trials,
                seed,
                constants: constants.parse()?,
            })?;
            output.emit(&report)?;
            Ok(outcome(&report.assertions))
        }
        Command::HardnessDemo {
            n,
            delta,
            trials,
            seed,
            epsilon,
            output,
        } => {
            let report = cmd_hardness_demo(&HardnessRequest {
                n,
                delta,
                trials,
                seed,
                epsilon,
            })?;
            output.emit(&report)?;
            Ok(outcome(&report.assertions))
        }
        Command::Validate { instance } => match validate_lambda_metric(&instance.load()?)? {
            MetricCheck::Ok => {
                println!("ok");
                Ok(ExitCode::SUCCESS)
            }
            MetricCheck::Violation { a, b, via } => {
                println!("violation: w({a},{via}) + w({via},{b}) < lambda * w({a},{b})");
                Ok(ExitCode::from(2))
            }
        },
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
