//! Seeded experiments with machine-readable reports.
//!
//! Every command derives one seed per trial from a master seed, so the same
//! inputs always produce the same report, byte for byte. Reports carry no
//! timestamps.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algorithms::pipeline::density_in;
use crate::algorithms::{greedy_densest, sparsify_and_solve, Problem, SolveConfig};
use crate::decompose::DecompositionConstants;
use crate::error::{invalid, Error, Result};
use crate::exact::{
    exact_average, exact_densest, exact_hypermatching, exact_maxcut, DENSEST_CAP, HYPERMATCHING_CAP, MAXCUT_CAP,
};
use crate::graph::DenseWeights;
use crate::oracle::{InstanceSpec, MetricInstance, QueryLedger};
use crate::rng::{derive_seed, stream_rng};
use crate::sampler::{build_h_alpha, build_h_beta, uniform_sample, SampledGraph, SamplerConfig};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub seed: u64,
    pub queries_algorithm: u64,
    pub queries_evaluation: u64,
    pub value_in_g: f64,
    pub value_in_h: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact_value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub success: Option<bool>,
    /// Further per-trial measurements specific to the experiment.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub extra: BTreeMap<String, f64>,
    /// Set when the trial aborted; values are then zero.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

impl TrialRecord {
    fn new(seed: u64) -> Self {
        Self {
            seed,
            queries_algorithm: 0,
            queries_evaluation: 0,
            value_in_g: 0.0,
            value_in_h: 0.0,
            exact_value: None,
            success: None,
            extra: BTreeMap::new(),
            error: None,
        }
    }

    fn failed(seed: u64, err: &Error) -> Self {
        Self {
            success: Some(false),
            error: Some(err.to_string()),
            ..Self::new(seed)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    /// Mean and sample standard deviation of `value_in_g` over trials that
    /// completed.
    pub mean: f64,
    pub stddev: f64,
    /// Fraction of all trials marked successful.
    pub success_rate: f64,
}

impl Aggregate {
    pub fn from_trials(trials: &[TrialRecord]) -> Self {
        let values: Vec<f64> = trials
            .iter()
            .filter(|t| t.error.is_none())
            .map(|t| t.value_in_g)
            .collect();
        let (mean, stddev) = mean_stddev(&values);
        let successes = trials.iter().filter(|t| t.success == Some(true)).count();
        let success_rate = if trials.is_empty() {
            0.0
        } else {
            successes as f64 / trials.len() as f64
        };
        Self {
            mean,
            stddev,
            success_rate,
        }
    }
}

pub fn mean_stddev(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (0.0, 0.0);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Assertion {
    pub description: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub instance: String,
    pub parameters: BTreeMap<String, Value>,
    pub trials: Vec<TrialRecord>,
    pub aggregate: Aggregate,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub assertions: Vec<Assertion>,
    /// Set when constants or sample sizes deviate from the proved ones.
    pub guarantee_void: bool,
}

impl ExperimentReport {
    fn new(experiment: &str, instance: String, parameters: BTreeMap<String, Value>, trials: Vec<TrialRecord>) -> Self {
        let aggregate = Aggregate::from_trials(&trials);
        Self {
            experiment: experiment.into(),
            instance,
            parameters,
            trials,
            aggregate,
            assertions: Vec::new(),
            guarantee_void: false,
        }
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    /// Recomputes the aggregate from the trials and checks it matches.
    pub fn validate(&self) -> Result<()> {
        if Aggregate::from_trials(&self.trials) != self.aggregate {
            return Err(Error::Consistency("report aggregate does not match its trials".into()));
        }
        if !(0.0..=1.0).contains(&self.aggregate.success_rate) {
            return Err(Error::Consistency("success rate outside [0, 1]".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// One row per trial; `extra` columns are appended in key order.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let extra_keys: Vec<&String> = {
            let mut keys: Vec<&String> = self.trials.iter().flat_map(|t| t.extra.keys()).collect();
            keys.sort();
            keys.dedup();
            keys
        };
        let mut wtr = csv::Writer::from_writer(writer);
        let mut header: Vec<String> = [
            "seed",
            "queries_algorithm",
            "queries_evaluation",
            "value_in_g",
            "value_in_h",
            "exact_value",
            "success",
            "error",
        ]
        .map(String::from)
        .to_vec();
        header.extend(extra_keys.iter().map(|k| k.to_string()));
        wtr.write_record(&header)?;
        for t in &self.trials {
            let mut row = vec![
                t.seed.to_string(),
                t.queries_algorithm.to_string(),
                t.queries_evaluation.to_string(),
                t.value_in_g.to_string(),
                t.value_in_h.to_string(),
                t.exact_value.map_or(String::new(), |v| v.to_string()),
                t.success.map_or(String::new(), |v| v.to_string()),
                t.error.clone().unwrap_or_default(),
            ];
            row.extend(
                extra_keys
                    .iter()
                    .map(|k| t.extra.get(*k).map_or(String::new(), |v| v.to_string())),
            );
            wtr.write_record(&row)?;
        }
        wtr.flush()?;
        Ok(())
    }
}

fn constants_parameters(params: &mut BTreeMap<String, Value>, constants: &DecompositionConstants) {
    params.insert("c_sample".into(), json!(constants.c_sample));
    params.insert("threshold_frac".into(), json!(constants.threshold_frac));
}

fn warn_if_scaled(constants: &DecompositionConstants) {
    if !constants.is_guaranteed() {
        log::warn!(
            "decomposition constants overridden (c_sample = {}); success guarantees no longer apply",
            constants.c_sample
        );
    }
}

/// How the sample size is chosen for `cmd_sample`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Scale {
    Beta(f64),
    Alpha(f64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleRequest {
    pub instance: InstanceSpec,
    pub scale: Scale,
    pub gamma: f64,
    pub constants: DecompositionConstants,
    pub seed: u64,
}

/// Draw one linear sample and, if `out` is given, write it as CSV plus a
/// JSON sidecar.
pub fn cmd_sample(req: &SampleRequest, out: Option<&Path>) -> Result<SampledGraph> {
    warn_if_scaled(&req.constants);
    let instance = req.instance.load()?;
    let ledger = QueryLedger::new();
    let mut rng = stream_rng(req.seed, 0);
    let mut h = match req.scale {
        Scale::Beta(beta) => {
            let config = SamplerConfig::new(beta)
                .with_gamma(req.gamma)
                .with_constants(req.constants);
            build_h_beta(&instance, &config, &mut rng, &ledger)?
        }
        Scale::Alpha(alpha) => build_h_alpha(&instance, alpha, &req.constants, &mut rng, &ledger)?,
    };
    h.seed = Some(req.seed);
    if let Some(path) = out {
        h.save(path)?;
    }
    Ok(h)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveRequest {
    pub instance: InstanceSpec,
    pub problem: Problem,
    pub config: SolveConfig,
    pub trials: usize,
    pub seed: u64,
}

/// Optimum on the full instance when a brute-force oracle can afford it.
fn exact_value(instance: &MetricInstance, problem: Problem) -> Result<Option<f64>> {
    let n = instance.n();
    let value = match problem {
        Problem::Average => Some(exact_average(instance)?),
        Problem::Densest if n <= DENSEST_CAP => Some(exact_densest(&DenseWeights::from_instance(instance))?.density),
        Problem::MaxCut if n <= MAXCUT_CAP => Some(exact_maxcut(&DenseWeights::from_instance(instance))?.value),
        Problem::Hypermatching(k) if n <= HYPERMATCHING_CAP => {
            Some(exact_hypermatching(&DenseWeights::from_instance(instance), k)?.value)
        }
        _ => None,
    };
    Ok(value)
}

/// Whether a pipeline answer meets its accuracy contract against the optimum.
pub fn solve_succeeded(problem: Problem, epsilon: f64, value: f64, exact: f64) -> Option<bool> {
    match problem {
        Problem::Average => Some((value - exact).abs() <= epsilon * exact),
        Problem::Densest | Problem::MaxCut => Some(value >= (0.5 - 2.0 * epsilon) * exact),
        Problem::Hypermatching(_) => None,
    }
}

/// Repeat the sparsify-and-solve pipeline over seeded trials.
pub fn cmd_solve(req: &SolveRequest) -> Result<ExperimentReport> {
    warn_if_scaled(&req.config.constants);
    if req.trials == 0 {
        return Err(invalid("need at least one trial"));
    }
    let instance = req.instance.load()?;
    let exact = exact_value(&instance, req.problem)?;
    let mut trials = Vec::with_capacity(req.trials);
    let mut beta_used = None;
    for i in 0..req.trials {
        let seed = derive_seed(req.seed, i as u64);
        let ledger = QueryLedger::new();
        let record = match sparsify_and_solve(&instance, req.problem, &req.config, &mut stream_rng(seed, 0), &ledger) {
            Ok(r) => {
                beta_used = Some(r.beta_used);
                let mut extra = BTreeMap::new();
                extra.insert("alpha".into(), r.alpha);
                extra.insert("sample_edges".into(), r.sample_edges as f64);
                TrialRecord {
                    queries_algorithm: r.queries_used,
                    queries_evaluation: r.evaluation_queries,
                    value_in_g: r.value_in_g,
                    value_in_h: r.value_in_h,
                    exact_value: exact,
                    success: exact.and_then(|e| solve_succeeded(req.problem, req.config.epsilon, r.value_in_g, e)),
                    extra,
                    ..TrialRecord::new(seed)
                }
            }
            Err(err @ (Error::Consistency(_) | Error::NoEdges)) => TrialRecord::failed(seed, &err),
            Err(err) => return Err(err),
        };
        trials.push(record);
    }

    let mut params = BTreeMap::new();
    params.insert("problem".into(), json!(req.problem.to_string()));
    params.insert("epsilon".into(), json!(req.config.epsilon));
    params.insert("gamma".into(), json!(req.config.gamma));
    params.insert("lambda".into(), json!(instance.lambda()));
    params.insert("n".into(), json!(instance.n()));
    params.insert("beta".into(), json!(beta_used));
    params.insert("seed".into(), json!(req.seed));
    params.insert("trials".into(), json!(req.trials));
    params.insert("restarts".into(), json!(req.config.restarts));
    constants_parameters(&mut params, &req.config.constants);
    let mut report = ExperimentReport::new("solve", req.instance.to_string(), params, trials);
    report.guarantee_void = req.config.guarantee_void();
    if exact.is_some() && !matches!(req.problem, Problem::Hypermatching(_)) {
        report.assertions.push(Assertion {
            description: "success rate >= 0.9".into(),
            passed: report.aggregate.success_rate >= 0.9,
        });
    }
    Ok(report)
}

/// Instance families for the query benchmark.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Family {
    Uniform { dim: usize },
    Line,
    Zero,
    Star,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "line" => Ok(Self::Line),
            "g1" | "zero" => Ok(Self::Zero),
            "star" => Ok(Self::Star),
            _ => {
                let dim = s
                    .strip_prefix("uniform:")
                    .and_then(|d| d.parse().ok())
                    .filter(|&d| d > 0)
                    .ok_or_else(|| Error::Parse(format!("unknown family `{s}`")))?;
                Ok(Self::Uniform { dim })
            }
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Uniform { dim } => write!(f, "uniform:{dim}"),
            Self::Line => write!(f, "line"),
            Self::Zero => write!(f, "g1"),
            Self::Star => write!(f, "star"),
        }
    }
}

impl Family {
    pub fn instance(&self, n: usize, seed: u64) -> Result<MetricInstance> {
        match *self {
            Self::Uniform { dim } => MetricInstance::uniform_points(n, dim, seed),
            Self::Line => Ok(MetricInstance::line(n)),
            Self::Zero => Ok(MetricInstance::zero(n)),
            Self::Star => MetricInstance::make_appendix_star(n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BetaRule {
    /// `beta = n ln n`
    NLogN,
    Fixed(f64),
}

impl BetaRule {
    pub fn beta(&self, n: usize) -> f64 {
        match *self {
            Self::NLogN => n as f64 * (n as f64).ln(),
            Self::Fixed(b) => b,
        }
    }
}

impl std::str::FromStr for BetaRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nlogn" => Ok(Self::NLogN),
            _ => s
                .parse()
                .map(Self::Fixed)
                .map_err(|_| Error::Parse(format!("beta rule must be `nlogn` or a number, got `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRequest {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub beta_rule: BetaRule,
    pub seeds: usize,
    pub seed: u64,
    pub gamma: f64,
    pub constants: DecompositionConstants,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub beta: f64,
    pub mean_queries: f64,
    pub queries: Vec<u64>,
    /// Runs that aborted with an error; their partial counts are included.
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub family: String,
    pub parameters: BTreeMap<String, Value>,
    pub rows: Vec<BenchRow>,
    /// `mean_queries` of each size over that of the previous size.
    pub ratios: Vec<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub assertions: Vec<Assertion>,
    pub guarantee_void: bool,
}

impl BenchReport {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    /// `n,queries` with the per-size mean.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(writer);
        wtr.write_record(["n", "queries"])?;
        for row in &self.rows {
            wtr.write_record([row.n.to_string(), row.mean_queries.to_string()])?;
        }
        wtr.flush()?;
        Ok(())
    }
}

/// Mean query count of a beta-sample per instance size.
pub fn cmd_bench_queries(req: &BenchRequest) -> Result<BenchReport> {
    warn_if_scaled(&req.constants);
    if req.seeds == 0 || req.sizes.is_empty() {
        return Err(invalid("need at least one size and one seed"));
    }
    let mut rows = Vec::with_capacity(req.sizes.len());
    for &n in &req.sizes {
        let beta = req.beta_rule.beta(n);
        let config = SamplerConfig::new(beta)
            .with_gamma(req.gamma)
            .with_constants(req.constants);
        let mut queries = Vec::with_capacity(req.seeds);
        let mut errors = 0;
        for s in 0..req.seeds {
            let seed = derive_seed(req.seed, (n as u64) << 20 | s as u64);
            let instance = req.family.instance(n, seed)?;
            let ledger = QueryLedger::new();
            match build_h_beta(&instance, &config, &mut stream_rng(seed, 1), &ledger) {
                Ok(_) => {}
                Err(Error::DegenerateZero | Error::Consistency(_)) => errors += 1,
                Err(err) => return Err(err),
            }
            queries.push(ledger.count());
        }
        let mean_queries = queries.iter().sum::<u64>() as f64 / queries.len() as f64;
        rows.push(BenchRow {
            n,
            beta,
            mean_queries,
            queries,
            errors,
        });
    }
    let ratios: Vec<f64> = rows.windows(2).map(|w| w[1].mean_queries / w[0].mean_queries).collect();

    let mut params = BTreeMap::new();
    params.insert("sizes".into(), json!(req.sizes));
    params.insert(
        "beta_rule".into(),
        json!(match req.beta_rule {
            BetaRule::NLogN => "nlogn".to_string(),
            BetaRule::Fixed(b) => b.to_string(),
        }),
    );
    params.insert("seeds".into(), json!(req.seeds));
    params.insert("seed".into(), json!(req.seed));
    params.insert("gamma".into(), json!(req.gamma));
    constants_parameters(&mut params, &req.constants);

    let mut assertions = Vec::new();
    let doubling = req.sizes.windows(2).all(|w| w[1] == 2 * w[0]);
    if req.beta_rule == BetaRule::NLogN && doubling && !matches!(req.family, Family::Zero) {
        assertions.push(Assertion {
            description: "query ratio per doubling <= 3".into(),
            passed: ratios.iter().all(|&r| r <= 3.0),
        });
    }
    Ok(BenchReport {
        family: req.family.to_string(),
        parameters: params,
        rows,
        ratios,
        assertions,
        guarantee_void: !req.constants.is_guaranteed(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct AppendixRequest {
    pub n: usize,
    pub p: f64,
    pub epsilon: f64,
    pub trials: usize,
    pub seed: u64,
    pub constants: DecompositionConstants,
}

/// Uniform edge sampling against linear sampling on the heavy star.
///
/// Per trial, `value_in_g` is the density in the full graph of the set that
/// greedy peeling finds on the linear sample; the `uniform_*` extras are the
/// same for a uniform sample at rate `p`.
pub fn cmd_appendix_demo(req: &AppendixRequest) -> Result<ExperimentReport> {
    warn_if_scaled(&req.constants);
    if req.trials == 0 {
        return Err(invalid("need at least one trial"));
    }
    let n = req.n;
    let instance = MetricInstance::make_appendix_star(n)?;
    let uniform_bound = (0.5 + 4.0 * req.p) * n as f64 + 0.5;
    let linear_bound = (0.5 - 2.0 * req.epsilon) * (n as f64 - 1.0);
    let config = SolveConfig::new(req.epsilon).with_constants(req.constants);

    let mut trials = Vec::with_capacity(req.trials);
    let mut uniform_ok = 0;
    for i in 0..req.trials {
        let seed = derive_seed(req.seed, i as u64);
        let mut rng = stream_rng(seed, 0);

        let uniform_ledger = QueryLedger::new();
        let eval = QueryLedger::new();
        let sample = uniform_sample(&instance, req.p, &mut rng, &uniform_ledger)?;
        let (uniform_g, uniform_h) = match greedy_densest(&sample.to_graph()) {
            Ok(sel) => (density_in(&instance, &sel.vertices, &eval)?, sel.density),
            Err(Error::NoEdges) => (0.0, 0.0),
            Err(err) => return Err(err),
        };
        let within = uniform_g <= uniform_bound;
        uniform_ok += usize::from(within);

        let ledger = QueryLedger::new();
        let mut record = match sparsify_and_solve(&instance, Problem::Densest, &config, &mut rng, &ledger) {
            Ok(r) => TrialRecord {
                queries_algorithm: r.queries_used,
                queries_evaluation: r.evaluation_queries,
                value_in_g: r.value_in_g,
                value_in_h: r.value_in_h,
                exact_value: Some(n as f64 - 1.0),
                success: Some(r.value_in_g >= linear_bound),
                ..TrialRecord::new(seed)
            },
            Err(err @ (Error::Consistency(_) | Error::NoEdges)) => TrialRecord::failed(seed, &err),
            Err(err) => return Err(err),
        };
        record.extra.insert("uniform_value_in_g".into(), uniform_g);
        record.extra.insert("uniform_value_in_h".into(), uniform_h);
        record
            .extra
            .insert("uniform_queries".into(), uniform_ledger.count() as f64);
        record
            .extra
            .insert("uniform_within_bound".into(), f64::from(u8::from(within)));
        trials.push(record);
    }

    let mut params = BTreeMap::new();
    params.insert("n".into(), json!(n));
    params.insert("p".into(), json!(req.p));
    params.insert("epsilon".into(), json!(req.epsilon));
    params.insert("trials".into(), json!(req.trials));
    params.insert("seed".into(), json!(req.seed));
    params.insert("uniform_bound".into(), json!(uniform_bound));
    params.insert("linear_bound".into(), json!(linear_bound));
    constants_parameters(&mut params, &req.constants);
    let mut report = ExperimentReport::new("appendix-demo", format!("star:{n}"), params, trials);
    report.guarantee_void = !req.constants.is_guaranteed();
    let uniform_rate = uniform_ok as f64 / req.trials as f64;
    report.assertions.push(Assertion {
        description: format!("uniform-sample density <= {uniform_bound} in >= 90% of trials (observed {uniform_rate})"),
        passed: uniform_rate >= 0.9,
    });
    report.assertions.push(Assertion {
        description: format!("linear-sample density >= {linear_bound} in >= 90% of trials"),
        passed: report.aggregate.success_rate >= 0.9,
    });
    Ok(report)
}

#[derive(Clone, Debug, PartialEq)]
pub struct HardnessRequest {
    pub n: usize,
    pub delta: f64,
    pub trials: usize,
    pub seed: u64,
    /// Accuracy handed to the truncated average estimator.
    pub epsilon: f64,
}

/// Budget for the distinguishing game: `floor(delta n) - 1` queries.
pub fn hardness_budget(n: usize, delta: f64) -> u64 {
    ((delta * n as f64).floor() as u64).saturating_sub(1)
}

/// The distinguishing game between the all-zero instance and a hidden star.
///
/// Each trial flips a fair coin for which instance to present, runs the
/// average estimator under a hard query budget and guesses "hidden star"
/// exactly when a nonzero weight was revealed. `exact_value` is 1 for the
/// hidden star and `value_in_g` is the guess; success is a correct guess.
pub fn cmd_hardness_demo(req: &HardnessRequest) -> Result<ExperimentReport> {
    if req.trials == 0 {
        return Err(invalid("need at least one trial"));
    }
    if !(0.0..=1.0).contains(&req.delta) {
        return Err(invalid(format!("delta must lie in [0, 1], got {}", req.delta)));
    }
    let budget = hardness_budget(req.n, req.delta);
    let config = SolveConfig::new(req.epsilon);
    let mut trials = Vec::with_capacity(req.trials);
    for i in 0..req.trials {
        let seed = derive_seed(req.seed, i as u64);
        let mut rng = stream_rng(seed, 0);
        let present_star: bool = rng.random();
        let (g1, g2) = MetricInstance::make_hardness_pair(req.n, derive_seed(seed, 1))?;
        let instance = if present_star { g2 } else { g1 };
        let ledger = QueryLedger::with_budget(budget);
        match sparsify_and_solve(&instance, Problem::Average, &config, &mut rng, &ledger) {
            Ok(_) | Err(Error::BudgetExhausted { .. } | Error::DegenerateZero) => {}
            Err(err) => return Err(err),
        }
        let guess_star = ledger.max_observed() > 0.0;
        trials.push(TrialRecord {
            queries_algorithm: ledger.count(),
            value_in_g: f64::from(u8::from(guess_star)),
            exact_value: Some(f64::from(u8::from(present_star))),
            success: Some(guess_star == present_star),
            ..TrialRecord::new(seed)
        });
    }

    let mut params = BTreeMap::new();
    params.insert("n".into(), json!(req.n));
    params.insert("delta".into(), json!(req.delta));
    params.insert("budget".into(), json!(budget));
    params.insert("epsilon".into(), json!(req.epsilon));
    params.insert("trials".into(), json!(req.trials));
    params.insert("seed".into(), json!(req.seed));
    let mut report = ExperimentReport::new("hardness-demo", format!("g1/g2:{}", req.n), params, trials);
    let p = 0.5 + req.delta;
    let sigma = (p * (1.0 - p) / req.trials as f64).sqrt();
    let bound = p + 3.0 * sigma;
    report.assertions.push(Assertion {
        description: format!("accuracy {} <= {bound}", report.aggregate.success_rate),
        passed: report.aggregate.success_rate <= bound,
    });
    Ok(report)
}
