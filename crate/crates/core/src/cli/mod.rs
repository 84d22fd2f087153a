//! Command-line jobs: parse inputs, run computations and suites, emit JSONL.
//!
//! Every record carries the job echo and the inlined algebra spec, so a
//! record can be re-run without the files it was produced from. Payloads are
//! deterministic for a fixed job; only `timestamp` varies between runs.

mod files;
mod summary;

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algdef::{same_algebra, Algebra};
use crate::conjlab::{run_suite, search_counterexample, Predicate, SearchConfig, SuiteConfig, SuiteReport};
use crate::error::{Error, Result};
use crate::homtools::{
    d_dual, dual_star, eval_sigma, ext_profile, orthogonality_profile, tensor_over_algebra, transpose, zeta_map,
    Certification,
};
use crate::modrep::{enumerate_modules, module_invariants, EnumerationConfig, Module};

pub use files::{load_algebra, load_module, module_to_value, parse_module, write_witness};
pub use summary::{report_summary, Summary};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComputeOp {
    Ext,
    Transpose,
    Sigma,
    Dual,
    Tensor,
    Profile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "name")]
pub enum Command {
    Compute { op: ComputeOp },
    Verify,
    Enumerate,
    Search,
    Report { input: PathBuf },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JobConfig {
    pub command: Command,
    pub algebra: Option<PathBuf>,
    pub m: Option<PathBuf>,
    pub n: Option<PathBuf>,
    pub predicates: Vec<String>,
    pub max_dim: usize,
    pub bound: usize,
    pub exhaustive: bool,
    pub budget: u64,
    pub seed: u64,
    pub out: Option<PathBuf>,
    /// Worker threads; `None` uses the rayon default. Never affects payloads.
    pub workers: Option<usize>,
    /// Extra random modules for `verify`, total draws for `search`.
    pub samples: usize,
}

impl JobConfig {
    pub fn new(command: Command) -> JobConfig {
        JobConfig {
            command,
            algebra: None,
            m: None,
            n: None,
            predicates: vec![],
            max_dim: 3,
            bound: 6,
            exhaustive: false,
            budget: 1 << 20,
            seed: 0,
            out: None,
            workers: None,
            samples: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub schema_version: String,
    pub timestamp: String,
    pub job: JobConfig,
    pub algebra_hash: String,
    /// The algebra spec, inlined; `opposite` marks records about the opposite algebra.
    pub algebra: Value,
    pub payload: Value,
    pub caveats: Vec<String>,
}

impl PartialEq for JobConfig {
    fn eq(&self, other: &Self) -> bool {
        serde_json::to_value(self).ok() == serde_json::to_value(other).ok()
    }
}

impl Eq for JobConfig {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success,
    InputError,
    /// Violations or candidates were found.
    Findings,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::InputError => 1,
            ExitStatus::Findings => 2,
        }
    }
}

impl fmt::Display for ExitStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub status: ExitStatus,
    pub records: Vec<ReportRecord>,
    /// Human-readable text for `report`.
    pub text: Option<String>,
}

fn record(cfg: &JobConfig, alg: &Algebra, payload: Value, caveats: Vec<String>) -> ReportRecord {
    let mut spec = alg.spec().to_value();
    if alg.is_opposite_of_spec() {
        spec = json!({ "spec": spec, "opposite": true });
    }
    ReportRecord {
        schema_version: SCHEMA_VERSION.into(),
        timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        job: cfg.clone(),
        algebra_hash: alg.fingerprint().to_string(),
        algebra: spec,
        payload,
        caveats,
    }
}

fn need<'a>(p: &'a Option<PathBuf>, flag: &str) -> Result<&'a Path> {
    p.as_deref().ok_or_else(|| Error::InvalidInput(format!("{flag} is required")))
}

fn job_algebra(cfg: &JobConfig) -> Result<Arc<Algebra>> {
    load_algebra(need(&cfg.algebra, "--algebra")?)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("payload serialises")
}

fn predicates(cfg: &JobConfig) -> Result<Vec<Predicate>> {
    if cfg.predicates.is_empty() {
        return Err(Error::InvalidInput("--predicate is required".into()));
    }
    let mut out = Vec::new();
    for id in &cfg.predicates {
        if id == "all" {
            out.extend(Predicate::ALL);
        } else {
            out.push(id.parse()?);
        }
    }
    Ok(out)
}

/// Run a job. Input problems surface as `Err`; the caller maps them to exit 1.
pub fn execute(cfg: &JobConfig) -> Result<Outcome> {
    if cfg.bound == 0 {
        return Err(Error::InvalidInput("--bound must be at least 1".into()));
    }
    match cfg.workers {
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::InvalidInput(format!("worker pool: {e}")))?;
            pool.install(|| dispatch(cfg))
        }
        None => dispatch(cfg),
    }
}

fn dispatch(cfg: &JobConfig) -> Result<Outcome> {
    let (status, records) = match &cfg.command {
        Command::Compute { op } => (ExitStatus::Success, vec![compute(cfg, *op)?]),
        Command::Verify => verify(cfg)?,
        Command::Enumerate => (ExitStatus::Success, vec![enumerate(cfg)?]),
        Command::Search => search(cfg)?,
        Command::Report { input } => {
            let s = report_summary(input)?;
            let status = if s.findings { ExitStatus::Findings } else { ExitStatus::Success };
            return Ok(Outcome { status, records: vec![], text: Some(s.render()) });
        }
    };
    Ok(Outcome { status, records, text: None })
}

fn compute(cfg: &JobConfig, op: ComputeOp) -> Result<ReportRecord> {
    let given = cfg.algebra.as_deref().map(load_algebra).transpose()?;
    let m = load_module(need(&cfg.m, "--m")?, given.as_ref())?;
    let alg = given.unwrap_or_else(|| Arc::clone(m.algebra()));
    let mut caveats = Vec::new();
    let mut inputs = json!({ "m": module_to_value(&m) });
    if let Some(n) = &cfg.n {
        inputs["n"] = module_to_value(&load_module(n, Some(&alg))?);
    }
    let mut payload = match op {
        ComputeOp::Ext => {
            let n = load_module(need(&cfg.n, "--n")?, Some(&alg))?;
            let n = if same_algebra(n.algebra(), m.algebra()) { n } else { n.rebind(m.algebra())? };
            let e = ext_profile(&m, &n, cfg.bound)?;
            if !e.is_determined() {
                caveats.push(format!("Ext computed for degrees up to {} only", cfg.bound));
            }
            json!({ "kind": "ext", "m": m.content_hash(), "n": n.content_hash(), "ext": e })
        }
        ComputeOp::Transpose => {
            let t = transpose(&m)?;
            json!({ "kind": "transpose", "m": m.content_hash(), "dim": t.module.dim(), "transpose": module_to_value(&t.module) })
        }
        ComputeOp::Sigma => json!({ "kind": "sigma", "m": m.content_hash(), "sigma": eval_sigma(&m)? }),
        ComputeOp::Dual => {
            let d = d_dual(&m);
            let s = dual_star(&m)?;
            json!({
                "kind": "dual",
                "m": m.content_hash(),
                "vector_space_dual": module_to_value(&d),
                "algebra_dual": module_to_value(&s),
            })
        }
        ComputeOp::Tensor => {
            // --m is the right module X; over a commutative algebra any module will do.
            let n = load_module(need(&cfg.n, "--n")?, Some(&alg))?;
            let x = if m.algebra().is_opposite_of_spec() == n.algebra().is_opposite_of_spec() {
                m.rebind(&n.algebra().opposite()).map_err(|_| {
                    Error::InvalidInput("tensor needs --m over the opposite algebra (\"opposite\": true)".into())
                })?
            } else {
                m.clone()
            };
            let t = tensor_over_algebra(&x, &n)?;
            let z = zeta_map(&x, &n)?;
            json!({ "kind": "tensor", "m": x.content_hash(), "n": n.content_hash(), "dim": t.dim, "zeta": z })
        }
        ComputeOp::Profile => {
            let o = orthogonality_profile(&m, cfg.bound)?;
            if o.certification() == Certification::Bounded {
                caveats.push(format!("some vanishing conditions checked for degrees up to {} only", cfg.bound));
            }
            json!({ "kind": "profile", "m": m.content_hash(), "profile": o })
        }
    };
    // Inlined so the record can be re-run without the original files.
    payload["inputs"] = inputs;
    Ok(record(cfg, m.algebra(), payload, caveats))
}

fn suite_config(cfg: &JobConfig) -> SuiteConfig {
    SuiteConfig {
        max_dim: cfg.max_dim,
        exhaustive: cfg.exhaustive,
        budget: cfg.budget,
        seed: cfg.seed,
        bound: cfg.bound,
        samples: cfg.samples,
        sample_dim: cfg.max_dim + 1,
    }
}

fn witness_dir(cfg: &JobConfig) -> Option<PathBuf> {
    cfg.out.as_ref().map(|o| o.parent().map(Path::to_path_buf).unwrap_or_default())
}

fn suite_records(cfg: &JobConfig, alg: &Algebra, reports: Vec<SuiteReport>) -> Result<(ExitStatus, Vec<ReportRecord>)> {
    let mut status = ExitStatus::Success;
    let mut records = Vec::new();
    for r in reports {
        if r.violations > 0 || r.candidates > 0 {
            status = ExitStatus::Findings;
        }
        if let Some(dir) = witness_dir(cfg) {
            for w in &r.witnesses {
                write_witness(&dir, &w.module)?;
            }
        }
        let caveats = r.caveats.clone();
        records.push(record(cfg, alg, to_value(&r), caveats));
    }
    Ok((status, records))
}

fn verify(cfg: &JobConfig) -> Result<(ExitStatus, Vec<ReportRecord>)> {
    let alg = job_algebra(cfg)?;
    let reports = run_suite(&alg, &predicates(cfg)?, &suite_config(cfg))?;
    suite_records(cfg, &alg, reports)
}

fn search(cfg: &JobConfig) -> Result<(ExitStatus, Vec<ReportRecord>)> {
    let alg = job_algebra(cfg)?;
    let preds = predicates(cfg)?;
    let [predicate] = preds[..] else {
        return Err(Error::InvalidInput("search takes exactly one predicate".into()));
    };
    let scfg = SearchConfig {
        predicate,
        seed: cfg.seed,
        instances: if cfg.samples == 0 { SearchConfig::default().instances } else { cfg.samples },
        max_dim: cfg.max_dim,
        bound: cfg.bound,
        ..SearchConfig::default()
    };
    let reports = search_counterexample(&alg, &scfg)?.collect::<Result<Vec<_>>>()?;
    suite_records(cfg, &alg, reports)
}

fn enumerate(cfg: &JobConfig) -> Result<ReportRecord> {
    let alg = job_algebra(cfg)?;
    let ecfg = EnumerationConfig {
        max_dim: cfg.max_dim,
        budget: cfg.budget,
        exhaustive: cfg.exhaustive,
        seed: cfg.seed,
        ..EnumerationConfig::default()
    };
    let r = enumerate_modules(&alg, &ecfg)?;
    let classes: Vec<Value> = r
        .modules
        .iter()
        .map(|m: &Module| {
            json!({
                "content_hash": m.content_hash(),
                "invariants": module_invariants(m),
                "module": module_to_value(m),
            })
        })
        .collect();
    let mut caveats = Vec::new();
    if !r.sampled_dims.is_empty() {
        caveats.push(format!("dimensions {:?} were sampled, not enumerated", r.sampled_dims));
    }
    let payload = json!({
        "kind": "enumerate",
        "classes": classes.len(),
        "exhaustive_dims": r.exhaustive_dims,
        "sampled_dims": r.sampled_dims,
        "candidates": r.candidates,
        "modules": classes,
    });
    Ok(record(cfg, &alg, payload, caveats))
}

/// Append records as JSONL to `out`, or write them to stdout.
pub fn write_records(records: &[ReportRecord], out: Option<&Path>) -> Result<()> {
    let mut text = String::new();
    for r in records {
        text.push_str(&serde_json::to_string(r).expect("record serialises"));
        text.push('\n');
    }
    match out {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(|e| Error::io(dir.display().to_string(), e))?;
            }
            let mut f = std::fs::OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| Error::io(path.display().to_string(), e))?;
            f.write_all(text.as_bytes()).map_err(|e| Error::io(path.display().to_string(), e))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Execute and persist; returns the process exit code.
pub fn run(cfg: &JobConfig) -> i32 {
    let outcome = execute(cfg).and_then(|o| {
        if let Some(t) = &o.text {
            print!("{t}");
        } else {
            write_records(&o.records, cfg.out.as_deref())?;
        }
        Ok(o)
    });
    match outcome {
        Ok(o) => o.status.code(),
        Err(e) => {
            eprintln!("error: {e}");
            ExitStatus::InputError.code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        p
    }

    fn dual_numbers(dir: &Path) -> (PathBuf, PathBuf) {
        let alg = write(
            dir,
            "k2x.json",
            r#"{"kind": "commutative_quotient", "field": {"p": 2}, "variables": ["x"], "relations": ["x^2"]}"#,
        );
        let k = write(dir, "k.json", r#"{"algebra": "k2x.json", "dim": 1, "action": {"x": [[0]]}}"#);
        (alg, k)
    }

    #[test]
    fn ext_of_simple_is_periodic() {
        let dir = tempfile::tempdir().unwrap();
        let (alg, k) = dual_numbers(dir.path());
        let mut cfg = JobConfig::new(Command::Compute { op: ComputeOp::Ext });
        cfg.algebra = Some(alg);
        cfg.m = Some(k.clone());
        cfg.n = Some(k);
        let o = execute(&cfg).unwrap();
        assert_eq!(o.status, ExitStatus::Success);
        assert_eq!(o.records[0].payload["ext"]["dims"], json!([1, 1, 1, 1, 1, 1, 1]));
        assert!(o.records[0].caveats.is_empty());
    }

    #[test]
    fn payloads_do_not_depend_on_workers() {
        let dir = tempfile::tempdir().unwrap();
        let (alg, _) = dual_numbers(dir.path());
        let mut cfg = JobConfig::new(Command::Verify);
        cfg.algebra = Some(alg);
        cfg.predicates = vec!["all".into()];
        cfg.samples = 8;
        let payloads = |w| {
            let mut c = cfg.clone();
            c.workers = Some(w);
            let o = execute(&c).unwrap();
            assert_eq!(o.status, ExitStatus::Success);
            serde_json::to_string(&o.records.iter().map(|r| &r.payload).collect::<Vec<_>>()).unwrap()
        };
        assert_eq!(payloads(1), payloads(2));
    }

    #[test]
    fn records_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let (alg, _) = dual_numbers(dir.path());
        let mut cfg = JobConfig::new(Command::Enumerate);
        cfg.algebra = Some(alg);
        cfg.max_dim = 2;
        let out = dir.path().join("out/report.jsonl");
        cfg.out = Some(out.clone());
        let o = execute(&cfg).unwrap();
        assert_eq!(o.records[0].payload["classes"], json!(3));
        write_records(&o.records, Some(&out)).unwrap();
        let line = std::fs::read_to_string(&out).unwrap();
        let back: ReportRecord = serde_json::from_str(line.trim()).unwrap();
        assert_eq!(back, o.records[0]);
        assert_eq!(back.schema_version, "1");
    }

    #[test]
    fn bad_inputs_are_errors() {
        let mut cfg = JobConfig::new(Command::Verify);
        cfg.algebra = Some("/nonexistent/alg.json".into());
        cfg.predicates = vec!["thm3.4".into()];
        assert!(execute(&cfg).is_err());
        let dir = tempfile::tempdir().unwrap();
        let (alg, _) = dual_numbers(dir.path());
        cfg.algebra = Some(alg);
        cfg.predicates = vec!["thm9.9".into()];
        assert!(execute(&cfg).is_err());
        cfg.predicates = vec!["thm3.4".into()];
        cfg.bound = 0;
        assert!(execute(&cfg).is_err());
    }
}
