//! Running predicates over module families.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{evaluate_with, Evaluation, Facts, Predicate};
use crate::algdef::Algebra;
use crate::error::{Error, Result};
use crate::modrep::{enumerate_modules, module_invariants, sample_module, EnumerationConfig, Module, ModuleInvariants};

/// Mixed into the seed for the extra samples so they differ from enumeration draws.
const SAMPLE_STREAM: u64 = 0x05a3_b1e5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub max_dim: usize,
    pub exhaustive: bool,
    pub budget: u64,
    pub seed: u64,
    /// Ext bound `B`.
    pub bound: usize,
    /// Extra random modules, not deduplicated.
    pub samples: usize,
    /// Dimension of the extra samples.
    pub sample_dim: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_dim: 3, exhaustive: false, budget: 1 << 20, seed: 0, bound: 6, samples: 0, sample_dim: 4 }
    }
}

/// A module on which a predicate failed.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    /// `violation` for proved statements, `candidate` otherwise.
    pub kind: &'static str,
    pub content_hash: String,
    pub dim: usize,
    pub action: BTreeMap<String, Vec<Vec<u32>>>,
    pub invariants: ModuleInvariants,
    pub evaluation: Evaluation,
    /// Still failing when recomputed from scratch at twice the Ext bound.
    pub reverified: bool,
    /// `exact` when every premise was certified for all degrees.
    pub certification: &'static str,
    #[serde(skip)]
    pub module: Module,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub predicate: Predicate,
    pub algebra: String,
    pub algebra_hash: String,
    pub config: SuiteConfig,
    pub applicable: bool,
    pub preconditions: Vec<&'static str>,
    pub modules_checked: usize,
    pub premises_satisfied: usize,
    pub violations: usize,
    pub candidates: usize,
    /// Evaluations whose premises were only checked up to the Ext bound.
    pub bounded_evaluations: usize,
    pub exhaustive_dims: Vec<usize>,
    pub sampled_dims: Vec<usize>,
    pub witnesses: Vec<Witness>,
    pub caveats: Vec<String>,
}

impl SuiteReport {
    fn empty(pred: Predicate, alg: &Algebra, cfg: &SuiteConfig, applicable: bool) -> SuiteReport {
        SuiteReport {
            predicate: pred,
            algebra: alg.description(),
            algebra_hash: alg.fingerprint().to_string(),
            config: cfg.clone(),
            applicable,
            preconditions: pred.preconditions().to_vec(),
            modules_checked: 0,
            premises_satisfied: 0,
            violations: 0,
            candidates: 0,
            bounded_evaluations: 0,
            exhaustive_dims: vec![],
            sampled_dims: vec![],
            witnesses: vec![],
            caveats: vec![],
        }
    }
}

fn witness(m: &Module, e: Evaluation, bound: usize, force: bool) -> Result<Witness> {
    let again = evaluate_with(e.predicate, &Facts::new(m, 2 * bound), 2 * bound, force)?;
    let exact = !again.bounded;
    Ok(Witness {
        kind: if e.predicate.is_proved() && !force { "violation" } else { "candidate" },
        content_hash: m.content_hash(),
        dim: m.dim(),
        action: m.generator_rows().into_iter().collect(),
        invariants: module_invariants(m),
        evaluation: e,
        reverified: !again.consistent,
        certification: if exact { "exact" } else { "bounded" },
        module: m.clone(),
    })
}

/// Evaluate every predicate on every module, in parallel with ordered results.
fn evaluate_all(modules: &[Module], preds: &[Predicate], bound: usize, force: bool) -> Result<Vec<Vec<Evaluation>>> {
    modules
        .par_iter()
        .map(|m| {
            let facts = Facts::new(m, bound);
            preds.iter().map(|&p| evaluate_with(p, &facts, bound, force)).collect()
        })
        .collect()
}

fn tally(
    report: &mut SuiteReport,
    modules: &[Module],
    evals: &[Vec<Evaluation>],
    column: usize,
    bound: usize,
    force: bool,
) -> Result<()> {
    for (m, row) in modules.iter().zip(evals) {
        let e = &row[column];
        if !e.applicable {
            continue;
        }
        report.modules_checked += 1;
        if e.premises_hold() {
            report.premises_satisfied += 1;
        }
        if e.bounded {
            report.bounded_evaluations += 1;
        }
        if !e.consistent {
            let w = witness(m, e.clone(), bound, force)?;
            if w.kind == "violation" {
                report.violations += 1;
            } else if w.reverified {
                report.candidates += 1;
            } else {
                continue;
            }
            report.witnesses.push(w);
        }
    }
    if report.bounded_evaluations > 0 {
        report.caveats.push(format!(
            "{} evaluations relied on Ext vanishing checked only for degrees 1..={bound}",
            report.bounded_evaluations
        ));
    }
    Ok(())
}

/// The module family for a suite: enumeration plus extra random samples.
pub fn suite_modules(alg: &Arc<Algebra>, cfg: &SuiteConfig) -> Result<(Vec<Module>, Vec<usize>, Vec<usize>)> {
    let ecfg = EnumerationConfig {
        max_dim: cfg.max_dim,
        budget: cfg.budget,
        exhaustive: cfg.exhaustive,
        seed: cfg.seed,
        ..Default::default()
    };
    let res = enumerate_modules(alg, &ecfg)?;
    let mut modules = res.modules;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ SAMPLE_STREAM);
    let mut drawn = 0;
    let mut attempts = 0;
    while drawn < cfg.samples && attempts < 4 * cfg.samples + 16 {
        attempts += 1;
        if let Some(m) = sample_module(alg, cfg.sample_dim, &mut rng) {
            modules.push(m);
            drawn += 1;
        }
    }
    let mut sampled = res.sampled_dims;
    if drawn > 0 && !sampled.contains(&cfg.sample_dim) {
        sampled.push(cfg.sample_dim);
    }
    Ok((modules, res.exhaustive_dims, sampled))
}

/// Run each predicate over the enumerated modules of `alg`.
pub fn run_suite(alg: &Arc<Algebra>, preds: &[Predicate], cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    if cfg.bound == 0 {
        return Err(Error::InvalidInput("the Ext bound must be at least 1".into()));
    }
    let active: Vec<Predicate> = preds.iter().copied().filter(|p| p.applies_to(alg)).collect();
    let mut reports: Vec<SuiteReport> =
        preds.iter().map(|&p| SuiteReport::empty(p, alg, cfg, p.applies_to(alg))).collect();
    if active.is_empty() {
        return Ok(reports);
    }
    let (modules, exhaustive_dims, sampled_dims) = suite_modules(alg, cfg)?;
    let evals = evaluate_all(&modules, &active, cfg.bound, false)?;
    for r in reports.iter_mut().filter(|r| r.applicable) {
        let column = active.iter().position(|&p| p == r.predicate).expect("active predicate");
        r.exhaustive_dims = exhaustive_dims.clone();
        r.sampled_dims = sampled_dims.clone();
        tally(r, &modules, &evals, column, cfg.bound, false)?;
        if !sampled_dims.is_empty() {
            r.caveats.push(format!("dimensions {sampled_dims:?} covered by sampling only"));
        }
    }
    Ok(reports)
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub predicate: Predicate,
    pub seed: u64,
    /// Total modules to draw.
    pub instances: usize,
    pub max_dim: usize,
    pub bound: usize,
    /// Modules per emitted report.
    pub batch: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            predicate: Predicate::CommGorensteinSelforth,
            seed: 0,
            instances: 256,
            max_dim: 4,
            bound: 6,
            batch: 64,
        }
    }
}

/// Batches of random modules checked against an open statement.
pub struct SearchStream {
    alg: Arc<Algebra>,
    cfg: SearchConfig,
    rng: ChaCha8Rng,
    drawn: usize,
}

impl Iterator for SearchStream {
    type Item = Result<SuiteReport>;

    fn next(&mut self) -> Option<Result<SuiteReport>> {
        if self.drawn >= self.cfg.instances {
            return None;
        }
        let n = self.cfg.batch.max(1).min(self.cfg.instances - self.drawn);
        let mut modules = Vec::with_capacity(n);
        let mut attempts = 0;
        while modules.len() < n && attempts < 8 * n {
            attempts += 1;
            let d = self.rng.gen_range(1..=self.cfg.max_dim.max(1));
            if let Some(m) = sample_module(&self.alg, d, &mut self.rng) {
                modules.push(m);
            }
        }
        self.drawn += n;
        let scfg = SuiteConfig {
            max_dim: self.cfg.max_dim,
            exhaustive: false,
            budget: 0,
            seed: self.cfg.seed,
            bound: self.cfg.bound,
            samples: modules.len(),
            sample_dim: self.cfg.max_dim,
        };
        let mut report = SuiteReport::empty(self.cfg.predicate, &self.alg, &scfg, true);
        let result = evaluate_all(&modules, &[self.cfg.predicate], self.cfg.bound, true)
            .and_then(|evals| tally(&mut report, &modules, &evals, 0, self.cfg.bound, true));
        Some(result.map(|_| {
            report.sampled_dims = (1..=self.cfg.max_dim).collect();
            report.caveats.push("candidates are pending certification beyond the Ext bound".into());
            report
        }))
    }
}

/// Search for modules failing an open statement. Only `thm4.7` (applied to
/// any algebra) and `gnc_bounded` are searchable.
pub fn search_counterexample(alg: &Arc<Algebra>, cfg: &SearchConfig) -> Result<SearchStream> {
    if !matches!(cfg.predicate, Predicate::CommGorensteinSelforth | Predicate::NakayamaBounded) {
        return Err(Error::InvalidInput(format!("search supports thm4.7 and gnc_bounded, not {}", cfg.predicate)));
    }
    if cfg.bound == 0 {
        return Err(Error::InvalidInput("the Ext bound must be at least 1".into()));
    }
    Ok(SearchStream { alg: Arc::clone(alg), cfg: cfg.clone(), rng: ChaCha8Rng::seed_from_u64(cfg.seed), drawn: 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algdef::AlgebraSpec;

    #[test]
    fn local_suite_has_no_violations() {
        let b = Algebra::local_radical_square_zero(2, 2).unwrap();
        let cfg = SuiteConfig { max_dim: 2, exhaustive: true, bound: 3, ..Default::default() };
        let r = run_suite(&b, &[Predicate::LocalRadSqZeroRigid], &cfg).unwrap();
        assert_eq!(r[0].violations, 0);
        assert!(r[0].premises_satisfied == 0 || r[0].modules_checked > 0);
    }

    #[test]
    fn nonsimple_torsionless_over_a2() {
        let q = Algebra::from_spec(&AlgebraSpec::quiver(2, 2, &[("a", 1, 2)], &[])).unwrap();
        let cfg = SuiteConfig { max_dim: 2, exhaustive: true, bound: 2, ..Default::default() };
        let r = run_suite(&q, &[Predicate::RadSqZeroNonsimple, Predicate::LocalRadSqZeroRigid], &cfg).unwrap();
        assert_eq!(r[0].violations, 0);
        assert!(r[0].premises_satisfied >= 1);
        assert!(!r[1].applicable);
        assert_eq!(r[1].modules_checked, 0);
    }

    #[test]
    fn empty_search_budget_is_empty() {
        let a = Algebra::truncated_polynomial(2, 2).unwrap();
        let cfg = SearchConfig { instances: 0, ..Default::default() };
        assert_eq!(search_counterexample(&a, &cfg).unwrap().count(), 0);
        let bad = SearchConfig { predicate: Predicate::LocalRadSqZeroRigid, ..Default::default() };
        assert!(search_counterexample(&a, &bad).is_err());
    }

    #[test]
    fn gpc_search_on_commutative_finds_nothing() {
        let a = Algebra::truncated_polynomial(2, 3).unwrap();
        let cfg = SearchConfig { instances: 40, batch: 16, max_dim: 4, bound: 4, ..Default::default() };
        let reports: Vec<SuiteReport> = search_counterexample(&a, &cfg).unwrap().collect::<Result<_>>().unwrap();
        assert_eq!(reports.len(), 3);
        assert!(reports.iter().all(|r| r.candidates == 0 && r.violations == 0));
    }
}
