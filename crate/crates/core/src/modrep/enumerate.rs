//! Enumeration of modules up to isomorphism.
//!
//! In the exhaustive regime every module of dimension `d` is realised in a
//! basis adapted to `M = ⊕ e_t M`: the idempotents act by block projections
//! and each remaining generator `g` can only be nonzero on blocks `(j, i)`
//! with `e_j g e_i ≠ 0`. All fillings of those blocks are tried and the valid
//! ones deduplicated. Outside the budget, modules are drawn as random
//! quotients `P/U` with `U ⊆ JP`, and the set is closed under syzygies,
//! Auslander–Reiten translates and indecomposable summands.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::free::FreeSum;
use super::{decompose, hom_dim, is_isomorphic, make_module_with_dim, syzygy, Module};
use crate::algdef::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Mat, Subspace};

const CHUNK: u64 = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationConfig {
    pub max_dim: usize,
    /// Largest candidate count enumerated exhaustively at one dimension.
    pub budget: u64,
    /// Fail instead of sampling when a dimension exceeds the budget.
    pub exhaustive: bool,
    pub seed: u64,
    /// Random draws per dimension outside the exhaustive regime.
    pub samples_per_dim: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig { max_dim: 3, budget: 1 << 20, exhaustive: false, seed: 0, samples_per_dim: 64 }
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationResult {
    /// Pairwise nonisomorphic modules, in deterministic order.
    pub modules: Vec<Module>,
    /// Dimensions covered exhaustively.
    pub exhaustive_dims: Vec<usize>,
    /// Dimensions covered by sampling only.
    pub sampled_dims: Vec<usize>,
    /// Candidate generator tuples examined in the exhaustive regime.
    pub candidates: u64,
}

/// Isomorphism invariants used for bucketing and ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ModuleInvariants {
    pub dim: usize,
    pub dimension_vector: Vec<usize>,
    pub top: Vec<usize>,
    pub socle: Vec<usize>,
    pub loewy_layers: Vec<usize>,
    pub end_dim: usize,
}

pub fn module_invariants(m: &Module) -> ModuleInvariants {
    let (top, socle) = m.top_socle();
    ModuleInvariants {
        dim: m.dim(),
        dimension_vector: m.dimension_vector(),
        top,
        socle,
        loewy_layers: m.loewy_layers(),
        end_dim: hom_dim(m, m).expect("same algebra"),
    }
}

/// Compositions of `d` into `parts` nonnegative parts, lexicographic.
pub fn dimension_vectors(parts: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(parts: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == parts {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=d {
            cur.push(x);
            rec(parts, d - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(parts, d, &mut Vec::new(), &mut out);
    }
    out
}

/// How each generator is filled in for a fixed dimension vector.
enum Slot {
    Fixed(Mat),
    Free(Vec<(usize, usize)>),
}

struct Layout {
    d: usize,
    slots: Vec<Slot>,
    projections: Vec<Mat>,
    free_entries: usize,
}

fn layout(alg: &Algebra, dv: &[usize]) -> Layout {
    let p = alg.p();
    let d: usize = dv.iter().sum();
    let mut offsets = vec![0];
    for &x in dv {
        offsets.push(offsets.last().unwrap() + x);
    }
    let projections: Vec<Mat> = (0..dv.len())
        .map(|t| {
            let mut m = Mat::zeros(p, d, d);
            for i in offsets[t]..offsets[t + 1] {
                m.set(i, i, 1);
            }
            m
        })
        .collect();
    let mut free_entries = 0;
    let slots = alg
        .generators()
        .iter()
        .map(|g| {
            if let Some(t) = alg.idempotents().iter().position(|e| *e == g.element) {
                return Slot::Fixed(projections[t].clone());
            }
            let mut entries = Vec::new();
            for (j, ej) in alg.idempotents().iter().enumerate() {
                for (i, ei) in alg.idempotents().iter().enumerate() {
                    if alg.mul(&alg.mul(ej, &g.element), ei).iter().any(|&x| x != 0) {
                        for r in offsets[j]..offsets[j + 1] {
                            for c in offsets[i]..offsets[i + 1] {
                                entries.push((r, c));
                            }
                        }
                    }
                }
            }
            free_entries += entries.len();
            Slot::Free(entries)
        })
        .collect();
    Layout { d, slots, projections, free_entries }
}

/// Number of candidate tuples at dimension `d`, or `None` on overflow.
pub fn exhaustive_count(alg: &Algebra, d: usize) -> Option<u64> {
    let mut total: u64 = 0;
    for dv in dimension_vectors(alg.num_simples(), d) {
        let l = layout(alg, &dv);
        total = total.checked_add((alg.p() as u64).checked_pow(l.free_entries as u32)?)?;
    }
    Some(total)
}

fn candidate(alg: &Arc<Algebra>, l: &Layout, mut index: u64) -> Option<Module> {
    let p = alg.p();
    let gens: Vec<Mat> = l
        .slots
        .iter()
        .map(|s| match s {
            Slot::Fixed(m) => m.clone(),
            Slot::Free(entries) => {
                let mut m = Mat::zeros(p, l.d, l.d);
                for &(r, c) in entries {
                    m.set(r, c, (index % p as u64) as u32);
                    index /= p as u64;
                }
                m
            }
        })
        .collect();
    let m = make_module_with_dim(alg, l.d, gens).ok()?;
    let ok = m.idempotent_actions().iter().zip(&l.projections).all(|(a, b)| a == b);
    ok.then_some(m)
}

/// Every valid module structure on `F_p^d` in adapted bases (not deduplicated).
pub fn exhaustive_candidates(alg: &Arc<Algebra>, d: usize) -> Vec<Module> {
    if d == 0 {
        return vec![Module::zero(alg)];
    }
    let mut out = Vec::new();
    for dv in dimension_vectors(alg.num_simples(), d) {
        let l = layout(alg, &dv);
        let total = (alg.p() as u64).pow(l.free_entries as u32);
        let chunks = total.div_ceil(CHUNK);
        let found: Vec<Vec<Module>> = (0..chunks)
            .into_par_iter()
            .map(|c| (c * CHUNK..((c + 1) * CHUNK).min(total)).filter_map(|i| candidate(alg, &l, i)).collect())
            .collect();
        out.extend(found.into_iter().flatten());
    }
    out
}

/// Keeps one representative per isomorphism class.
pub(crate) struct Deduper {
    buckets: BTreeMap<ModuleInvariants, Vec<Module>>,
    order: usize,
    seen: Vec<(ModuleInvariants, usize, Module)>,
}

impl Deduper {
    pub fn new() -> Self {
        Deduper { buckets: BTreeMap::new(), order: 0, seen: Vec::new() }
    }

    /// Insert `m` unless an isomorphic module is present; returns whether it was new.
    pub fn insert(&mut self, m: Module) -> Result<bool> {
        let key = module_invariants(&m);
        let bucket = self.buckets.entry(key.clone()).or_default();
        for r in bucket.iter() {
            if is_isomorphic(r, &m)?.decided()? {
                return Ok(false);
            }
        }
        bucket.push(m.clone());
        self.seen.push((key, self.order, m));
        self.order += 1;
        Ok(true)
    }

    pub fn modules(&self) -> Vec<Module> {
        let mut v: Vec<&(ModuleInvariants, usize, Module)> = self.seen.iter().collect();
        v.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
        v.into_iter().map(|x| x.2.clone()).collect()
    }
}

/// Deduplicate a candidate list. Candidates are bucketed by invariants in
/// parallel; representatives keep their first occurrence.
pub(crate) fn dedup(cands: Vec<Module>) -> Result<Vec<Module>> {
    let keyed: Vec<(ModuleInvariants, Module)> = cands.into_par_iter().map(|m| (module_invariants(&m), m)).collect();
    let mut buckets: BTreeMap<ModuleInvariants, Vec<Module>> = BTreeMap::new();
    for (k, m) in keyed {
        buckets.entry(k).or_default().push(m);
    }
    let reps: Vec<Vec<Module>> = buckets
        .into_par_iter()
        .map(|(_, ms)| {
            let mut reps: Vec<Module> = Vec::new();
            for m in ms {
                let mut new = true;
                for r in &reps {
                    if is_isomorphic(r, &m)?.decided()? {
                        new = false;
                        break;
                    }
                }
                if new {
                    reps.push(m);
                }
            }
            Ok(reps)
        })
        .collect::<Result<_>>()?;
    Ok(reps.into_iter().flatten().collect())
}

/// A random quotient `P/U` of dimension `d` with `U ⊆ JP`, or `None` when
/// the draw failed to hit the dimension.
pub fn sample_module(alg: &Arc<Algebra>, d: usize, rng: &mut impl Rng) -> Option<Module> {
    if d == 0 {
        return Some(Module::zero(alg));
    }
    let p = alg.p();
    let nsimple = alg.num_simples();
    for _ in 0..64 {
        let r = rng.gen_range(1..=d);
        let tops: Vec<usize> = (0..r).map(|_| rng.gen_range(0..nsimple)).collect();
        let free = FreeSum::new(alg, tops);
        if free.dim() < d {
            continue;
        }
        let pm = free.module();
        let jp = pm.radical_of(&Subspace::full(p, free.dim()));
        let target = free.dim() - d;
        if jp.dim() < target {
            continue;
        }
        let mut u = Subspace::zero(p, free.dim());
        let mut tries = 0;
        while u.dim() < target && tries < 32 {
            tries += 1;
            let coeffs: Vec<u32> = (0..jp.dim()).map(|_| rng.gen_range(0..p)).collect();
            let v = jp.combine(&coeffs);
            let mut gens = u.basis_vectors();
            gens.push(v);
            let next = pm.submodule_generated(&gens);
            if next.dim() <= target {
                u = next;
            }
        }
        if u.dim() == target {
            return Some(pm.quotient(&u));
        }
    }
    None
}

/// Modules one step away from `m` that stay over the same algebra.
fn neighbours(m: &Module) -> Result<Vec<Module>> {
    let alg = m.algebra();
    let mut out = vec![syzygy(m)];
    let tr = crate::homtools::transpose(m)?.module;
    let tau = crate::homtools::d_dual(&tr).rebind(alg)?;
    out.push(tau);
    if alg.is_commutative() {
        out.push(tr.rebind(alg)?);
        out.push(crate::homtools::d_dual(m).rebind(alg)?);
    }
    let dec = decompose(m)?;
    if dec.summands.len() > 1 {
        out.extend(dec.summands.into_iter().map(|s| s.module));
    }
    Ok(out)
}

/// Enumerate modules of dimension `1..=max_dim` up to isomorphism (only the
/// zero module when `max_dim = 0`).
pub fn enumerate_modules(alg: &Arc<Algebra>, cfg: &EnumerationConfig) -> Result<EnumerationResult> {
    if cfg.max_dim == 0 {
        return Ok(EnumerationResult {
            modules: vec![Module::zero(alg)],
            exhaustive_dims: vec![0],
            sampled_dims: vec![],
            candidates: 1,
        });
    }
    let mut exhaustive_dims = Vec::new();
    let mut sampled_dims = Vec::new();
    let mut candidates = 0u64;
    let mut found: Vec<Module> = Vec::new();
    for d in 1..=cfg.max_dim {
        match exhaustive_count(alg, d) {
            Some(c) if c <= cfg.budget => {
                candidates += c;
                exhaustive_dims.push(d);
                found.extend(dedup(exhaustive_candidates(alg, d))?);
            }
            count => {
                if cfg.exhaustive {
                    return Err(Error::InvalidInput(format!(
                        "exhaustive enumeration at dimension {d} needs {} candidates, over the budget {}",
                        count.map_or("more than 2^64".to_string(), |c| c.to_string()),
                        cfg.budget
                    )));
                }
                sampled_dims.push(d);
            }
        }
    }
    if !sampled_dims.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut drawn = Vec::new();
        for &d in &sampled_dims {
            for _ in 0..cfg.samples_per_dim {
                if let Some(m) = sample_module(alg, d, &mut rng) {
                    drawn.push(m);
                }
            }
        }
        let mut dd = Deduper::new();
        for m in found.drain(..).chain(drawn) {
            dd.insert(m)?;
        }
        // Close under neighbours within the dimension bound (bounded rounds).
        let mut frontier = dd.modules();
        for _ in 0..2 {
            let next: Vec<Vec<Module>> = frontier.par_iter().map(neighbours).collect::<Result<_>>()?;
            let mut added = Vec::new();
            for m in next.into_iter().flatten() {
                if m.dim() >= 1 && m.dim() <= cfg.max_dim && dd.insert(m.clone())? {
                    added.push(m);
                }
            }
            if added.is_empty() {
                break;
            }
            frontier = added;
        }
        found = dd.modules();
    } else {
        let mut keyed: Vec<(ModuleInvariants, usize, Module)> =
            found.into_iter().enumerate().map(|(i, m)| (module_invariants(&m), i, m)).collect();
        keyed.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
        found = keyed.into_iter().map(|x| x.2).collect();
    }
    Ok(EnumerationResult { modules: found, exhaustive_dims, sampled_dims, candidates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algdef::AlgebraSpec;

    fn cfg(max_dim: usize) -> EnumerationConfig {
        EnumerationConfig { max_dim, exhaustive: true, ..Default::default() }
    }

    #[test]
    fn dual_numbers_up_to_dim_two() {
        let a = Algebra::truncated_polynomial(2, 2).unwrap();
        let r = enumerate_modules(&a, &cfg(2)).unwrap();
        assert_eq!(r.modules.len(), 3);
        assert_eq!(r.exhaustive_dims, vec![1, 2]);
    }

    #[test]
    fn dual_numbers_up_to_dim_three() {
        let a = Algebra::truncated_polynomial(2, 2).unwrap();
        let r = enumerate_modules(&a, &cfg(3)).unwrap();
        assert_eq!(r.modules.len(), 5);
    }

    #[test]
    fn zero_dimension_gives_zero_module() {
        let a = Algebra::local_radical_square_zero(2, 2).unwrap();
        let r = enumerate_modules(&a, &cfg(0)).unwrap();
        assert_eq!(r.modules.len(), 1);
        assert!(r.modules[0].is_zero());
    }

    #[test]
    fn path_algebra_a2_has_three_indecomposables() {
        let q = Algebra::from_spec(&AlgebraSpec::quiver(2, 2, &[("a", 1, 2)], &[])).unwrap();
        let r = enumerate_modules(&q, &cfg(2)).unwrap();
        // dim 1: S1, S2; dim 2: S1², S2², S1⊕S2, P1
        assert_eq!(r.modules.len(), 6);
    }

    #[test]
    fn over_budget_exhaustive_is_an_error() {
        let a = Algebra::local_radical_square_zero(2, 2).unwrap();
        let c = EnumerationConfig { max_dim: 3, budget: 10, exhaustive: true, ..Default::default() };
        assert!(enumerate_modules(&a, &c).is_err());
    }

    #[test]
    fn sampling_hits_requested_dimension() {
        let a = Algebra::truncated_polynomial(2, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for d in 1..=5 {
            let m = sample_module(&a, d, &mut rng).unwrap();
            assert_eq!(m.dim(), d);
            m.check().unwrap();
        }
    }

    #[test]
    fn dimension_vector_compositions() {
        assert_eq!(dimension_vectors(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(dimension_vectors(1, 3), vec![vec![3]]);
    }
}
