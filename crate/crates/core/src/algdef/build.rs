//! Basis construction for quotients of path algebras and polynomial rings.
//!
//! Words (paths or monomials) are enumerated by increasing length. For a
//! truncation length `N` the algebra `A_N = F<words>/(I + R^N)` is computed
//! by row reduction of the ideal span inside the space of words shorter than
//! `N`, with columns ordered longest-first so that the surviving basis
//! consists of the shortest normal words. `N` grows until
//! `dim A_{N+1} = dim A_N`, at which point `R^N ⊆ I + R^M` for every `M`.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use super::poly::Term;
use super::spec::{AlgebraSpec, CommutativeSpec, QuiverSpec, StructureConstantsSpec};
use crate::error::{Error, Result};
use crate::exactla::{reduce, Mat, Subspace};

/// Truncation length beyond which a quotient is declared infinite.
pub const MAX_WORD_LENGTH: usize = 32;
/// Hard cap on the number of words considered at one truncation length.
pub const MAX_WORDS: usize = 6000;

/// Raw output of a builder, checked by `Algebra::assemble`.
pub(crate) struct Built {
    pub p: u32,
    pub labels: Vec<String>,
    /// `table[(i * n + j) * n + k]` is the `b_k` coefficient of `b_i b_j`.
    pub table: Vec<u32>,
    pub unit: Vec<u32>,
    pub idempotents: Vec<Vec<u32>>,
    pub radical: Vec<Vec<u32>>,
    pub generators: Vec<(String, Vec<u32>)>,
    pub words: Vec<Vec<usize>>,
}

trait WordModel {
    type W: Clone + Ord + Eq + Hash + Debug;
    fn words_of_len(&self, prev: &[Self::W], len: usize) -> Vec<Self::W>;
    fn len(&self, w: &Self::W) -> usize;
    fn mul(&self, a: &Self::W, b: &Self::W) -> Option<Self::W>;
    fn label(&self, w: &Self::W) -> String;
    fn gen_word(&self, w: &Self::W) -> Vec<usize>;
    /// Whether the ideal generated by `r` is spanned by `u r` alone.
    fn commutative(&self) -> bool;
}

// ---------------------------------------------------------------- quivers

/// A path in product order: `arrows[0]` is traversed last.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct QPath {
    arrows: Vec<usize>,
    /// Source vertex (0-based).
    source: usize,
}

struct QuiverModel<'a> {
    spec: &'a QuiverSpec,
}

impl QuiverModel<'_> {
    fn src(&self, a: usize) -> usize {
        self.spec.arrows[a].from - 1
    }
    fn tgt(&self, a: usize) -> usize {
        self.spec.arrows[a].to - 1
    }
    fn target(&self, w: &QPath) -> usize {
        w.arrows.first().map_or(w.source, |&a| self.tgt(a))
    }
    /// The path given by factors in product order, or `None` if not composable.
    fn path(&self, factors: &[usize]) -> Option<QPath> {
        for pair in factors.windows(2) {
            if self.src(pair[0]) != self.tgt(pair[1]) {
                return None;
            }
        }
        let source = self.src(*factors.last()?);
        Some(QPath { arrows: factors.to_vec(), source })
    }
}

impl WordModel for QuiverModel<'_> {
    type W = QPath;

    fn words_of_len(&self, prev: &[QPath], len: usize) -> Vec<QPath> {
        if len == 0 {
            return (0..self.spec.vertices).map(|v| QPath { arrows: vec![], source: v }).collect();
        }
        let mut out = Vec::new();
        for q in prev {
            for a in 0..self.spec.arrows.len() {
                if self.src(a) == self.target(q) {
                    let mut arrows = vec![a];
                    arrows.extend_from_slice(&q.arrows);
                    out.push(QPath { arrows, source: q.source });
                }
            }
        }
        out.sort();
        out
    }

    fn len(&self, w: &QPath) -> usize {
        w.arrows.len()
    }

    fn mul(&self, a: &QPath, b: &QPath) -> Option<QPath> {
        if a.source != self.target(b) {
            return None;
        }
        let mut arrows = a.arrows.clone();
        arrows.extend_from_slice(&b.arrows);
        Some(QPath { arrows, source: b.source })
    }

    fn label(&self, w: &QPath) -> String {
        if w.arrows.is_empty() {
            return format!("e{}", w.source + 1);
        }
        w.arrows.iter().map(|&a| self.spec.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
    }

    fn gen_word(&self, w: &QPath) -> Vec<usize> {
        if w.arrows.is_empty() {
            return vec![w.source];
        }
        w.arrows.iter().map(|&a| self.spec.vertices + a).collect()
    }

    fn commutative(&self) -> bool {
        false
    }
}

// ------------------------------------------------------------ polynomials

struct PolyModel<'a> {
    spec: &'a CommutativeSpec,
}

impl WordModel for PolyModel<'_> {
    /// Sorted variable indices of a monomial.
    type W = Vec<usize>;

    fn words_of_len(&self, prev: &[Vec<usize>], len: usize) -> Vec<Vec<usize>> {
        if len == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for m in prev {
            let start = m.last().copied().unwrap_or(0);
            for v in start..self.spec.variables.len() {
                let mut w = m.clone();
                w.push(v);
                out.push(w);
            }
        }
        out.sort();
        out
    }

    fn len(&self, w: &Vec<usize>) -> usize {
        w.len()
    }

    fn mul(&self, a: &Vec<usize>, b: &Vec<usize>) -> Option<Vec<usize>> {
        let mut w = Vec::with_capacity(a.len() + b.len());
        w.extend_from_slice(a);
        w.extend_from_slice(b);
        w.sort_unstable();
        Some(w)
    }

    fn label(&self, w: &Vec<usize>) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let name = &self.spec.variables[w[i]];
            parts.push(if j - i == 1 { name.clone() } else { format!("{name}^{}", j - i) });
            i = j;
        }
        parts.join("*")
    }

    fn gen_word(&self, w: &Vec<usize>) -> Vec<usize> {
        w.clone()
    }

    fn commutative(&self) -> bool {
        true
    }
}

// ------------------------------------------------------------ generic core

type Rel<W> = Vec<(W, u32)>;

struct Quotient<W> {
    /// Surviving words, shortest first.
    basis: Vec<W>,
    /// All words below the truncation, longest first (column order).
    columns: Vec<W>,
    index: HashMap<W, usize>,
    ideal: Subspace,
    truncation: usize,
}

fn quotient_at<M: WordModel>(model: &M, p: u32, rels: &[Rel<M::W>], n: usize) -> Result<Quotient<M::W>> {
    let mut by_len: Vec<Vec<M::W>> = Vec::new();
    let mut total = 0;
    for len in 0..n {
        let prev = by_len.last().map(|v| v.as_slice()).unwrap_or(&[]);
        let ws = model.words_of_len(prev, len);
        total += ws.len();
        if total > MAX_WORDS {
            return Err(Error::InvalidAlgebra(format!(
                "more than {MAX_WORDS} words below length {n}; the quotient is too large or infinite"
            )));
        }
        by_len.push(ws);
    }
    let mut columns: Vec<M::W> = by_len.iter().flatten().cloned().collect();
    columns.sort_by(|a, b| (model.len(b), b).cmp(&(model.len(a), a)));
    let index: HashMap<M::W, usize> = columns.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let width = columns.len();

    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut push = |terms: &mut dyn Iterator<Item = (M::W, u32)>| {
        let mut v = vec![0u32; width];
        let mut any = false;
        for (w, c) in terms {
            if let Some(&i) = index.get(&w) {
                v[i] = (v[i] + c) % p;
                any = true;
            }
        }
        if any && v.iter().any(|&x| x != 0) {
            rows.push(v);
        }
    };
    let all_words: Vec<&M::W> = by_len.iter().flatten().collect();
    for r in rels {
        let min_len = r.iter().map(|(w, _)| model.len(w)).min().unwrap_or(0);
        if min_len >= n {
            continue;
        }
        for u in all_words.iter().filter(|u| model.len(u) + min_len < n) {
            if model.commutative() {
                push(&mut r.iter().filter_map(|(w, c)| model.mul(u, w).map(|x| (x, *c))));
                continue;
            }
            for v in all_words.iter().filter(|v| model.len(u) + model.len(v) + min_len < n) {
                push(&mut r.iter().filter_map(|(w, c)| {
                    let uw = model.mul(u, w)?;
                    model.mul(&uw, v).map(|x| (x, *c))
                }));
            }
        }
    }
    let ideal = Subspace::span(p, width, &rows);
    let mut basis: Vec<M::W> = ideal.free_columns().into_iter().map(|c| columns[c].clone()).collect();
    basis.reverse();
    Ok(Quotient { basis, columns, index, ideal, truncation: n })
}

fn assemble<M: WordModel>(
    model: &M,
    p: u32,
    q: &Quotient<M::W>,
    generators: Vec<(String, M::W)>,
    idempotent_words: Vec<M::W>,
) -> Built {
    let n = q.basis.len();
    let width = q.columns.len();
    let free = q.ideal.free_columns();
    // free columns are listed longest-first; basis is the reverse
    let to_basis = |v: &[u32]| -> Vec<u32> {
        let r = q.ideal.reduce(v);
        let mut out = vec![0u32; n];
        for (k, &c) in free.iter().enumerate() {
            out[n - 1 - k] = r[c];
        }
        out
    };
    let coords_of = |w: &M::W| -> Vec<u32> {
        match q.index.get(w) {
            Some(&i) => {
                let mut v = vec![0u32; width];
                v[i] = 1;
                to_basis(&v)
            }
            None => vec![0u32; n],
        }
    };
    let mut table = vec![0u32; n * n * n];
    for (i, a) in q.basis.iter().enumerate() {
        for (j, b) in q.basis.iter().enumerate() {
            if let Some(w) = model.mul(a, b) {
                if model.len(&w) < q.truncation {
                    let c = coords_of(&w);
                    table[(i * n + j) * n..(i * n + j + 1) * n].copy_from_slice(&c);
                }
            }
        }
    }
    let idempotents: Vec<Vec<u32>> = idempotent_words.iter().map(&coords_of).collect();
    let mut unit = vec![0u32; n];
    for e in &idempotents {
        for (u, x) in unit.iter_mut().zip(e) {
            *u = (*u + x) % p;
        }
    }
    let radical: Vec<Vec<u32>> = q
        .basis
        .iter()
        .enumerate()
        .filter(|(_, w)| model.len(w) > 0)
        .map(|(i, _)| {
            let mut v = vec![0u32; n];
            v[i] = 1;
            v
        })
        .collect();
    Built {
        p,
        labels: q.basis.iter().map(|w| model.label(w)).collect(),
        table,
        unit,
        idempotents,
        radical,
        generators: generators.into_iter().map(|(name, w)| (name, coords_of(&w))).collect(),
        words: q.basis.iter().map(|w| model.gen_word(w)).collect(),
    }
}

fn stabilise<M: WordModel>(model: &M, p: u32, rels: &[Rel<M::W>], fixed: Option<usize>) -> Result<Quotient<M::W>> {
    if let Some(n) = fixed {
        return quotient_at(model, p, rels, n);
    }
    let mut cur = quotient_at(model, p, rels, 1)?;
    for n in 2..=MAX_WORD_LENGTH + 1 {
        let next = quotient_at(model, p, rels, n)?;
        if next.basis.len() == cur.basis.len() {
            return Ok(cur);
        }
        cur = next;
    }
    Err(Error::InfiniteDimensional(MAX_WORD_LENGTH))
}

fn term_coeff(p: u32, t: &Term) -> u32 {
    reduce(p, t.coeff)
}

fn parse_rels(rels: &[String]) -> Result<Vec<Vec<Term>>> {
    rels.iter().enumerate().map(|(i, r)| super::poly::parse_expression(r, &format!("relations[{i}]"))).collect()
}

pub(crate) fn build_quiver(spec: &QuiverSpec) -> Result<Built> {
    let p = spec.field.p as u32;
    let model = QuiverModel { spec };
    let names: HashMap<&str, usize> = spec.arrows.iter().enumerate().map(|(i, a)| (a.name.as_str(), i)).collect();
    let mut rels = Vec::new();
    for terms in parse_rels(&spec.relations)? {
        let mut r: Rel<QPath> = Vec::new();
        for t in terms.iter().filter(|t| !t.factors.is_empty()) {
            let factors: Vec<usize> = t
                .factors
                .iter()
                .map(|f| {
                    names.get(f.as_str()).copied().ok_or_else(|| Error::InvalidInput(format!("unknown arrow {f}")))
                })
                .collect::<Result<_>>()?;
            if let Some(path) = model.path(&factors) {
                r.push((path, term_coeff(p, t)));
            }
        }
        if !r.is_empty() {
            rels.push(r);
        }
    }
    let q = stabilise(&model, p, &rels, spec.nilpotency_degree)?;
    let mut gens: Vec<(String, QPath)> =
        (0..spec.vertices).map(|v| (format!("e{}", v + 1), QPath { arrows: vec![], source: v })).collect();
    for (a, arrow) in spec.arrows.iter().enumerate() {
        gens.push((arrow.name.clone(), QPath { arrows: vec![a], source: arrow.from - 1 }));
    }
    let idem = (0..spec.vertices).map(|v| QPath { arrows: vec![], source: v }).collect();
    Ok(assemble(&model, p, &q, gens, idem))
}

pub(crate) fn build_commutative(spec: &CommutativeSpec) -> Result<Built> {
    let p = spec.field.p as u32;
    let model = PolyModel { spec };
    let names: HashMap<&str, usize> = spec.variables.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let mut rels = Vec::new();
    for terms in parse_rels(&spec.relations)? {
        let mut acc: HashMap<Vec<usize>, u32> = HashMap::new();
        for t in terms.iter().filter(|t| !t.factors.is_empty()) {
            let mut m: Vec<usize> = t
                .factors
                .iter()
                .map(|f| {
                    names.get(f.as_str()).copied().ok_or_else(|| Error::InvalidInput(format!("unknown variable {f}")))
                })
                .collect::<Result<_>>()?;
            m.sort_unstable();
            let e = acc.entry(m).or_insert(0);
            *e = (*e + term_coeff(p, t)) % p;
        }
        let mut r: Rel<Vec<usize>> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        r.sort();
        if !r.is_empty() {
            rels.push(r);
        }
    }
    let q = stabilise(&model, p, &rels, spec.nilpotency_degree)?;
    let gens = spec.variables.iter().enumerate().map(|(i, v)| (v.clone(), vec![i])).collect();
    Ok(assemble(&model, p, &q, gens, vec![vec![]]))
}

pub(crate) fn build_structure_constants(spec: &StructureConstantsSpec) -> Result<Built> {
    let p = spec.field.p as u32;
    let n = spec.dim;
    let red = |v: &Vec<i64>| v.iter().map(|&x| reduce(p, x)).collect::<Vec<u32>>();
    let mut table = vec![0u32; n * n * n];
    for i in 0..n {
        for j in 0..n {
            table[(i * n + j) * n..(i * n + j + 1) * n].copy_from_slice(&red(&spec.table[i][j]));
        }
    }
    let radical = Mat::from_rows_i64(p, n, &spec.radical_basis);
    if radical.rank() != spec.radical_basis.len() {
        return Err(Error::InvalidAlgebra("radical_basis vectors are linearly dependent".into()));
    }
    Ok(Built {
        p,
        labels: (0..n).map(|i| format!("b{i}")).collect(),
        table,
        unit: red(&spec.unit),
        idempotents: spec.idempotents.iter().map(red).collect(),
        radical: spec.radical_basis.iter().map(red).collect(),
        generators: (0..n)
            .map(|i| {
                let mut v = vec![0u32; n];
                v[i] = 1;
                (format!("b{i}"), v)
            })
            .collect(),
        words: (0..n).map(|i| vec![i]).collect(),
    })
}

pub(crate) fn build(spec: &AlgebraSpec) -> Result<Built> {
    match spec {
        AlgebraSpec::Quiver(q) => build_quiver(q),
        AlgebraSpec::CommutativeQuotient(c) => build_commutative(c),
        AlgebraSpec::StructureConstants(s) => build_structure_constants(s),
    }
}
