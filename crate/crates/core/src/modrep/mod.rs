//! Finite-dimensional left modules given by action matrices.
//!
//! A [`Module`] stores one matrix per basis element of its algebra, acting
//! on column vectors. Right modules are left modules over the opposite
//! algebra. Modules built from user data go through [`make_module`], which
//! checks the algebra relations; derived modules (submodules, quotients,
//! duals) inherit validity and skip the check.

mod decomp;
mod enumerate;
mod free;
mod iso;

use std::fmt;
use std::sync::{Arc, OnceLock};

use sha2::{Digest, Sha256};

pub use decomp::{decompose, end_basis, is_indecomposable, is_local_endomorphism_ring, Decomposition, Summand};
pub use enumerate::{
    dimension_vectors, enumerate_modules, module_invariants, sample_module, EnumerationConfig, EnumerationResult,
    ModuleInvariants,
};
pub use free::{corner_bases, minimal_resolution, projective_cover, syzygy, FreeMap, FreeSum, Resolution};
pub use iso::{is_isomorphic, IsoVerdict};

use crate::algdef::{same_algebra, Algebra};
use crate::error::{Error, Result};
use crate::exactla::{Mat, Subspace};

struct Inner {
    alg: Arc<Algebra>,
    dim: usize,
    /// One matrix per basis element of the algebra.
    actions: Vec<Mat>,
    generators: OnceLock<Vec<Mat>>,
    radical_actions: OnceLock<Vec<Mat>>,
    idempotent_actions: OnceLock<Vec<Mat>>,
}

/// A finite-dimensional left module. Cloning is cheap.
#[derive(Clone)]
pub struct Module {
    inner: Arc<Inner>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dim {} over {})", self.dim(), self.algebra().description())?;
        if self.dim() <= 6 {
            for (g, m) in self.algebra().generators().iter().zip(self.generator_actions()) {
                write!(f, " {}={:?}", g.name, m)?;
            }
        }
        Ok(())
    }
}

/// Build a module from one matrix per algebra generator, checking that the
/// generator matrices satisfy every relation of the algebra.
pub fn make_module(alg: &Arc<Algebra>, generator_actions: Vec<Mat>) -> Result<Module> {
    let gens = alg.generators();
    if generator_actions.len() != gens.len() {
        return Err(Error::SizeMismatch(format!(
            "expected {} generator matrices, got {}",
            gens.len(),
            generator_actions.len()
        )));
    }
    let d = generator_actions.first().map_or(0, Mat::rows);
    for (g, m) in gens.iter().zip(&generator_actions) {
        if m.rows() != d || m.cols() != d || m.p() != alg.p() {
            return Err(Error::SizeMismatch(format!(
                "matrix for generator {} is {}x{}, expected {d}x{d}",
                g.name,
                m.rows(),
                m.cols()
            )));
        }
    }
    let d = if gens.is_empty() { 0 } else { d };
    make_module_with_dim(alg, d, generator_actions)
}

/// As [`make_module`], with the dimension given explicitly (needed when the
/// algebra has no generators).
pub fn make_module_with_dim(alg: &Arc<Algebra>, d: usize, generator_actions: Vec<Mat>) -> Result<Module> {
    let p = alg.p();
    let actions: Vec<Mat> = (0..alg.dim())
        .map(|i| alg.word(i).iter().fold(Mat::identity(p, d), |acc, &g| acc.mul(&generator_actions[g])))
        .collect();
    let m = Module::from_actions_unchecked(alg, d, actions);
    m.check()?;
    for (g, given) in alg.generators().iter().zip(&generator_actions) {
        if m.act(&g.element) != *given {
            return Err(Error::RelationViolation(format!(
                "matrix for generator {} disagrees with the product of its word",
                g.name
            )));
        }
    }
    Ok(m)
}

impl Module {
    /// Wrap basis-element actions without checking the module axioms.
    pub fn from_actions_unchecked(alg: &Arc<Algebra>, dim: usize, actions: Vec<Mat>) -> Module {
        debug_assert_eq!(actions.len(), alg.dim());
        Module {
            inner: Arc::new(Inner {
                alg: Arc::clone(alg),
                dim,
                actions,
                generators: OnceLock::new(),
                radical_actions: OnceLock::new(),
                idempotent_actions: OnceLock::new(),
            }),
        }
    }

    /// Check unit and multiplicativity: `ρ(b_i)ρ(b_j) = Σ_k c_ijk ρ(b_k)`.
    pub fn check(&self) -> Result<()> {
        let alg = self.algebra();
        let n = alg.dim();
        if !self.act(alg.unit()).is_identity() {
            return Err(Error::RelationViolation("the unit does not act as the identity".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.inner.actions[i].mul(&self.inner.actions[j]);
                if lhs != self.act(alg.product(i, j)) {
                    return Err(Error::RelationViolation(format!(
                        "action is not multiplicative on ({}, {})",
                        alg.labels()[i],
                        alg.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(alg: &Arc<Algebra>) -> Module {
        let p = alg.p();
        Module::from_actions_unchecked(alg, 0, vec![Mat::zeros(p, 0, 0); alg.dim()])
    }

    /// The regular module `Λ`.
    pub fn regular(alg: &Arc<Algebra>) -> Module {
        let actions = (0..alg.dim()).map(|i| alg.lmul(i).clone()).collect();
        Module::from_actions_unchecked(alg, alg.dim(), actions)
    }

    /// The indecomposable projective `Λe_t`.
    pub fn projective(alg: &Arc<Algebra>, t: usize) -> Module {
        let pd = alg.projective(t);
        Module::from_actions_unchecked(alg, pd.basis.len(), pd.actions.clone())
    }

    /// The simple module `S_t = top(Λe_t)`.
    pub fn simple(alg: &Arc<Algebra>, t: usize) -> Module {
        let p = alg.p();
        let e = &alg.idempotents()[t];
        // b acts on S_t by the coefficient of e_t in e_t b e_t modulo J, which
        // is read off from b·e_t = c·e_t + (radical).
        let actions = (0..alg.dim())
            .map(|b| {
                let be = alg.mul(&crate::exactla::unit_vector(alg.dim(), b), e);
                let ebe = alg.mul(e, &be);
                let c = scalar_mod_radical(alg, &ebe, t);
                Mat::scalar(p, 1, c)
            })
            .collect();
        Module::from_actions_unchecked(alg, 1, actions)
    }

    /// All simples, indexed like the idempotents.
    pub fn simples(alg: &Arc<Algebra>) -> Vec<Module> {
        (0..alg.num_simples()).map(|t| Module::simple(alg, t)).collect()
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.inner.alg
    }

    pub fn p(&self) -> u32 {
        self.inner.alg.p()
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn is_zero(&self) -> bool {
        self.inner.dim == 0
    }

    /// Action of basis element `i`.
    pub fn action(&self, i: usize) -> &Mat {
        &self.inner.actions[i]
    }

    pub fn actions(&self) -> &[Mat] {
        &self.inner.actions
    }

    /// Action of an arbitrary algebra element.
    pub fn act(&self, x: &[u32]) -> Mat {
        let mut m = Mat::zeros(self.p(), self.dim(), self.dim());
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                m.add_scaled(c, &self.inner.actions[i]);
            }
        }
        m
    }

    /// Actions of the algebra generators, in generator order.
    pub fn generator_actions(&self) -> &[Mat] {
        self.inner.generators.get_or_init(|| self.algebra().generators().iter().map(|g| self.act(&g.element)).collect())
    }

    /// Actions of the radical basis elements.
    pub fn radical_actions(&self) -> &[Mat] {
        self.inner
            .radical_actions
            .get_or_init(|| self.algebra().radical().basis_vectors().iter().map(|r| self.act(r)).collect())
    }

    /// Actions of the primitive idempotents.
    pub fn idempotent_actions(&self) -> &[Mat] {
        self.inner.idempotent_actions.get_or_init(|| self.algebra().idempotents().iter().map(|e| self.act(e)).collect())
    }

    /// `dim e_t M` for each idempotent.
    pub fn dimension_vector(&self) -> Vec<usize> {
        self.idempotent_actions().iter().map(Mat::rank).collect()
    }

    /// The same module viewed over a structurally equal algebra handle.
    pub fn rebind(&self, alg: &Arc<Algebra>) -> Result<Module> {
        if !same_algebra(self.algebra(), alg) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Module::from_actions_unchecked(alg, self.dim(), self.inner.actions.clone()))
    }

    /// `J^k M` for `k = 0, 1, ...` until zero.
    pub fn radical_series(&self) -> Vec<Subspace> {
        let mut out = vec![Subspace::full(self.p(), self.dim())];
        while !out.last().unwrap().is_zero() {
            let next = self.radical_of(out.last().unwrap());
            out.push(next);
        }
        out
    }

    /// `J·W` for a submodule `W`.
    pub fn radical_of(&self, w: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for r in self.radical_actions() {
            for v in w.basis_vectors() {
                vecs.push(r.mul_vec(&v));
            }
        }
        Subspace::span(self.p(), self.dim(), &vecs)
    }

    /// `soc M = {v : J v = 0}`.
    pub fn socle(&self) -> Subspace {
        let rads = self.radical_actions();
        if rads.is_empty() {
            return Subspace::full(self.p(), self.dim());
        }
        let stacked = rads.iter().skip(1).fold(rads[0].clone(), |acc, r| acc.vstack(r));
        stacked.kernel()
    }

    /// Submodule spanned by the given vectors (closure under the action).
    pub fn submodule_generated(&self, vectors: &[Vec<u32>]) -> Subspace {
        let mut w = Subspace::span(self.p(), self.dim(), vectors);
        loop {
            let mut vecs = w.basis_vectors();
            for g in self.generator_actions() {
                for v in w.basis_vectors() {
                    vecs.push(g.mul_vec(&v));
                }
            }
            let next = Subspace::span(self.p(), self.dim(), &vecs);
            if next.dim() == w.dim() {
                return w;
            }
            w = next;
        }
    }

    pub fn is_submodule(&self, w: &Subspace) -> bool {
        self.generator_actions().iter().all(|g| w.basis_vectors().iter().all(|v| w.contains(&g.mul_vec(v))))
    }

    /// The submodule `W`, in its canonical basis.
    pub fn submodule(&self, w: &Subspace) -> Module {
        let basis = w.basis_vectors();
        let actions = self
            .inner
            .actions
            .iter()
            .map(|a| {
                let cols: Vec<Vec<u32>> = basis.iter().map(|v| w.coords_unchecked(&a.mul_vec(v))).collect();
                Mat::from_columns(self.p(), w.dim(), &cols)
            })
            .collect();
        Module::from_actions_unchecked(self.algebra(), w.dim(), actions)
    }

    /// The quotient `M/W`, with basis the unit vectors on the free columns of `W`.
    pub fn quotient(&self, w: &Subspace) -> Module {
        let free = w.free_columns();
        let actions = self
            .inner
            .actions
            .iter()
            .map(|a| {
                let cols: Vec<Vec<u32>> = free.iter().map(|&c| w.quotient_coords(&a.column(c))).collect();
                Mat::from_columns(self.p(), free.len(), &cols)
            })
            .collect();
        Module::from_actions_unchecked(self.algebra(), free.len(), actions)
    }

    /// Matrix of the projection `M → M/W` matching [`Module::quotient`].
    pub fn quotient_map(&self, w: &Subspace) -> Mat {
        let cols: Vec<Vec<u32>> =
            (0..self.dim()).map(|j| w.quotient_coords(&crate::exactla::unit_vector(self.dim(), j))).collect();
        Mat::from_columns(self.p(), self.dim() - w.dim(), &cols)
    }

    /// Transport the structure along an invertible change of basis `s`
    /// (new action `s ρ s^{-1}`).
    pub fn conjugate(&self, s: &Mat) -> Result<Module> {
        let si = s.inverse().ok_or_else(|| Error::InvalidInput("change of basis is not invertible".into()))?;
        let actions = self.inner.actions.iter().map(|a| s.mul(a).mul(&si)).collect();
        Ok(Module::from_actions_unchecked(self.algebra(), self.dim(), actions))
    }

    pub fn direct_sum(&self, other: &Module) -> Result<Module> {
        if !same_algebra(self.algebra(), other.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        let actions = self.inner.actions.iter().zip(&other.inner.actions).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(Module::from_actions_unchecked(self.algebra(), self.dim() + other.dim(), actions))
    }

    pub fn direct_sum_all(alg: &Arc<Algebra>, parts: &[Module]) -> Result<Module> {
        parts.iter().try_fold(Module::zero(alg), |acc, m| acc.direct_sum(m))
    }

    /// `M^r`.
    pub fn power(&self, r: usize) -> Module {
        let actions = self
            .inner
            .actions
            .iter()
            .map(|a| {
                (1..r).fold(if r == 0 { Mat::zeros(self.p(), 0, 0) } else { a.clone() }, |acc, _| acc.direct_sum(a))
            })
            .collect();
        Module::from_actions_unchecked(self.algebra(), self.dim() * r, actions)
    }

    /// Multiplicities of the simples in `top M = M/JM`.
    pub fn top(&self) -> Vec<usize> {
        let jm = self.radical_of(&Subspace::full(self.p(), self.dim()));
        self.idempotent_actions()
            .iter()
            .map(|e| {
                let img = e.image();
                img.sum(&jm).dim() - jm.dim()
            })
            .collect()
    }

    /// Multiplicities of the simples in `soc M`.
    pub fn socle_multiplicities(&self) -> Vec<usize> {
        let soc = self.socle();
        let basis = soc.basis_vectors();
        self.idempotent_actions()
            .iter()
            .map(|e| {
                let vecs: Vec<Vec<u32>> = basis.iter().map(|v| e.mul_vec(v)).collect();
                Subspace::span(self.p(), self.dim(), &vecs).dim()
            })
            .collect()
    }

    /// `(top, socle)` multiplicity vectors.
    pub fn top_socle(&self) -> (Vec<usize>, Vec<usize>) {
        (self.top(), self.socle_multiplicities())
    }

    /// Dimensions of the radical layers `J^k M / J^{k+1} M`.
    pub fn loewy_layers(&self) -> Vec<usize> {
        let series = self.radical_series();
        series.windows(2).map(|w| w[0].dim() - w[1].dim()).collect()
    }

    /// `ann M = {a : ρ(a) = 0}` as a subspace of `Λ`.
    pub fn annihilator(&self) -> Subspace {
        let n = self.algebra().dim();
        let cols: Vec<Vec<u32>> = self.inner.actions.iter().map(Mat::flatten).collect();
        if self.dim() == 0 {
            return Subspace::full(self.p(), n);
        }
        Mat::from_columns(self.p(), self.dim() * self.dim(), &cols).kernel()
    }

    pub fn is_faithful(&self) -> bool {
        self.annihilator().is_zero()
    }

    /// True iff `M` is projective: `dim P(M) = dim M`.
    pub fn is_projective(&self) -> bool {
        let alg = self.algebra();
        let cover: usize = self.top().iter().enumerate().map(|(t, &m)| m * alg.projective(t).basis.len()).sum();
        cover == self.dim()
    }

    /// True iff `M` is simple.
    pub fn is_simple(&self) -> bool {
        self.dim() == 1
    }

    /// Content hash of the action matrices (basis dependent).
    pub fn content_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.algebra().fingerprint().as_bytes());
        h.update((self.dim() as u64).to_le_bytes());
        for a in self.generator_actions() {
            for x in a.data() {
                h.update(x.to_le_bytes());
            }
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Generator actions as integer rows, for serialisation.
    pub fn generator_rows(&self) -> Vec<(String, Vec<Vec<u32>>)> {
        self.algebra()
            .generators()
            .iter()
            .zip(self.generator_actions())
            .map(|(g, m)| (g.name.clone(), m.row_vecs()))
            .collect()
    }
}

fn scalar_mod_radical(alg: &Algebra, x: &[u32], t: usize) -> u32 {
    // x = c e_t + r with r ∈ J; solve for c over the basis {e_t} ∪ J.
    let e = &alg.idempotents()[t];
    let mut cols = vec![e.clone()];
    cols.extend(alg.radical().basis_vectors());
    let m = Mat::from_columns(alg.p(), alg.dim(), &cols);
    m.solve(x).map_or(0, |s| s[0])
}

/// An intertwining map `source → target`; `matrix` is `target.dim × source.dim`.
#[derive(Clone, Debug)]
pub struct ModMap {
    pub source: Module,
    pub target: Module,
    pub matrix: Mat,
}

impl ModMap {
    /// Wrap a matrix after checking it commutes with every generator.
    pub fn new(source: &Module, target: &Module, matrix: Mat) -> Result<ModMap> {
        let f = ModMap::new_unchecked(source, target, matrix)?;
        if !f.is_homomorphism() {
            return Err(Error::InvalidInput("matrix does not intertwine the module actions".into()));
        }
        Ok(f)
    }

    pub fn new_unchecked(source: &Module, target: &Module, matrix: Mat) -> Result<ModMap> {
        if !same_algebra(source.algebra(), target.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::SizeMismatch(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(ModMap { source: source.clone(), target: target.clone(), matrix })
    }

    pub fn identity(m: &Module) -> ModMap {
        ModMap { source: m.clone(), target: m.clone(), matrix: Mat::identity(m.p(), m.dim()) }
    }

    pub fn is_homomorphism(&self) -> bool {
        self.source
            .generator_actions()
            .iter()
            .zip(self.target.generator_actions())
            .all(|(a, b)| self.matrix.mul(a) == b.mul(&self.matrix))
    }

    pub fn compose(&self, first: &ModMap) -> Result<ModMap> {
        ModMap::new_unchecked(&first.source, &self.target, self.matrix.mul(&first.matrix))
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }

    pub fn image(&self) -> Subspace {
        self.matrix.image()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_mono(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_epi(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }
}

/// Linear system whose solutions are the intertwiners `M → N`, in the
/// row-major flattening of `N.dim × M.dim` matrices.
fn intertwining_system(m: &Module, n: &Module) -> Mat {
    let (r, c) = (n.dim(), m.dim());
    let p = m.p();
    let gens_m = m.generator_actions();
    let gens_n = n.generator_actions();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (a, b) in gens_m.iter().zip(gens_n) {
        // (F A - B F)_{ij} = Σ_k F_ik A_kj - Σ_l B_il F_lj
        for i in 0..r {
            for j in 0..c {
                let mut row = vec![0u32; r * c];
                for k in 0..c {
                    let v = a.get(k, j);
                    if v != 0 {
                        row[i * c + k] = (row[i * c + k] + v) % p;
                    }
                }
                for l in 0..r {
                    let v = b.get(i, l);
                    if v != 0 {
                        row[l * c + j] = (row[l * c + j] + p - v) % p;
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    Mat::from_rows(p, r * c, &rows)
}

/// Basis of `Hom_Λ(M, N)` as matrices.
pub fn hom_basis(m: &Module, n: &Module) -> Result<Vec<Mat>> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let (r, c) = (n.dim(), m.dim());
    if r == 0 || c == 0 {
        return Ok(Vec::new());
    }
    let sys = intertwining_system(m, n);
    let ker = if sys.rows() == 0 { Subspace::full(m.p(), r * c) } else { sys.kernel() };
    Ok(ker.basis_vectors().into_iter().map(|v| Mat::from_vec(m.p(), r, c, v)).collect())
}

/// Basis of `Hom_Λ(M, N)` as module maps.
pub fn hom_space(m: &Module, n: &Module) -> Result<Vec<ModMap>> {
    Ok(hom_basis(m, n)?.into_iter().map(|f| ModMap { source: m.clone(), target: n.clone(), matrix: f }).collect())
}

pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let (r, c) = (n.dim(), m.dim());
    if r == 0 || c == 0 {
        return Ok(0);
    }
    let sys = intertwining_system(m, n);
    Ok(r * c - sys.rank())
}

/// `(top, socle)` multiplicity vectors of `m`.
pub fn top_socle(m: &Module) -> (Vec<usize>, Vec<usize>) {
    m.top_socle()
}

pub fn is_projective(m: &Module) -> bool {
    m.is_projective()
}

/// Faithfulness together with the annihilator.
pub fn is_faithful(m: &Module) -> (bool, Subspace) {
    let ann = m.annihilator();
    (ann.is_zero(), ann)
}

/// One `(S_t, P_t)` pair per primitive idempotent.
pub fn simples_and_projectives(alg: &Arc<Algebra>) -> Vec<(Module, Module)> {
    (0..alg.num_simples()).map(|t| (Module::simple(alg, t), Module::projective(alg, t))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algdef::AlgebraSpec;

    fn k2x() -> Arc<Algebra> {
        Algebra::truncated_polynomial(2, 2).unwrap()
    }
    fn k2xy() -> Arc<Algebra> {
        Algebra::local_radical_square_zero(2, 2).unwrap()
    }
    fn a2() -> Arc<Algebra> {
        Algebra::from_spec(&AlgebraSpec::quiver(2, 2, &[("a", 1, 2)], &[])).unwrap()
    }
    fn m(p: u32, rows: &[&[i64]]) -> Mat {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_rows_i64(p, cols, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn make_module_examples() {
        let a = k2x();
        let reg = make_module(&a, vec![m(2, &[&[0, 0], &[1, 0]])]).unwrap();
        assert!(is_isomorphic(&reg, &Module::regular(&a)).unwrap().is_isomorphic());
        assert!(matches!(make_module(&a, vec![m(2, &[&[1]])]), Err(Error::RelationViolation(_))));
        let b = k2xy();
        let k = make_module(&b, vec![m(2, &[&[0]]), m(2, &[&[0]])]).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(matches!(make_module(&b, vec![m(2, &[&[0]])]), Err(Error::SizeMismatch(_))));
    }

    #[test]
    fn hom_examples() {
        let a = k2x();
        let k = Module::simple(&a, 0);
        assert_eq!(hom_dim(&k, &Module::regular(&a)).unwrap(), 1);
        let b = k2xy();
        let kb = Module::simple(&b, 0);
        assert_eq!(hom_dim(&kb, &Module::regular(&b)).unwrap(), 2);
        assert_eq!(hom_dim(&Module::regular(&b), &kb.power(3)).unwrap(), 3);
        for f in hom_space(&kb, &Module::regular(&b)).unwrap() {
            assert!(f.is_homomorphism());
        }
    }

    #[test]
    fn top_socle_examples() {
        let b = k2xy();
        assert_eq!(Module::regular(&b).top_socle(), (vec![1], vec![2]));
        let q = a2();
        let p1 = Module::projective(&q, 0);
        assert_eq!(p1.dim(), 2);
        assert_eq!(p1.top_socle(), (vec![1, 0], vec![0, 1]));
        let k = Module::simple(&b, 0).power(3);
        assert_eq!(k.top_socle(), (vec![3], vec![3]));
    }

    #[test]
    fn simples_and_projectives_examples() {
        let b = k2xy();
        let sp = simples_and_projectives(&b);
        assert_eq!(sp.len(), 1);
        assert_eq!((sp[0].0.dim(), sp[0].1.dim()), (1, 3));
        let q = a2();
        let sp = simples_and_projectives(&q);
        assert_eq!((sp[0].0.dim(), sp[0].1.dim()), (1, 2));
        assert_eq!((sp[1].0.dim(), sp[1].1.dim()), (1, 1));
        assert!(is_isomorphic(&sp[1].0, &sp[1].1).unwrap().is_isomorphic());
        let prod = Algebra::from_spec(&AlgebraSpec::quiver(2, 2, &[("x", 2, 2)], &["x*x"])).unwrap();
        let dims: Vec<usize> = simples_and_projectives(&prod).iter().map(|(_, p)| p.dim()).collect();
        assert_eq!(dims, vec![1, 2]);
    }

    #[test]
    fn projectivity_examples() {
        let a = k2x();
        assert!(Module::regular(&a).is_projective());
        assert!(!Module::simple(&a, 0).is_projective());
        let q = a2();
        let m = Module::projective(&q, 0).direct_sum(&Module::simple(&q, 1)).unwrap();
        assert!(m.is_projective());
        assert!(Module::zero(&q).is_projective());
    }

    #[test]
    fn faithfulness_examples() {
        let b = k2xy();
        assert!(Module::regular(&b).is_faithful());
        let (f, ann) = is_faithful(&Module::simple(&b, 0));
        assert!(!f);
        assert_eq!(ann.dim(), 2);
        assert_eq!(ann, *b.radical());
        let m = Module::regular(&b).direct_sum(&Module::simple(&b, 0)).unwrap();
        assert!(m.is_faithful());
    }

    #[test]
    fn quotient_and_submodule_are_modules() {
        let b = k2xy();
        let reg = Module::regular(&b);
        let soc = reg.socle();
        reg.submodule(&soc).check().unwrap();
        let q = reg.quotient(&soc);
        q.check().unwrap();
        assert_eq!(q.dim(), 1);
    }
}
