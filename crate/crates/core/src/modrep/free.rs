//! Finitely generated projectives `⊕ Λe_t`, maps between them, projective
//! covers and minimal projective resolutions.
//!
//! A map between free sums is stored by its generator images: generator `l`
//! of the source goes to `Σ_j a_lj · g_j` with `a_lj ∈ e_{s_l} Λ e_{t_j}`.
//! This is the form that dualises cleanly (`Hom(−, Λ)`) and that turns
//! `Hom(−, N)` into block matrices `ρ_N(a_lj)`.

use std::sync::{Arc, OnceLock};

use super::{ModMap, Module};
use crate::algdef::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Mat, Subspace};

/// `⊕_l Λe_{tops[l]}`, with blocks laid out in order.
#[derive(Clone, Debug)]
pub struct FreeSum {
    alg: Arc<Algebra>,
    tops: Vec<usize>,
    offsets: Vec<usize>,
    dim: usize,
    module: OnceLock<Module>,
}

impl FreeSum {
    pub fn new(alg: &Arc<Algebra>, tops: Vec<usize>) -> FreeSum {
        let mut offsets = Vec::with_capacity(tops.len());
        let mut dim = 0;
        for &t in &tops {
            offsets.push(dim);
            dim += alg.projective(t).basis.len();
        }
        FreeSum { alg: Arc::clone(alg), tops, offsets, dim, module: OnceLock::new() }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn tops(&self) -> &[usize] {
        &self.tops
    }

    pub fn rank(&self) -> usize {
        self.tops.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn offset(&self, l: usize) -> usize {
        self.offsets[l]
    }

    pub fn block_dim(&self, l: usize) -> usize {
        self.alg.projective(self.tops[l]).basis.len()
    }

    /// The underlying module (block-diagonal actions).
    pub fn module(&self) -> &Module {
        self.module.get_or_init(|| {
            let p = self.alg.p();
            let actions = (0..self.alg.dim())
                .map(|b| {
                    let mut m = Mat::zeros(p, self.dim, self.dim);
                    for (l, &t) in self.tops.iter().enumerate() {
                        m.set_block(self.offsets[l], self.offsets[l], &self.alg.projective(t).actions[b]);
                    }
                    m
                })
                .collect();
            Module::from_actions_unchecked(&self.alg, self.dim, actions)
        })
    }

    /// Multiplicity of each `P_t`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut out = vec![0; self.alg.num_simples()];
        for &t in &self.tops {
            out[t] += 1;
        }
        out
    }

    /// The element `a ∈ Λe_t` placed in block `l`.
    pub fn embed(&self, l: usize, a: &[u32]) -> Vec<u32> {
        let mut v = vec![0u32; self.dim];
        let pd = self.alg.projective(self.tops[l]);
        let c = pd.subspace.coords_unchecked(a);
        v[self.offsets[l]..self.offsets[l] + c.len()].copy_from_slice(&c);
        v
    }

    /// Block `l` of `v`, as an element of `Λ`.
    pub fn component(&self, v: &[u32], l: usize) -> Vec<u32> {
        let pd = self.alg.projective(self.tops[l]);
        let c = &v[self.offsets[l]..self.offsets[l] + pd.basis.len()];
        let mut out = vec![0u32; self.alg.dim()];
        let p = self.alg.p();
        for (k, &x) in c.iter().enumerate() {
            if x != 0 {
                for (o, &u) in out.iter_mut().zip(&pd.basis[k]) {
                    *o = (*o + x * u) % p;
                }
            }
        }
        out
    }

    /// The `l`-th generator `e_t` as a vector.
    pub fn generator(&self, l: usize) -> Vec<u32> {
        self.embed(l, &self.alg.idempotents()[self.tops[l]])
    }

    /// Matrix of the map `P → M` sending generator `l` to `images[l] ∈ e_{t_l} M`.
    pub fn map_to(&self, m: &Module, images: &[Vec<u32>]) -> Mat {
        let mut cols = Vec::with_capacity(self.dim);
        for (l, &t) in self.tops.iter().enumerate() {
            for u in &self.alg.projective(t).basis {
                cols.push(m.act(u).mul_vec(&images[l]));
            }
        }
        Mat::from_columns(m.p(), m.dim(), &cols)
    }
}

/// A homomorphism between free sums given by generator coefficients.
#[derive(Clone, Debug)]
pub struct FreeMap {
    pub source: FreeSum,
    pub target: FreeSum,
    /// `coeffs[l][j] = a_lj ∈ e_{s_l} Λ e_{t_j}`.
    pub coeffs: Vec<Vec<Vec<u32>>>,
}

impl FreeMap {
    /// The map sending generator `l` of `source` to `images[l]` (a vector of `target`).
    pub fn from_images(source: FreeSum, target: FreeSum, images: &[Vec<u32>]) -> FreeMap {
        let coeffs = images.iter().map(|z| (0..target.rank()).map(|j| target.component(z, j)).collect()).collect();
        FreeMap { source, target, coeffs }
    }

    /// Dense matrix, `target.dim × source.dim`.
    pub fn matrix(&self) -> Mat {
        let alg = self.source.algebra();
        let mut cols = Vec::with_capacity(self.source.dim());
        for (l, &s) in self.source.tops().iter().enumerate() {
            for u in &alg.projective(s).basis {
                let mut col = vec![0u32; self.target.dim()];
                for (j, a) in self.coeffs[l].iter().enumerate() {
                    if a.iter().all(|&x| x == 0) {
                        continue;
                    }
                    let ua = alg.mul(u, a);
                    let v = self.target.embed(j, &ua);
                    for (c, x) in col.iter_mut().zip(v) {
                        *c = (*c + x) % alg.p();
                    }
                }
                cols.push(col);
            }
        }
        Mat::from_columns(alg.p(), self.target.dim(), &cols)
    }

    pub fn as_modmap(&self) -> ModMap {
        ModMap { source: self.source.module().clone(), target: self.target.module().clone(), matrix: self.matrix() }
    }

    /// `Hom_Λ(−, Λ)` applied to this map: a map of free right modules,
    /// i.e. of free sums over the opposite algebra, in the reverse direction.
    pub fn dual(&self) -> FreeMap {
        let op = self.source.algebra().opposite();
        let source = FreeSum::new(&op, self.target.tops().to_vec());
        let target = FreeSum::new(&op, self.source.tops().to_vec());
        let coeffs = (0..self.target.rank())
            .map(|j| (0..self.source.rank()).map(|l| self.coeffs[l][j].clone()).collect())
            .collect();
        FreeMap { source, target, coeffs }
    }

    /// The induced map `Hom(target, N) → Hom(source, N)` in the coordinates
    /// `Hom(P, N) ≅ ⊕ e_t N`. Columns use a basis of each `e_{t_j} N`; rows
    /// embed `⊕_l e_{s_l} N` into `⊕_l N`.
    pub fn hom_matrix(&self, n: &Module, bases: &[Vec<Vec<u32>>]) -> Mat {
        let d = n.dim();
        let p = n.p();
        let cols_total: usize = self.target.tops().iter().map(|&t| bases[t].len()).sum();
        let mut m = Mat::zeros(p, self.source.rank() * d, cols_total);
        let mut col = 0;
        for (j, &t) in self.target.tops().iter().enumerate() {
            for b in &bases[t] {
                for l in 0..self.source.rank() {
                    let a = &self.coeffs[l][j];
                    if a.iter().all(|&x| x == 0) {
                        continue;
                    }
                    let v = n.act(a).mul_vec(b);
                    for (r, x) in v.into_iter().enumerate() {
                        m.set(l * d + r, col, x);
                    }
                }
                col += 1;
            }
        }
        m
    }
}

/// Bases of `e_t N` for every idempotent.
pub fn corner_bases(n: &Module) -> Vec<Vec<Vec<u32>>> {
    n.idempotent_actions().iter().map(|e| e.image().basis_vectors()).collect()
}

/// Minimal generators of the submodule `w ⊆ m`: a basis of `w` modulo `J w`
/// chosen inside the corners `e_t w`. Returns `(t, vector)` pairs.
pub(crate) fn top_generators(m: &Module, w: &Subspace) -> Vec<(usize, Vec<u32>)> {
    let mut span = m.radical_of(w);
    let mut out = Vec::new();
    let basis = w.basis_vectors();
    for (t, e) in m.idempotent_actions().iter().enumerate() {
        for v in &basis {
            let x = e.mul_vec(v);
            if !span.contains(&x) {
                span = span.sum(&Subspace::span(m.p(), m.dim(), std::slice::from_ref(&x)));
                out.push((t, x));
            }
            if span.dim() == w.dim() {
                break;
            }
        }
    }
    out
}

/// The projective cover `P(M) ↠ M`.
pub fn projective_cover(m: &Module) -> Result<ModMap> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let (p, images) = cover_data(m, &Subspace::full(m.p(), m.dim()));
    let matrix = p.map_to(m, &images);
    Ok(ModMap { source: p.module().clone(), target: m.clone(), matrix })
}

/// Free sum covering the submodule `w ⊆ m` and the generator images.
pub(crate) fn cover_data(m: &Module, w: &Subspace) -> (FreeSum, Vec<Vec<u32>>) {
    let gens = top_generators(m, w);
    let tops = gens.iter().map(|(t, _)| *t).collect();
    let images = gens.into_iter().map(|(_, v)| v).collect();
    (FreeSum::new(m.algebra(), tops), images)
}

/// `ΩM`, the kernel of the projective cover.
pub fn syzygy(m: &Module) -> Module {
    if m.is_zero() {
        return Module::zero(m.algebra());
    }
    let cover = projective_cover(m).expect("nonzero module");
    cover.source.submodule(&cover.kernel())
}

/// A minimal projective resolution `... → P_1 → P_0 → M → 0`.
#[derive(Clone, Debug)]
pub struct Resolution {
    base: Module,
    terms: Vec<FreeSum>,
    augmentation_images: Vec<Vec<u32>>,
    augmentation: Mat,
    /// `differentials[i - 1] = d_i : P_i → P_{i-1}`.
    differentials: Vec<FreeMap>,
    /// `kernels[i] = ker(P_i → P_{i-1})`, i.e. `Ω^{i+1} M ⊆ P_i`.
    kernels: Vec<Subspace>,
    minimal: bool,
}

/// Minimal projective resolution of `m` with terms `P_0..P_length`.
pub fn minimal_resolution(m: &Module, length: usize) -> Resolution {
    let alg = m.algebra();
    let (p0, images) =
        if m.is_zero() { (FreeSum::new(alg, vec![]), vec![]) } else { cover_data(m, &Subspace::full(m.p(), m.dim())) };
    let augmentation = p0.map_to(m, &images);
    let k0 = if p0.dim() == 0 { Subspace::zero(m.p(), 0) } else { augmentation.kernel() };
    let mut res = Resolution {
        base: m.clone(),
        terms: vec![p0],
        augmentation_images: images,
        augmentation,
        differentials: Vec::new(),
        kernels: vec![k0],
        minimal: true,
    };
    res.minimal = res.check_minimal(0);
    res.extend_to(length);
    res
}

impl Resolution {
    /// Compute further terms until `P_length` exists.
    pub fn extend_to(&mut self, length: usize) {
        while self.terms.len() <= length {
            let i = self.terms.len();
            let prev = &self.terms[i - 1];
            let k = &self.kernels[i - 1];
            let (pi, images) =
                if k.is_zero() { (FreeSum::new(prev.algebra(), vec![]), vec![]) } else { cover_data(prev.module(), k) };
            let d = FreeMap::from_images(pi.clone(), prev.clone(), &images);
            let ker = if pi.dim() == 0 { Subspace::zero(prev.algebra().p(), 0) } else { d.matrix().kernel() };
            self.terms.push(pi);
            self.differentials.push(d);
            self.kernels.push(ker);
            self.minimal &= self.check_minimal(i);
        }
    }

    fn check_minimal(&self, i: usize) -> bool {
        let p = &self.terms[i];
        if p.dim() == 0 {
            return true;
        }
        let jp = p.module().radical_of(&Subspace::full(p.algebra().p(), p.dim()));
        self.kernels[i].is_subspace_of(&jp)
    }

    pub fn base(&self) -> &Module {
        &self.base
    }

    /// Index of the last computed term.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, i: usize) -> &FreeSum {
        &self.terms[i]
    }

    pub fn terms(&self) -> &[FreeSum] {
        &self.terms
    }

    /// Ranks (number of indecomposable summands) of `P_0, P_1, ...`.
    pub fn ranks(&self) -> Vec<usize> {
        self.terms.iter().map(FreeSum::rank).collect()
    }

    /// `d_i : P_i → P_{i-1}` for `i ≥ 1`.
    pub fn differential(&self, i: usize) -> &FreeMap {
        &self.differentials[i - 1]
    }

    pub fn augmentation(&self) -> ModMap {
        ModMap { source: self.terms[0].module().clone(), target: self.base.clone(), matrix: self.augmentation.clone() }
    }

    pub fn augmentation_images(&self) -> &[Vec<u32>] {
        &self.augmentation_images
    }

    /// `Ω^i M ⊆ P_{i-1}` for `1 ≤ i ≤ length + 1`.
    pub fn syzygy_subspace(&self, i: usize) -> &Subspace {
        &self.kernels[i - 1]
    }

    /// `Ω^i M` as a module (`Ω^0 M = M`).
    pub fn syzygy(&self, i: usize) -> Module {
        if i == 0 {
            return self.base.clone();
        }
        let p = &self.terms[i - 1];
        if p.dim() == 0 {
            return Module::zero(p.algebra());
        }
        p.module().submodule(&self.kernels[i - 1])
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Exactness at every computed term: `im d_{i+1} = ker d_i` and the
    /// augmentation is onto.
    pub fn is_exact(&self) -> bool {
        if self.augmentation.rank() != self.base.dim() {
            return false;
        }
        (1..=self.length()).all(|i| {
            let d = self.differential(i);
            let img = if d.source.dim() == 0 {
                Subspace::zero(d.target.algebra().p(), d.target.dim())
            } else {
                d.matrix().image()
            };
            img == self.kernels[i - 1]
        })
    }

    /// Smallest `i` with `P_i = 0`, if within the computed range.
    pub fn projective_dimension(&self) -> Option<usize> {
        if self.base.is_zero() {
            return Some(0);
        }
        self.terms.iter().position(|t| t.rank() == 0).map(|i| i - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algdef::AlgebraSpec;

    #[test]
    fn cover_examples() {
        let b = Algebra::local_radical_square_zero(2, 2).unwrap();
        let k = Module::simple(&b, 0);
        let c = projective_cover(&k).unwrap();
        assert_eq!(c.source.dim(), 3);
        assert!(c.is_epi() && c.is_homomorphism());
        let reg = Module::regular(&b);
        let c = projective_cover(&reg).unwrap();
        assert_eq!(c.source.dim(), 3);
        assert!(c.is_iso());
        let q = Algebra::from_spec(&AlgebraSpec::quiver(2, 2, &[("a", 1, 2)], &[])).unwrap();
        let c = projective_cover(&Module::simple(&q, 1)).unwrap();
        assert_eq!(c.source.dim(), 1);
        assert!(matches!(projective_cover(&Module::zero(&q)), Err(Error::ZeroModule)));
    }

    #[test]
    fn resolution_of_projective_stops() {
        let b = Algebra::local_radical_square_zero(2, 2).unwrap();
        let r = minimal_resolution(&Module::regular(&b), 3);
        assert_eq!(r.ranks(), vec![1, 0, 0, 0]);
        assert_eq!(r.projective_dimension(), Some(0));
        assert!(r.is_exact() && r.is_minimal());
    }

    #[test]
    fn periodic_resolution_over_dual_numbers() {
        let a = Algebra::truncated_polynomial(2, 2).unwrap();
        let r = minimal_resolution(&Module::simple(&a, 0), 4);
        assert_eq!(r.ranks(), vec![1, 1, 1, 1, 1]);
        for i in 1..=4 {
            // multiplication by x: the generator goes to x
            let d = r.differential(i);
            assert_eq!(d.coeffs[0][0], vec![0, 1]);
        }
        assert!(r.is_exact() && r.is_minimal());
    }

    #[test]
    fn syzygies_double_over_square_zero_plane() {
        let b = Algebra::local_radical_square_zero(2, 2).unwrap();
        let r = minimal_resolution(&Module::simple(&b, 0), 4);
        assert_eq!(r.ranks(), vec![1, 2, 4, 8, 16]);
        assert!(r.is_exact() && r.is_minimal());
        assert_eq!(syzygy(&Module::simple(&b, 0)).dim(), 2);
    }

    #[test]
    fn dual_of_free_map_is_adjoint() {
        let q = Algebra::from_spec(&AlgebraSpec::quiver(3, 2, &[("a", 1, 2)], &[])).unwrap();
        let r = minimal_resolution(&Module::simple(&q, 0), 1);
        let d = r.differential(1);
        let dd = d.dual().dual();
        assert_eq!(dd.matrix(), d.matrix());
    }
}
