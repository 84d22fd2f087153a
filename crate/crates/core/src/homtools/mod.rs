//! Dualities, the transpose, evaluation maps, tensor products and stable Hom.
//!
//! Right modules are left modules over the opposite algebra. Applying a
//! duality twice lands over `op(op(A))`, which has the same structure
//! constants as `A`; results are rebound to the caller's handle.

mod ext;

use std::sync::Arc;

use serde::Serialize;

pub use ext::{
    ext_profile, ext_profile_from, orthogonality_profile, Certification, ExtProfile, Flag, OrthogonalityProfile,
};

use crate::algdef::{same_algebra, Algebra};
use crate::error::{Error, Result};
use crate::exactla::{Mat, Subspace};
use crate::modrep::{decompose, hom_basis, minimal_resolution, projective_cover, FreeMap, ModMap, Module};

/// `D M = Hom_k(M, k)` over the opposite algebra (transposed actions).
pub fn d_dual(m: &Module) -> Module {
    let op = m.algebra().opposite();
    let actions = m.actions().iter().map(Mat::transpose).collect();
    Module::from_actions_unchecked(&op, m.dim(), actions)
}

/// `D` on a map `f: M → N`, giving `D f: D N → D M`.
pub fn d_dual_map(f: &ModMap) -> ModMap {
    ModMap { source: d_dual(&f.target), target: d_dual(&f.source), matrix: f.matrix.transpose() }
}

/// `M* = Hom_Λ(M, Λ)` with the basis used for its coordinates.
#[derive(Clone, Debug)]
pub struct StarDual {
    /// Left module over the opposite algebra.
    pub module: Module,
    /// Basis maps `M → Λ` (each `dim Λ × dim M`), in rref order.
    pub basis: Vec<Mat>,
    space: Subspace,
    base: Module,
}

impl StarDual {
    /// Coordinates of a homomorphism `M → Λ` in [`StarDual::basis`].
    pub fn coords(&self, f: &Mat) -> Option<Vec<u32>> {
        self.space.coords(&f.flatten())
    }

    /// The homomorphism `M → Λ` with the given coordinates.
    pub fn element(&self, v: &[u32]) -> Mat {
        let flat = self.space.combine(v);
        Mat::from_vec(self.base.p(), self.base.algebra().dim(), self.base.dim(), flat)
    }
}

fn unflatten_basis(p: u32, rows: usize, cols: usize, s: &Subspace) -> Vec<Mat> {
    s.basis_vectors().into_iter().map(|v| Mat::from_vec(p, rows, cols, v)).collect()
}

/// `M*` together with its coordinate data.
pub fn dual_star_with_basis(m: &Module) -> Result<StarDual> {
    let alg = m.algebra();
    let p = m.p();
    let n = alg.dim();
    let reg = Module::regular(alg);
    let hb = hom_basis(m, &reg)?;
    let flat: Vec<Vec<u32>> = hb.iter().map(Mat::flatten).collect();
    let space = Subspace::span(p, n * m.dim(), &flat);
    let basis = unflatten_basis(p, n, m.dim(), &space);
    let s = basis.len();
    // (f·b)(x) = f(x)·b, i.e. f·b = R_b ∘ f.
    let actions = (0..n)
        .map(|b| {
            let cols: Vec<Vec<u32>> =
                basis.iter().map(|f| space.coords_unchecked(&alg.rmul(b).mul(f).flatten())).collect();
            Mat::from_columns(p, s, &cols)
        })
        .collect();
    let module = Module::from_actions_unchecked(&alg.opposite(), s, actions);
    Ok(StarDual { module, basis, space, base: m.clone() })
}

/// `M* = Hom_Λ(M, Λ)` as a left module over the opposite algebra.
pub fn dual_star(m: &Module) -> Result<Module> {
    Ok(dual_star_with_basis(m)?.module)
}

/// `(−)*` on a map `f: M → N`: precomposition `N* → M*`.
pub fn dual_star_map(f: &ModMap) -> Result<ModMap> {
    let dm = dual_star_with_basis(&f.source)?;
    let dn = dual_star_with_basis(&f.target)?;
    let cols: Vec<Vec<u32>> = dn
        .basis
        .iter()
        .map(|g| dm.coords(&g.mul(&f.matrix)).ok_or_else(|| Error::Internal("precomposition left M*".into())))
        .collect::<Result<_>>()?;
    let matrix = Mat::from_columns(f.source.p(), dm.module.dim(), &cols);
    Ok(ModMap { source: dn.module, target: dm.module, matrix })
}

/// `Tr M` with the minimal presentation it was computed from.
#[derive(Clone, Debug)]
pub struct Transpose {
    /// Module over the opposite algebra.
    pub module: Module,
    /// `f: P_1 → P_0` from the minimal presentation of `M`.
    pub presentation: FreeMap,
    /// `f*: P_0* → P_1*`; `Tr M = coker f*`.
    pub dual: FreeMap,
}

/// `Tr M = coker(f*)` for the minimal presentation `P_1 → P_0 → M → 0`.
pub fn transpose(m: &Module) -> Result<Transpose> {
    let res = minimal_resolution(m, 1);
    let f = res.differential(1).clone();
    let fd = f.dual();
    let p1s = fd.target.module();
    let module =
        if fd.source.dim() == 0 || fd.target.dim() == 0 { p1s.clone() } else { p1s.quotient(&fd.matrix().image()) };
    Ok(Transpose { module, presentation: f, dual: fd })
}

/// The evaluation map `σ_M: M → M**` and its defects.
#[derive(Clone, Debug, Serialize)]
pub struct SigmaReport {
    #[serde(skip)]
    pub sigma: Option<ModMap>,
    pub dim: usize,
    pub double_dual_dim: usize,
    pub kernel_dim: usize,
    pub cokernel_dim: usize,
    pub torsionless: bool,
    pub reflexive: bool,
}

/// `σ_M(x)(f) = f(x)`, written in a basis of `M** = Hom_op(M*, Λ)`.
pub fn eval_sigma(m: &Module) -> Result<SigmaReport> {
    let alg = m.algebra();
    let p = m.p();
    let star = dual_star_with_basis(m)?;
    let dd = dual_star_with_basis(&star.module)?;
    let double = dd.module.rebind(alg)?;
    let s = star.basis.len();
    let cols: Vec<Vec<u32>> = (0..m.dim())
        .map(|i| {
            let fx: Vec<Vec<u32>> = star.basis.iter().map(|f| f.column(i)).collect();
            let g = Mat::from_columns(p, alg.dim(), &fx);
            debug_assert_eq!(g.cols(), s);
            dd.coords(&g).ok_or_else(|| Error::Internal("σ(x) is not a homomorphism".into()))
        })
        .collect::<Result<_>>()?;
    let matrix = Mat::from_columns(p, double.dim(), &cols);
    let rank = if m.dim() == 0 || double.dim() == 0 { 0 } else { matrix.rank() };
    let kernel_dim = m.dim() - rank;
    let cokernel_dim = double.dim() - rank;
    Ok(SigmaReport {
        dim: m.dim(),
        double_dual_dim: double.dim(),
        sigma: Some(ModMap { source: m.clone(), target: double, matrix }),
        kernel_dim,
        cokernel_dim,
        torsionless: kernel_dim == 0,
        reflexive: kernel_dim == 0 && cokernel_dim == 0,
    })
}

pub fn is_torsionless(m: &Module) -> Result<bool> {
    Ok(eval_sigma(m)?.torsionless)
}

pub fn is_reflexive(m: &Module) -> Result<bool> {
    Ok(eval_sigma(m)?.reflexive)
}

/// `X ⊗_Λ N` realised as the quotient of `X ⊗_k N` by the balancing relations.
/// Index `(i, j)` of `X ⊗_k N` is `i · dim N + j`.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub dim: usize,
    pub left_dim: usize,
    pub right_dim: usize,
    /// Span of `x·g ⊗ n − x ⊗ g·n` over algebra generators `g`.
    pub relations: Subspace,
}

fn check_right_left(x: &Module, n: &Module) -> Result<()> {
    if !same_algebra(x.algebra(), &n.algebra().opposite()) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(())
}

/// `X ⊗_Λ N` for a right module `X` (over the opposite algebra) and a left module `N`.
pub fn tensor_over_algebra(x: &Module, n: &Module) -> Result<Tensor> {
    check_right_left(x, n)?;
    let p = n.p();
    let (a, b) = (x.dim(), n.dim());
    let total = a * b;
    let mut gens = Vec::new();
    if total > 0 {
        for g in n.algebra().generators() {
            let lhs = x.act(&g.element).kron(&Mat::identity(p, b));
            let rhs = Mat::identity(p, a).kron(&n.act(&g.element));
            gens.extend(lhs.sub(&rhs).columns());
        }
    }
    let relations = Subspace::span(p, total, &gens);
    Ok(Tensor { dim: total - relations.dim(), left_dim: a, right_dim: b, relations })
}

/// `ζ(N): X ⊗_Λ N → Hom_Λ(X*, N)`, `ζ(x ⊗ n)(g) = g(x)·n`.
#[derive(Clone, Debug, Serialize)]
pub struct ZetaReport {
    pub tensor_dim: usize,
    pub hom_dim: usize,
    pub kernel_dim: usize,
    pub cokernel_dim: usize,
}

/// `ζ(N)` for a right module `X` (over the opposite algebra) and a left module `N`.
pub fn zeta_map(x: &Module, n: &Module) -> Result<ZetaReport> {
    check_right_left(x, n)?;
    let alg = n.algebra();
    let p = n.p();
    let tensor = tensor_over_algebra(x, n)?;
    let star = dual_star_with_basis(x)?;
    let xs = star.module.rebind(alg)?;
    let hb = hom_basis(&xs, n)?;
    let s = xs.dim();
    let flat: Vec<Vec<u32>> = hb.iter().map(Mat::flatten).collect();
    let space = Subspace::span(p, n.dim() * s, &flat);
    let (a, b) = (x.dim(), n.dim());
    let mut cols = Vec::with_capacity(a * b);
    for i in 0..a {
        let gx: Vec<Mat> = star.basis.iter().map(|g| n.act(&g.column(i))).collect();
        for j in 0..b {
            let img: Vec<Vec<u32>> = gx.iter().map(|r| r.column(j)).collect();
            let z = Mat::from_columns(p, b, &img);
            let c = space.coords(&z.flatten()).ok_or_else(|| Error::Internal("ζ(x⊗n) is not a homomorphism".into()))?;
            cols.push(c);
        }
    }
    let hom_dim = space.dim();
    let rank = if cols.is_empty() || hom_dim == 0 { 0 } else { Mat::from_columns(p, hom_dim, &cols).rank() };
    Ok(ZetaReport { tensor_dim: tensor.dim, hom_dim, kernel_dim: tensor.dim - rank, cokernel_dim: hom_dim - rank })
}

/// `M ≅ core ⊕ projective_part` with no projective summand in `core`.
#[derive(Clone, Debug)]
pub struct Stripped {
    pub core: Module,
    pub projective_part: Module,
    /// Multiplicity of each indecomposable projective in `projective_part`.
    pub projective_multiplicities: Vec<usize>,
}

pub fn strip_projectives(m: &Module) -> Result<Stripped> {
    let alg = m.algebra();
    let dec = decompose(m)?;
    let Some(summands) = dec.complete() else {
        return Err(Error::Undetermined("decomposition needed to strip projective summands".into()));
    };
    let mut core = Vec::new();
    let mut proj = Vec::new();
    let mut mult = vec![0; alg.num_simples()];
    for s in summands {
        if s.module.is_projective() {
            for (t, c) in s.module.top().into_iter().enumerate() {
                mult[t] += c;
            }
            proj.push(s.module.clone());
        } else {
            core.push(s.module.clone());
        }
    }
    Ok(Stripped {
        core: Module::direct_sum_all(alg, &core)?,
        projective_part: Module::direct_sum_all(alg, &proj)?,
        projective_multiplicities: mult,
    })
}

fn flat_subspace(p: u32, len: usize, maps: impl Iterator<Item = Mat>) -> Subspace {
    let v: Vec<Vec<u32>> = maps.map(|f| f.flatten()).collect();
    Subspace::span(p, len, &v)
}

/// `(dim Hom(M,N)/P(M,N), dim Hom(M,N)/I(M,N))`: Hom modulo maps through
/// projectives and modulo maps through injectives.
pub fn stable_hom_dims(m: &Module, n: &Module) -> Result<(usize, usize)> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let alg = m.algebra();
    let p = m.p();
    if m.is_zero() || n.is_zero() {
        return Ok((0, 0));
    }
    let total = hom_basis(m, n)?.len();
    let len = n.dim() * m.dim();
    // Through projectives: through the cover P(N) → N.
    let cover = projective_cover(n)?;
    let through_p = flat_subspace(p, len, hom_basis(m, &cover.source)?.into_iter().map(|g| cover.matrix.mul(&g))).dim();
    // Through injectives: through the envelope M → I(M) = D P(D M).
    let dcover = projective_cover(&d_dual(m))?;
    let env = d_dual(&dcover.source).rebind(alg)?;
    let iota = dcover.matrix.transpose();
    let through_i = flat_subspace(p, len, hom_basis(&env, n)?.into_iter().map(|g| g.mul(&iota))).dim();
    Ok((total - through_p, total - through_i))
}

/// Convenience: the regular right module `Λ_Λ` as an opposite-algebra module.
pub fn regular_right(alg: &Arc<Algebra>) -> Module {
    Module::regular(&alg.opposite())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algdef::AlgebraSpec;
    use crate::modrep::{is_isomorphic, make_module};

    fn dual_numbers() -> Arc<Algebra> {
        Algebra::truncated_polynomial(2, 2).unwrap()
    }

    fn plane() -> Arc<Algebra> {
        Algebra::local_radical_square_zero(2, 2).unwrap()
    }

    fn a2() -> Arc<Algebra> {
        Algebra::from_spec(&AlgebraSpec::quiver(2, 2, &[("a", 1, 2)], &[])).unwrap()
    }

    fn iso(a: &Module, b: &Module) -> bool {
        is_isomorphic(a, b).unwrap().decided().unwrap()
    }

    #[test]
    fn star_dual_dimensions() {
        let q = a2();
        // Λe_1 has basis e1, a; Hom(Λe_1, Λ) ≅ e_1Λ = span{e1}.
        assert_eq!(dual_star(&Module::projective(&q, 0)).unwrap().dim(), 1);
        assert_eq!(dual_star(&Module::simple(&dual_numbers(), 0)).unwrap().dim(), 1);
        assert_eq!(dual_star(&Module::simple(&plane(), 0)).unwrap().dim(), 2);
    }

    #[test]
    fn star_dual_of_projective_is_opposite_projective() {
        let q = a2();
        let op = q.opposite();
        for t in 0..2 {
            let d = dual_star(&Module::projective(&q, t)).unwrap();
            assert!(iso(&d, &Module::projective(&op, t)));
        }
    }

    #[test]
    fn transpose_examples() {
        let a = dual_numbers();
        assert!(transpose(&Module::regular(&a)).unwrap().module.is_zero());
        let trk = transpose(&Module::simple(&a, 0)).unwrap().module;
        assert!(iso(&trk, &Module::simple(&a.opposite(), 0)));
        let b = plane();
        assert_eq!(transpose(&Module::simple(&b, 0)).unwrap().module.dim(), 5);
        let q = a2();
        for t in 0..2 {
            assert!(transpose(&Module::projective(&q, t)).unwrap().module.is_zero());
        }
    }

    #[test]
    fn sigma_examples() {
        let b = plane();
        let r = eval_sigma(&Module::simple(&b, 0)).unwrap();
        assert!(r.torsionless && !r.reflexive);
        assert_eq!(r.cokernel_dim, 3);
        assert!(r.sigma.unwrap().is_homomorphism());
        let a = dual_numbers();
        let r = eval_sigma(&Module::simple(&a, 0)).unwrap();
        assert!(r.reflexive);
        let r = eval_sigma(&Module::regular(&b)).unwrap();
        assert!(r.reflexive);
    }

    #[test]
    fn tensor_examples() {
        let a = dual_numbers();
        let k = Module::simple(&a, 0);
        let kr = Module::simple(&a.opposite(), 0);
        assert_eq!(tensor_over_algebra(&kr, &k).unwrap().dim, 1);
        let n = Module::regular(&a).direct_sum(&k).unwrap();
        assert_eq!(tensor_over_algebra(&regular_right(&a), &n).unwrap().dim, n.dim());
        let trk = transpose(&k).unwrap().module;
        assert_eq!(tensor_over_algebra(&trk, &k).unwrap().dim, 1);
    }

    #[test]
    fn zeta_on_projective_is_iso() {
        let b = plane();
        let k = Module::simple(&b, 0);
        let z = zeta_map(&regular_right(&b), &k).unwrap();
        assert_eq!((z.kernel_dim, z.cokernel_dim), (0, 0));
        let z = zeta_map(&regular_right(&b), &Module::zero(&b)).unwrap();
        assert_eq!((z.tensor_dim, z.hom_dim), (0, 0));
    }

    #[test]
    fn d_dual_examples() {
        let q = a2();
        let s2 = Module::simple(&q, 1);
        let d = d_dual(&s2);
        assert_eq!(d.dim(), 1);
        assert!(iso(&d, &Module::simple(&q.opposite(), 1)));
        let m = Module::projective(&q, 0);
        let dd = d_dual(&d_dual(&m)).rebind(&q).unwrap();
        assert!(iso(&dd, &m));
    }

    #[test]
    fn strip_examples() {
        let a = dual_numbers();
        let k = Module::simple(&a, 0);
        let s = strip_projectives(&Module::regular(&a).direct_sum(&k).unwrap()).unwrap();
        assert!(iso(&s.core, &k));
        assert!(iso(&s.projective_part, &Module::regular(&a)));
        assert!(strip_projectives(&Module::regular(&a)).unwrap().core.is_zero());
        assert_eq!(strip_projectives(&k).unwrap().core.dim(), 1);
    }

    #[test]
    fn stable_hom_examples() {
        for alg in [plane(), dual_numbers()] {
            let k = Module::simple(&alg, 0);
            assert_eq!(stable_hom_dims(&k, &k).unwrap().0, 1);
            assert_eq!(stable_hom_dims(&k, &Module::regular(&alg)).unwrap().0, 0);
        }
    }

    #[test]
    fn dual_star_map_is_homomorphism() {
        let a = Algebra::truncated_polynomial(3, 3).unwrap();
        let x = Mat::from_rows_i64(3, 3, &[vec![0, 0, 0], vec![1, 0, 0], vec![0, 0, 0]]);
        let m = make_module(&a, vec![x]).unwrap();
        let cover = projective_cover(&m).unwrap();
        let f = dual_star_map(&cover).unwrap();
        assert!(f.is_homomorphism());
        assert!(f.is_mono());
    }
}
