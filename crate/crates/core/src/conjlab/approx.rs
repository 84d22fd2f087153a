//! Universal extensions and right approximations.
//!
//! `Ext¹(N, M)` is realised as `Hom(ΩN, M)` modulo restrictions of maps
//! `P(N) → M`. For a k-basis `φ_1..φ_n` of that quotient the extension is the
//! pushout `E = (M^n ⊕ P(N)) / {(−Φz, z) : z ∈ ΩN}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{Mat, Subspace};
use crate::homtools::ext_profile;
use crate::modrep::{hom_basis, projective_cover, ModMap, Module};

const RANDOM_CANDIDATES: usize = 64;
const EXHAUSTIVE_LIMIT: u64 = 1 << 16;
const SEED: u64 = 0xa99_0c5;

/// A short exact sequence `0 → M^n → E → N → 0` with `Ext¹(E, M)` recorded.
#[derive(Clone, Debug)]
pub struct ExtensionRealization {
    pub base: Module,
    pub coefficient: Module,
    pub n: usize,
    pub extension: Module,
    /// `M^n → E`.
    pub inclusion: ModMap,
    /// `E → N`.
    pub projection: ModMap,
    pub ext1_e_m_dim: usize,
}

impl ExtensionRealization {
    /// Mono, epi, exact in the middle, and both maps intertwine.
    pub fn is_exact(&self) -> bool {
        let (i, q) = (&self.inclusion, &self.projection);
        let mono = i.source.dim() == 0 || i.is_mono();
        let epi = q.target.dim() == 0 || q.is_epi();
        let composite_zero = q.matrix.mul(&i.matrix).is_zero();
        let dims = self.extension.dim() == i.source.dim() + q.target.dim();
        mono && epi && composite_zero && dims && i.is_homomorphism() && q.is_homomorphism()
    }
}

fn span_of(p: u32, len: usize, maps: impl IntoIterator<Item = Mat>) -> Subspace {
    let v: Vec<Vec<u32>> = maps.into_iter().map(|f| f.flatten()).collect();
    Subspace::span(p, len, &v)
}

/// The extension of `N` by `M^n`, `n = dim Ext¹(N, M)`, classified by a basis of `Ext¹(N, M)`.
pub fn universal_extension(n_mod: &Module, m: &Module) -> Result<ExtensionRealization> {
    let alg = n_mod.algebra();
    let p = n_mod.p();
    let (cover_src, cover_mat) = if n_mod.is_zero() {
        (Module::zero(alg), Mat::zeros(p, 0, 0))
    } else {
        let c = projective_cover(n_mod)?;
        (c.source, c.matrix)
    };
    let kernel = if cover_src.dim() == 0 { Subspace::zero(p, 0) } else { cover_mat.kernel() };
    let omega = cover_src.submodule(&kernel);
    let iota = Mat::from_columns(p, cover_src.dim(), &kernel.basis_vectors());
    // Hom(ΩN, M) modulo restrictions from P(N).
    let len = m.dim() * omega.dim();
    let restricted = span_of(p, len, hom_basis(&cover_src, m)?.into_iter().map(|g| g.mul(&iota)));
    let mut reps: Vec<Mat> = Vec::new();
    let mut acc = restricted;
    for phi in hom_basis(&omega, m)? {
        let v = phi.flatten();
        if !acc.contains(&v) {
            acc = acc.sum(&Subspace::span(p, len, &[v]));
            reps.push(phi);
        }
    }
    let n = reps.len();
    // D = M^n ⊕ P(N); graph of z ↦ (−Φz, ιz).
    let mn = m.power(n);
    let d = mn.direct_sum(&cover_src)?;
    let graph: Vec<Vec<u32>> = (0..omega.dim())
        .map(|z| {
            let mut v = Vec::with_capacity(d.dim());
            for phi in &reps {
                v.extend(phi.column(z).into_iter().map(|x| (p - x) % p));
            }
            v.extend(iota.column(z));
            v
        })
        .collect();
    let u = Subspace::span(p, d.dim(), &graph);
    let e = d.quotient(&u);
    let q = d.quotient_map(&u);
    let inc_d = Mat::identity(p, mn.dim()).vstack(&Mat::zeros(p, cover_src.dim(), mn.dim()));
    let inclusion = ModMap { source: mn.clone(), target: e.clone(), matrix: q.mul(&inc_d) };
    // E → N: (x, y) + U ↦ π(y), evaluated on the quotient basis (free columns of U).
    let to_n = Mat::zeros(p, n_mod.dim(), mn.dim()).hstack(&cover_mat);
    let cols: Vec<Vec<u32>> = u.free_columns().into_iter().map(|c| to_n.column(c)).collect();
    let projection =
        ModMap { source: e.clone(), target: n_mod.clone(), matrix: Mat::from_columns(p, n_mod.dim(), &cols) };
    let ext1_e_m_dim = ext_profile(&e, m, 1)?.dims[1];
    Ok(ExtensionRealization {
        base: n_mod.clone(),
        coefficient: m.clone(),
        n,
        extension: e,
        inclusion,
        projection,
        ext1_e_m_dim,
    })
}

/// For each `T`, whether every map `T → Y` factors through `f: X → Y`.
pub fn check_right_approximation(f: &ModMap, tests: &[Module]) -> Result<Vec<bool>> {
    tests
        .iter()
        .map(|t| {
            let p = t.p();
            let target = hom_basis(t, &f.target)?.len();
            let len = f.target.dim() * t.dim();
            let image = span_of(p, len, hom_basis(t, &f.source)?.into_iter().map(|h| f.matrix.mul(&h)));
            Ok(image.dim() == target)
        })
        .collect()
}

/// A right minimal version `f|X': X' → Y` of `f`, with `X = X' ⊕ X''` and `X'' ⊆ ker f`.
#[derive(Clone, Debug)]
pub struct RightMinimal {
    pub map: ModMap,
    /// `X' → X`.
    pub inclusion: ModMap,
    /// `dim X''`.
    pub removed_dim: usize,
}

/// Products `w h` for `w ∈ W`, `h ∈ H`, as a subspace of flattened matrices.
fn product_span(p: u32, d: usize, w: &[Mat], h: &[Mat]) -> Subspace {
    span_of(p, d * d, w.iter().flat_map(|a| h.iter().map(move |b| a.mul(b))))
}

fn unflatten(p: u32, d: usize, s: &Subspace) -> Vec<Mat> {
    s.basis_vectors().into_iter().map(|v| Mat::from_vec(p, d, d, v)).collect()
}

/// Some non-nilpotent element of `span(h)`, if one is found.
fn non_nilpotent(p: u32, h: &[Mat]) -> Option<Mat> {
    let combine = |c: &[u32]| {
        let mut f = Mat::zeros(p, h[0].rows(), h[0].cols());
        for (b, &x) in h.iter().zip(c) {
            if x != 0 {
                f.add_scaled(x, b);
            }
        }
        f
    };
    if let Some(b) = h.iter().find(|b| !b.is_nilpotent()) {
        return Some(b.clone());
    }
    for i in 0..h.len() {
        for j in i + 1..h.len() {
            let s = h[i].add(&h[j]);
            if !s.is_nilpotent() {
                return Some(s);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_CANDIDATES {
        let c: Vec<u32> = (0..h.len()).map(|_| rng.gen_range(0..p)).collect();
        let f = combine(&c);
        if !f.is_nilpotent() {
            return Some(f);
        }
    }
    if (p as u64).checked_pow(h.len() as u32).is_some_and(|t| t <= EXHAUSTIVE_LIMIT) {
        let mut c = vec![0u32; h.len()];
        loop {
            let f = combine(&c);
            if !f.is_nilpotent() {
                return Some(f);
            }
            let mut i = 0;
            loop {
                if i == c.len() {
                    return None;
                }
                c[i] += 1;
                if c[i] < p {
                    break;
                }
                c[i] = 0;
                i += 1;
            }
        }
    }
    None
}

/// Basis of `{h ∈ End X : f h = 0}`.
fn killed_endomorphisms(x: &Module, f: &Mat) -> Result<Vec<Mat>> {
    let p = x.p();
    let d = x.dim();
    let ends = hom_basis(x, x)?;
    if ends.is_empty() {
        return Ok(ends);
    }
    if f.rows() == 0 {
        return Ok(ends);
    }
    let images: Vec<Vec<u32>> = ends.iter().map(|e| f.mul(e).flatten()).collect();
    let coeffs = Mat::from_columns(p, f.rows() * d, &images).kernel();
    Ok(coeffs
        .basis_vectors()
        .into_iter()
        .map(|c| {
            let mut acc = Mat::zeros(p, d, d);
            for (e, &v) in ends.iter().zip(&c) {
                if v != 0 {
                    acc.add_scaled(v, e);
                }
            }
            acc
        })
        .collect())
}

/// Strip summands of `X` inside `ker f` until `f∘g = f` forces `g` invertible.
///
/// `H = {h ∈ End X : f h = 0}` is a right ideal, and `f` is right minimal
/// exactly when `H` is nilpotent. A non-nilpotent `h ∈ H` splits off
/// `im h^N ⊆ ker f` by Fitting's lemma.
pub fn right_minimal_reduction(f: &ModMap) -> Result<RightMinimal> {
    let p = f.source.p();
    let mut x = f.source.clone();
    let mut incl = Mat::identity(p, x.dim());
    loop {
        let d = x.dim();
        let fx = f.matrix.mul(&incl);
        let hb = killed_endomorphisms(&x, &fx)?;
        if hb.is_empty() {
            break;
        }
        // Nilpotency of the right ideal: H ⊇ H² ⊇ ... reaches zero or stalls.
        let mut w = hb.clone();
        let nilpotent = loop {
            let next = product_span(p, d, &w, &hb);
            if next.is_zero() {
                break true;
            }
            if next.dim() == w.len() {
                break false;
            }
            w = unflatten(p, d, &next);
        };
        if nilpotent {
            break;
        }
        let h = non_nilpotent(p, &w)
            .or_else(|| non_nilpotent(p, &hb))
            .ok_or_else(|| Error::Undetermined("no non-nilpotent element found in a non-nilpotent ideal".into()))?;
        let hn = h.pow(d as u64);
        let keep = hn.kernel();
        if keep.dim() == d {
            return Err(Error::Internal("Fitting split did not shrink the module".into()));
        }
        let keep_incl = Mat::from_columns(p, d, &keep.basis_vectors());
        x = x.submodule(&keep);
        incl = incl.mul(&keep_incl);
    }
    let removed_dim = f.source.dim() - x.dim();
    let map = ModMap { source: x.clone(), target: f.target.clone(), matrix: f.matrix.mul(&incl) };
    let inclusion = ModMap { source: x, target: f.source.clone(), matrix: incl };
    Ok(RightMinimal { map, inclusion, removed_dim })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algdef::Algebra;
    use crate::modrep::is_isomorphic;

    #[test]
    fn self_extension_of_simple_over_dual_numbers() {
        let a = Algebra::truncated_polynomial(2, 2).unwrap();
        let k = Module::simple(&a, 0);
        let r = universal_extension(&k, &k).unwrap();
        assert_eq!(r.n, 1);
        assert!(r.is_exact());
        assert_eq!(r.ext1_e_m_dim, 0);
        assert!(is_isomorphic(&r.extension, &Module::regular(&a)).unwrap().is_isomorphic());
    }

    #[test]
    fn projective_base_gives_split_realization() {
        let a = Algebra::truncated_polynomial(2, 2).unwrap();
        let k = Module::simple(&a, 0);
        let r = universal_extension(&Module::regular(&a), &k).unwrap();
        assert_eq!(r.n, 0);
        assert_eq!(r.extension.dim(), 2);
        let r = universal_extension(&k, &Module::regular(&a)).unwrap();
        assert_eq!(r.n, 0);
        assert!(is_isomorphic(&r.extension, &k).unwrap().is_isomorphic());
    }

    #[test]
    fn square_zero_plane_extension_is_free() {
        let b = Algebra::local_radical_square_zero(2, 2).unwrap();
        let k = Module::simple(&b, 0);
        let r = universal_extension(&k, &k).unwrap();
        assert_eq!(r.n, 2);
        assert!(r.is_exact());
        assert_eq!(r.ext1_e_m_dim, 0);
        assert!(r.extension.is_projective());
    }

    #[test]
    fn approximation_examples() {
        let a = Algebra::truncated_polynomial(2, 2).unwrap();
        let k = Module::simple(&a, 0);
        let reg = Module::regular(&a);
        let tests = vec![k.clone(), reg.clone(), k.direct_sum(&reg).unwrap()];
        assert!(check_right_approximation(&ModMap::identity(&reg), &tests).unwrap().iter().all(|&b| b));
        let zero = ModMap { source: reg.clone(), target: k.clone(), matrix: Mat::zeros(2, 1, 2) };
        assert_eq!(check_right_approximation(&zero, std::slice::from_ref(&k)).unwrap(), vec![false]);
    }

    #[test]
    fn reduction_removes_zero_summand() {
        let a = Algebra::truncated_polynomial(2, 2).unwrap();
        let k = Module::simple(&a, 0);
        let cover = projective_cover(&k).unwrap();
        let r = right_minimal_reduction(&cover).unwrap();
        assert_eq!(r.removed_dim, 0);
        // (π, 0): Λ ⊕ k → k
        let x = cover.source.direct_sum(&k).unwrap();
        let f = ModMap { source: x, target: k.clone(), matrix: cover.matrix.hstack(&Mat::zeros(2, 1, 1)) };
        let r = right_minimal_reduction(&f).unwrap();
        assert_eq!(r.removed_dim, 1);
        assert!(r.map.is_epi());
    }

    #[test]
    fn reduction_removes_redundant_copy() {
        let a = Algebra::truncated_polynomial(2, 2).unwrap();
        let k = Module::simple(&a, 0);
        let r = universal_extension(&k, &k).unwrap();
        // E ⊕ M → N with the extra copy of M sent to zero.
        let x = r.extension.direct_sum(&k).unwrap();
        let mat = r.projection.matrix.hstack(&Mat::zeros(2, 1, 1));
        let f = ModMap { source: x, target: k.clone(), matrix: mat };
        let red = right_minimal_reduction(&f).unwrap();
        assert_eq!(red.removed_dim, k.dim());
        // Diagonal redundancy: (π, π) on E ⊕ E.
        let x = r.extension.direct_sum(&r.extension).unwrap();
        let f = ModMap { source: x, target: k, matrix: r.projection.matrix.hstack(&r.projection.matrix) };
        assert_eq!(right_minimal_reduction(&f).unwrap().removed_dim, 2);
    }
}
