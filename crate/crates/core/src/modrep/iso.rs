//! Isomorphism testing.
//!
//! Cheap invariants reject most pairs. Otherwise an invertible element of
//! `Hom(M, N)` is sought: by seeded random combinations, then exhaustively
//! when the space is small. If neither settles it, both modules are split
//! into indecomposables and matched summand by summand, using that for
//! indecomposable `X`, `Y` an isomorphism exists iff some `g_j ∘ h_i` is
//! invertible for bases `h_i` of `Hom(X, Y)` and `g_j` of `Hom(Y, X)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::decomp::decompose;
use super::{hom_basis, ModMap, Module};
use crate::algdef::same_algebra;
use crate::error::{Error, Result};
use crate::exactla::Mat;

const RANDOM_TRIALS: usize = 256;
const EXHAUSTIVE_LIMIT: u64 = 1 << 16;
const ISO_SEED: u64 = 0x150_150;

/// Outcome of an isomorphism test.
#[derive(Clone, Debug)]
pub enum IsoVerdict {
    /// With an invertible intertwiner `M → N`.
    Isomorphic(ModMap),
    NotIsomorphic,
    Undetermined,
}

impl IsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }

    /// `Ok(bool)` for a decided verdict, an error otherwise.
    pub fn decided(&self) -> Result<bool> {
        match self {
            IsoVerdict::Isomorphic(_) => Ok(true),
            IsoVerdict::NotIsomorphic => Ok(false),
            IsoVerdict::Undetermined => Err(Error::Undetermined("isomorphism test".into())),
        }
    }
}

fn combine(p: u32, basis: &[Mat], coeffs: &[u32]) -> Mat {
    let mut f = Mat::zeros(p, basis[0].rows(), basis[0].cols());
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            f.add_scaled(c, b);
        }
    }
    f
}

/// Search `span(basis)` for an invertible matrix.
pub(crate) fn find_invertible(p: u32, basis: &[Mat], seed: u64) -> Option<Mat> {
    if basis.is_empty() {
        return None;
    }
    if let Some(b) = basis.iter().find(|b| b.is_invertible()) {
        return Some(b.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIALS {
        let coeffs: Vec<u32> = (0..basis.len()).map(|_| rng.gen_range(0..p)).collect();
        let f = combine(p, basis, &coeffs);
        if f.is_invertible() {
            return Some(f);
        }
    }
    let total = (p as u64).checked_pow(basis.len() as u32);
    if total.is_some_and(|t| t <= EXHAUSTIVE_LIMIT) {
        let mut coeffs = vec![0u32; basis.len()];
        loop {
            let f = combine(p, basis, &coeffs);
            if f.is_invertible() {
                return Some(f);
            }
            let mut i = 0;
            loop {
                if i == coeffs.len() {
                    return None;
                }
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }
    None
}

/// Invariants compared before any search.
fn quick_reject(m: &Module, n: &Module) -> bool {
    m.dim() != n.dim()
        || m.dimension_vector() != n.dimension_vector()
        || m.top_socle() != n.top_socle()
        || m.loewy_layers() != n.loewy_layers()
}

/// Decide `M ≅ N`, returning a certificate when they are.
pub fn is_isomorphic(m: &Module, n: &Module) -> Result<IsoVerdict> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dim() == 0 && n.dim() == 0 {
        return Ok(IsoVerdict::Isomorphic(ModMap::identity(m)));
    }
    if quick_reject(m, n) {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    let hmn = hom_basis(m, n)?;
    let hmm = super::hom_dim(m, m)?;
    if hmn.len() != hmm || super::hom_dim(n, n)? != hmm || super::hom_dim(n, m)? != hmm {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    if let Some(f) = find_invertible(m.p(), &hmn, ISO_SEED) {
        return Ok(IsoVerdict::Isomorphic(ModMap { source: m.clone(), target: n.clone(), matrix: f }));
    }
    let total = (m.p() as u64).checked_pow(hmn.len() as u32);
    if total.is_some_and(|t| t <= EXHAUSTIVE_LIMIT) {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    by_decomposition(m, n)
}

/// `X ≅ Y` for indecomposable `X`, `Y`.
fn indecomposables_isomorphic(x: &Module, y: &Module) -> Result<Option<Mat>> {
    if x.dim() != y.dim() || quick_reject(x, y) {
        return Ok(None);
    }
    let hs = hom_basis(x, y)?;
    let gs = hom_basis(y, x)?;
    for h in &hs {
        for g in &gs {
            if g.mul(h).is_invertible() {
                return Ok(Some(h.clone()));
            }
        }
    }
    Ok(None)
}

fn by_decomposition(m: &Module, n: &Module) -> Result<IsoVerdict> {
    let (decm, decn) = (decompose(m)?, decompose(n)?);
    let (Some(dm), Some(dn)) = (decm.complete(), decn.complete()) else {
        return Ok(IsoVerdict::Undetermined);
    };
    if dm.len() != dn.len() {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    // Greedy matching is exact: isomorphism classes partition the summands.
    let mut used = vec![false; dn.len()];
    let mut pieces: Vec<(usize, usize, Mat)> = Vec::new();
    for (i, x) in dm.iter().enumerate() {
        let mut found = None;
        for (j, y) in dn.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(h) = indecomposables_isomorphic(&x.module, &y.module)? {
                found = Some((j, h));
                break;
            }
        }
        match found {
            Some((j, h)) => {
                used[j] = true;
                pieces.push((i, j, h));
            }
            None => return Ok(IsoVerdict::NotIsomorphic),
        }
    }
    // Assemble Σ incl_N(j) ∘ h ∘ proj_M(i).
    let mut f = Mat::zeros(m.p(), n.dim(), m.dim());
    for (i, j, h) in pieces {
        f = f.add(&dn[j].inclusion.mul(&h).mul(&dm[i].projection));
    }
    debug_assert!(f.is_invertible());
    Ok(IsoVerdict::Isomorphic(ModMap { source: m.clone(), target: n.clone(), matrix: f }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algdef::Algebra;

    #[test]
    fn self_isomorphism_has_certificate() {
        let a = Algebra::local_radical_square_zero(2, 2).unwrap();
        let reg = Module::regular(&a);
        match is_isomorphic(&reg, &reg).unwrap() {
            IsoVerdict::Isomorphic(f) => assert!(f.is_iso() && f.is_homomorphism()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dimension_and_rank_distinguish() {
        let a = Algebra::truncated_polynomial(2, 2).unwrap();
        let k = Module::simple(&a, 0);
        let reg = Module::regular(&a);
        assert!(matches!(is_isomorphic(&k, &reg).unwrap(), IsoVerdict::NotIsomorphic));
        assert!(matches!(is_isomorphic(&k.power(2), &reg).unwrap(), IsoVerdict::NotIsomorphic));
    }

    #[test]
    fn conjugate_modules_are_isomorphic() {
        let a = Algebra::local_radical_square_zero(3, 2).unwrap();
        let m = Module::regular(&a).direct_sum(&Module::simple(&a, 0)).unwrap();
        let s = Mat::from_rows_i64(3, 4, &[vec![1, 2, 0, 1], vec![0, 1, 1, 0], vec![2, 0, 1, 1], vec![0, 0, 1, 2]]);
        let n = m.conjugate(&s).unwrap();
        match is_isomorphic(&m, &n).unwrap() {
            IsoVerdict::Isomorphic(f) => assert!(f.is_iso() && f.is_homomorphism()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn decomposition_route_matches_summands() {
        let a = Algebra::truncated_polynomial(2, 2).unwrap();
        let k = Module::simple(&a, 0);
        let reg = Module::regular(&a);
        let m = reg.power(3).direct_sum(&k.power(3)).unwrap();
        let n = k.power(3).direct_sum(&reg.power(3)).unwrap();
        let v = by_decomposition(&m, &n).unwrap();
        match v {
            IsoVerdict::Isomorphic(f) => assert!(f.is_iso() && f.is_homomorphism()),
            other => panic!("{other:?}"),
        }
        let n2 = k.power(5).direct_sum(&reg.power(2)).unwrap();
        assert!(matches!(by_decomposition(&m, &n2.direct_sum(&k).unwrap()).unwrap(), IsoVerdict::NotIsomorphic));
    }
}
