//! Indecomposability and Krull–Schmidt decomposition.
//!
//! A module splits as soon as an endomorphism `φ` is found that is neither
//! nilpotent nor invertible (Fitting: `M = ker φ^d ⊕ im φ^d`). Candidates are
//! basis endomorphisms, pairwise sums and seeded random combinations. When
//! none of them splits, locality of `E = End(M)` is decided exactly:
//!
//! 1. `I` = ideal generated by nilpotent basis elements and commutators. In
//!    a local `E` this lies in the radical, so a non-nilpotent `I` already
//!    proves `E` is not local.
//! 2. `C = E/I` is commutative; its nilradical is the kernel of a power of
//!    the (linear) Frobenius `x ↦ x^p`.
//! 3. `C/nil` is a product of finite fields; the number of factors is the
//!    dimension of the fixed space of Frobenius. `E` is local iff it is one.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hom_basis, Module};
use crate::error::{Error, Result};
use crate::exactla::{Mat, Subspace};

const RANDOM_CANDIDATES: usize = 32;
const EXHAUSTIVE_LIMIT: u64 = 1 << 20;
const SPLIT_SEED: u64 = 0xdec0_4905e;

/// A direct summand with its inclusion (`d × d_i`) and projection (`d_i × d`).
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub inclusion: Mat,
    pub projection: Mat,
}

/// Summands of a module; `complete` is false when some summand could not be
/// certified indecomposable and could not be split either.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    pub complete: bool,
}

impl Decomposition {
    /// The summands, if every one of them is certified indecomposable.
    pub fn complete(&self) -> Option<&[Summand]> {
        self.complete.then_some(self.summands.as_slice())
    }
}

/// Basis of `End(M)`.
pub fn end_basis(m: &Module) -> Vec<Mat> {
    hom_basis(m, m).expect("same algebra")
}

fn splits(f: &Mat) -> bool {
    !f.is_invertible() && !f.is_nilpotent()
}

fn candidate_splitter(p: u32, basis: &[Mat]) -> Option<Mat> {
    if let Some(b) = basis.iter().find(|b| splits(b)) {
        return Some(b.clone());
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = basis[i].add(&basis[j]);
            if splits(&s) {
                return Some(s);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    for _ in 0..RANDOM_CANDIDATES {
        let mut f = Mat::zeros(p, basis[0].rows(), basis[0].cols());
        for b in basis {
            f.add_scaled(rng.gen_range(0..p), b);
        }
        if splits(&f) {
            return Some(f);
        }
    }
    None
}

/// Verdict of the exact locality test.
enum Locality {
    Local,
    /// Not local, with a splitting endomorphism.
    Split(Mat),
    /// Not local, but no splitting element was produced.
    NotLocal,
}

struct EndAlgebra<'a> {
    p: u32,
    basis: &'a [Mat],
    space: Subspace,
    /// Change from rref-basis coordinates to `basis` coordinates.
    change: Mat,
}

impl<'a> EndAlgebra<'a> {
    fn new(p: u32, basis: &'a [Mat]) -> Self {
        let d = basis[0].rows();
        let flat: Vec<Vec<u32>> = basis.iter().map(Mat::flatten).collect();
        let space = Subspace::span(p, d * d, &flat);
        debug_assert_eq!(space.dim(), basis.len());
        let given: Vec<Vec<u32>> = flat.iter().map(|v| space.coords_unchecked(v)).collect();
        let change = Mat::from_columns(p, space.dim(), &given).inverse().expect("basis of End");
        EndAlgebra { p, basis, space, change }
    }

    fn r(&self) -> usize {
        self.basis.len()
    }

    fn coords(&self, m: &Mat) -> Vec<u32> {
        self.change.mul_vec(&self.space.coords_unchecked(&m.flatten()))
    }

    fn element(&self, c: &[u32]) -> Mat {
        let mut f = Mat::zeros(self.p, self.basis[0].rows(), self.basis[0].cols());
        for (b, &x) in self.basis.iter().zip(c) {
            if x != 0 {
                f.add_scaled(x, b);
            }
        }
        f
    }

    /// Two-sided ideal generated by `gens` (coordinates).
    fn ideal(&self, gens: &[Vec<u32>]) -> Subspace {
        let r = self.r();
        let mut cur = Subspace::span(self.p, r, gens);
        loop {
            let mut vecs = cur.basis_vectors();
            for x in cur.basis_vectors() {
                let xm = self.element(&x);
                for b in self.basis {
                    vecs.push(self.coords(&b.mul(&xm)));
                    vecs.push(self.coords(&xm.mul(b)));
                }
            }
            let next = Subspace::span(self.p, r, &vecs);
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    fn is_nilpotent_ideal(&self, ideal: &Subspace) -> bool {
        let mut power = ideal.clone();
        let gens: Vec<Mat> = ideal.basis_vectors().iter().map(|c| self.element(c)).collect();
        while !power.is_zero() {
            let mut vecs = Vec::new();
            for x in power.basis_vectors() {
                let xm = self.element(&x);
                for g in &gens {
                    vecs.push(self.coords(&xm.mul(g)));
                }
            }
            let next = Subspace::span(self.p, self.r(), &vecs);
            if next.dim() == power.dim() {
                return false;
            }
            power = next;
        }
        true
    }

    fn locality(&self) -> Locality {
        let p = self.p;
        let r = self.r();
        let mut gens: Vec<Vec<u32>> = Vec::new();
        for (i, b) in self.basis.iter().enumerate() {
            if b.is_nilpotent() {
                gens.push(crate::exactla::unit_vector(r, i));
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                let c = self.basis[i].mul(&self.basis[j]).sub(&self.basis[j].mul(&self.basis[i]));
                if !c.is_zero() {
                    gens.push(self.coords(&c));
                }
            }
        }
        let ideal = self.ideal(&gens);
        if !self.is_nilpotent_ideal(&ideal) {
            return Locality::NotLocal;
        }
        let free = ideal.free_columns();
        let c = free.len();
        let lift = |u: &[u32]| -> Mat {
            let mut e = vec![0u32; r];
            for (k, &f) in free.iter().enumerate() {
                e[f] = u[k];
            }
            self.element(&e)
        };
        // Frobenius on C = E/I in the basis of classes of the free basis elements.
        let cols: Vec<Vec<u32>> =
            free.iter().map(|&f| ideal.quotient_coords(&self.coords(&self.basis[f].pow(p as u64)))).collect();
        let frob = Mat::from_columns(p, c, &cols);
        let nil = frob.pow(c as u64).kernel();
        let g = frob.sub(&Mat::identity(p, c));
        let qg_cols: Vec<Vec<u32>> = (0..c).map(|j| nil.quotient_coords(&g.column(j))).collect();
        let qg = Mat::from_columns(p, c - nil.dim(), &qg_cols);
        let fixed = if qg.rows() == 0 { Subspace::full(p, c) } else { qg.kernel() };
        let factors = fixed.dim() - nil.dim();
        if factors <= 1 {
            return Locality::Local;
        }
        let d = self.basis[0].rows();
        let one = ideal.quotient_coords(&self.coords(&Mat::identity(p, d)));
        let trivial = nil.sum(&Subspace::span(p, c, &[one]));
        for u in fixed.basis_vectors() {
            if trivial.contains(&u) {
                continue;
            }
            let x = lift(&u);
            for s in 0..p {
                let y = x.sub(&Mat::scalar(p, d, s));
                if splits(&y) {
                    return Locality::Split(y);
                }
            }
        }
        Locality::NotLocal
    }
}

fn exhaustive_splitter(p: u32, basis: &[Mat]) -> Option<Mat> {
    let total = (p as u64).checked_pow(basis.len() as u32)?;
    if total > EXHAUSTIVE_LIMIT {
        return None;
    }
    let mut coeffs = vec![0u32; basis.len()];
    loop {
        let mut f = Mat::zeros(p, basis[0].rows(), basis[0].cols());
        for (b, &c) in basis.iter().zip(&coeffs) {
            if c != 0 {
                f.add_scaled(c, b);
            }
        }
        if splits(&f) {
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

enum SplitResult {
    Indecomposable,
    Splitter(Mat),
    /// Known decomposable, no splitter found.
    Stuck,
}

fn find_split(m: &Module) -> SplitResult {
    let basis = end_basis(m);
    if basis.len() <= 1 {
        return SplitResult::Indecomposable;
    }
    if let Some(f) = candidate_splitter(m.p(), &basis) {
        return SplitResult::Splitter(f);
    }
    match EndAlgebra::new(m.p(), &basis).locality() {
        Locality::Local => SplitResult::Indecomposable,
        Locality::Split(f) => SplitResult::Splitter(f),
        Locality::NotLocal => match exhaustive_splitter(m.p(), &basis) {
            Some(f) => SplitResult::Splitter(f),
            None => SplitResult::Stuck,
        },
    }
}

/// Whether `End(M)` is local, decided exactly.
pub fn is_local_endomorphism_ring(m: &Module) -> bool {
    let basis = end_basis(m);
    if basis.len() <= 1 {
        return !basis.is_empty();
    }
    if candidate_splitter(m.p(), &basis).is_some() {
        return false;
    }
    matches!(EndAlgebra::new(m.p(), &basis).locality(), Locality::Local)
}

/// Exact indecomposability test.
pub fn is_indecomposable(m: &Module) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    Ok(is_local_endomorphism_ring(m))
}

/// Fitting decomposition along `φ`: `(ker φ^d, im φ^d)` with maps.
fn fitting(m: &Module, phi: &Mat) -> (Summand, Summand) {
    let d = m.dim();
    let p = m.p();
    let q = phi.pow(d as u64);
    let k = q.kernel();
    let i = q.image();
    let mut cols = k.basis_vectors();
    cols.extend(i.basis_vectors());
    let s = Mat::from_columns(p, d, &cols);
    let si = s.inverse().expect("Fitting decomposition is direct");
    let (dk, di) = (k.dim(), i.dim());
    let part = |sub: &Subspace, offset: usize, len: usize| Summand {
        module: m.submodule(sub),
        inclusion: s.block(0, offset, d, len),
        projection: si.block(offset, 0, len, d),
    };
    (part(&k, 0, dk), part(&i, dk, di))
}

/// Split `m` into indecomposable summands.
pub fn decompose(m: &Module) -> Result<Decomposition> {
    let mut out = Vec::new();
    let mut complete = true;
    let p = m.p();
    let mut stack = vec![Summand {
        module: m.clone(),
        inclusion: Mat::identity(p, m.dim()),
        projection: Mat::identity(p, m.dim()),
    }];
    while let Some(s) = stack.pop() {
        if s.module.is_zero() {
            continue;
        }
        match find_split(&s.module) {
            SplitResult::Indecomposable => out.push(s),
            SplitResult::Stuck => {
                complete = false;
                out.push(s);
            }
            SplitResult::Splitter(phi) => {
                let (a, b) = fitting(&s.module, &phi);
                for part in [b, a] {
                    stack.push(Summand {
                        inclusion: s.inclusion.mul(&part.inclusion),
                        projection: part.projection.mul(&s.projection),
                        module: part.module,
                    });
                }
            }
        }
    }
    // Deterministic order: by dimension, then discovery.
    out.sort_by_key(|s| s.module.dim());
    Ok(Decomposition { summands: out, complete })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algdef::{Algebra, AlgebraSpec};
    use crate::modrep::is_isomorphic;

    #[test]
    fn indecomposability_examples() {
        let b = Algebra::local_radical_square_zero(2, 2).unwrap();
        let k = Module::simple(&b, 0);
        assert!(is_indecomposable(&k).unwrap());
        assert!(!is_indecomposable(&k.power(2)).unwrap());
        assert!(is_indecomposable(&Module::regular(&b)).unwrap());
        assert!(matches!(is_indecomposable(&Module::zero(&b)), Err(Error::ZeroModule)));
    }

    #[test]
    fn regular_module_of_path_algebra_splits_into_projectives() {
        let q = Algebra::from_spec(&AlgebraSpec::quiver(2, 2, &[("a", 1, 2)], &[])).unwrap();
        let d = decompose(&Module::regular(&q)).unwrap();
        let parts = d.complete().unwrap();
        assert_eq!(parts.len(), 2);
        let dims: Vec<usize> = parts.iter().map(|s| s.module.dim()).collect();
        assert_eq!(dims, vec![1, 2]);
        for s in parts {
            assert!(s.projection.mul(&s.inclusion).is_identity());
            s.module.check().unwrap();
        }
    }

    #[test]
    fn krull_schmidt_doubles_multiplicities() {
        let a = Algebra::truncated_polynomial(3, 3).unwrap();
        let m = Module::regular(&a).direct_sum(&Module::simple(&a, 0)).unwrap();
        let once = decompose(&m).unwrap().summands;
        let twice = decompose(&m.direct_sum(&m).unwrap()).unwrap().summands;
        assert_eq!(twice.len(), 2 * once.len());
        for s in &once {
            let count = |parts: &[Summand]| {
                parts.iter().filter(|t| is_isomorphic(&t.module, &s.module).unwrap().is_isomorphic()).count()
            };
            assert_eq!(count(&twice), 2 * count(&once));
        }
    }

    #[test]
    fn locality_certificate_on_field_extension_like_endomorphisms() {
        // End(k ⊕ Λ) over the dual numbers has two orthogonal idempotents
        let a = Algebra::truncated_polynomial(3, 2).unwrap();
        let m = Module::simple(&a, 0).direct_sum(&Module::regular(&a)).unwrap();
        let basis = end_basis(&m);
        let e = EndAlgebra::new(3, &basis);
        assert!(!matches!(e.locality(), Locality::Local));
        let reg = Module::regular(&a);
        let basis = end_basis(&reg);
        assert!(matches!(EndAlgebra::new(3, &basis).locality(), Locality::Local));
    }
}
