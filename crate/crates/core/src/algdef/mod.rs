//! Finite-dimensional basic algebras over `F_p`.
//!
//! An [`Algebra`] is stored by structure constants together with the data a
//! constructor knows for free: a complete set of primitive orthogonal
//! idempotents, a basis of the Jacobson radical, and a set of named
//! generators. Every basis element carries a word in the generators, so a
//! module given by generator matrices extends to all basis elements by
//! multiplying along the word.
//!
//! All simple modules are one-dimensional (`Λ/J ≅ F_p^n`). This is checked
//! on construction.

mod build;
pub mod poly;
pub mod spec;

use std::fmt;
use std::path::Path;
use std::sync::{Arc, OnceLock};

use sha2::{Digest, Sha256};

pub use build::{MAX_WORDS, MAX_WORD_LENGTH};
pub use spec::{parse_spec, parse_spec_named, spec_from_value, AlgebraSpec};

use crate::error::{Error, Result};
use crate::exactla::{vec_is_zero, Mat, Subspace};

/// A named generator and its coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub element: Vec<u32>,
}

pub struct Algebra {
    p: u32,
    dim: usize,
    labels: Vec<String>,
    table: Vec<u32>,
    unit: Vec<u32>,
    idempotents: Vec<Vec<u32>>,
    radical: Subspace,
    generators: Vec<Generator>,
    words: Vec<Vec<usize>>,
    spec: AlgebraSpec,
    opposite_of_spec: bool,
    fingerprint: String,
    local: bool,
    radical_square_zero: bool,
    commutative: bool,
    radical_powers: Vec<Subspace>,
    lmul: OnceLock<Vec<Mat>>,
    rmul: OnceLock<Vec<Mat>>,
    projectives: OnceLock<Vec<ProjectiveData>>,
    opposite: OnceLock<Arc<Algebra>>,
}

/// The indecomposable projective `Λe_t` with its basis taken from the
/// canonical basis of the subspace `Λe_t ⊆ Λ`.
#[derive(Clone, Debug)]
pub struct ProjectiveData {
    pub subspace: Subspace,
    /// Basis elements, as elements of `Λ`.
    pub basis: Vec<Vec<u32>>,
    /// Action of each basis element of `Λ` in this basis.
    pub actions: Vec<Mat>,
    /// Coordinates of `e_t`.
    pub generator: Vec<u32>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, dim {}, {})", self.description(), self.dim, &self.fingerprint[..12])
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
    }
}

impl Eq for Algebra {}

/// Whether two handles denote the same algebra (pointer or fingerprint).
pub fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || a.fingerprint == b.fingerprint
}

impl Algebra {
    /// Build and verify the algebra described by `spec`.
    pub fn from_spec(spec: &AlgebraSpec) -> Result<Arc<Algebra>> {
        let built = build::build(spec)?;
        Ok(Arc::new(Self::assemble(built, spec.clone(), false)?))
    }

    /// Parse a JSON description and build it.
    pub fn parse(text: &str) -> Result<Arc<Algebra>> {
        Self::from_spec(&parse_spec(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Arc<Algebra>> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
        Self::from_spec(&parse_spec_named(&text, &path.display().to_string())?)
    }

    /// `F_p[x]/(x^n)`.
    pub fn truncated_polynomial(p: u64, n: usize) -> Result<Arc<Algebra>> {
        let rel = format!("x^{n}");
        Self::from_spec(&AlgebraSpec::commutative(p, &["x"], &[&rel]))
    }

    /// `F_p[x_1..x_r]/(x_1..x_r)^2`, the local radical-square-zero algebra
    /// with `r`-dimensional radical.
    pub fn local_radical_square_zero(p: u64, r: usize) -> Result<Arc<Algebra>> {
        let names: Vec<String> = (1..=r).map(|i| format!("x{i}")).collect();
        let mut rels = Vec::new();
        for i in 0..r {
            for j in i..r {
                rels.push(format!("{}*{}", names[i], names[j]));
            }
        }
        let vars: Vec<&str> = names.iter().map(String::as_str).collect();
        let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
        Self::from_spec(&AlgebraSpec::commutative(p, &vars, &rels))
    }

    fn assemble(b: build::Built, spec: AlgebraSpec, opposite_of_spec: bool) -> Result<Algebra> {
        let p = b.p;
        let dim = b.labels.len();
        let radical = Subspace::span(p, dim, &b.radical);
        let mut alg = Algebra {
            p,
            dim,
            labels: b.labels,
            table: b.table,
            unit: b.unit,
            idempotents: b.idempotents,
            radical,
            generators: b.generators.into_iter().map(|(name, element)| Generator { name, element }).collect(),
            words: b.words,
            spec,
            opposite_of_spec,
            fingerprint: String::new(),
            local: false,
            radical_square_zero: false,
            commutative: false,
            radical_powers: Vec::new(),
            lmul: OnceLock::new(),
            rmul: OnceLock::new(),
            projectives: OnceLock::new(),
            opposite: OnceLock::new(),
        };
        alg.verify()?;
        alg.radical_powers = alg.compute_radical_powers()?;
        alg.local = alg.idempotents.len() == 1;
        alg.radical_square_zero = alg.radical_powers.len() <= 3;
        alg.commutative = (0..dim).all(|i| (0..dim).all(|j| alg.product(i, j) == alg.product(j, i)));
        alg.fingerprint = alg.compute_fingerprint();
        Ok(alg)
    }

    /// Check the structural invariants: unit law, associativity, idempotent
    /// completeness, and that the radical is a nilpotent ideal with quotient
    /// `F_p^n`.
    pub fn verify(&self) -> Result<()> {
        let n = self.dim;
        let bad = |m: String| Err(Error::InvalidAlgebra(m));
        if n == 0 {
            return bad("the zero algebra is not allowed".into());
        }
        if self.unit.len() != n {
            return bad("unit has wrong length".into());
        }
        for i in 0..n {
            let e = crate::exactla::unit_vector(n, i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return bad(format!("unit law fails on basis element {}", self.labels[i]));
            }
        }
        // (b_i b_j) b_k = b_i (b_j b_k)
        for i in 0..n {
            for j in 0..n {
                let bij = self.product(i, j).to_vec();
                for k in 0..n {
                    let left = self.mul(&bij, &crate::exactla::unit_vector(n, k));
                    let bjk = self.product(j, k).to_vec();
                    let right = self.mul(&crate::exactla::unit_vector(n, i), &bjk);
                    if left != right {
                        return bad(format!(
                            "multiplication is not associative on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
            }
        }
        let mut sum = vec![0u32; n];
        for (s, e) in self.idempotents.iter().enumerate() {
            if e.len() != n {
                return bad("idempotent has wrong length".into());
            }
            for (t, f) in self.idempotents.iter().enumerate() {
                let ef = self.mul(e, f);
                let want = if s == t { e.clone() } else { vec![0; n] };
                if ef != want {
                    return bad(format!("idempotents {s} and {t} are not orthogonal idempotents"));
                }
            }
            if vec_is_zero(e) {
                return bad("zero idempotent".into());
            }
            sum = crate::exactla::vec_add(self.p, &sum, e);
        }
        if sum != self.unit {
            return bad("idempotents do not sum to the unit".into());
        }
        for r in self.radical.basis_vectors() {
            for i in 0..n {
                let b = crate::exactla::unit_vector(n, i);
                if !self.radical.contains(&self.mul(&b, &r)) || !self.radical.contains(&self.mul(&r, &b)) {
                    return bad("radical is not a two-sided ideal".into());
                }
            }
        }
        let mut top = self.radical.basis_vectors();
        top.extend(self.idempotents.iter().cloned());
        if self.radical.dim() + self.idempotents.len() != n || Subspace::span(self.p, n, &top).dim() != n {
            return bad(
                "the quotient by the radical must be spanned by the idempotents (all simple modules one-dimensional)"
                    .into(),
            );
        }
        Ok(())
    }

    fn compute_radical_powers(&self) -> Result<Vec<Subspace>> {
        let n = self.dim;
        let mut powers = vec![Subspace::full(self.p, n), self.radical.clone()];
        while !powers.last().unwrap().is_zero() {
            if powers.len() > n + 1 {
                return Err(Error::InvalidAlgebra("radical is not nilpotent".into()));
            }
            let last = powers.last().unwrap();
            let mut vecs = Vec::new();
            for x in last.basis_vectors() {
                for r in self.radical.basis_vectors() {
                    vecs.push(self.mul(&x, &r));
                }
            }
            let next = Subspace::span(self.p, n, &vecs);
            if next == *last {
                return Err(Error::InvalidAlgebra("radical is not nilpotent".into()));
            }
            powers.push(next);
        }
        Ok(powers)
    }

    fn compute_fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update(b"homlab-algebra-v1");
        h.update(self.p.to_le_bytes());
        h.update((self.dim as u64).to_le_bytes());
        let put = |h: &mut Sha256, v: &[u32]| {
            h.update((v.len() as u64).to_le_bytes());
            for x in v {
                h.update(x.to_le_bytes());
            }
        };
        put(&mut h, &self.table);
        put(&mut h, &self.unit);
        h.update((self.idempotents.len() as u64).to_le_bytes());
        for e in &self.idempotents {
            put(&mut h, e);
        }
        put(&mut h, &self.radical.basis().flatten());
        h.update((self.generators.len() as u64).to_le_bytes());
        for g in &self.generators {
            h.update((g.name.len() as u64).to_le_bytes());
            h.update(g.name.as_bytes());
            put(&mut h, &g.element);
        }
        for w in &self.words {
            let w: Vec<u32> = w.iter().map(|&x| x as u32).collect();
            put(&mut h, &w);
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    /// The opposite algebra (cached). Structure constants are transposed and
    /// generator words reversed; for a commutative algebra the result is
    /// structurally equal to `self`.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        if self.commutative {
            return Arc::clone(self);
        }
        self.opposite
            .get_or_init(|| {
                let n = self.dim;
                let mut table = vec![0u32; n * n * n];
                for i in 0..n {
                    for j in 0..n {
                        table[(i * n + j) * n..(i * n + j + 1) * n].copy_from_slice(self.product(j, i));
                    }
                }
                let mut op = Algebra {
                    p: self.p,
                    dim: n,
                    labels: self.labels.clone(),
                    table,
                    unit: self.unit.clone(),
                    idempotents: self.idempotents.clone(),
                    radical: self.radical.clone(),
                    generators: self.generators.clone(),
                    words: self.words.iter().map(|w| w.iter().rev().copied().collect()).collect(),
                    spec: self.spec.clone(),
                    opposite_of_spec: !self.opposite_of_spec,
                    fingerprint: String::new(),
                    local: self.local,
                    radical_square_zero: self.radical_square_zero,
                    commutative: false,
                    radical_powers: Vec::new(),
                    lmul: OnceLock::new(),
                    rmul: OnceLock::new(),
                    projectives: OnceLock::new(),
                    opposite: OnceLock::new(),
                };
                op.radical_powers = op.compute_radical_powers().expect("opposite of a valid algebra");
                op.fingerprint = op.compute_fingerprint();
                Arc::new(op)
            })
            .clone()
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    /// Primitive orthogonal idempotents, one per simple module.
    pub fn idempotents(&self) -> &[Vec<u32>] {
        &self.idempotents
    }

    pub fn num_simples(&self) -> usize {
        self.idempotents.len()
    }

    pub fn radical(&self) -> &Subspace {
        &self.radical
    }

    /// `J^0 = Λ, J^1, ..., J^L = 0`; `L` is the Loewy length.
    pub fn radical_powers(&self) -> &[Subspace] {
        &self.radical_powers
    }

    pub fn loewy_length(&self) -> usize {
        self.radical_powers.len() - 1
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Generator positions whose product (left to right) is basis element `i`.
    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    /// True when this algebra is the opposite of the one its spec describes.
    pub fn is_opposite_of_spec(&self) -> bool {
        self.opposite_of_spec
    }

    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    pub fn description(&self) -> String {
        let base = match &self.spec {
            AlgebraSpec::CommutativeQuotient(c) => {
                let rels =
                    if c.relations.is_empty() { String::new() } else { format!("/({})", c.relations.join(", ")) };
                format!("F_{}[{}]{}", c.field.p, c.variables.join(","), rels)
            }
            AlgebraSpec::Quiver(q) => {
                let arrows: Vec<String> = q.arrows.iter().map(|a| format!("{}:{}->{}", a.name, a.from, a.to)).collect();
                let rels =
                    if q.relations.is_empty() { String::new() } else { format!("/({})", q.relations.join(", ")) };
                format!("F_{}Q[{} vertices; {}]{}", q.field.p, q.vertices, arrows.join(" "), rels)
            }
            AlgebraSpec::StructureConstants(s) => format!("F_{} structure constants (dim {})", s.field.p, s.dim),
        };
        if self.opposite_of_spec {
            format!("op({base})")
        } else {
            base
        }
    }

    pub fn is_local(&self) -> bool {
        self.local
    }

    pub fn is_radical_square_zero(&self) -> bool {
        self.radical_square_zero
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// Coordinates of `b_i b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[u32] {
        let n = self.dim;
        &self.table[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// Product of two elements given by coordinates.
    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let n = self.dim;
        let p = self.p;
        let mut out = vec![0u32; n];
        for (i, &a) in x.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in y.iter().enumerate().filter(|(_, &b)| b != 0) {
                let ab = crate::exactla::mul(p, a, b);
                for (o, &c) in out.iter_mut().zip(self.product(i, j)) {
                    if c != 0 {
                        *o = (*o + ab * c) % p;
                    }
                }
            }
        }
        out
    }

    /// Left multiplication by `b_i` on the regular module (column `k` is `b_i b_k`).
    pub fn lmul(&self, i: usize) -> &Mat {
        &self.lmul.get_or_init(|| {
            (0..self.dim)
                .map(|i| {
                    let cols: Vec<Vec<u32>> = (0..self.dim).map(|k| self.product(i, k).to_vec()).collect();
                    Mat::from_columns(self.p, self.dim, &cols)
                })
                .collect()
        })[i]
    }

    /// Right multiplication by `b_i` (column `k` is `b_k b_i`).
    pub fn rmul(&self, i: usize) -> &Mat {
        &self.rmul.get_or_init(|| {
            (0..self.dim)
                .map(|i| {
                    let cols: Vec<Vec<u32>> = (0..self.dim).map(|k| self.product(k, i).to_vec()).collect();
                    Mat::from_columns(self.p, self.dim, &cols)
                })
                .collect()
        })[i]
    }

    /// Left multiplication by an arbitrary element.
    pub fn lmul_element(&self, x: &[u32]) -> Mat {
        let mut m = Mat::zeros(self.p, self.dim, self.dim);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                m.add_scaled(c, self.lmul(i));
            }
        }
        m
    }

    /// Right multiplication by an arbitrary element.
    pub fn rmul_element(&self, x: &[u32]) -> Mat {
        let mut m = Mat::zeros(self.p, self.dim, self.dim);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                m.add_scaled(c, self.rmul(i));
            }
        }
        m
    }

    /// Data for the indecomposable projective `Λe_t`.
    pub fn projective(&self, t: usize) -> &ProjectiveData {
        &self.projectives.get_or_init(|| {
            (0..self.idempotents.len())
                .map(|t| {
                    let subspace = self.rmul_element(&self.idempotents[t]).image();
                    let basis = subspace.basis_vectors();
                    let actions = (0..self.dim)
                        .map(|b| {
                            let cols: Vec<Vec<u32>> = basis
                                .iter()
                                .map(|u| {
                                    subspace.coords_unchecked(&self.mul(&crate::exactla::unit_vector(self.dim, b), u))
                                })
                                .collect();
                            Mat::from_columns(self.p, basis.len(), &cols)
                        })
                        .collect();
                    let generator = subspace.coords_unchecked(&self.idempotents[t]);
                    ProjectiveData { subspace, basis, actions, generator }
                })
                .collect()
        })[t]
    }

    /// `Λe_t` as a subspace of `Λ`.
    pub fn projective_subspace(&self, t: usize) -> &Subspace {
        &self.projective(t).subspace
    }

    /// `e_s Λ e_t` as a subspace of `Λ`.
    pub fn corner(&self, s: usize, t: usize) -> Subspace {
        self.lmul_element(&self.idempotents[s]).mul(&self.rmul_element(&self.idempotents[t])).image()
    }

    /// A structure-constants description of this exact algebra, usable when
    /// the original spec cannot describe it (for example an opposite).
    pub fn structure_spec(&self) -> AlgebraSpec {
        let n = self.dim;
        let to_i = |v: &[u32]| v.iter().map(|&x| x as i64).collect::<Vec<i64>>();
        AlgebraSpec::StructureConstants(spec::StructureConstantsSpec {
            kind: "structure_constants".into(),
            field: spec::FieldSpec { p: self.p as u64 },
            dim: n,
            table: (0..n).map(|i| (0..n).map(|j| to_i(self.product(i, j))).collect()).collect(),
            unit: to_i(&self.unit),
            radical_basis: self.radical.basis_vectors().iter().map(|v| to_i(v)).collect(),
            idempotents: self.idempotents.iter().map(|v| to_i(v)).collect(),
        })
    }
}
